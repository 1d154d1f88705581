#pragma once

#include <string>
#include <vector>

#include "hyperrings/constructions.hpp"

namespace hyperrings::examples {

/// The eight-element hyperring shipped with the tool. It is small enough to
/// inspect by hand yet exhibits most of the phenomena the library computes:
/// a non-ring hyperaddition, a four-class fundamental relation, two
/// incomparable maximal primes, maximal-but-not-normal ideals, and a
/// nontrivial product decomposition.
inline HyperringTable r8() {
    return table_from_strings(
        {"0", "1", "a", "b", "c", "d", "e", "f"}, "0", "1",
        {
            {"0", "1", "a", "b", "c", "d", "e", "f"},
            {"1", "a,d", "b,e", "c", "1,f", "e", "0,c", "a"},
            {"a", "b,e", "0,c", "1", "a,d", "c", "1,f", "e"},
            {"b", "c", "1", "d", "e", "f", "a", "0"},
            {"c", "1,f", "a,d", "e", "0,c", "a", "b,e", "1"},
            {"d", "e", "c", "f", "a", "0", "1", "b"},
            {"e", "0,c", "1,f", "a", "b,e", "1", "a,d", "c"},
            {"f", "a", "e", "0", "1", "b", "c", "d"},
        },
        {
            {"0", "0", "0", "0", "0", "0", "0", "0"},
            {"0", "1", "a", "b", "c", "d", "e", "f"},
            {"0", "a", "c", "d", "c", "0", "a", "d"},
            {"0", "b", "d", "f", "0", "d", "f", "b"},
            {"0", "c", "c", "0", "c", "0", "c", "0"},
            {"0", "d", "0", "d", "0", "0", "d", "d"},
            {"0", "e", "a", "f", "c", "d", "1", "b"},
            {"0", "f", "d", "b", "0", "d", "b", "f"},
        });
}

struct CheckItem {
    std::string description;
    bool pass = false;
};

namespace detail {

inline Mask mask_of(const HyperringTable& t,
                    std::initializer_list<const char*> labels) {
    Mask m = 0;
    for (const char* lbl : labels) m |= bits::unit(*t.index_of(lbl));
    return m;
}

}  // namespace detail

/// Recomputes every published property of the bundled example and reports
/// each as a pass/fail item. Everything is exact set or structure equality.
inline std::vector<CheckItem> reference_checklist() {
    using detail::mask_of;
    std::vector<CheckItem> items;
    const HyperringTable t = r8();

    items.push_back({"tables validate as a Krasner hyperring",
                     validate_axioms(t).valid});

    const StronglyRegularRelation gamma = gamma_star(t);
    const std::vector<Mask> expected_blocks = {
        mask_of(t, {"0", "c"}), mask_of(t, {"1", "f"}),
        mask_of(t, {"a", "d"}), mask_of(t, {"b", "e"})};
    items.push_back({"fundamental relation classes are "
                     "{0,c} {1,f} {a,d} {b,e}",
                     gamma.relation.blocks == expected_blocks});
    items.push_back({"kernel of the fundamental relation is {0,c}",
                     gamma.kernel.members == mask_of(t, {"0", "c"})});

    const Mask sqrt_kernel = radical(gamma.kernel).members;
    items.push_back({"radical of the kernel is {0,c,a,d}",
                     sqrt_kernel == mask_of(t, {"0", "a", "c", "d"})});

    const auto primes = spec(t);
    const auto maximals = mspec(t);
    const bool spec_ok =
        primes.size() == 2 &&
        primes[0].members == mask_of(t, {"0", "a", "c", "d"}) &&
        primes[1].members == mask_of(t, {"0", "b", "d", "f"});
    items.push_back(
        {"prime spectrum is {0,b,d,f} and {0,c,a,d}", spec_ok});
    bool mspec_ok = maximals.size() == primes.size();
    for (std::size_t i = 0; mspec_ok && i < primes.size(); ++i)
        mspec_ok = maximals[i].members == primes[i].members;
    items.push_back({"every prime is maximal", mspec_ok});

    const RelationQuotient fundamental = quotient_ring(gamma);
    items.push_back({"quotient by the fundamental relation is Z4",
                     isomorphic(fundamental.table, from_zmod(4))});

    const Hyperideal sqrt_ideal{&t, sqrt_kernel};
    items.push_back({"quotient by {0,c,a,d} is Z2",
                     isomorphic(quotient(t, sqrt_ideal).table, from_zmod(2))});

    const Hyperideal small{&t, mask_of(t, {"0", "d"})};
    const IdealProperties small_props = ideal_properties(small);
    items.push_back({"{0,d} is neither prime nor normal",
                     is_hyperideal(t, small.members) && !small_props.prime &&
                         !small_props.normal});

    const Hyperideal m_ideal{&t, mask_of(t, {"0", "b", "d", "f"})};
    const IdealProperties m_props = ideal_properties(m_ideal);
    items.push_back({"{0,b,d,f} is maximal and not normal",
                     m_props.maximal && !m_props.normal});

    const CrtReport crt = crt_check(t, {m_ideal, gamma.kernel});
    items.push_back(
        {"the hyperring splits as (R/{0,b,d,f}) x (R/{0,c})",
         crt.pairwise_comaximal && crt.surjective &&
             crt.kernel.members == bits::unit(t.zero) &&
             crt.intersection_equals_product && crt.isomorphism.has_value()});

    return items;
}

}  // namespace hyperrings::examples
