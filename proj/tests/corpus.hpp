#pragma once

#include <string>
#include <vector>

#include "hyperrings/constructions.hpp"
#include "hyperrings/worked_example.hpp"

namespace hyperrings::testing {

struct Fixture {
    std::string name;
    HyperringTable table;
};

inline Mask mask_of(const HyperringTable& t,
                    std::initializer_list<const char*> labels) {
    Mask m = 0;
    for (const char* lbl : labels) {
        auto idx = t.index_of(lbl);
        if (!idx) throw std::runtime_error(std::string("no label ") + lbl);
        m |= bits::unit(*idx);
    }
    return m;
}

/// The fixture corpus: the worked example, small rings, products, orbit
/// hyperrings, quotients, and products involving genuine hyperfields.
/// Everything validates; carriers run from 2 to 10.
inline const std::vector<Fixture>& corpus() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        const HyperringTable r8 = examples::r8();
        out.push_back({"R8", r8});
        for (int n = 2; n <= 10; ++n)
            out.push_back({"Z" + std::to_string(n), from_zmod(n)});
        out.push_back({"F2xF2", product(from_zmod(2), from_zmod(2))});
        out.push_back({"F2xZ3", product(from_zmod(2), from_zmod(3))});
        out.push_back({"Z2xZ4", product(from_zmod(2), from_zmod(4))});
        out.push_back({"F2xZ5", product(from_zmod(2), from_zmod(5))});

        {
            const HyperringTable z6 = from_zmod(6);
            out.push_back(
                {"Z6/{1,5}",
                 ring_mod_subgroup(z6, mask_of(z6, {"1", "5"})).table});
        }
        {
            const HyperringTable z5 = from_zmod(5);
            out.push_back(
                {"Z5/units",
                 ring_mod_subgroup(z5, mask_of(z5, {"1", "2", "3", "4"}))
                     .table});
        }
        {
            const HyperringTable z7 = from_zmod(7);
            out.push_back(
                {"Z7/{1,2,4}",
                 ring_mod_subgroup(z7, mask_of(z7, {"1", "2", "4"})).table});
        }
        {
            const HyperringTable z8 = from_zmod(8);
            out.push_back(
                {"Z8/{1,3}",
                 ring_mod_subgroup(z8, mask_of(z8, {"1", "3"})).table});
        }
        {
            const HyperringTable z9 = from_zmod(9);
            out.push_back(
                {"Z9/{1,8}",
                 ring_mod_subgroup(z9, mask_of(z9, {"1", "8"})).table});
        }

        out.push_back({"R8/{0,c}",
                       quotient(r8, Hyperideal{&r8, mask_of(r8, {"0", "c"})})
                           .table});
        out.push_back(
            {"R8/{0,d}",
             quotient(r8, Hyperideal{&r8, mask_of(r8, {"0", "d"})}).table});
        out.push_back(
            {"R8/{0,c,a,d}",
             quotient(r8, Hyperideal{&r8, mask_of(r8, {"0", "c", "a", "d"})})
                 .table});
        out.push_back(
            {"R8/{0,b,d,f}",
             quotient(r8, Hyperideal{&r8, mask_of(r8, {"0", "b", "d", "f"})})
                 .table});

        {
            const HyperringTable z5 = from_zmod(5);
            const HyperringTable k =
                ring_mod_subgroup(z5, mask_of(z5, {"1", "2", "3", "4"})).table;
            out.push_back({"KxZ3", product(k, from_zmod(3))});
            out.push_back({"KxK", product(k, k)});
        }
        return out;
    }();
    return fixtures;
}

}  // namespace hyperrings::testing
