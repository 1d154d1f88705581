#pragma once

#include <string>
#include <vector>

#include "hyperrings/core.hpp"

namespace hyperrings {

/// A hyperideal of a parent table: a nonempty element set closed under
/// a - b and under multiplication by arbitrary carrier elements. The parent
/// pointer identifies the table; tables are immutable and must outlive the
/// ideals formed over them.
struct Hyperideal {
    const HyperringTable* parent = nullptr;
    Mask members = 0;

    bool proper() const { return members != parent->carrier(); }
    bool operator==(const Hyperideal& o) const {
        return parent == o.parent && members == o.members;
    }
};

/// Canonical order: by cardinality, then by mask value.
inline bool ideal_less(const Hyperideal& a, const Hyperideal& b) {
    const int ca = bits::count(a.members), cb = bits::count(b.members);
    if (ca != cb) return ca < cb;
    return a.members < b.members;
}

inline void require_same_parent(const Hyperideal& a, const Hyperideal& b) {
    if (a.parent != b.parent)
        throw domain_error("hyperideals belong to different parent tables");
}

/// Closure criterion: S nonempty, a - b inside S for all a, b in S, and
/// r * a in S for every carrier element r and a in S.
inline bool is_hyperideal(const HyperringTable& t, Mask s) {
    if (s == 0 || !bits::is_subset(s, t.carrier())) return false;
    for (int a : bits::of(s)) {
        for (int b : bits::of(s))
            if (!bits::is_subset(t.add(a, negate(t, b)), s)) return false;
        for (int r = 0; r < t.size(); ++r)
            if (!bits::contains(s, t.mul(r, a))) return false;
    }
    return true;
}

/// Least hyperideal containing S: the fixed point of closing S + {0} under
/// a - b and r * a.
inline Hyperideal ideal_generated_by(const HyperringTable& t, Mask s) {
    Mask cur = s | bits::unit(t.zero);
    for (;;) {
        Mask next = cur;
        for (int a : bits::of(cur)) {
            for (int b : bits::of(cur)) next |= t.add(a, negate(t, b));
            for (int r = 0; r < t.size(); ++r)
                next |= bits::unit(t.mul(r, a));
        }
        if (next == cur) break;
        cur = next;
    }
    return Hyperideal{&t, cur};
}

enum class CombineMode { sum, product, intersect };

/// Sum = ideal generated by the hypersum of the two member sets; product =
/// ideal generated by the pairwise products; intersect = set intersection.
inline Hyperideal combine(const Hyperideal& a, const Hyperideal& b,
                          CombineMode mode) {
    require_same_parent(a, b);
    const HyperringTable& t = *a.parent;
    switch (mode) {
        case CombineMode::sum:
            return ideal_generated_by(t, hypersum(t, a.members, b.members));
        case CombineMode::product: {
            Mask prods = 0;
            for (int x : bits::of(a.members))
                for (int y : bits::of(b.members))
                    prods |= bits::unit(t.mul(x, y));
            return ideal_generated_by(t, prods);
        }
        case CombineMode::intersect:
            return Hyperideal{&t, a.members & b.members};
    }
    throw domain_error("unknown combine mode");
}

/// Elements with some power in I. Powers of a carrier element are eventually
/// periodic within n steps, so exponents 1..n suffice.
inline Hyperideal radical(const Hyperideal& ideal) {
    const HyperringTable& t = *ideal.parent;
    const int n = t.size();
    Mask out = 0;
    for (int x = 0; x < n; ++x) {
        int p = x;
        for (int k = 1; k <= n; ++k) {
            if (bits::contains(ideal.members, p)) {
                out |= bits::unit(x);
                break;
            }
            p = t.mul(p, x);
        }
    }
    return Hyperideal{&t, out};
}

inline Hyperideal nilradical(const HyperringTable& t) {
    return radical(Hyperideal{&t, bits::unit(t.zero)});
}

namespace detail {

inline bool prime_elementwise(const HyperringTable& t, Mask members) {
    if (members == t.carrier()) return false;
    for (int a = 0; a < t.size(); ++a)
        for (int b = a; b < t.size(); ++b)
            if (bits::contains(members, t.mul(a, b)) &&
                !bits::contains(members, a) && !bits::contains(members, b))
                return false;
    return true;
}

/// x + I - x subset of I for every x; equivalent to I containing the kernel
/// of the fundamental relation.
inline bool normal_by_conjugation(const HyperringTable& t, Mask members) {
    for (int x = 0; x < t.size(); ++x) {
        Mask shifted = hypersum(t, bits::unit(x), members);
        shifted = hypersum(t, shifted, bits::unit(negate(t, x)));
        if (!bits::is_subset(shifted, members)) return false;
    }
    return true;
}

}  // namespace detail

/// All hyperideals in canonical order. Generated by closing every singleton
/// and saturating under pairwise sums; every ideal is a finite sum of
/// principal ideals, so this reaches all of them.
inline std::vector<Hyperideal> enumerate_hyperideals(const HyperringTable& t,
                                                     int cap = default_cap) {
    const int n = t.size();
    if (n > cap)
        throw resource_error("carrier size " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
    std::vector<Mask> found;
    auto insert = [&found](Mask m) {
        for (Mask f : found)
            if (f == m) return false;
        found.push_back(m);
        return true;
    };
    for (int x = 0; x < n; ++x)
        insert(ideal_generated_by(t, bits::unit(x)).members);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = found.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j) {
                Mask s = ideal_generated_by(t, found[i] | found[j]).members;
                grew |= insert(s);
            }
    }
    std::vector<Hyperideal> out;
    out.reserve(found.size());
    for (Mask m : found) out.push_back(Hyperideal{&t, m});
    std::sort(out.begin(), out.end(), ideal_less);
    return out;
}

/// All prime hyperideals, canonical order.
inline std::vector<Hyperideal> spec(const HyperringTable& t,
                                    int cap = default_cap) {
    std::vector<Hyperideal> out;
    for (const Hyperideal& ideal : enumerate_hyperideals(t, cap))
        if (detail::prime_elementwise(t, ideal.members)) out.push_back(ideal);
    return out;
}

/// All maximal hyperideals, canonical order.
inline std::vector<Hyperideal> mspec(const HyperringTable& t,
                                     int cap = default_cap) {
    const auto all = enumerate_hyperideals(t, cap);
    std::vector<Hyperideal> out;
    for (const Hyperideal& ideal : all) {
        if (!ideal.proper()) continue;
        bool maximal = true;
        for (const Hyperideal& other : all)
            if (other.proper() && other.members != ideal.members &&
                bits::is_subset(ideal.members, other.members))
                maximal = false;
        if (maximal) out.push_back(ideal);
    }
    return out;
}

struct IdealProperties {
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool normal = false;
    bool radical_flag = false;  // I equals its own radical
};

inline IdealProperties ideal_properties(const Hyperideal& ideal,
                                        int cap = default_cap) {
    const HyperringTable& t = *ideal.parent;
    IdealProperties p;
    p.proper = ideal.proper();
    p.prime = detail::prime_elementwise(t, ideal.members);
    p.normal = detail::normal_by_conjugation(t, ideal.members);
    p.radical_flag = radical(ideal).members == ideal.members;
    p.maximal = false;
    if (p.proper) {
        p.maximal = true;
        for (const Hyperideal& other : enumerate_hyperideals(t, cap))
            if (other.proper() && other.members != ideal.members &&
                bits::is_subset(ideal.members, other.members))
                p.maximal = false;
    }
    return p;
}

/// Quotient by a proper hyperideal. Carrier = distinct cosets x + I; the
/// coset hyperoperations are computed from full member sets and checked for
/// representative independence, and the partition property of cosets is
/// asserted rather than assumed.
struct QuotientResult {
    HyperringTable table;
    std::vector<int> class_of;  // parent element -> coset index
    std::vector<Mask> cosets;   // coset index -> parent element set
};

inline QuotientResult quotient(const HyperringTable& t,
                               const Hyperideal& ideal) {
    if (ideal.parent != &t)
        throw domain_error("ideal does not belong to this table");
    if (!ideal.proper())
        throw domain_error("cannot form the quotient by the whole carrier");
    const int n = t.size();

    std::vector<Mask> cosets;
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        const Mask c = hypersum(t, bits::unit(x), ideal.members);
        int idx = -1;
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            if (cosets[i] == c) {
                idx = static_cast<int>(i);
                break;
            }
            if ((cosets[i] & c) != 0)
                throw consistency_error(
                    "cosets do not partition the carrier: " + t.set_label(c) +
                    " overlaps " + t.set_label(cosets[i]));
        }
        if (idx < 0) {
            if (!bits::contains(c, x))
                throw consistency_error("coset of '" + t.label(x) +
                                        "' does not contain it");
            cosets.push_back(c);
            idx = static_cast<int>(cosets.size()) - 1;
        }
        class_of[x] = idx;
    }
    std::sort(cosets.begin(), cosets.end(),
              [](Mask a, Mask b) { return bits::lowest(a) < bits::lowest(b); });
    for (int x = 0; x < n; ++x)
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (bits::contains(cosets[i], x)) class_of[x] = static_cast<int>(i);

    const int m = static_cast<int>(cosets.size());
    HyperringTable q;
    q.labels.reserve(static_cast<std::size_t>(m));
    for (const Mask c : cosets) q.labels.push_back(t.set_label(c));
    q.zero = class_of[t.zero];
    q.one = class_of[t.one];
    q.add_cells.assign(static_cast<std::size_t>(m) * m, 0);
    q.mul_cells.assign(static_cast<std::size_t>(m) * m, 0);

    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Mask sum_cell = 0;
            int prod_cell = -1;
            bool first_rep = true;
            for (int x : bits::of(cosets[i])) {
                for (int y : bits::of(cosets[j])) {
                    Mask cell = 0;
                    for (int z : bits::of(t.add(x, y)))
                        cell |= bits::unit(class_of[z]);
                    const int prod = class_of[t.mul(x, y)];
                    if (first_rep) {
                        sum_cell = cell;
                        prod_cell = prod;
                        first_rep = false;
                    } else if (cell != sum_cell || prod != prod_cell) {
                        throw consistency_error(
                            "coset operation depends on representatives at " +
                            t.set_label(cosets[i]) + ", " +
                            t.set_label(cosets[j]));
                    }
                }
            }
            q.add_cells[static_cast<std::size_t>(i) * m + j] = sum_cell;
            q.mul_cells[static_cast<std::size_t>(i) * m + j] = prod_cell;
        }
    }

    if (!validate_axioms(q).valid)
        throw consistency_error("quotient table failed axiom validation");
    return QuotientResult{std::move(q), std::move(class_of), std::move(cosets)};
}

/// Exactly one maximal hyperideal.
inline bool is_local(const HyperringTable& t, int cap = default_cap) {
    return mspec(t, cap).size() == 1;
}

}  // namespace hyperrings
