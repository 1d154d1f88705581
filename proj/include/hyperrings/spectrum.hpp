#pragma once

#include <vector>

#include "hyperrings/ideals.hpp"

namespace hyperrings {

/// An explicit finite topology: points 0..points-1, closed sets as masks
/// over point indices. The family is expected to be the complete lattice of
/// closed sets (it is, when materialized from all vanishing sets).
struct FiniteTopology {
    int points = 0;
    std::vector<Mask> closed;  // deduplicated, sorted by mask value

    Mask everything() const { return bits::full(points); }
    bool is_closed(Mask s) const {
        for (Mask c : closed)
            if (c == s) return true;
        return false;
    }
    bool is_open(Mask s) const { return is_closed(everything() & ~s); }
};

/// Smallest closed superset.
inline Mask closure_in(const FiniteTopology& topo, Mask pts) {
    Mask best = topo.everything();
    for (Mask c : topo.closed)
        if (bits::is_subset(pts, c) && bits::count(c) < bits::count(best))
            best = c;
    return best;
}

inline bool is_t0(const FiniteTopology& topo) {
    for (int p = 0; p < topo.points; ++p)
        for (int q = p + 1; q < topo.points; ++q)
            if (closure_in(topo, bits::unit(p)) ==
                closure_in(topo, bits::unit(q)))
                return false;
    return true;
}

inline bool is_t1(const FiniteTopology& topo) {
    for (int p = 0; p < topo.points; ++p)
        if (!topo.is_closed(bits::unit(p))) return false;
    return true;
}

inline bool is_t2(const FiniteTopology& topo) {
    for (int p = 0; p < topo.points; ++p) {
        for (int q = p + 1; q < topo.points; ++q) {
            bool separated = false;
            for (Mask c1 : topo.closed) {
                const Mask u = topo.everything() & ~c1;
                if (!bits::contains(u, p)) continue;
                for (Mask c2 : topo.closed) {
                    const Mask v = topo.everything() & ~c2;
                    if (bits::contains(v, q) && (u & v) == 0) separated = true;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

/// Nonempty, and any two nonempty open subsets meet.
inline bool irreducible_in(const FiniteTopology& topo, Mask subspace) {
    if (subspace == 0) return false;
    for (Mask c1 : topo.closed) {
        const Mask u = subspace & ~c1;
        if (u == 0) continue;
        for (Mask c2 : topo.closed) {
            const Mask v = subspace & ~c2;
            if (v != 0 && (u & v) == 0) return false;
        }
    }
    return true;
}

/// No decomposition into two disjoint nonempty closed subsets. The empty
/// space counts as connected.
inline bool connected_in(const FiniteTopology& topo, Mask subspace) {
    for (Mask c1 : topo.closed) {
        const Mask a = c1 & subspace;
        if (a == 0 || a == subspace) continue;
        for (Mask c2 : topo.closed) {
            const Mask b = c2 & subspace;
            if (b != 0 && (a & b) == 0 && (a | b) == subspace) return false;
        }
    }
    return true;
}

/// Subspace topology on the points selected by `pts`, reindexed to
/// 0..count-1 preserving point order.
inline FiniteTopology subspace(const FiniteTopology& topo, Mask pts) {
    std::vector<int> sel = bits::to_indices(pts);
    FiniteTopology out;
    out.points = static_cast<int>(sel.size());
    for (Mask c : topo.closed) {
        Mask r = 0;
        for (std::size_t i = 0; i < sel.size(); ++i)
            if (bits::contains(c, sel[i])) r |= bits::unit(static_cast<int>(i));
        out.closed.push_back(r);
    }
    std::sort(out.closed.begin(), out.closed.end());
    out.closed.erase(std::unique(out.closed.begin(), out.closed.end()),
                     out.closed.end());
    return out;
}

/// Length of the longest strict chain under set inclusion (a chain of k+1
/// sets has length k).
inline int longest_chain(const std::vector<Mask>& sets) {
    const int n = static_cast<int>(sets.size());
    std::vector<int> height(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int i) -> int {
        if (height[i] >= 0) return height[i];
        int best = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && sets[j] != sets[i] &&
                bits::is_subset(sets[j], sets[i]))
                best = std::max(best, self(self, j) + 1);
        return height[i] = best;
    };
    int dim = 0;
    for (int i = 0; i < n; ++i) dim = std::max(dim, rec(rec, i));
    return dim;
}

/// The prime spectrum with its Zariski topology materialized: points are the
/// prime hyperideals in canonical order, closed sets the family of vanishing
/// sets of all hyperideals.
struct SpectrumSpace {
    const HyperringTable* parent = nullptr;
    std::vector<Hyperideal> points;
    FiniteTopology topology;

    int point_index(Mask prime_members) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i].members == prime_members) return static_cast<int>(i);
        return -1;
    }
    /// P <= Q in the specialization order iff P is contained in Q.
    bool specializes(int p, int q) const {
        return bits::is_subset(points[p].members, points[q].members);
    }
};

/// Points of the spectrum containing every element of S.
inline Mask vanishing_set(const SpectrumSpace& space, Mask s) {
    Mask out = 0;
    for (std::size_t i = 0; i < space.points.size(); ++i)
        if (bits::is_subset(s, space.points[i].members))
            out |= bits::unit(static_cast<int>(i));
    return out;
}

inline SpectrumSpace build_spectrum(const HyperringTable& t,
                                    int cap = default_cap) {
    SpectrumSpace space;
    space.parent = &t;
    space.points = spec(t, cap);
    space.topology.points = static_cast<int>(space.points.size());
    for (const Hyperideal& ideal : enumerate_hyperideals(t, cap))
        space.topology.closed.push_back(vanishing_set(space, ideal.members));
    std::sort(space.topology.closed.begin(), space.topology.closed.end());
    space.topology.closed.erase(std::unique(space.topology.closed.begin(),
                                            space.topology.closed.end()),
                                space.topology.closed.end());
    return space;
}

/// Complement of the vanishing set of {x}: the basic open set of x.
inline Mask basic_open(const SpectrumSpace& space, int x) {
    return space.topology.everything() &
           ~vanishing_set(space, bits::unit(x));
}

/// Closure of a point set, computed as the vanishing set of the intersection
/// of its points. The empty set is its own closure.
inline Mask closure_of(const SpectrumSpace& space, Mask pts) {
    if (pts == 0) return 0;
    Mask inter = space.parent->carrier();
    for (int i : bits::of(pts)) inter &= space.points[i].members;
    return vanishing_set(space, inter);
}

struct SeparationFlags {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
};

struct TopologyReport {
    bool irreducible = false;
    bool connected = false;
    std::vector<Mask> components;  // point sets, canonical order
    SeparationFlags separation;
    int dimension = 0;
    bool discrete = false;
};

/// Topological profile. Irreducibility and connectedness are each computed
/// two independent ways (open-set definition vs. nilradical primality /
/// idempotent scan) and must agree; components likewise (maximal irreducible
/// closed subsets vs. vanishing sets of minimal primes).
inline TopologyReport topology_report(const SpectrumSpace& space) {
    const HyperringTable& t = *space.parent;
    const FiniteTopology& topo = space.topology;
    TopologyReport r;

    r.irreducible = irreducible_in(topo, topo.everything());
    const bool nil_prime =
        detail::prime_elementwise(t, nilradical(t).members);
    if (r.irreducible != nil_prime)
        throw consistency_error(
            "irreducibility disagrees with nilradical primality");

    r.connected = connected_in(topo, topo.everything());
    const bool no_idem = !classify(t).has_nontrivial_idempotent;
    if (r.connected != no_idem)
        throw consistency_error(
            "connectedness disagrees with the idempotent scan");

    std::vector<Mask> direct;
    for (Mask c : topo.closed) {
        if (c == 0 || !irreducible_in(topo, c)) continue;
        bool maximal = true;
        for (Mask d : topo.closed)
            if (d != c && bits::is_subset(c, d) && irreducible_in(topo, d))
                maximal = false;
        if (maximal) direct.push_back(c);
    }
    std::sort(direct.begin(), direct.end());

    std::vector<Mask> via_minimal;
    for (std::size_t i = 0; i < space.points.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < space.points.size(); ++j)
            if (j != i && bits::is_subset(space.points[j].members,
                                          space.points[i].members) &&
                space.points[j].members != space.points[i].members)
                minimal = false;
        if (minimal)
            via_minimal.push_back(
                vanishing_set(space, space.points[i].members));
    }
    std::sort(via_minimal.begin(), via_minimal.end());
    via_minimal.erase(std::unique(via_minimal.begin(), via_minimal.end()),
                      via_minimal.end());
    if (direct != via_minimal)
        throw consistency_error(
            "component computations disagree (maximal irreducible closed "
            "sets vs. minimal primes)");
    r.components = std::move(direct);

    r.separation.t0 = is_t0(topo);
    r.separation.t1 = is_t1(topo);
    r.separation.t2 = is_t2(topo);

    std::vector<Mask> point_sets;
    point_sets.reserve(space.points.size());
    for (const Hyperideal& p : space.points) point_sets.push_back(p.members);
    r.dimension = longest_chain(point_sets);

    r.discrete = true;
    for (int p = 0; p < topo.points; ++p)
        if (!topo.is_closed(bits::unit(p)) || !topo.is_open(bits::unit(p)))
            r.discrete = false;
    return r;
}

}  // namespace hyperrings
