#pragma once

#include <optional>
#include <vector>

#include "hyperrings/ideals.hpp"
#include "hyperrings/isomorphism.hpp"
#include "hyperrings/spectrum.hpp"

namespace hyperrings {

/// An equivalence relation on the carrier, as a partition. Blocks are kept
/// in canonical order (ascending minimum element).
struct EquivRelation {
    const HyperringTable* parent = nullptr;
    std::vector<Mask> blocks;
    std::vector<int> class_of;  // element -> block index

    bool same_partition(const EquivRelation& o) const {
        return parent == o.parent && blocks == o.blocks;
    }
    /// Refinement order: every block of this lies inside a block of o.
    bool refines(const EquivRelation& o) const {
        for (Mask b : blocks)
            if (!bits::is_subset(b, o.blocks[o.class_of[bits::lowest(b)]]))
                return false;
        return true;
    }
};

inline EquivRelation partition_from_blocks(const HyperringTable& t,
                                           std::vector<Mask> blocks) {
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0) throw domain_error("partition has an empty block");
        if ((b & seen) != 0) throw domain_error("partition blocks overlap");
        seen |= b;
    }
    if (seen != t.carrier())
        throw domain_error("partition does not cover the carrier");
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return bits::lowest(a) < bits::lowest(b); });
    EquivRelation rel;
    rel.parent = &t;
    rel.blocks = std::move(blocks);
    rel.class_of.assign(static_cast<std::size_t>(t.size()), -1);
    for (std::size_t i = 0; i < rel.blocks.size(); ++i)
        for (int x : bits::of(rel.blocks[i]))
            rel.class_of[x] = static_cast<int>(i);
    return rel;
}

inline EquivRelation partition_from_class_map(const HyperringTable& t,
                                              const std::vector<int>& cls) {
    if (cls.size() != static_cast<std::size_t>(t.size()))
        throw domain_error("class map size does not match the carrier");
    int max_id = -1;
    for (int c : cls) max_id = std::max(max_id, c);
    std::vector<Mask> blocks(static_cast<std::size_t>(max_id) + 1, 0);
    for (int x = 0; x < t.size(); ++x) {
        if (cls[x] < 0) throw domain_error("negative class id");
        blocks[cls[x]] |= bits::unit(x);
    }
    blocks.erase(std::remove(blocks.begin(), blocks.end(), Mask{0}),
                 blocks.end());
    return partition_from_blocks(t, std::move(blocks));
}

/// Strong regularity: for any two blocks, every cross hypersum lands inside
/// a single block, and cross products land inside a single block.
inline bool is_strongly_regular(const HyperringTable& t,
                                const EquivRelation& rel) {
    if (rel.parent != &t) throw domain_error("relation over a different table");
    const std::size_t k = rel.blocks.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            const Mask sum = hypersum(t, rel.blocks[i], rel.blocks[j]);
            if (!bits::is_subset(sum, rel.blocks[rel.class_of[bits::lowest(sum)]]))
                return false;
            Mask prods = 0;
            for (int a : bits::of(rel.blocks[i]))
                for (int b : bits::of(rel.blocks[j]))
                    prods |= bits::unit(t.mul(a, b));
            if (!bits::is_subset(prods,
                                 rel.blocks[rel.class_of[bits::lowest(prods)]]))
                return false;
        }
    }
    return true;
}

/// A strongly regular relation together with its kernel, the class of zero
/// (always a normal hyperideal).
struct StronglyRegularRelation {
    EquivRelation relation;
    Hyperideal kernel;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// The fundamental relation: the least strongly regular relation. Because
/// multiplication is single-valued, every finite sum of products is a
/// hypersum of an element tuple, so the reachable sum sets are exactly the
/// subsets obtained from singletons by repeatedly adding one more element.
/// Elements co-occurring in a reachable set are related; the union-find
/// closure makes the relation transitive.
inline StronglyRegularRelation gamma_star(const HyperringTable& t,
                                          int cap = default_cap) {
    const int n = t.size();
    if (n > cap)
        throw resource_error("carrier size " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap));
    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<Mask> frontier;
    detail::UnionFind uf(n);
    for (int x = 0; x < n; ++x) {
        const Mask s = bits::unit(x);
        seen[s] = 1;
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        const Mask u = frontier.back();
        frontier.pop_back();
        const int head = bits::lowest(u);
        for (int y : bits::of(u)) uf.unite(head, y);
        for (int x = 0; x < n; ++x) {
            const Mask v = hypersum(t, u, bits::unit(x));
            if (!seen[v]) {
                seen[v] = 1;
                frontier.push_back(v);
            }
        }
    }
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) cls[x] = uf.find(x);
    EquivRelation rel = partition_from_class_map(t, cls);

    const Mask kernel = rel.blocks[rel.class_of[t.zero]];
    if (!is_hyperideal(t, kernel) ||
        !detail::normal_by_conjugation(t, kernel))
        throw consistency_error(
            "fundamental relation kernel is not a normal hyperideal");
    if (!is_strongly_regular(t, rel))
        throw consistency_error("fundamental relation is not strongly regular");
    return StronglyRegularRelation{std::move(rel), Hyperideal{&t, kernel}};
}

/// Congruence modulo a normal hyperideal: blocks are the cosets x + I.
/// Rejects ideals that are not normal (x + I - x must stay inside I).
inline StronglyRegularRelation relation_from_ideal(const HyperringTable& t,
                                                   const Hyperideal& ideal) {
    if (ideal.parent != &t)
        throw domain_error("ideal does not belong to this table");
    if (!is_hyperideal(t, ideal.members))
        throw domain_error("member set is not a hyperideal");
    if (!detail::normal_by_conjugation(t, ideal.members))
        throw domain_error(
            "ideal is not normal: x + I - x escapes I for some x "
            "(equivalently, the fundamental relation kernel is not inside I)");
    std::vector<Mask> blocks;
    for (int x = 0; x < t.size(); ++x) {
        const Mask c = hypersum(t, bits::unit(x), ideal.members);
        if (std::find(blocks.begin(), blocks.end(), c) == blocks.end())
            blocks.push_back(c);
    }
    EquivRelation rel = partition_from_blocks(t, std::move(blocks));
    if (!is_strongly_regular(t, rel))
        throw consistency_error(
            "congruence modulo a normal hyperideal is not strongly regular");
    return StronglyRegularRelation{std::move(rel), ideal};
}

/// All strongly regular relations: exactly the congruences modulo hyperideals
/// containing the fundamental relation's kernel, including the total relation
/// (kernel = whole carrier). Ordered by kernel.
inline std::vector<StronglyRegularRelation> enumerate_strongly_regular(
    const HyperringTable& t, int cap = default_cap) {
    const Mask gamma0 = gamma_star(t, cap).kernel.members;
    std::vector<StronglyRegularRelation> out;
    for (const Hyperideal& ideal : enumerate_hyperideals(t, cap))
        if (bits::is_subset(gamma0, ideal.members))
            out.push_back(relation_from_ideal(t, ideal));
    return out;
}

struct RelationProperties {
    bool prime = false;
    bool primitive = false;
    bool maximal = false;
};

inline RelationProperties relation_properties(
    const StronglyRegularRelation& rel, int cap = default_cap) {
    const HyperringTable& t = *rel.kernel.parent;
    const int n = t.size();
    const Mask kernel = rel.kernel.members;
    RelationProperties p;

    p.prime = detail::prime_elementwise(t, kernel);
    // Same thing stated on the relation: (xy,0) related forces (x,0) or
    // (y,0) related, for a proper kernel.
    bool prime_direct = kernel != t.carrier();
    const int zero_block = rel.relation.class_of[t.zero];
    for (int x = 0; x < n && prime_direct; ++x)
        for (int y = 0; y < n && prime_direct; ++y)
            if (rel.relation.class_of[t.mul(x, y)] == zero_block &&
                rel.relation.class_of[x] != zero_block &&
                rel.relation.class_of[y] != zero_block)
                prime_direct = false;
    if (p.prime != prime_direct)
        throw consistency_error(
            "relation primality disagrees with kernel primality");

    p.primitive = true;
    for (int x = 0; x < n && p.primitive; ++x) {
        if (bits::contains(kernel, x)) continue;
        for (int y = 0; y < n && p.primitive; ++y) {
            if (!bits::contains(kernel, t.mul(x, y))) continue;
            bool some_power = false;
            int pw = y;
            for (int k = 1; k <= n; ++k) {
                if (bits::contains(kernel, pw)) {
                    some_power = true;
                    break;
                }
                pw = t.mul(pw, y);
            }
            if (!some_power) p.primitive = false;
        }
    }

    p.maximal = ideal_properties(rel.kernel, cap).maximal;
    return p;
}

/// The quotient by a strongly regular relation: carrier = blocks, block sums
/// are singletons, so the result is a ring. When the kernel is proper, the
/// result is matched against the coset quotient by the kernel and the
/// isomorphism is recorded.
struct RelationQuotient {
    HyperringTable table;
    std::vector<int> class_of;
    std::optional<std::vector<int>> iso_to_coset_quotient;
};

inline RelationQuotient quotient_ring(const StronglyRegularRelation& rel) {
    const HyperringTable& t = *rel.kernel.parent;
    if (!is_strongly_regular(t, rel.relation))
        throw domain_error("relation is not strongly regular");
    const auto& blocks = rel.relation.blocks;
    const auto& cls = rel.relation.class_of;
    const int m = static_cast<int>(blocks.size());

    HyperringTable q;
    for (Mask b : blocks) q.labels.push_back(t.set_label(b));
    q.zero = cls[t.zero];
    q.one = cls[t.one];
    q.add_cells.assign(static_cast<std::size_t>(m) * m, 0);
    q.mul_cells.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const Mask sum = hypersum(t, blocks[i], blocks[j]);
            q.add_cells[static_cast<std::size_t>(i) * m + j] =
                bits::unit(cls[bits::lowest(sum)]);
            q.mul_cells[static_cast<std::size_t>(i) * m + j] =
                cls[t.mul(bits::lowest(blocks[i]), bits::lowest(blocks[j]))];
        }
    }
    if (!validate_axioms(q).valid || !is_ring(q))
        throw consistency_error("quotient by a strongly regular relation "
                                "did not produce a ring");

    RelationQuotient out{std::move(q), cls, std::nullopt};
    if (rel.kernel.proper()) {
        const QuotientResult cosets = quotient(t, rel.kernel);
        out.iso_to_coset_quotient = find_isomorphism(out.table, cosets.table);
        if (!out.iso_to_coset_quotient)
            throw consistency_error(
                "relation quotient is not isomorphic to the coset quotient");
    }
    return out;
}

/// The bijection between primes of the fundamental ring R/gamma* and primes
/// of R containing the kernel gamma*(0). Primes missing the kernel have no
/// counterpart and are reported as excluded.
struct SpecCorrespondence {
    StronglyRegularRelation gamma;
    RelationQuotient fundamental_ring;
    std::vector<Hyperideal> quotient_primes;      // spec of R/gamma*
    std::vector<std::pair<int, int>> matched;     // (index in spec(R), index in quotient_primes)
    std::vector<int> excluded;                    // indices in spec(R)
    bool bijective = false;
};

inline SpecCorrespondence fundamental_spec_correspondence(
    const HyperringTable& t, int cap = default_cap) {
    SpecCorrespondence c{gamma_star(t, cap), {}, {}, {}, {}, false};
    c.fundamental_ring = quotient_ring(c.gamma);
    c.quotient_primes = spec(c.fundamental_ring.table, cap);

    const auto primes = spec(t, cap);
    std::vector<bool> hit(c.quotient_primes.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!bits::is_subset(c.gamma.kernel.members, primes[i].members)) {
            c.excluded.push_back(static_cast<int>(i));
            continue;
        }
        Mask image = 0;
        for (int x : bits::of(primes[i].members))
            image |= bits::unit(c.fundamental_ring.class_of[x]);
        int found = -1;
        for (std::size_t j = 0; j < c.quotient_primes.size(); ++j)
            if (c.quotient_primes[j].members == image)
                found = static_cast<int>(j);
        if (found < 0 || hit[found]) {
            ok = false;
            continue;
        }
        hit[found] = true;
        c.matched.emplace_back(static_cast<int>(i), found);
    }
    for (bool h : hit) ok = ok && h;
    c.bijective = ok;
    return c;
}

/// The topology on prime strongly regular relations: V(rho) = primes
/// containing rho. Builds the closed family from all strongly regular
/// relations, verifies the lattice identities on every pair, and checks that
/// kernel-taking is a homeomorphism onto the subspace V(gamma*(0)) of the
/// prime spectrum.
struct RelationSpectrum {
    std::vector<StronglyRegularRelation> all;  // the full census
    std::vector<int> prime_points;             // indices into `all`
    FiniteTopology topology;                   // over prime_points
    bool lattice_laws_hold = false;
    bool homeomorphic = false;
    std::vector<int> point_to_spec;  // prime point -> index in spec(parent)
};

inline RelationSpectrum relation_spectrum(const HyperringTable& t,
                                          int cap = default_cap) {
    RelationSpectrum rs;
    rs.all = enumerate_strongly_regular(t, cap);
    for (std::size_t i = 0; i < rs.all.size(); ++i)
        if (detail::prime_elementwise(t, rs.all[i].kernel.members))
            rs.prime_points.push_back(static_cast<int>(i));

    auto vanishing = [&](const StronglyRegularRelation& rho) {
        Mask out = 0;
        for (std::size_t k = 0; k < rs.prime_points.size(); ++k) {
            const auto& tau = rs.all[rs.prime_points[k]];
            const bool kernel_le =
                bits::is_subset(rho.kernel.members, tau.kernel.members);
            if (kernel_le != rho.relation.refines(tau.relation))
                throw consistency_error(
                    "kernel inclusion disagrees with relation refinement");
            if (kernel_le) out |= bits::unit(static_cast<int>(k));
        }
        return out;
    };

    rs.topology.points = static_cast<int>(rs.prime_points.size());
    for (const auto& rho : rs.all) rs.topology.closed.push_back(vanishing(rho));
    rs.topology.closed.push_back(0);  // V of nothing: the empty closed set
    std::sort(rs.topology.closed.begin(), rs.topology.closed.end());
    rs.topology.closed.erase(
        std::unique(rs.topology.closed.begin(), rs.topology.closed.end()),
        rs.topology.closed.end());

    rs.lattice_laws_hold = true;
    for (const auto& rho : rs.all) {
        for (const auto& sigma : rs.all) {
            const Hyperideal join =
                combine(rho.kernel, sigma.kernel, CombineMode::sum);
            const Hyperideal meet =
                combine(rho.kernel, sigma.kernel, CombineMode::intersect);
            const Mask v_join = vanishing(relation_from_ideal(t, join));
            const Mask v_meet = vanishing(relation_from_ideal(t, meet));
            if (v_join != (vanishing(rho) & vanishing(sigma)))
                rs.lattice_laws_hold = false;
            if (v_meet != (vanishing(rho) | vanishing(sigma)))
                rs.lattice_laws_hold = false;
        }
    }

    // kernel-taking should identify the points with the primes over the
    // kernel of gamma*, matching closed families on both sides.
    const SpectrumSpace space = build_spectrum(t, cap);
    const Mask gamma0 = gamma_star(t, cap).kernel.members;
    const Mask saturated = vanishing_set(space, gamma0);
    rs.homeomorphic = true;
    rs.point_to_spec.assign(rs.prime_points.size(), -1);
    Mask image = 0;
    for (std::size_t k = 0; k < rs.prime_points.size(); ++k) {
        const int idx =
            space.point_index(rs.all[rs.prime_points[k]].kernel.members);
        rs.point_to_spec[k] = idx;
        if (idx < 0 || !bits::contains(saturated, idx)) rs.homeomorphic = false;
        else image |= bits::unit(idx);
    }
    if (image != saturated) rs.homeomorphic = false;
    if (rs.homeomorphic) {
        // compare closed families through the point identification
        const FiniteTopology sub = subspace(space.topology, saturated);
        const std::vector<int> sat_points = bits::to_indices(saturated);
        std::vector<Mask> mapped;
        for (Mask c : rs.topology.closed) {
            Mask m = 0;
            for (int k : bits::of(c)) {
                const int spec_idx = rs.point_to_spec[k];
                for (std::size_t s = 0; s < sat_points.size(); ++s)
                    if (sat_points[s] == spec_idx)
                        m |= bits::unit(static_cast<int>(s));
            }
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        if (mapped != sub.closed) rs.homeomorphic = false;
    }
    return rs;
}

}  // namespace hyperrings
