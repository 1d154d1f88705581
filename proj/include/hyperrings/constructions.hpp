#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperrings/relations.hpp"

namespace hyperrings {

/// Classical commutative rings with identity, embedded as hyperrings with
/// singleton sums. They serve as oracle bridges and as raw material for the
/// orbit construction.
struct FiniteRingSpec {
    enum class Kind { zmod, product, explicit_tables };
    Kind kind = Kind::zmod;
    int modulus = 0;                      // zmod
    std::vector<FiniteRingSpec> factors;  // product
    HyperringTable tables;                // explicit_tables
};

inline HyperringTable from_zmod(int n) {
    if (n < 1 || n > max_carrier)
        throw domain_error("zmod modulus out of range: " + std::to_string(n));
    HyperringTable t;
    for (int i = 0; i < n; ++i) t.labels.push_back(std::to_string(i));
    t.zero = 0;
    t.one = n == 1 ? 0 : 1;
    t.add_cells.assign(static_cast<std::size_t>(n) * n, 0);
    t.mul_cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            t.add_cells[static_cast<std::size_t>(x) * n + y] =
                bits::unit((x + y) % n);
            t.mul_cells[static_cast<std::size_t>(x) * n + y] = (x * y) % n;
        }
    return t;
}

/// Componentwise product table. Pair (x, y) gets index x * |B| + y.
inline HyperringTable product(const HyperringTable& a,
                              const HyperringTable& b) {
    const int na = a.size(), nb = b.size();
    if (na * nb > max_carrier)
        throw resource_error("product carrier " + std::to_string(na * nb) +
                             " exceeds format limit " +
                             std::to_string(max_carrier));
    const int n = na * nb;
    HyperringTable t;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            t.labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    t.zero = a.zero * nb + b.zero;
    t.one = a.one * nb + b.one;
    t.add_cells.assign(static_cast<std::size_t>(n) * n, 0);
    t.mul_cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2) {
                    const int i = x1 * nb + y1, j = x2 * nb + y2;
                    Mask cell = 0;
                    for (int u : bits::of(a.add(x1, x2)))
                        for (int v : bits::of(b.add(y1, y2)))
                            cell |= bits::unit(u * nb + v);
                    t.add_cells[static_cast<std::size_t>(i) * n + j] = cell;
                    t.mul_cells[static_cast<std::size_t>(i) * n + j] =
                        a.mul(x1, x2) * nb + b.mul(y1, y2);
                }
    return t;
}

inline HyperringTable from_ring(const FiniteRingSpec& spec_in) {
    switch (spec_in.kind) {
        case FiniteRingSpec::Kind::zmod:
            return from_zmod(spec_in.modulus);
        case FiniteRingSpec::Kind::product: {
            if (spec_in.factors.empty())
                throw domain_error("product ring spec with no factors");
            HyperringTable acc = from_ring(spec_in.factors.front());
            for (std::size_t i = 1; i < spec_in.factors.size(); ++i)
                acc = product(acc, from_ring(spec_in.factors[i]));
            return acc;
        }
        case FiniteRingSpec::Kind::explicit_tables: {
            const HyperringTable& t = spec_in.tables;
            if (!validate_axioms(t).valid)
                throw domain_error("explicit ring tables fail the axioms");
            if (!is_ring(t))
                throw domain_error("explicit tables have set-valued sums");
            return t;
        }
    }
    throw domain_error("unknown ring spec kind");
}

/// The orbit construction: collapse a classical ring by a subgroup G of its
/// multiplicative monoid on nonzero elements. Carrier = orbits rG;
/// rG + sG = { tG : t in rG + sG }, rG * sG = rsG.
struct ModSubgroupResult {
    HyperringTable table;
    std::vector<int> class_of;  // ring element -> orbit index
};

inline ModSubgroupResult ring_mod_subgroup(const HyperringTable& ring,
                                           Mask g) {
    if (!validate_axioms(ring).valid || !is_ring(ring))
        throw domain_error("orbit construction needs a valid classical ring");
    const int n = ring.size();
    if (g == 0 || !bits::is_subset(g, ring.carrier()))
        throw domain_error("subgroup must be a nonempty subset of the carrier");
    if (bits::contains(g, ring.zero))
        throw domain_error("subgroup must avoid zero");
    if (!bits::contains(g, ring.one))
        throw domain_error("subgroup must contain one");
    for (int a : bits::of(g)) {
        for (int b : bits::of(g))
            if (!bits::contains(g, ring.mul(a, b)))
                throw domain_error("subgroup is not closed under products: " +
                                   ring.label(a) + " * " + ring.label(b));
        bool has_inverse = false;
        for (int b : bits::of(g))
            if (ring.mul(a, b) == ring.one) has_inverse = true;
        if (!has_inverse)
            throw domain_error("subgroup element '" + ring.label(a) +
                               "' has no inverse inside the subgroup");
    }

    auto orbit = [&](int r) {
        Mask m = 0;
        for (int x : bits::of(g)) m |= bits::unit(ring.mul(r, x));
        return m;
    };
    std::vector<Mask> classes;
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        const Mask c = orbit(r);
        int idx = -1;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (classes[i] == c) {
                idx = static_cast<int>(i);
                break;
            }
            if ((classes[i] & c) != 0)
                throw domain_error("orbits do not partition the ring: " +
                                   ring.set_label(c) + " overlaps " +
                                   ring.set_label(classes[i]));
        }
        if (idx < 0) {
            if (!bits::contains(c, r))
                throw domain_error("orbit of '" + ring.label(r) +
                                   "' does not contain it");
            classes.push_back(c);
            idx = static_cast<int>(classes.size()) - 1;
        }
        class_of[r] = idx;
    }
    std::sort(classes.begin(), classes.end(),
              [](Mask a, Mask b) { return bits::lowest(a) < bits::lowest(b); });
    for (int r = 0; r < n; ++r)
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (bits::contains(classes[i], r)) class_of[r] = static_cast<int>(i);

    const int m = static_cast<int>(classes.size());
    HyperringTable t;
    for (Mask c : classes) t.labels.push_back(ring.set_label(c));
    t.zero = class_of[ring.zero];
    t.one = class_of[ring.one];
    t.add_cells.assign(static_cast<std::size_t>(m) * m, 0);
    t.mul_cells.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Mask cell = 0;
            int prod = -1;
            for (int x : bits::of(classes[i])) {
                for (int y : bits::of(classes[j])) {
                    cell |= bits::unit(class_of[bits::lowest(ring.add(x, y))]);
                    const int p = class_of[ring.mul(x, y)];
                    if (prod >= 0 && prod != p)
                        throw domain_error(
                            "orbit products are not single classes at " +
                            ring.set_label(classes[i]) + " * " +
                            ring.set_label(classes[j]));
                    prod = p;
                }
            }
            t.add_cells[static_cast<std::size_t>(i) * m + j] = cell;
            t.mul_cells[static_cast<std::size_t>(i) * m + j] = prod;
        }
    }
    if (!validate_axioms(t).valid)
        throw consistency_error("orbit construction produced an invalid table");
    return ModSubgroupResult{std::move(t), std::move(class_of)};
}

/// A structure map f with f(a+b) = f(a)+f(b) as set equality, f(ab) =
/// f(a)f(b), f(0) = 0, f(1) = 1. Source and target must outlive the map.
struct GoodHomomorphism {
    const HyperringTable* source = nullptr;
    const HyperringTable* target = nullptr;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

/// Validates the defining equations and rejects with the violating pair.
inline GoodHomomorphism make_good_homomorphism(const HyperringTable& source,
                                               const HyperringTable& target,
                                               std::vector<int> map) {
    const int n = source.size();
    if (map.size() != static_cast<std::size_t>(n))
        throw domain_error("map size does not match the source carrier");
    for (int x = 0; x < n; ++x)
        if (map[x] < 0 || map[x] >= target.size())
            throw domain_error("map image out of range at '" +
                               source.label(x) + "'");
    if (map[source.zero] != target.zero)
        throw domain_error("map does not send zero to zero");
    if (map[source.one] != target.one)
        throw domain_error("map does not send one to one");
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            Mask image = 0;
            for (int z : bits::of(source.add(x, y)))
                image |= bits::unit(map[z]);
            if (image != target.add(map[x], map[y]))
                throw domain_error("f(a+b) != f(a)+f(b) at a='" +
                                   source.label(x) + "', b='" +
                                   source.label(y) + "'");
            if (map[source.mul(x, y)] != target.mul(map[x], map[y]))
                throw domain_error("f(ab) != f(a)f(b) at a='" +
                                   source.label(x) + "', b='" +
                                   source.label(y) + "'");
        }
    }
    return GoodHomomorphism{&source, &target, std::move(map)};
}

inline GoodHomomorphism identity_homomorphism(const HyperringTable& t) {
    std::vector<int> map(static_cast<std::size_t>(t.size()));
    for (int i = 0; i < t.size(); ++i) map[i] = i;
    return GoodHomomorphism{&t, &t, std::move(map)};
}

/// g after f.
inline GoodHomomorphism compose(const GoodHomomorphism& f,
                                const GoodHomomorphism& g) {
    if (f.target != g.source)
        throw domain_error("homomorphisms do not compose");
    std::vector<int> map(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
    return GoodHomomorphism{f.source, g.target, std::move(map)};
}

inline Hyperideal kernel_of(const GoodHomomorphism& f) {
    Mask m = 0;
    for (int x = 0; x < f.source->size(); ++x)
        if (f.map[x] == f.target->zero) m |= bits::unit(x);
    if (!is_hyperideal(*f.source, m))
        throw consistency_error("kernel of a good homomorphism is not a "
                                "hyperideal");
    return Hyperideal{f.source, m};
}

/// The continuous map on spectra induced by f, sending a prime of the target
/// to its preimage, together with the standard identities it satisfies:
/// preimages of vanishing sets are vanishing sets of extensions, preimages of
/// basic opens are basic opens of images, closures of images of vanishing
/// sets are vanishing sets of contractions, and the image is dense exactly
/// when the kernel is nilpotent.
struct SpecMap {
    GoodHomomorphism hom;
    std::vector<int> point_map;  // index into spec(source) per spec(target) point
    bool preimage_vanishing = false;
    bool preimage_basic_open = false;
    bool image_closure = false;
    bool dense_iff_nil_kernel = false;
};

inline SpecMap induced_spec_map(const GoodHomomorphism& f,
                                int cap = default_cap) {
    const HyperringTable& src = *f.source;
    const HyperringTable& tgt = *f.target;
    const SpectrumSpace src_space = build_spectrum(src, cap);
    const SpectrumSpace tgt_space = build_spectrum(tgt, cap);

    SpecMap out{f, {}, false, false, false, false};
    for (const Hyperideal& p : tgt_space.points) {
        Mask pre = 0;
        for (int x = 0; x < src.size(); ++x)
            if (bits::contains(p.members, f.map[x])) pre |= bits::unit(x);
        const int idx = src_space.point_index(pre);
        if (idx < 0)
            throw consistency_error(
                "preimage of a prime hyperideal is not prime");
        out.point_map.push_back(idx);
    }

    const auto src_ideals = enumerate_hyperideals(src, cap);
    const auto tgt_ideals = enumerate_hyperideals(tgt, cap);

    out.preimage_vanishing = true;
    for (const Hyperideal& ideal : src_ideals) {
        Mask extension_gen = 0;
        for (int x : bits::of(ideal.members))
            extension_gen |= bits::unit(f.map[x]);
        const Mask rhs = vanishing_set(
            tgt_space, ideal_generated_by(tgt, extension_gen).members);
        Mask lhs = 0;
        for (std::size_t i = 0; i < tgt_space.points.size(); ++i)
            if (bits::is_subset(ideal.members,
                                src_space.points[out.point_map[i]].members))
                lhs |= bits::unit(static_cast<int>(i));
        if (lhs != rhs) out.preimage_vanishing = false;
    }

    out.preimage_basic_open = true;
    for (int x = 0; x < src.size(); ++x) {
        Mask lhs = 0;
        for (std::size_t i = 0; i < tgt_space.points.size(); ++i)
            if (bits::contains(basic_open(src_space, x),
                               out.point_map[i]))
                lhs |= bits::unit(static_cast<int>(i));
        if (lhs != basic_open(tgt_space, f.map[x]))
            out.preimage_basic_open = false;
    }

    auto image_of_points = [&](Mask tgt_pts) {
        Mask out_pts = 0;
        for (int i : bits::of(tgt_pts)) out_pts |= bits::unit(out.point_map[i]);
        return out_pts;
    };

    out.image_closure = true;
    for (const Hyperideal& ideal : tgt_ideals) {
        const Mask image =
            image_of_points(vanishing_set(tgt_space, ideal.members));
        Mask contraction = 0;
        for (int x = 0; x < src.size(); ++x)
            if (bits::contains(ideal.members, f.map[x]))
                contraction |= bits::unit(x);
        if (closure_of(src_space, image) != vanishing_set(src_space, contraction))
            out.image_closure = false;
    }

    const Mask whole_image = image_of_points(tgt_space.topology.everything());
    const bool dense = closure_of(src_space, whole_image) ==
                       src_space.topology.everything();
    const bool nil_kernel = bits::is_subset(kernel_of(f).members,
                                            nilradical(src).members);
    out.dense_iff_nil_kernel = (dense == nil_kernel);
    return out;
}

/// Commutation of the square built from the fundamental-relation quotients:
/// projecting a saturated prime and then pulling back along the quotient of
/// f agrees with pulling back along f and then projecting.
inline bool gamma_square_commutes(const GoodHomomorphism& f,
                                  int cap = default_cap) {
    const HyperringTable& src = *f.source;
    const HyperringTable& tgt = *f.target;
    const StronglyRegularRelation gsrc = gamma_star(src, cap);
    const StronglyRegularRelation gtgt = gamma_star(tgt, cap);
    const RelationQuotient qsrc = quotient_ring(gsrc);
    const RelationQuotient qtgt = quotient_ring(gtgt);

    std::vector<int> star(qsrc.table.size(), -1);
    for (int x = 0; x < src.size(); ++x) {
        const int block = qsrc.class_of[x];
        const int image = qtgt.class_of[f.map[x]];
        if (star[block] >= 0 && star[block] != image)
            throw consistency_error(
                "fundamental classes are not respected by the homomorphism");
        star[block] = image;
    }
    const GoodHomomorphism fstar =
        make_good_homomorphism(qsrc.table, qtgt.table, star);

    bool ok = true;
    for (const Hyperideal& p : spec(tgt, cap)) {
        if (!bits::is_subset(gtgt.kernel.members, p.members)) continue;
        Mask pre = 0;
        for (int x = 0; x < src.size(); ++x)
            if (bits::contains(p.members, f.map[x])) pre |= bits::unit(x);
        Mask lhs = 0;  // project f^{-1}(P) to the fundamental ring of src
        for (int x : bits::of(pre)) lhs |= bits::unit(qsrc.class_of[x]);
        Mask p_proj = 0;
        for (int y : bits::of(p.members)) p_proj |= bits::unit(qtgt.class_of[y]);
        Mask rhs = 0;  // pull the projected prime back along fstar
        for (int q = 0; q < qsrc.table.size(); ++q)
            if (bits::contains(p_proj, fstar.map[q])) rhs |= bits::unit(q);
        if (lhs != rhs) ok = false;
    }
    return ok;
}

struct FunctorReport {
    bool composition_law = false;
    bool identity_law = false;
    bool square_commutes_first = false;
    bool square_commutes_second = false;
};

inline FunctorReport functor_checks(const GoodHomomorphism& f,
                                    const GoodHomomorphism& g,
                                    int cap = default_cap) {
    if (f.target != g.source)
        throw domain_error("homomorphisms do not compose");
    FunctorReport r;

    const SpecMap fbar = induced_spec_map(f, cap);
    const SpecMap gbar = induced_spec_map(g, cap);
    const SpecMap gf = induced_spec_map(compose(f, g), cap);
    r.composition_law = true;
    for (std::size_t i = 0; i < gf.point_map.size(); ++i)
        if (gf.point_map[i] != fbar.point_map[gbar.point_map[i]])
            r.composition_law = false;

    const SpecMap idmap = induced_spec_map(identity_homomorphism(*f.source), cap);
    r.identity_law = true;
    for (std::size_t i = 0; i < idmap.point_map.size(); ++i)
        if (idmap.point_map[i] != static_cast<int>(i)) r.identity_law = false;

    r.square_commutes_first = gamma_square_commutes(f, cap);
    r.square_commutes_second = gamma_square_commutes(g, cap);
    return r;
}

/// The simultaneous-congruence map r -> (r + I_1, ..., r + I_k) into the
/// product of quotients, with the standard conclusions: the kernel is the
/// intersection, and for pairwise comaximal ideals the map is onto and the
/// intersection equals the product.
struct CrtReport {
    HyperringTable codomain;               // product of the quotients
    std::vector<int> map;                  // r -> codomain index
    Hyperideal kernel;
    bool pairwise_comaximal = false;
    bool surjective = false;
    bool intersection_equals_product = false;
    std::optional<std::vector<int>> isomorphism;  // present when bijective
};

inline CrtReport crt_check(const HyperringTable& t,
                           const std::vector<Hyperideal>& ideals,
                           int cap = default_cap) {
    if (ideals.empty()) throw domain_error("no ideals given");
    for (const Hyperideal& ideal : ideals) {
        if (ideal.parent != &t)
            throw domain_error("ideal does not belong to this table");
        if (!ideal.proper())
            throw domain_error("quotient by the whole carrier is not allowed");
    }
    std::vector<QuotientResult> quotients;
    quotients.reserve(ideals.size());
    for (const Hyperideal& ideal : ideals) quotients.push_back(quotient(t, ideal));

    HyperringTable codomain = quotients.front().table;
    for (std::size_t i = 1; i < quotients.size(); ++i)
        codomain = product(codomain, quotients[i].table);

    const int n = t.size();
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        int idx = quotients.front().class_of[r];
        for (std::size_t i = 1; i < quotients.size(); ++i)
            idx = idx * quotients[i].table.size() + quotients[i].class_of[r];
        map[r] = idx;
    }
    Mask inter = t.carrier();
    for (const Hyperideal& ideal : ideals) inter &= ideal.members;
    CrtReport report{std::move(codomain), map, Hyperideal{&t, inter},
                     false,    false,     false, std::nullopt};
    const GoodHomomorphism hom =
        make_good_homomorphism(t, report.codomain, std::move(map));
    if (kernel_of(hom).members != inter)
        throw consistency_error("kernel differs from the intersection");

    report.pairwise_comaximal = true;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j)
            if (combine(ideals[i], ideals[j], CombineMode::sum).members !=
                t.carrier())
                report.pairwise_comaximal = false;

    // image as a set of codomain indices; codomain size <= 64 is enforced by
    // the product constructor
    Mask image = 0;
    for (int r = 0; r < n; ++r) image |= bits::unit(report.map[r]);
    report.surjective = bits::count(image) == report.codomain.size();

    Hyperideal prod = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i)
        prod = combine(prod, ideals[i], CombineMode::product);
    report.intersection_equals_product = (prod.members == inter);

    if (report.surjective && inter == bits::unit(t.zero) &&
        t.size() == report.codomain.size())
        report.isomorphism = report.map;
    (void)cap;
    return report;
}

/// For a disconnected spectrum, a pair of orthogonal nontrivial idempotents
/// whose principal ideals decompose the hyperring as a product matching the
/// two closed pieces. Returns nullopt when the spectrum is connected.
struct DisconnectionWitness {
    int idempotent_first = -1;
    int idempotent_second = -1;
    Hyperideal first;
    Hyperideal second;
    CrtReport crt;
    Mask piece_first = 0;   // V(first) as spectrum points
    Mask piece_second = 0;  // V(second)
    bool pieces_match_factors = false;
};

inline std::optional<DisconnectionWitness> disconnection_witness(
    const HyperringTable& t, int cap = default_cap) {
    const SpectrumSpace space = build_spectrum(t, cap);
    if (connected_in(space.topology, space.topology.everything()))
        return std::nullopt;
    const StructureClass cls = classify(t);
    const Mask trivial = bits::unit(t.zero) | bits::unit(t.one);
    for (int e1 : bits::of(cls.idempotents & ~trivial)) {
        for (int e2 : bits::of(cls.idempotents & ~trivial)) {
            if (e1 == e2) continue;
            if (t.mul(e1, e2) != t.zero) continue;
            if (!bits::contains(t.add(e1, e2), t.one)) continue;
            DisconnectionWitness w;
            w.idempotent_first = e1;
            w.idempotent_second = e2;
            w.first = ideal_generated_by(t, bits::unit(e1));
            w.second = ideal_generated_by(t, bits::unit(e2));
            if (!w.first.proper() || !w.second.proper()) continue;
            w.crt = crt_check(t, {w.first, w.second}, cap);
            if (!w.crt.isomorphism) continue;
            w.piece_first = vanishing_set(space, w.first.members);
            w.piece_second = vanishing_set(space, w.second.members);
            const bool cover =
                (w.piece_first | w.piece_second) == space.topology.everything() &&
                (w.piece_first & w.piece_second) == 0;
            const std::size_t spec_first =
                spec(quotient(t, w.first).table, cap).size();
            const std::size_t spec_second =
                spec(quotient(t, w.second).table, cap).size();
            w.pieces_match_factors =
                cover &&
                spec_first == static_cast<std::size_t>(bits::count(w.piece_first)) &&
                spec_second == static_cast<std::size_t>(bits::count(w.piece_second));
            if (w.pieces_match_factors) return w;
        }
    }
    return std::nullopt;
}

}  // namespace hyperrings
