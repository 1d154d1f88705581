#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperrings/io.hpp"
#include "hyperrings/relations.hpp"

namespace hyperrings {

/// Everything the `report` command prints for one valid table. All parts are
/// derived in canonical order, so re-running on the same document is
/// byte-identical.
struct AnalysisReport {
    std::string name;
    int size = 0;
    bool trivial_carrier = false;
    StructureClass classification;
    std::vector<Hyperideal> ideals;
    std::vector<IdealProperties> ideal_props;
    std::vector<Hyperideal> primes;
    std::vector<Hyperideal> maximals;
    TopologyReport topology;
    std::vector<Mask> components_elements;  // components as prime sets
    StronglyRegularRelation gamma;
    std::vector<StronglyRegularRelation> strongly_regular;
    std::vector<RelationProperties> relation_props;
    RelationSpectrum relation_space;
};

inline AnalysisReport build_report(const io::Document& doc,
                                   int cap = default_cap) {
    const HyperringTable& t = doc.table;
    AnalysisReport r;
    r.name = doc.name;
    r.size = t.size();
    r.trivial_carrier = t.size() == 1;
    r.classification = classify(t);
    r.ideals = enumerate_hyperideals(t, cap);
    for (const Hyperideal& ideal : r.ideals)
        r.ideal_props.push_back(ideal_properties(ideal, cap));
    r.primes = spec(t, cap);
    r.maximals = mspec(t, cap);
    const SpectrumSpace space = build_spectrum(t, cap);
    r.topology = topology_report(space);
    r.gamma = gamma_star(t, cap);
    r.strongly_regular = enumerate_strongly_regular(t, cap);
    for (const auto& rel : r.strongly_regular)
        r.relation_props.push_back(relation_properties(rel, cap));
    r.relation_space = relation_spectrum(t, cap);
    return r;
}

namespace detail {

inline std::string partition_label(const HyperringTable& t,
                                   const std::vector<Mask>& blocks) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += " ";
        out += t.set_label(blocks[i]);
    }
    return out;
}

inline std::string points_label(const HyperringTable& t,
                                const std::vector<Hyperideal>& points,
                                Mask selected) {
    std::string out;
    bool first = true;
    for (int i : bits::of(selected)) {
        if (!first) out += " ";
        out += t.set_label(points[i].members);
        first = false;
    }
    return out.empty() ? "-" : out;
}

}  // namespace detail

inline std::string render_text(const io::Document& doc,
                               const AnalysisReport& r) {
    const HyperringTable& t = doc.table;
    std::ostringstream out;
    out << "name: " << r.name << "\n";
    out << "carrier: " << r.size << (r.trivial_carrier ? " (trivial)" : "")
        << "\n";
    out << "classification:";
    if (r.classification.hyperfield) out << " hyperfield";
    if (r.classification.hyperdomain) out << " hyperdomain";
    if (is_ring(t)) out << " ring";
    out << "\n";
    out << "idempotents: " << t.set_label(r.classification.idempotents)
        << (r.classification.has_nontrivial_idempotent ? " (nontrivial)"
                                                       : "")
        << "\n";
    out << "hyperideals: " << r.ideals.size() << "\n";
    for (std::size_t i = 0; i < r.ideals.size(); ++i) {
        const auto& p = r.ideal_props[i];
        out << "  " << t.set_label(r.ideals[i].members);
        if (!p.proper) out << " improper";
        if (p.prime) out << " prime";
        if (p.maximal) out << " maximal";
        if (p.normal) out << " normal";
        if (p.radical_flag) out << " radical";
        out << "\n";
    }
    out << "spectrum (" << r.primes.size() << "):";
    for (const auto& p : r.primes) out << " " << t.set_label(p.members);
    out << "\n";
    out << "maximal spectrum (" << r.maximals.size() << "):";
    for (const auto& p : r.maximals) out << " " << t.set_label(p.members);
    out << "\n";
    out << "topology: " << (r.topology.irreducible ? "irreducible"
                                                   : "reducible")
        << ", " << (r.topology.connected ? "connected" : "disconnected")
        << ", dimension " << r.topology.dimension
        << (r.topology.discrete ? ", discrete" : "") << "\n";
    out << "separation: t0=" << (r.topology.separation.t0 ? "yes" : "no")
        << " t1=" << (r.topology.separation.t1 ? "yes" : "no")
        << " t2=" << (r.topology.separation.t2 ? "yes" : "no") << "\n";
    out << "components:";
    for (const Mask c : r.topology.components)
        out << " [" << detail::points_label(t, r.primes, c) << "]";
    out << "\n";
    out << "fundamental relation: "
        << detail::partition_label(t, r.gamma.relation.blocks) << "\n";
    out << "fundamental kernel: " << t.set_label(r.gamma.kernel.members)
        << "\n";
    out << "strongly regular relations: " << r.strongly_regular.size()
        << "\n";
    for (std::size_t i = 0; i < r.strongly_regular.size(); ++i) {
        const auto& rel = r.strongly_regular[i];
        const auto& p = r.relation_props[i];
        out << "  kernel " << t.set_label(rel.kernel.members) << ", "
            << rel.relation.blocks.size() << " classes";
        if (p.prime) out << ", prime";
        if (p.primitive) out << ", primitive";
        if (p.maximal) out << ", maximal";
        out << "\n";
    }
    out << "relation spectrum: " << r.relation_space.prime_points.size()
        << " points, lattice laws "
        << (r.relation_space.lattice_laws_hold ? "hold" : "FAIL")
        << ", homeomorphic to the saturated part of the spectrum: "
        << (r.relation_space.homeomorphic ? "yes" : "NO") << "\n";
    return out.str();
}

inline std::string render_json(const io::Document& doc,
                               const AnalysisReport& r) {
    using ordered = nlohmann::ordered_json;
    const HyperringTable& t = doc.table;
    auto set_labels = [&t](Mask m) {
        ordered arr = ordered::array();
        for (int i : bits::of(m)) arr.push_back(t.label(i));
        return arr;
    };
    ordered j;
    j["name"] = r.name;
    j["carrier"] = r.size;
    j["trivial"] = r.trivial_carrier;
    j["classification"] = {{"hyperfield", r.classification.hyperfield},
                           {"hyperdomain", r.classification.hyperdomain},
                           {"ring", is_ring(t)},
                           {"idempotents",
                            set_labels(r.classification.idempotents)},
                           {"nontrivial_idempotent",
                            r.classification.has_nontrivial_idempotent}};
    ordered ideals = ordered::array();
    for (std::size_t i = 0; i < r.ideals.size(); ++i) {
        const auto& p = r.ideal_props[i];
        ideals.push_back({{"members", set_labels(r.ideals[i].members)},
                          {"proper", p.proper},
                          {"prime", p.prime},
                          {"maximal", p.maximal},
                          {"normal", p.normal},
                          {"radical", p.radical_flag}});
    }
    j["hyperideals"] = std::move(ideals);
    ordered primes = ordered::array();
    for (const auto& p : r.primes) primes.push_back(set_labels(p.members));
    j["spectrum"] = std::move(primes);
    ordered maximals = ordered::array();
    for (const auto& p : r.maximals) maximals.push_back(set_labels(p.members));
    j["maximal_spectrum"] = std::move(maximals);
    ordered comps = ordered::array();
    for (const Mask c : r.topology.components) {
        ordered comp = ordered::array();
        for (int i : bits::of(c))
            comp.push_back(set_labels(r.primes[i].members));
        comps.push_back(std::move(comp));
    }
    j["topology"] = {{"irreducible", r.topology.irreducible},
                     {"connected", r.topology.connected},
                     {"components", std::move(comps)},
                     {"t0", r.topology.separation.t0},
                     {"t1", r.topology.separation.t1},
                     {"t2", r.topology.separation.t2},
                     {"dimension", r.topology.dimension},
                     {"discrete", r.topology.discrete}};
    ordered blocks = ordered::array();
    for (const Mask b : r.gamma.relation.blocks)
        blocks.push_back(set_labels(b));
    j["fundamental_relation"] = {{"classes", std::move(blocks)},
                                 {"kernel",
                                  set_labels(r.gamma.kernel.members)}};
    ordered rels = ordered::array();
    for (std::size_t i = 0; i < r.strongly_regular.size(); ++i) {
        const auto& rel = r.strongly_regular[i];
        const auto& p = r.relation_props[i];
        rels.push_back({{"kernel", set_labels(rel.kernel.members)},
                        {"classes", rel.relation.blocks.size()},
                        {"prime", p.prime},
                        {"primitive", p.primitive},
                        {"maximal", p.maximal}});
    }
    j["strongly_regular"] = std::move(rels);
    j["relation_spectrum"] = {
        {"points", r.relation_space.prime_points.size()},
        {"lattice_laws", r.relation_space.lattice_laws_hold},
        {"homeomorphic", r.relation_space.homeomorphic}};
    return j.dump(2) + "\n";
}

}  // namespace hyperrings
