#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperrings/report.hpp"
#include "hyperrings/worked_example.hpp"

namespace hyperrings::cli {

// Exit codes: 0 success / property holds, 1 validation or analysis found the
// property false, 2 usage, IO or parse errors.

namespace detail {

inline Mask parse_label_set(const HyperringTable& t, const std::string& text) {
    Mask m = 0;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        if (piece.empty()) continue;
        auto idx = t.index_of(piece);
        if (!idx)
            throw io::load_error("unknown element '" + piece + "'");
        m |= bits::unit(*idx);
    }
    if (m == 0) throw io::load_error("empty element list");
    return m;
}

inline int report_invalid(const io::Document& doc, const ValidationReport& v,
                          std::ostream& out) {
    out << "invalid: " << doc.name << "\n";
    for (const Violation& viol : v.violations) {
        out << "violation: " << viol.axiom << " at (";
        for (std::size_t i = 0; i < viol.witness.size(); ++i) {
            if (i) out << ", ";
            out << viol.witness[i];
        }
        out << ")\n";
    }
    return 1;
}

inline std::string flag_line(const char* name, bool value) {
    return std::string(name) + ": " + (value ? "yes" : "no") + "\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"finite commutative Krasner hyperring toolkit"};
    app.name("hyperring");
    app.require_subcommand(1);

    std::string file, format = "text", ideal_spec, ideals_spec, out_path;
    std::string file_a, file_b;
    bool want_dot = false;
    int zmod = 0;
    std::string mod_group;

    auto* c_validate = app.add_subcommand("validate", "check the axioms");
    c_validate->add_option("file", file)->required();

    auto* c_report = app.add_subcommand("report", "full analysis report");
    c_report->add_option("file", file)->required();
    c_report->add_option("--format", format)
        ->check(CLI::IsMember({"json", "text"}));

    auto* c_spectrum =
        app.add_subcommand("spectrum", "prime spectrum and its topology");
    c_spectrum->add_option("file", file)->required();
    c_spectrum->add_flag("--dot", want_dot,
                         "emit the specialization order as DOT");

    auto* c_gamma =
        app.add_subcommand("gamma", "fundamental relation and its kernel");
    c_gamma->add_option("file", file)->required();

    auto* c_relations =
        app.add_subcommand("relations", "strongly regular relation census");
    c_relations->add_option("file", file)->required();

    auto* c_quotient =
        app.add_subcommand("quotient", "quotient by a hyperideal");
    c_quotient->add_option("file", file)->required();
    c_quotient->add_option("--ideal", ideal_spec, "comma-separated labels")
        ->required();

    auto* c_crt = app.add_subcommand(
        "crt", "simultaneous congruences for a list of ideals");
    c_crt->add_option("file", file)->required();
    c_crt->add_option("--ideals", ideals_spec,
                      "semicolon-separated ideals, labels comma-separated")
        ->required();

    auto* c_construct = app.add_subcommand("construct", "build tables");
    c_construct->require_subcommand(1);
    auto* c_ring = c_construct->add_subcommand(
        "ring", "integers mod N, optionally collapsed by a unit subgroup");
    c_ring->add_option("--zmod", zmod)->required();
    c_ring->add_option("--mod-group", mod_group,
                       "comma-separated subgroup elements");
    c_ring->add_option("-o,--output", out_path)->required();
    auto* c_product = c_construct->add_subcommand(
        "product", "componentwise product of two tables");
    c_product->add_option("first", file_a)->required();
    c_product->add_option("second", file_b)->required();
    c_product->add_option("-o,--output", out_path)->required();

    auto* c_example = app.add_subcommand(
        "paper-example", "reproduce the bundled worked example");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*c_example) {
            const auto items = examples::reference_checklist();
            bool all = true;
            for (const auto& item : items) {
                out << (item.pass ? "ok:   " : "FAIL: ") << item.description
                    << "\n";
                all = all && item.pass;
            }
            out << (all ? "all checks passed" : "some checks FAILED") << "\n";
            return all ? 0 : 1;
        }

        if (*c_ring) {
            HyperringTable ring = from_zmod(zmod);
            io::Document doc;
            if (mod_group.empty()) {
                doc = {"Z" + std::to_string(zmod), std::move(ring)};
            } else {
                const Mask g = detail::parse_label_set(ring, mod_group);
                ModSubgroupResult res = ring_mod_subgroup(ring, g);
                doc = {"Z" + std::to_string(zmod) + "/" + ring.set_label(g),
                       std::move(res.table)};
            }
            io::save(doc, out_path);
            out << "wrote " << out_path << " (" << doc.table.size()
                << " elements)\n";
            return 0;
        }
        if (*c_product) {
            const io::Document a = io::load(file_a);
            const io::Document b = io::load(file_b);
            io::Document doc{"(" + a.name + ")x(" + b.name + ")",
                             product(a.table, b.table)};
            io::save(doc, out_path);
            out << "wrote " << out_path << " (" << doc.table.size()
                << " elements)\n";
            return 0;
        }

        const io::Document doc = io::load(file);
        const ValidationReport validation = validate_axioms(doc.table);

        if (*c_validate) {
            if (!validation.valid) return detail::report_invalid(doc, validation, out);
            out << "valid: " << doc.name << " (" << doc.table.size()
                << " elements)"
                << (validation.trivial_carrier ? " [trivial carrier]" : "")
                << "\n";
            return 0;
        }
        if (!validation.valid) return detail::report_invalid(doc, validation, out);
        const HyperringTable& t = doc.table;

        if (*c_report) {
            const AnalysisReport r = build_report(doc);
            out << (format == "json" ? render_json(doc, r)
                                     : render_text(doc, r));
            return 0;
        }
        if (*c_spectrum) {
            const SpectrumSpace space = build_spectrum(t);
            if (want_dot) {
                out << io::export_dot(space);
                return 0;
            }
            out << "spectrum (" << space.points.size() << "):";
            for (const auto& p : space.points)
                out << " " << t.set_label(p.members);
            out << "\n";
            const auto maximals = mspec(t);
            out << "maximal spectrum (" << maximals.size() << "):";
            for (const auto& p : maximals) out << " " << t.set_label(p.members);
            out << "\n";
            const TopologyReport topo = topology_report(space);
            out << "irreducible: " << (topo.irreducible ? "yes" : "no")
                << ", connected: " << (topo.connected ? "yes" : "no")
                << ", dimension: " << topo.dimension << "\n";
            return 0;
        }
        if (*c_gamma) {
            const StronglyRegularRelation gamma = gamma_star(t);
            out << "classes:";
            for (const Mask b : gamma.relation.blocks)
                out << " " << t.set_label(b);
            out << "\n";
            out << "kernel: " << t.set_label(gamma.kernel.members) << "\n";
            const RelationProperties props = relation_properties(gamma);
            out << "prime: " << (props.prime ? "yes" : "no")
                << ", primitive: " << (props.primitive ? "yes" : "no") << "\n";
            const RelationQuotient q = quotient_ring(gamma);
            out << "quotient ring size: " << q.table.size() << "\n";
            return 0;
        }
        if (*c_relations) {
            const auto rels = enumerate_strongly_regular(t);
            out << "strongly regular relations: " << rels.size() << "\n";
            for (const auto& rel : rels) {
                const RelationProperties props = relation_properties(rel);
                out << "  kernel " << t.set_label(rel.kernel.members) << ", "
                    << rel.relation.blocks.size() << " classes";
                if (props.prime) out << ", prime";
                if (props.primitive) out << ", primitive";
                if (props.maximal) out << ", maximal";
                out << "\n";
            }
            const RelationSpectrum rs = relation_spectrum(t);
            out << "relation spectrum: " << rs.prime_points.size()
                << " points\n";
            out << detail::flag_line("lattice laws", rs.lattice_laws_hold);
            out << detail::flag_line("homeomorphic to the saturated spectrum",
                                     rs.homeomorphic);
            return (rs.lattice_laws_hold && rs.homeomorphic) ? 0 : 1;
        }
        if (*c_quotient) {
            const Mask members = detail::parse_label_set(t, ideal_spec);
            if (!is_hyperideal(t, members)) {
                out << t.set_label(members) << " is not a hyperideal\n";
                return 1;
            }
            const QuotientResult q = quotient(t, Hyperideal{&t, members});
            io::Document qdoc{doc.name + "/" + t.set_label(members), q.table};
            out << io::emit(qdoc);
            return 0;
        }
        if (*c_crt) {
            std::vector<Hyperideal> ideals;
            std::istringstream in(ideals_spec);
            std::string piece;
            while (std::getline(in, piece, ';')) {
                const Mask members = detail::parse_label_set(t, piece);
                if (!is_hyperideal(t, members)) {
                    out << t.set_label(members) << " is not a hyperideal\n";
                    return 1;
                }
                ideals.push_back(Hyperideal{&t, members});
            }
            const CrtReport crt = crt_check(t, ideals);
            out << "ideals:";
            for (const auto& ideal : ideals)
                out << " " << t.set_label(ideal.members);
            out << "\n";
            out << detail::flag_line("pairwise comaximal",
                                     crt.pairwise_comaximal);
            out << "kernel: " << t.set_label(crt.kernel.members) << "\n";
            out << detail::flag_line("intersection equals product",
                                     crt.intersection_equals_product);
            out << detail::flag_line("surjective", crt.surjective);
            out << detail::flag_line("isomorphism",
                                     crt.isomorphism.has_value());
            return 0;
        }
    } catch (const io::load_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command executed\n" << app.help();
    return 2;
}

}  // namespace hyperrings::cli
