#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperrings/spectrum.hpp"

namespace hyperrings::io {

struct load_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A named table: the on-disk interchange unit (.hr.json).
struct Document {
    std::string name;
    HyperringTable table;
};

namespace detail {

using json = nlohmann::json;

inline const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw load_error(std::string("missing field '") + key + "'");
    return *it;
}

inline int label_index(const HyperringTable& t, const json& j,
                       const std::string& where) {
    if (!j.is_string())
        throw load_error(where + ": expected an element label string");
    auto idx = t.index_of(j.get<std::string>());
    if (!idx)
        throw load_error(where + ": unknown element '" +
                         j.get<std::string>() + "'");
    return *idx;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
    using detail::field;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw load_error(std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) throw load_error("document is not a JSON object");

    Document doc;
    const auto& name = field(j, "name");
    if (!name.is_string()) throw load_error("'name' must be a string");
    doc.name = name.get<std::string>();

    const auto& elements = field(j, "elements");
    if (!elements.is_array() || elements.empty())
        throw load_error("'elements' must be a nonempty array");
    HyperringTable& t = doc.table;
    for (const auto& e : elements) {
        if (!e.is_string())
            throw load_error("'elements' entries must be strings");
        t.labels.push_back(e.get<std::string>());
    }
    const int n = t.size();
    if (n > max_carrier)
        throw load_error("carrier size " + std::to_string(n) +
                         " exceeds format limit " +
                         std::to_string(max_carrier));
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (t.labels[i] == t.labels[k])
                throw load_error("duplicate element '" + t.labels[i] + "'");

    t.zero = detail::label_index(t, field(j, "zero"), "zero");
    t.one = detail::label_index(t, field(j, "one"), "one");

    const auto& add = field(j, "add");
    if (!add.is_array() || add.size() != static_cast<std::size_t>(n))
        throw load_error("'add' must be an array of " + std::to_string(n) +
                         " rows");
    t.add_cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        const auto& row = add[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw load_error("add[" + std::to_string(r) + "] must have " +
                             std::to_string(n) + " cells");
        for (int c = 0; c < n; ++c) {
            const std::string where =
                "add[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            const auto& cell = row[c];
            if (!cell.is_array())
                throw load_error(where + ": expected an array of labels");
            if (cell.empty())
                throw load_error(where + ": empty add cell");
            Mask m = 0;
            for (const auto& lbl : cell)
                m |= bits::unit(detail::label_index(t, lbl, where));
            t.add_cells[static_cast<std::size_t>(r) * n + c] = m;
        }
    }

    const auto& mul = field(j, "mul");
    if (!mul.is_array() || mul.size() != static_cast<std::size_t>(n))
        throw load_error("'mul' must be an array of " + std::to_string(n) +
                         " rows");
    t.mul_cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        const auto& row = mul[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw load_error("mul[" + std::to_string(r) + "] must have " +
                             std::to_string(n) + " cells");
        for (int c = 0; c < n; ++c) {
            const std::string where =
                "mul[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (row[c].is_array())
                throw load_error(where +
                                 ": multiplication must be single-valued "
                                 "(set-valued products are not supported)");
            t.mul_cells[static_cast<std::size_t>(r) * n + c] =
                detail::label_index(t, row[c], where);
        }
    }

    check_structure(t);
    return doc;
}

inline Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw load_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

/// Canonical rendering: fixed key order, add cells listed in element-index
/// order, two-space indentation, trailing newline. Loading the output
/// reproduces the table exactly.
inline std::string emit(const Document& doc) {
    using ordered = nlohmann::ordered_json;
    const HyperringTable& t = doc.table;
    const int n = t.size();
    ordered j;
    j["name"] = doc.name;
    j["elements"] = t.labels;
    j["zero"] = t.label(t.zero);
    j["one"] = t.label(t.one);
    ordered add = ordered::array();
    for (int r = 0; r < n; ++r) {
        ordered row = ordered::array();
        for (int c = 0; c < n; ++c) {
            ordered cell = ordered::array();
            for (int x : bits::of(t.add(r, c))) cell.push_back(t.label(x));
            row.push_back(std::move(cell));
        }
        add.push_back(std::move(row));
    }
    j["add"] = std::move(add);
    ordered mul = ordered::array();
    for (int r = 0; r < n; ++r) {
        ordered row = ordered::array();
        for (int c = 0; c < n; ++c) row.push_back(t.label(t.mul(r, c)));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    return j.dump(2) + "\n";
}

inline void save(const Document& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw load_error("cannot write '" + path + "'");
    out << emit(doc);
}

/// Hasse diagram of the specialization order: one node per prime, an edge
/// P -> Q exactly when P is strictly inside Q with no prime between.
inline std::string export_dot(const SpectrumSpace& space) {
    const auto& pts = space.points;
    std::ostringstream out;
    out << "digraph spectrum {\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        out << "  p" << i << " [label=\""
            << space.parent->set_label(pts[i].members) << "\"];\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j || pts[i].members == pts[j].members) continue;
            if (!bits::is_subset(pts[i].members, pts[j].members)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k == i || k == j) continue;
                if (bits::is_subset(pts[i].members, pts[k].members) &&
                    bits::is_subset(pts[k].members, pts[j].members) &&
                    pts[k].members != pts[i].members &&
                    pts[k].members != pts[j].members)
                    cover = false;
            }
            if (cover) out << "  p" << i << " -> p" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace hyperrings::io
