#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperrings {

/// An element set over a carrier of at most 64 elements, as a membership mask.
/// Bit i is element i.
using Mask = std::uint64_t;

inline constexpr int max_carrier = 64;

/// Cap on carrier size for the subset-closure algorithms (hyperideal
/// enumeration, fundamental relation). They walk up to 2^n subsets.
inline constexpr int default_cap = 16;

struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// An internal invariant that holds for every valid table failed anyway.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace bits {

constexpr Mask unit(int i) { return Mask{1} << i; }

constexpr bool contains(Mask m, int i) { return (m >> i) & Mask{1}; }

constexpr Mask full(int n) {
    return n >= max_carrier ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int count(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// Range over the set bits of a mask, lowest first.
class of {
public:
    class iterator {
    public:
        explicit iterator(Mask m) : m_(m) {}
        int operator*() const { return std::countr_zero(m_); }
        iterator& operator++() {
            m_ &= m_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return m_ != o.m_; }

    private:
        Mask m_;
    };

    explicit of(Mask m) : m_(m) {}
    iterator begin() const { return iterator{m_}; }
    iterator end() const { return iterator{0}; }

private:
    Mask m_;
};

inline std::vector<int> to_indices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count(m)));
    for (int i : of(m)) out.push_back(i);
    return out;
}

}  // namespace bits

/// A finite commutative Krasner hyperring with identity, as tables over
/// elements 0..n-1: set-valued addition and single-valued multiplication.
/// Immutable once built; all operations on it are pure.
struct HyperringTable {
    std::vector<std::string> labels;
    int zero = 0;
    int one = 0;
    std::vector<Mask> add_cells;  // n*n, row-major
    std::vector<int> mul_cells;   // n*n, row-major

    int size() const { return static_cast<int>(labels.size()); }
    Mask carrier() const { return bits::full(size()); }

    Mask add(int x, int y) const {
        return add_cells[static_cast<std::size_t>(x) * labels.size() + y];
    }
    int mul(int x, int y) const {
        return mul_cells[static_cast<std::size_t>(x) * labels.size() + y];
    }

    const std::string& label(int x) const { return labels[x]; }

    /// "{0,c}" style rendering of an element set, members in index order.
    std::string set_label(Mask m) const {
        std::string out = "{";
        bool first = true;
        for (int i : bits::of(m)) {
            if (!first) out += ",";
            out += labels[i];
            first = false;
        }
        out += "}";
        return out;
    }

    std::optional<int> index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels[i] == label) return i;
        return std::nullopt;
    }

    bool operator==(const HyperringTable&) const = default;
};

/// Builds a table from rows of comma-separated label lists, e.g. a cell
/// "a,d" meaning {a, d}. Convenient for hand-written tables whose labels
/// contain no commas.
inline HyperringTable table_from_strings(
    std::vector<std::string> labels, const std::string& zero,
    const std::string& one,
    const std::vector<std::vector<std::string>>& add_rows,
    const std::vector<std::vector<std::string>>& mul_rows) {
    HyperringTable t;
    t.labels = std::move(labels);
    const int n = t.size();
    auto index = [&t](const std::string& lbl) {
        auto idx = t.index_of(lbl);
        if (!idx) throw structural_error("unknown label '" + lbl + "'");
        return *idx;
    };
    t.zero = index(zero);
    t.one = index(one);
    if (add_rows.size() != static_cast<std::size_t>(n) ||
        mul_rows.size() != static_cast<std::size_t>(n))
        throw structural_error("row count does not match the carrier");
    t.add_cells.assign(static_cast<std::size_t>(n) * n, 0);
    t.mul_cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        if (add_rows[r].size() != static_cast<std::size_t>(n) ||
            mul_rows[r].size() != static_cast<std::size_t>(n))
            throw structural_error("ragged row " + std::to_string(r));
        for (int c = 0; c < n; ++c) {
            Mask m = 0;
            std::istringstream cell(add_rows[r][c]);
            std::string piece;
            while (std::getline(cell, piece, ','))
                m |= bits::unit(index(piece));
            t.add_cells[static_cast<std::size_t>(r) * n + c] = m;
            t.mul_cells[static_cast<std::size_t>(r) * n + c] =
                index(mul_rows[r][c]);
        }
    }
    return t;
}

/// Throws structural_error unless the table is well-formed: square arrays,
/// indices in range, nonempty add cells, distinct labels. Axiom checks are
/// validate_axioms' job.
inline void check_structure(const HyperringTable& t) {
    const int n = t.size();
    if (n == 0) throw structural_error("empty carrier");
    if (n > max_carrier)
        throw structural_error("carrier size " + std::to_string(n) +
                               " exceeds format limit " +
                               std::to_string(max_carrier));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.labels[i] == t.labels[j])
                throw structural_error("duplicate label '" + t.labels[i] + "'");
    if (t.zero < 0 || t.zero >= n) throw structural_error("zero out of range");
    if (t.one < 0 || t.one >= n) throw structural_error("one out of range");
    if (t.add_cells.size() != static_cast<std::size_t>(n) * n)
        throw structural_error("add table is not n x n");
    if (t.mul_cells.size() != static_cast<std::size_t>(n) * n)
        throw structural_error("mul table is not n x n");
    const Mask all = t.carrier();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const Mask cell = t.add(x, y);
            if (cell == 0)
                throw structural_error("empty add cell at add[" + t.label(x) +
                                       "][" + t.label(y) + "]");
            if (!bits::is_subset(cell, all))
                throw structural_error("add cell out of range at add[" +
                                       t.label(x) + "][" + t.label(y) + "]");
            const int p = t.mul(x, y);
            if (p < 0 || p >= n)
                throw structural_error("mul entry out of range at mul[" +
                                       t.label(x) + "][" + t.label(y) + "]");
        }
    }
}

/// Union of cellwise sums: A + B = union of add[a][b] over a in A, b in B.
/// Empty input yields empty output.
inline Mask hypersum(const HyperringTable& t, Mask a, Mask b) {
    Mask out = 0;
    for (int x : bits::of(a))
        for (int y : bits::of(b)) out |= t.add(x, y);
    return out;
}

/// The unique x' with 0 in x + x'. Requires a validated table; anything but
/// exactly one candidate means the additive axioms were never checked.
inline int negate(const HyperringTable& t, int x) {
    int found = -1;
    for (int y = 0; y < t.size(); ++y) {
        if (bits::contains(t.add(x, y), t.zero)) {
            if (found >= 0)
                throw domain_error("multiple additive inverses for '" +
                                   t.label(x) + "' (table not validated)");
            found = y;
        }
    }
    if (found < 0)
        throw domain_error("no additive inverse for '" + t.label(x) +
                           "' (table not validated)");
    return found;
}

/// x^k under the multiplication table, k >= 1.
inline int mul_power(const HyperringTable& t, int x, int k) {
    int acc = x;
    for (int i = 1; i < k; ++i) acc = t.mul(acc, x);
    return acc;
}

struct Violation {
    std::string axiom;
    std::vector<std::string> witness;  // element labels
};

struct ValidationReport {
    bool valid = false;
    bool trivial_carrier = false;  // n == 1, accepted but flagged
    std::vector<Violation> violations;
};

namespace detail {

inline Violation make_violation(const HyperringTable& t, std::string axiom,
                                std::initializer_list<int> elems) {
    Violation v;
    v.axiom = std::move(axiom);
    for (int e : elems) v.witness.push_back(t.label(e));
    return v;
}

inline std::optional<int> inverse_if_unique(const HyperringTable& t, int x) {
    int found = -1;
    for (int y = 0; y < t.size(); ++y) {
        if (bits::contains(t.add(x, y), t.zero)) {
            if (found >= 0) return std::nullopt;
            found = y;
        }
    }
    if (found < 0) return std::nullopt;
    return found;
}

}  // namespace detail

/// Full axiom check. Reports every violated axiom with witnesses, ordered
/// additive -> multiplicative -> distributive, rather than stopping at the
/// first failure. Throws structural_error on malformed input.
inline ValidationReport validate_axioms(const HyperringTable& t) {
    check_structure(t);
    const int n = t.size();
    ValidationReport report;
    report.trivial_carrier = (n == 1);
    auto& out = report.violations;

    if (n > 1 && t.zero == t.one)
        out.push_back(detail::make_violation(t, "zero-one-distinct", {t.zero}));

    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (t.add(x, y) != t.add(y, x))
                out.push_back(detail::make_violation(t, "add-commutative", {x, y}));

    for (int x = 0; x < n; ++x)
        if (t.add(t.zero, x) != bits::unit(x))
            out.push_back(detail::make_violation(t, "zero-identity", {x}));

    std::vector<std::optional<int>> inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        inv[x] = detail::inverse_if_unique(t, x);
        if (!inv[x])
            out.push_back(detail::make_violation(t, "unique-inverse", {x}));
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (hypersum(t, t.add(x, y), bits::unit(z)) !=
                    hypersum(t, bits::unit(x), t.add(y, z)))
                    out.push_back(
                        detail::make_violation(t, "add-associative", {x, y, z}));

    // z in x+y  =>  y in -x+z  and  x in z-y.
    for (int x = 0; x < n; ++x) {
        if (!inv[x]) continue;
        for (int y = 0; y < n; ++y) {
            if (!inv[y]) continue;
            for (int z : bits::of(t.add(x, y))) {
                if (!bits::contains(t.add(*inv[x], z), y) ||
                    !bits::contains(t.add(z, *inv[y]), x))
                    out.push_back(
                        detail::make_violation(t, "reversibility", {x, y, z}));
            }
        }
    }

    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (t.mul(x, y) != t.mul(y, x))
                out.push_back(detail::make_violation(t, "mul-commutative", {x, y}));

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)))
                    out.push_back(
                        detail::make_violation(t, "mul-associative", {x, y, z}));

    for (int x = 0; x < n; ++x)
        if (t.mul(t.one, x) != x)
            out.push_back(detail::make_violation(t, "one-identity", {x}));

    for (int x = 0; x < n; ++x)
        if (t.mul(t.zero, x) != t.zero)
            out.push_back(detail::make_violation(t, "zero-absorbing", {x}));

    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                Mask lhs = 0;
                for (int w : bits::of(t.add(y, z))) lhs |= bits::unit(t.mul(x, w));
                if (lhs != t.add(t.mul(x, y), t.mul(x, z)))
                    out.push_back(
                        detail::make_violation(t, "distributive", {x, y, z}));
            }
        }
    }

    report.valid = out.empty();
    return report;
}

/// Re-evaluates one reported violation against the table. True means the
/// witness still exhibits the failure.
inline bool replay_violation(const HyperringTable& t, const Violation& v) {
    std::vector<int> w;
    for (const auto& lbl : v.witness) {
        auto idx = t.index_of(lbl);
        if (!idx) return false;
        w.push_back(*idx);
    }
    auto inv = [&](int x) { return detail::inverse_if_unique(t, x); };
    if (v.axiom == "zero-one-distinct")
        return t.size() > 1 && t.zero == t.one;
    if (v.axiom == "add-commutative")
        return w.size() == 2 && t.add(w[0], w[1]) != t.add(w[1], w[0]);
    if (v.axiom == "zero-identity")
        return w.size() == 1 && t.add(t.zero, w[0]) != bits::unit(w[0]);
    if (v.axiom == "unique-inverse") return w.size() == 1 && !inv(w[0]);
    if (v.axiom == "add-associative")
        return w.size() == 3 &&
               hypersum(t, t.add(w[0], w[1]), bits::unit(w[2])) !=
                   hypersum(t, bits::unit(w[0]), t.add(w[1], w[2]));
    if (v.axiom == "reversibility") {
        if (w.size() != 3) return false;
        auto ix = inv(w[0]), iy = inv(w[1]);
        if (!ix || !iy) return false;
        if (!bits::contains(t.add(w[0], w[1]), w[2])) return false;
        return !bits::contains(t.add(*ix, w[2]), w[1]) ||
               !bits::contains(t.add(w[2], *iy), w[0]);
    }
    if (v.axiom == "mul-commutative")
        return w.size() == 2 && t.mul(w[0], w[1]) != t.mul(w[1], w[0]);
    if (v.axiom == "mul-associative")
        return w.size() == 3 &&
               t.mul(t.mul(w[0], w[1]), w[2]) != t.mul(w[0], t.mul(w[1], w[2]));
    if (v.axiom == "one-identity")
        return w.size() == 1 && t.mul(t.one, w[0]) != w[0];
    if (v.axiom == "zero-absorbing")
        return w.size() == 1 && t.mul(t.zero, w[0]) != t.zero;
    if (v.axiom == "distributive") {
        if (w.size() != 3) return false;
        Mask lhs = 0;
        for (int u : bits::of(t.add(w[1], w[2])))
            lhs |= bits::unit(t.mul(w[0], u));
        return lhs != t.add(t.mul(w[0], w[1]), t.mul(w[0], w[2]));
    }
    return false;
}

/// True when every addition cell is a singleton, i.e. the table is an
/// ordinary commutative ring presented as a hyperring.
inline bool is_ring(const HyperringTable& t) {
    const int n = t.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (bits::count(t.add(x, y)) != 1) return false;
    return true;
}

struct StructureClass {
    bool commutative_unital = false;
    bool hyperfield = false;
    bool hyperdomain = false;
    bool has_nontrivial_idempotent = false;
    Mask idempotents = 0;
};

/// Classification of a valid table. The degenerate one-element carrier is
/// neither a hyperfield nor a hyperdomain here.
inline StructureClass classify(const HyperringTable& t) {
    const int n = t.size();
    StructureClass c;
    c.commutative_unital = true;

    for (int x = 0; x < n; ++x)
        if (t.mul(x, x) == x) c.idempotents |= bits::unit(x);
    const Mask trivial = bits::unit(t.zero) | bits::unit(t.one);
    c.has_nontrivial_idempotent = (c.idempotents & ~trivial) != 0;

    if (n > 1) {
        c.hyperfield = true;
        for (int x = 0; x < n && c.hyperfield; ++x) {
            if (x == t.zero) continue;
            bool invertible = false;
            for (int y = 0; y < n; ++y)
                if (t.mul(x, y) == t.one) invertible = true;
            c.hyperfield = invertible;
        }
        c.hyperdomain = true;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != t.zero && y != t.zero && t.mul(x, y) == t.zero)
                    c.hyperdomain = false;
    }
    return c;
}

}  // namespace hyperrings
