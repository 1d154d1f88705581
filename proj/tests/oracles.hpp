#pragma once

#include <vector>

#include "hyperrings/ideals.hpp"

// Independent reference computations the test suite checks the library
// against. Nothing here shares code with the implementation paths under
// test beyond the table accessors.

namespace hyperrings::testing {

/// Every hyperideal found by scanning the full power set against the closure
/// criterion, canonical order.
inline std::vector<Mask> powerset_ideals(const HyperringTable& t) {
    std::vector<Mask> out;
    const Mask all = t.carrier();
    for (Mask m = 1; m <= all; ++m)
        if (is_hyperideal(t, m)) out.push_back(m);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        if (bits::count(a) != bits::count(b))
            return bits::count(a) < bits::count(b);
        return a < b;
    });
    return out;
}

/// Prime ideals of Z/n by elementary number theory: one per prime divisor,
/// as the set of its multiples.
inline std::vector<Mask> classical_zmod_primes(int n) {
    std::vector<Mask> out;
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        Mask m = 0;
        for (int x = 0; x < n; x += p) m |= bits::unit(x);
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        if (bits::count(a) != bits::count(b))
            return bits::count(a) < bits::count(b);
        return a < b;
    });
    return out;
}

/// Classical ring ideals of a singleton-sum table: additive subgroups
/// absorbing multiplication. Uses only the ring structure, no hyperoperation
/// machinery.
inline std::vector<Mask> classical_ring_ideals(const HyperringTable& t) {
    const int n = t.size();
    std::vector<Mask> out;
    for (Mask m = 1; m <= t.carrier(); ++m) {
        if (!bits::contains(m, t.zero)) continue;
        bool ok = true;
        for (int a : bits::of(m)) {
            for (int b : bits::of(m))
                if (!bits::contains(m, bits::lowest(t.add(a, b)))) ok = false;
            for (int r = 0; r < n; ++r)
                if (!bits::contains(m, t.mul(r, a))) ok = false;
        }
        if (ok) out.push_back(m);
    }
    return out;
}

inline std::vector<Mask> classical_ring_primes(const HyperringTable& t) {
    std::vector<Mask> out;
    for (Mask m : classical_ring_ideals(t)) {
        if (m == t.carrier()) continue;
        bool prime = true;
        for (int a = 0; a < t.size(); ++a)
            for (int b = 0; b < t.size(); ++b)
                if (bits::contains(m, t.mul(a, b)) && !bits::contains(m, a) &&
                    !bits::contains(m, b))
                    prime = false;
        if (prime) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        if (bits::count(a) != bits::count(b))
            return bits::count(a) < bits::count(b);
        return a < b;
    });
    return out;
}

/// All set partitions of {0..n-1} as block lists.
inline std::vector<std::vector<Mask>> all_partitions(int n) {
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> current;
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            out.push_back(current);
            return;
        }
        for (auto& block : current) {
            block |= bits::unit(x);
            self(self, x + 1);
            block &= ~bits::unit(x);
        }
        current.push_back(bits::unit(x));
        self(self, x + 1);
        current.pop_back();
    };
    rec(rec, 0);
    return out;
}

/// Axiom statements replayed as plain loops, one per axiom.
inline bool oracle_add_commutative(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y)
            if (t.add(x, y) != t.add(y, x)) return false;
    return true;
}

inline bool oracle_zero_identity(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x)
        if (t.add(t.zero, x) != bits::unit(x)) return false;
    return true;
}

inline bool oracle_unique_inverse(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x) {
        int count = 0;
        for (int y = 0; y < t.size(); ++y)
            if (bits::contains(t.add(x, y), t.zero)) ++count;
        if (count != 1) return false;
    }
    return true;
}

inline bool oracle_add_associative(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y)
            for (int z = 0; z < t.size(); ++z) {
                Mask lhs = 0, rhs = 0;
                for (int w : bits::of(t.add(x, y))) lhs |= t.add(w, z);
                for (int w : bits::of(t.add(y, z))) rhs |= t.add(x, w);
                if (lhs != rhs) return false;
            }
    return true;
}

inline bool oracle_reversible(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y)
            for (int z : bits::of(t.add(x, y))) {
                if (!bits::contains(t.add(negate(t, x), z), y)) return false;
                if (!bits::contains(t.add(z, negate(t, y)), x)) return false;
            }
    return true;
}

inline bool oracle_mul_monoid(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x) {
        if (t.mul(t.one, x) != x) return false;
        if (t.mul(t.zero, x) != t.zero) return false;
        for (int y = 0; y < t.size(); ++y) {
            if (t.mul(x, y) != t.mul(y, x)) return false;
            for (int z = 0; z < t.size(); ++z)
                if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)))
                    return false;
        }
    }
    return true;
}

inline bool oracle_distributive(const HyperringTable& t) {
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y)
            for (int z = 0; z < t.size(); ++z) {
                Mask lhs = 0;
                for (int w : bits::of(t.add(y, z)))
                    lhs |= bits::unit(t.mul(x, w));
                if (lhs != t.add(t.mul(x, y), t.mul(x, z))) return false;
            }
    return true;
}

inline bool oracle_all_axioms(const HyperringTable& t) {
    return oracle_add_commutative(t) && oracle_zero_identity(t) &&
           oracle_unique_inverse(t) && oracle_add_associative(t) &&
           oracle_reversible(t) && oracle_mul_monoid(t) &&
           oracle_distributive(t);
}

}  // namespace hyperrings::testing
