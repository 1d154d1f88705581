#pragma once

#include <optional>
#include <vector>

#include "hyperrings/core.hpp"

namespace hyperrings {

namespace detail {

/// Per-element structural fingerprint, invariant under isomorphism. Used to
/// prune the bijection search.
inline std::vector<long long> signature(const HyperringTable& t, int x) {
    const int n = t.size();
    std::vector<long long> sig;
    sig.push_back(x == t.zero);
    sig.push_back(x == t.one);
    sig.push_back(t.mul(x, x) == x);
    int nilpotent = 0, p = x;
    for (int k = 1; k <= n; ++k) {
        if (p == t.zero) {
            nilpotent = 1;
            break;
        }
        p = t.mul(p, x);
    }
    sig.push_back(nilpotent);
    std::vector<int> cell_sizes;
    for (int y = 0; y < n; ++y)
        cell_sizes.push_back(bits::count(t.add(x, y)));
    std::sort(cell_sizes.begin(), cell_sizes.end());
    for (int s : cell_sizes) sig.push_back(s);
    Mask image = 0;
    int zero_products = 0;
    for (int y = 0; y < n; ++y) {
        image |= bits::unit(t.mul(x, y));
        if (t.mul(x, y) == t.zero) ++zero_products;
    }
    sig.push_back(bits::count(image));
    sig.push_back(zero_products);
    return sig;
}

inline bool iso_consistent(const HyperringTable& a, const HyperringTable& b,
                           const std::vector<int>& map, int just_assigned) {
    const int n = a.size();
    const int x = just_assigned;
    for (int y = 0; y < n; ++y) {
        if (map[y] < 0) continue;
        const int p = a.mul(x, y);
        if (map[p] >= 0 && b.mul(map[x], map[y]) != map[p]) return false;
        const Mask cell = a.add(x, y);
        const Mask target = b.add(map[x], map[y]);
        if (bits::count(cell) != bits::count(target)) return false;
        Mask mapped = 0;
        bool complete = true;
        for (int z : bits::of(cell)) {
            if (map[z] < 0) {
                complete = false;
                continue;
            }
            mapped |= bits::unit(map[z]);
        }
        if (!bits::is_subset(mapped, target)) return false;
        if (complete && mapped != target) return false;
    }
    return true;
}

inline bool iso_complete_check(const HyperringTable& a,
                               const HyperringTable& b,
                               const std::vector<int>& map) {
    const int n = a.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (b.mul(map[x], map[y]) != map[a.mul(x, y)]) return false;
            Mask mapped = 0;
            for (int z : bits::of(a.add(x, y))) mapped |= bits::unit(map[z]);
            if (mapped != b.add(map[x], map[y])) return false;
        }
    }
    return true;
}

inline bool iso_search(const HyperringTable& a, const HyperringTable& b,
                       const std::vector<std::vector<long long>>& sig_a,
                       const std::vector<std::vector<long long>>& sig_b,
                       std::vector<int>& map, Mask& used, int next) {
    const int n = a.size();
    if (next == n) return iso_complete_check(a, b, map);
    for (int cand = 0; cand < n; ++cand) {
        if (bits::contains(used, cand)) continue;
        if (sig_a[next] != sig_b[cand]) continue;
        if (next == a.zero && cand != b.zero) continue;
        if (next == a.one && cand != b.one) continue;
        map[next] = cand;
        used |= bits::unit(cand);
        if (iso_consistent(a, b, map, next) &&
            iso_search(a, b, sig_a, sig_b, map, used, next + 1))
            return true;
        map[next] = -1;
        used &= ~bits::unit(cand);
    }
    return false;
}

}  // namespace detail

/// Searches for an isomorphism a -> b (a bijection preserving zero, one,
/// both tables). Returns the element map, or nullopt if none exists.
/// Signature pruning keeps the backtracking cheap at the carrier sizes the
/// rest of the library accepts.
inline std::optional<std::vector<int>> find_isomorphism(
    const HyperringTable& a, const HyperringTable& b) {
    const int n = a.size();
    if (n != b.size()) return std::nullopt;
    std::vector<std::vector<long long>> sig_a, sig_b;
    for (int x = 0; x < n; ++x) {
        sig_a.push_back(detail::signature(a, x));
        sig_b.push_back(detail::signature(b, x));
    }
    {
        auto sorted_a = sig_a, sorted_b = sig_b;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) return std::nullopt;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    Mask used = 0;
    if (detail::iso_search(a, b, sig_a, sig_b, map, used, 0)) return map;
    return std::nullopt;
}

inline bool isomorphic(const HyperringTable& a, const HyperringTable& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace hyperrings
