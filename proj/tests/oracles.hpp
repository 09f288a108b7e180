#pragma once

// Brute-force reference implementations, kept independent of the library so
// test expectations are computed twice by different code paths.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace oracles {

// first square factor by (start, length), cubic scan, no hashing
inline std::optional<std::pair<size_t, size_t>> find_square(
        const std::vector<uint8_t>& s) {
    const size_t n = s.size();
    for (size_t start = 0; start + 2 <= n; ++start)
        for (size_t half = 1; start + 2 * half <= n; ++half) {
            bool eq = true;
            for (size_t i = 0; eq && i < half; ++i)
                eq = s[start + i] == s[start + half + i];
            if (eq) return std::pair<size_t, size_t>{start, 2 * half};
        }
    return std::nullopt;
}

// first palindromic factor of length >= min_len by (start, length)
inline std::optional<std::pair<size_t, size_t>> find_palindrome(
        const std::vector<uint8_t>& s, size_t min_len = 2) {
    const size_t n = s.size();
    for (size_t start = 0; start + min_len <= n; ++start)
        for (size_t len = min_len; start + len <= n; ++len) {
            bool ok = true;
            for (size_t i = 0; ok && 2 * i + 1 < len; ++i)
                ok = s[start + i] == s[start + len - 1 - i];
            if (ok) return std::pair<size_t, size_t>{start, len};
        }
    return std::nullopt;
}

inline bool is_square_word(const std::vector<int>& w) {
    if (w.empty() || w.size() % 2 != 0) return false;
    const size_t half = w.size() / 2;
    for (size_t i = 0; i < half; ++i)
        if (w[i] != w[half + i]) return false;
    return true;
}

// calls fn once for every simple path of 2..max_vertices vertices, from every
// start, in both directions
inline void for_each_simple_path(const std::vector<std::vector<int>>& adj,
                                 int max_vertices,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    const int n = int(adj.size());
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int)> extend = [&](int v) {
        path.push_back(v);
        used[v] = 1;
        if (path.size() >= 2) fn(path);
        if (int(path.size()) < max_vertices)
            for (int u : adj[v])
                if (!used[u]) extend(u);
        used[v] = 0;
        path.pop_back();
    };
    for (int v = 0; v < n; ++v) extend(v);
}

// does any simple path of <= 2*k_max vertices carry a square color word?
inline bool has_repetitive_path(const std::vector<std::vector<int>>& adj,
                                const std::vector<int>& color, int k_max) {
    bool found = false;
    for_each_simple_path(adj, 2 * k_max, [&](const std::vector<int>& path) {
        if (found || path.size() % 2 != 0) return;
        std::vector<int> w;
        for (int v : path) w.push_back(color[v]);
        if (is_square_word(w)) found = true;
    });
    return found;
}

// smallest repetitive path under (length, start vertex, vertex sequence), or
// empty — the deterministic engine's tie-break, recomputed naively
inline std::vector<int> minimal_repetitive_path(const std::vector<std::vector<int>>& adj,
                                                const std::vector<int>& color, int k_max) {
    std::vector<int> best;
    for_each_simple_path(adj, 2 * k_max, [&](const std::vector<int>& path) {
        if (path.size() % 2 != 0) return;
        std::vector<int> w;
        for (int v : path) w.push_back(color[v]);
        if (!is_square_word(w)) return;
        if (best.empty() || path.size() < best.size() ||
            (path.size() == best.size() && path < best))
            best = path;
    });
    return best;
}

// full non-repetitiveness (paths of any length), for certificate validation
inline bool coloring_nonrepetitive(const std::vector<std::vector<int>>& adj,
                                   const std::vector<int>& color) {
    return !has_repetitive_path(adj, color, int(adj.size()));
}

}  // namespace oracles
