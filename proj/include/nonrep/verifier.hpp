#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nonrep/coloring.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/rolling_hash.hpp"
#include "nonrep/word.hpp"

namespace nonrep {

enum class VerifyStatus { pass, witness, budget_exhausted };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::witness: return "witness";
        default: return "budget-exhausted";
    }
}

// Path of 2k vertices whose color word is a square.
struct PathWitness {
    int k = 0;
    std::vector<int32_t> vertices;
};

struct SearchBudget {
    int max_half_length = 6;
    uint64_t max_nodes = 1'000'000'000ULL;
    int parallelism = 0;  // 0 = all available cores
    bool deterministic = false;
};

struct VerifyReport {
    VerifyStatus status = VerifyStatus::pass;
    uint64_t nodes_visited = 0;
    int64_t elapsed_ms = 0;
    int max_half_length = 0;
    uint64_t max_nodes = 0;
    int parallelism = 0;  // echoed as 0 in deterministic mode
    bool deterministic = false;
    std::optional<PathWitness> witness;
    nlohmann::ordered_json construction;
};

// Re-checks a witness from scratch: structure, adjacency, simplicity and the
// color-half equality.  Independent of the search engine.
inline bool validate_witness(const ColoredGraph& cg, const PathWitness& w,
                             std::string* reason = nullptr) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    if (w.k < 1) return fail("half-length-below-one");
    if (w.vertices.size() != size_t(2 * w.k)) return fail("wrong-vertex-count");
    for (int32_t v : w.vertices)
        if (v < 0 || v >= cg.graph.nverts) return fail("unknown-vertex");
    std::set<int32_t> seen(w.vertices.begin(), w.vertices.end());
    if (seen.size() != w.vertices.size()) return fail("repeated-vertex");
    for (size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!cg.graph.adjacent(w.vertices[i], w.vertices[i + 1]))
            return fail("not-adjacent");
    for (int i = 0; i < w.k; ++i)
        if (cg.color[w.vertices[i]] != cg.color[w.vertices[w.k + i]])
            return fail("color-halves-differ");
    if (reason) *reason = "ok";
    return true;
}

namespace detail {

struct StartOutcome {
    uint64_t nodes = 0;
    std::vector<int32_t> witness;
    bool aborted = false;
};

inline std::vector<uint64_t> base_powers(uint64_t base, int upto) {
    std::vector<uint64_t> p(size_t(upto) + 1, 1);
    for (int i = 1; i <= upto; ++i) p[i] = p[i - 1] * base;
    return p;
}

// One start vertex, one half-length level: depth-first over simple paths of
// exactly 2*half vertices, neighbor ids ascending, so witnesses surface in
// lexicographic vertex-sequence order.  Counts one node per vertex push.
class RepetitionSearch {
public:
    RepetitionSearch(const ColoredGraph& cg, const SearchBudget& budget)
        : cg_(cg),
          budget_(budget),
          pw1_(base_powers(kHashBase1, budget.max_half_length)),
          pw2_(base_powers(kHashBase2, budget.max_half_length)) {
        if (budget_.max_half_length < 1)
            throw std::invalid_argument("budget: max_half_length must be >= 1");
        if (budget_.max_nodes < 1)
            throw std::invalid_argument("budget: max_nodes must be >= 1");
        if (budget_.parallelism < 0)
            throw std::invalid_argument("budget: parallelism must be >= 0");
        if (cg_.color.size() != size_t(cg_.graph.nverts))
            throw std::invalid_argument("coloring does not cover the graph");
    }

    VerifyReport run() {
        const auto t0 = std::chrono::steady_clock::now();
        const int workers = resolve_parallelism();
        VerifyReport rep;
        rep.max_half_length = budget_.max_half_length;
        rep.max_nodes = budget_.max_nodes;
        rep.deterministic = budget_.deterministic;
        rep.parallelism = budget_.deterministic ? 0 : workers;
        rep.construction = echo();
        const int nverts = cg_.graph.nverts;
        const int last_level = std::min(budget_.max_half_length, nverts / 2);
        uint64_t certified = 0;          // deterministic count over finished levels
        std::atomic<uint64_t> shared{0};  // live count, chunk-flushed
        for (int half = 1; half <= last_level; ++half) {
            const uint64_t so_far = budget_.deterministic
                                        ? certified
                                        : shared.load(std::memory_order_relaxed);
            if (so_far >= budget_.max_nodes) {
                rep.status = VerifyStatus::budget_exhausted;
                rep.nodes_visited = so_far;
                return finalize(rep, t0);
            }
            std::atomic<int> next{0};
            std::atomic<bool> stop_budget{false}, stop_found{false};
            std::vector<StartOutcome> outcome(nverts);
            auto work = [&] {
                std::vector<uint8_t> visited(nverts, 0);
                while (true) {
                    if (stop_budget.load(std::memory_order_relaxed)) break;
                    if (!budget_.deterministic &&
                        stop_found.load(std::memory_order_relaxed))
                        break;
                    const int s = next.fetch_add(1, std::memory_order_relaxed);
                    if (s >= nverts) break;
                    outcome[s] =
                        search_start(s, half, visited, shared, stop_budget, stop_found);
                    if (!outcome[s].witness.empty())
                        stop_found.store(true, std::memory_order_relaxed);
                }
            };
            if (workers == 1) {
                work();
            } else {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                for (int t = 0; t < workers; ++t) pool.emplace_back(work);
                for (auto& t : pool) t.join();
            }
            if (stop_budget.load()) {
                rep.status = VerifyStatus::budget_exhausted;
                rep.nodes_visited = budget_.deterministic
                                        ? certified
                                        : shared.load(std::memory_order_relaxed);
                return finalize(rep, t0);
            }
            uint64_t level_nodes = 0;
            int best = -1;
            for (int s = 0; s < nverts; ++s) {
                level_nodes += outcome[s].nodes;
                if (best < 0 && !outcome[s].witness.empty()) best = s;
            }
            certified += level_nodes;
            if (best >= 0) {
                rep.status = VerifyStatus::witness;
                rep.witness = PathWitness{half, std::move(outcome[best].witness)};
                rep.nodes_visited = budget_.deterministic
                                        ? certified
                                        : shared.load(std::memory_order_relaxed);
                return finalize(rep, t0);
            }
        }
        const uint64_t total = budget_.deterministic
                                   ? certified
                                   : shared.load(std::memory_order_relaxed);
        // pass is only claimed when the whole enumeration stayed under the cap
        rep.status = total >= budget_.max_nodes ? VerifyStatus::budget_exhausted
                                                : VerifyStatus::pass;
        rep.nodes_visited = total;
        return finalize(rep, t0);
    }

private:
    static constexpr uint64_t kChunk = 4096;

    int resolve_parallelism() const {
        if (budget_.parallelism > 0) return budget_.parallelism;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : int(hw);
    }

    nlohmann::ordered_json echo() const {
        if (!cg_.spec) {
            nlohmann::ordered_json j;
            j["kind"] = "custom";
            return j;
        }
        nlohmann::ordered_json j = construction_json(*cg_.spec);
        j["offsets"] = cg_.spec->offsets;
        return j;
    }

    VerifyReport finalize(VerifyReport& rep, std::chrono::steady_clock::time_point t0) const {
        rep.elapsed_ms = budget_.deterministic
                             ? 0
                             : std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
        return std::move(rep);
    }

    StartOutcome search_start(int start, int half, std::vector<uint8_t>& visited,
                              std::atomic<uint64_t>& shared,
                              std::atomic<bool>& stop_budget,
                              std::atomic<bool>& stop_found) {
        StartOutcome out;
        const int target = 2 * half;
        const int32_t* off = cg_.graph.off.data();
        const int32_t* adj = cg_.graph.adj.data();
        const int* col = cg_.color.data();
        std::vector<int32_t> path(target), it(target);
        std::vector<uint64_t> h1(size_t(target) + 1), h2(size_t(target) + 1);
        uint64_t since_flush = 0;
        // returns true when the search must stop; only non-deterministic runs
        // honor mid-level aborts (deterministic runs budget at level bounds)
        auto bump = [&]() -> bool {
            ++out.nodes;
            if (++since_flush < kChunk) return false;
            since_flush = 0;
            const uint64_t seen =
                shared.fetch_add(kChunk, std::memory_order_relaxed) + kChunk;
            if (budget_.deterministic) return false;
            if (seen >= budget_.max_nodes) stop_budget.store(true, std::memory_order_relaxed);
            return stop_budget.load(std::memory_order_relaxed) ||
                   stop_found.load(std::memory_order_relaxed);
        };
        auto unwind = [&](int d) {
            for (int j = 0; j <= d; ++j) visited[path[j]] = 0;
            shared.fetch_add(since_flush, std::memory_order_relaxed);
        };
        int d = 0;
        path[0] = int32_t(start);
        it[0] = off[start];
        visited[start] = 1;
        h1[0] = h2[0] = 0;
        h1[1] = uint64_t(col[start]) + 1;
        h2[1] = uint64_t(col[start]) + 1;
        if (bump()) {
            out.aborted = true;
            unwind(0);
            return out;
        }
        while (d >= 0) {
            const int32_t v = path[d];
            if (d + 1 == target) {
                // full word reached: square iff the two halves hash equal
                if (h1[target] == h1[half] * (pw1_[half] + 1) &&
                    h2[target] == h2[half] * (pw2_[half] + 1)) {
                    bool eq = true;
                    for (int i = 0; eq && i < half; ++i)
                        eq = col[path[i]] == col[path[half + i]];
                    if (eq) {
                        out.witness = path;
                        unwind(d);
                        return out;
                    }
                }
                visited[v] = 0;
                --d;
                continue;
            }
            bool pushed = false;
            int32_t& i = it[d];
            const int32_t end = off[v + 1];
            while (i < end) {
                const int32_t u = adj[i++];
                if (visited[u]) continue;
                ++d;
                path[d] = u;
                it[d] = off[u];
                visited[u] = 1;
                h1[size_t(d) + 1] = h1[d] * kHashBase1 + uint64_t(col[u]) + 1;
                h2[size_t(d) + 1] = h2[d] * kHashBase2 + uint64_t(col[u]) + 1;
                if (bump()) {
                    out.aborted = true;
                    unwind(d);
                    return out;
                }
                pushed = true;
                break;
            }
            if (!pushed) {
                visited[v] = 0;
                --d;
            }
        }
        shared.fetch_add(since_flush, std::memory_order_relaxed);
        return out;
    }

    const ColoredGraph& cg_;
    SearchBudget budget_;
    std::vector<uint64_t> pw1_, pw2_;
};

}  // namespace detail

// Exhaustive repetitive-path search with iterative deepening over the half
// length: level k enumerates all simple paths of exactly 2k vertices from
// every start, in both directions, so the first witness level is minimal.
inline VerifyReport find_repetitive_path(const ColoredGraph& cg,
                                         const SearchBudget& budget) {
    return detail::RepetitionSearch(cg, budget).run();
}

inline nlohmann::ordered_json report_to_json(const VerifyReport& rep,
                                             const ColoredGraph& cg) {
    nlohmann::ordered_json j;
    j["status"] = to_string(rep.status);
    j["construction"] = rep.construction;
    j["budget"] = {{"maxLen", 2 * rep.max_half_length},
                   {"maxNodes", rep.max_nodes},
                   {"parallelism", rep.parallelism}};
    j["nodesVisited"] = rep.nodes_visited;
    j["elapsedMs"] = rep.elapsed_ms;
    if (rep.status == VerifyStatus::witness && rep.witness) {
        nlohmann::ordered_json w;
        w["k"] = rep.witness->k;
        nlohmann::ordered_json verts = nlohmann::ordered_json::array();
        nlohmann::ordered_json colors = nlohmann::ordered_json::array();
        for (int32_t v : rep.witness->vertices) {
            nlohmann::ordered_json p = nlohmann::ordered_json::array();
            for (int x : cg.graph.payload(v)) p.push_back(x);
            verts.push_back(std::move(p));
            colors.push_back(cg.label_of(v));
        }
        w["vertices"] = std::move(verts);
        w["colors"] = std::move(colors);
        j["witness"] = std::move(w);
    }
    return j;
}

// ---- lazy-walk rigidity -----------------------------------------------------

// A lazy walk of 2k steps whose color halves agree but whose position halves
// differ; rigidity predicts none exist for the checked objects.
struct LazyWalkCounterexample {
    int k = 0;
    std::vector<int32_t> positions;
};

namespace detail {

// Enumerates every lazy walk of length <= 2*k_max over a stay-included
// adjacency structure, testing each even-length walk.
inline std::vector<LazyWalkCounterexample> lazy_walk_scan(
        int ncells, const std::vector<int32_t>& off, const std::vector<int32_t>& adj,
        const std::vector<int>& col, int k_max) {
    std::vector<LazyWalkCounterexample> out;
    const int target = 2 * k_max;
    const auto pw1 = base_powers(kHashBase1, k_max);
    const auto pw2 = base_powers(kHashBase2, k_max);
    std::vector<int32_t> path(target), it(target);
    std::vector<uint64_t> h1(size_t(target) + 1), h2(size_t(target) + 1);
    for (int start = 0; start < ncells; ++start) {
        int d = 0;
        path[0] = int32_t(start);
        it[0] = off[start];
        h1[0] = h2[0] = 0;
        h1[1] = uint64_t(col[start]) + 1;
        h2[1] = uint64_t(col[start]) + 1;
        while (d >= 0) {
            const int32_t v = path[d];
            bool pushed = false;
            if (d + 1 < target) {
                int32_t& i = it[d];
                const int32_t end = off[v + 1];
                if (i < end) {
                    const int32_t u = adj[i++];
                    ++d;
                    path[d] = u;
                    it[d] = off[u];
                    h1[size_t(d) + 1] = h1[d] * kHashBase1 + uint64_t(col[u]) + 1;
                    h2[size_t(d) + 1] = h2[d] * kHashBase2 + uint64_t(col[u]) + 1;
                    pushed = true;
                    const int len = d + 1;
                    if (len % 2 == 0) {
                        const int k = len / 2;
                        if (h1[len] == h1[k] * (pw1[k] + 1) &&
                            h2[len] == h2[k] * (pw2[k] + 1)) {
                            bool colors_eq = true;
                            for (int j = 0; colors_eq && j < k; ++j)
                                colors_eq = col[path[j]] == col[path[k + j]];
                            bool positions_eq = true;
                            for (int j = 0; positions_eq && j < k; ++j)
                                positions_eq = path[j] == path[k + j];
                            if (colors_eq && !positions_eq)
                                out.push_back(LazyWalkCounterexample{
                                    k, std::vector<int32_t>(path.begin(),
                                                            path.begin() + len)});
                        }
                    }
                }
            }
            if (!pushed) --d;
        }
    }
    return out;
}

}  // namespace detail

// Word form: walks move over window indices with steps {-1, 0, +1}.
inline std::vector<LazyWalkCounterexample> check_lazy_walk_rigidity(const Word& word,
                                                                    int k_max) {
    if (k_max < 1) throw std::invalid_argument("rigidity: k_max must be >= 1");
    const int n = int(word.size());
    if (n < 2 * k_max + 1)
        throw std::invalid_argument("rigidity: window shorter than 2*k_max + 1");
    std::vector<int32_t> off(size_t(n) + 1), adj;
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) {
        off[i] = int32_t(adj.size());
        for (int j = i - 1; j <= i + 1; ++j)
            if (j >= 0 && j < n) adj.push_back(int32_t(j));
        col[i] = word.symbols[i];
    }
    off[n] = int32_t(adj.size());
    return detail::lazy_walk_scan(n, off, adj, col, k_max);
}

// Graph form: walks move along edges or stay in place.
inline std::vector<LazyWalkCounterexample> check_lazy_walk_rigidity(
        const ColoredGraph& cg, int k_max) {
    if (k_max < 1) throw std::invalid_argument("rigidity: k_max must be >= 1");
    const int n = cg.graph.nverts;
    std::vector<int32_t> off(size_t(n) + 1), adj;
    for (int v = 0; v < n; ++v) {
        off[v] = int32_t(adj.size());
        bool placed = false;
        for (int32_t u : cg.graph.neighbors(v)) {
            if (!placed && u > v) {
                adj.push_back(int32_t(v));
                placed = true;
            }
            adj.push_back(u);
        }
        if (!placed) adj.push_back(int32_t(v));
    }
    off[n] = int32_t(adj.size());
    return detail::lazy_walk_scan(n, off, adj, cg.color, k_max);
}

// ---- exact Thue number ------------------------------------------------------

struct PiResult {
    std::optional<int> pi;      // empty when no coloring exists within the cap
    std::vector<int> coloring;  // certificate when pi holds a value
};

namespace detail {

// Any repetitive path inside the colored prefix must pass through the newest
// vertex; enumerate those paths as (left arm, right arm) pairs around it.
inline bool repetition_through(const Graph& g, const std::vector<int>& col, int v) {
    std::vector<uint8_t> used(g.nverts, 0);
    std::vector<int32_t> left, right;
    used[v] = 1;
    auto test_even = [&]() {
        const size_t len = left.size() + right.size() + 1;
        if (len % 2 != 0) return false;
        std::vector<int32_t> seq(left.rbegin(), left.rend());
        seq.push_back(int32_t(v));
        seq.insert(seq.end(), right.begin(), right.end());
        const size_t half = len / 2;
        for (size_t i = 0; i < half; ++i)
            if (col[seq[i]] != col[seq[half + i]]) return false;
        return true;
    };
    std::function<bool()> go_right = [&]() -> bool {
        const int last = right.empty() ? v : right.back();
        for (int32_t u : g.neighbors(last)) {
            if (col[u] < 0 || used[u]) continue;
            used[u] = 1;
            right.push_back(u);
            // a square read backwards is a square again, so testing here also
            // covers walks that only extend the left arm
            const bool hit = test_even() || go_right();
            right.pop_back();
            used[u] = 0;
            if (hit) return true;
        }
        return false;
    };
    std::function<bool()> go_left = [&]() -> bool {
        if (go_right()) return true;
        const int last = left.empty() ? v : left.back();
        for (int32_t u : g.neighbors(last)) {
            if (col[u] < 0 || used[u]) continue;
            used[u] = 1;
            left.push_back(u);
            const bool hit = go_left();
            left.pop_back();
            used[u] = 0;
            if (hit) return true;
        }
        return false;
    };
    return go_left();
}

inline bool color_rest(const Graph& g, std::vector<int>& col, int v, int cap) {
    if (v == g.nverts) return true;
    int max_used = -1;
    for (int u = 0; u < v; ++u) max_used = std::max(max_used, col[u]);
    const int limit = std::min(cap, max_used + 2);  // canonical introduction
    for (int c = 0; c < limit; ++c) {
        col[v] = c;
        if (!repetition_through(g, col, v) && color_rest(g, col, v + 1, cap))
            return true;
    }
    col[v] = -1;
    return false;
}

}  // namespace detail

// Smallest palette size admitting a non-repetitive coloring, by backtracking
// over vertices in id order with canonical new-color introduction.
inline PiResult exact_pi(const Graph& g, int max_colors) {
    if (max_colors < 1) throw std::invalid_argument("exact_pi: max_colors must be >= 1");
    for (int cap = 1; cap <= max_colors; ++cap) {
        std::vector<int> col(g.nverts, -1);
        if (detail::color_rest(g, col, 0, cap)) return {cap, std::move(col)};
    }
    return {std::nullopt, {}};
}

// ---- board-specific structure checks ----------------------------------------

// Two ordered edge occurrences carrying the same color pair but different
// endpoint-type pairs.
struct EdgeTypeViolation {
    int32_t u1 = 0, v1 = 0, u2 = 0, v2 = 0;
};

inline std::vector<EdgeTypeViolation> check_edge_pair_types(const ColoredGraph& cg) {
    if (cg.vertex_type.size() != size_t(cg.graph.nverts))
        throw std::invalid_argument("edge-pair check: coloring carries no vertex types");
    std::map<std::pair<int, int>, std::tuple<int, int, int32_t, int32_t>> first;
    std::vector<EdgeTypeViolation> out;
    for (int u = 0; u < cg.graph.nverts; ++u)
        for (int32_t v : cg.graph.neighbors(u)) {
            const std::pair<int, int> key{cg.color[u], cg.color[v]};
            const auto types = std::pair<int, int>{cg.vertex_type[u], cg.vertex_type[v]};
            auto it = first.find(key);
            if (it == first.end()) {
                first.emplace(key, std::tuple<int, int, int32_t, int32_t>{
                                       types.first, types.second, int32_t(u), v});
            } else if (std::get<0>(it->second) != types.first ||
                       std::get<1>(it->second) != types.second) {
                out.push_back(EdgeTypeViolation{std::get<2>(it->second),
                                                std::get<3>(it->second), int32_t(u), v});
            }
        }
    return out;
}

// True iff every edge has exactly one endpoint colored "0".
inline bool check_zero_alternation(const ColoredGraph& cg) {
    int zero = -1;
    for (size_t i = 0; i < cg.palette.size(); ++i)
        if (cg.palette[i] == "0") zero = int(i);
    if (zero < 0) throw std::invalid_argument("zero-alternation: palette has no color 0");
    for (int u = 0; u < cg.graph.nverts; ++u)
        for (int32_t v : cg.graph.neighbors(u))
            if (u < v && (cg.color[u] == zero) == (cg.color[v] == zero)) return false;
    return true;
}

}  // namespace nonrep
