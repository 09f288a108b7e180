#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace nonrep {

enum class Adjacency { cartesian, tensor, strong };

inline const char* to_string(Adjacency a) {
    switch (a) {
        case Adjacency::cartesian: return "cartesian";
        case Adjacency::tensor: return "tensor";
        default: return "strong";
    }
}

inline Adjacency adjacency_from_string(const std::string& s) {
    if (s == "cartesian") return Adjacency::cartesian;
    if (s == "tensor") return Adjacency::tensor;
    if (s == "strong") return Adjacency::strong;
    throw std::invalid_argument("unknown adjacency: " + s);
}

// Axis-aligned box of lattice points with inclusive bounds per axis.
struct LatticeRegion {
    std::vector<int> lo, hi;
    Adjacency adjacency = Adjacency::cartesian;

    int dim() const { return int(lo.size()); }

    void validate() const {
        if (lo.empty() || lo.size() != hi.size())
            throw std::invalid_argument("region: bounds must be non-empty and of equal dimension");
        for (size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i])
                throw std::invalid_argument("region: lower bound exceeds upper bound");
    }

    long long vertex_count() const {
        long long n = 1;
        for (size_t i = 0; i < lo.size(); ++i) {
            n *= (long long)hi[i] - lo[i] + 1;
            if (n > (1LL << 40)) throw std::invalid_argument("region: too many vertices");
        }
        return n;
    }

    bool contains(std::span<const int> p) const {
        if (p.size() != lo.size()) return false;
        for (size_t i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
};

enum class GraphFamily { box, component, rook, biclique, general };

inline const char* to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::box: return "box";
        case GraphFamily::component: return "component";
        case GraphFamily::rook: return "rook";
        case GraphFamily::biclique: return "biclique";
        default: return "general";
    }
}

// Undirected graph in CSR form.  Each vertex carries an integer payload
// tuple (lattice point or board cell); payloads are listed row-major, first
// coordinate slowest, and neighbor lists are sorted.
struct Graph {
    GraphFamily family = GraphFamily::general;
    nlohmann::ordered_json params;
    int dim = 1;
    int nverts = 0;
    std::vector<int> coords;   // nverts * dim
    std::vector<int32_t> off;  // nverts + 1
    std::vector<int32_t> adj;
    bool sorted_payloads = true;

    std::span<const int> payload(int v) const {
        return {coords.data() + size_t(v) * dim, size_t(dim)};
    }

    std::span<const int32_t> neighbors(int v) const {
        if (v < 0 || v >= nverts) throw std::invalid_argument("neighbors: unknown vertex");
        return {adj.data() + off[v], size_t(off[v + 1] - off[v])};
    }

    size_t edge_count() const { return adj.size() / 2; }

    bool adjacent(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), int32_t(v));
    }

    // id of the vertex with the given payload, or -1
    int find_vertex(std::span<const int> p) const {
        if (int(p.size()) != dim) return -1;
        auto cmp_at = [&](int v) {
            return std::lexicographical_compare_three_way(
                coords.begin() + size_t(v) * dim, coords.begin() + size_t(v + 1) * dim,
                p.begin(), p.end());
        };
        if (sorted_payloads) {
            int lo = 0, hi = nverts - 1;
            while (lo <= hi) {
                int mid = (lo + hi) / 2;
                auto c = cmp_at(mid);
                if (c == std::strong_ordering::equal) return mid;
                if (c == std::strong_ordering::less) lo = mid + 1;
                else hi = mid - 1;
            }
            return -1;
        }
        for (int v = 0; v < nverts; ++v)
            if (cmp_at(v) == std::strong_ordering::equal) return v;
        return -1;
    }

    nlohmann::ordered_json summary_json() const {
        nlohmann::ordered_json j;
        j["family"] = to_string(family);
        j["params"] = params;
        j["vertices"] = nverts;
        j["edges"] = edge_count();
        return j;
    }

    // one "u,v" line per edge, u < v, ascending
    std::string edges_csv() const {
        std::string out = "u,v\n";
        for (int u = 0; u < nverts; ++u)
            for (int32_t v : neighbors(u))
                if (u < v) out += std::to_string(u) + "," + std::to_string(v) + "\n";
        return out;
    }
};

namespace detail {

inline std::vector<std::vector<int>> adjacency_moves(int dim, Adjacency adjacency) {
    std::vector<std::vector<int>> moves;
    if (adjacency != Adjacency::tensor) {  // one coordinate changes by one
        for (int i = 0; i < dim; ++i)
            for (int d : {-1, 1}) {
                std::vector<int> m(dim, 0);
                m[i] = d;
                moves.push_back(m);
            }
    }
    if (adjacency != Adjacency::cartesian) {  // every coordinate changes by one
        for (int mask = 0; mask < (1 << dim); ++mask) {
            std::vector<int> m(dim);
            for (int i = 0; i < dim; ++i) m[i] = (mask >> i & 1) ? 1 : -1;
            if (dim > 1 || adjacency == Adjacency::tensor) moves.push_back(m);
        }
    }
    // the two rules coincide in dimension one; drop duplicates
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    return moves;
}

inline void finish_csr(Graph& g, const std::vector<std::vector<int32_t>>& lists) {
    g.off.assign(size_t(g.nverts) + 1, 0);
    size_t total = 0;
    for (int v = 0; v < g.nverts; ++v) {
        total += lists[v].size();
        g.off[v + 1] = int32_t(total);
    }
    g.adj.reserve(total);
    for (const auto& l : lists) g.adj.insert(g.adj.end(), l.begin(), l.end());
}

inline nlohmann::ordered_json region_json(const LatticeRegion& r) {
    nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
    for (int i = 0; i < r.dim(); ++i)
        bounds.push_back({r.lo[i], r.hi[i]});
    return bounds;
}

}  // namespace detail

// Product of paths restricted to a box: vertices are the lattice points of
// the region, edges follow its adjacency rule.  "strong" is the union of the
// cartesian and tensor edge sets.
inline Graph build_box(const LatticeRegion& region) {
    region.validate();
    const long long n = region.vertex_count();
    if (n > 20'000'000) throw std::invalid_argument("region: too many vertices for desk scale");
    Graph g;
    g.family = GraphFamily::box;
    g.params["region"] = detail::region_json(region);
    g.params["adjacency"] = to_string(region.adjacency);
    g.dim = region.dim();
    g.nverts = int(n);
    g.coords.reserve(size_t(n) * g.dim);
    std::vector<int> p = region.lo;
    for (long long v = 0; v < n; ++v) {
        g.coords.insert(g.coords.end(), p.begin(), p.end());
        for (int i = g.dim - 1; i >= 0; --i) {
            if (++p[i] <= region.hi[i]) break;
            p[i] = region.lo[i];
        }
    }
    std::vector<long long> stride(g.dim, 1);
    for (int i = g.dim - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * ((long long)region.hi[i + 1] - region.lo[i + 1] + 1);
    const auto moves = detail::adjacency_moves(g.dim, region.adjacency);
    std::vector<std::vector<int32_t>> lists(g.nverts);
    std::vector<int> q(g.dim);
    for (int v = 0; v < g.nverts; ++v) {
        auto pv = g.payload(v);
        for (const auto& m : moves) {
            bool inside = true;
            long long u = 0;
            for (int i = 0; i < g.dim && inside; ++i) {
                q[i] = pv[i] + m[i];
                inside = q[i] >= region.lo[i] && q[i] <= region.hi[i];
                u += (q[i] - region.lo[i]) * stride[i];
            }
            if (inside) lists[v].push_back(int32_t(u));
        }
        std::sort(lists[v].begin(), lists[v].end());
    }
    detail::finish_csr(g, lists);
    return g;
}

// Connected-component membership for a tensor-adjacency box: p and base lie
// in the same component iff every coordinate difference has the same parity.
inline bool same_tensor_component(std::span<const int> p, std::span<const int> base) {
    if (p.size() != base.size() || p.empty())
        throw std::invalid_argument("tensor component: dimension mismatch");
    const int lead = (p[0] - base[0]) & 1;
    for (size_t i = 1; i < p.size(); ++i)
        if (((p[i] - base[i]) & 1) != lead) return false;
    return true;
}

// Induced subgraph of a tensor box on the component containing base.
inline Graph tensor_component(const Graph& box, std::span<const int> base) {
    if (box.family != GraphFamily::box || box.params.at("adjacency") != "tensor")
        throw std::invalid_argument("tensor_component: expected a tensor-adjacency box");
    if (int(base.size()) != box.dim)
        throw std::invalid_argument("tensor_component: base dimension mismatch");
    std::vector<int32_t> new_id(box.nverts, -1);
    Graph g;
    g.family = GraphFamily::component;
    g.params["region"] = box.params.at("region");
    g.params["adjacency"] = "tensor";
    g.params["base"] = std::vector<int>(base.begin(), base.end());
    g.dim = box.dim;
    for (int v = 0; v < box.nverts; ++v) {
        if (!same_tensor_component(box.payload(v), base)) continue;
        new_id[v] = g.nverts++;
        auto pv = box.payload(v);
        g.coords.insert(g.coords.end(), pv.begin(), pv.end());
    }
    if (g.nverts == 0) throw std::invalid_argument("tensor_component: base outside region");
    std::vector<std::vector<int32_t>> lists(g.nverts);
    for (int v = 0; v < box.nverts; ++v) {
        if (new_id[v] < 0) continue;
        for (int32_t u : box.neighbors(v))
            if (new_id[u] >= 0) lists[new_id[v]].push_back(new_id[u]);
    }
    detail::finish_csr(g, lists);
    return g;
}

// Rook graph on an n x n board: cells adjacent iff they share a row or
// a column.
inline Graph build_rook(int n) {
    if (n < 2) throw std::invalid_argument("rook: board side must be >= 2");
    Graph g;
    g.family = GraphFamily::rook;
    g.params["n"] = n;
    g.dim = 2;
    g.nverts = n * n;
    g.coords.reserve(size_t(g.nverts) * 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g.coords.push_back(i);
            g.coords.push_back(j);
        }
    std::vector<std::vector<int32_t>> lists(g.nverts);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& l = lists[i * n + j];
            for (int jj = 0; jj < n; ++jj)
                if (jj != j) l.push_back(int32_t(i * n + jj));
            for (int ii = 0; ii < n; ++ii)
                if (ii != i) l.push_back(int32_t(ii * n + j));
            std::sort(l.begin(), l.end());
        }
    detail::finish_csr(g, lists);
    return g;
}

// Cartesian product of two complete bipartite graphs K_{n,n}, laid out on a
// 2n x 2n board: cells adjacent iff same row and exactly one column index is
// < n, or same column and exactly one row index is < n.
inline Graph build_biclique_product(int n) {
    if (n < 1) throw std::invalid_argument("biclique: part size must be >= 1");
    const int side = 2 * n;
    Graph g;
    g.family = GraphFamily::biclique;
    g.params["n"] = n;
    g.dim = 2;
    g.nverts = side * side;
    g.coords.reserve(size_t(g.nverts) * 2);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            g.coords.push_back(i);
            g.coords.push_back(j);
        }
    std::vector<std::vector<int32_t>> lists(g.nverts);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            auto& l = lists[i * side + j];
            for (int jj = 0; jj < side; ++jj)
                if ((j < n) != (jj < n)) l.push_back(int32_t(i * side + jj));
            for (int ii = 0; ii < side; ++ii)
                if ((i < n) != (ii < n)) l.push_back(int32_t(ii * side + j));
            std::sort(l.begin(), l.end());
        }
    detail::finish_csr(g, lists);
    return g;
}

// Ad hoc graph from an undirected edge list; payloads default to vertex ids.
inline Graph from_edges(int nverts, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::vector<int>> payloads = {}) {
    if (nverts < 1) throw std::invalid_argument("from_edges: need at least one vertex");
    Graph g;
    g.family = GraphFamily::general;
    g.params["vertices"] = nverts;
    g.nverts = nverts;
    if (payloads.empty()) {
        g.dim = 1;
        for (int v = 0; v < nverts; ++v) g.coords.push_back(v);
    } else {
        if (int(payloads.size()) != nverts)
            throw std::invalid_argument("from_edges: payload count mismatch");
        g.dim = int(payloads[0].size());
        for (const auto& p : payloads) {
            if (int(p.size()) != g.dim)
                throw std::invalid_argument("from_edges: ragged payloads");
            g.coords.insert(g.coords.end(), p.begin(), p.end());
        }
        g.sorted_payloads = std::is_sorted(payloads.begin(), payloads.end());
    }
    std::vector<std::vector<int32_t>> lists(nverts);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= nverts || v >= nverts)
            throw std::invalid_argument("from_edges: endpoint out of range");
        if (u == v) throw std::invalid_argument("from_edges: self loop");
        lists[u].push_back(int32_t(v));
        lists[v].push_back(int32_t(u));
    }
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    detail::finish_csr(g, lists);
    return g;
}

}  // namespace nonrep
