#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nonrep/graph.hpp"
#include "nonrep/word.hpp"

namespace nonrep {

enum class ConstructionKind {
    diagonal,
    grid12_base,
    grid12,
    strong16,
    bad_product,
    tensor,
    cart3d28,
    rook,
    biclique,
};

inline const char* to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::diagonal: return "diagonal";
        case ConstructionKind::grid12_base: return "grid12-base";
        case ConstructionKind::grid12: return "grid12";
        case ConstructionKind::strong16: return "strong16";
        case ConstructionKind::bad_product: return "bad-product";
        case ConstructionKind::tensor: return "tensor";
        case ConstructionKind::cart3d28: return "cart3d28";
        case ConstructionKind::rook: return "rook";
        default: return "biclique";
    }
}

inline ConstructionKind construction_from_string(const std::string& s) {
    for (auto k : {ConstructionKind::diagonal, ConstructionKind::grid12_base,
                   ConstructionKind::grid12, ConstructionKind::strong16,
                   ConstructionKind::bad_product, ConstructionKind::tensor,
                   ConstructionKind::cart3d28, ConstructionKind::rook,
                   ConstructionKind::biclique})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown construction: " + s);
}

inline bool is_lattice_kind(ConstructionKind k) {
    return k != ConstructionKind::rook && k != ConstructionKind::biclique;
}

// Adjacency rule each construction is meant for.
inline Adjacency adjacency_for(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::strong16:
        case ConstructionKind::bad_product: return Adjacency::strong;
        case ConstructionKind::tensor: return Adjacency::tensor;
        default: return Adjacency::cartesian;
    }
}

// A coloring construction instance: which scheme, over which region (lattice
// schemes) or board size (rook/biclique), with explicit word-index offsets.
struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::grid12;
    LatticeRegion region;
    int n = 0;                       // rook / biclique board parameter
    std::vector<int> base;           // tensor component base point
    std::vector<long long> offsets;  // one shift per word slot; empty = auto
};

// number of word-index slots (and offsets) the scheme uses
inline int offset_slot_count(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::diagonal: return 1;
        case ConstructionKind::grid12_base:
        case ConstructionKind::grid12:
        case ConstructionKind::strong16:
        case ConstructionKind::bad_product: return 2;
        case ConstructionKind::tensor: return spec.region.dim();
        case ConstructionKind::cart3d28: return 3;
        default: return 0;
    }
}

namespace detail {

inline long long floor_div2(long long x) { return x >> 1; }

inline int pos_mod(long long x, int m) {
    int r = int(x % m);
    return r < 0 ? r + m : r;
}

// split bit used by the tensor scheme: h(x) = floor(x/2) mod 2
inline int half_parity(long long x) { return int(floor_div2(x) & 1); }

inline void for_each_point(const LatticeRegion& r,
                           const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> p = r.lo;
    const long long n = r.vertex_count();
    for (long long v = 0; v < n; ++v) {
        fn(p);
        for (int i = r.dim() - 1; i >= 0; --i) {
            if (++p[i] <= r.hi[i]) break;
            p[i] = r.lo[i];
        }
    }
}

// raw (un-offset) word indices a scheme evaluates at p, as (slot, index)
inline void raw_indices(const ConstructionSpec& spec, std::span<const int> p,
                        std::vector<std::pair<int, long long>>& out) {
    out.clear();
    const long long x = p[0], y = p.size() > 1 ? p[1] : 0;
    switch (spec.kind) {
        case ConstructionKind::diagonal:
            out.emplace_back(0, x - y);
            break;
        case ConstructionKind::grid12_base:
        case ConstructionKind::grid12:
            if (((x + y) & 1) == 0) out.emplace_back(0, (x - y) / 2);
            else out.emplace_back(1, (x + y - 1) / 2);
            break;
        case ConstructionKind::strong16:
        case ConstructionKind::bad_product:
            out.emplace_back(0, x);
            out.emplace_back(1, y);
            break;
        case ConstructionKind::tensor: {
            const int n = int(p.size());
            const long long last = p[n - 1];
            if (last & 1) out.emplace_back(0, (last - 1) / 2);
            else
                for (int i = 0; i + 1 < n; ++i) out.emplace_back(1 + i, p[i]);
            break;
        }
        case ConstructionKind::cart3d28: {
            const long long lam = x + y + p[2];
            if (lam & 1) out.emplace_back(0, (lam - 1) / 2);
            else {
                out.emplace_back(1, x - lam / 2);  // u along (1,-1,0)
                out.emplace_back(2, -p[2]);        // w along (0,1,-1)
            }
            break;
        }
        default:
            break;  // rook / biclique use no words
    }
}

}  // namespace detail

// Validates a spec, fixes the adjacency implied by the kind, defaults the
// tensor base to the region corner, and resolves automatic offsets (smallest
// shifts making every in-region word index nonnegative).
inline ConstructionSpec normalized(const ConstructionSpec& raw) {
    ConstructionSpec spec = raw;
    if (is_lattice_kind(spec.kind)) {
        spec.region.adjacency = adjacency_for(spec.kind);
        spec.region.validate();
        const int want = spec.kind == ConstructionKind::cart3d28 ? 3
                         : spec.kind == ConstructionKind::tensor ? -2
                                                                 : 2;
        if (want > 0 && spec.region.dim() != want)
            throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                        ": region must be " + std::to_string(want) + "-dimensional");
        if (want < 0 && spec.region.dim() < -want)
            throw std::invalid_argument(std::string(to_string(spec.kind)) +
                                        ": region must have dimension >= " + std::to_string(-want));
        if (spec.kind == ConstructionKind::tensor) {
            if (spec.base.empty()) spec.base = spec.region.lo;
            if (!spec.region.contains(spec.base))
                throw std::invalid_argument("tensor: base outside region");
        } else if (!spec.base.empty()) {
            throw std::invalid_argument("base is only meaningful for tensor");
        }
        const int slots = offset_slot_count(spec);
        if (spec.offsets.empty()) {
            std::vector<long long> lo(slots, LLONG_MAX);
            std::vector<std::pair<int, long long>> idx;
            detail::for_each_point(spec.region, [&](std::span<const int> p) {
                detail::raw_indices(spec, p, idx);
                for (auto [s, i] : idx) lo[s] = std::min(lo[s], i);
            });
            spec.offsets.assign(slots, 0);
            for (int s = 0; s < slots; ++s)
                if (lo[s] != LLONG_MAX && lo[s] < 0) spec.offsets[s] = -lo[s];
        } else if (int(spec.offsets.size()) != slots) {
            throw std::invalid_argument("expected " + std::to_string(slots) + " offsets");
        }
        if (spec.n != 0) throw std::invalid_argument("n is only meaningful for rook/biclique");
    } else {
        if (spec.kind == ConstructionKind::rook && (spec.n < 4 || spec.n % 2 != 0))
            throw std::invalid_argument("rook: n must be even and >= 4");
        if (spec.kind == ConstructionKind::biclique && spec.n < 1)
            throw std::invalid_argument("biclique: n must be >= 1");
        if (!spec.region.lo.empty() || !spec.base.empty())
            throw std::invalid_argument("region/base are only meaningful for lattice constructions");
        if (!spec.offsets.empty())
            throw std::invalid_argument("board constructions take no offsets");
    }
    return spec;
}

// claimed palette ceiling for the construction
inline size_t claimed_palette_bound(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::diagonal: return 4;
        case ConstructionKind::grid12_base: return 8;
        case ConstructionKind::grid12: return 12;
        case ConstructionKind::strong16: return 16;
        case ConstructionKind::bad_product: return 12;
        case ConstructionKind::tensor: {
            const int n = spec.region.dim();
            size_t even = 1;
            for (int i = 0; i + 1 < n; ++i) even *= 4;
            return even + 4 * (size_t(1) << (n - 1));
        }
        case ConstructionKind::cart3d28: return 28;
        case ConstructionKind::rook: return size_t(spec.n) * spec.n / 2;
        default:
            return spec.n % 2 == 0 && spec.n >= 4
                       ? 1 + size_t(spec.n) * spec.n + size_t(spec.n) * spec.n / 2
                       : 1 + 2 * size_t(spec.n) * spec.n;
    }
}

// Evaluates a lattice scheme's color label at single points.  Holds the word
// windows the region needs, sized during construction.
class Colorizer {
public:
    explicit Colorizer(const ConstructionSpec& raw) : spec_(normalized(raw)) {
        if (!is_lattice_kind(spec_.kind))
            throw std::invalid_argument("Colorizer: board constructions color whole graphs");
        const int slots = offset_slot_count(spec_);
        std::vector<long long> hi(slots, LLONG_MIN);
        std::vector<std::pair<int, long long>> idx;
        detail::for_each_point(spec_.region, [&](std::span<const int> p) {
            detail::raw_indices(spec_, p, idx);
            for (auto [s, i] : idx) hi[s] = std::max(hi[s], i);
        });
        words_.resize(slots);
        for (int s = 0; s < slots; ++s) {
            if (hi[s] == LLONG_MIN) continue;  // slot unused on this region
            const long long len = hi[s] + spec_.offsets[s] + 1;
            if (len > 0)
                words_[s] = (spec_.kind == ConstructionKind::bad_product && s == 0
                                 ? generate_thue(size_t(len))
                                 : generate_thue_star(size_t(len)))
                                .symbols;
        }
    }

    const ConstructionSpec& spec() const { return spec_; }

    std::string label(std::span<const int> p) const {
        if (!spec_.region.contains(p))
            throw std::invalid_argument("point outside region");
        if (spec_.kind == ConstructionKind::tensor &&
            !same_tensor_component(p, spec_.base))
            throw std::invalid_argument("point outside tensor component");
        const long long x = p[0], y = p.size() > 1 ? p[1] : 0;
        switch (spec_.kind) {
            case ConstructionKind::diagonal:
                return std::string(1, "abcd"[at(0, x - y)]);
            case ConstructionKind::grid12_base:
            case ConstructionKind::grid12: {
                if (((x + y) & 1) == 0)
                    return std::string(1, "abcd"[at(0, (x - y) / 2)]);
                std::string l(1, "xyzw"[at(1, (x + y - 1) / 2)]);
                if (spec_.kind == ConstructionKind::grid12)
                    l += (x & 1) ? '1' : '2';
                return l;
            }
            case ConstructionKind::strong16:
                return {"abcd"[at(0, x)], "xyzw"[at(1, y)]};
            case ConstructionKind::bad_product:
                return {"abc"[at(0, x)], "abcd"[at(1, y)]};
            case ConstructionKind::tensor: {
                const int n = int(p.size());
                const long long last = p[n - 1];
                std::string l;
                if (last & 1) {
                    l += "abcd"[at(0, (last - 1) / 2)];
                    for (int i = 0; i + 1 < n; ++i)
                        l += char('0' + detail::half_parity(p[i]));
                } else {
                    for (int i = 0; i + 1 < n; ++i)
                        l += "abcd"[at(1 + i, p[i])];
                }
                return l;
            }
            default: {  // cart3d28
                const long long lam = x + y + p[2];
                if (lam & 1) {
                    std::string l(1, "abcd"[at(0, (lam - 1) / 2)]);
                    l += char('0' + detail::pos_mod(x - y, 3));
                    return l;
                }
                return {"abcd"[at(1, x - lam / 2)], "abcd"[at(2, -p[2])]};
            }
        }
    }

    // every label the scheme could emit, in canonical order
    std::vector<std::string> universe() const {
        std::vector<std::string> u;
        switch (spec_.kind) {
            case ConstructionKind::diagonal:
                return {"a", "b", "c", "d"};
            case ConstructionKind::grid12_base:
                return {"a", "b", "c", "d", "x", "y", "z", "w"};
            case ConstructionKind::grid12:
                u = {"a", "b", "c", "d"};
                for (char b : {'x', 'y', 'z', 'w'})
                    for (char s : {'1', '2'}) u.push_back({b, s});
                return u;
            case ConstructionKind::strong16:
                for (char a : {'a', 'b', 'c', 'd'})
                    for (char b : {'x', 'y', 'z', 'w'}) u.push_back({a, b});
                return u;
            case ConstructionKind::bad_product:
                for (char a : {'a', 'b', 'c'})
                    for (char b : {'a', 'b', 'c', 'd'}) u.push_back({a, b});
                return u;
            case ConstructionKind::tensor: {
                const int n = spec_.region.dim();
                size_t even = 1;
                for (int i = 0; i + 1 < n; ++i) even *= 4;
                for (size_t t = 0; t < even; ++t) {
                    std::string l;
                    size_t rem = t;
                    std::vector<int> digit(n - 1);
                    for (int i = n - 2; i >= 0; --i, rem /= 4) digit[i] = int(rem % 4);
                    for (int i = 0; i + 1 < n; ++i) l += "abcd"[digit[i]];
                    u.push_back(l);
                }
                for (char a : {'a', 'b', 'c', 'd'})
                    for (size_t m = 0; m < (size_t(1) << (n - 1)); ++m) {
                        std::string l(1, a);
                        for (int i = n - 2; i >= 0; --i) l += char('0' + (m >> i & 1));
                        u.push_back(l);
                    }
                return u;
            }
            default:  // cart3d28
                for (char a : {'a', 'b', 'c', 'd'})
                    for (char b : {'a', 'b', 'c', 'd'}) u.push_back({a, b});
                for (char a : {'a', 'b', 'c', 'd'})
                    for (char r : {'0', '1', '2'}) u.push_back({a, r});
                return u;
        }
    }

private:
    uint8_t at(int slot, long long raw) const {
        const long long idx = raw + spec_.offsets[slot];
        if (idx < 0)
            throw std::invalid_argument("negative word index after offset");
        if (size_t(idx) >= words_[slot].size())
            throw std::invalid_argument("word index beyond sized window");
        return words_[slot][size_t(idx)];
    }

    ConstructionSpec spec_;
    std::vector<std::vector<uint8_t>> words_;
};

// A graph plus a total coloring and its palette.  vertex_type is only
// populated for rook boards (1 = yellow, 0 = blue).
struct ColoredGraph {
    Graph graph;
    std::vector<int> color;
    std::vector<std::string> palette;
    std::vector<uint8_t> vertex_type;
    std::optional<ConstructionSpec> spec;

    const std::string& label_of(int v) const { return palette.at(color.at(v)); }
};

inline nlohmann::ordered_json construction_json(const ConstructionSpec& spec) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(spec.kind);
    if (is_lattice_kind(spec.kind)) {
        j["region"] = detail::region_json(spec.region);
        if (spec.kind == ConstructionKind::tensor) j["base"] = spec.base;
    } else {
        j["n"] = spec.n;
    }
    return j;
}

namespace detail {

inline int rook_color_id(int n, int i, int j) {
    const int m = n / 2;
    if (j < m) return i * m + j;
    const int jr = j - m;
    if (i % 2 == 1) return (i - 1) * m + jr;  // odd rows copy the row above
    // even rows take the row above (wrapping) shifted right by one cell
    return ((i - 1 + n) % n) * m + (jr - 1 + m) % m;
}

inline bool rook_is_yellow(int n, int i, int j) {
    return j < n / 2 ? i % 2 == 0 : i % 2 == 1;
}

}  // namespace detail

// Rook board coloring: left half rows carry fresh colors, right halves copy a
// neighboring row's left half (odd rows directly, even rows shifted with
// wrap-around), using n²/2 colors in total, each exactly twice.
inline ColoredGraph color_rook(int n) {
    ConstructionSpec spec;
    spec.kind = ConstructionKind::rook;
    spec.n = n;
    spec = normalized(spec);
    ColoredGraph cg;
    cg.graph = build_rook(n);
    cg.spec = spec;
    const int ncolors = n * n / 2;
    cg.palette.reserve(ncolors);
    for (int c = 0; c < ncolors; ++c) cg.palette.push_back(std::to_string(c));
    cg.color.reserve(n * n);
    cg.vertex_type.reserve(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cg.color.push_back(detail::rook_color_id(n, i, j));
            cg.vertex_type.push_back(detail::rook_is_yellow(n, i, j) ? 1 : 0);
        }
    return cg;
}

// Biclique-product board: upper-left and lower-right quadrants share color 0,
// the lower-left quadrant gets n² fresh colors, and the upper-right quadrant
// reuses the rook pattern (fresh palette block) when n is even and >= 4,
// falling back to n² fresh colors otherwise.
inline ColoredGraph color_biclique(int n) {
    ConstructionSpec spec;
    spec.kind = ConstructionKind::biclique;
    spec.n = n;
    spec = normalized(spec);
    ColoredGraph cg;
    cg.graph = build_biclique_product(n);
    cg.spec = spec;
    const bool patterned = n % 2 == 0 && n >= 4;
    const int ncolors = 1 + n * n + (patterned ? n * n / 2 : n * n);
    cg.palette.reserve(ncolors);
    for (int c = 0; c < ncolors; ++c) cg.palette.push_back(std::to_string(c));
    const int side = 2 * n;
    cg.color.reserve(side * side);
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            int c;
            if ((i < n) == (j < n)) c = 0;
            else if (i >= n) c = 1 + (i - n) * n + j;
            else if (patterned) c = 1 + n * n + detail::rook_color_id(n, i, j - n);
            else c = 1 + n * n + i * n + (j - n);
            cg.color.push_back(c);
        }
    return cg;
}

// Materializes any construction over its region/board.
inline ColoredGraph make_colored_graph(const ConstructionSpec& raw) {
    ConstructionSpec spec = normalized(raw);
    if (spec.kind == ConstructionKind::rook) return color_rook(spec.n);
    if (spec.kind == ConstructionKind::biclique) return color_biclique(spec.n);
    Colorizer cz(spec);
    ColoredGraph cg;
    cg.spec = cz.spec();
    Graph box = build_box(cz.spec().region);
    cg.graph = spec.kind == ConstructionKind::tensor
                   ? tensor_component(box, cz.spec().base)
                   : std::move(box);
    const auto universe = cz.universe();
    std::map<std::string, int> rank;
    for (size_t i = 0; i < universe.size(); ++i) rank[universe[i]] = int(i);
    std::vector<int> vrank(cg.graph.nverts);
    std::vector<bool> used(universe.size(), false);
    for (int v = 0; v < cg.graph.nverts; ++v) {
        const auto it = rank.find(cz.label(cg.graph.payload(v)));
        if (it == rank.end()) throw std::logic_error("label outside universe");
        vrank[v] = it->second;
        used[it->second] = true;
    }
    std::vector<int> compact(universe.size(), -1);
    for (size_t i = 0; i < universe.size(); ++i)
        if (used[i]) {
            compact[i] = int(cg.palette.size());
            cg.palette.push_back(universe[i]);
        }
    cg.color.resize(cg.graph.nverts);
    for (int v = 0; v < cg.graph.nverts; ++v) cg.color[v] = compact[vrank[v]];
    return cg;
}

// ---- single-point color functions -------------------------------------------

namespace detail {

inline std::string point_color(ConstructionKind kind, std::span<const int> p,
                               const ConstructionSpec& spec) {
    if (spec.kind != kind)
        throw std::invalid_argument("spec kind does not match color function");
    return Colorizer(spec).label(p);
}

}  // namespace detail

inline std::string color_diagonal(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::diagonal, p, s);
}
inline std::string color_grid12_base(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::grid12_base, p, s);
}
inline std::string color_grid12(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::grid12, p, s);
}
inline std::string color_strong16(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::strong16, p, s);
}
inline std::string color_bad_product(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::bad_product, p, s);
}
inline std::string color_tensor(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::tensor, p, s);
}
inline std::string color_cart3d28(std::span<const int> p, const ConstructionSpec& s) {
    return detail::point_color(ConstructionKind::cart3d28, p, s);
}

// ---- serialization ----------------------------------------------------------

inline nlohmann::ordered_json to_json(const ColoredGraph& cg) {
    if (!cg.spec) throw std::invalid_argument("ad hoc colorings have no file form");
    nlohmann::ordered_json j;
    j["construction"] = construction_json(*cg.spec);
    j["offsets"] = cg.spec->offsets;
    j["palette"] = cg.palette;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (int v = 0; v < cg.graph.nverts; ++v) {
        nlohmann::ordered_json cell = nlohmann::ordered_json::array();
        for (int x : cg.graph.payload(v)) cell.push_back(x);
        cell.push_back(cg.color[v]);
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    return j;
}

inline std::string to_csv(const ColoredGraph& cg) {
    std::string out = cg.graph.dim == 3 ? "x,y,z,color\n" : "x,y,color\n";
    for (int v = 0; v < cg.graph.nverts; ++v) {
        std::string line;
        for (int x : cg.graph.payload(v)) line += std::to_string(x) + ",";
        line += cg.label_of(v);
        out += line + "\n";
    }
    return out;
}

inline ConstructionSpec spec_from_json(const nlohmann::json& j) {
    ConstructionSpec spec;
    const auto& c = j.at("construction");
    spec.kind = construction_from_string(c.at("kind").get<std::string>());
    if (is_lattice_kind(spec.kind)) {
        for (const auto& b : c.at("region")) {
            spec.region.lo.push_back(b.at(0).get<int>());
            spec.region.hi.push_back(b.at(1).get<int>());
        }
        if (c.contains("base")) spec.base = c.at("base").get<std::vector<int>>();
    } else {
        spec.n = c.at("n").get<int>();
    }
    if (j.contains("offsets")) spec.offsets = j.at("offsets").get<std::vector<long long>>();
    return spec;
}

// Rebuilds the graph from the construction echo and takes colors from the
// file cells, so edited colorings are verified as written.
inline ColoredGraph colored_graph_from_json(const nlohmann::json& j) {
    ConstructionSpec spec = normalized(spec_from_json(j));
    ColoredGraph fresh = make_colored_graph(spec);
    ColoredGraph cg;
    cg.graph = std::move(fresh.graph);
    cg.vertex_type = std::move(fresh.vertex_type);
    cg.spec = spec;
    cg.palette = j.at("palette").get<std::vector<std::string>>();
    if (cg.palette.empty()) throw std::invalid_argument("coloring file: empty palette");
    const auto& cells = j.at("cells");
    if (int(cells.size()) != cg.graph.nverts)
        throw std::invalid_argument("coloring file: cell count mismatch");
    cg.color.assign(cg.graph.nverts, -1);
    std::vector<int> p;
    for (const auto& cell : cells) {
        if (int(cell.size()) != cg.graph.dim + 1)
            throw std::invalid_argument("coloring file: malformed cell");
        p.clear();
        for (int i = 0; i < cg.graph.dim; ++i) p.push_back(cell.at(i).get<int>());
        const int v = cg.graph.find_vertex(p);
        if (v < 0) throw std::invalid_argument("coloring file: cell outside graph");
        if (cg.color[v] >= 0) throw std::invalid_argument("coloring file: duplicate cell");
        const int cid = cell.at(cg.graph.dim).get<int>();
        if (cid < 0 || size_t(cid) >= cg.palette.size())
            throw std::invalid_argument("coloring file: color id out of range");
        cg.color[v] = cid;
    }
    return cg;
}

}  // namespace nonrep
