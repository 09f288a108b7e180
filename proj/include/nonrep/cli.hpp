#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nonrep/coloring.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/svg.hpp"
#include "nonrep/verifier.hpp"
#include "nonrep/word.hpp"

namespace nonrep {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        const size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

inline long long parse_int(const std::string& s) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (...) {
        throw std::invalid_argument("bad integer: '" + s + "'");
    }
    if (s.empty() || used != s.size())
        throw std::invalid_argument("bad integer: '" + s + "'");
    return v;
}

// inclusive region syntax: lo:hi[,lo:hi[,lo:hi]]
inline LatticeRegion parse_region(const std::string& s) {
    LatticeRegion r;
    for (const auto& axis : split(s, ',')) {
        const auto b = split(axis, ':');
        if (b.size() != 2)
            throw std::invalid_argument("bad region axis: '" + axis + "' (want lo:hi)");
        r.lo.push_back(int(parse_int(b[0])));
        r.hi.push_back(int(parse_int(b[1])));
    }
    r.validate();
    return r;
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split(s, ',')) out.push_back(int(parse_int(part)));
    return out;
}

struct SpecArgs {
    std::string construction, region, base, offsets;
    int n = 0;
};

inline ConstructionSpec build_spec(const SpecArgs& a) {
    ConstructionSpec spec;
    spec.kind = construction_from_string(a.construction);
    if (is_lattice_kind(spec.kind)) {
        if (a.region.empty())
            throw std::invalid_argument("--region is required for lattice constructions");
        spec.region = parse_region(a.region);
    } else {
        if (a.n == 0) throw std::invalid_argument("--n is required for rook/biclique");
        spec.n = a.n;
        if (!a.region.empty())
            throw std::invalid_argument("--region does not apply to rook/biclique");
    }
    if (!a.base.empty()) spec.base = parse_int_list(a.base);
    if (!a.offsets.empty())
        for (int v : parse_int_list(a.offsets)) spec.offsets.push_back(v);
    return normalized(spec);
}

inline Graph parse_graph_spec(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 2)
        throw std::invalid_argument("bad graph spec: '" + s + "' (want family:size)");
    if (parts[0] == "path") {
        const int n = int(parse_int(parts[1]));
        if (n < 1) throw std::invalid_argument("path: need at least one vertex");
        LatticeRegion r;
        r.lo = {0};
        r.hi = {n - 1};
        return build_box(r);
    }
    if (parts[0] == "cycle") {
        const int n = int(parse_int(parts[1]));
        if (n < 3) throw std::invalid_argument("cycle: need at least three vertices");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        return from_edges(n, edges);
    }
    if (parts[0] == "grid") {
        const auto wh = split(parts[1], 'x');
        if (wh.size() != 2) throw std::invalid_argument("grid: want grid:AxB");
        LatticeRegion r;
        r.lo = {0, 0};
        r.hi = {int(parse_int(wh[0])) - 1, int(parse_int(wh[1])) - 1};
        r.validate();
        return build_box(r);
    }
    if (parts[0] == "rook") return build_rook(int(parse_int(parts[1])));
    throw std::invalid_argument("unknown graph family: '" + parts[0] + "'");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace detail

// Command-line front end; returns the process exit code
// (0 pass, 1 witness/finding, 2 usage or input error, 3 budget exhausted).
inline int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"non-repetitive colorings of grids, rook graphs and biclique products"};
    app.require_subcommand(1);

    // gen-word
    std::string gw_kind, gw_out, gw_format = "text";
    long long gw_length = 0;
    auto* gen_word = app.add_subcommand("gen-word", "generate a Thue or Thue-star word");
    gen_word->add_option("--kind", gw_kind, "thue | thue-star")
        ->required()
        ->check(CLI::IsMember({"thue", "thue-star"}));
    gen_word->add_option("--length", gw_length, "number of symbols (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_word->add_option("--out", gw_out, "output file (default stdout)");
    gen_word->add_option("--format", gw_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // color
    detail::SpecArgs c_args;
    std::string c_out, c_format = "json";
    auto* color = app.add_subcommand("color", "materialize a coloring over a region or board");
    color->add_option("--construction", c_args.construction, "construction kind")->required();
    color->add_option("--region", c_args.region, "inclusive box, e.g. 0:11,0:11");
    color->add_option("--n", c_args.n, "board parameter for rook/biclique");
    color->add_option("--base", c_args.base, "tensor component base point, e.g. 0,0");
    color->add_option("--offsets", c_args.offsets, "word-index offsets (default: auto)");
    color->add_option("--out", c_out, "output file");
    color->add_option("--format", c_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify
    detail::SpecArgs v_args;
    std::string v_file, v_out;
    long long v_max_len = 12, v_max_nodes = 1'000'000'000LL;
    int v_parallelism = 0;
    bool v_deterministic = false;
    auto* verify = app.add_subcommand("verify", "search a coloring for repetitive paths");
    auto* v_cons = verify->add_option("--construction", v_args.construction, "construction kind");
    auto* v_file_opt = verify->add_option("--file", v_file, "coloring JSON file");
    v_cons->excludes(v_file_opt);
    v_file_opt->excludes(v_cons);
    verify->add_option("--region", v_args.region, "inclusive box");
    verify->add_option("--n", v_args.n, "board parameter");
    verify->add_option("--base", v_args.base, "tensor component base point");
    verify->add_option("--offsets", v_args.offsets, "word-index offsets");
    verify->add_option("--max-len", v_max_len, "max path length 2k (even, default 12)");
    verify->add_option("--max-nodes", v_max_nodes, "search node cap")
        ->check(CLI::PositiveNumber);
    verify->add_option("--parallelism", v_parallelism, "worker count (0 = all cores)")
        ->envname("NONREP_PARALLELISM");
    verify->add_flag("--deterministic", v_deterministic,
                     "global witness tie-break and byte-stable reports");
    verify->add_option("--out", v_out, "report file");

    // check-word
    std::string cw_kind;
    long long cw_length = 0;
    int cw_kmax = 3;
    auto* check_word = app.add_subcommand("check-word",
                                          "square/palindrome scan and lazy-walk rigidity");
    check_word->add_option("--kind", cw_kind, "thue | thue-star")
        ->required()
        ->check(CLI::IsMember({"thue", "thue-star"}));
    check_word->add_option("--length", cw_length, "window length")
        ->required()
        ->check(CLI::PositiveNumber);
    check_word->add_option("--kmax", cw_kmax, "rigidity walk half-length (0 disables)");

    // pi
    std::string p_graph;
    int p_max_colors = 4;
    auto* pi = app.add_subcommand("pi", "exact Thue number of a tiny graph");
    pi->add_option("--graph", p_graph, "path:N | cycle:N | grid:AxB | rook:N")->required();
    pi->add_option("--max-colors", p_max_colors, "palette cap")->check(CLI::PositiveNumber);

    // render
    std::string r_file, r_out;
    auto* render = app.add_subcommand("render", "draw a coloring file as SVG");
    render->add_option("--file", r_file, "coloring JSON file")->required();
    render->add_option("--out", r_out, "SVG output file")->required();

    std::vector<const char*> argv;
    argv.push_back("nonrep");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_word->parsed()) {
            const Word w = gw_kind == "thue" ? generate_thue(size_t(gw_length))
                                             : generate_thue_star(size_t(gw_length));
            const std::string payload =
                gw_format == "json" ? w.to_json().dump(2) + "\n" : w.to_text() + "\n";
            if (gw_out.empty()) std::cout << payload;
            else detail::write_file(gw_out, payload);
            return 0;
        }
        if (color->parsed()) {
            const ColoredGraph cg = make_colored_graph(detail::build_spec(c_args));
            std::cout << "palette " << cg.palette.size() << "\n";
            if (!c_out.empty())
                detail::write_file(c_out, c_format == "csv" ? to_csv(cg)
                                                            : to_json(cg).dump(2) + "\n");
            return 0;
        }
        if (verify->parsed()) {
            if (v_file.empty() && v_args.construction.empty())
                throw std::invalid_argument("verify needs --construction or --file");
            const ColoredGraph cg =
                v_file.empty() ? make_colored_graph(detail::build_spec(v_args))
                               : colored_graph_from_json(detail::read_json_file(v_file));
            if (v_max_len < 2 || v_max_len % 2 != 0)
                throw std::invalid_argument("--max-len must be even and >= 2");
            SearchBudget budget;
            budget.max_half_length = int(v_max_len / 2);
            budget.max_nodes = uint64_t(v_max_nodes);
            budget.parallelism = v_parallelism;
            budget.deterministic = v_deterministic;
            const VerifyReport rep = find_repetitive_path(cg, budget);
            const std::string payload = report_to_json(rep, cg).dump(2) + "\n";
            std::cout << payload;
            if (!v_out.empty()) detail::write_file(v_out, payload);
            switch (rep.status) {
                case VerifyStatus::pass: return 0;
                case VerifyStatus::witness: return 1;
                default: return 3;
            }
        }
        if (check_word->parsed()) {
            const bool star = cw_kind == "thue-star";
            const Word w = star ? generate_thue_star(size_t(cw_length))
                                : generate_thue(size_t(cw_length));
            nlohmann::ordered_json j;
            j["kind"] = cw_kind;
            j["length"] = cw_length;
            bool clean = true;
            const auto square = find_square(w);
            j["squareFree"] = !square.has_value();
            clean = clean && !square;
            if (star) {
                const auto pal = find_palindrome(w);
                j["palindromeFree"] = !pal.has_value();
                clean = clean && !pal;
            }
            if (cw_kmax > 0) {
                const auto ce = check_lazy_walk_rigidity(w, cw_kmax);
                j["lazyWalkCounterexamples"] = ce.size();
                clean = clean && ce.empty();
            }
            std::cout << j.dump(2) << "\n";
            return clean ? 0 : 1;
        }
        if (pi->parsed()) {
            const Graph g = detail::parse_graph_spec(p_graph);
            const PiResult res = exact_pi(g, p_max_colors);
            if (!res.pi) {
                std::cout << "exceeds " << p_max_colors << "\n";
                return 0;
            }
            std::cout << "pi " << *res.pi << "\n";
            std::string cert;
            for (size_t i = 0; i < res.coloring.size(); ++i)
                cert += (i ? "," : "") + std::to_string(res.coloring[i]);
            std::cout << "coloring " << cert << "\n";
            return 0;
        }
        if (render->parsed()) {
            const ColoredGraph cg =
                colored_graph_from_json(detail::read_json_file(r_file));
            detail::write_file(r_out, render_svg(cg));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace nonrep
