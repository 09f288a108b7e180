#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nonrep/coloring.hpp"

using nonrep::Adjacency;
using nonrep::ColoredGraph;
using nonrep::Colorizer;
using nonrep::ConstructionKind;
using nonrep::ConstructionSpec;
using nonrep::LatticeRegion;

namespace {

ConstructionSpec lattice_spec(ConstructionKind kind, std::vector<int> lo,
                              std::vector<int> hi,
                              std::vector<long long> offsets = {}) {
    ConstructionSpec s;
    s.kind = kind;
    s.region.lo = std::move(lo);
    s.region.hi = std::move(hi);
    s.offsets = std::move(offsets);
    return s;
}

ConstructionSpec board_spec(ConstructionKind kind, int n) {
    ConstructionSpec s;
    s.kind = kind;
    s.n = n;
    return s;
}

std::string at(const Colorizer& cz, std::vector<int> p) { return cz.label(p); }

std::string board_label(const ColoredGraph& cg, int i, int j) {
    std::vector<int> p{i, j};
    return cg.label_of(cg.graph.find_vertex(p));
}

}  // namespace

TEST_CASE("construction names round trip") {
    for (const char* name : {"diagonal", "grid12-base", "grid12", "strong16",
                             "bad-product", "tensor", "cart3d28", "rook", "biclique"})
        CHECK(std::string(nonrep::to_string(nonrep::construction_from_string(name))) == name);
    CHECK_THROWS_AS(nonrep::construction_from_string("grid13"), std::invalid_argument);
}

TEST_CASE("diagonal scheme samples") {
    Colorizer cz(lattice_spec(ConstructionKind::diagonal, {0, 0}, {9, 9}, {0}));
    CHECK(at(cz, {5, 5}) == "d");
    CHECK(at(cz, {1, 0}) == "b");
    CHECK(at(cz, {3, 2}) == at(cz, {4, 3}));  // constant along diagonals
    CHECK_THROWS_WITH(at(cz, {0, 1}), "negative word index after offset");

    Colorizer autod(lattice_spec(ConstructionKind::diagonal, {0, 0}, {9, 9}));
    CHECK(autod.spec().offsets == std::vector<long long>{9});
    CHECK(at(autod, {0, 9}) == "d");  // smallest diagonal now reads index 0
}

TEST_CASE("grid12-base scheme samples") {
    Colorizer cz(lattice_spec(ConstructionKind::grid12_base, {0, 0}, {7, 7}, {0, 0}));
    CHECK(at(cz, {0, 0}) == "d");
    CHECK(at(cz, {1, 0}) == "w");
    CHECK(at(cz, {2, 0}) == "b");   // even sum: letter from (x-y)/2 = 1
    CHECK(at(cz, {0, 1}) == "w");   // odd sum depends only on x+y
    CHECK(at(cz, {3, 0}) == at(cz, {0, 3}));
}

TEST_CASE("grid12 scheme adds the parity tag on odd cells") {
    Colorizer cz(lattice_spec(ConstructionKind::grid12, {0, 0}, {7, 7}, {0, 0}));
    CHECK(at(cz, {0, 0}) == "d");    // even cells: no tag
    CHECK(at(cz, {1, 0}) == "w1");   // odd x tags 1
    CHECK(at(cz, {0, 1}) == "w2");   // even x tags 2
    CHECK(at(cz, {2, 1}) == "y2");
    CHECK(at(cz, {1, 2}) == "y1");
}

TEST_CASE("strong16 scheme is a product of two words") {
    Colorizer cz(lattice_spec(ConstructionKind::strong16, {0, 0}, {20, 20}, {0, 0}));
    CHECK(at(cz, {0, 0}) == "dw");
    CHECK(at(cz, {1, 2}) == "bz");
    CHECK(at(cz, {1, 5}) == "bz");  // second letter repeats with the word
}

TEST_CASE("bad-product scheme mixes the two generators") {
    Colorizer cz(lattice_spec(ConstructionKind::bad_product, {0, 0}, {20, 20}, {0, 0}));
    CHECK(at(cz, {0, 0}) == "ad");
    CHECK(at(cz, {1, 1}) == "bb");
    CHECK(at(cz, {2, 2}) == "cc");
}

TEST_CASE("tensor scheme splits odd and even layers") {
    auto spec = lattice_spec(ConstructionKind::tensor, {0, 0}, {9, 9});
    Colorizer cz(spec);
    CHECK(at(cz, {0, 0}) == "d");
    CHECK(at(cz, {1, 1}) == "d0");
    CHECK(at(cz, {3, 1}) == "d1");  // split bit comes from the leading coordinate

    // even layers ignore the last coordinate's value
    auto other = spec;
    other.base = {1, 0};
    Colorizer oz(other);
    CHECK(at(oz, {3, 0}) == at(oz, {3, 2}));
    CHECK(at(oz, {3, 0}) == at(oz, {3, 4}));
}

TEST_CASE("cart3d28 scheme samples") {
    // zero offsets reproduce the raw word values at the origin corner
    Colorizer zero(lattice_spec(ConstructionKind::cart3d28, {0, 0, 0}, {5, 5, 5},
                                {0, 0, 0}));
    CHECK(at(zero, {0, 0, 1}) == "d0");
    CHECK(at(zero, {0, 0, 0}) == "dd");
    CHECK(at(zero, {1, 1, 0}) == at(zero, {0, 0, 0}));
    CHECK_THROWS_WITH(at(zero, {0, 1, 1}), "negative word index after offset");

    Colorizer cz(lattice_spec(ConstructionKind::cart3d28, {0, 0, 0}, {5, 5, 5}));
    CHECK(cz.spec().offsets == std::vector<long long>{0, 5, 5});

    // all even-sum cells are invariant under the (1,1,0) shift
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z <= 5; ++z)
                if ((x + y + z) % 2 == 0)
                    CHECK(at(cz, {x, y, z}) == at(cz, {x + 1, y + 1, z}));
}

TEST_CASE("offsets shift word indices exactly") {
    Colorizer shifted(lattice_spec(ConstructionKind::diagonal, {0, 0}, {8, 8}, {7}));
    Colorizer moved(lattice_spec(ConstructionKind::diagonal, {1, 0}, {9, 8}, {6}));
    for (int x = 0; x <= 8; ++x)
        CHECK(at(shifted, {x, 0}) == at(moved, {x + 1, 0}));

    Colorizer a(lattice_spec(ConstructionKind::grid12_base, {0, 0}, {8, 8}, {5, 1}));
    Colorizer b(lattice_spec(ConstructionKind::grid12_base, {1, 1}, {9, 9}, {5, 0}));
    for (int x = 0; x <= 8; ++x)
        for (int y = 0; y <= 8; ++y) {
            std::vector<int> p{x, y}, q{x + 1, y + 1};
            CHECK(a.label(p) == b.label(q));
        }
}

TEST_CASE("palette sizes stay within the claimed bounds") {
    struct Case {
        ConstructionSpec spec;
        size_t expected;
    };
    std::vector<Case> cases{
        {lattice_spec(ConstructionKind::diagonal, {0, 0}, {9, 9}), 4},
        {lattice_spec(ConstructionKind::grid12_base, {0, 0}, {11, 11}), 8},
        {lattice_spec(ConstructionKind::grid12, {0, 0}, {11, 11}), 12},
        {lattice_spec(ConstructionKind::strong16, {0, 0}, {20, 20}), 16},
        {lattice_spec(ConstructionKind::bad_product, {0, 0}, {20, 20}), 12},
        {lattice_spec(ConstructionKind::tensor, {0, 0}, {9, 9}), 11},
        {lattice_spec(ConstructionKind::tensor, {0, 0, 0}, {7, 7, 7}), 21},
        {lattice_spec(ConstructionKind::cart3d28, {0, 0, 0}, {5, 5, 5}), 28},
        {board_spec(ConstructionKind::rook, 4), 8},
        {board_spec(ConstructionKind::biclique, 4), 25},
        {board_spec(ConstructionKind::biclique, 2), 9},
    };
    for (const auto& c : cases) {
        auto cg = nonrep::make_colored_graph(c.spec);
        INFO(nonrep::to_string(c.spec.kind));
        CHECK(cg.palette.size() == c.expected);
        CHECK(cg.palette.size() <= nonrep::claimed_palette_bound(nonrep::normalized(c.spec)));
        CHECK(int(cg.color.size()) == cg.graph.nverts);
        for (int col : cg.color) {
            CHECK(col >= 0);
            CHECK(size_t(col) < cg.palette.size());
        }
    }
}

TEST_CASE("grid12 auto offsets cover the region") {
    auto cg = nonrep::make_colored_graph(
        lattice_spec(ConstructionKind::grid12, {0, 0}, {11, 11}));
    REQUIRE(cg.spec.has_value());
    CHECK(cg.spec->offsets == std::vector<long long>{5, 0});
    CHECK(cg.graph.nverts == 144);
}

TEST_CASE("rook board coloring uses each color exactly twice") {
    auto cg = nonrep::color_rook(4);
    CHECK(cg.palette.size() == 8);
    REQUIRE(cg.graph.nverts == 16);
    REQUIRE(cg.vertex_type.size() == 16);

    // frozen 4x4 board
    const int expected[4][4] = {
        {0, 1, 7, 6},
        {2, 3, 0, 1},
        {4, 5, 3, 2},
        {6, 7, 4, 5},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(board_label(cg, i, j) == std::to_string(expected[i][j]));

    for (int n : {4, 6, 8}) {
        auto board = nonrep::color_rook(n);
        std::map<int, int> uses;
        for (int c : board.color) ++uses[c];
        CHECK(int(uses.size()) == n * n / 2);
        for (auto [c, cnt] : uses) CHECK(cnt == 2);

        // no color repeats within a row or a column
        for (int i = 0; i < n; ++i) {
            std::set<int> row, col;
            for (int j = 0; j < n; ++j) {
                row.insert(board.color[i * n + j]);
                col.insert(board.color[j * n + i]);
            }
            CHECK(int(row.size()) == n);
            CHECK(int(col.size()) == n);
        }

        // left halves of even rows and right halves of odd rows are one type
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const bool yellow = j < n / 2 ? i % 2 == 0 : i % 2 == 1;
                CHECK(int(board.vertex_type[i * n + j]) == (yellow ? 1 : 0));
            }

        // the two cells of one color always share a type
        std::map<int, std::set<int>> types;
        for (int v = 0; v < board.graph.nverts; ++v)
            types[board.color[v]].insert(board.vertex_type[v]);
        for (auto& [c, t] : types) CHECK(t.size() == 1);
    }
}

TEST_CASE("biclique board coloring zeroes the diagonal quadrants") {
    for (int n : {1, 2, 3, 4, 6}) {
        auto cg = nonrep::color_biclique(n);
        const int side = 2 * n;
        REQUIRE(cg.graph.nverts == side * side);
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) {
                const bool diag_quadrant = (i < n) == (j < n);
                CHECK((board_label(cg, i, j) == "0") == diag_quadrant);
            }
    }
    CHECK(nonrep::color_biclique(4).palette.size() == 25);
    CHECK(nonrep::color_biclique(2).palette.size() == 9);
    CHECK(nonrep::color_biclique(3).palette.size() == 19);
}

TEST_CASE("point color helpers check the kind") {
    auto spec = lattice_spec(ConstructionKind::diagonal, {0, 0}, {9, 9});
    std::vector<int> p{2, 1};
    CHECK(nonrep::color_diagonal(p, spec) == "b");
    CHECK_THROWS_AS(nonrep::color_grid12(p, spec), std::invalid_argument);

    auto g = lattice_spec(ConstructionKind::grid12, {0, 0}, {7, 7}, {0, 0});
    std::vector<int> q{1, 0};
    CHECK(nonrep::color_grid12(q, g) == "w1");
    CHECK_THROWS_AS(nonrep::color_cart3d28(q, g), std::invalid_argument);
}

TEST_CASE("spec validation rejects ill-formed requests") {
    CHECK_THROWS_AS(nonrep::normalized(board_spec(ConstructionKind::rook, 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(nonrep::normalized(board_spec(ConstructionKind::rook, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(nonrep::normalized(board_spec(ConstructionKind::biclique, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        nonrep::normalized(lattice_spec(ConstructionKind::grid12, {0, 0, 0}, {3, 3, 3})),
        std::invalid_argument);
    CHECK_THROWS_AS(
        nonrep::normalized(lattice_spec(ConstructionKind::cart3d28, {0, 0}, {3, 3})),
        std::invalid_argument);
    CHECK_THROWS_AS(nonrep::normalized(lattice_spec(ConstructionKind::tensor, {0}, {9})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        nonrep::normalized(lattice_spec(ConstructionKind::grid12, {0, 0}, {3, 3}, {1})),
        std::invalid_argument);

    auto with_base = lattice_spec(ConstructionKind::grid12, {0, 0}, {3, 3});
    with_base.base = {0, 0};
    CHECK_THROWS_AS(nonrep::normalized(with_base), std::invalid_argument);

    auto with_n = lattice_spec(ConstructionKind::grid12, {0, 0}, {3, 3});
    with_n.n = 4;
    CHECK_THROWS_AS(nonrep::normalized(with_n), std::invalid_argument);

    auto board_region = board_spec(ConstructionKind::rook, 4);
    board_region.region.lo = {0, 0};
    board_region.region.hi = {3, 3};
    CHECK_THROWS_AS(nonrep::normalized(board_region), std::invalid_argument);

    auto board_offsets = board_spec(ConstructionKind::biclique, 2);
    board_offsets.offsets = {1};
    CHECK_THROWS_AS(nonrep::normalized(board_offsets), std::invalid_argument);

    auto stray_base = lattice_spec(ConstructionKind::tensor, {0, 0}, {5, 5});
    stray_base.base = {9, 9};
    CHECK_THROWS_AS(nonrep::normalized(stray_base), std::invalid_argument);
}

TEST_CASE("colorizer rejects points it cannot color") {
    Colorizer cz(lattice_spec(ConstructionKind::grid12, {0, 0}, {7, 7}));
    std::vector<int> outside{8, 0};
    CHECK_THROWS_WITH(cz.label(outside), "point outside region");

    Colorizer tz(lattice_spec(ConstructionKind::tensor, {0, 0}, {5, 5}));
    std::vector<int> off_component{0, 1};
    CHECK_THROWS_WITH(tz.label(off_component), "point outside tensor component");

    CHECK_THROWS_AS(Colorizer(board_spec(ConstructionKind::rook, 4)),
                    std::invalid_argument);
}

TEST_CASE("coloring files round trip") {
    auto cg = nonrep::make_colored_graph(
        lattice_spec(ConstructionKind::grid12, {0, 0}, {5, 5}));
    auto j = nonrep::to_json(cg);

    CHECK(j["construction"]["kind"] == "grid12");
    CHECK(j["construction"]["region"][0][1] == 5);
    CHECK_FALSE(j["construction"].contains("base"));
    CHECK_FALSE(j["construction"].contains("n"));
    CHECK(j["offsets"].size() == 2);
    CHECK(j["cells"].size() == 36);
    CHECK(j["cells"][0].size() == 3);  // x, y, color id

    auto back = nonrep::colored_graph_from_json(j);
    CHECK(back.color == cg.color);
    CHECK(back.palette == cg.palette);
    CHECK(back.graph.nverts == cg.graph.nverts);

    // board form carries n instead of a region, and the rook keeps its types
    auto rook = nonrep::color_rook(4);
    auto rj = nonrep::to_json(rook);
    CHECK(rj["construction"]["n"] == 4);
    CHECK_FALSE(rj["construction"].contains("region"));
    auto rook_back = nonrep::colored_graph_from_json(rj);
    CHECK(rook_back.vertex_type == rook.vertex_type);

    // tensor form carries its base
    auto tens = nonrep::make_colored_graph(
        lattice_spec(ConstructionKind::tensor, {0, 0}, {5, 5}));
    auto tj = nonrep::to_json(tens);
    CHECK(tj["construction"]["base"] == std::vector<int>{0, 0});
    CHECK(nonrep::colored_graph_from_json(tj).color == tens.color);
}

TEST_CASE("edited cells are honored rather than recomputed") {
    auto cg = nonrep::make_colored_graph(
        lattice_spec(ConstructionKind::grid12, {0, 0}, {3, 3}));
    auto j = nonrep::to_json(cg);
    const int original = j["cells"][0][2].get<int>();
    const int edited = (original + 1) % int(cg.palette.size());
    j["cells"][0][2] = edited;
    auto back = nonrep::colored_graph_from_json(j);
    std::vector<int> p{j["cells"][0][0].get<int>(), j["cells"][0][1].get<int>()};
    CHECK(back.color[back.graph.find_vertex(p)] == edited);
}

TEST_CASE("malformed coloring files are rejected") {
    auto make_json = [] {
        return nonrep::to_json(nonrep::make_colored_graph(
            lattice_spec(ConstructionKind::grid12, {0, 0}, {2, 2})));
    };

    auto missing = make_json();
    missing["cells"].erase(0);
    CHECK_THROWS_WITH(nonrep::colored_graph_from_json(missing),
                      "coloring file: cell count mismatch");

    auto dupe = make_json();
    dupe["cells"][1] = dupe["cells"][0];
    CHECK_THROWS_WITH(nonrep::colored_graph_from_json(dupe),
                      "coloring file: duplicate cell");

    auto range = make_json();
    range["cells"][0][2] = 99;
    CHECK_THROWS_WITH(nonrep::colored_graph_from_json(range),
                      "coloring file: color id out of range");

    auto arity = make_json();
    arity["cells"][0].erase(2);
    CHECK_THROWS_WITH(nonrep::colored_graph_from_json(arity),
                      "coloring file: malformed cell");

    auto outside = make_json();
    outside["cells"][0][0] = 77;
    CHECK_THROWS_WITH(nonrep::colored_graph_from_json(outside),
                      "coloring file: cell outside graph");

    auto bare = make_json();
    bare["palette"] = nlohmann::json::array();
    CHECK_THROWS_AS(nonrep::colored_graph_from_json(bare), std::invalid_argument);
}

TEST_CASE("csv export lists one cell per line") {
    auto cg = nonrep::make_colored_graph(
        lattice_spec(ConstructionKind::grid12_base, {0, 0}, {1, 1}, {0, 0}));
    CHECK(nonrep::to_csv(cg) == "x,y,color\n0,0,d\n0,1,w\n1,0,w\n1,1,d\n");

    auto c3 = nonrep::make_colored_graph(
        lattice_spec(ConstructionKind::cart3d28, {0, 0, 0}, {1, 1, 1}));
    CHECK(nonrep::to_csv(c3).rfind("x,y,z,color\n", 0) == 0);
}
