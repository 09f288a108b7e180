#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "nonrep/word.hpp"
#include "oracles.hpp"

using nonrep::FactorKind;
using nonrep::Word;

namespace {

Word word_from_text(const std::string& text, const std::vector<std::string>& alphabet) {
    Word w{{}, alphabet};
    for (char c : text) {
        size_t idx = 0;
        while (alphabet[idx] != std::string(1, c)) ++idx;
        w.symbols.push_back(uint8_t(idx));
    }
    return w;
}

Word random_word(std::mt19937& rng, size_t len, int alphabet_size) {
    static const std::vector<std::string> labels{"a", "b", "c", "d", "e"};
    Word w{{}, {labels.begin(), labels.begin() + alphabet_size}};
    std::uniform_int_distribution<int> pick(0, alphabet_size - 1);
    for (size_t i = 0; i < len; ++i) w.symbols.push_back(uint8_t(pick(rng)));
    return w;
}

}  // namespace

TEST_CASE("ternary word fixed prefixes") {
    CHECK(nonrep::generate_thue(0).to_text() == "");
    CHECK(nonrep::generate_thue(1).to_text() == "a");
    CHECK(nonrep::generate_thue(6).to_text() == "abcacb");
    CHECK(nonrep::generate_thue(12).to_text() == "abcacbabcbac");
}

TEST_CASE("quaternary word fixed prefixes") {
    CHECK(nonrep::generate_thue_star(0).to_text() == "");
    CHECK(nonrep::generate_thue_star(1).to_text() == "d");
    CHECK(nonrep::generate_thue_star(9).to_text() == "dbcdacdba");
    CHECK(nonrep::generate_thue_star(12).to_text() == "dbcdacdbadbc");
}

TEST_CASE("longer generations extend shorter ones") {
    auto t100 = nonrep::generate_thue(100), t300 = nonrep::generate_thue(300);
    REQUIRE(t100.size() == 100);
    REQUIRE(t300.size() == 300);
    CHECK(std::equal(t100.symbols.begin(), t100.symbols.end(), t300.symbols.begin()));

    auto s100 = nonrep::generate_thue_star(100), s300 = nonrep::generate_thue_star(300);
    REQUIRE(s100.size() == 100);
    CHECK(std::equal(s100.symbols.begin(), s100.symbols.end(), s300.symbols.begin()));
}

TEST_CASE("generator alphabet sizes are enforced") {
    CHECK_THROWS_AS(nonrep::generate_thue(5, {"a", "b"}), std::invalid_argument);
    CHECK_THROWS_AS(nonrep::generate_thue_star(5, {"a", "b", "c"}), std::invalid_argument);
    CHECK(nonrep::generate_thue(4, {"x", "y", "z"}).to_text() == "xyzx");
}

TEST_CASE("find_square locates a planted square") {
    auto w = word_from_text("xabab", {"x", "a", "b"});
    auto loc = nonrep::find_square(w);
    REQUIRE(loc.has_value());
    CHECK(loc->start == 1);
    CHECK(loc->length == 4);
    CHECK(loc->kind == FactorKind::square);

    auto aa = nonrep::find_square(word_from_text("aa", {"a", "b"}));
    REQUIRE(aa.has_value());
    CHECK(aa->start == 0);
    CHECK(aa->length == 2);

    CHECK_FALSE(nonrep::find_square(word_from_text("", {"a"})).has_value());
    CHECK_FALSE(nonrep::find_square(word_from_text("abc", {"a", "b", "c"})).has_value());
}

TEST_CASE("find_palindrome locates a planted palindrome") {
    auto w = word_from_text("abcba", {"a", "b", "c"});
    auto loc = nonrep::find_palindrome(w);
    REQUIRE(loc.has_value());
    CHECK(loc->start == 0);
    CHECK(loc->length == 5);
    CHECK(loc->kind == FactorKind::palindrome);

    // raising min_length skips the shorter hits
    auto mid = word_from_text("aabcb", {"a", "b", "c"});
    auto short_hit = nonrep::find_palindrome(mid, 2);
    REQUIRE(short_hit.has_value());
    CHECK(short_hit->start == 0);
    CHECK(short_hit->length == 2);
    auto long_hit = nonrep::find_palindrome(mid, 3);
    REQUIRE(long_hit.has_value());
    CHECK(long_hit->start == 2);
    CHECK(long_hit->length == 3);

    CHECK_THROWS_AS(nonrep::find_palindrome(w, 1), std::invalid_argument);
    CHECK_FALSE(nonrep::find_palindrome(word_from_text("ab", {"a", "b"})).has_value());
}

TEST_CASE("factor search agrees with a naive scan on random words") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<size_t> len_pick(0, 40);
    std::uniform_int_distribution<int> sigma_pick(2, 4);
    for (int trial = 0; trial < 300; ++trial) {
        auto w = random_word(rng, len_pick(rng), sigma_pick(rng));
        INFO("trial " << trial << " word " << w.to_text());

        auto got_sq = nonrep::find_square(w);
        auto exp_sq = oracles::find_square(w.symbols);
        REQUIRE(got_sq.has_value() == exp_sq.has_value());
        if (exp_sq) {
            CHECK(got_sq->start == exp_sq->first);
            CHECK(got_sq->length == exp_sq->second);
        }

        for (size_t min_len : {size_t(2), size_t(3), size_t(4)}) {
            auto got_pal = nonrep::find_palindrome(w, min_len);
            auto exp_pal = oracles::find_palindrome(w.symbols, min_len);
            REQUIRE(got_pal.has_value() == exp_pal.has_value());
            if (exp_pal) {
                CHECK(got_pal->start == exp_pal->first);
                CHECK(got_pal->length == exp_pal->second);
            }
        }
    }
}

TEST_CASE("ternary word is square-free but not palindrome-free") {
    auto w = nonrep::generate_thue(400);
    CHECK_FALSE(nonrep::find_square(w).has_value());
    CHECK_FALSE(oracles::find_square(w.symbols).has_value());
    CHECK(nonrep::find_palindrome(w).has_value());
}

TEST_CASE("quaternary word is square-free and palindrome-free") {
    auto w = nonrep::generate_thue_star(500);
    CHECK_FALSE(nonrep::find_square(w).has_value());
    CHECK_FALSE(nonrep::find_palindrome(w).has_value());
    // spot-check the naive scans agree on a shorter prefix
    auto p = nonrep::generate_thue_star(160);
    CHECK_FALSE(oracles::find_square(p.symbols).has_value());
    CHECK_FALSE(oracles::find_palindrome(p.symbols).has_value());
}

TEST_CASE("relabel swaps the alphabet only") {
    auto w = nonrep::generate_thue(12);
    auto r = nonrep::relabel(w, {"x", "y", "z"});
    CHECK(r.to_text() == "xyzxzyxyzyxz");
    CHECK(r.symbols == w.symbols);
    CHECK_THROWS_AS(nonrep::relabel(w, {"x", "y"}), std::invalid_argument);
}

TEST_CASE("word serializes alphabet then symbols") {
    auto j = nonrep::generate_thue(3).to_json();
    REQUIRE(j.contains("alphabet"));
    REQUIRE(j.contains("symbols"));
    CHECK(j["alphabet"] == std::vector<std::string>{"a", "b", "c"});
    CHECK(j["symbols"] == std::vector<int>{0, 1, 2});
    CHECK(j.dump().rfind("{\"alphabet\"", 0) == 0);
}
