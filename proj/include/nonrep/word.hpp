#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nonrep/rolling_hash.hpp"

namespace nonrep {

// Finite word over a small alphabet.  symbols[i] indexes into alphabet.
struct Word {
    std::vector<uint8_t> symbols;
    std::vector<std::string> alphabet;

    size_t size() const { return symbols.size(); }

    std::string to_text() const {
        std::string out;
        for (uint8_t s : symbols) out += alphabet.at(s);
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["alphabet"] = alphabet;
        j["symbols"] = symbols;
        return j;
    }
};

enum class FactorKind { square, palindrome };

struct FactorLocation {
    size_t start = 0;
    size_t length = 0;
    FactorKind kind = FactorKind::square;
};

// Square-free ternary word: fixed point of 0 -> 012, 1 -> 02, 2 -> 1,
// iterated from "0".  Every iterate is a prefix of the next, so truncating a
// long enough iterate yields the unique infinite word's prefix.
inline Word generate_thue(size_t length,
                          std::vector<std::string> alphabet = {"a", "b", "c"}) {
    if (alphabet.size() != 3)
        throw std::invalid_argument("generate_thue: alphabet must have 3 labels");
    Word w{{}, std::move(alphabet)};
    if (length == 0) return w;
    std::vector<uint8_t> cur{0};
    while (cur.size() < length) {
        std::vector<uint8_t> next;
        next.reserve(cur.size() * 3);
        for (uint8_t s : cur) {
            switch (s) {
                case 0: next.insert(next.end(), {0, 1, 2}); break;
                case 1: next.insert(next.end(), {0, 2}); break;
                default: next.push_back(1); break;
            }
        }
        cur = std::move(next);
    }
    cur.resize(length);
    w.symbols = std::move(cur);
    return w;
}

// Square-free and palindrome-free word over four labels: position n carries
// the fourth label when n % 3 == 0 and otherwise the ternary word above with
// the multiples of three spliced out, i.e. symbol(n) = thue(n - floor(n/3)).
inline Word generate_thue_star(
        size_t length,
        std::vector<std::string> alphabet = {"a", "b", "c", "d"}) {
    if (alphabet.size() != 4)
        throw std::invalid_argument("generate_thue_star: alphabet must have 4 labels");
    Word w{{}, std::move(alphabet)};
    if (length == 0) return w;
    Word base = generate_thue(length - length / 3 + 1);
    w.symbols.reserve(length);
    for (size_t n = 0; n < length; ++n)
        w.symbols.push_back(n % 3 == 0 ? uint8_t(3) : base.symbols[n - n / 3]);
    return w;
}

// First square factor in index order (smallest start, then smallest length),
// or nullopt if the word is square-free.
inline std::optional<FactorLocation> find_square(const Word& w) {
    const size_t n = w.size();
    if (n < 2) return std::nullopt;
    PrefixHashes hashes(w.symbols);
    const auto* s = w.symbols.data();
    for (size_t start = 0; start + 2 <= n; ++start) {
        for (size_t half = 1; start + 2 * half <= n; ++half) {
            if (!hashes.windows_match(start, start + half, half)) continue;
            if (std::equal(s + start, s + start + half, s + start + half))
                return FactorLocation{start, 2 * half, FactorKind::square};
        }
    }
    return std::nullopt;
}

// First palindromic factor of length >= min_length in the same index order,
// or nullopt if none exists.
inline std::optional<FactorLocation> find_palindrome(const Word& w,
                                                     size_t min_length = 2) {
    if (min_length < 2)
        throw std::invalid_argument("find_palindrome: min_length must be >= 2");
    const size_t n = w.size();
    if (n < min_length) return std::nullopt;
    std::vector<uint8_t> reversed(w.symbols.rbegin(), w.symbols.rend());
    PrefixHashes fwd(w.symbols), rev(reversed);
    const auto* s = w.symbols.data();
    for (size_t start = 0; start + min_length <= n; ++start) {
        for (size_t len = min_length; start + len <= n; ++len) {
            // [start, start+len) reversed sits at [n-start-len, n-start) in reversed
            const size_t mirror = n - start - len;
            if (fwd.window(start, start + len) != rev.window(mirror, mirror + len))
                continue;
            bool ok = true;
            for (size_t i = 0; ok && 2 * i + 1 < len; ++i)
                ok = s[start + i] == s[start + len - 1 - i];
            if (ok) return FactorLocation{start, len, FactorKind::palindrome};
        }
    }
    return std::nullopt;
}

// Same symbols under a fresh alphabet of equal size.
inline Word relabel(const Word& w, std::vector<std::string> alphabet) {
    if (alphabet.size() != w.alphabet.size())
        throw std::invalid_argument("relabel: alphabet size mismatch");
    return Word{w.symbols, std::move(alphabet)};
}

}  // namespace nonrep
