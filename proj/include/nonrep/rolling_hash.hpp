#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace nonrep {

// Polynomial rolling hashes with natural wrap-around at 2^64, kept in two
// independent streams.  Callers must confirm any hash match symbol by symbol,
// so a collision can cost time but never change an answer.
inline constexpr uint64_t kHashBase1 = 0x9e3779b97f4a7c55ULL;
inline constexpr uint64_t kHashBase2 = 0xc2b2ae3d27d4eb4fULL;

// Prefix hashes of a fixed symbol sequence; answers "are these two windows
// equal" in O(1) at hash level.
class PrefixHashes {
public:
    explicit PrefixHashes(std::span<const uint8_t> symbols) {
        const size_t n = symbols.size();
        h1_.resize(n + 1, 0);
        h2_.resize(n + 1, 0);
        p1_.resize(n + 1, 1);
        p2_.resize(n + 1, 1);
        for (size_t i = 0; i < n; ++i) {
            const uint64_t s = uint64_t(symbols[i]) + 1;
            h1_[i + 1] = h1_[i] * kHashBase1 + s;
            h2_[i + 1] = h2_[i] * kHashBase2 + s;
            p1_[i + 1] = p1_[i] * kHashBase1;
            p2_[i + 1] = p2_[i] * kHashBase2;
        }
    }

    // hash pair of the half-open window [lo, hi)
    std::pair<uint64_t, uint64_t> window(size_t lo, size_t hi) const {
        return {h1_[hi] - h1_[lo] * p1_[hi - lo],
                h2_[hi] - h2_[lo] * p2_[hi - lo]};
    }

    bool windows_match(size_t a, size_t b, size_t len) const {
        return window(a, a + len) == window(b, b + len);
    }

private:
    std::vector<uint64_t> h1_, h2_, p1_, p2_;
};

}  // namespace nonrep
