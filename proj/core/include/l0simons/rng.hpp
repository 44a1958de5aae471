#pragma once

#include <cstdint>

namespace l0simons {

/// splitmix64 stream. Self-contained so seeded artifacts are byte-identical
/// across standard libraries and platforms.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound >= 1. Modulo bias is irrelevant
    /// at the tiny bounds used here.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    /// Inclusive range draw.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace l0simons
