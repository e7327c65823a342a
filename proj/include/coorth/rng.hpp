#pragma once

#include <cstdint>

#include "coorth/rational.hpp"

namespace coorth {

/// Deterministic 64-bit linear congruential generator.  Every sampled
/// quantity in the library and its tests flows through this so that a
/// (document, seed) pair reproduces byte-identical results.
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    /// A rational in [-4, 4] with denominator at most 8.
    Rat next_rational() {
        const long den = 1 + static_cast<long>(next_below(8));
        const long num = static_cast<long>(next_below(static_cast<std::uint64_t>(8 * den + 1))) - 4 * den;
        return rat(num, den);
    }

    RatVec next_vector(std::size_t dim) {
        RatVec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = next_rational();
        return v;
    }

    /// A nonzero sample vector (rejection; deterministic).
    RatVec next_nonzero_vector(std::size_t dim) {
        for (;;) {
            RatVec v = next_vector(dim);
            if (!is_zero_vec(v)) return v;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace coorth
