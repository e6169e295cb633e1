#pragma once

#include "loopqkz/rational.hpp"

#include <cstdint>
#include <random>

namespace loopqkz {

/// Reproducible random rationals p/d with 1 <= |p| <= 9 and 1 <= d <= 9.
/// Callers redraw whenever a sample lands on a pole.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    BigRational next()
    {
        std::uniform_int_distribution<int> num(1, 9);
        std::uniform_int_distribution<int> den(1, 9);
        std::bernoulli_distribution negative(0.5);
        const int p = num(rng_);
        const int d = den(rng_);
        return make_rational(negative(rng_) ? -p : p, d);
    }

    /// Positive variant, for quantities whose sign matters.
    BigRational next_positive()
    {
        BigRational r = next();
        return r < 0 ? BigRational(-r) : r;
    }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace loopqkz
