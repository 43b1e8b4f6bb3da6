#pragma once

#include <string>

#include "doctest.h"
#include "ritz/mp.hpp"

namespace ritz::test {

/// Checks that a and b agree to at least `digits` significant decimal digits
/// (relative to a, or absolutely when a is zero).
inline void check_digits(const BigReal& a, const BigReal& b, int digits) {
    const BigReal diff = abs(a - b);
    const BigReal tol = pow_ratio(BigReal(10, a.context()), -digits, 1);
    if (a.is_zero()) {
        CHECK_MESSAGE(diff <= tol, "expected |", b.to_string(20), "| <= 1e-", digits);
        return;
    }
    CHECK_MESSAGE(diff <= tol * abs(a), a.to_string(25), " vs ", b.to_string(25),
                  " differ before digit ", digits);
}

inline void check_digits(const BigComplex& a, const BigComplex& b, int digits) {
    const BigReal diff = (a - b).abs();
    const BigReal tol = pow_ratio(BigReal(10, a.context()), -digits, 1);
    const BigReal scale = a.abs();
    if (scale.is_zero()) {
        CHECK_MESSAGE(diff <= tol, "expected |", b.to_string(20), "| <= 1e-", digits);
        return;
    }
    CHECK_MESSAGE(diff <= tol * scale, a.to_string(25), " vs ", b.to_string(25),
                  " differ before digit ", digits);
}

/// Deterministic pseudo-random stream (SplitMix64), identical on every
/// platform; returns values in [0, 1).
class DeterministicStream {
  public:
    explicit DeterministicStream(unsigned long long seed) : state_(seed) {}

    double next_unit() {
        state_ += 0x9e3779b97f4a7c15ULL;
        unsigned long long z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    long next_long(long lo, long hi) { // inclusive range
        return lo + static_cast<long>(next_unit() * static_cast<double>(hi - lo + 1));
    }

  private:
    unsigned long long state_;
};

} // namespace ritz::test
