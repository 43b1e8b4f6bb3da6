#pragma once

#include <numeric>
#include <string>

#include "ritz/errors.hpp"
#include "ritz/mp.hpp"

namespace ritz {

/// Exact rational on checked 64-bit integers.  Potential coefficients and
/// asymptotic leading coefficients stay in this form until matrix assembly, so
/// parity and growth analysis are symbolic.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num) : num_(num), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(checked_neg(num_), den_, exact_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw MathDomainError("rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    BigReal to_real(const PrecisionContext& ctx) const {
        return BigReal::from_ratio(num_, den_, ctx);
    }

    /// Canonical text form: "3", "-5", "1/2", "-7/3".
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    struct exact_tag {};
    Rational(long long num, long long den, exact_tag) : num_(num), den_(den) {}

    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw MathDomainError("rational overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw MathDomainError("rational overflow");
        return r;
    }
    static long long checked_neg(long long a) { return checked_mul(a, -1); }

    void normalize() {
        if (den_ == 0) throw MathDomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace ritz
