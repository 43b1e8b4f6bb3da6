#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "ritz/errors.hpp"

namespace ritz {

/// Working precision for all scalar arithmetic, expressed in decimal digits.
///
/// Every BigReal is bound to the context it was created under; binary
/// operations between scalars from different contexts throw
/// PrecisionMismatchError instead of silently truncating.
class PrecisionContext {
  public:
    PrecisionContext() : digits_(0), bits_(MPFR_PREC_MIN) {}

    int decimal_digits() const { return digits_; }
    mpfr_prec_t bits() const { return bits_; }
    bool bound() const { return digits_ > 0; }

    /// Number of decimal digits needed for an exact serialize/parse round trip.
    int roundtrip_digits() const;

    friend bool operator==(const PrecisionContext& a, const PrecisionContext& b) {
        return a.digits_ == b.digits_;
    }
    friend bool operator!=(const PrecisionContext& a, const PrecisionContext& b) {
        return !(a == b);
    }

  private:
    friend PrecisionContext with_precision(int digits);
    explicit PrecisionContext(int digits);

    int digits_;
    mpfr_prec_t bits_;
};

/// Creates a context of `digits` decimal digits.  Throws ConfigError below the
/// 30-digit floor.
PrecisionContext with_precision(int digits);

/// Arbitrary-precision real number bound to a PrecisionContext.
///
/// Arithmetic is correctly rounded at the context precision (a few guard bits
/// beyond the requested decimal digits are carried internally).  Values are
/// immutable in spirit: every operation returns a fresh scalar, so sharing
/// across threads is safe.
class BigReal {
  public:
    BigReal();
    BigReal(long value, const PrecisionContext& ctx);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal zero(const PrecisionContext& ctx) { return BigReal(0, ctx); }
    /// Exact rational num/den rounded once to the context precision.
    static BigReal from_ratio(long num, long den, const PrecisionContext& ctx);
    /// Parses a decimal string ("-3.4101e2", "0.125", "24").  Throws ParseError
    /// on malformed input.
    static BigReal from_string(const std::string& text, const PrecisionContext& ctx);
    static BigReal pi(const PrecisionContext& ctx);

    const PrecisionContext& context() const { return ctx_; }

    /// Re-rounds this value into another context (the one sanctioned bridge
    /// between contexts, e.g. when comparing runs at different precisions).
    BigReal to_context(const PrecisionContext& ctx) const;

    /// Decimal serialization.  With `significant == 0` emits enough digits for
    /// an exact round trip at the current precision; otherwise emits the
    /// requested number of significant digits.
    std::string to_string(int significant = 0) const;
    double to_double() const;
    long to_long() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator*=(long o);
    BigReal& operator/=(long o);
    BigReal& operator+=(long o);
    BigReal& operator-=(long o);

    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
    friend BigReal operator+(BigReal a, long b) { return a += b; }
    friend BigReal operator-(BigReal a, long b) { return a -= b; }
    friend BigReal operator*(BigReal a, long b) { return a *= b; }
    friend BigReal operator/(BigReal a, long b) { return a /= b; }
    friend BigReal operator*(long a, BigReal b) { return b *= a; }

    friend bool operator==(const BigReal& a, const BigReal& b);
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b);
    friend bool operator<=(const BigReal& a, const BigReal& b);
    friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }

    friend BigReal sqrt(const BigReal& x);
    friend BigReal exp(const BigReal& x);
    friend BigReal ln(const BigReal& x);
    friend BigReal log10(const BigReal& x);
    friend BigReal abs(const BigReal& x);
    friend BigReal hypot(const BigReal& x, const BigReal& y);
    friend BigReal pow_int(const BigReal& x, long n);
    /// x^(num/den) for x > 0, evaluated as exp((num/den)·ln x).
    friend BigReal pow_ratio(const BigReal& x, long num, long den);
    friend BigReal gamma(const BigReal& z, const PrecisionContext& ctx);

    /// Raw handle for the few routines that talk to MPFR directly.
    mpfr_srcptr raw() const { return v_; }

  private:
    void require_bound() const;
    static void require_same(const BigReal& a, const BigReal& b);

    mpfr_t v_;
    PrecisionContext ctx_;
};

/// Gamma function, correct to the context's digit count.  Requires z > 0.
BigReal gamma(const BigReal& z, const PrecisionContext& ctx);

/// Number of matching leading decimal digits between two values (0 if they do
/// not even share a sign or order of magnitude; capped by their precision).
int agreement_digits(const BigReal& a, const BigReal& b);

/// Complex scalar with exact component-wise arithmetic over BigReal.
class BigComplex {
  public:
    BigComplex() = default;
    BigComplex(BigReal real, BigReal imag) : re_(std::move(real)), im_(std::move(imag)) {}
    explicit BigComplex(BigReal real)
        : re_(std::move(real)), im_(BigReal::zero(re_.context())) {}
    BigComplex(long value, const PrecisionContext& ctx)
        : re_(value, ctx), im_(0, ctx) {}

    static BigComplex zero(const PrecisionContext& ctx) { return BigComplex(0, ctx); }
    static BigComplex i(const PrecisionContext& ctx) {
        return BigComplex(BigReal(0, ctx), BigReal(1, ctx));
    }

    const BigReal& real() const { return re_; }
    const BigReal& imag() const { return im_; }
    const PrecisionContext& context() const { return re_.context(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigReal abs() const { return hypot(re_, im_); }
    BigReal norm_sq() const { return re_ * re_ + im_ * im_; }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& o);
    BigComplex& operator/=(const BigReal& o);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    /// Principal square root.
    friend BigComplex sqrt(const BigComplex& z);

    std::string to_string(int significant = 0) const;

  private:
    BigReal re_;
    BigReal im_;
};

} // namespace ritz
