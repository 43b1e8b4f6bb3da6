#pragma once

#include <map>
#include <string>

#include "ritz/rational.hpp"

namespace ritz {

enum class Parity { SYMMETRIC, ASYMMETRIC };

/// Polynomial potential with exact rational coefficients, split into a real
/// part and an imaginary part (for terms like i*x^3).
class Potential {
  public:
    /// Maps exponent -> coefficient; absent exponents are zero.  Throws
    /// ConfigError when degree < 1 or a real potential has a nonpositive
    /// leading coefficient (not confining).
    Potential(std::map<int, Rational> real_coeffs, std::map<int, Rational> imag_coeffs);

    const std::map<int, Rational>& real_coeffs() const { return real_; }
    const std::map<int, Rational>& imag_coeffs() const { return imag_; }

    int degree() const { return degree_; }
    bool is_real() const { return imag_.empty(); }

    /// SYMMETRIC iff every present exponent is even.
    Parity parity() const;

    /// Canonical expression text, terms in descending exponent order.
    std::string to_string() const;

    friend bool operator==(const Potential& a, const Potential& b) {
        return a.real_ == b.real_ && a.imag_ == b.imag_;
    }
    friend bool operator!=(const Potential& a, const Potential& b) { return !(a == b); }

  private:
    std::map<int, Rational> real_;
    std::map<int, Rational> imag_;
    int degree_;
};

/// The pair (k, a) of the eigenfunction decay exponent
/// S_k(x) = (sqrt(a)/(k+1)) * x^(k+1).
struct AsymptoticForm {
    int k = 0;
    Rational a = Rational(1);

    BigReal sqrt_a(const PrecisionContext& ctx) const { return sqrt(a.to_real(ctx)); }

    /// S_k(x) for x >= 0.
    BigReal decay_at(const BigReal& x) const;

    /// Human-readable form, e.g. "x^3/3" or "2*x^4/4".
    std::string to_string() const;

    friend bool operator==(const AsymptoticForm& l, const AsymptoticForm& r) {
        return l.k == r.k && l.a == r.a;
    }
    friend bool operator!=(const AsymptoticForm& l, const AsymptoticForm& r) {
        return !(l == r);
    }
};

/// Parses a potential expression.  Grammar (whitespace-insensitive):
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := [rational '*'] ['i' '*'] 'x' ['^' nat] | rational
///   rational := int | int '/' int | decimal
/// Exponents are capped at 64.  Throws ParseError with the offending position.
Potential parse_potential(const std::string& expr);

/// Extracts (k, a) from a potential with even leading degree 2k and positive
/// leading coefficient a.  Throws UnsupportedPotentialError otherwise (odd
/// leading degree, nonpositive leading coefficient, or imaginary terms).
AsymptoticForm analyze_asymptotics(const Potential& v);

Parity parity_of(const Potential& v);

} // namespace ritz
