#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ritz/potential.hpp"

namespace ritz {

/// Basis families for the trial subspace.
///   K_EVEN     : |x|^j * exp(-|S_k|), k even; half-line representatives.
///   K_ODD      : x^(2j+s) * exp(-S_k), k odd.
///   ASYMMETRIC : x^j * exp(-|S_k|) on the full line.
///   HARMONIC_OSC : eigenfunctions of p^2 + x^2, handled by operator algebra
///                  during assembly (never materialized as functions).
enum class BasisFamily { K_EVEN, K_ODD, ASYMMETRIC, HARMONIC_OSC };

enum class Sector { EVEN_STATES, ODD_STATES, ALL };

struct BasisSpec {
    BasisFamily family = BasisFamily::K_EVEN;
    Sector sector = Sector::EVEN_STATES;
    std::optional<AsymptoticForm> decay;
    int size = 0;
    /// Reproduces the published even-state index list j = 0,2,3,... instead of
    /// the j = 0,1,2,... reading (comparison option; off by default).
    bool literal_even_indices = false;

    /// Throws BasisSpecError on family/parity/sector mismatches.
    void validate() const;
};

/// Extension of a half-line representative to the whole line.
///   HALF_LINE : parity-family function; all integrals stay on x >= 0.
///   EVEN/ODD  : full-line function with f(-x) = +/- f(x).
enum class LineExtension { HALF_LINE, EVEN, ODD };

/// P(x) * exp(-S_k(x)) on x >= 0, with P a sparse polynomial.  Closed under
/// differentiation since S_k'(x) = sqrt(a) * x^k.
class PolyExpFunction {
  public:
    using Term = std::pair<int, BigReal>; // exponent, coefficient

    static PolyExpFunction monomial(int exponent, const AsymptoticForm& decay,
                                    LineExtension ext, const PrecisionContext& ctx);

    PolyExpFunction(std::vector<Term> terms, const AsymptoticForm& decay, LineExtension ext,
                    const PrecisionContext& ctx);

    const std::vector<Term>& terms() const { return terms_; }
    const AsymptoticForm& decay() const { return decay_; }
    LineExtension extension() const { return ext_; }
    const PrecisionContext& context() const { return ctx_; }

    int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

    /// Value at x >= 0.
    BigReal eval(const BigReal& x) const;

    /// Value anywhere on the line, using the parity tag for x < 0.  Throws for
    /// x < 0 on HALF_LINE functions.
    BigReal eval_full_line(const BigReal& x) const;

  private:
    std::vector<Term> terms_; // sorted by exponent, exponents unique
    AsymptoticForm decay_;
    LineExtension ext_;
    PrecisionContext ctx_;
};

/// d/dx for x > 0: x^p e^(-S) -> (p x^(p-1) - sqrt(a) x^(p+k)) e^(-S).
/// Parity tags flip (even <-> odd); half-line stays half-line.
PolyExpFunction differentiate(const PolyExpFunction& f);

/// Materializes the basis functions for a (validated) spec.
/// HARMONIC_OSC specs are rejected here by design.
std::vector<PolyExpFunction> build_basis(const BasisSpec& spec, const PrecisionContext& ctx);

} // namespace ritz
