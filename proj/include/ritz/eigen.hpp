#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ritz/assemble.hpp"

namespace ritz {

/// Solution of the secular problem, eigenvalues ascending by real part (ties
/// by imaginary part).  Residual norms are ||H C - E S C||_2 / ||C||_2 per
/// eigenpair; a Spectrum counts as certified at `achieved_digits` when every
/// residual is below 10^(-achieved_digits/2).
struct Spectrum {
    std::vector<BigComplex> eigenvalues;
    std::optional<Matrix<BigComplex>> eigenvectors; // columns follow eigenvalue order
    std::vector<BigReal> residual_norms;
    BigReal overlap_condition_estimate;
    int achieved_digits = 0;

    /// Real parts, after checking every imaginary part is exactly zero.
    std::vector<BigReal> real_eigenvalues() const;
};

/// Residual tolerance certifying a solve at the context's digit count.
BigReal certification_tolerance(const PrecisionContext& ctx);

/// Cholesky reduction + Householder tridiagonalization + implicit-shift QL.
/// Requires real symmetric H, S with S positive definite at working precision;
/// a nonpositive Cholesky pivot throws OverlapNotPositiveDefiniteError.
Spectrum solve_generalized_symmetric(const MatrixPair& pair, const PrecisionContext& ctx);

/// Hessenberg reduction + shifted complex QR; eigenvectors by inverse
/// iteration.  Requires S = identity.
Spectrum solve_dense_complex(const MatrixPair& pair, const PrecisionContext& ctx);

using PairBuilder = std::function<MatrixPair(const PrecisionContext&)>;

/// Assemble-and-solve with precision escalation: starts at base_digits and
/// doubles (re-assembling through `builder`) on overlap failure, convergence
/// failure, or an uncertified residual, up to 8 x base_digits (further capped
/// by the RITZ_MAX_PRECISION environment variable).  Returns the first
/// certified Spectrum; throws PrecisionExhaustedError otherwise.
Spectrum auto_precision_solve(const PairBuilder& builder, int n, int base_digits);

} // namespace ritz
