#pragma once

#include <optional>
#include <vector>

#include "ritz/basis.hpp"
#include "ritz/matrix.hpp"
#include "ritz/moments.hpp"

namespace ritz {

/// The N x N Hamiltonian/overlap pair of the secular problem.  Exactly one of
/// the Hamiltonian representations is present: real symmetric for real
/// potentials, complex symmetric for the harmonic-oscillator path with
/// imaginary monomials.
struct MatrixPair {
    std::optional<Matrix<BigReal>> hamiltonian_real;
    std::optional<Matrix<BigComplex>> hamiltonian_complex;
    Matrix<BigReal> overlap;
    BasisSpec basis_spec;
    bool identity_overlap = false;

    bool complex_path() const { return hamiltonian_complex.has_value(); }
    int size() const { return overlap.rows(); }
};

MatrixPair make_real_pair(Matrix<BigReal> hamiltonian, Matrix<BigReal> overlap,
                          BasisSpec spec, bool identity_overlap = false);
MatrixPair make_complex_pair(Matrix<BigComplex> hamiltonian, BasisSpec spec);

/// <f | x^monomial | g>: half-line integral for parity-family functions,
/// signed full-line integral (0 or 2 x the half-line moments) for tagged ones.
BigReal polyexp_inner(const PolyExpFunction& f, const PolyExpFunction& g, int monomial,
                      const MomentTable& moments);

/// Assembles H and S over a polynomial-exponential basis.  The kinetic term is
/// evaluated in the first-derivative form T_ij = <f_i'|f_j'>; with the
/// exponential decay at infinity and bounded functions at the origin the
/// integrated-by-parts boundary terms vanish, and the |x|^j cusps never meet a
/// second derivative.
MatrixPair assemble_polyexp(const Potential& v, const std::vector<PolyExpFunction>& basis,
                            const BasisSpec& spec);

/// Assembles H (= p^2 + V(x), possibly complex) in the eigenbasis of the
/// reference oscillator p^2 + frequency^2 x^2, truncated from a padded banded
/// position matrix so every retained entry is exact.  S is the identity.
MatrixPair assemble_harmonic_osc(const Potential& v, int n, const PrecisionContext& ctx,
                                 const Rational& frequency = Rational(1));

} // namespace ritz
