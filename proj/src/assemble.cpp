#include "ritz/assemble.hpp"

#include <algorithm>

namespace ritz {

MatrixPair make_real_pair(Matrix<BigReal> hamiltonian, Matrix<BigReal> overlap, BasisSpec spec,
                          bool identity_overlap) {
    MatrixPair pair;
    pair.hamiltonian_real = std::move(hamiltonian);
    pair.overlap = std::move(overlap);
    pair.basis_spec = std::move(spec);
    pair.identity_overlap = identity_overlap;
    return pair;
}

MatrixPair make_complex_pair(Matrix<BigComplex> hamiltonian, BasisSpec spec) {
    MatrixPair pair;
    const int n = hamiltonian.rows();
    const PrecisionContext ctx = n > 0 ? hamiltonian(0, 0).context() : PrecisionContext();
    pair.hamiltonian_complex = std::move(hamiltonian);
    pair.overlap = Matrix<BigReal>::identity(n, BigReal(1, ctx), BigReal::zero(ctx));
    pair.basis_spec = std::move(spec);
    pair.identity_overlap = true;
    return pair;
}

BigReal polyexp_inner(const PolyExpFunction& f, const PolyExpFunction& g, int monomial,
                      const MomentTable& moments) {
    if (f.decay() != g.decay()) {
        throw AssemblyError("inner product between functions with different decay forms");
    }
    const PrecisionContext& ctx = f.context();
    const bool f_half = f.extension() == LineExtension::HALF_LINE;
    const bool g_half = g.extension() == LineExtension::HALF_LINE;
    if (f_half != g_half) {
        throw AssemblyError("inner product mixes half-line and full-line functions");
    }

    long prefactor = 1;
    if (!f_half) {
        // Full line: the integrand has definite parity; odd integrands vanish.
        int sign = monomial % 2 == 0 ? 1 : -1;
        if (f.extension() != g.extension()) sign = -sign;
        if (sign < 0) return BigReal::zero(ctx);
        prefactor = 2;
    }

    BigReal sum = BigReal::zero(ctx);
    for (const auto& [p, cf] : f.terms()) {
        for (const auto& [q, cg] : g.terms()) {
            sum += cf * cg * moments(p + q + monomial);
        }
    }
    return sum * prefactor;
}

MatrixPair assemble_polyexp(const Potential& v, const std::vector<PolyExpFunction>& basis,
                            const BasisSpec& spec) {
    if (basis.empty()) throw AssemblyError("empty basis");
    if (!v.is_real()) {
        throw AssemblyError(
            "polynomial-exponential assembly requires a real potential; "
            "imaginary monomials go through the harmonic-oscillator path");
    }
    const PrecisionContext ctx = basis.front().context();
    const AsymptoticForm decay = basis.front().decay();
    const bool half_line = basis.front().extension() == LineExtension::HALF_LINE;
    int max_exp = 0;
    for (const auto& f : basis) {
        if (f.decay() != decay) throw AssemblyError("basis functions share no decay form");
        if ((f.extension() == LineExtension::HALF_LINE) != half_line) {
            throw AssemblyError("basis mixes half-line and full-line functions");
        }
        max_exp = std::max(max_exp, f.max_exponent());
    }
    if (half_line && v.parity() != Parity::SYMMETRIC) {
        throw AssemblyError(
            "parity-family basis requires a symmetric potential (half-line reduction)");
    }

    const int n = static_cast<int>(basis.size());
    const long need = std::max(2L * (max_exp + decay.k), 2L * max_exp + v.degree());
    const MomentTable moments(decay, ctx, need);

    std::vector<PolyExpFunction> derivatives;
    derivatives.reserve(basis.size());
    for (const auto& f : basis) derivatives.push_back(differentiate(f));

    const BigReal zero = BigReal::zero(ctx);
    Matrix<BigReal> s(n, n, zero);
    Matrix<BigReal> h(n, n, zero);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            s(i, j) = polyexp_inner(basis[i], basis[j], 0, moments);
            BigReal hij = polyexp_inner(derivatives[i], derivatives[j], 0, moments);
            for (const auto& [m, cm] : v.real_coeffs()) {
                hij += cm.to_real(ctx) * polyexp_inner(basis[i], basis[j], m, moments);
            }
            h(i, j) = hij;
            if (j != i) {
                s(j, i) = s(i, j);
                h(j, i) = std::move(hij);
            }
        }
    }
    return make_real_pair(std::move(h), std::move(s), spec);
}

MatrixPair assemble_harmonic_osc(const Potential& v, int n, const PrecisionContext& ctx,
                                 const Rational& frequency) {
    if (n < 1) throw AssemblyError("basis size must be positive");
    if (frequency.sign() <= 0) throw AssemblyError("oscillator frequency must be positive");

    const int degree = v.degree();
    const int padded = n + degree + 1;
    const BigReal zero = BigReal::zero(ctx);
    const BigReal one(1, ctx);
    const BigReal w = frequency.to_real(ctx);

    // Position matrix of the reference oscillator p^2 + w^2 x^2:
    // X_{m,m+1} = sqrt((m+1)/(2w)), eigenvalues of the reference are w(2m+1).
    Matrix<BigReal> x(padded, padded, zero);
    for (int m = 0; m + 1 < padded; ++m) {
        BigReal entry = sqrt(BigReal(m + 1, ctx) / (w * 2));
        x(m, m + 1) = entry;
        x(m + 1, m) = std::move(entry);
    }

    // Monomial powers at padded size; the padding makes the truncated blocks
    // equal to the infinite-dimensional products.
    const int max_power = std::max(degree, 2);
    std::vector<Matrix<BigReal>> powers;
    powers.reserve(static_cast<std::size_t>(max_power) + 1);
    powers.push_back(Matrix<BigReal>::identity(padded, one, zero));
    powers.push_back(x);
    for (int m = 2; m <= max_power; ++m) {
        powers.push_back(multiply(powers.back(), x, zero));
    }

    // p^2 = w * diag(2m+1) - w^2 X^2, truncated from the padded product.
    // Entries are computed once per unordered pair and mirrored, keeping H
    // exactly symmetric despite rounding in the X^m products.
    Matrix<BigReal> h_re(n, n, zero);
    const BigReal w_sq = w * w;
    for (int i = 0; i < n; ++i) {
        h_re(i, i) = w * (2 * i + 1);
        for (int j = i; j < n; ++j) {
            h_re(i, j) -= w_sq * powers[2](i, j);
            for (const auto& [m, cm] : v.real_coeffs()) {
                h_re(i, j) += cm.to_real(ctx) * powers[m](i, j);
            }
            if (j != i) h_re(j, i) = h_re(i, j);
        }
    }

    BasisSpec spec;
    spec.family = BasisFamily::HARMONIC_OSC;
    spec.sector = Sector::ALL;
    spec.size = n;

    if (v.is_real()) {
        Matrix<BigReal> s = Matrix<BigReal>::identity(n, one, zero);
        return make_real_pair(std::move(h_re), std::move(s), std::move(spec), true);
    }

    Matrix<BigComplex> h(n, n, BigComplex::zero(ctx));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            BigReal im = zero;
            for (const auto& [m, cm] : v.imag_coeffs()) {
                im += cm.to_real(ctx) * powers[m](i, j);
            }
            h(i, j) = BigComplex(h_re(i, j), std::move(im));
            if (j != i) h(j, i) = h(i, j);
        }
    }
    return make_complex_pair(std::move(h), std::move(spec));
}

} // namespace ritz
