#include <algorithm>
#include <numeric>

#include "ritz/eigen.hpp"

namespace ritz {

std::vector<BigReal> Spectrum::real_eigenvalues() const {
    std::vector<BigReal> out;
    out.reserve(eigenvalues.size());
    for (const auto& e : eigenvalues) {
        if (!e.imag().is_zero()) {
            throw MathDomainError("spectrum has nonzero imaginary parts");
        }
        out.push_back(e.real());
    }
    return out;
}

BigReal certification_tolerance(const PrecisionContext& ctx) {
    return pow_ratio(BigReal(10, ctx), -ctx.decimal_digits(), 2);
}

namespace {

BigReal working_epsilon(const PrecisionContext& ctx) {
    return pow_ratio(BigReal(2, ctx), 1 - static_cast<long>(ctx.bits()), 1);
}

BigReal sign_like(const BigReal& magnitude, const BigReal& sign_source) {
    return sign_source.sign() >= 0 ? abs(magnitude) : -abs(magnitude);
}

// Lower Cholesky factor of a symmetric positive definite matrix.  A pivot
// below the rounding floor of its own diagonal entry means the matrix is not
// resolvably positive definite at this precision.
Matrix<BigReal> cholesky_lower(const Matrix<BigReal>& s, const PrecisionContext& ctx) {
    const int n = s.rows();
    Matrix<BigReal> l(n, n, BigReal::zero(ctx));
    const BigReal pivot_floor = working_epsilon(ctx) * (16L * n);
    for (int j = 0; j < n; ++j) {
        BigReal pivot = s(j, j);
        for (int k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
        if (!pivot.is_finite() || pivot.sign() <= 0 || pivot <= pivot_floor * abs(s(j, j))) {
            throw OverlapNotPositiveDefiniteError(j, ctx.decimal_digits());
        }
        l(j, j) = sqrt(pivot);
        for (int i = j + 1; i < n; ++i) {
            BigReal t = s(i, j);
            for (int k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
            l(i, j) = t / l(j, j);
        }
    }
    return l;
}

// A = L^-1 H L^-T, symmetrized against rounding noise.
Matrix<BigReal> reduce_to_standard(const Matrix<BigReal>& h, const Matrix<BigReal>& l,
                                   const PrecisionContext& ctx) {
    const int n = h.rows();
    Matrix<BigReal> w(n, n, BigReal::zero(ctx));
    // Solve L W = H column by column.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            BigReal t = h(i, j);
            for (int k = 0; k < i; ++k) t -= l(i, k) * w(k, j);
            w(i, j) = t / l(i, i);
        }
    }
    // Solve L A^T = W^T, i.e. A(j, i) from rows of W.
    Matrix<BigReal> a(n, n, BigReal::zero(ctx));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            BigReal t = w(j, i);
            for (int k = 0; k < i; ++k) t -= l(i, k) * a(j, k);
            a(j, i) = t / l(i, i);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            BigReal m = (a(i, j) + a(j, i)) / 2;
            a(i, j) = m;
            a(j, i) = std::move(m);
        }
    }
    return a;
}

// Householder reduction of a symmetric matrix to tridiagonal form, with the
// orthogonal transform accumulated in place (classic tred2 scheme).
void tridiagonalize(Matrix<BigReal>& a, std::vector<BigReal>& d, std::vector<BigReal>& e,
                    const PrecisionContext& ctx) {
    const int n = a.rows();
    const BigReal zero = BigReal::zero(ctx);
    d.assign(static_cast<std::size_t>(n), zero);
    e.assign(static_cast<std::size_t>(n), zero);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        BigReal h = zero;
        if (l > 0) {
            BigReal scale = zero;
            for (int k = 0; k <= l; ++k) scale += abs(a(i, k));
            if (scale.is_zero()) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                BigReal f = a(i, l);
                BigReal g = f.sign() >= 0 ? -sqrt(h) : sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = zero;
                for (int j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = zero;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const BigReal hh = f / (h * 2);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] -= hh * f;
                    const BigReal& g2 = e[j];
                    for (int k = 0; k <= j; ++k) {
                        a(j, k) -= f * e[k] + g2 * a(i, k);
                    }
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }

    // Accumulate transformations.
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (i > 0 && !d[i].is_zero()) {
            for (int j = 0; j <= l; ++j) {
                BigReal g = zero;
                for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
                for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = BigReal(1, ctx);
        for (int j = 0; j <= l; ++j) {
            a(j, i) = zero;
            a(i, j) = zero;
        }
    }
}

// Implicit-shift QL iteration on a tridiagonal matrix, rotations applied to
// the eigenvector columns of z.  Total sweep budget: 50 * n.
void ql_implicit_shift(std::vector<BigReal>& d, std::vector<BigReal>& e, Matrix<BigReal>& z,
                       const PrecisionContext& ctx) {
    const int n = static_cast<int>(d.size());
    const BigReal zero = BigReal::zero(ctx);
    const BigReal one(1, ctx);
    const BigReal eps = working_epsilon(ctx);
    const long sweep_cap = 50L * n;
    long sweeps = 0;

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = zero;

    for (int l = 0; l < n; ++l) {
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const BigReal dd = abs(d[m]) + abs(d[m + 1]);
                if (abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++sweeps > sweep_cap) {
                throw ConvergenceError("QL iteration exceeded " + std::to_string(sweep_cap) +
                                       " sweeps");
            }
            BigReal g = (d[l + 1] - d[l]) / (e[l] * 2);
            BigReal r = hypot(g, one);
            g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
            BigReal s = one;
            BigReal c = one;
            BigReal p = zero;
            int i = m - 1;
            for (; i >= l; --i) {
                BigReal f = s * e[i];
                const BigReal b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if (r.is_zero()) {
                    d[i + 1] -= p;
                    e[m] = zero;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + c * b * 2;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (int k = 0; k < n; ++k) {
                    f = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * f;
                    z(k, i) = c * z(k, i) - s * f;
                }
            }
            if (r.is_zero() && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = zero;
        }
    }
}

BigReal column_norm(const Matrix<BigReal>& m, int col) {
    BigReal sum = BigReal::zero(m(0, col).context());
    for (int i = 0; i < m.rows(); ++i) sum += m(i, col) * m(i, col);
    return sqrt(sum);
}

} // namespace

Spectrum solve_generalized_symmetric(const MatrixPair& pair, const PrecisionContext& ctx) {
    if (!pair.hamiltonian_real) {
        throw ConfigError("generalized symmetric solver requires a real Hamiltonian");
    }
    const Matrix<BigReal>& h = *pair.hamiltonian_real;
    const Matrix<BigReal>& s = pair.overlap;
    const int n = h.rows();
    if (n == 0) throw ConfigError("empty matrix pair");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (h(i, j) != h(j, i) || s(i, j) != s(j, i)) {
                throw ConfigError("generalized symmetric solver requires symmetric H and S");
            }
        }
    }

    const Matrix<BigReal> l = cholesky_lower(s, ctx);
    BigReal lmax = l(0, 0);
    BigReal lmin = l(0, 0);
    for (int i = 1; i < n; ++i) {
        if (l(i, i) > lmax) lmax = l(i, i);
        if (l(i, i) < lmin) lmin = l(i, i);
    }
    BigReal cond_estimate = (lmax / lmin) * (lmax / lmin);

    Matrix<BigReal> a = reduce_to_standard(h, l, ctx);
    std::vector<BigReal> d, e;
    tridiagonalize(a, d, e, ctx);
    ql_implicit_shift(d, e, a, ctx);

    // Back-transform the reduced eigenvectors: C = L^-T Z, column by column.
    Matrix<BigReal> c(n, n, BigReal::zero(ctx));
    for (int col = 0; col < n; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            BigReal t = a(i, col);
            for (int k = i + 1; k < n; ++k) t -= l(k, i) * c(k, col);
            c(i, col) = t / l(i, i);
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

    Spectrum out;
    out.overlap_condition_estimate = std::move(cond_estimate);
    out.achieved_digits = ctx.decimal_digits();
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    Matrix<BigComplex> vectors(n, n, BigComplex::zero(ctx));
    out.residual_norms.reserve(static_cast<std::size_t>(n));

    for (int idx = 0; idx < n; ++idx) {
        const int src = order[idx];
        out.eigenvalues.emplace_back(d[src]);
        // Residual ||H c - E S c||_2 / ||c||_2 against the original pair.
        BigReal num = BigReal::zero(ctx);
        for (int i = 0; i < n; ++i) {
            BigReal ri = BigReal::zero(ctx);
            for (int k = 0; k < n; ++k) {
                ri += (h(i, k) - d[src] * s(i, k)) * c(k, src);
            }
            num += ri * ri;
        }
        out.residual_norms.push_back(sqrt(num) / column_norm(c, src));
        for (int i = 0; i < n; ++i) vectors(i, idx) = BigComplex(c(i, src));
    }
    out.eigenvectors = std::move(vectors);
    return out;
}

} // namespace ritz
