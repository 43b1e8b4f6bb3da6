#include <algorithm>
#include <numeric>

#include "ritz/eigen.hpp"

namespace ritz {

namespace {

BigReal working_epsilon(const PrecisionContext& ctx) {
    return pow_ratio(BigReal(2, ctx), 1 - static_cast<long>(ctx.bits()), 1);
}

struct HessenbergForm {
    Matrix<BigComplex> h; // upper Hessenberg
    Matrix<BigComplex> q; // unitary, original = Q H Q^H
};

// Householder reduction to upper Hessenberg form with accumulated transform.
HessenbergForm to_hessenberg(const Matrix<BigComplex>& input, const PrecisionContext& ctx) {
    const int n = input.rows();
    const BigComplex czero = BigComplex::zero(ctx);
    const BigReal rzero = BigReal::zero(ctx);
    HessenbergForm form{input, Matrix<BigComplex>::identity(n, BigComplex(1, ctx), czero)};
    Matrix<BigComplex>& a = form.h;
    Matrix<BigComplex>& q = form.q;

    for (int k = 0; k + 2 < n; ++k) {
        // Reflector annihilating a(k+2.., k).
        BigReal norm_sq = rzero;
        for (int i = k + 1; i < n; ++i) norm_sq += a(i, k).norm_sq();
        const BigReal norm = sqrt(norm_sq);
        if (norm.is_zero()) continue;

        std::vector<BigComplex> v(static_cast<std::size_t>(n), czero);
        for (int i = k + 1; i < n; ++i) v[static_cast<std::size_t>(i)] = a(i, k);
        const BigComplex& x0 = a(k + 1, k);
        // alpha = -(x0/|x0|) * norm, so v0 = x0 - alpha avoids cancellation.
        BigComplex alpha = x0.is_zero() ? BigComplex(-norm, rzero)
                                        : x0 * (-(norm / x0.abs()));
        v[static_cast<std::size_t>(k + 1)] -= alpha;

        BigReal vv = rzero;
        for (int i = k + 1; i < n; ++i) vv += v[static_cast<std::size_t>(i)].norm_sq();
        if (vv.is_zero()) continue;

        // A <- P A with P = I - 2 v v^H / (v^H v).
        for (int j = k; j < n; ++j) {
            BigComplex w = czero;
            for (int i = k + 1; i < n; ++i) {
                w += v[static_cast<std::size_t>(i)].conj() * a(i, j);
            }
            w /= vv;
            w += w;
            for (int i = k + 1; i < n; ++i) {
                a(i, j) -= w * v[static_cast<std::size_t>(i)];
            }
        }
        // A <- A P.
        for (int i = 0; i < n; ++i) {
            BigComplex w = czero;
            for (int j = k + 1; j < n; ++j) {
                w += a(i, j) * v[static_cast<std::size_t>(j)];
            }
            w /= vv;
            w += w;
            for (int j = k + 1; j < n; ++j) {
                a(i, j) -= w * v[static_cast<std::size_t>(j)].conj();
            }
        }
        // Q <- Q P.
        for (int i = 0; i < n; ++i) {
            BigComplex w = czero;
            for (int j = k + 1; j < n; ++j) {
                w += q(i, j) * v[static_cast<std::size_t>(j)];
            }
            w /= vv;
            w += w;
            for (int j = k + 1; j < n; ++j) {
                q(i, j) -= w * v[static_cast<std::size_t>(j)].conj();
            }
        }
        a(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) a(i, k) = czero;
    }
    return form;
}

// Roots of z^2 - tr z + det, with the cancellation-safe branch choice.
std::pair<BigComplex, BigComplex> quadratic_eigenvalues(const BigComplex& tr,
                                                        const BigComplex& det,
                                                        const PrecisionContext& ctx) {
    const BigComplex four_det = det * BigReal(4, ctx);
    BigComplex disc = sqrt(tr * tr - four_det);
    // Align the square root with tr so tr + disc does not cancel.
    const BigReal dot = tr.real() * disc.real() + tr.imag() * disc.imag();
    if (dot.sign() < 0) disc = -disc;
    const BigComplex r1 = (tr + disc) / BigReal(2, ctx);
    if (r1.is_zero()) {
        const BigComplex r2 = (tr - disc) / BigReal(2, ctx);
        return {r1, r2};
    }
    return {r1, det / r1};
}

// Complex Givens pair zeroing b against a; returns (c, s, r) with
// [[conj(c), conj(s)], [-s, c]] * [a; b] = [r; 0], r real nonnegative.
struct GivensRotation {
    BigComplex c, s;
};

GivensRotation make_givens(const BigComplex& a, const BigComplex& b,
                           const PrecisionContext& ctx) {
    const BigReal r = sqrt(a.norm_sq() + b.norm_sq());
    if (r.is_zero()) {
        return {BigComplex(1, ctx), BigComplex::zero(ctx)};
    }
    return {a / r, b / r};
}

// Eigenvalues of an upper Hessenberg matrix by explicit single-shift QR.
// Destroys `h`.  Budget: 50 * n sweeps overall.
std::vector<BigComplex> hessenberg_eigenvalues(Matrix<BigComplex>& h,
                                               const PrecisionContext& ctx) {
    const int n = h.rows();
    const BigComplex czero = BigComplex::zero(ctx);
    const BigReal eps = working_epsilon(ctx);
    std::vector<BigComplex> eig(static_cast<std::size_t>(n), czero);

    // Fallback deflation scale for rows whose neighborhood vanishes.
    BigReal fallback = BigReal::zero(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fallback += h(i, j).abs();
    if (fallback.is_zero()) fallback = BigReal(1, ctx);

    const long sweep_cap = 50L * n;
    long sweeps = 0;
    int hi = n - 1;
    int stuck = 0;

    while (hi >= 0) {
        // Deflate negligible subdiagonals, then locate the active block.
        int lo = hi;
        while (lo > 0) {
            BigReal scale = h(lo - 1, lo - 1).abs() + h(lo, lo).abs();
            if (scale.is_zero()) scale = fallback;
            if (h(lo, lo - 1).abs() <= eps * scale) {
                h(lo, lo - 1) = czero;
                break;
            }
            --lo;
        }

        if (lo == hi) {
            eig[static_cast<std::size_t>(hi)] = h(hi, hi);
            --hi;
            stuck = 0;
            continue;
        }
        if (lo == hi - 1) {
            const BigComplex tr = h(lo, lo) + h(hi, hi);
            const BigComplex det = h(lo, lo) * h(hi, hi) - h(lo, hi) * h(hi, lo);
            auto [r1, r2] = quadratic_eigenvalues(tr, det, ctx);
            eig[static_cast<std::size_t>(hi)] = r1;
            eig[static_cast<std::size_t>(hi - 1)] = r2;
            hi -= 2;
            stuck = 0;
            continue;
        }

        if (++sweeps > sweep_cap) {
            throw ConvergenceError("complex QR exceeded " + std::to_string(sweep_cap) +
                                   " sweeps");
        }

        // Wilkinson shift from the trailing 2x2, with an exceptional shift
        // every tenth sweep on the same block.
        BigComplex shift;
        if (++stuck % 10 == 0) {
            shift = BigComplex(h(hi, hi - 1).abs() + h(hi - 1, hi - 2).abs(),
                               BigReal::zero(ctx));
        } else {
            const BigComplex tr = h(hi - 1, hi - 1) + h(hi, hi);
            const BigComplex det =
                h(hi - 1, hi - 1) * h(hi, hi) - h(hi - 1, hi) * h(hi, hi - 1);
            auto [r1, r2] = quadratic_eigenvalues(tr, det, ctx);
            const BigComplex d1 = r1 - h(hi, hi);
            const BigComplex d2 = r2 - h(hi, hi);
            shift = d1.norm_sq() <= d2.norm_sq() ? r1 : r2;
        }

        // Explicit QR step on the block: H - sigma I = Q R, H <- R Q + sigma I.
        for (int i = lo; i <= hi; ++i) h(i, i) -= shift;
        std::vector<GivensRotation> rotations;
        rotations.reserve(static_cast<std::size_t>(hi - lo));
        for (int i = lo; i < hi; ++i) {
            GivensRotation g = make_givens(h(i, i), h(i + 1, i), ctx);
            for (int j = i; j <= hi; ++j) {
                const BigComplex t1 = h(i, j);
                const BigComplex t2 = h(i + 1, j);
                h(i, j) = g.c.conj() * t1 + g.s.conj() * t2;
                h(i + 1, j) = g.c * t2 - g.s * t1;
            }
            rotations.push_back(std::move(g));
        }
        for (int i = lo; i < hi; ++i) {
            const GivensRotation& g = rotations[static_cast<std::size_t>(i - lo)];
            const int row_end = std::min(i + 1, hi);
            for (int r = lo; r <= row_end; ++r) {
                const BigComplex t1 = h(r, i);
                const BigComplex t2 = h(r, i + 1);
                h(r, i) = t1 * g.c + t2 * g.s;
                h(r, i + 1) = t2 * g.c.conj() - t1 * g.s.conj();
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += shift;
    }
    return eig;
}

// Solves (H - lambda I) x = b for upper Hessenberg H by Gaussian elimination
// with partial pivoting; exact zero pivots are replaced by a tiny multiple of
// the matrix scale (standard inverse-iteration practice).
std::vector<BigComplex> shifted_hessenberg_solve(const Matrix<BigComplex>& hess,
                                                 const BigComplex& lambda,
                                                 std::vector<BigComplex> b,
                                                 const PrecisionContext& ctx) {
    const int n = hess.rows();
    const BigComplex czero = BigComplex::zero(ctx);
    Matrix<BigComplex> u(n, n, czero);
    for (int i = 0; i < n; ++i) {
        const int j0 = i > 0 ? i - 1 : 0;
        for (int j = j0; j < n; ++j) u(i, j) = hess(i, j);
        u(i, i) -= lambda;
    }

    BigReal scale = BigReal::zero(ctx);
    for (int i = 0; i < n; ++i) scale += u(i, i).abs();
    BigReal tiny = working_epsilon(ctx) * (scale.is_zero() ? BigReal(1, ctx) : scale);

    for (int k = 0; k + 1 < n; ++k) {
        if (u(k + 1, k).abs() > u(k, k).abs()) {
            for (int j = k; j < n; ++j) std::swap(u(k, j), u(k + 1, j));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k + 1)]);
        }
        if (u(k, k).is_zero()) u(k, k) = BigComplex(tiny, BigReal::zero(ctx));
        const BigComplex m = u(k + 1, k) / u(k, k);
        if (!m.is_zero()) {
            for (int j = k; j < n; ++j) u(k + 1, j) -= m * u(k, j);
            b[static_cast<std::size_t>(k + 1)] -= m * b[static_cast<std::size_t>(k)];
        }
        u(k + 1, k) = czero;
    }
    if (u(n - 1, n - 1).is_zero()) u(n - 1, n - 1) = BigComplex(tiny, BigReal::zero(ctx));

    std::vector<BigComplex> x(static_cast<std::size_t>(n), czero);
    for (int i = n - 1; i >= 0; --i) {
        BigComplex t = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) t -= u(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = t / u(i, i);
    }
    return x;
}

} // namespace

Spectrum solve_dense_complex(const MatrixPair& pair, const PrecisionContext& ctx) {
    if (!pair.hamiltonian_complex) {
        throw ConfigError("dense complex solver requires a complex Hamiltonian");
    }
    if (!pair.identity_overlap) {
        throw ConfigError("dense complex solver requires an identity overlap");
    }
    const Matrix<BigComplex>& h0 = *pair.hamiltonian_complex;
    const int n = h0.rows();
    if (n == 0) throw ConfigError("empty matrix pair");

    const BigComplex czero = BigComplex::zero(ctx);
    Spectrum out;
    out.overlap_condition_estimate = BigReal(1, ctx);
    out.achieved_digits = ctx.decimal_digits();

    if (n == 1) {
        out.eigenvalues.push_back(h0(0, 0));
        Matrix<BigComplex> v(1, 1, BigComplex(1, ctx));
        out.eigenvectors = std::move(v);
        out.residual_norms.push_back(BigReal::zero(ctx));
        return out;
    }

    HessenbergForm form = to_hessenberg(h0, ctx);
    Matrix<BigComplex> iterate = form.h;
    std::vector<BigComplex> eig = hessenberg_eigenvalues(iterate, ctx);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (eig[a].real() < eig[b].real()) return true;
        if (eig[b].real() < eig[a].real()) return false;
        return eig[a].imag() < eig[b].imag();
    });

    Matrix<BigComplex> vectors(n, n, czero);
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.residual_norms.reserve(static_cast<std::size_t>(n));

    for (int idx = 0; idx < n; ++idx) {
        const BigComplex lambda = eig[order[static_cast<std::size_t>(idx)]];
        out.eigenvalues.push_back(lambda);

        // Inverse iteration on the Hessenberg form, then back-transform.
        std::vector<BigComplex> y(static_cast<std::size_t>(n), BigComplex(1, ctx));
        for (int pass = 0; pass < 2; ++pass) {
            y = shifted_hessenberg_solve(form.h, lambda, std::move(y), ctx);
            BigReal biggest = BigReal::zero(ctx);
            for (const auto& c : y) {
                BigReal m = c.abs();
                if (m > biggest) biggest = m;
            }
            if (biggest.is_zero()) break;
            for (auto& c : y) c /= biggest;
        }

        std::vector<BigComplex> x(static_cast<std::size_t>(n), czero);
        for (int i = 0; i < n; ++i) {
            BigComplex t = czero;
            for (int j = 0; j < n; ++j) t += form.q(i, j) * y[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(i)] = std::move(t);
        }
        BigReal norm_sq = BigReal::zero(ctx);
        for (const auto& c : x) norm_sq += c.norm_sq();
        const BigReal norm = sqrt(norm_sq);
        for (auto& c : x) c /= norm;

        BigReal res_sq = BigReal::zero(ctx);
        for (int i = 0; i < n; ++i) {
            BigComplex t = czero;
            for (int j = 0; j < n; ++j) t += h0(i, j) * x[static_cast<std::size_t>(j)];
            t -= lambda * x[static_cast<std::size_t>(i)];
            res_sq += t.norm_sq();
        }
        out.residual_norms.push_back(sqrt(res_sq));
        for (int i = 0; i < n; ++i) vectors(i, idx) = x[static_cast<std::size_t>(i)];
    }
    out.eigenvectors = std::move(vectors);
    return out;
}

} // namespace ritz
