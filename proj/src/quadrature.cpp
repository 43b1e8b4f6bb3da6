#include "ritz/quadrature.hpp"

#include <string>

namespace ritz {

namespace {

// ln(x) beyond which the integrand is taken as zero.  Any admissible integrand
// has decayed below every representable magnitude long before this.
constexpr double kLnAbscissaCap = 1.0e8;

struct DeTransform {
    // x = exp(lambda * sinh t), weight = lambda * cosh(t) * x, lambda = pi/2.
    explicit DeTransform(const PrecisionContext& ctx)
        : lambda(BigReal::pi(ctx) / 2), ctx_(ctx) {}

    // Returns f(x(t)) * w(t), or zero when x(t) overflows the admissible range.
    BigReal term(const std::function<BigReal(const BigReal&)>& f, const BigReal& t) const {
        const BigReal et = exp(t);
        const BigReal inv = BigReal(1, ctx_) / et;
        const BigReal sinh_t = (et - inv) / 2;
        const BigReal cosh_t = (et + inv) / 2;
        const BigReal lnx = lambda * sinh_t;
        if (lnx.to_double() > kLnAbscissaCap) return BigReal::zero(ctx_);
        const BigReal x = exp(lnx);
        const BigReal value = f(x);
        if (value.is_nan()) {
            throw QuadratureError("integrand returned NaN at x = " + x.to_string(8));
        }
        return value * cosh_t * x * lambda;
    }

    BigReal lambda;
    PrecisionContext ctx_;
};

} // namespace

BigReal quadrature_halfline(const std::function<BigReal(const BigReal&)>& f,
                            const PrecisionContext& ctx,
                            int target_digits,
                            int max_level) {
    if (target_digits <= 0) target_digits = ctx.decimal_digits() - 8;
    if (target_digits < 1) target_digits = 1;

    const DeTransform de(ctx);
    const BigReal zero = BigReal::zero(ctx);
    // A term is tail-negligible once it stops affecting the requested digits.
    const BigReal tail_eps = pow_ratio(BigReal(10, ctx), -(target_digits + 6), 1);

    // Running trapezoid sum over the current grid; each level adds the odd
    // multiples of the halved step.
    BigReal total = de.term(f, zero);
    BigReal h(1, ctx);
    BigReal previous = zero;
    bool have_previous = false;

    for (int level = 0; level <= max_level; ++level) {
        if (level > 0) h /= 2;
        const long stride = level == 0 ? 1 : 2;
        const long first = 1;
        // Admissible integrands close their tails well inside |t| <= 10; the
        // cap only trips on runaway tails.
        const long j_cap = (24L << (level > 16 ? 16 : level)) + 64;

        for (int direction : {+1, -1}) {
            int quiet = 0;
            bool closed = false;
            for (long j = first; j <= j_cap; j += stride) {
                BigReal t = h * (direction * j);
                BigReal term = de.term(f, t);
                total += term;
                if (abs(term) <= tail_eps * (abs(total) + tail_eps)) {
                    if (++quiet >= 3) {
                        closed = true;
                        break;
                    }
                } else {
                    quiet = 0;
                }
            }
            if (!closed) {
                throw QuadratureError(
                    "integrand tail did not decay (is it super-polynomially decaying?)");
            }
        }

        BigReal estimate = total * h;
        if (have_previous) {
            const BigReal diff = abs(estimate - previous);
            const BigReal goal =
                pow_ratio(BigReal(10, ctx), -target_digits, 1) * abs(estimate);
            if (diff <= goal) return estimate;
        }
        previous = std::move(estimate);
        have_previous = true;
    }
    throw QuadratureError("quadrature did not reach " + std::to_string(target_digits) +
                          " digits within " + std::to_string(max_level) + " levels");
}

} // namespace ritz
