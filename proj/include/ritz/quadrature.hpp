#pragma once

#include <functional>

#include "ritz/mp.hpp"

namespace ritz {

/// Double-exponential (tanh-sinh family) quadrature of integral(f, 0, inf) for
/// integrands that decay super-polynomially.  The half line is mapped through
/// x = exp((pi/2) sinh t) and the trapezoid step is halved until two successive
/// levels agree to `target_digits` (default: context digits - 8).
///
/// This routine is the library's independent verification channel; it shares
/// nothing with the closed-form moment path beyond scalar arithmetic.
///
/// Throws QuadratureError when the level cap is exhausted or the integrand
/// tail fails to decay.
BigReal quadrature_halfline(const std::function<BigReal(const BigReal&)>& f,
                            const PrecisionContext& ctx,
                            int target_digits = 0,
                            int max_level = 12);

} // namespace ritz
