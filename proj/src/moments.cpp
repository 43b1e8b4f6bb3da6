#include "ritz/moments.hpp"

namespace ritz {

namespace {

// Hard cap on the cached moment range; anything beyond it indicates a runaway
// exponent in assembly rather than a legitimate request.
constexpr long kMaxMomentIndex = 200000;

} // namespace

BigReal moment(long n, const AsymptoticForm& decay, const PrecisionContext& ctx) {
    if (n < 0) throw MathDomainError("moment index must be non-negative");
    const long kp1 = decay.k + 1;
    const BigReal c = decay.sqrt_a(ctx) * 2 / kp1;
    const BigReal g = gamma(BigReal::from_ratio(n + 1, kp1, ctx), ctx);
    return g / (pow_ratio(c, n + 1, kp1) * kp1);
}

MomentTable::MomentTable(const AsymptoticForm& decay, const PrecisionContext& ctx, long max_n)
    : decay_(decay), ctx_(ctx) {
    if (max_n < 0) throw AssemblyError("empty moment table");
    if (max_n > kMaxMomentIndex) {
        throw AssemblyError("moment exponent range overflow: requested M(" +
                            std::to_string(max_n) + ")");
    }
    values_.reserve(static_cast<std::size_t>(max_n) + 1);
    for (long n = 0; n <= max_n; ++n) {
        values_.push_back(moment(n, decay_, ctx_));
    }
}

const BigReal& MomentTable::operator()(long n) const {
    if (n < 0 || n > max_n()) {
        throw AssemblyError("moment M(" + std::to_string(n) + ") outside cached range 0.." +
                            std::to_string(max_n()));
    }
    return values_[static_cast<std::size_t>(n)];
}

} // namespace ritz
