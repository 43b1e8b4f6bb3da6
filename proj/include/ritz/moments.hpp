#pragma once

#include <vector>

#include "ritz/potential.hpp"

namespace ritz {

/// Half-line moment M(n) = integral( x^n * exp(-2*S_k(x)), 0, inf ).
///
/// Closed form via the substitution u = c*x^(k+1), c = 2*sqrt(a)/(k+1):
///   M(n; k, a) = Gamma((n+1)/(k+1)) / ((k+1) * c^((n+1)/(k+1)))
BigReal moment(long n, const AsymptoticForm& decay, const PrecisionContext& ctx);

/// Cache of M(0..max_n) for one (decay, precision) pair.  Built once per
/// assembly, read-only afterwards; concurrent reads are safe.
class MomentTable {
  public:
    MomentTable(const AsymptoticForm& decay, const PrecisionContext& ctx, long max_n);

    const BigReal& operator()(long n) const;

    long max_n() const { return static_cast<long>(values_.size()) - 1; }
    const AsymptoticForm& decay() const { return decay_; }
    const PrecisionContext& context() const { return ctx_; }

  private:
    AsymptoticForm decay_;
    PrecisionContext ctx_;
    std::vector<BigReal> values_;
};

} // namespace ritz
