#pragma once

#include "ritz/study.hpp"

namespace ritz::bench {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Built-in reproductions of the three reference models and the published
/// convergence-rate orderings.
///
/// 1: quartic double well, s2 basis, N=50 -> E0..E3 to >= 15 digits.
/// 2: sextic double well, s3 basis, N=50 -> E0..E3 to >= 15 digits.
/// 3: PT-symmetric cubic, oscillator basis, N=60 -> Re E0..E3 to >= 10 digits
///    and |Im E| <= 1e-10.
/// 4: quartic double well at N=40: L(s2) < L(s1) < L(s3) for states 0..3.
/// 5: sextic double well at N=40: L(s3) < L(s2) < L(s1) for states 0..3.
/// 6: variational sweep N=4..50 on both wells: upper bound and monotonicity
///    within 1e-20.
CriterionResult reproduce_double_well(ModelId id, int n = 50, int base_digits = 60);
CriterionResult reproduce_cubic_pt(int n = 60, int base_digits = 60);
CriterionResult convergence_ordering(ModelId id, int n = 40, int base_digits = 60);
CriterionResult variational_sweep(int n_lo = 4, int n_hi = 50, int base_digits = 60,
                                  int threads = 0);

/// Criteria 1-5, plus 6 when `full` is set.
std::vector<CriterionResult> run_benchmark(bool full, int threads = 0);

} // namespace ritz::bench
