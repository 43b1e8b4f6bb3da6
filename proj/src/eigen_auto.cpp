#include <cstdlib>

#include "ritz/eigen.hpp"

namespace ritz {

namespace {

int max_precision_cap(int fallback) {
    const char* env = std::getenv("RITZ_MAX_PRECISION");
    if (env == nullptr || *env == '\0') return fallback;
    char* tail = nullptr;
    const long v = std::strtol(env, &tail, 10);
    if (tail == env || *tail != '\0' || v < 30) {
        throw ConfigError("RITZ_MAX_PRECISION must be an integer >= 30");
    }
    return v < fallback ? static_cast<int>(v) : fallback;
}

bool certified(const Spectrum& s, const PrecisionContext& ctx) {
    const BigReal tol = certification_tolerance(ctx);
    for (const auto& r : s.residual_norms) {
        if (!(r <= tol)) return false;
    }
    return true;
}

} // namespace

Spectrum auto_precision_solve(const PairBuilder& builder, int n, int base_digits) {
    if (base_digits < 30) {
        throw ConfigError("auto-precision base must be at least 30 digits");
    }
    const int cap = max_precision_cap(8 * base_digits);
    std::string last_condition = "no attempt completed";

    for (int digits = base_digits; digits <= cap; digits *= 2) {
        const PrecisionContext ctx = with_precision(digits);
        MatrixPair pair = builder(ctx);
        if (pair.size() != n) {
            throw ConfigError("pair builder returned size " + std::to_string(pair.size()) +
                              ", expected " + std::to_string(n));
        }
        try {
            Spectrum s = pair.complex_path() ? solve_dense_complex(pair, ctx)
                                             : solve_generalized_symmetric(pair, ctx);
            last_condition = s.overlap_condition_estimate.to_string(6);
            if (certified(s, ctx)) {
                s.achieved_digits = digits;
                return s;
            }
        } catch (const OverlapNotPositiveDefiniteError& e) {
            last_condition = "Cholesky pivot " + std::to_string(e.pivot_index()) +
                             " nonpositive at " + std::to_string(digits) + " digits";
        } catch (const ConvergenceError&) {
            last_condition = "iteration cap at " + std::to_string(digits) + " digits";
        }
    }
    throw PrecisionExhaustedError(
        "no certified spectrum up to " + std::to_string(cap) +
            " digits (base " + std::to_string(base_digits) +
            "); overlap condition estimate: " + last_condition,
        last_condition);
}

} // namespace ritz
