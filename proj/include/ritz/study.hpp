#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ritz/eigen.hpp"

namespace ritz {

enum class ModelId { V_Q, V_S, IX3 };

/// Published high-precision eigenvalues E0..E3 used as convergence references.
struct ReferenceEigenvalues {
    ModelId id;
    std::vector<std::string> values;

    std::vector<BigReal> parse(const PrecisionContext& ctx) const;
};

/// Embedded reference blocks for the three built-in models.  Throws
/// ConfigError for an unknown id.
const ReferenceEigenvalues& reference_table(ModelId id);

/// Matches a parsed potential against the built-in models.
std::optional<ModelId> builtin_model(const Potential& v);

std::string model_name(ModelId id);

enum class BasisChoice { AUTO, S1, S2, S3, HO };

std::string basis_name(BasisChoice choice);

/// AUTO resolves through asymptotic analysis (or the harmonic-oscillator path
/// for potentials with imaginary terms); S1/S2/S3 force the decay exponent
/// k = 1/2/3 with a = 1 regardless of the potential.
struct ResolvedBasis {
    bool harmonic = false;
    AsymptoticForm decay; // meaningful when !harmonic
};

ResolvedBasis resolve_basis(const Potential& v, BasisChoice choice);

enum class SectorChoice { EVEN, ODD, BOTH };

struct SolveRequest {
    explicit SolveRequest(Potential p) : potential(std::move(p)) {}

    Potential potential;
    BasisChoice basis = BasisChoice::AUTO;
    SectorChoice sector = SectorChoice::BOTH;
    int n = 10;
    int states = 4;
    int base_digits = 60;
    Rational ho_frequency = Rational(1);
    /// Complex spectra of truncated PT-symmetric problems contain spurious
    /// conjugate pairs with large imaginary parts; eigenvalues with
    /// |Im E| > imag_filter are excluded from state tracking (their selected
    /// neighbours keep their imaginary parts).  <= 0 disables the filter.
    double imag_filter = 1e-6;
};

struct SolveResult {
    std::vector<BigComplex> eigenvalues; // lowest `states`, interleaved sectors
    int achieved_digits = 0;
    BigReal max_residual;
    BigReal overlap_condition_estimate;
};

/// Assembles and auto-precision-solves one basis size, per parity sector for
/// symmetric potentials, and interleaves the sector spectra by value.
SolveResult solve_states(const SolveRequest& request);

struct ConvergenceRow {
    int n = 0;
    BigComplex eigenvalue;
    BigReal log10_error;
};

/// Per-state convergence series: L_N = log10|E_n(N) - E_n(ref)|.
struct ConvergenceRecord {
    int state = 0;
    std::string label; // series label (typically the basis name)
    std::vector<ConvergenceRow> rows;
};

struct StudyConfig {
    explicit StudyConfig(Potential p) : potential(std::move(p)) {}

    Potential potential;
    BasisChoice basis = BasisChoice::AUTO;
    int n_min = 4;
    int n_max = 20;
    int states = 4;
    int base_digits = 60;
    Rational ho_frequency = Rational(1);
    double imag_filter = 1e-6;
    /// Reference eigenvalues as decimal strings; when empty the built-in table
    /// is used (requires the potential to be one of the built-in models).
    std::vector<std::string> reference;
    /// Max concurrent solves; 0 = hardware concurrency.
    int threads = 0;
    std::string label;
};

/// Runs the solver across N = n_min..n_max and records logarithmic errors per
/// tracked state.  Solver failures are rethrown annotated with the failing N.
std::vector<ConvergenceRecord> run_study(const StudyConfig& config);

/// CSV with the exact header `state,N,eigenvalue,log10_error`, eigenvalues as
/// full-precision decimal strings.  Throws ConfigError on empty input.
void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& os);

/// Parses CSV produced by emit_csv (series labels are not stored in the CSV).
std::vector<ConvergenceRecord> parse_csv(std::istream& is, const PrecisionContext& ctx);

/// Static SVG 1.1 chart: one panel per state, one series per (state, label)
/// pair with legend.  Throws ConfigError on empty input.
void emit_svg(const std::vector<ConvergenceRecord>& records, std::ostream& os);

} // namespace ritz
