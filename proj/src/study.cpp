#include "ritz/study.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace ritz {

std::string basis_name(BasisChoice choice) {
    switch (choice) {
        case BasisChoice::AUTO:
            return "auto";
        case BasisChoice::S1:
            return "s1";
        case BasisChoice::S2:
            return "s2";
        case BasisChoice::S3:
            return "s3";
        case BasisChoice::HO:
            return "ho";
    }
    return "?";
}

ResolvedBasis resolve_basis(const Potential& v, BasisChoice choice) {
    ResolvedBasis out;
    switch (choice) {
        case BasisChoice::AUTO:
            if (!v.is_real()) {
                // Imaginary monomials take the harmonic-oscillator route.
                out.harmonic = true;
            } else {
                out.decay = analyze_asymptotics(v);
            }
            break;
        case BasisChoice::S1:
            out.decay = AsymptoticForm{1, Rational(1)};
            break;
        case BasisChoice::S2:
            out.decay = AsymptoticForm{2, Rational(1)};
            break;
        case BasisChoice::S3:
            out.decay = AsymptoticForm{3, Rational(1)};
            break;
        case BasisChoice::HO:
            out.harmonic = true;
            break;
    }
    return out;
}

namespace {

BasisSpec polyexp_spec(const Potential& v, const AsymptoticForm& decay, Sector sector, int n) {
    BasisSpec spec;
    spec.decay = decay;
    spec.size = n;
    if (v.parity() == Parity::SYMMETRIC) {
        spec.family = decay.k % 2 == 0 ? BasisFamily::K_EVEN : BasisFamily::K_ODD;
        spec.sector = sector;
    } else {
        spec.family = BasisFamily::ASYMMETRIC;
        spec.sector = Sector::ALL;
    }
    return spec;
}

Spectrum solve_one_spec(const SolveRequest& request, const ResolvedBasis& basis,
                        Sector sector) {
    PairBuilder builder;
    if (basis.harmonic) {
        builder = [&request](const PrecisionContext& ctx) {
            return assemble_harmonic_osc(request.potential, request.n, ctx,
                                         request.ho_frequency);
        };
    } else {
        const BasisSpec spec = polyexp_spec(request.potential, basis.decay, sector, request.n);
        builder = [&request, spec](const PrecisionContext& ctx) {
            return assemble_polyexp(request.potential, build_basis(spec, ctx), spec);
        };
    }
    return auto_precision_solve(builder, request.n, request.base_digits);
}

} // namespace

SolveResult solve_states(const SolveRequest& request) {
    if (request.states < 1) throw ConfigError("states must be positive");
    if (request.n < 1) throw ConfigError("basis size must be positive");

    const ResolvedBasis basis = resolve_basis(request.potential, request.basis);
    if (!request.potential.is_real() && !basis.harmonic) {
        throw ConfigError("potentials with imaginary terms require the harmonic-oscillator "
                          "basis (--basis ho or auto)");
    }

    const bool split_sectors = !basis.harmonic &&
                               request.potential.parity() == Parity::SYMMETRIC;
    if (!split_sectors && request.sector != SectorChoice::BOTH) {
        throw ConfigError("parity sectors exist only for symmetric potentials with a "
                          "polynomial-exponential basis");
    }

    std::vector<Spectrum> spectra;
    if (split_sectors) {
        if (request.sector == SectorChoice::EVEN || request.sector == SectorChoice::BOTH) {
            spectra.push_back(solve_one_spec(request, basis, Sector::EVEN_STATES));
        }
        if (request.sector == SectorChoice::ODD || request.sector == SectorChoice::BOTH) {
            spectra.push_back(solve_one_spec(request, basis, Sector::ODD_STATES));
        }
    } else {
        spectra.push_back(solve_one_spec(request, basis, Sector::ALL));
    }

    SolveResult out;
    out.achieved_digits = spectra.front().achieved_digits;
    for (const auto& s : spectra) {
        out.achieved_digits = std::min(out.achieved_digits, s.achieved_digits);
    }

    // Spectra may sit at different escalation levels; interleave at the
    // smallest achieved context.  Spurious truncation eigenvalues with large
    // imaginary parts are excluded from state tracking.
    const PrecisionContext merge_ctx = with_precision(out.achieved_digits);
    std::vector<BigComplex> merged;
    for (const auto& s : spectra) {
        for (const auto& e : s.eigenvalues) {
            if (request.imag_filter > 0 &&
                !(abs(e.imag()).to_double() <= request.imag_filter)) {
                continue;
            }
            merged.emplace_back(e.real().to_context(merge_ctx), e.imag().to_context(merge_ctx));
        }
    }
    if (request.states > static_cast<int>(merged.size())) {
        throw ConfigError("requested " + std::to_string(request.states) +
                          " states but the run yields only " +
                          std::to_string(merged.size()) + " trackable eigenvalues");
    }
    std::stable_sort(merged.begin(), merged.end(), [](const BigComplex& a, const BigComplex& b) {
        if (a.real() < b.real()) return true;
        if (b.real() < a.real()) return false;
        return a.imag() < b.imag();
    });
    merged.resize(static_cast<std::size_t>(request.states), merged.front());
    out.eigenvalues = std::move(merged);

    out.max_residual = BigReal::zero(merge_ctx);
    out.overlap_condition_estimate = BigReal::zero(merge_ctx);
    for (const auto& s : spectra) {
        for (const auto& r : s.residual_norms) {
            BigReal rr = r.to_context(merge_ctx);
            if (rr > out.max_residual) out.max_residual = std::move(rr);
        }
        BigReal ce = s.overlap_condition_estimate.to_context(merge_ctx);
        if (ce > out.overlap_condition_estimate) {
            out.overlap_condition_estimate = std::move(ce);
        }
    }
    return out;
}

namespace {

struct StudyPoint {
    int n = 0;
    std::vector<BigComplex> eigenvalues;
    int achieved_digits = 0;
};

StudyPoint study_point(const StudyConfig& config, int n) {
    SolveRequest request(config.potential);
    request.basis = config.basis;
    request.sector = SectorChoice::BOTH;
    request.n = n;
    request.states = config.states;
    request.base_digits = config.base_digits;
    request.ho_frequency = config.ho_frequency;
    request.imag_filter = config.imag_filter;
    try {
        SolveResult r = solve_states(request);
        return StudyPoint{n, std::move(r.eigenvalues), r.achieved_digits};
    } catch (const PrecisionExhaustedError& e) {
        throw PrecisionExhaustedError("study failed at N=" + std::to_string(n) + ": " +
                                          e.what(),
                                      e.condition_estimate());
    } catch (const Error& e) {
        throw Error("study failed at N=" + std::to_string(n) + ": " + e.what());
    }
}

} // namespace

std::vector<ConvergenceRecord> run_study(const StudyConfig& config) {
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw ConfigError("invalid N range");
    }
    if (config.states > config.n_min) {
        throw ConfigError("states must not exceed the smallest basis size in the range");
    }

    std::vector<std::string> reference = config.reference;
    if (reference.empty()) {
        const auto model = builtin_model(config.potential);
        if (!model) {
            throw ConfigError("no built-in reference eigenvalues for potential '" +
                              config.potential.to_string() +
                              "'; supply them explicitly");
        }
        reference = reference_table(*model).values;
    }
    if (static_cast<int>(reference.size()) < config.states) {
        throw ConfigError("need " + std::to_string(config.states) +
                          " reference eigenvalues, got " + std::to_string(reference.size()));
    }

    const int count = config.n_max - config.n_min + 1;
    std::vector<StudyPoint> points(static_cast<std::size_t>(count));

    int threads = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    // Independent (N) solves dispatched concurrently in bounded batches;
    // aggregation stays single-writer and ordered.
    for (int start = 0; start < count; start += threads) {
        const int end = std::min(count, start + threads);
        std::vector<std::future<StudyPoint>> batch;
        batch.reserve(static_cast<std::size_t>(end - start));
        for (int i = start; i < end; ++i) {
            const int n = config.n_min + i;
            batch.push_back(std::async(std::launch::async,
                                       [&config, n] { return study_point(config, n); }));
        }
        for (int i = start; i < end; ++i) {
            points[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i - start)].get();
        }
    }

    std::vector<ConvergenceRecord> records(static_cast<std::size_t>(config.states));
    for (int s = 0; s < config.states; ++s) {
        records[static_cast<std::size_t>(s)].state = s;
        records[static_cast<std::size_t>(s)].label =
            !config.label.empty() ? config.label : basis_name(config.basis);
    }

    for (const auto& point : points) {
        const PrecisionContext ctx = with_precision(point.achieved_digits);
        for (int s = 0; s < config.states; ++s) {
            const BigComplex& value = point.eigenvalues[static_cast<std::size_t>(s)];
            const BigReal ref =
                BigReal::from_string(reference[static_cast<std::size_t>(s)], ctx);
            const BigComplex diff = value - BigComplex(ref);
            const BigReal dist = diff.abs();
            // Exact hits sit below anything resolvable at this precision; park
            // them at a finite floor so records stay serializable.
            BigReal log_err = dist.is_zero()
                                  ? BigReal(-2L * point.achieved_digits, ctx)
                                  : log10(dist);
            records[static_cast<std::size_t>(s)].rows.push_back(
                ConvergenceRow{point.n, value, std::move(log_err)});
        }
    }
    return records;
}

void emit_csv(const std::vector<ConvergenceRecord>& records, std::ostream& os) {
    if (records.empty()) throw ConfigError("no records to emit");
    os << "state,N,eigenvalue,log10_error\n";
    for (const auto& record : records) {
        for (const auto& row : record.rows) {
            os << record.state << ',' << row.n << ',' << row.eigenvalue.to_string() << ','
               << row.log10_error.to_string() << '\n';
        }
    }
}

namespace {

BigComplex parse_complex_field(const std::string& text, const PrecisionContext& ctx) {
    if (text.empty()) throw ParseError("empty eigenvalue field", 0);
    if (text.back() == 'i') {
        const std::string body = text.substr(0, text.size() - 1);
        // Split at the sign of the imaginary part (not a leading sign, not an
        // exponent sign).
        for (std::size_t pos = body.size(); pos-- > 1;) {
            const char c = body[pos];
            if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
                BigReal re = BigReal::from_string(body.substr(0, pos), ctx);
                std::string im_text = body.substr(pos);
                if (im_text == "+") im_text = "1";
                if (im_text == "-") im_text = "-1";
                return BigComplex(std::move(re), BigReal::from_string(im_text, ctx));
            }
        }
        throw ParseError("malformed complex value '" + text + "'", 0);
    }
    return BigComplex(BigReal::from_string(text, ctx));
}

} // namespace

std::vector<ConvergenceRecord> parse_csv(std::istream& is, const PrecisionContext& ctx) {
    std::string line;
    if (!std::getline(is, line) || line != "state,N,eigenvalue,log10_error") {
        throw ParseError("missing or invalid CSV header", 0);
    }
    std::vector<ConvergenceRecord> records;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string state_s, n_s, value_s, err_s;
        if (!std::getline(ss, state_s, ',') || !std::getline(ss, n_s, ',') ||
            !std::getline(ss, value_s, ',') || !std::getline(ss, err_s)) {
            throw ParseError("malformed CSV row '" + line + "'", 0);
        }
        const int state = std::stoi(state_s);
        ConvergenceRow row;
        row.n = std::stoi(n_s);
        row.eigenvalue = parse_complex_field(value_s, ctx);
        row.log10_error = BigReal::from_string(err_s, ctx);

        auto it = std::find_if(records.begin(), records.end(),
                               [state](const ConvergenceRecord& r) { return r.state == state; });
        if (it == records.end()) {
            records.push_back(ConvergenceRecord{state, "", {}});
            it = std::prev(records.end());
        }
        it->rows.push_back(std::move(row));
    }
    return records;
}

} // namespace ritz
