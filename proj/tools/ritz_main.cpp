#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ritz/benchmark.hpp"
#include "ritz/study.hpp"

namespace {

using namespace ritz;

constexpr int kExitSolverFailure = 1;
constexpr int kExitUsage = 2;

BasisChoice basis_from_string(const std::string& name) {
    if (name == "auto") return BasisChoice::AUTO;
    if (name == "s1") return BasisChoice::S1;
    if (name == "s2") return BasisChoice::S2;
    if (name == "s3") return BasisChoice::S3;
    if (name == "ho") return BasisChoice::HO;
    throw ConfigError("unknown basis '" + name + "' (expected auto|s1|s2|s3|ho)");
}

SectorChoice sector_from_string(const std::string& name) {
    if (name == "even") return SectorChoice::EVEN;
    if (name == "odd") return SectorChoice::ODD;
    if (name == "both") return SectorChoice::BOTH;
    throw ConfigError("unknown sector '" + name + "' (expected even|odd|both)");
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

// "A..B" inclusive range.
std::pair<int, int> range_from_string(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::string> read_reference_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open reference file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string insert_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + "_" + suffix;
    }
    return path.substr(0, dot) + "_" + suffix + path.substr(dot);
}

struct SolveOptions {
    std::string potential;
    std::string basis = "auto";
    std::string sector = "both";
    int n = 0;
    int states = 4;
    int precision = 60;
    int print_digits = 0; // 0 = self-consistency estimate
    std::string ho_frequency = "1";
    double imag_filter = 1e-6;
    std::string imag_tolerance; // assert |Im E| <= this when set
    std::string format = "text";
    std::string output;
    std::string dump_prefix;
};

void dump_matrices(const SolveRequest& request, int digits, const std::string& prefix) {
    const PrecisionContext ctx = with_precision(digits);
    const ResolvedBasis basis = resolve_basis(request.potential, request.basis);
    auto write_pair = [&](const MatrixPair& pair, const std::string& tag) {
        std::ofstream h(prefix + tag + ".H.txt");
        std::ofstream s(prefix + tag + ".S.txt");
        if (pair.complex_path()) {
            pair.hamiltonian_complex->dump(h);
        } else {
            pair.hamiltonian_real->dump(h);
        }
        pair.overlap.dump(s);
    };
    if (basis.harmonic) {
        write_pair(
            assemble_harmonic_osc(request.potential, request.n, ctx, request.ho_frequency), "");
        return;
    }
    if (request.potential.parity() == Parity::SYMMETRIC) {
        for (const auto& [sector, tag] :
             {std::pair<Sector, const char*>{Sector::EVEN_STATES, ".even"},
              std::pair<Sector, const char*>{Sector::ODD_STATES, ".odd"}}) {
            BasisSpec spec;
            spec.family = basis.decay.k % 2 == 0 ? BasisFamily::K_EVEN : BasisFamily::K_ODD;
            spec.sector = sector;
            spec.decay = basis.decay;
            spec.size = request.n;
            write_pair(assemble_polyexp(request.potential, build_basis(spec, ctx), spec), tag);
        }
        return;
    }
    BasisSpec spec;
    spec.family = BasisFamily::ASYMMETRIC;
    spec.sector = Sector::ALL;
    spec.decay = basis.decay;
    spec.size = request.n;
    write_pair(assemble_polyexp(request.potential, build_basis(spec, ctx), spec), "");
}

int run_solve(const SolveOptions& opt) {
    SolveRequest request(parse_potential(opt.potential));
    request.basis = basis_from_string(opt.basis);
    request.sector = sector_from_string(opt.sector);
    request.n = opt.n;
    request.states = opt.states;
    request.base_digits = opt.precision;
    request.ho_frequency = rational_from_string(opt.ho_frequency);
    request.imag_filter = opt.imag_filter;

    const SolveResult result = solve_states(request);

    // Printed digit counts: explicit override, or the self-consistency
    // estimate against the N-1 run.
    std::vector<int> digits(static_cast<std::size_t>(opt.states),
                            opt.print_digits > 0 ? opt.print_digits : 0);
    if (opt.print_digits <= 0) {
        std::vector<BigComplex> previous;
        if (request.n > 1 && request.n - 1 >= opt.states) {
            SolveRequest prev_request = request;
            prev_request.n = request.n - 1;
            previous = solve_states(prev_request).eigenvalues;
        }
        for (int s = 0; s < opt.states; ++s) {
            if (static_cast<std::size_t>(s) < previous.size()) {
                const auto ctx = with_precision(result.achieved_digits);
                const BigReal here = result.eigenvalues[static_cast<std::size_t>(s)].real();
                const BigReal there =
                    previous[static_cast<std::size_t>(s)].real().to_context(ctx);
                digits[static_cast<std::size_t>(s)] = std::max(
                    1, std::min(agreement_digits(here, there), result.achieved_digits));
            } else {
                digits[static_cast<std::size_t>(s)] = result.achieved_digits;
            }
        }
    }

    std::ostringstream out;
    if (opt.format == "csv") {
        out << "state,eigenvalue,digits\n";
        for (int s = 0; s < opt.states; ++s) {
            out << s << ','
                << result.eigenvalues[static_cast<std::size_t>(s)].to_string(
                       digits[static_cast<std::size_t>(s)])
                << ',' << digits[static_cast<std::size_t>(s)] << '\n';
        }
    } else if (opt.format == "text") {
        out << "# potential: " << request.potential.to_string() << "  basis: " << opt.basis
            << "  sector: " << opt.sector << "  N: " << opt.n << '\n';
        out << "# achieved precision: " << result.achieved_digits
            << " digits, max residual: " << result.max_residual.to_string(3)
            << ", overlap condition estimate: "
            << result.overlap_condition_estimate.to_string(3) << '\n';
        for (int s = 0; s < opt.states; ++s) {
            out << "E_" << s << " = "
                << result.eigenvalues[static_cast<std::size_t>(s)].to_string(
                       digits[static_cast<std::size_t>(s)])
                << "   [" << digits[static_cast<std::size_t>(s)] << " digits]" << '\n';
        }
    } else {
        throw ConfigError("unknown format '" + opt.format + "' (expected text|csv)");
    }

    if (!opt.imag_tolerance.empty()) {
        const auto ctx = with_precision(result.achieved_digits);
        const BigReal cap = BigReal::from_string(opt.imag_tolerance, ctx);
        for (int s = 0; s < opt.states; ++s) {
            const BigReal im = abs(result.eigenvalues[static_cast<std::size_t>(s)].imag());
            if (!(im <= cap)) {
                std::cerr << "imaginary part of E_" << s << " (" << im.to_string(3)
                          << ") exceeds tolerance " << opt.imag_tolerance << '\n';
                return kExitSolverFailure;
            }
        }
    }

    if (!opt.dump_prefix.empty()) {
        dump_matrices(request, result.achieved_digits, opt.dump_prefix);
    }

    if (opt.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(opt.output);
        if (!f) throw ConfigError("cannot open output file '" + opt.output + "'");
        f << out.str();
    }
    return 0;
}

struct StudyOptions {
    std::string potential;
    std::string basis = "auto";
    std::string range;
    int states = 4;
    int precision = 60;
    std::string ho_frequency = "1";
    double imag_filter = 1e-6;
    std::string csv_path;
    std::string svg_path;
    std::string reference_path;
    int threads = 0;
    bool stamp = false;
};

int run_study_command(const StudyOptions& opt) {
    const Potential potential = parse_potential(opt.potential);
    const auto [n_min, n_max] = range_from_string(opt.range);
    const std::vector<std::string> bases = split_list(opt.basis);
    if (bases.empty()) throw ConfigError("no basis given");

    std::vector<ConvergenceRecord> all_records;
    for (const std::string& basis : bases) {
        StudyConfig config(potential);
        config.basis = basis_from_string(basis);
        config.n_min = n_min;
        config.n_max = n_max;
        config.states = opt.states;
        config.base_digits = opt.precision;
        config.ho_frequency = rational_from_string(opt.ho_frequency);
        config.imag_filter = opt.imag_filter;
        config.threads = opt.threads;
        config.label = basis;
        if (!opt.reference_path.empty()) {
            config.reference = read_reference_file(opt.reference_path);
        }
        auto records = run_study(config);

        if (!opt.csv_path.empty()) {
            const std::string path =
                bases.size() == 1 ? opt.csv_path : insert_suffix(opt.csv_path, basis);
            std::ofstream f(path);
            if (!f) throw ConfigError("cannot open CSV output '" + path + "'");
            emit_csv(records, f);
            if (opt.stamp) f << "# generated " << timestamp() << '\n';
        }
        for (auto& r : records) all_records.push_back(std::move(r));
    }

    if (!opt.svg_path.empty()) {
        std::ofstream f(opt.svg_path);
        if (!f) throw ConfigError("cannot open SVG output '" + opt.svg_path + "'");
        emit_svg(all_records, f);
        if (opt.stamp) f << "<!-- generated " << timestamp() << " -->\n";
    }

    // Console summary: final logarithmic error per series.
    for (const auto& record : all_records) {
        if (record.rows.empty()) continue;
        std::cout << "basis " << record.label << "  state " << record.state << "  L_"
                  << record.rows.back().n << " = "
                  << record.rows.back().log10_error.to_string(4) << '\n';
    }
    return 0;
}

int run_benchmark_command(bool full, int threads) {
    const auto results = bench::run_benchmark(full, threads);
    bool all_passed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                  << '\n'
                  << "     " << r.detail << '\n';
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : kExitSolverFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rayleigh-Ritz eigensolver for one-dimensional Schrodinger problems with "
                 "asymptotically adapted, arbitrary-precision basis sets"};
    app.require_subcommand(1);
    app.set_config("--config");

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Compute the lowest eigenvalues at one N");
    solve->add_option("--potential", solve_opt.potential, "Potential expression, e.g. x^4-5*x^2")
        ->required();
    solve->add_option("--basis", solve_opt.basis, "auto|s1|s2|s3|ho (default auto)");
    solve->add_option("--sector", solve_opt.sector, "even|odd|both (default both)");
    solve->add_option("--n", solve_opt.n, "Basis size per sector")->required();
    solve->add_option("--states", solve_opt.states, "Number of states (default 4)");
    solve->add_option("--precision", solve_opt.precision, "Base working digits (default 60)");
    solve->add_option("--digits", solve_opt.print_digits,
                      "Printed digits (default: self-consistency estimate vs N-1)");
    solve->add_option("--ho-frequency", solve_opt.ho_frequency,
                      "Oscillator frequency for the ho basis (rational, default 1)");
    solve->add_option("--imag-filter", solve_opt.imag_filter,
                      "Skip eigenvalues with |Im E| above this when tracking states");
    solve->add_option("--imag-tolerance", solve_opt.imag_tolerance,
                      "Fail unless every reported |Im E| is below this");
    solve->add_option("--format", solve_opt.format, "text|csv (default text)");
    solve->add_option("--output", solve_opt.output, "Write the report here instead of stdout");
    solve->add_option("--dump-matrices", solve_opt.dump_prefix,
                      "Dump assembled H and S as plain text with this path prefix");

    StudyOptions study_opt;
    CLI::App* study = app.add_subcommand("study", "Convergence study across a range of N");
    study->add_option("--potential", study_opt.potential, "Potential expression")->required();
    study->add_option("--basis", study_opt.basis, "Comma list of bases, e.g. s1,s2,s3");
    study->add_option("--n", study_opt.range, "N range, e.g. 4..50")->required();
    study->add_option("--states", study_opt.states, "Tracked states (default 4)");
    study->add_option("--precision", study_opt.precision, "Base working digits (default 60)");
    study->add_option("--ho-frequency", study_opt.ho_frequency, "Oscillator frequency");
    study->add_option("--imag-filter", study_opt.imag_filter,
                      "Skip eigenvalues with |Im E| above this when tracking states");
    study->add_option("--csv", study_opt.csv_path, "CSV output path (per basis)");
    study->add_option("--svg", study_opt.svg_path, "SVG chart output path");
    study->add_option("--reference", study_opt.reference_path,
                      "File with one reference eigenvalue per line");
    study->add_option("--threads", study_opt.threads, "Max concurrent solves (0 = auto)");
    study->add_flag("--stamp", study_opt.stamp, "Append a generation timestamp to outputs");

    bool bench_full = false;
    int bench_threads = 0;
    CLI::App* benchmark =
        app.add_subcommand("benchmark", "Reproduce the built-in reference models");
    benchmark->add_flag("--full", bench_full, "Include the N=4..50 variational sweep");
    benchmark->add_option("--threads", bench_threads, "Max concurrent solves (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (study->parsed()) return run_study_command(study_opt);
        return run_benchmark_command(bench_full, bench_threads);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolverFailure;
    }
}
