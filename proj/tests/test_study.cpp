#include <cmath>
#include <sstream>

#include "doctest.h"
#include "ritz/study.hpp"
#include "test_util.hpp"

using namespace ritz;
using ritz::test::check_digits;

TEST_SUITE("study") {

TEST_CASE("embedded reference blocks") {
    const auto& q = reference_table(ModelId::V_Q);
    REQUIRE(q.values.size() == 4);
    CHECK(q.values[0].substr(0, 23) == "-3.41014276123982947529");
    for (const auto& v : q.values) CHECK(v.size() >= 80);

    const auto& s = reference_table(ModelId::V_S);
    CHECK(s.values[0].substr(0, 10) == "-0.5232686");
    for (const auto& v : s.values) CHECK(v.size() >= 80);

    const auto& ix3 = reference_table(ModelId::IX3);
    CHECK(ix3.values[0] == "1.156267071988113293799219177999951");
    for (const auto& v : ix3.values) CHECK(v.size() >= 31);

    // Strings parse at (beyond) the published digit count.
    const auto ctx = with_precision(120);
    const auto parsed = q.parse(ctx);
    REQUIRE(parsed.size() == 4);
    CHECK(parsed[0] < BigReal(-3, ctx));
}

TEST_CASE("builtin model matching") {
    CHECK(builtin_model(parse_potential("x^4-5*x^2")) == ModelId::V_Q);
    CHECK(builtin_model(parse_potential("x^6-4*x^2")) == ModelId::V_S);
    CHECK(builtin_model(parse_potential("i*x^3")) == ModelId::IX3);
    CHECK_FALSE(builtin_model(parse_potential("x^2")).has_value());
}

TEST_CASE("basis resolution") {
    CHECK_FALSE(resolve_basis(parse_potential("x^4-5*x^2"), BasisChoice::AUTO).harmonic);
    CHECK(resolve_basis(parse_potential("x^4-5*x^2"), BasisChoice::AUTO).decay.k == 2);
    CHECK(resolve_basis(parse_potential("i*x^3"), BasisChoice::AUTO).harmonic);
    CHECK(resolve_basis(parse_potential("x^4-5*x^2"), BasisChoice::S1).decay.k == 1);
    CHECK(resolve_basis(parse_potential("x^4-5*x^2"), BasisChoice::S3).decay.k == 3);
    CHECK(resolve_basis(parse_potential("x^2"), BasisChoice::HO).harmonic);
}

TEST_CASE("solve_states interleaves parity sectors by value") {
    SolveRequest request(parse_potential("x^4-5*x^2"));
    request.basis = BasisChoice::S2;
    request.n = 10;
    request.states = 4;
    request.base_digits = 40;
    const SolveResult both = solve_states(request);
    REQUIRE(both.eigenvalues.size() == 4);

    request.states = 2;
    request.sector = SectorChoice::EVEN;
    const SolveResult even = solve_states(request);
    request.sector = SectorChoice::ODD;
    const SolveResult odd = solve_states(request);

    // The double well interleaves even/odd states: E0 even, E1 odd, ...
    const auto ctx = with_precision(both.achieved_digits);
    check_digits(even.eigenvalues[0].real().to_context(ctx), both.eigenvalues[0].real(), 25);
    check_digits(odd.eigenvalues[0].real().to_context(ctx), both.eigenvalues[1].real(), 25);
    check_digits(even.eigenvalues[1].real().to_context(ctx), both.eigenvalues[2].real(), 25);
    check_digits(odd.eigenvalues[1].real().to_context(ctx), both.eigenvalues[3].real(), 25);

    CHECK(both.eigenvalues[0].real() < both.eigenvalues[1].real());
    CHECK(both.eigenvalues[1].real() < both.eigenvalues[2].real());
    CHECK(both.eigenvalues[2].real() < both.eigenvalues[3].real());
}

TEST_CASE("solve_states input validation") {
    SolveRequest request(parse_potential("x^4+x^3"));
    request.basis = BasisChoice::S2;
    request.n = 4;
    request.states = 2;
    request.base_digits = 40;
    request.sector = SectorChoice::EVEN;
    CHECK_THROWS_AS(solve_states(request), ConfigError); // no sectors when asymmetric

    SolveRequest too_many(parse_potential("x^2"));
    too_many.basis = BasisChoice::S1;
    too_many.sector = SectorChoice::EVEN;
    too_many.n = 2;
    too_many.states = 3;
    too_many.base_digits = 40;
    CHECK_THROWS_AS(solve_states(too_many), ConfigError);

    SolveRequest complex_needs_ho(parse_potential("i*x^3"));
    complex_needs_ho.basis = BasisChoice::S1;
    complex_needs_ho.n = 4;
    complex_needs_ho.base_digits = 40;
    CHECK_THROWS_AS(solve_states(complex_needs_ho), ConfigError);
}

TEST_CASE("exact eigenfunction sits at the working-precision floor") {
    StudyConfig config(parse_potential("x^2"));
    config.basis = BasisChoice::S1;
    config.n_min = 2;
    config.n_max = 5;
    config.states = 1;
    config.base_digits = 40;
    config.reference = {"1"};
    config.threads = 1;
    const auto records = run_study(config);
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].rows.size() == 4);
    for (const auto& row : records[0].rows) {
        // The ground state lies in the span; only rounding noise remains.
        CHECK(row.log10_error.to_double() < -25.0);
    }
    for (std::size_t i = 1; i < records[0].rows.size(); ++i) {
        CHECK(records[0].rows[i].n > records[0].rows[i - 1].n);
    }
}

TEST_CASE("double-well study converges monotonically from above") {
    StudyConfig config(parse_potential("x^4-5*x^2"));
    config.basis = BasisChoice::S2;
    config.n_min = 4;
    config.n_max = 10;
    config.states = 2;
    config.base_digits = 40;
    const auto records = run_study(config);
    REQUIRE(records.size() == 2);

    const auto& ref = reference_table(ModelId::V_Q);
    for (const auto& record : records) {
        const auto& rows = record.rows;
        REQUIRE(rows.size() == 7);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto ctx = with_precision(rows[i].eigenvalue.real().context().decimal_digits());
            const BigReal reference =
                BigReal::from_string(ref.values[static_cast<std::size_t>(record.state)], ctx);
            const BigReal slack = pow_ratio(BigReal(10, ctx), -20, 1);
            // Variational upper bound.
            CHECK(rows[i].eigenvalue.real() >= reference - slack);
            CHECK(rows[i].eigenvalue.imag().is_zero());
            if (i > 0) {
                const BigReal prev = rows[i - 1].eigenvalue.real().to_context(ctx);
                CHECK(rows[i].eigenvalue.real() <= prev + slack);
                CHECK(rows[i].log10_error.to_double() <=
                      rows[i - 1].log10_error.to_double() + 1e-6);
            }
        }
    }
}

TEST_CASE("PT-symmetric study uses the complex modulus") {
    StudyConfig config(parse_potential("i*x^3"));
    config.basis = BasisChoice::AUTO;
    config.n_min = 12;
    config.n_max = 16;
    config.states = 2;
    config.base_digits = 40;
    const auto records = run_study(config);
    REQUIRE(records.size() == 2);
    for (const auto& record : records) {
        REQUIRE(record.rows.size() == 5);
        // Tracked states are the near-real ones; errors are finite and
        // already a few digits deep at these sizes.
        for (const auto& row : record.rows) {
            CHECK(row.log10_error.to_double() < -1.0);
            CHECK(row.log10_error.to_double() > -30.0);
            CHECK(std::abs(row.eigenvalue.imag().to_double()) <= 1e-6);
        }
    }
}

TEST_CASE("study rejects unusable configurations") {
    StudyConfig bad_range(parse_potential("x^4-5*x^2"));
    bad_range.n_min = 10;
    bad_range.n_max = 4;
    CHECK_THROWS_AS(run_study(bad_range), ConfigError);

    StudyConfig too_many_states(parse_potential("x^4-5*x^2"));
    too_many_states.n_min = 2;
    too_many_states.n_max = 6;
    too_many_states.states = 4;
    CHECK_THROWS_AS(run_study(too_many_states), ConfigError);

    StudyConfig no_reference(parse_potential("x^2+x^4"));
    no_reference.n_min = 4;
    no_reference.n_max = 6;
    no_reference.states = 2;
    CHECK_THROWS_AS(run_study(no_reference), ConfigError);
}

TEST_CASE("csv emission and round trip") {
    const auto ctx = with_precision(40);
    std::vector<ConvergenceRecord> records(2);
    records[0].state = 0;
    records[0].label = "s2";
    records[0].rows.push_back(
        {4, BigComplex(BigReal::from_string("-3.25", ctx)), BigReal::from_string("-7.5", ctx)});
    records[0].rows.push_back(
        {5, BigComplex(BigReal::from_string("-3.3", ctx)), BigReal::from_string("-9.25", ctx)});
    records[1].state = 1;
    records[1].label = "s2";
    records[1].rows.push_back({4,
                               BigComplex(BigReal::from_string("1.5", ctx),
                                          BigReal::from_string("-0.25", ctx)),
                               BigReal::from_string("-3", ctx)});

    std::ostringstream os;
    emit_csv(records, os);
    const std::string text = os.str();
    CHECK(text.substr(0, 33) == "state,N,eigenvalue,log10_error\n0,");
    CHECK(text.find("1,4,1.5-0.25i,-3\n") != std::string::npos);

    std::istringstream is(text);
    const auto parsed = parse_csv(is, ctx);
    REQUIRE(parsed.size() == 2);
    REQUIRE(parsed[0].rows.size() == 2);
    CHECK(parsed[0].state == 0);
    CHECK(parsed[0].rows[1].n == 5);
    CHECK(parsed[0].rows[0].eigenvalue == records[0].rows[0].eigenvalue);
    CHECK(parsed[0].rows[1].log10_error == records[0].rows[1].log10_error);
    CHECK(parsed[1].rows[0].eigenvalue == records[1].rows[0].eigenvalue);

    CHECK_THROWS_AS(emit_csv({}, os), ConfigError);
}

TEST_CASE("csv round trip at full study precision") {
    StudyConfig config(parse_potential("x^4-5*x^2"));
    config.basis = BasisChoice::S2;
    config.n_min = 4;
    config.n_max = 6;
    config.states = 2;
    config.base_digits = 40;
    const auto records = run_study(config);

    std::ostringstream os;
    emit_csv(records, os);
    std::istringstream is(os.str());
    const auto parsed = parse_csv(is, with_precision(records[0].rows[0].eigenvalue.real()
                                                         .context()
                                                         .decimal_digits()));
    REQUIRE(parsed.size() == records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
        REQUIRE(parsed[r].rows.size() == records[r].rows.size());
        for (std::size_t i = 0; i < records[r].rows.size(); ++i) {
            CHECK(parsed[r].rows[i].eigenvalue == records[r].rows[i].eigenvalue);
            CHECK(parsed[r].rows[i].log10_error == records[r].rows[i].log10_error);
        }
    }
}

TEST_CASE("svg layout matches the figure shape") {
    const auto ctx = with_precision(40);
    // Fabricated Fig.-1-shaped study: three bases, four states.
    std::vector<ConvergenceRecord> records;
    for (const std::string& label : {"s1", "s2", "s3"}) {
        for (int state = 0; state < 4; ++state) {
            ConvergenceRecord r;
            r.state = state;
            r.label = label;
            for (int n = 4; n <= 12; n += 2) {
                r.rows.push_back({n, BigComplex(BigReal(state + 1, ctx)),
                                  BigReal(-(n + state), ctx)});
            }
            records.push_back(std::move(r));
        }
    }

    std::ostringstream os;
    emit_svg(records, os);
    const std::string svg = os.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    for (int state = 0; state < 4; ++state) {
        CHECK(svg.find("state " + std::to_string(state)) != std::string::npos);
    }
    std::size_t series = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++series;
    }
    CHECK(series == 12);

    CHECK_THROWS_AS(emit_svg({}, os), ConfigError);
}

} // TEST_SUITE
