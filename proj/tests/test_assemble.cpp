#include <map>
#include <sstream>

#include "doctest.h"
#include "ritz/assemble.hpp"
#include "ritz/quadrature.hpp"
#include "test_util.hpp"

using namespace ritz;
using ritz::test::check_digits;

namespace {

const AsymptoticForm kS1{1, Rational(1)};
const AsymptoticForm kS2{2, Rational(1)};

BasisSpec spec_of(BasisFamily family, Sector sector, const AsymptoticForm& decay, int size) {
    BasisSpec spec;
    spec.family = family;
    spec.sector = sector;
    spec.decay = decay;
    spec.size = size;
    return spec;
}

BigReal eval_potential(const Potential& v, const BigReal& x) {
    BigReal out = BigReal::zero(x.context());
    for (const auto& [m, c] : v.real_coeffs()) out += c.to_real(x.context()) * pow_int(x, m);
    return out;
}

// Ladder-algebra oracle: states as sparse amplitude maps over |n>.
using LadderState = std::map<int, BigReal>;

void ladder_add(LadderState& s, int n, const BigReal& amp) {
    auto it = s.find(n);
    if (it == s.end()) {
        s.emplace(n, amp);
    } else {
        it->second += amp;
    }
}

// x = (a + a^dag)/sqrt(2):  x|n> = sqrt(n/2)|n-1> + sqrt((n+1)/2)|n+1>.
LadderState apply_position(const LadderState& in, const PrecisionContext& ctx) {
    LadderState out;
    for (const auto& [n, amp] : in) {
        if (n > 0) ladder_add(out, n - 1, amp * sqrt(BigReal::from_ratio(n, 2, ctx)));
        ladder_add(out, n + 1, amp * sqrt(BigReal::from_ratio(n + 1, 2, ctx)));
    }
    return out;
}

// L = (a - a^dag)/sqrt(2); p^2 = -L о L.
LadderState apply_ladder_difference(const LadderState& in, const PrecisionContext& ctx) {
    LadderState out;
    for (const auto& [n, amp] : in) {
        if (n > 0) ladder_add(out, n - 1, amp * sqrt(BigReal::from_ratio(n, 2, ctx)));
        ladder_add(out, n + 1, -(amp * sqrt(BigReal::from_ratio(n + 1, 2, ctx))));
    }
    return out;
}

BigReal ladder_amplitude(const LadderState& s, int n, const PrecisionContext& ctx) {
    auto it = s.find(n);
    return it == s.end() ? BigReal::zero(ctx) : it->second;
}

} // namespace

TEST_SUITE("assemble") {

TEST_CASE("exact harmonic ground state in a one-function basis") {
    // V = x^2 with the single function exp(-x^2/2): H00/S00 is the exact
    // ground-state energy 1.
    const auto ctx = with_precision(60);
    const auto spec = spec_of(BasisFamily::K_ODD, Sector::EVEN_STATES, kS1, 1);
    const auto pair = assemble_polyexp(parse_potential("x^2"), build_basis(spec, ctx), spec);

    const BigReal root_pi = sqrt(BigReal::pi(ctx));
    check_digits(root_pi / 2, pair.overlap(0, 0), 56);
    check_digits(root_pi / 2, (*pair.hamiltonian_real)(0, 0), 56);
    check_digits(BigReal(1, ctx), (*pair.hamiltonian_real)(0, 0) / pair.overlap(0, 0), 56);
}

TEST_CASE("entries match per-entry quadrature of the explicit integrands") {
    const auto ctx = with_precision(60);
    const auto oracle_ctx = with_precision(120);
    const Potential v = parse_potential("x^4-5*x^2");
    const auto spec = spec_of(BasisFamily::K_EVEN, Sector::EVEN_STATES, kS2, 2);
    const auto pair = assemble_polyexp(v, build_basis(spec, ctx), spec);

    const auto oracle_basis = build_basis(spec, oracle_ctx);
    std::vector<PolyExpFunction> oracle_derivatives;
    for (const auto& f : oracle_basis) oracle_derivatives.push_back(differentiate(f));

    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            const BigReal s_oracle = quadrature_halfline(
                [&](const BigReal& x) {
                    return oracle_basis[i].eval(x) * oracle_basis[j].eval(x);
                },
                oracle_ctx, 80);
            check_digits(pair.overlap(i, j), s_oracle.to_context(ctx), 52);

            const BigReal h_oracle = quadrature_halfline(
                [&](const BigReal& x) {
                    return oracle_derivatives[i].eval(x) * oracle_derivatives[j].eval(x) +
                           eval_potential(v, x) * oracle_basis[i].eval(x) *
                               oracle_basis[j].eval(x);
                },
                oracle_ctx, 80);
            check_digits((*pair.hamiltonian_real)(i, j), h_oracle.to_context(ctx), 52);
        }
    }
}

TEST_CASE("asymmetric potential over the full-line basis") {
    const auto ctx = with_precision(60);
    const Potential v = parse_potential("x^4+x^3");
    const auto spec = spec_of(BasisFamily::ASYMMETRIC, Sector::ALL, kS2, 2);
    const auto pair = assemble_polyexp(v, build_basis(spec, ctx), spec);

    // Odd total parity integrands vanish identically.
    CHECK(pair.overlap(0, 1).is_zero());
    CHECK(pair.overlap(1, 0).is_zero());

    // The only surviving coupling between j=0 and j=1 is the odd monomial x^3:
    // H01 = 2 M(0+1+3).
    check_digits(moment(4, kS2, ctx) * 2, (*pair.hamiltonian_real)(0, 1), 55);

    // Diagonals: S00 = 2 M(0); T00 = 2 M(4); the x^3 term drops for the even
    // pair, leaving V00 = 2 M(4).
    check_digits(moment(0, kS2, ctx) * 2, pair.overlap(0, 0), 55);
    check_digits(moment(4, kS2, ctx) * 4, (*pair.hamiltonian_real)(0, 0), 55);
}

TEST_CASE("full-line entries match a literal reflected-integrand oracle") {
    // Independent route: evaluate x^j exp(-|S_2(x)|) literally on both half
    // lines, with derivatives by Richardson finite differences, and integrate.
    const auto ctx = with_precision(60);
    const auto octx = with_precision(140);
    const Potential v = parse_potential("x^4+x^3");
    const auto spec = spec_of(BasisFamily::ASYMMETRIC, Sector::ALL, kS2, 2);
    const auto pair = assemble_polyexp(v, build_basis(spec, ctx), spec);

    auto literal = [&](int j, const BigReal& x) {
        // |S_2(x)| = |x|^3/3 for either sign of x.
        const BigReal ax = abs(x);
        return pow_int(x, j) * exp(-(pow_int(ax, 3) / 3));
    };
    auto derivative = [&](int j, const BigReal& x) {
        const BigReal h = pow_ratio(BigReal(10, octx), -20, 1);
        const BigReal d1 = (literal(j, x + h) - literal(j, x - h)) / (h * 2);
        const BigReal half = h / 2;
        const BigReal d2 = (literal(j, x + half) - literal(j, x - half)) / h;
        return (d2 * 4 - d1) / 3;
    };

    for (int i = 0; i < 2; ++i) {
        for (int j = i; j < 2; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            const BigReal s_oracle = quadrature_halfline(
                [&](const BigReal& x) {
                    return literal(i, x) * literal(j, x) + literal(i, -x) * literal(j, -x);
                },
                octx, 70);
            check_digits(pair.overlap(i, j).to_context(octx), s_oracle, 40);

            const BigReal h_oracle = quadrature_halfline(
                [&](const BigReal& x) {
                    BigReal plus = derivative(i, x) * derivative(j, x) +
                                   eval_potential(v, x) * literal(i, x) * literal(j, x);
                    BigReal minus = derivative(i, -x) * derivative(j, -x) +
                                    eval_potential(v, -x) * literal(i, -x) * literal(j, -x);
                    return plus + minus;
                },
                octx, 38);
            if ((*pair.hamiltonian_real)(i, j).is_zero()) {
                CHECK(abs(h_oracle) <= pow_ratio(BigReal(10, octx), -30, 1));
            } else {
                check_digits((*pair.hamiltonian_real)(i, j).to_context(octx), h_oracle, 30);
            }
        }
    }
}

TEST_CASE("assembled matrices are exactly symmetric") {
    const auto ctx = with_precision(40);
    const Potential v = parse_potential("x^6-4*x^2");
    const auto spec = spec_of(BasisFamily::K_ODD, Sector::ODD_STATES,
                              AsymptoticForm{3, Rational(1)}, 4);
    const auto pair = assemble_polyexp(v, build_basis(spec, ctx), spec);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(pair.overlap(i, j) == pair.overlap(j, i));
            CHECK((*pair.hamiltonian_real)(i, j) == (*pair.hamiltonian_real)(j, i));
        }
    }
}

TEST_CASE("parity decoupling over a mixed even+odd function list") {
    const auto ctx = with_precision(40);
    const Potential v = parse_potential("x^4-5*x^2");
    std::vector<PolyExpFunction> functions;
    for (int j : {0, 2, 4}) {
        functions.push_back(PolyExpFunction::monomial(j, kS2, LineExtension::EVEN, ctx));
    }
    for (int j : {1, 3}) {
        functions.push_back(PolyExpFunction::monomial(j, kS2, LineExtension::ODD, ctx));
    }
    const auto spec = spec_of(BasisFamily::ASYMMETRIC, Sector::ALL, kS2, 5);
    const auto pair = assemble_polyexp(v, functions, spec);
    for (int i = 0; i < 3; ++i) {
        for (int j = 3; j < 5; ++j) {
            CHECK(pair.overlap(i, j).is_zero());
            CHECK((*pair.hamiltonian_real)(i, j).is_zero());
        }
    }
}

TEST_CASE("assembly rejections") {
    const auto ctx = with_precision(40);
    const auto spec = spec_of(BasisFamily::K_EVEN, Sector::EVEN_STATES, kS2, 2);
    const auto basis = build_basis(spec, ctx);
    CHECK_THROWS_AS(assemble_polyexp(parse_potential("i*x^3"), basis, spec), AssemblyError);
    CHECK_THROWS_AS(assemble_polyexp(parse_potential("x^4+x^3"), basis, spec), AssemblyError);
    CHECK_THROWS_AS(assemble_polyexp(parse_potential("x^2"), {}, spec), AssemblyError);
}

TEST_CASE("harmonic-oscillator basis diagonalizes its own Hamiltonian") {
    const auto ctx = with_precision(50);
    const auto pair = assemble_harmonic_osc(parse_potential("x^2"), 6, ctx);
    REQUIRE_FALSE(pair.complex_path());
    CHECK(pair.identity_overlap);
    const auto& h = *pair.hamiltonian_real;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (i == j) {
                check_digits(BigReal(2 * i + 1, ctx), h(i, j), 47);
            } else {
                CHECK(abs(h(i, j)) <= pow_ratio(BigReal(10, ctx), -45, 1));
            }
        }
    }
}

TEST_CASE("x^2 and p^2 ground-state expectations") {
    const auto ctx = with_precision(50);
    // V = 2 x^2 shifts H00 by 2 <0|x^2|0> = 1 over the pure p^2 + x^2 value.
    const auto base = assemble_harmonic_osc(parse_potential("x^2"), 3, ctx);
    const auto shifted = assemble_harmonic_osc(parse_potential("2*x^2"), 3, ctx);
    const BigReal x2_00 = (*shifted.hamiltonian_real)(0, 0) - (*base.hamiltonian_real)(0, 0);
    check_digits(BigReal::from_ratio(1, 2, ctx), x2_00, 46);
    // (p^2)_00 = H00(x^2 assembly) - (x^2)_00 = 1 - 1/2.
    const BigReal p2_00 = (*base.hamiltonian_real)(0, 0) - x2_00;
    check_digits(BigReal::from_ratio(1, 2, ctx), p2_00, 46);
}

TEST_CASE("cubic Hamiltonian matches the ladder-operator oracle") {
    const auto ctx = with_precision(50);
    const int n = 6;
    const auto pair = assemble_harmonic_osc(parse_potential("x^3"), n, ctx);
    const auto& h = *pair.hamiltonian_real;

    for (int col = 0; col < n; ++col) {
        LadderState basis_state;
        basis_state.emplace(col, BigReal(1, ctx));

        LadderState x3 = apply_position(
            apply_position(apply_position(basis_state, ctx), ctx), ctx);
        LadderState l2 = apply_ladder_difference(apply_ladder_difference(basis_state, ctx), ctx);

        for (int row = 0; row < n; ++row) {
            const BigReal expected = ladder_amplitude(x3, row, ctx) -
                                     ladder_amplitude(l2, row, ctx); // p^2 = -L^2
            CAPTURE(row);
            CAPTURE(col);
            if (expected.is_zero()) {
                CHECK(abs(h(row, col)) <= pow_ratio(BigReal(10, ctx), -45, 1));
            } else {
                check_digits(expected, h(row, col), 45);
            }
        }
    }
}

TEST_CASE("padded truncation is exact") {
    const auto ctx = with_precision(40);
    const Potential v = parse_potential("x^6-4*x^2");
    const auto small = assemble_harmonic_osc(v, 5, ctx);
    const auto large = assemble_harmonic_osc(v, 9, ctx);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK((*small.hamiltonian_real)(i, j) == (*large.hamiltonian_real)(i, j));
        }
    }
}

TEST_CASE("PT-symmetric cubic assembly is complex symmetric") {
    const auto ctx = with_precision(40);
    const auto pair = assemble_harmonic_osc(parse_potential("i*x^3"), 5, ctx);
    REQUIRE(pair.complex_path());
    CHECK(pair.identity_overlap);
    const auto& h = *pair.hamiltonian_complex;
    for (int i = 0; i < 5; ++i) {
        CHECK(h(i, i).imag().is_zero()); // <n|x^3|n> = 0
        for (int j = 0; j < 5; ++j) {
            CHECK(h(i, j) == h(j, i)); // symmetric, not Hermitian
        }
    }
    CHECK_FALSE(h(0, 1).imag().is_zero());
}

TEST_CASE("matrix dump format") {
    const auto ctx = with_precision(40);
    const auto pair = assemble_harmonic_osc(parse_potential("x^2"), 3, ctx);
    std::ostringstream os;
    pair.overlap.dump(os);
    CHECK(os.str() == "1 0 0\n0 1 0\n0 0 1\n");
}

} // TEST_SUITE
