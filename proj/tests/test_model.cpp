#include <map>

#include "doctest.h"
#include "ritz/potential.hpp"
#include "test_util.hpp"

using namespace ritz;
using ritz::test::check_digits;
using ritz::test::DeterministicStream;

TEST_SUITE("model") {

TEST_CASE("parsing the paper potentials") {
    const Potential quartic = parse_potential("x^4-5*x^2");
    CHECK(quartic.real_coeffs() == std::map<int, Rational>{{4, Rational(1)}, {2, Rational(-5)}});
    CHECK(quartic.imag_coeffs().empty());
    CHECK(quartic.degree() == 4);

    const Potential sextic = parse_potential("x^6-4*x^2");
    CHECK(sextic.real_coeffs() == std::map<int, Rational>{{6, Rational(1)}, {2, Rational(-4)}});

    const Potential cubic_pt = parse_potential("i*x^3");
    CHECK(cubic_pt.real_coeffs().empty());
    CHECK(cubic_pt.imag_coeffs() == std::map<int, Rational>{{3, Rational(1)}});
    CHECK_FALSE(cubic_pt.is_real());
}

TEST_CASE("whitespace and coefficient forms") {
    CHECK(parse_potential(" x ^ 4 - 5 * x ^ 2 ") == parse_potential("x^4-5*x^2"));
    CHECK(parse_potential("1/2*x^2+3") ==
          Potential({{2, Rational(1, 2)}, {0, Rational(3)}}, {}));
    CHECK(parse_potential("0.25*x^4+x") ==
          Potential({{4, Rational(1, 4)}, {1, Rational(1)}}, {}));
    CHECK(parse_potential("2*i*x^3+x^4") ==
          Potential({{4, Rational(1)}}, {{3, Rational(2)}}));
    CHECK(parse_potential("-x^2+x^4") == parse_potential("x^4-x^2"));
    CHECK(parse_potential("x^2-x^2+x^6") == Potential({{6, Rational(1)}}, {}));
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](const std::string& expr) -> std::size_t {
        try {
            parse_potential(expr);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected a parse error for '", expr, "'");
        return std::string::npos;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("x^") == 2);
    CHECK(position_of("x^-2") == 2);
    CHECK(position_of("x^65") == 2);
    CHECK(position_of("sin(x)") == 0);
    CHECK(position_of("x^4-5*y^2") == 6);
    CHECK(position_of("x^4+") == 4);
    CHECK(position_of("2x") == 1);
    CHECK(position_of("i+x^2") == 1);
    CHECK(position_of("1/0*x^2") == 0);
}

TEST_CASE("potential type invariants") {
    // Not confining / degenerate inputs are rejected at construction.
    CHECK_THROWS_AS(parse_potential("-x^2"), ConfigError);
    CHECK_THROWS_AS(parse_potential("5"), ConfigError);
    CHECK_THROWS_AS(parse_potential("x^2-x^2"), ConfigError);
    CHECK_NOTHROW(parse_potential("x^3")); // odd but positive leading: valid type
    CHECK_NOTHROW(parse_potential("i*x^3-x^2")); // complex: leading sign unconstrained
}

TEST_CASE("parity classification") {
    CHECK(parity_of(parse_potential("x^4-5*x^2")) == Parity::SYMMETRIC);
    CHECK(parity_of(parse_potential("x^4+x^3")) == Parity::ASYMMETRIC);
    CHECK(parity_of(parse_potential("i*x^3")) == Parity::ASYMMETRIC);
    CHECK(parity_of(parse_potential("x^2+1")) == Parity::SYMMETRIC);
}

TEST_CASE("asymptotic analysis of the paper potentials") {
    const AsymptoticForm q = analyze_asymptotics(parse_potential("x^4-5*x^2"));
    CHECK(q.k == 2);
    CHECK(q.a == Rational(1));
    CHECK(q.to_string() == "x^3/3");

    const AsymptoticForm s = analyze_asymptotics(parse_potential("x^6-4*x^2"));
    CHECK(s.k == 3);
    CHECK(s.a == Rational(1));
    CHECK(s.to_string() == "x^4/4");

    const AsymptoticForm h = analyze_asymptotics(parse_potential("x^2"));
    CHECK(h.k == 1);
    CHECK(h.a == Rational(1));
    CHECK(h.to_string() == "x^2/2");

    const AsymptoticForm scaled = analyze_asymptotics(parse_potential("3*x^4-x^2"));
    CHECK(scaled.k == 2);
    CHECK(scaled.a == Rational(3));
}

TEST_CASE("asymptotic analysis rejections") {
    CHECK_THROWS_AS(analyze_asymptotics(parse_potential("x^3")), UnsupportedPotentialError);
    CHECK_THROWS_AS(analyze_asymptotics(parse_potential("i*x^3")), UnsupportedPotentialError);
    CHECK_THROWS_AS(analyze_asymptotics(parse_potential("x^4+x^3+i*x^2")),
                    UnsupportedPotentialError);
}

TEST_CASE("decay function values") {
    const auto ctx = with_precision(50);
    const AsymptoticForm s2{2, Rational(1)};
    check_digits(s2.decay_at(BigReal(2, ctx)), BigReal::from_ratio(8, 3, ctx), 48);
    const AsymptoticForm s1{1, Rational(4)};
    // sqrt(4)/2 * x^2 = x^2 at x = 3.
    check_digits(s1.decay_at(BigReal(3, ctx)), BigReal(9, ctx), 48);
}

TEST_CASE("asymptotics recovered by construction on random polynomials") {
    DeterministicStream rng(777ULL);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = static_cast<int>(rng.next_long(1, 8));
        const Rational lead(rng.next_long(1, 40), rng.next_long(1, 7));
        std::map<int, Rational> coeffs{{2 * k, lead}};
        const int extra_terms = static_cast<int>(rng.next_long(0, 4));
        for (int t = 0; t < extra_terms; ++t) {
            const int exponent = static_cast<int>(rng.next_long(0, 2 * k - 1));
            coeffs[exponent] = coeffs[exponent] + Rational(rng.next_long(-30, 30));
        }
        Potential v(coeffs, {});
        const AsymptoticForm form = analyze_asymptotics(v);
        REQUIRE(form.k == k);
        REQUIRE(form.a == lead);
    }
}

TEST_CASE("parse/serialize round trip on canonical forms") {
    for (const std::string expr :
         {"x^4-5*x^2", "x^6-4*x^2", "i*x^3", "2*x^4+x", "1/2*x^2+3", "x^2-1/3",
          "x^4+x^3", "x^4-i*x^3+2*i*x", "3*x^6-2/7*x^4+x^2-12"}) {
        CAPTURE(expr);
        CHECK(parse_potential(expr).to_string() == expr);
    }

    DeterministicStream rng(31337ULL);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<int, Rational> real, imag;
        const int degree = static_cast<int>(rng.next_long(1, 10));
        real[degree] = Rational(rng.next_long(1, 9));
        for (int t = 0; t < 3; ++t) {
            real[static_cast<int>(rng.next_long(0, degree - 1))] =
                Rational(rng.next_long(-9, 9), rng.next_long(1, 4));
            imag[static_cast<int>(rng.next_long(0, degree))] =
                Rational(rng.next_long(-9, 9));
        }
        Potential v(real, imag);
        CHECK(parse_potential(v.to_string()) == v);
    }
}

} // TEST_SUITE
