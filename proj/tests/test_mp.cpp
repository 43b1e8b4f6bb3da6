#include "doctest.h"
#include "ritz/mp.hpp"
#include "ritz/quadrature.hpp"
#include "test_util.hpp"

using namespace ritz;
using ritz::test::check_digits;
using ritz::test::DeterministicStream;

TEST_SUITE("mp") {

TEST_CASE("precision context floor") {
    CHECK(with_precision(50).decimal_digits() == 50);
    CHECK(with_precision(200).decimal_digits() == 200);
    CHECK_THROWS_AS(with_precision(10), ConfigError);
    CHECK_THROWS_AS(with_precision(29), ConfigError);
}

TEST_CASE("gamma at half integers and integers") {
    const auto ctx = with_precision(60);
    check_digits(sqrt(BigReal::pi(ctx)), gamma(BigReal::from_ratio(1, 2, ctx), ctx), 58);
    CHECK(gamma(BigReal(5, ctx), ctx) == BigReal(24, ctx));
}

TEST_CASE("gamma(5/3) against the quadrature oracle") {
    // Independent route: Gamma(5/3) = integral( t^(2/3) e^-t, 0, inf ),
    // evaluated by tanh-sinh at twice the working precision.
    const auto ctx = with_precision(60);
    const auto ctx2 = with_precision(120);
    const BigReal oracle = quadrature_halfline(
        [&](const BigReal& t) {
            if (t.sign() <= 0) return BigReal::zero(ctx2);
            return pow_ratio(t, 2, 3) * exp(-t);
        },
        ctx2, 80);
    check_digits(gamma(BigReal::from_ratio(5, 3, ctx), ctx),
                 oracle.to_context(ctx), 58);
}

TEST_CASE("gamma functional equation on random arguments") {
    const auto ctx = with_precision(50);
    DeterministicStream rng(20240901ULL);
    const BigReal tol = pow_ratio(BigReal(10, ctx), -46, 1);
    for (int i = 0; i < 1000; ++i) {
        // z in (0, 50), exact rational so the run is reproducible.
        const long num = rng.next_long(1, 50'000'000);
        const BigReal z = BigReal::from_ratio(num, 1'000'000, ctx);
        const BigReal lhs = gamma(z + 1, ctx);
        const BigReal rhs = z * gamma(z, ctx);
        REQUIRE(abs(lhs - rhs) <= tol * abs(lhs));
    }
}

TEST_CASE("gamma of small integers is the factorial") {
    const auto ctx = with_precision(50);
    BigReal factorial(1, ctx);
    for (long n = 1; n <= 30; ++n) {
        CHECK(gamma(BigReal(n, ctx), ctx) == factorial);
        factorial *= n;
    }
}

TEST_CASE("gamma domain errors") {
    const auto ctx = with_precision(40);
    CHECK_THROWS_AS(gamma(BigReal(0, ctx), ctx), MathDomainError);
    CHECK_THROWS_AS(gamma(BigReal(-3, ctx), ctx), MathDomainError);
}

TEST_CASE("doubling precision refines rather than changes leading digits") {
    for (int digits : {40, 80, 160}) {
        const auto lo = with_precision(digits);
        const auto hi = with_precision(2 * digits);
        const BigReal z_lo = BigReal::from_ratio(7, 3, lo);
        const BigReal z_hi = BigReal::from_ratio(7, 3, hi);
        check_digits(gamma(z_hi, hi), gamma(z_lo, lo).to_context(hi), digits - 2);
        check_digits(exp(BigReal(3, hi)), exp(BigReal(3, lo)).to_context(hi), digits - 2);
        check_digits(sqrt(BigReal(2, hi)), sqrt(BigReal(2, lo)).to_context(hi), digits - 2);
    }
}

TEST_CASE("decimal round trip at full precision") {
    const auto ctx = with_precision(80);
    const BigReal pi = BigReal::pi(ctx);
    CHECK(BigReal::from_string(pi.to_string(), ctx) == pi);

    const BigReal ref = BigReal::from_string(
        "-3.410142761239829475297709653521909198712339047564881868937911", ctx);
    CHECK(BigReal::from_string(ref.to_string(), ctx) == ref);

    const BigReal tiny = BigReal::from_string("4.25e-37", ctx);
    CHECK(BigReal::from_string(tiny.to_string(), ctx) == tiny);

    CHECK(BigReal(24, ctx).to_string() == "24");
    CHECK(BigReal::from_ratio(1, 8, ctx).to_string() == "0.125");
    CHECK(BigReal::from_ratio(-1, 8, ctx).to_string() == "-0.125");
    CHECK(BigReal::zero(ctx).to_string() == "0");
}

TEST_CASE("string parse failures carry position") {
    const auto ctx = with_precision(40);
    CHECK_THROWS_AS(BigReal::from_string("", ctx), ParseError);
    CHECK_THROWS_AS(BigReal::from_string("1.2.3", ctx), ParseError);
    CHECK_THROWS_AS(BigReal::from_string("abc", ctx), ParseError);
}

TEST_CASE("mixing precision contexts fails fast") {
    const auto a = BigReal(1, with_precision(50));
    const auto b = BigReal(1, with_precision(60));
    CHECK_THROWS_AS(a + b, PrecisionMismatchError);
    CHECK_THROWS_AS(a * b, PrecisionMismatchError);
    CHECK_THROWS_AS((void)(a < b), PrecisionMismatchError);
    CHECK_NOTHROW(a.to_context(b.context()) + b);
}

TEST_CASE("complex arithmetic") {
    const auto ctx = with_precision(50);
    const BigComplex a(BigReal(1, ctx), BigReal(2, ctx));
    const BigComplex b(BigReal(3, ctx), BigReal(-1, ctx));

    const BigComplex prod = a * b;
    CHECK(prod.real() == BigReal(5, ctx));
    CHECK(prod.imag() == BigReal(5, ctx));

    check_digits((a / b) * b, a, 47);
    CHECK(BigComplex(BigReal(3, ctx), BigReal(4, ctx)).abs() == BigReal(5, ctx));

    // Principal square root: sqrt(-1) = i, and sqrt(z)^2 = z.
    const BigComplex minus_one(BigReal(-1, ctx), BigReal(0, ctx));
    const BigComplex root = sqrt(minus_one);
    CHECK(root.real().is_zero());
    check_digits(root.imag(), BigReal(1, ctx), 48);
    for (long re : {-7L, 0L, 3L}) {
        for (long im : {-2L, 5L}) {
            const BigComplex z(BigReal(re, ctx), BigReal(im, ctx));
            check_digits(sqrt(z) * sqrt(z), z, 46);
        }
    }
}

TEST_CASE("complex serialization") {
    const auto ctx = with_precision(40);
    CHECK(BigComplex(BigReal(2, ctx), BigReal(3, ctx)).to_string() == "2+3i");
    CHECK(BigComplex(BigReal(2, ctx), BigReal(-3, ctx)).to_string() == "2-3i");
    CHECK(BigComplex(BigReal(2, ctx), BigReal(0, ctx)).to_string() == "2");
}

TEST_CASE("agreement digit estimate") {
    const auto ctx = with_precision(60);
    const BigReal a = BigReal::from_string("1.234567890123456789", ctx);
    const BigReal b = BigReal::from_string("1.234567890198765432", ctx);
    const int d = agreement_digits(a, b);
    CHECK(d >= 9);
    CHECK(d <= 12);
    CHECK(agreement_digits(a, a) >= 60);
}

} // TEST_SUITE
