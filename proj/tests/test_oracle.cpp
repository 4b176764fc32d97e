#include <doctest.h>

#include <cmath>
#include <numbers>

#include "besselcert/oracle.hpp"

using namespace besselcert;
using oracle::bessel_j_ref;

namespace {

// Reference values computed independently with mpmath at 30 digits.
struct Ref {
    double nu;
    double x;
    double value;
};

constexpr Ref kBesselRefs[] = {
    {0.0, 1.0, 0.76519768655796655145},
    {1.0, 2.0, 0.5767248077568733872},
    {5.0, 5.0, 0.26114054612017009005},
    {10.0, 10.0, 0.2074861066333588577},
    {0.0, 10.0, -0.2459357644513483352},
    {1.0 / 3.0, 1.0, 0.73087640216944804775},
    {-1.0 / 3.0, 1.0, 0.6068875050465293454},
    {20.0, 100.0, 0.062217458498338753141},
    {0.0, 150.0, -0.00077409037539429124695},
    {30.0, 0.1, 3.5107914446214572286e-72},
    {0.0, 200.0, -0.015437439930565091592},
    {0.5, 199.0, -0.049875015598675655238},
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("bessel_j_ref matches high-precision references") {
    for (const Ref& r : kBesselRefs) {
        CAPTURE(r.nu);
        CAPTURE(r.x);
        const oracle::EvalResult e = bessel_j_ref(Order(r.nu), r.x);
        CHECK(rel(e.value, r.value) < 2e-15);
        CHECK(e.abs_err_estimate < 1e-14 * std::max(std::fabs(r.value), 1e-10));
    }
    const double x = 25.0 + std::cbrt(25.0);
    CHECK(rel(bessel_j_ref(Order(25.0), x).value, 0.22080082071874279889) < 1e-14);
}

TEST_CASE("bessel_j_wide keeps digits beyond double") {
    const oracle::WideResult w = oracle::bessel_j_wide(Order(0.0), 1.0);
    CHECK(q_to_string(w.value, 20) == "0.76519768655796655145");
    CHECK(static_cast<double>(w.abs_err) < 1e-25);
}

TEST_CASE("bessel_j_ref rejects points outside its domain") {
    CHECK_THROWS_AS(bessel_j_ref(Order(0.0), 0.0), DomainError);
    CHECK_THROWS_AS(bessel_j_ref(Order(0.0), 200.5), DomainError);
    CHECK_THROWS_AS(bessel_j_ref(Order(-0.75), 1.0), DomainError);
}

TEST_CASE("precision cap produces PrecisionInfeasible") {
    oracle::PrecisionCtx ctx;
    ctx.max_digits = 30;
    CHECK_THROWS_AS(bessel_j_ref(Order(0.0), 150.0, ctx), PrecisionInfeasible);
}

TEST_CASE("small-x limits") {
    CHECK(bessel_j_ref(Order(0.0), 1e-8).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(bessel_j_ref(Order(1.0), 1e-8).value) < 1e-8);
    CHECK(oracle::bessel_j_prime_ref(Order(1.0), 1e-8).value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("derivatives") {
    CHECK(rel(oracle::bessel_j_prime_ref(Order(2.0), 3.0).value, 0.014998118135342407654) < 1e-13);
    // d/dx √(2/(πx)) sin x at x = π is −√2/π.
    const double closed = -std::numbers::sqrt2 / std::numbers::pi;
    CHECK(rel(oracle::bessel_j_prime_ref(Order(0.5), std::numbers::pi).value, closed) < 1e-14);
    CHECK(rel(closed, -0.45015815807855303478) < 1e-15);

    const double h = 1e-6;
    const double fd = (bessel_j_ref(Order(2.0), 3.0 + h).value - bessel_j_ref(Order(2.0), 3.0 - h).value) / (2 * h);
    CHECK(std::fabs(fd - oracle::bessel_j_prime_ref(Order(2.0), 3.0).value) < 1e-9);

    for (double nu : {0.0, 1.0 / 3.0, 2.5}) {
        for (double x : {0.7, 4.0, 33.0}) {
            const double a = oracle::bessel_j_prime_any(Order(nu), x).value;
            const double d = (bessel_j_ref(Order(nu), x + h).value - bessel_j_ref(Order(nu), x - h).value) / (2 * h);
            CHECK(std::fabs(a - d) < 1e-9);
        }
    }
}

TEST_CASE("Airy function on the negative axis") {
    CHECK(rel(oracle::airy_ai_neg_ref(0.5).value, 0.4757280916105395888) < 1e-14);
    CHECK(rel(oracle::airy_ai_neg_ref(1.0).value, 0.5355608832923521188) < 1e-14);
    CHECK(rel(oracle::airy_ai_neg_ref(2.0).value, 0.22740742820168557599) < 1e-14);
    CHECK(rel(oracle::airy_ai_neg_ref(10.0).value, 0.040241238486443190689) < 1e-13);
    CHECK(rel(oracle::airy_ai_neg_ref(60.0).value, 0.07778782447711558377) < 1e-12);
    CHECK(rel(oracle::airy_ai_neg_prime_ref(2.0).value, -0.61825902074169104141) < 1e-13);
    // Approaches Ai(0) = 3^{−2/3}/Γ(2/3).
    CHECK(std::fabs(oracle::airy_ai_neg_ref(1e-9).value - 0.35502805388781723926) < 1e-9);
    CHECK_NOTHROW(oracle::airy_ai_neg_ref(115.0));
    CHECK_THROWS_AS(oracle::airy_ai_neg_ref(121.0), DomainError);
}

TEST_CASE("Airy value is the J_{±1/3} combination") {
    for (double x : {0.5, 1.0, 2.0, 7.5}) {
        const double z = 2.0 * x * std::sqrt(x) / 3.0;
        const double combo = std::sqrt(x) / 3.0 *
                             (bessel_j_ref(Order(-1.0 / 3.0), z).value + bessel_j_ref(Order(1.0 / 3.0), z).value);
        CHECK(std::fabs(oracle::airy_ai_neg_ref(x).value - combo) < 4e-16);
    }
    const oracle::AiryPair both = oracle::airy_ai_neg_both(3.0);
    CHECK(both.value.value == oracle::airy_ai_neg_ref(3.0).value);
    CHECK(both.derivative.value == oracle::airy_ai_neg_prime_ref(3.0).value);
}

TEST_CASE("gamma") {
    CHECK(oracle::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-16));
    CHECK(rel(oracle::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-15);
    CHECK(rel(oracle::gamma(2.0 / 3.0), 1.3541179394264004169) < 1e-15);
    CHECK(rel(oracle::gamma(1.0 / 3.0), 2.6789385347077476337) < 1e-15);
    CHECK(rel(oracle::gamma(63.5), 2.492900600836656441e+86) < 1e-14);
    CHECK(rel(oracle::gamma(0.1), 9.5135076986687318363) < 1e-15);
    const qreal g = oracle::gamma_q(qreal(1) / 10);
    CHECK(q_to_string(g, 25) == "9.513507698668731836292487");
}

TEST_CASE("refine_root") {
    CHECK(oracle::refine_root([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-13) ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    const double a1 = oracle::refine_root([](double x) { return oracle::airy_ai_neg_ref(x).value; }, 2.0, 3.0, 1e-12);
    CHECK(std::fabs(a1 - 2.3381074104597670385) < 1e-11);
    const double j01 = oracle::refine_root([](double x) { return bessel_j_ref(Order(0.0), x).value; }, 2.0, 3.0, 1e-12);
    CHECK(std::fabs(j01 - 2.4048255576957727686) < 1e-11);
    CHECK_THROWS_AS(oracle::refine_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), NoSignChange);
}

TEST_CASE("quadrature") {
    CHECK(oracle::quad([](double t) { return std::sin(t); }, 0.0, std::numbers::pi, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-12));
    const double panels[] = {0.0, 1.0, 2.0, 3.0};
    const oracle::QuadResult r = oracle::quad_panels([](double t) { return std::fabs(t - 1.0); }, panels, 1e-12);
    CHECK(r.value == doctest::Approx(2.5).epsilon(1e-12));
}
