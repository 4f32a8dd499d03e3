#include "mori/numerics.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace mori;

namespace {

std::vector<Rat> rats(std::initializer_list<long long> values) {
    std::vector<Rat> out;
    for (long long v : values) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("intersection tables for the two families", "[numerics]") {
    IntersectionTable table = intersection_table(validate(3, 2, 1, 1, false));
    CHECK(table.family == CenterFamily::LinearCenter);
    CHECK(table.values == rats({2, 0, -1, -1}));

    table = intersection_table(validate(3, 2, 1, 2, false));
    CHECK(table.family == CenterFamily::PlanarCurveREqD);
    CHECK(table.values == rats({2, 0, -2, -4}));

    table = intersection_table(validate(5, 1, 3, 1, false));
    CHECK(table.values == rats({1, 0, -1, -2, -3, -4}));

    try {
        intersection_table(validate(4, 3, 1, 2, true));
        FAIL("expected UnsupportedFamily");
    } catch (const classification_error& e) {
        CHECK(e.code() == errc::unsupported_family);
    }
}

TEST_CASE("linear-center tables against the independent binomial oracle", "[numerics]") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; k <= n - 2; ++k)
            for (int d : {1, 2, 3, 5}) {
                IntersectionTable table = intersection_table(validate(n, d, k, 1, false));
                int codim = n - k;
                REQUIRE(table.values[0] == d);
                for (int i = 1; i < codim; ++i) REQUIRE(table.values[i] == 0);
                for (int i = codim; i <= n; ++i) {
                    BigInt expected = oracles::pascal_binomial(i - 1, codim) * (d - 1) -
                                      oracles::pascal_binomial(i - 1, codim - 1);
                    if (codim % 2 == 1) expected = -expected;
                    REQUIRE(table.values[i] == Rat(expected));
                }
            }
}

TEST_CASE("the k = 1 line tables carry the four special values", "[numerics]") {
    for (int n = 3; n <= 60; ++n)
        for (int d = 1; d <= n + 1; ++d) {
            IntersectionTable table = intersection_table(validate(n, d, 1, 1, false));
            REQUIRE(table.values[0] == d);
            for (int i = 1; i <= n - 2; ++i) REQUIRE(table.values[i] == 0);
            REQUIRE(table.values[n - 1] == Rat(n % 2 == 0 ? 1 : -1));
            BigInt e_top = BigInt(d - n) * (n % 2 == 0 ? -1 : 1);
            REQUIRE(table.values[n] == Rat(e_top));
        }
}

TEST_CASE("pseudo-effective thresholds", "[numerics]") {
    CHECK(tau(validate(3, 2, 1, 1, false)) == 2);
    CHECK(tau(validate(5, 1, 3, 1, false)) == 5);
    try {
        tau(validate(3, 4, 1, 1, false));
        FAIL("expected EmptyInterval");
    } catch (const classification_error& e) {
        CHECK(e.code() == errc::empty_interval);
    }
}

TEST_CASE("volume polynomials of the frozen instances", "[numerics]") {
    // 54 - 9(1+u)^2 + (1+u)^3 for the quadric threefold along a line
    VolumePolynomial poly = volume_poly(validate(3, 2, 1, 1, false));
    CHECK(poly.coefficients == rats({46, -15, -6, 1}));
    CHECK(poly.tau == 2);
    CHECK(poly.value_at_zero() == 46);
    CHECK(poly_eval(poly, Rat(2)) == 0);

    // 54 - 18(1+u)^2 + 4(1+u)^3 for the conic with r = d = 2
    poly = volume_poly(validate(3, 2, 1, 2, false));
    CHECK(poly.coefficients == rats({40, -24, -6, 4}));
    CHECK(poly.value_at_zero() == 40);
    CHECK(poly_eval(poly, Rat(2)) == 0);

    poly = volume_poly(validate(5, 1, 3, 1, false));
    CHECK(poly.value_at_zero() == 6250);
    CHECK(poly_eval(poly, Rat(5)) == 0);
}

TEST_CASE("exact integration", "[numerics]") {
    VolumePolynomial poly = volume_poly(validate(3, 2, 1, 1, false));
    CHECK(integrate(poly, Rat(0), Rat(2)) == 50);
    CHECK(integrate(poly, Rat(0), Rat(0)) == 0);
    CHECK(integrate(poly, Rat(1, 2), Rat(1, 2)) == 0);

    poly = volume_poly(validate(5, 1, 3, 1, false));
    CHECK(integrate(poly, Rat(0), Rat(5)) == Rat(25000, 3));

    try {
        integrate(poly, Rat(0), Rat(6));
        FAIL("expected IntervalError");
    } catch (const classification_error& e) {
        CHECK(e.code() == errc::interval_error);
    }
    try {
        integrate(poly, Rat(2), Rat(1));
        FAIL("expected IntervalError");
    } catch (const classification_error& e) {
        CHECK(e.code() == errc::interval_error);
    }
}

TEST_CASE("volume endpoints equal the top self-intersection and zero", "[numerics]") {
    for (int n = 3; n <= 25; ++n) {
        for (int k = 1; k <= n - 2; ++k)
            for (int d = 1; d <= k + 2; ++d) {
                BlowupConfig cfg = validate(n, d, k, 1, false);
                VolumePolynomial poly = volume_poly(cfg);
                Rat anti = oracles::top_power(intersection_table(cfg).values, n,
                                              Rat(n + 2 - d), Rat(-(n - k - 1)));
                REQUIRE(poly.value_at_zero() == anti);
                REQUIRE(poly_eval(poly, poly.tau) == 0);
            }
        for (int d : {2, 3}) {
            BlowupConfig cfg = validate(n, d, 1, d, false);
            VolumePolynomial poly = volume_poly(cfg);
            Rat anti = oracles::top_power(intersection_table(cfg).values, n,
                                          Rat(n + 2 - d), Rat(-(n - 2)));
            REQUIRE(poly.value_at_zero() == anti);
            REQUIRE(poly_eval(poly, poly.tau) == 0);
        }
    }
}

TEST_CASE("integration matches Gauss-Legendre quadrature", "[numerics]") {
    oracles::GaussLegendre rule(64);
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> pick_n(3, 40);
    for (int trial = 0; trial < 60; ++trial) {
        int n = pick_n(rng);
        int k = std::uniform_int_distribution<int>(1, n - 2)(rng);
        int d = std::uniform_int_distribution<int>(1, k + 2)(rng);
        BlowupConfig cfg = validate(n, d, k, 1, false);
        VolumePolynomial poly = volume_poly(cfg);
        oracles::VolumeEvaluator f(cfg);
        oracles::Real approx =
            rule.integrate(f, oracles::Real(0), oracles::to_real(poly.tau));
        oracles::Real exact = oracles::to_real(integrate(poly, Rat(0), poly.tau));
        double rel = static_cast<double>(abs(approx - exact) / abs(exact));
        REQUIRE(rel <= 1e-9);
    }
}

TEST_CASE("volume is non-increasing on the pseudo-effective interval", "[numerics]") {
    for (int n = 3; n <= 20; ++n)
        for (int k = 1; k <= n - 2; ++k)
            for (int d = 1; d <= k + 2; ++d) {
                BlowupConfig cfg = validate(n, d, k, 1, false);
                VolumePolynomial poly = volume_poly(cfg);
                Rat previous = poly.value_at_zero();
                for (int step = 1; step < 32; ++step) {
                    Rat u = poly.tau * Rat(step, 31);
                    Rat value = poly_eval(poly, u);
                    REQUIRE(value <= previous);
                    previous = value;
                }
            }
}
