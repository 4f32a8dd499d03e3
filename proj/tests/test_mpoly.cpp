#include "mori/mpoly.hpp"
#include "mori/toric.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace mori;

namespace {

const std::vector<std::string> kVars = cox_variable_names(3); // u,x0..x4,z

MPoly var(const std::string& name) {
    MPoly probe(kVars);
    return MPoly::variable(kVars, probe.index_of(name));
}

MPoly random_poly(std::mt19937& rng, int max_terms = 6, int max_exp = 3) {
    MPoly out(kVars);
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(kVars.size(), 0);
        for (auto& e : exps) e = exp(rng) == 3 ? exp(rng) : 0;
        out += MPoly::monomial(kVars, exps, Rat(num(rng), den(rng)));
    }
    return out;
}

} // namespace

TEST_CASE("arithmetic basics", "[mpoly]") {
    MPoly x0 = var("x0"), x1 = var("x1");
    CHECK((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);
    CHECK((x0 + x1) * (x0 - x1) != x0 * x0 + x1 * x1);
    CHECK((x0 - x0).is_zero());
    CHECK((x0 * x0).to_string() == "x0^2");
}

TEST_CASE("substitution", "[mpoly]") {
    MPoly x0 = var("x0"), x2 = var("x2"), u = var("u");
    MPoly product = x2 * x0;
    std::map<std::size_t, MPoly> images{{product.index_of("x2"), u * x2}};
    CHECK(product.substitute(images) == u * x2 * x0);

    // substituting a constant
    std::map<std::size_t, MPoly> to_one{{product.index_of("x2"),
                                         MPoly::constant(kVars, 1)}};
    CHECK(product.substitute(to_one) == x0);
}

TEST_CASE("derivative and evaluation", "[mpoly]") {
    MPoly x0 = var("x0");
    MPoly cubed = x0.pow(3);
    CHECK(cubed.derivative(cubed.index_of("x0")) == x0.pow(2).scaled(3));

    std::vector<Rat> point(kVars.size(), Rat(0));
    point[cubed.index_of("x0")] = Rat(2);
    CHECK(cubed.evaluate(point) == 8);
    CHECK(cubed.derivative(cubed.index_of("u")).is_zero());
}

TEST_CASE("homogeneity and bidegree", "[mpoly]") {
    auto grading = toric_grading(3, 1, 2);
    MPoly u = var("u"), z = var("z"), x0 = var("x0"), x3 = var("x3");
    auto deg = (z * u).bidegree(grading);
    REQUIRE(deg.has_value());
    CHECK((*deg)[0] == 2);
    CHECK((*deg)[1] == 0);

    deg = (z * u - x0 * x0).bidegree(grading);
    REQUIRE(deg.has_value());
    CHECK((*deg)[0] == 2);
    CHECK((*deg)[1] == 0);

    CHECK_FALSE((z * u + x0).bidegree(grading).has_value());
    CHECK((x0 + x3).is_homogeneous());
    CHECK_FALSE((x0 + x3).bidegree(grading).has_value());
    CHECK_FALSE((x0 + x0 * x0).is_homogeneous());
}

TEST_CASE("canonical printing order", "[mpoly]") {
    MPoly u = var("u"), z = var("z"), x0 = var("x0");
    CHECK((z * u - x0 * x0).to_string() == "u*z - x0^2");
    CHECK((x0 - z).to_string() == "-z + x0");
    CHECK(MPoly(kVars).to_string() == "0");
    CHECK(MPoly::constant(kVars, Rat(-3, 2)).to_string() == "-3/2");
}

TEST_CASE("parse accepts the strict grammar", "[mpoly]") {
    MPoly parsed = MPoly::parse(kVars, "2*x0^2*x1 - 1/2*z + u");
    MPoly expected = var("x0").pow(2) * var("x1").scaled(2) -
                     var("z").scaled(Rat(1, 2)) + var("u");
    CHECK(parsed == expected);
    CHECK(MPoly::parse(kVars, "0").is_zero());
    CHECK(MPoly::parse(kVars, "-x0") == -var("x0"));
    CHECK(MPoly::parse(kVars, "x0^2*x0") == var("x0").pow(3));

    CHECK_THROWS_AS(MPoly::parse(kVars, ""), classification_error);
    CHECK_THROWS_AS(MPoly::parse(kVars, "y0"), classification_error);
    CHECK_THROWS_AS(MPoly::parse(kVars, "x0 + + x1"), classification_error);
    CHECK_THROWS_AS(MPoly::parse(kVars, "2x0"), classification_error);
}

TEST_CASE("print/parse round trip on random polynomials", "[mpoly]") {
    std::mt19937 rng(13371337);
    for (int trial = 0; trial < 200; ++trial) {
        MPoly p = random_poly(rng);
        CHECK(MPoly::parse(kVars, p.to_string()) == p);
    }
}

TEST_CASE("arity mismatches are rejected", "[mpoly]") {
    MPoly other(std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(var("x0") + other, classification_error);
    CHECK_THROWS_AS(var("x0").evaluate({Rat(1)}), classification_error);
}
