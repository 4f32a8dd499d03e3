#include "mori/cones.hpp"
#include "mori/fano.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mori;

namespace {

Cone2 cone(long long a1, long long b1, long long a2, long long b2) {
    return Cone2(DivisorClass(a1, b1), DivisorClass(a2, b2));
}

} // namespace

TEST_CASE("cone_set matches the three stated instances", "[cones]") {
    // r = d with Pi not contained: nef fills the movable cone
    ConeSet cones = cone_set(validate(4, 2, 1, 2, false));
    CHECK(cones.nef == cone(1, 0, 1, -1));
    CHECK(cones.mov == cone(1, 0, 1, -1));
    CHECK(cones.eff == cone(0, 1, 1, -1));

    // hyperplane with codimension-2 center: movable cone stops at rH-E
    cones = cone_set(validate(3, 1, 1, 2, false));
    CHECK(cones.nef == cone(1, 0, 2, -1));
    CHECK(cones.mov == cone(1, 0, 2, -1));

    // nef strictly smaller than movable
    cones = cone_set(validate(5, 1, 2, 3, false));
    CHECK(cones.nef == cone(1, 0, 3, -1));
    CHECK(cones.mov == cone(1, 0, 1, -1));
}

TEST_CASE("sqm_kind reproduces the conic family and the flop instance", "[cones]") {
    CHECK(sqm_kind(validate(4, 1, 1, 2, true)) == SqmKind::Flip);
    CHECK(sqm_kind(validate(4, 2, 1, 2, true)) == SqmKind::Flop);
    CHECK(sqm_kind(validate(4, 3, 1, 2, true)) == SqmKind::AntiFlip);
    CHECK(sqm_kind(validate(4, 4, 1, 2, true)) == SqmKind::AntiFlip);
    CHECK(sqm_kind(validate(4, 5, 1, 2, true)) == SqmKind::AntiFlip);
    CHECK(sqm_kind(validate(5, 1, 2, 3, false)) == SqmKind::Flop);
}

TEST_CASE("sqm_kind rejects walls that are not small modifications", "[cones]") {
    auto expect_not_sqm = [](const BlowupConfig& cfg) {
        try {
            sqm_kind(cfg);
            FAIL("expected NotAnSQM for " << cfg.pretty());
        } catch (const classification_error& e) {
            CHECK(e.code() == errc::not_an_sqm);
        }
    };
    expect_not_sqm(validate(3, 2, 1, 2, false)); // isomorphism
    expect_not_sqm(validate(3, 1, 1, 3, false)); // divisorial
    expect_not_sqm(validate(3, 2, 1, 1, false)); // r = 1 fibration
}

TEST_CASE("mori_chambers produces the stated decompositions", "[cones]") {
    // anti-flip member of the conic family
    ChamberDecomposition mcd = mori_chambers(validate(4, 5, 1, 2, true));
    REQUIRE(mcd.chambers.size() == 3);
    CHECK(mcd.chambers[0].model == ModelTag::X);
    CHECK(mcd.chambers[1].model == ModelTag::Y);
    CHECK(mcd.chambers[2].model == ModelTag::YPrime);
    bool found_sqm = false;
    for (const auto& wall : mcd.walls)
        if (wall.kind == WallKind::SQM) {
            found_sqm = true;
            CHECK(wall.ray == DivisorClass(2, -1));
            REQUIRE(wall.sqm.has_value());
            CHECK(*wall.sqm == SqmKind::AntiFlip);
        }
    CHECK(found_sqm);

    // quadric threefold along a conic: two chambers, fibration boundary
    mcd = mori_chambers(validate(3, 2, 1, 2, false));
    REQUIRE(mcd.chambers.size() == 2);
    CHECK(mcd.walls.back().kind == WallKind::Fibration);
    CHECK(mcd.walls.back().ray == DivisorClass(1, -1));
    bool found_iso = false;
    for (const auto& wall : mcd.walls)
        if (wall.kind == WallKind::IsomorphismBoundary) found_iso = true;
    CHECK(found_iso);

    // divisorial contraction out of a hyperplane with codimension-2 center
    mcd = mori_chambers(validate(3, 1, 1, 3, false));
    REQUIRE(mcd.chambers.size() == 3);
    CHECK(mcd.chambers[2].model == ModelTag::Z);
    CHECK(mcd.walls.back().kind == WallKind::DivisorialToZ);
    CHECK(mcd.walls.back().ray == DivisorClass(3, -1));
}

TEST_CASE("cone containments and chamber tiling over a sweep", "[cones]") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; k <= n - 2; ++k)
            for (int d = 1; d <= 13; ++d)
                for (int r = 1; r <= 13; ++r)
                    for (int pi = 0; pi <= 1; ++pi) {
                        BlowupConfig cfg;
                        try {
                            cfg = validate(n, d, k, r, pi == 1);
                        } catch (const classification_error&) {
                            continue;
                        }
                        ConeSet cones = cone_set(cfg);
                        REQUIRE(cones.eff == Cone2(class_E(), class_H_minus_E()));
                        REQUIRE(cone_subset(cones.nef, cones.mov));
                        REQUIRE(cone_subset(cones.mov, cones.eff));

                        DivisorClass anti = derive(cfg).anti_canonical;
                        REQUIRE(cone_contains_interior(cones.eff, anti) ==
                                anticanonical_big(cfg));

                        ChamberDecomposition mcd = mori_chambers(cfg);
                        std::size_t expected =
                            (cfg.r == 1 || (cfg.r == cfg.d && !cfg.pi_contained)) ? 2 : 3;
                        REQUIRE(mcd.chambers.size() == expected);
                        REQUIRE(mcd.chambers.front().cone.ray1 == class_E());
                        REQUIRE(mcd.chambers.back().cone.ray2 == class_H_minus_E());
                        for (std::size_t i = 0; i + 1 < mcd.chambers.size(); ++i)
                            REQUIRE(mcd.chambers[i].cone.ray2 ==
                                    mcd.chambers[i + 1].cone.ray1);
                        // interiors stay on one side: every chamber is
                        // positively oriented in the same sense
                        for (const auto& chamber : mcd.chambers)
                            REQUIRE(ray_det(chamber.cone.ray1, chamber.cone.ray2) < 0);
                        // the second chamber is the nef cone
                        REQUIRE(mcd.chambers[1].cone == cones.nef);

                        if (theta_type(cfg) == ThetaType::SQM) {
                            bool proportional =
                                ray_det(anti, class_rH_minus_E(cfg.r)) == 0;
                            REQUIRE((sqm_kind(cfg) == SqmKind::Flop) == proportional);
                        }
                    }
}
