#pragma once

// Nef / movable / effective cones of Y and the chamber decomposition of the
// effective cone, with a classified crossing at every wall.

#include "mori/birational.hpp"
#include "mori/config.hpp"
#include "mori/divisor.hpp"
#include "mori/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mori {

struct ConeSet {
    Cone2 nef;
    Cone2 mov;
    Cone2 eff;
};

// Nef(Y) = <H, rH-E> unless r = d and Pi is not contained in X, where it is
// the full movable cone <H, H-E>. Mov(Y) = <H, rH-E> exactly for a hyperplane
// with codimension-2 center, else <H, H-E>. Eff(Y) = <E, H-E> always.
inline ConeSet cone_set(const BlowupConfig& cfg) {
    ConeSet out;
    bool nef_reaches_toric_wall = !(cfg.r == cfg.d && !cfg.pi_contained);
    out.nef = nef_reaches_toric_wall
                  ? Cone2(class_H(), class_rH_minus_E(cfg.r))
                  : Cone2(class_H(), class_H_minus_E());
    bool mov_is_nef_of_divisorial_side = (cfg.d == 1 && cfg.n - cfg.k == 2);
    out.mov = mov_is_nef_of_divisorial_side
                  ? Cone2(class_H(), class_rH_minus_E(cfg.r))
                  : Cone2(class_H(), class_H_minus_E());
    out.eff = Cone2(class_E(), class_H_minus_E());
    return out;
}

enum class SqmKind { Flip, Flop, AntiFlip };

inline const char* sqm_kind_name(SqmKind kind) {
    switch (kind) {
        case SqmKind::Flip: return "Flip";
        case SqmKind::Flop: return "Flop";
        case SqmKind::AntiFlip: return "AntiFlip";
    }
    return "?";
}

// Sign of -K_Y against the curves contracted on the wall rH-E: such a curve C
// with H.C = 1 has E.C = r, so -K_Y.C = (n+2-d) - r(n-k-1).
inline SqmKind sqm_kind(const BlowupConfig& cfg) {
    if (theta_type(cfg) != ThetaType::SQM)
        throw classification_error(
            errc::not_an_sqm,
            "the wall crossing is not a small modification for " + cfg.pretty());
    long long sign = static_cast<long long>(cfg.n + 2 - cfg.d) -
                     static_cast<long long>(cfg.r) * (cfg.n - cfg.k - 1);
    if (sign > 0) return SqmKind::Flip;
    if (sign == 0) return SqmKind::Flop;
    return SqmKind::AntiFlip;
}

enum class ModelTag { X, Y, YPrime, Z };

inline const char* model_tag_name(ModelTag tag) {
    switch (tag) {
        case ModelTag::X: return "X";
        case ModelTag::Y: return "Y";
        case ModelTag::YPrime: return "Y'";
        case ModelTag::Z: return "Z";
    }
    return "?";
}

enum class WallKind { BlowdownToX, Fibration, DivisorialToZ, SQM, IsomorphismBoundary };

inline const char* wall_kind_name(WallKind kind) {
    switch (kind) {
        case WallKind::BlowdownToX: return "BlowdownToX";
        case WallKind::Fibration: return "Fibration";
        case WallKind::DivisorialToZ: return "DivisorialToZ";
        case WallKind::SQM: return "SQM";
        case WallKind::IsomorphismBoundary: return "IsomorphismBoundary";
    }
    return "?";
}

struct WallCrossing {
    DivisorClass ray;
    WallKind kind = WallKind::BlowdownToX;
    std::optional<SqmKind> sqm;
    std::string detail;
};

struct Chamber {
    Cone2 cone;
    ModelTag model = ModelTag::Y;
};

// Chambers tile Eff(Y) = <E, H-E> from the E-ray to the (H-E)-ray;
// consecutive chambers share a ray.
struct ChamberDecomposition {
    std::vector<Chamber> chambers;
    std::vector<WallCrossing> walls;
};

inline ChamberDecomposition mori_chambers(const BlowupConfig& cfg) {
    ChamberDecomposition out;
    ThetaType type = theta_type(cfg);
    DivisorClass wall_ray = class_rH_minus_E(cfg.r);

    out.chambers.push_back({Cone2(class_E(), class_H()), ModelTag::X});
    out.walls.push_back({class_H(), WallKind::BlowdownToX, std::nullopt,
                         "contraction of E back to the blowup center"});

    switch (type) {
        case ThetaType::FibrationR1: {
            out.chambers.push_back({Cone2(class_H(), class_H_minus_E()), ModelTag::Y});
            out.walls.push_back({class_H_minus_E(), WallKind::Fibration, std::nullopt,
                                 fibration_model(cfg).description});
            break;
        }
        case ThetaType::Isomorphism: {
            out.chambers.push_back({Cone2(class_H(), class_H_minus_E()), ModelTag::Y});
            out.walls.push_back({wall_ray, WallKind::IsomorphismBoundary, std::nullopt,
                                 "toric wall interior to Nef(Y); the modification "
                                 "restricts to an isomorphism on Y"});
            out.walls.push_back({class_H_minus_E(), WallKind::Fibration, std::nullopt,
                                 fibration_model(cfg).description});
            break;
        }
        case ThetaType::Divisorial: {
            out.chambers.push_back({Cone2(class_H(), wall_ray), ModelTag::Y});
            out.chambers.push_back({Cone2(wall_ray, class_H_minus_E()), ModelTag::Z});
            out.walls.push_back({wall_ray, WallKind::DivisorialToZ, std::nullopt,
                                 singularity_report(cfg).front().detail});
            break;
        }
        case ThetaType::SQM: {
            SqmKind kind = sqm_kind(cfg);
            out.chambers.push_back({Cone2(class_H(), wall_ray), ModelTag::Y});
            out.chambers.push_back({Cone2(wall_ray, class_H_minus_E()), ModelTag::YPrime});
            out.walls.push_back({wall_ray, WallKind::SQM, kind,
                                 std::string("small modification (") +
                                     sqm_kind_name(kind) +
                                     ") swapping the strict transform of Pi with "
                                     "the extracted locus"});
            out.walls.push_back({class_H_minus_E(), WallKind::Fibration, std::nullopt,
                                 fibration_model(cfg).description});
            break;
        }
    }
    return out;
}

} // namespace mori
