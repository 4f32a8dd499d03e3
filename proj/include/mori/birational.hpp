#pragma once

// Classification of the second Mori contraction of Y: the restriction of the
// ambient toric modification to Y is a divisorial contraction, a small
// modification, an isomorphism, or (for r = 1) already a fibration. Also
// reports the candidate singularities of the models and the structure of the
// induced fibration.

#include "mori/config.hpp"
#include "mori/divisor.hpp"
#include "mori/errors.hpp"

#include <string>
#include <vector>

namespace mori {

enum class ThetaType { Divisorial, SQM, Isomorphism, FibrationR1 };

inline const char* theta_type_name(ThetaType type) {
    switch (type) {
        case ThetaType::Divisorial: return "Divisorial";
        case ThetaType::SQM: return "SQM";
        case ThetaType::Isomorphism: return "Isomorphism";
        case ThetaType::FibrationR1: return "FibrationR1";
    }
    return "?";
}

inline ThetaType theta_type(const BlowupConfig& cfg) {
    if (cfg.r == 1) return ThetaType::FibrationR1;
    if (cfg.d == 1 && cfg.n - cfg.k == 2) return ThetaType::Divisorial;
    if (cfg.r == cfg.d && !cfg.pi_contained) return ThetaType::Isomorphism;
    return ThetaType::SQM;
}

enum class Terminality { Terminal, CanonicalNotTerminal, Worse, SmoothOrTrivial };

inline const char* terminality_name(Terminality t) {
    switch (t) {
        case Terminality::Terminal: return "Terminal";
        case Terminality::CanonicalNotTerminal: return "CanonicalNotTerminal";
        case Terminality::Worse: return "Worse";
        case Terminality::SmoothOrTrivial: return "SmoothOrTrivial";
    }
    return "?";
}

// Cyclic quotient data 1/order(1,...,1,0,...,0) with ones_count ones. For
// order 1 the group is trivial. Terminality follows the weighted-blowup
// discrepancy count for this weight pattern: terminal iff ones_count > order,
// canonical-not-terminal iff equal.
struct CyclicQuotientSing {
    int order = 0;
    int ones_count = 0;
    int zeros_count = 0;
    std::string ambient;  // "point of Z" | "locus in Y'" | "locus in T'"
    int codimension = 0;  // codimension of the singular locus in its model
    Terminality terminality = Terminality::SmoothOrTrivial;
    std::string detail;

    std::string type_string() const {
        std::string out = "1/" + std::to_string(order) + "(1^" +
                          std::to_string(ones_count);
        if (zeros_count > 0) out += ",0^" + std::to_string(zeros_count);
        out += ")";
        return out;
    }
};

inline Terminality quotient_terminality(int order, int ones_count) {
    if (order <= 1) return Terminality::SmoothOrTrivial;
    if (ones_count > order) return Terminality::Terminal;
    if (ones_count == order) return Terminality::CanonicalNotTerminal;
    return Terminality::Worse;
}

// Divisorial case: one quotient point on Z = (zu - h = 0) in P(1^{n+1}, r-1).
// SQM case: the hyperquotient pattern along the extracted P^{n-k-1} in Y';
// whether Y' is actually singular there depends on the defining polynomials,
// so the entry records the candidate type only. Isomorphism: empty list.
inline std::vector<CyclicQuotientSing> singularity_report(const BlowupConfig& cfg) {
    ThetaType type = theta_type(cfg);
    if (type == ThetaType::FibrationR1)
        throw classification_error(errc::not_applicable,
                                   "no modified model for r = 1");
    std::vector<CyclicQuotientSing> out;
    if (type == ThetaType::Isomorphism) return out;

    if (type == ThetaType::Divisorial) {
        CyclicQuotientSing sing;
        sing.order = cfg.r - 1;
        sing.ones_count = cfg.n; // = k + 2 in the codimension-2 case
        sing.zeros_count = 0;
        sing.ambient = "point of Z";
        sing.codimension = cfg.n;
        sing.terminality = quotient_terminality(sing.order, sing.ones_count);
        sing.detail = "contraction of the strict transform of Pi to the point p_z on Z = (zu-h" +
                      std::to_string(cfg.r) + " = 0) in P(1^" + std::to_string(cfg.n + 1) +
                      "," + std::to_string(cfg.r - 1) + ")";
        out.push_back(sing);
        return out;
    }

    CyclicQuotientSing sing;
    sing.order = cfg.r - 1;
    sing.ones_count = cfg.k + 2;
    sing.zeros_count = cfg.n - cfg.k - 1;
    sing.ambient = "locus in Y'";
    sing.codimension = cfg.k + 1;
    sing.terminality = quotient_terminality(sing.order, sing.ones_count);
    sing.detail = "hyperquotient pattern along the extracted P^" +
                  std::to_string(cfg.n - cfg.k - 1) + " in Y'";
    if (sing.order == 1)
        sing.detail += "; the quotient group is trivial but hypersurface "
                       "singularities can still occur along this locus";
    else
        sing.detail += "; whether Y' is actually singular depends on the "
                       "defining polynomials";
    out.push_back(sing);
    return out;
}

enum class FibreKind {
    ProjectiveSpace,            // P^{k+1}-bundle (r = 1, X a hyperplane)
    HypersurfaceLowAmbient,     // degree d-1 hypersurface in P^{k+1} (r = 1)
    HypersurfaceHighAmbient,    // degree d hypersurface in P^{k+2} (r = d, Pi not in X)
    WeightedCompleteIntersection // degrees (d-1, r) in P(1^{k+3}, r-1)
};

enum class Trichotomy { FanoFibration, CalabiYauFibration, CanonicallyPolarisedFibration };

inline const char* trichotomy_name(Trichotomy t) {
    switch (t) {
        case Trichotomy::FanoFibration: return "FanoFibration";
        case Trichotomy::CalabiYauFibration: return "CalabiYauFibration";
        case Trichotomy::CanonicallyPolarisedFibration:
            return "CanonicallyPolarisedFibration";
    }
    return "?";
}

struct FibreModel {
    int base_dim = 0;
    FibreKind kind = FibreKind::ProjectiveSpace;
    int fibre_canonical = 0; // K_F ~ O_F(d-k-3)
    Trichotomy trichotomy = Trichotomy::FanoFibration;
    std::string description;
};

inline Trichotomy fibration_trichotomy(const BlowupConfig& cfg) {
    int sign = 3 - cfg.d + cfg.k;
    if (sign > 0) return Trichotomy::FanoFibration;
    if (sign == 0) return Trichotomy::CalabiYauFibration;
    return Trichotomy::CanonicallyPolarisedFibration;
}

inline FibreModel fibration_model(const BlowupConfig& cfg) {
    if (theta_type(cfg) == ThetaType::Divisorial)
        throw classification_error(
            errc::not_applicable,
            "the divisorial contraction ends at Z; no fibration is induced");

    FibreModel out;
    out.fibre_canonical = cfg.d - cfg.k - 3;
    out.trichotomy = fibration_trichotomy(cfg);
    out.base_dim = (cfg.r == 1 && cfg.d > 1) ? cfg.n - cfg.k : cfg.n - cfg.k - 1;

    if (cfg.r == 1 && cfg.d == 1) {
        out.kind = FibreKind::ProjectiveSpace;
        out.description = "P^" + std::to_string(cfg.k + 1) + "-bundle over P^" +
                          std::to_string(out.base_dim);
    } else if (cfg.r == 1) {
        out.kind = FibreKind::HypersurfaceLowAmbient;
        out.description = "degree " + std::to_string(cfg.d - 1) +
                          " hypersurface in P^" + std::to_string(cfg.k + 1) +
                          " over P^" + std::to_string(out.base_dim);
    } else if (cfg.r == cfg.d && !cfg.pi_contained) {
        out.kind = FibreKind::HypersurfaceHighAmbient;
        out.description = "degree " + std::to_string(cfg.d) +
                          " hypersurface in P^" + std::to_string(cfg.k + 2) +
                          " over P^" + std::to_string(out.base_dim);
    } else {
        out.kind = FibreKind::WeightedCompleteIntersection;
        out.description = "complete intersection of degrees (" +
                          std::to_string(cfg.d - 1) + "," + std::to_string(cfg.r) +
                          ") in P(1^" + std::to_string(cfg.k + 3) + "," +
                          std::to_string(cfg.r - 1) + ") over P^" +
                          std::to_string(out.base_dim);
    }
    return out;
}

// For r = d > 1 with Pi inside X, the hypersurface degenerates inside a flat
// family whose generic member does not contain Pi. The generic member's
// movable cone is a single nef chamber; the special member's splits in two.
struct DegenerationReport {
    Cone2 central_chamber_1;
    Cone2 central_chamber_2;
    Cone2 generic_chamber;
    std::string note;
};

inline DegenerationReport degeneration_report(const BlowupConfig& cfg) {
    if (!(cfg.r == cfg.d && cfg.d > 1 && cfg.pi_contained))
        throw classification_error(
            errc::not_applicable,
            "degeneration data exists only for r = d > 1 with Pi inside X");
    DegenerationReport out;
    out.central_chamber_1 = Cone2(class_H(), class_rH_minus_E(cfg.r));
    out.central_chamber_2 = Cone2(class_rH_minus_E(cfg.r), class_H_minus_E());
    out.generic_chamber = Cone2(class_H(), class_H_minus_E());
    out.note = "the movable cone of the special fibre splits into two nef "
               "chambers along " + class_rH_minus_E(cfg.r).pretty() +
               "; the generic fibre has a single nef chamber";
    return out;
}

} // namespace mori
