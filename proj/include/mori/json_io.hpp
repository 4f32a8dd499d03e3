#pragma once

// JSON views of the library outputs. Rationals are serialized as "p/q"
// strings ("/q" elided when q = 1); primitive ray coordinates are small
// integers and appear as JSON numbers.

#include "mori/birational.hpp"
#include "mori/config.hpp"
#include "mori/cones.hpp"
#include "mori/coxring.hpp"
#include "mori/fano.hpp"
#include "mori/numerics.hpp"
#include "mori/stability.hpp"
#include "mori/toric.hpp"

#include <json.hpp>

#include <string>

namespace mori {

using Json = nlohmann::ordered_json;

inline Json ray_to_json(const DivisorClass& ray) {
    DivisorClass p = primitive_ray(ray);
    return Json::array({static_cast<long long>(numerator(p.a)),
                        static_cast<long long>(numerator(p.b))});
}

inline DivisorClass ray_from_json(const Json& json) {
    return DivisorClass(json.at(0).get<long long>(), json.at(1).get<long long>());
}

inline Json cone_to_json(const Cone2& cone) {
    return Json::array({ray_to_json(cone.ray1), ray_to_json(cone.ray2)});
}

inline Cone2 cone_from_json(const Json& json) {
    return Cone2(ray_from_json(json.at(0)), ray_from_json(json.at(1)));
}

inline Json config_to_json(const BlowupConfig& cfg) {
    return Json{{"n", cfg.n},
                {"d", cfg.d},
                {"k", cfg.k},
                {"r", cfg.r},
                {"piContained", cfg.pi_contained}};
}

inline BlowupConfig config_from_json(const Json& json) {
    bool pi = json.value("piContained", false);
    return validate(json.at("n").get<long long>(), json.at("d").get<long long>(),
                    json.at("k").get<long long>(), json.at("r").get<long long>(), pi);
}

inline Json cones_to_json(const BlowupConfig& cfg) {
    ConeSet cones = cone_set(cfg);
    ChamberDecomposition decomposition = mori_chambers(cfg);
    Json chambers = Json::array();
    for (const auto& chamber : decomposition.chambers)
        chambers.push_back(Json{{"cone", cone_to_json(chamber.cone)},
                                {"model", model_tag_name(chamber.model)}});
    Json walls = Json::array();
    for (const auto& wall : decomposition.walls) {
        Json entry{{"ray", ray_to_json(wall.ray)},
                   {"kind", wall_kind_name(wall.kind)}};
        if (wall.sqm) entry["sqmKind"] = sqm_kind_name(*wall.sqm);
        entry["detail"] = wall.detail;
        walls.push_back(entry);
    }
    return Json{{"config", config_to_json(cfg)},
                {"nef", cone_to_json(cones.nef)},
                {"mov", cone_to_json(cones.mov)},
                {"eff", cone_to_json(cones.eff)},
                {"chambers", chambers},
                {"walls", walls}};
}

inline Json sing_to_json(const CyclicQuotientSing& sing) {
    return Json{{"order", sing.order},
                {"onesCount", sing.ones_count},
                {"zerosCount", sing.zeros_count},
                {"type", sing.type_string()},
                {"ambient", sing.ambient},
                {"codimension", sing.codimension},
                {"terminality", terminality_name(sing.terminality)},
                {"detail", sing.detail}};
}

inline Json fibration_to_json(const FibreModel& model) {
    return Json{{"baseDim", model.base_dim},
                {"description", model.description},
                {"fibreCanonical", model.fibre_canonical},
                {"trichotomy", trichotomy_name(model.trichotomy)}};
}

inline Json models_to_json(const BlowupConfig& cfg) {
    Json out{{"config", config_to_json(cfg)}};
    ThetaType type = theta_type(cfg);
    out["thetaType"] = theta_type_name(type);
    if (type == ThetaType::FibrationR1) {
        out["singularities"] = Json::array();
    } else {
        Json sings = Json::array();
        for (const auto& sing : singularity_report(cfg)) sings.push_back(sing_to_json(sing));
        out["singularities"] = sings;
    }
    if (type == ThetaType::Divisorial)
        out["fibration"] = nullptr;
    else
        out["fibration"] = fibration_to_json(fibration_model(cfg));
    if (cfg.r == cfg.d && cfg.d > 1 && cfg.pi_contained) {
        DegenerationReport report = degeneration_report(cfg);
        out["degeneration"] = Json{
            {"centralChambers", Json::array({cone_to_json(report.central_chamber_1),
                                             cone_to_json(report.central_chamber_2)})},
            {"genericChamber", cone_to_json(report.generic_chamber)},
            {"note", report.note}};
    }
    return out;
}

inline Json toric_to_json(int n, int k, int r) {
    ToricPresentation presentation = toric_presentation(n, k, r);
    ConeSet cones = toric_cones(n, k, r);
    ToricPipeline pipeline = toric_pipeline(n, k, r);
    Json variables = Json::array();
    for (const auto& variable : presentation.variables)
        variables.push_back(
            Json{{"name", variable.name}, {"degree", ray_to_json(variable.degree)}});
    Json out{{"n", n},
             {"k", k},
             {"r", r},
             {"variables", variables},
             {"irrelevantT", Json::array({presentation.irrelevant_t.first,
                                          presentation.irrelevant_t.second})},
             {"irrelevantZ", Json::array({presentation.irrelevant_z.first,
                                          presentation.irrelevant_z.second})},
             {"nef", cone_to_json(cones.nef)},
             {"mov", cone_to_json(cones.mov)},
             {"eff", cone_to_json(cones.eff)}};
    Json pipe{{"description", pipeline.description}};
    if (pipeline.bundle_only) {
        pipe["kind"] = "bundle";
    } else {
        pipe["kind"] = "sqmThenBundle";
        pipe["contracted"] = pipeline.contracted;
        pipe["extracted"] = pipeline.extracted;
        pipe["singularity"] = sing_to_json(*pipeline.sing);
    }
    pipe["bundleFibre"] = pipeline.bundle_fibre;
    pipe["bundleBase"] = pipeline.bundle_base;
    out["pipeline"] = pipe;
    return out;
}

inline Json volume_to_json(const BlowupConfig& cfg, bool approx = false) {
    VolumePolynomial poly = volume_poly(cfg);
    Json coeffs = Json::array();
    for (const auto& c : poly.coefficients) coeffs.push_back(rat_to_string(c));
    Json out{{"tau", rat_to_string(poly.tau)},
             {"coeffs", coeffs},
             {"antican_degree", rat_to_string(poly.value_at_zero())}};
    out["family"] = center_family_name(intersection_table(cfg).family);
    if (approx) out["antican_degree_approx"] = rat_to_double(poly.value_at_zero());
    return out;
}

inline Json beta_to_json(const BlowupConfig& cfg, bool approx = false) {
    StabilityReport report = beta_of_E(cfg);
    Json out{{"config", config_to_json(cfg)},
             {"A", rat_to_string(report.a_invariant)},
             {"S", rat_to_string(report.s_invariant)},
             {"beta", rat_to_string(report.beta)},
             {"tau", rat_to_string(report.tau)},
             {"verdict", stability_verdict_name(report.verdict)}};
    if (approx) {
        out["S_approx"] = rat_to_double(report.s_invariant);
        out["beta_approx"] = rat_to_double(report.beta);
    }
    return out;
}

inline Json classify_to_json(int k) {
    Json rows = Json::array();
    for (const auto& row : classify_tables(k)) {
        Json entry{{"r", row.r},
                   {"d", row.d},
                   {"n_min", row.n_min},
                   {"n_max", row.n_max ? Json(*row.n_max) : Json(nullptr)},
                   {"pi_in_x", row.pi_contained},
                   {"fano", row.fano},
                   {"weak_fano", row.weak_fano}};
        entry["sarkisov"] = row.sarkisov ? Json(*row.sarkisov) : Json(nullptr);
        rows.push_back(entry);
    }
    return Json{{"k", k}, {"rows", rows}};
}

inline Json cox_to_json(const BlowupConfig& cfg, const HypersurfaceData& data) {
    IdealGenerators generators = iy_generators(data, cfg);
    auto grading = toric_grading(cfg.n, cfg.k, cfg.r);
    auto f_deg = generators.f_prime.bidegree(grading);
    auto rel_deg = generators.relation.bidegree(grading);
    MPoly f = assemble_hypersurface(data, cfg);
    return Json{
        {"config", config_to_json(cfg)},
        {"fprime", generators.f_prime.to_string()},
        {"relation", generators.relation.to_string()},
        {"grading",
         Json{{"fprime", Json::array({(*f_deg)[0], (*f_deg)[1]})},
              {"relation", Json::array({(*rel_deg)[0], (*rel_deg)[1]})}}},
        {"hypersurface", f.to_string()},
        {"decompositionValid", decomposition_check(f, data, cfg)}};
}

} // namespace mori
