#pragma once

// Construction and verification of the defining ideal of Y inside the Cox
// ring C[u, x_0..x_{n+1}, z]. The input is a decomposition of the degree-d
// hypersurface as f = x_{k+2}F_{k+2} + ... + x_{n+1}F_{n+1} + h*g with h the
// degree-r equation of the center and g of degree d-r (zero exactly when Pi
// lies inside X). The ideal is generated by
//   f' = x_{k+2}F'_{k+2} + ... + x_{n+1}F'_{n+1} + z*g   and   z*u - h,
// where F' substitutes x_j -> u*x_j for j >= k+2 and z -> u*z.

#include "mori/config.hpp"
#include "mori/errors.hpp"
#include "mori/mpoly.hpp"
#include "mori/toric.hpp"

#include <map>
#include <string>
#include <vector>

namespace mori {

struct HypersurfaceData {
    MPoly h;              // degree r in x_0..x_{k+1}
    std::vector<MPoly> F; // F_{k+2}..F_{n+1}, each of degree d-1 (or zero)
    MPoly g;              // degree d-r in x_0..x_{k+1}; zero iff Pi in X
};

namespace detail {

inline std::size_t u_index() { return 0; }
inline std::size_t x_index(int i) { return static_cast<std::size_t>(i) + 1; }
inline std::size_t z_index(int n) { return static_cast<std::size_t>(n) + 3; }

inline bool uses_only(const MPoly& poly, std::size_t lo, std::size_t hi) {
    for (const auto& [exps, c] : poly.terms())
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0 && (i < lo || i > hi)) return false;
    return true;
}

} // namespace detail

inline void check_hypersurface_data(const HypersurfaceData& data,
                                    const BlowupConfig& cfg) {
    const auto vars = cox_variable_names(cfg.n);
    const std::size_t low_lo = detail::x_index(0);
    const std::size_t low_hi = detail::x_index(cfg.k + 1);
    const std::size_t x_hi = detail::x_index(cfg.n + 1);

    auto expect_vars = [&](const MPoly& poly, const char* what) {
        if (poly.variables() != vars)
            throw classification_error(errc::arity_mismatch,
                                       std::string(what) +
                                           " must live in the Cox variable list "
                                           "u, x0..x" + std::to_string(cfg.n + 1) + ", z");
    };

    expect_vars(data.h, "h");
    if (data.h.is_zero())
        throw classification_error(errc::decomposition_invalid, "h must be nonzero");
    if (!detail::uses_only(data.h, low_lo, low_hi))
        throw classification_error(errc::decomposition_invalid,
                                   "h may involve x0..x" + std::to_string(cfg.k + 1) +
                                       " only");
    if (!data.h.is_homogeneous() || data.h.total_degree() != cfg.r)
        throw classification_error(errc::decomposition_invalid,
                                   "h must be homogeneous of degree r = " +
                                       std::to_string(cfg.r));

    expect_vars(data.g, "g");
    if (cfg.r > cfg.d && !data.g.is_zero())
        throw classification_error(errc::decomposition_invalid,
                                   "g must be zero when r > d");
    if (!data.g.is_zero()) {
        if (!detail::uses_only(data.g, low_lo, low_hi))
            throw classification_error(errc::decomposition_invalid,
                                       "g may involve x0..x" + std::to_string(cfg.k + 1) +
                                           " only");
        if (!data.g.is_homogeneous() || data.g.total_degree() != cfg.d - cfg.r)
            throw classification_error(errc::decomposition_invalid,
                                       "g must be homogeneous of degree d-r = " +
                                           std::to_string(cfg.d - cfg.r));
    }
    if (cfg.pi_contained != data.g.is_zero())
        throw classification_error(
            errc::decomposition_invalid,
            "Pi lies inside X exactly when g vanishes identically");

    if (data.F.size() != static_cast<std::size_t>(cfg.n - cfg.k))
        throw classification_error(errc::decomposition_invalid,
                                   "expected " + std::to_string(cfg.n - cfg.k) +
                                       " polynomials F_j (j = k+2..n+1)");
    bool any_f = false;
    for (const auto& F : data.F) {
        expect_vars(F, "F_j");
        if (F.is_zero()) continue;
        any_f = true;
        if (!detail::uses_only(F, low_lo, x_hi))
            throw classification_error(errc::decomposition_invalid,
                                       "F_j may involve x0..x" +
                                           std::to_string(cfg.n + 1) + " only");
        if (!F.is_homogeneous() || F.total_degree() != cfg.d - 1)
            throw classification_error(errc::decomposition_invalid,
                                       "F_j must be homogeneous of degree d-1 = " +
                                           std::to_string(cfg.d - 1));
    }
    if (!any_f && data.g.is_zero())
        throw classification_error(errc::decomposition_invalid,
                                   "the decomposition describes the zero polynomial");
}

// f = sum_j x_j F_j + h*g from the decomposition pieces.
inline MPoly assemble_hypersurface(const HypersurfaceData& data,
                                   const BlowupConfig& cfg) {
    const auto vars = cox_variable_names(cfg.n);
    MPoly f(vars);
    for (int j = cfg.k + 2; j <= cfg.n + 1; ++j) {
        const MPoly& F = data.F[static_cast<std::size_t>(j - cfg.k - 2)];
        if (F.is_zero()) continue;
        f += MPoly::variable(vars, detail::x_index(j)) * F;
    }
    if (!data.g.is_zero()) f += data.h * data.g;
    return f;
}

// x_j -> u*x_j for j >= k+2 and z -> u*z; the low block is untouched. On a
// monomial this only raises the u exponent by the substituted total degree.
inline MPoly prime_transform(const MPoly& poly, const BlowupConfig& cfg) {
    const auto vars = cox_variable_names(cfg.n);
    if (poly.variables() != vars)
        throw classification_error(errc::arity_mismatch,
                                   "input must live in u, x0..x" +
                                       std::to_string(cfg.n + 1) + ", z");
    const std::size_t u = detail::u_index();
    const std::size_t first_high = detail::x_index(cfg.k + 2);
    const std::size_t z = detail::z_index(cfg.n);
    MPoly out(vars);
    for (const auto& [exps, c] : poly.terms()) {
        if (exps[u] != 0)
            throw classification_error(errc::arity_mismatch,
                                       "input may not already involve u");
        std::vector<int> shifted = exps;
        int substituted = exps[z];
        for (std::size_t i = first_high; i <= z - 1; ++i) substituted += exps[i];
        shifted[u] = substituted;
        out += MPoly::monomial(vars, shifted, c);
    }
    return out;
}

struct IdealGenerators {
    MPoly f_prime;  // bidegree (d, -1)
    MPoly relation; // z*u - h, bidegree (r, 0)
};

inline IdealGenerators iy_generators(const HypersurfaceData& data,
                                     const BlowupConfig& cfg) {
    check_hypersurface_data(data, cfg);
    const auto vars = cox_variable_names(cfg.n);

    IdealGenerators out;
    out.f_prime = MPoly(vars);
    for (int j = cfg.k + 2; j <= cfg.n + 1; ++j) {
        const MPoly& F = data.F[static_cast<std::size_t>(j - cfg.k - 2)];
        if (F.is_zero()) continue;
        out.f_prime += MPoly::variable(vars, detail::x_index(j)) * prime_transform(F, cfg);
    }
    if (!data.g.is_zero())
        out.f_prime += MPoly::variable(vars, detail::z_index(cfg.n)) * data.g;
    out.relation = MPoly::variable(vars, detail::z_index(cfg.n)) *
                       MPoly::variable(vars, detail::u_index()) -
                   data.h;

    auto grading = toric_grading(cfg.n, cfg.k, cfg.r);
    auto f_deg = out.f_prime.bidegree(grading);
    auto rel_deg = out.relation.bidegree(grading);
    if (!f_deg || (*f_deg)[0] != cfg.d || (*f_deg)[1] != -1)
        throw classification_error(errc::decomposition_invalid,
                                   "f' is not bihomogeneous of bidegree (d, -1)");
    if (!rel_deg || (*rel_deg)[0] != cfg.r || (*rel_deg)[1] != 0)
        throw classification_error(errc::decomposition_invalid,
                                   "zu - h is not bihomogeneous of bidegree (r, 0)");
    return out;
}

// True iff f equals the assembled decomposition exactly.
inline bool decomposition_check(const MPoly& f, const HypersurfaceData& data,
                                const BlowupConfig& cfg) {
    check_hypersurface_data(data, cfg);
    return f == assemble_hypersurface(data, cfg);
}

enum class WitnessResult { OnVarietyAndSmoothAt, OnVarietySingularAt, NotOnVariety };

inline const char* witness_result_name(WitnessResult result) {
    switch (result) {
        case WitnessResult::OnVarietyAndSmoothAt: return "OnVarietyAndSmoothAt";
        case WitnessResult::OnVarietySingularAt: return "OnVarietySingularAt";
        case WitnessResult::NotOnVariety: return "NotOnVariety";
    }
    return "?";
}

// Evaluates the polynomial and its gradient at a supplied witness point.
inline WitnessResult jacobian_witness_check(const MPoly& poly,
                                            const std::vector<Rat>& point) {
    if (point.size() != poly.variables().size())
        throw classification_error(errc::arity_mismatch, "witness arity mismatch");
    bool all_zero = true;
    for (const auto& c : point)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (all_zero)
        throw classification_error(errc::range_error,
                                   "witness point must not be the origin");
    if (poly.evaluate(point) != 0) return WitnessResult::NotOnVariety;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (poly.derivative(i).evaluate(point) != 0)
            return WitnessResult::OnVarietyAndSmoothAt;
    return WitnessResult::OnVarietySingularAt;
}

} // namespace mori
