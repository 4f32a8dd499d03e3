#pragma once

// The ambient rank-2 toric variety T: its bigraded Cox ring on the variables
// u, x_0..x_{n+1}, z, the two irrelevant ideals, its cones, and the pipeline
// of birational models it runs through. Degrees in the (H, E) basis:
//   deg u = E, deg x_i = H for i <= k+1, deg x_i = H-E for i >= k+2,
//   deg z = rH-E.

#include "mori/birational.hpp"
#include "mori/cones.hpp"
#include "mori/divisor.hpp"
#include "mori/errors.hpp"

#include <array>
#include <string>
#include <vector>

namespace mori {

struct CoxVariable {
    std::string name;
    DivisorClass degree;
};

struct ToricPresentation {
    int n = 0, k = 0, r = 0;
    std::vector<CoxVariable> variables; // u, x0..x{n+1}, z: n+4 variables
    // Each irrelevant ideal is the intersection of two monomial ideals,
    // stored as the two generator lists.
    std::pair<std::vector<std::string>, std::vector<std::string>> irrelevant_t;
    std::pair<std::vector<std::string>, std::vector<std::string>> irrelevant_z;
};

inline void check_toric_range(long long n, long long k, long long r) {
    if (n < 3) throw classification_error(errc::range_error, "n must be at least 3");
    if (k < 1 || k > n - 2)
        throw classification_error(errc::range_error, "k must satisfy 1 <= k <= n-2");
    if (r < 1) throw classification_error(errc::range_error, "r must be at least 1");
}

inline std::vector<std::string> cox_variable_names(int n) {
    std::vector<std::string> names;
    names.reserve(n + 4);
    names.push_back("u");
    for (int i = 0; i <= n + 1; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("z");
    return names;
}

// Bidegrees (H, E) of the Cox variables, in the same order as the names.
inline std::vector<std::array<int, 2>> toric_grading(int n, int k, int r) {
    check_toric_range(n, k, r);
    std::vector<std::array<int, 2>> grading;
    grading.reserve(n + 4);
    grading.push_back({0, 1}); // u
    for (int i = 0; i <= n + 1; ++i) {
        if (i <= k + 1)
            grading.push_back({1, 0});
        else
            grading.push_back({1, -1});
    }
    grading.push_back({r, -1}); // z
    return grading;
}

inline ToricPresentation toric_presentation(int n, int k, int r) {
    check_toric_range(n, k, r);
    ToricPresentation out;
    out.n = n;
    out.k = k;
    out.r = r;
    auto names = cox_variable_names(n);
    auto grading = toric_grading(n, k, r);
    for (std::size_t i = 0; i < names.size(); ++i)
        out.variables.push_back(
            {names[i], DivisorClass(grading[i][0], grading[i][1])});

    std::vector<std::string> low = {"u"};
    std::vector<std::string> high;
    for (int i = 0; i <= k + 1; ++i) low.push_back("x" + std::to_string(i));
    for (int i = k + 2; i <= n + 1; ++i) high.push_back("x" + std::to_string(i));

    out.irrelevant_t.first = low;
    out.irrelevant_t.second = high;
    out.irrelevant_t.second.insert(out.irrelevant_t.second.begin(), "z");

    out.irrelevant_z.first = low;
    out.irrelevant_z.first.push_back("z");
    out.irrelevant_z.second = high;
    return out;
}

inline ConeSet toric_cones(int n, int k, int r) {
    check_toric_range(n, k, r);
    ConeSet out;
    out.nef = Cone2(class_H(), class_rH_minus_E(r));
    out.mov = Cone2(class_H(), class_H_minus_E());
    out.eff = Cone2(class_E(), class_H_minus_E());
    return out;
}

struct ToricPipeline {
    int n = 0, k = 0, r = 0;
    bool bundle_only = false;       // r = 1: a single projective bundle
    std::string contracted;         // locus contracted by the modification
    std::string extracted;          // locus extracted on the far side
    std::optional<CyclicQuotientSing> sing;
    std::string bundle_fibre;
    std::string bundle_base;
    std::string description;
};

inline ToricPipeline toric_pipeline(int n, int k, int r) {
    check_toric_range(n, k, r);
    ToricPipeline out;
    out.n = n;
    out.k = k;
    out.r = r;
    if (r == 1) {
        out.bundle_only = true;
        out.bundle_fibre = "P^" + std::to_string(k + 2);
        out.bundle_base = "P^" + std::to_string(n - k);
        out.description = out.bundle_fibre + "-bundle over " + out.bundle_base;
        return out;
    }
    out.bundle_only = false;
    out.contracted = "P(1^" + std::to_string(k + 2) + "," + std::to_string(r) + ")";
    out.extracted = "P^" + std::to_string(n - k - 1);
    CyclicQuotientSing sing;
    sing.order = r - 1;
    sing.ones_count = k + 3;
    sing.zeros_count = n - k - 1;
    sing.ambient = "locus in T'";
    sing.codimension = k + 3;
    sing.terminality = quotient_terminality(sing.order, sing.ones_count);
    sing.detail = "cyclic quotient along the extracted " + out.extracted + " in T'";
    out.sing = sing;
    out.bundle_fibre = "P(1^" + std::to_string(k + 3) + "," + std::to_string(r - 1) + ")";
    out.bundle_base = "P^" + std::to_string(n - k - 1);
    out.description = "small modification contracting " + out.contracted +
                      " and extracting " + out.extracted + ", then a " +
                      out.bundle_fibre + "-bundle over " + out.bundle_base;
    return out;
}

// Number of Cox monomials of bidegree aH + bE, computed from the grading: a
// monomial u^alpha x_low^beta x_high^gamma z^delta has bidegree
// (|beta| + |gamma| + r*delta, alpha - |gamma| - delta), so for each choice of
// delta and s = |gamma| the remaining degrees are determined and the low/high
// blocks contribute a product of composition counts.
inline BigInt count_sections(int n, int k, int r, long long a, long long b) {
    check_toric_range(n, k, r);
    BigInt total = 0;
    if (a < 0) return total;
    for (long long delta = 0; r * delta <= a; ++delta) {
        for (long long s = 0; s + r * delta <= a; ++s) {
            long long p = a - s - r * delta;   // degree in x_0..x_{k+1}
            long long alpha = b + s + delta;   // exponent of u
            if (alpha < 0) continue;
            total += binomial(p + k + 1, k + 1) * binomial(s + n - k - 1, n - k - 1);
        }
    }
    return total;
}

// Explicit monomial support of bidegree aH + bE as exponent vectors in the
// order u, x0..x{n+1}, z. Counts grow combinatorially with a; callers are
// expected to keep a small.
inline std::vector<std::vector<int>> section_monomials(int n, int k, int r,
                                                       long long a, long long b) {
    check_toric_range(n, k, r);
    std::vector<std::vector<int>> out;
    if (a < 0) return out;
    int low_count = k + 2, high_count = n - k;

    // enumerate compositions of total into `slots` nonnegative parts
    auto compositions = [](long long total, int slots) {
        std::vector<std::vector<int>> result;
        std::vector<int> current(slots, 0);
        auto rec = [&](auto&& self, int pos, long long remaining) -> void {
            if (pos == slots - 1) {
                current[pos] = static_cast<int>(remaining);
                result.push_back(current);
                return;
            }
            for (long long v = 0; v <= remaining; ++v) {
                current[pos] = static_cast<int>(v);
                self(self, pos + 1, remaining - v);
            }
        };
        if (slots == 0) {
            if (total == 0) result.push_back({});
            return result;
        }
        rec(rec, 0, total);
        return result;
    };

    for (long long delta = 0; r * delta <= a; ++delta) {
        for (long long s = 0; s + r * delta <= a; ++s) {
            long long p = a - s - r * delta;
            long long alpha = b + s + delta;
            if (alpha < 0) continue;
            for (const auto& beta : compositions(p, low_count)) {
                for (const auto& gamma : compositions(s, high_count)) {
                    std::vector<int> exps;
                    exps.reserve(n + 4);
                    exps.push_back(static_cast<int>(alpha));
                    exps.insert(exps.end(), beta.begin(), beta.end());
                    exps.insert(exps.end(), gamma.begin(), gamma.end());
                    exps.push_back(static_cast<int>(delta));
                    out.push_back(std::move(exps));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string monomial_string(const std::vector<std::string>& names,
                                   const std::vector<int>& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace mori
