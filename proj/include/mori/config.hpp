#pragma once

// The blowup configuration: Y is the blowup of a smooth degree-d hypersurface
// X in P^{n+1} along a smooth degree-r hypersurface of a linear subspace
// Pi = P^{k+1}, with a flag recording whether Pi itself lies inside X. Every
// classification in the library is a pure function of this integer tuple.

#include "mori/divisor.hpp"
#include "mori/errors.hpp"

#include <string>

namespace mori {

struct BlowupConfig {
    int n = 0; // dim X
    int d = 0; // deg X
    int k = 0; // dim of the center
    int r = 0; // deg of the center inside Pi
    bool pi_contained = false; // Pi subset of X

    bool operator==(const BlowupConfig&) const = default;

    std::string pretty() const {
        return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) +
               ", k=" + std::to_string(k) + ", r=" + std::to_string(r) +
               (pi_contained ? ", Pi in X)" : ")");
    }
};

// Constraints, in the order they are reported:
//   n >= 3, d >= 1, 1 <= k <= n-2, r >= 1          (RangeError)
//   r > d and d >= 2 requires Pi in X               (ForcedContainment)
//   Pi in X with d >= 2 requires n >= 2k+2          (SmoothnessObstruction)
// For d = 1 the hyperplane X contains the span of the center in standard
// coordinates, so pi_contained is normalised to true instead of checked;
// hyperplanes are also exempt from the n >= 2k+2 bound.
inline BlowupConfig validate(long long n, long long d, long long k, long long r,
                             bool pi_contained) {
    if (n < 3)
        throw classification_error(errc::range_error, "n must be at least 3");
    if (n > 100000 || d > 100000 || k > 100000 || r > 100000)
        throw classification_error(errc::range_error, "parameter out of supported range");
    if (d < 1)
        throw classification_error(errc::range_error, "d must be at least 1");
    if (k < 1)
        throw classification_error(errc::range_error, "k must be at least 1");
    if (k > n - 2)
        throw classification_error(errc::range_error, "k must be at most n-2");
    if (r < 1)
        throw classification_error(errc::range_error, "r must be at least 1");

    if (d == 1) {
        pi_contained = true;
    } else if (r > d && !pi_contained) {
        throw classification_error(
            errc::forced_containment,
            "r > d forces the span of the center to lie inside X");
    }
    if (pi_contained && d >= 2 && n < 2 * k + 2)
        throw classification_error(
            errc::smoothness_obstruction,
            "a smooth X of degree >= 2 containing a linear P^{k+1} needs n >= 2k+2");

    return BlowupConfig{static_cast<int>(n), static_cast<int>(d),
                        static_cast<int>(k), static_cast<int>(r), pi_contained};
}

struct DerivedInvariants {
    int codim = 0;                  // n - k
    int iota_x = 0;                 // n + 2 - d
    int iota_gamma = 0;             // k + 2 - r
    int fibre_canonical_degree = 0; // d - k - 3
    DivisorClass anti_canonical;    // (n+2-d)H - (n-k-1)E

    bool operator==(const DerivedInvariants&) const = default;
};

inline DerivedInvariants derive(const BlowupConfig& cfg) {
    DerivedInvariants out;
    out.codim = cfg.n - cfg.k;
    out.iota_x = cfg.n + 2 - cfg.d;
    out.iota_gamma = cfg.k + 2 - cfg.r;
    out.fibre_canonical_degree = cfg.d - cfg.k - 3;
    out.anti_canonical = DivisorClass(out.iota_x, -(out.codim - 1));
    return out;
}

} // namespace mori
