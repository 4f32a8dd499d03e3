#pragma once

// Exact intersection numbers H^{n-i}.E^i on Y, the pseudo-effective threshold
// of E against -K_Y, and the volume polynomial vol(-K_Y - uE) on [0, tau].
// Two center families are supported: a linear P^k (r = 1) and a planar curve
// of degree r = d with Pi not contained in X. Outside these, the volume past
// the nef wall would need intersection data on the modified model, which is
// not available; such configurations are rejected as unsupported.

#include "mori/config.hpp"
#include "mori/errors.hpp"
#include "mori/rational.hpp"

#include <string>
#include <vector>

namespace mori {

enum class CenterFamily { LinearCenter, PlanarCurveREqD };

inline const char* center_family_name(CenterFamily family) {
    switch (family) {
        case CenterFamily::LinearCenter: return "LinearCenter";
        case CenterFamily::PlanarCurveREqD: return "PlanarCurveREqD";
    }
    return "?";
}

struct IntersectionTable {
    CenterFamily family = CenterFamily::LinearCenter;
    std::vector<Rat> values; // values[i] = H^{n-i}.E^i, i = 0..n
};

// Linear center: H^n = d, the middle powers vanish below the codimension, and
//   H^{n-i}.E^i = (-1)^{n-k} (C(i-1, n-k)(d-1) - C(i-1, n-k-1))
// for n-k <= i <= n. Planar curve with r = d: only H^n = d,
// H.E^{n-1} = (-1)^n d and E^n = (-1)^n (n-1) d survive.
inline IntersectionTable intersection_table(const BlowupConfig& cfg) {
    IntersectionTable out;
    const int n = cfg.n, k = cfg.k, d = cfg.d;
    out.values.assign(n + 1, Rat(0));
    out.values[0] = d;
    if (cfg.r == 1) {
        out.family = CenterFamily::LinearCenter;
        int codim = n - k;
        BigInt sign = (codim % 2 == 0) ? 1 : -1;
        for (int i = codim; i <= n; ++i) {
            BigInt value =
                sign * (binomial(i - 1, codim) * (d - 1) - binomial(i - 1, codim - 1));
            out.values[i] = Rat(value);
        }
        return out;
    }
    if (cfg.k == 1 && cfg.r == cfg.d && !cfg.pi_contained) {
        out.family = CenterFamily::PlanarCurveREqD;
        BigInt sign = (n % 2 == 0) ? 1 : -1;
        out.values[n - 1] = Rat(sign * d);
        out.values[n] = Rat(sign * (n - 1) * d);
        return out;
    }
    throw classification_error(
        errc::unsupported_family,
        "intersection data is available for r = 1 or for k = 1, r = d with Pi "
        "not contained in X; got " + cfg.pretty());
}

// Largest u with -K_Y - uE pseudo-effective; equals 3 - d + k in both
// supported families.
inline Rat tau(const BlowupConfig& cfg) {
    intersection_table(cfg); // family gate
    long long t = 3LL - cfg.d + cfg.k;
    if (t <= 0)
        throw classification_error(
            errc::empty_interval,
            "-K_Y - uE is pseudo-effective on no interval: 3-d+k <= 0");
    return Rat(t);
}

struct VolumePolynomial {
    std::vector<Rat> coefficients; // coefficients[j] multiplies u^j
    Rat tau;                       // valid interval is (0, tau)

    Rat value_at_zero() const { return coefficients.empty() ? Rat(0) : coefficients[0]; }
};

// vol(-K_Y - uE) = sum_i C(n,i) (n+2-d)^{n-i} (-1)^i (n-k-1+u)^i H^{n-i}E^i,
// expanded into exact coefficients in u. All coefficients are integers.
inline VolumePolynomial volume_poly(const BlowupConfig& cfg) {
    IntersectionTable table = intersection_table(cfg);
    Rat threshold = tau(cfg);
    const int n = cfg.n;
    const BigInt iota_x = cfg.n + 2 - cfg.d;
    const BigInt m = cfg.n - cfg.k - 1;

    std::vector<BigInt> iota_pow(n + 1), m_pow(n + 1);
    iota_pow[0] = 1;
    m_pow[0] = 1;
    for (int i = 1; i <= n; ++i) {
        iota_pow[i] = iota_pow[i - 1] * iota_x;
        m_pow[i] = m_pow[i - 1] * m;
    }
    // Pascal triangle up to row n, local to this call
    std::vector<std::vector<BigInt>> choose(n + 1);
    for (int i = 0; i <= n; ++i) {
        choose[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j)
            choose[i][j] = choose[i - 1][j - 1] + choose[i - 1][j];
    }

    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    for (int i = 0; i <= n; ++i) {
        if (table.values[i] == 0) continue;
        BigInt c_i = choose[n][i] * iota_pow[n - i] * numerator(table.values[i]);
        if (i % 2 == 1) c_i = -c_i;
        for (int j = 0; j <= i; ++j)
            coeffs[j] += c_i * choose[i][j] * m_pow[i - j];
    }

    VolumePolynomial out;
    out.tau = threshold;
    out.coefficients.reserve(n + 1);
    for (const auto& c : coeffs) out.coefficients.emplace_back(c);
    return out;
}

// Evaluate at u = s/t. Integral coefficients (the constructed case) go
// through a single-division integer pass; anything else falls back to
// rational Horner.
inline Rat poly_eval(const VolumePolynomial& poly, const Rat& u) {
    if (poly.coefficients.empty()) return Rat(0);
    bool integral = true;
    for (const auto& c : poly.coefficients)
        if (denominator(c) != 1) {
            integral = false;
            break;
        }
    if (!integral) {
        Rat acc = 0;
        for (std::size_t j = poly.coefficients.size(); j-- > 0;)
            acc = acc * u + poly.coefficients[j];
        return acc;
    }
    const BigInt s = numerator(u), t = denominator(u);
    const std::size_t deg = poly.coefficients.size() - 1;
    std::vector<BigInt> t_powers(deg + 1);
    t_powers[0] = 1;
    for (std::size_t i = 1; i <= deg; ++i) t_powers[i] = t_powers[i - 1] * t;
    BigInt acc = 0, s_pow = 1;
    for (std::size_t j = 0; j <= deg; ++j) {
        acc += numerator(poly.coefficients[j]) * s_pow * t_powers[deg - j];
        s_pow *= s;
    }
    return Rat(acc, t_powers[deg] * t);
}

// Exact antiderivative difference over [from, to] inside [0, tau].
inline Rat integrate(const VolumePolynomial& poly, const Rat& from, const Rat& to) {
    if (from > to)
        throw classification_error(errc::interval_error, "reversed interval");
    if (from < 0 || to > poly.tau)
        throw classification_error(errc::interval_error,
                                   "interval exceeds the validity range [0, tau]");
    Rat total = 0;
    Rat from_pow = from, to_pow = to;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        total += poly.coefficients[j] * (to_pow - from_pow) / Rat(j + 1);
        from_pow *= from;
        to_pow *= to;
    }
    return total;
}

} // namespace mori
