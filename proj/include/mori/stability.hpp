#pragma once

// Divisorial stability data along the exceptional divisor E: the expected
// vanishing order S(E) as an exact rational, the beta invariant 1 - S, the
// closed-form instability inequalities for the two curve families, and the
// exhaustive linear-center sweep with its dual-route consistency check.
//
// Verdicts are "along E" only: they decide beta(E), not stability against
// every prime divisor.

#include "mori/config.hpp"
#include "mori/errors.hpp"
#include "mori/fano.hpp"
#include "mori/numerics.hpp"
#include "mori/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace mori {

enum class StabilityVerdict { StableAlongE, SemistableBoundary, UnstableAlongE };

inline const char* stability_verdict_name(StabilityVerdict verdict) {
    switch (verdict) {
        case StabilityVerdict::StableAlongE: return "StableAlongE";
        case StabilityVerdict::SemistableBoundary: return "SemistableBoundary";
        case StabilityVerdict::UnstableAlongE: return "UnstableAlongE";
    }
    return "?";
}

struct StabilityReport {
    Rat a_invariant; // log discrepancy of E on Y itself: always 1
    Rat s_invariant;
    Rat beta; // 1 - S
    Rat tau;
    StabilityVerdict verdict = StabilityVerdict::StableAlongE;
};

// S(E) = integral of vol(-K_Y - uE) over [0, tau] divided by (-K_Y)^n.
// E is a prime divisor on Y and the invariant is computed on Y itself, so
// A(E) = 1 and beta(E) = 1 - S(E).
inline StabilityReport beta_of_E(const BlowupConfig& cfg) {
    intersection_table(cfg); // family gate
    if (!is_fano(cfg).is_fano)
        throw classification_error(errc::not_fano,
                                   "beta is computed for Fano Y only; got " +
                                       cfg.pretty());
    VolumePolynomial poly = volume_poly(cfg);
    StabilityReport out;
    out.a_invariant = 1;
    out.tau = poly.tau;
    out.s_invariant = integrate(poly, Rat(0), poly.tau) / poly.value_at_zero();
    out.beta = 1 - out.s_invariant;
    if (out.beta > 0)
        out.verdict = StabilityVerdict::StableAlongE;
    else if (out.beta == 0)
        out.verdict = StabilityVerdict::SemistableBoundary;
    else
        out.verdict = StabilityVerdict::UnstableAlongE;
    return out;
}

// Line in a degree-d hypersurface (k = 1, r = 1, d in {1,2,3}): Y is
// unstable along E iff
//   ((n-2)/(n+2-d))^{n-1} > (d-1)(n(d-1)-2)(n+2-d) / (9n^2-(5d+4)n+4(d-1)),
// trivially true for d = 1.
inline bool line_case_closed_form(long long n, long long d) {
    if (n < 3 || d < 1 || d > 3)
        throw classification_error(errc::range_error,
                                   "line case needs n >= 3 and d in {1,2,3}");
    if (d == 1) return true;
    Rat lhs = rat_pow(Rat(n - 2, n + 2 - d), static_cast<unsigned long long>(n - 1));
    BigInt num = BigInt(d - 1) * (n * (d - 1) - 2) * (n + 2 - d);
    BigInt den = 9 * BigInt(n) * n - (5 * d + 4) * n + 4 * (d - 1);
    return lhs > Rat(num, den);
}

// Planar curve of degree r = d in {2,3} with Pi not contained in X: Y is
// stable along E iff
//   ((n+2-d)/(n-2))^{n-1} > (11n+2-2(n+1)d) / ((n+2-d)(d-1)).
inline bool planar_case_closed_form(long long n, long long d) {
    if (n < 3 || d < 2 || d > 3)
        throw classification_error(errc::range_error,
                                   "planar case needs n >= 3 and d in {2,3}");
    Rat lhs = rat_pow(Rat(n + 2 - d, n - 2), static_cast<unsigned long long>(n - 1));
    BigInt num = 11 * BigInt(n) + 2 - 2 * (n + 1) * d;
    BigInt den = BigInt(n + 2 - d) * (d - 1);
    return lhs > Rat(num, den);
}

enum class PqVariant { I, II };

struct PqRow {
    long long n = 0;
    Rat p;
    Rat q;
};

// The comparison profiles behind the two closed forms. Variant I (lines):
// p_d(n) = ((n-2)/(n+2-d))^{n-1}; variant II (planar r = d) inverts the base.
inline std::vector<PqRow> pq_profiles(PqVariant variant, long long d,
                                      long long n_min, long long n_max) {
    if (d < 2 || d > 3)
        throw classification_error(errc::range_error, "profiles are defined for d in {2,3}");
    if (n_min < 3 || n_max < n_min)
        throw classification_error(errc::range_error, "need 3 <= n_min <= n_max");
    std::vector<PqRow> rows;
    for (long long n = n_min; n <= n_max; ++n) {
        PqRow row;
        row.n = n;
        if (variant == PqVariant::I) {
            row.p = rat_pow(Rat(n - 2, n + 2 - d), static_cast<unsigned long long>(n - 1));
            row.q = Rat(BigInt(d - 1) * (n * (d - 1) - 2) * (n + 2 - d),
                        9 * BigInt(n) * n - (5 * d + 4) * n + 4 * (d - 1));
        } else {
            row.p = rat_pow(Rat(n + 2 - d, n - 2), static_cast<unsigned long long>(n - 1));
            row.q = Rat(11 * BigInt(n) + 2 - 2 * (n + 1) * d,
                        BigInt(n + 2 - d) * (d - 1));
        }
        rows.push_back(row);
    }
    return rows;
}

// Instability test for a linear center written directly from the
// intersection numbers, without going through the volume polynomial:
//   A^n d (2-d+k)
//   + A^{n+1} sum_i C(n,i) s_i M_i / (i+1)
//   - sum_i C(n,i) A^{n-i} s_i m^{i+1} M_i / (i+1)
//   - sum_i C(n,i) A^{n-i} s_i m^i M_i  >  0
// with A = n+2-d, m = n-k-1, s_i = (-1)^{n-k+i} and
// M_i = C(i-1, n-k)(d-1) - C(i-1, n-k-1), summed over n-k <= i <= n.
inline bool linear_center_closed_form(long long n, long long d, long long k) {
    const BigInt A = n + 2 - d;
    const BigInt m = n - k - 1;
    const long long codim = n - k;
    std::vector<BigInt> A_pow(n + 2), m_pow(n + 2);
    A_pow[0] = 1;
    m_pow[0] = 1;
    for (long long i = 1; i <= n + 1; ++i) {
        A_pow[i] = A_pow[i - 1] * A;
        m_pow[i] = m_pow[i - 1] * m;
    }
    Rat total = Rat(A_pow[n] * d * (2 - d + k));
    for (long long i = codim; i <= n; ++i) {
        BigInt M = binomial(i - 1, codim) * (d - 1) - binomial(i - 1, codim - 1);
        if (M == 0) continue;
        BigInt sign = ((codim + i) % 2 == 0) ? 1 : -1;
        BigInt base = binomial(n, i) * sign * M;
        total += Rat(A_pow[n + 1] * base, BigInt(i + 1));
        total -= Rat(A_pow[n - i] * m_pow[i + 1] * base, BigInt(i + 1));
        total -= Rat(A_pow[n - i] * m_pow[i] * base);
    }
    return total > 0;
}

// Floating spot check of the same sum for dimensions beyond comfortable
// exact-arithmetic reach (n up to about 1000). Runs at 100 significant
// digits, widens the result by a roundoff interval plus a relative budget of
// 1e-12, and declines to answer when the interval straddles zero. Exact
// arithmetic stays authoritative; this is never used for acceptance.
inline std::optional<bool> linear_center_closed_form_float(long long n, long long d,
                                                           long long k) {
    using Float = boost::multiprecision::cpp_bin_float_100;
    const Float A = n + 2 - d;
    const Float m = n - k - 1;
    const long long codim = n - k;
    std::vector<Float> A_pow(static_cast<std::size_t>(n) + 2),
        m_pow(static_cast<std::size_t>(n) + 2);
    A_pow[0] = 1;
    m_pow[0] = 1;
    for (long long i = 1; i <= n + 1; ++i) {
        A_pow[static_cast<std::size_t>(i)] = A_pow[static_cast<std::size_t>(i - 1)] * A;
        m_pow[static_cast<std::size_t>(i)] = m_pow[static_cast<std::size_t>(i - 1)] * m;
    }
    Float total = A_pow[static_cast<std::size_t>(n)] * Float(d) * Float(2 - d + k);
    Float magnitude = abs(total);
    auto accumulate = [&total, &magnitude](const Float& term) {
        total += term;
        magnitude = std::max(magnitude, abs(term));
    };
    for (long long i = codim; i <= n; ++i) {
        BigInt M = binomial(i - 1, codim) * (d - 1) - binomial(i - 1, codim - 1);
        if (M == 0) continue;
        BigInt signed_base = binomial(n, i) * M;
        if ((codim + i) % 2 == 1) signed_base = -signed_base;
        Float base(signed_base);
        accumulate(A_pow[static_cast<std::size_t>(n + 1)] * base / Float(i + 1));
        accumulate(-A_pow[static_cast<std::size_t>(n - i)] *
                   m_pow[static_cast<std::size_t>(i + 1)] * base / Float(i + 1));
        accumulate(-A_pow[static_cast<std::size_t>(n - i)] *
                   m_pow[static_cast<std::size_t>(i)] * base);
    }
    Float eps("1e-95");
    Float error = magnitude * eps * Float(3 * (n + 1)) + abs(total) * Float("1e-12");
    if (abs(total) <= error) return std::nullopt;
    return total > 0;
}

// Both routes to the same verdict: direct exact integration of the volume
// polynomial and the closed-form sum above.
struct InstabilityPair {
    bool direct = false;
    bool closed_form = false;
    Rat s_invariant;
};

inline InstabilityPair linear_center_instability(const BlowupConfig& cfg) {
    if (cfg.r != 1)
        throw classification_error(errc::unsupported_family,
                                   "linear-center test needs r = 1");
    StabilityReport report = beta_of_E(cfg); // throws NotFano when not Fano
    InstabilityPair out;
    out.s_invariant = report.s_invariant;
    out.direct = report.s_invariant > 1;
    out.closed_form = linear_center_closed_form(cfg.n, cfg.d, cfg.k);
    return out;
}

struct SweepRecord {
    int n = 0, d = 0, k = 0;
    Rat s_invariant;
    bool unstable = false;
    bool closed_form_agrees = false;
};

struct SweepSummary {
    std::size_t total = 0;
    std::size_t unstable_count = 0;
    std::size_t disagreements = 0;
};

struct SweepResult {
    std::vector<SweepRecord> records; // sorted by (n, d, k)
    SweepSummary summary;
};

// Enumerates all linear-center configurations with k >= k_factor * d and
// k+2 <= n <= n_max, and records for each the exact S(E), the sign verdict,
// and whether the closed-form route agrees. Records are independent; with
// jobs > 1 they are distributed over worker threads and the output order is
// the same as the serial one.
inline SweepResult sweep(int n_max, int k_factor = 3, int jobs = 1,
                         const std::function<void(std::size_t, std::size_t)>& progress = {}) {
    if (n_max < 5)
        throw classification_error(errc::range_error, "sweep needs n_max >= 5");
    if (k_factor < 1)
        throw classification_error(errc::range_error, "k_factor must be positive");

    std::vector<std::array<int, 3>> tuples;
    for (int n = 5; n <= n_max; ++n)
        for (int d = 1; k_factor * d <= n - 2; ++d)
            for (int k = k_factor * d; k <= n - 2; ++k)
                tuples.push_back({n, d, k});

    SweepResult out;
    out.records.resize(tuples.size());

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    auto worker = [&]() {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= tuples.size()) break;
            auto [n, d, k] = tuples[index];
            BlowupConfig cfg = validate(n, d, k, 1, false);
            SweepRecord record;
            record.n = n;
            record.d = d;
            record.k = k;
            StabilityReport report = beta_of_E(cfg);
            record.s_invariant = report.s_invariant;
            record.unstable = report.s_invariant > 1;
            record.closed_form_agrees =
                linear_center_closed_form(n, d, k) == record.unstable;
            out.records[index] = std::move(record);
            std::size_t finished = done.fetch_add(1) + 1;
            if (progress) progress(finished, tuples.size());
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    out.summary.total = out.records.size();
    for (const auto& record : out.records) {
        if (record.unstable) ++out.summary.unstable_count;
        if (!record.closed_form_agrees) ++out.summary.disagreements;
    }
    return out;
}

inline std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "n,d,k,S_num,S_den,unstable,closed_form_agrees\n";
    for (const auto& record : result.records) {
        out << record.n << "," << record.d << "," << record.k << ","
            << numerator(record.s_invariant).str() << ","
            << denominator(record.s_invariant).str() << ","
            << (record.unstable ? "true" : "false") << ","
            << (record.closed_form_agrees ? "true" : "false") << "\n";
    }
    return out.str();
}

} // namespace mori
