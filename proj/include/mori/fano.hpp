#pragma once

// Fano / weak-Fano / big-anticanonical verdicts, the Sarkisov-link criterion
// for blowups of projective space, and the curated classification tables for
// centers of dimension 1 and 2.

#include "mori/config.hpp"
#include "mori/errors.hpp"
#include "mori/rational.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mori {

enum class FanoBranch { CaseRdEqualsD, CaseGeneral, NotFano };

inline const char* fano_branch_name(FanoBranch branch) {
    switch (branch) {
        case FanoBranch::CaseRdEqualsD: return "CaseRdEqualsD";
        case FanoBranch::CaseGeneral: return "CaseGeneral";
        case FanoBranch::NotFano: return "NotFano";
    }
    return "?";
}

struct FanoVerdict {
    bool is_fano = false;
    FanoBranch branch = FanoBranch::NotFano;
    bool is_weak_fano = false;
    bool anticanonical_big = false;
    // (n-k-1)/(n+2-d); undefined when d = n+2
    std::optional<Rat> inequality_witness;
};

// -K_Y is big iff codim - 1 < iota_X. Integer comparison, valid for all d.
inline bool anticanonical_big(const BlowupConfig& cfg) {
    return cfg.n - cfg.k - 1 < cfg.n + 2 - cfg.d;
}

// -K_Y = (n+2-d)H - (n-k-1)E is ample iff it lies in the interior of Nef(Y).
// Against the nef generators this reads n-k-1 < n+2-d when r = d and Pi is
// not contained in X, and r(n-k-1) < n+2-d otherwise; weak Fano relaxes the
// nef inequality to non-strict but still requires -K_Y big.
inline FanoVerdict is_fano(const BlowupConfig& cfg) {
    FanoVerdict out;
    long long lhs, rhs = cfg.n + 2 - cfg.d;
    bool rd_branch = (cfg.r == cfg.d && !cfg.pi_contained);
    if (rd_branch)
        lhs = cfg.n - cfg.k - 1;
    else
        lhs = static_cast<long long>(cfg.r) * (cfg.n - cfg.k - 1);

    out.anticanonical_big = anticanonical_big(cfg);
    out.is_fano = lhs < rhs;
    out.is_weak_fano = (lhs <= rhs) && out.anticanonical_big;
    out.branch = out.is_fano
                     ? (rd_branch ? FanoBranch::CaseRdEqualsD : FanoBranch::CaseGeneral)
                     : FanoBranch::NotFano;
    if (rhs != 0)
        out.inequality_witness = make_rat(cfg.n - cfg.k - 1, rhs);
    return out;
}

// For X = P^n: the blowup starts a Sarkisov link iff -K of the center is nef
// and, when the center has codimension more than 2, its dimension is >= 2.
inline bool sarkisov_link(const BlowupConfig& cfg) {
    if (cfg.d != 1)
        throw classification_error(errc::not_applicable,
                                   "the Sarkisov criterion applies to d = 1 only");
    if (cfg.k + 2 - cfg.r < 0) return false;
    if (cfg.n - cfg.k > 2 && cfg.k < 2) return false;
    return true;
}

// Genus of a smooth plane curve of degree r.
inline long long planar_genus(long long r) {
    if (r < 1)
        throw classification_error(errc::range_error, "degree must be positive");
    return (r - 1) * (r - 2) / 2;
}

struct ClassifyRow {
    int r = 0, d = 0;
    int n_min = 0;
    std::optional<int> n_max; // absent: unbounded
    bool pi_contained = false;
    bool fano = true;
    bool weak_fano = true;
    std::optional<bool> sarkisov; // defined for d = 1 only
};

// All (r, d, pi, n-range) with the given center dimension k for which Y is
// Fano, as maximal n-intervals on which the Sarkisov flag is constant.
// Sorted by (r, d, n_min, pi). The Fano condition bounds r and d by k+2.
inline std::vector<ClassifyRow> classify_tables(int k) {
    if (k < 1)
        throw classification_error(errc::range_error, "k must be at least 1");
    std::vector<ClassifyRow> rows;
    for (int r = 1; r <= k + 3; ++r) {
        for (int d = 1; d <= k + 3; ++d) {
            for (int pi = 0; pi <= 1; ++pi) {
                bool pi_contained = pi == 1;
                if (d == 1 && !pi_contained) continue; // normalised away
                if (r > d && !pi_contained) continue;  // invalid
                int n_lo = k + 2;
                if (pi_contained && d >= 2) n_lo = std::max(n_lo, 2 * k + 2);

                // Fano range in n for this (r, d, pi)
                std::optional<int> n_hi; // absent: unbounded
                if (r == d && !pi_contained) {
                    if (!(d < k + 3)) continue;
                } else if (r == 1) {
                    if (!(d < k + 3)) continue;
                } else {
                    long long bound = static_cast<long long>(r) * (k + 1) + 2 - d;
                    // n(r-1) < bound
                    long long hi = (bound - 1) / (r - 1);
                    if (hi < n_lo) continue;
                    n_hi = static_cast<int>(hi);
                }

                auto make_row = [&](int lo, std::optional<int> hi) {
                    ClassifyRow row;
                    row.r = r;
                    row.d = d;
                    row.n_min = lo;
                    row.n_max = hi;
                    row.pi_contained = pi_contained;
                    row.fano = true;
                    row.weak_fano = true;
                    if (d == 1)
                        row.sarkisov =
                            sarkisov_link(BlowupConfig{lo, d, k, r, pi_contained});
                    rows.push_back(row);
                };

                if (d == 1) {
                    // the Sarkisov flag can only change between n = k+2
                    // (codimension 2) and n > k+2
                    bool at_codim2 = sarkisov_link(BlowupConfig{n_lo, d, k, r, true});
                    bool beyond =
                        sarkisov_link(BlowupConfig{n_lo + 1, d, k, r, true});
                    bool splits = n_lo == k + 2 && at_codim2 != beyond &&
                                  (!n_hi || *n_hi > n_lo);
                    if (splits) {
                        make_row(n_lo, n_lo);
                        make_row(n_lo + 1, n_hi);
                    } else {
                        make_row(n_lo, n_hi);
                    }
                } else {
                    make_row(n_lo, n_hi);
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ClassifyRow& x, const ClassifyRow& y) {
        if (x.r != y.r) return x.r < y.r;
        if (x.d != y.d) return x.d < y.d;
        if (x.n_min != y.n_min) return x.n_min < y.n_min;
        return x.pi_contained < y.pi_contained;
    });
    return rows;
}

inline std::string classify_csv(int k) {
    std::ostringstream out;
    out << "r,d,n_min,n_max,pi_in_x,fano,weak_fano,sarkisov\n";
    for (const auto& row : classify_tables(k)) {
        out << row.r << "," << row.d << "," << row.n_min << ",";
        if (row.n_max)
            out << *row.n_max;
        else
            out << "inf";
        out << "," << (row.pi_contained ? "true" : "false");
        out << "," << (row.fano ? "true" : "false");
        out << "," << (row.weak_fano ? "true" : "false");
        out << ",";
        if (row.sarkisov)
            out << (*row.sarkisov ? "true" : "false");
        else
            out << "na";
        out << "\n";
    }
    return out.str();
}

} // namespace mori
