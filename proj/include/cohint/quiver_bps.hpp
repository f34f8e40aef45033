// BPS series extraction for quivers: normalized stack series of the smooth
// stack of representations, the plethystic-log decomposition
//
//   sum_gamma Stack_gamma x^gamma
//     = pexp( sum_{gamma != 0} Omega_gamma * q^{1/2}/(1-q) * x^gamma ),
//
// and per-gamma integrality verdicts.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/graded_series.hpp"

namespace cohint {

struct quiver_error : std::runtime_error {
    explicit quiver_error(const std::string& w) : std::runtime_error(w) {}
};

struct QuiverSpec {
    size_t vertices = 0;
    std::vector<std::vector<long long>> arrows;  // arrows[i][j] = #arrows i -> j

    static QuiverSpec from_arrow_list(size_t n,
                                      const std::vector<std::pair<int, int>>& list) {
        QuiverSpec q;
        q.vertices = n;
        q.arrows.assign(n, std::vector<long long>(n, 0));
        for (auto [i, j] : list) {
            if (i < 0 || j < 0 || (size_t)i >= n || (size_t)j >= n)
                throw quiver_error("arrow endpoint out of range");
            q.arrows[i][j] += 1;
        }
        return q;
    }

    // Euler form chi(a, b) = sum_i a_i b_i - sum_{i,j} arrows[i][j] a_i b_j
    long long euler_form(const std::vector<int>& a, const std::vector<int>& b) const {
        long long s = 0;
        for (size_t i = 0; i < vertices; ++i) s += (long long)a[i] * b[i];
        for (size_t i = 0; i < vertices; ++i)
            for (size_t j = 0; j < vertices; ++j)
                s -= arrows[i][j] * (long long)a[i] * b[j];
        return s;
    }

    // recomputed, never trusted from input
    bool is_symmetric() const {
        for (size_t i = 0; i < vertices; ++i)
            for (size_t j = 0; j < vertices; ++j)
                if (arrows[i][j] != arrows[j][i]) return false;
        return true;
    }
};

// Normalized stack series of a single dimension vector:
// q^{chi(g,g)/2} * prod_i prod_{k=1..g_i} (1 - q^k)^{-1}, as the x^g slice.
inline GradedSeries stack_series(const QuiverSpec& q, const std::vector<int>& gamma,
                                 int gamma_max, long long kmax) {
    if (gamma.size() != q.vertices) throw quiver_error("dimension vector arity mismatch");
    for (int gi : gamma)
        if (gi < 0) throw quiver_error("dimension vector must be nonnegative");
    long long chi = q.euler_form(gamma, gamma);
    // expand in the q variable only, then place at x^gamma with the shift
    GradedSeries qpart = GradedSeries::one(0, 0, kmax - chi);
    qpart.set_slice_kmax({}, kmax - chi);
    for (size_t i = 0; i < q.vertices; ++i)
        for (int k = 1; k <= gamma[i]; ++k)
            qpart *= GradedSeries::geometric(0, 0, {}, 2 * k, kmax - chi);
    GradedSeries out(q.vertices, gamma_max, GradedSeries::KINF);
    out.set_slice_kmax(gamma, kmax);
    for (const auto& [k, c] : qpart.slices().at(GradedSeries::Gamma{}).coeff) {
        long long kk = k + chi;
        if (kk <= kmax) out.set(gamma, kk, c);
    }
    return out;
}

struct BpsResult {
    std::map<std::vector<int>, GradedSeries> omega;  // gamma -> slice series
    bool symmetric = false;
    int gamma_max = 0;
    long long window = 0;
};

// Extract Omega_gamma for all 0 < |gamma| <= gamma_max by the signed
// plethystic logarithm, dividing by q^{1/2}/(1-q) exactly.
inline BpsResult bps_series(const QuiverSpec& q, int gamma_max, long long kmax) {
    BpsResult res;
    res.symmetric = q.is_symmetric();
    res.gamma_max = gamma_max;
    res.window = kmax;
    GradedSeries total = GradedSeries::one(q.vertices, gamma_max, GradedSeries::KINF);
    for (const auto& g : GradedSeries::enumerate_gammas(q.vertices, gamma_max)) {
        if (GradedSeries::gdeg(g) == 0) continue;
        total += stack_series(q, g, gamma_max, kmax);
    }
    GradedSeries f = plog(total);
    // divide each slice by q^{1/2}/(1-q): multiply by (1 - q) q^{-1/2}
    GradedSeries correction(q.vertices, gamma_max, GradedSeries::KINF);
    correction.set(GradedSeries::Gamma(q.vertices, 0), -1, Rat(1));
    correction.set(GradedSeries::Gamma(q.vertices, 0), 1, Rat(-1));
    GradedSeries omega_all = f * correction;
    for (const auto& g : GradedSeries::enumerate_gammas(q.vertices, gamma_max)) {
        if (GradedSeries::gdeg(g) == 0) continue;
        res.omega.emplace(g, omega_all.slice_series(g));
    }
    return res;
}

struct GammaVerdict {
    std::vector<int> gamma;
    bool polynomial_in_window = false;  // support strictly inside the window
    bool integer_coefficients = false;
    bool window_conclusive = false;
    long long support_min = 0, support_max = 0, window_kmax = 0;
    bool pass = false;
};

struct IntegralityReport {
    std::vector<GammaVerdict> verdicts;
    bool symmetric = false;
    bool all_pass = true;
};

inline IntegralityReport integrality_report(const QuiverSpec& q, const BpsResult& bps) {
    IntegralityReport rep;
    rep.symmetric = q.is_symmetric();
    for (const auto& [g, s] : bps.omega) {
        GammaVerdict v;
        v.gamma = g;
        v.window_kmax = s.kmax_of(g);
        v.support_min = s.support_min(g);
        v.support_max = s.support_max(g);
        bool empty = v.support_max < v.support_min;
        v.window_conclusive = v.window_kmax > 0;
        v.polynomial_in_window = empty || v.support_max < v.window_kmax;
        v.integer_coefficients = s.all_coeffs_integral();
        v.pass = v.polynomial_in_window && v.integer_coefficients;
        rep.all_pass = rep.all_pass && v.pass;
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

// test oracle: re-exponentiate the extracted invariants and compare with the
// stack series, coefficient-exactly within the window
inline bool bps_round_trip(const QuiverSpec& q, const BpsResult& bps) {
    GradedSeries f(q.vertices, bps.gamma_max, GradedSeries::KINF);
    GradedSeries hvirt(q.vertices, bps.gamma_max, GradedSeries::KINF);
    // q^{1/2}/(1-q) = sum_j q^{j + 1/2}
    for (long long j = 0; 2 * j + 1 <= bps.window + 1; ++j)
        hvirt.set(GradedSeries::Gamma(q.vertices, 0), 2 * j + 1, Rat(1));
    hvirt.set_slice_kmax(GradedSeries::Gamma(q.vertices, 0), bps.window + 1);
    for (const auto& [g, s] : bps.omega) f += s * hvirt;
    GradedSeries total = GradedSeries::one(q.vertices, bps.gamma_max, GradedSeries::KINF);
    for (const auto& g : GradedSeries::enumerate_gammas(q.vertices, bps.gamma_max)) {
        if (GradedSeries::gdeg(g) == 0) continue;
        total += stack_series(q, g, bps.gamma_max, bps.window);
    }
    return pexp(f) == total;
}

}  // namespace cohint
