// Truncated Laurent series in q^{1/2} graded by a free commutative monoid,
// with the signed plethystic exponential and logarithm.
//
// A term is indexed by (gamma, k) and stands for c * q^{k/2} * x^gamma.
// Odd k behaves fermionically under pexp, even k bosonically.  Windows are
// explicit: a series is exact on every (gamma, k) with |gamma| <= gamma_max
// and k <= kmax(gamma); coefficients are never reported outside the window
// and window shrinkage propagates through arithmetic.

#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/rational.hpp"

namespace cohint {

struct series_error : std::runtime_error {
    explicit series_error(const std::string& w) : std::runtime_error(w) {}
};

class GradedSeries {
  public:
    static constexpr long long KINF = std::numeric_limits<long long>::max() / 4;

    using Gamma = std::vector<int>;
    struct Slice {
        std::map<long long, Rat> coeff;  // k -> coefficient of q^{k/2}
        long long kmax = KINF;           // exact for all k <= kmax
    };

    GradedSeries() : grank_(0), gmax_(0) {}
    GradedSeries(size_t gamma_rank, int gamma_max, long long default_kmax = KINF)
        : grank_(gamma_rank), gmax_(gamma_max), default_kmax_(default_kmax) {}

    size_t gamma_rank() const { return grank_; }
    int gamma_max() const { return gmax_; }
    long long default_kmax() const { return default_kmax_; }

    static int gdeg(const Gamma& g) {
        int d = 0;
        for (int x : g) d += x;
        return d;
    }

    static GradedSeries one(size_t grank, int gmax, long long kmax = KINF) {
        GradedSeries s(grank, gmax, kmax);
        s.set(Gamma(grank, 0), 0, Rat(1));
        return s;
    }
    static GradedSeries zero(size_t grank, int gmax, long long kmax = KINF) {
        return GradedSeries(grank, gmax, kmax);
    }
    // c * q^{k/2} * x^gamma, exact everywhere
    static GradedSeries monomial(size_t grank, int gmax, const Gamma& g, long long k,
                                 const Rat& c) {
        GradedSeries s(grank, gmax, KINF);
        s.set(g, k, c);
        return s;
    }
    // 1/(1 - q^{j/2} x^gamma) expanded within the window
    static GradedSeries geometric(size_t grank, int gmax, const Gamma& g, long long j,
                                  long long kmax) {
        if (gdeg(g) == 0 && j <= 0) throw series_error("geometric: non-contracting ratio");
        GradedSeries s(grank, gmax, kmax);
        Gamma cur(grank, 0);
        long long k = 0;
        int d = 0;
        while (d <= gmax && k <= kmax) {
            s.set(cur, k, Rat(1));
            for (size_t i = 0; i < grank; ++i) cur[i] += g[i];
            k += j;
            d += gdeg(g);
        }
        return s;
    }

    void set(const Gamma& g, long long k, const Rat& c) {
        if (gdeg(g) > gmax_) return;
        auto it = slices_.find(g);
        if (it == slices_.end()) it = slices_.emplace(g, Slice{{}, default_kmax_}).first;
        if (k > it->second.kmax) return;
        if (c.is_zero())
            it->second.coeff.erase(k);
        else
            it->second.coeff[k] = c;
    }

    void set_slice_kmax(const Gamma& g, long long kmax) {
        auto it = slices_.find(g);
        if (it == slices_.end()) it = slices_.emplace(g, Slice{{}, default_kmax_}).first;
        it->second.kmax = kmax;
        auto& m = it->second.coeff;
        for (auto jt = m.begin(); jt != m.end();)
            if (jt->first > kmax)
                jt = m.erase(jt);
            else
                ++jt;
    }

    Rat coeff(const Gamma& g, long long k) const {
        if (gdeg(g) > gmax_ || k > kmax_of(g))
            throw series_error("coefficient requested outside the window");
        auto it = slices_.find(g);
        if (it == slices_.end()) return Rat(0);
        auto jt = it->second.coeff.find(k);
        return jt == it->second.coeff.end() ? Rat(0) : jt->second;
    }

    long long kmax_of(const Gamma& g) const {
        auto it = slices_.find(g);
        return it == slices_.end() ? default_kmax_ : it->second.kmax;
    }

    // smallest exponent carrying a nonzero coefficient; when the slice has no
    // visible support it is zero at least up to its window, so kmax + 1
    long long support_min(const Gamma& g) const {
        auto it = slices_.find(g);
        if (it == slices_.end() || it->second.coeff.empty()) {
            long long km = kmax_of(g);
            return km >= KINF ? KINF : km + 1;
        }
        return it->second.coeff.begin()->first;
    }
    long long support_max(const Gamma& g) const {
        auto it = slices_.find(g);
        if (it == slices_.end() || it->second.coeff.empty()) return -KINF;
        return it->second.coeff.rbegin()->first;
    }

    const std::map<Gamma, Slice>& slices() const { return slices_; }

    bool gamma0_is_one() const {
        Gamma z(grank_, 0);
        auto it = slices_.find(z);
        if (it == slices_.end()) return false;
        return it->second.coeff.size() == 1 && it->second.coeff.count(0) == 1 &&
               it->second.coeff.at(0) == Rat(1);
    }
    bool gamma0_is_zero() const {
        Gamma z(grank_, 0);
        auto it = slices_.find(z);
        return it == slices_.end() || it->second.coeff.empty();
    }

    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
        a.check_compatible(b);
        GradedSeries r(a.grank_, std::min(a.gmax_, b.gmax_),
                       std::min(a.default_kmax_, b.default_kmax_));
        auto merge = [&r](const GradedSeries& s, const GradedSeries& other, bool negate) {
            for (const auto& [g, sl] : s.slices_) {
                if (gdeg(g) > r.gmax_) continue;
                long long km = std::min(s.kmax_of(g), other.kmax_of(g));
                auto it = r.slices_.find(g);
                if (it == r.slices_.end())
                    it = r.slices_.emplace(g, Slice{{}, km}).first;
                for (const auto& [k, c] : sl.coeff) {
                    if (k > km) continue;
                    Rat v = negate ? -c : c;
                    auto jt = it->second.coeff.find(k);
                    if (jt == it->second.coeff.end())
                        it->second.coeff[k] = v;
                    else {
                        jt->second += v;
                        if (jt->second.is_zero()) it->second.coeff.erase(jt);
                    }
                }
            }
        };
        merge(a, b, false);
        merge(b, a, false);
        return r;
    }
    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
        return a + (Rat(-1) * b);
    }
    friend GradedSeries operator*(const Rat& c, const GradedSeries& a) {
        GradedSeries r(a.grank_, a.gmax_, a.default_kmax_);
        for (const auto& [g, sl] : a.slices_) {
            auto& dst = r.slices_[g];
            dst.kmax = sl.kmax;
            if (!c.is_zero())
                for (const auto& [k, v] : sl.coeff) dst.coeff[k] = c * v;
        }
        return r;
    }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        a.check_compatible(b);
        int gmax = std::min(a.gmax_, b.gmax_);
        GradedSeries r(a.grank_, gmax, std::min(a.default_kmax_, b.default_kmax_));
        // per-slice window: a product coefficient at (g, k) is known only if
        // no decomposition g = g1 + g2 can feed it an unknown contribution
        for (const auto& g : enumerate_gammas(a.grank_, gmax)) {
            long long lim = KINF;
            for (const auto& g1 : decompositions_below(g)) {
                Gamma g2(g.size());
                for (size_t i = 0; i < g.size(); ++i) g2[i] = g[i] - g1[i];
                long long c1 = clamp_add(a.kmax_of(g1), b.support_min(g2));
                long long c2 = clamp_add(b.kmax_of(g2), a.support_min(g1));
                lim = std::min(lim, std::min(c1, c2));
            }
            r.set_slice_kmax(g, lim);
        }
        for (const auto& [g1, s1] : a.slices_) {
            for (const auto& [g2, s2] : b.slices_) {
                Gamma g(g1.size());
                int d = 0;
                for (size_t i = 0; i < g.size(); ++i) {
                    g[i] = g1[i] + g2[i];
                    d += g[i];
                }
                if (d > gmax) continue;
                auto& dst = r.slices_[g];
                for (const auto& [k1, c1] : s1.coeff) {
                    if (c1.is_zero()) continue;
                    for (const auto& [k2, c2] : s2.coeff) {
                        long long k = k1 + k2;
                        if (k > dst.kmax) continue;
                        auto it = dst.coeff.find(k);
                        if (it == dst.coeff.end())
                            dst.coeff[k] = c1 * c2;
                        else {
                            it->second += c1 * c2;
                            if (it->second.is_zero()) dst.coeff.erase(it);
                        }
                    }
                }
            }
        }
        return r;
    }
    GradedSeries& operator*=(const GradedSeries& b) { return *this = *this * b; }
    GradedSeries& operator+=(const GradedSeries& b) { return *this = *this + b; }
    GradedSeries& operator-=(const GradedSeries& b) { return *this = *this - b; }

    // multiply by q^{j/2}
    GradedSeries shifted(long long j) const {
        GradedSeries r(grank_, gmax_, clamp_add(default_kmax_, j));
        for (const auto& [g, sl] : slices_) {
            auto& dst = r.slices_[g];
            dst.kmax = clamp_add(sl.kmax, j);
            for (const auto& [k, c] : sl.coeff) dst.coeff[k + j] = c;
        }
        return r;
    }

    // restrict to a single gamma slice (as a gamma-rank-preserving series)
    GradedSeries slice_series(const Gamma& g) const {
        GradedSeries r(grank_, gmax_, kmax_of(g));
        auto it = slices_.find(g);
        r.set_slice_kmax(g, kmax_of(g));
        if (it != slices_.end())
            for (const auto& [k, c] : it->second.coeff) r.set(g, k, c);
        return r;
    }

    bool all_coeffs_integral() const {
        for (const auto& [g, sl] : slices_)
            for (const auto& [k, c] : sl.coeff)
                if (!c.is_integer()) return false;
        return true;
    }

    // equality of the exactly-known overlap
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        a.check_compatible(b);
        int gmax = std::min(a.gmax_, b.gmax_);
        for (const auto& g : enumerate_gammas(a.grank_, gmax)) {
            long long km = std::min(a.kmax_of(g), b.kmax_of(g));
            long long lo = std::min(a.support_min(g), b.support_min(g));
            long long hi = std::min(km, std::max(a.support_max(g), b.support_max(g)));
            for (long long k = lo; k <= hi; ++k)
                if (a.coeff(g, k) != b.coeff(g, k)) return false;
        }
        return true;
    }
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) {
        return !(a == b);
    }

    static std::vector<Gamma> enumerate_gammas(size_t grank, int gmax) {
        std::vector<Gamma> out;
        Gamma cur(grank, 0);
        enumerate_rec(cur, 0, gmax, out);
        std::sort(out.begin(), out.end(), [](const Gamma& a, const Gamma& b) {
            int da = gdeg(a), db = gdeg(b);
            if (da != db) return da < db;
            return a < b;
        });
        return out;
    }

    static long long clamp_add(long long a, long long b) {
        if (a >= KINF || b >= KINF) return KINF;
        if (a <= -KINF || b <= -KINF) return -KINF;
        return a + b;
    }

  private:
    size_t grank_;
    int gmax_;
    long long default_kmax_ = KINF;
    std::map<Gamma, Slice> slices_;

    static std::vector<Gamma> decompositions_below(const Gamma& g) {
        std::vector<Gamma> parts;
        Gamma cur(g.size(), 0);
        while (true) {
            parts.push_back(cur);
            size_t i = 0;
            while (i < g.size() && cur[i] == g[i]) cur[i++] = 0;
            if (i == g.size()) break;
            ++cur[i];
        }
        return parts;
    }

    void check_compatible(const GradedSeries& b) const {
        if (grank_ != b.grank_)
            throw series_error("grading rank mismatch between series");
    }

    static void enumerate_rec(Gamma& cur, size_t i, int budget, std::vector<Gamma>& out) {
        if (cur.empty()) {
            if (i == 0) out.push_back(cur);
            return;
        }
        if (i == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            cur[i] = v;
            enumerate_rec(cur, i + 1, budget - v, out);
        }
        cur[i] = 0;
    }
};

// generalized binomial coefficient  c (c-1) ... (c-j+1) / j!
inline Rat binom_rat(const Rat& c, long long j) {
    Rat r(1);
    for (long long i = 0; i < j; ++i) r *= (c - Rat(i)) / Rat(i + 1);
    return r;
}

// (1 - s q^{k/2} x^g)^c expanded as sum_j binom(c, j) (-s)^j q^{jk/2} x^{jg}
inline GradedSeries power_one_minus(size_t grank, int gmax, const GradedSeries::Gamma& g,
                                    long long k, int s, const Rat& c) {
    int d = GradedSeries::gdeg(g);
    if (d <= 0) throw series_error("power_one_minus: factor must raise gamma degree");
    GradedSeries r(grank, gmax, GradedSeries::KINF);
    GradedSeries::Gamma cur(grank, 0);
    for (long long j = 0; j * d <= gmax; ++j) {
        Rat cj = binom_rat(c, j);
        long long sgn = (j % 2 == 0 || s < 0) ? 1 : -1;
        r.set(cur, j * k, cj * Rat(sgn));
        for (size_t i = 0; i < grank; ++i) cur[i] += g[i];
    }
    return r;
}

// lowest exponent at which pexp(f) may be affected by f-terms beyond the
// window, restricted to contributions of gamma exactly g
inline long long unknown_floor(const GradedSeries& f, const GradedSeries::Gamma& g) {
    long long best = GradedSeries::KINF;
    long long km = f.kmax_of(g);
    if (km < GradedSeries::KINF) best = GradedSeries::clamp_add(km, 1);
    // products of unknown factors from two nonzero parts
    GradedSeries::Gamma cur(g.size(), 0);
    while (true) {
        size_t i = 0;
        while (i < g.size() && cur[i] == g[i]) cur[i++] = 0;
        if (i == g.size()) break;
        ++cur[i];
        if (GradedSeries::gdeg(cur) == 0 || cur == g) continue;
        GradedSeries::Gamma rest(g.size());
        bool half = true;
        for (size_t j = 0; j < g.size(); ++j) {
            rest[j] = g[j] - cur[j];
            if (cur[j] > rest[j]) half = false;
        }
        if (!half) continue;  // each unordered split visited once
        if (GradedSeries::gdeg(rest) == 0) continue;
        long long a = unknown_floor(f, cur);
        long long b = unknown_floor(f, rest);
        best = std::min(best, GradedSeries::clamp_add(a, b));
    }
    return best;
}

// Signed plethystic exponential.  Requires the gamma-0 slice of f to vanish.
// Convention: Exp(a q^{k/2} x^g) = (1 - (-1)^k q^{k/2} x^g)^{-(-1)^k a};
// even k bosonic, odd k fermionic.
inline GradedSeries pexp(const GradedSeries& f) {
    if (!f.gamma0_is_zero())
        throw series_error("pexp: input has a nonzero gamma-degree-0 part");
    GradedSeries r = GradedSeries::one(f.gamma_rank(), f.gamma_max());
    for (const auto& [g, sl] : f.slices()) {
        if (GradedSeries::gdeg(g) == 0) continue;
        for (const auto& [k, a] : sl.coeff) {
            int ps = (((k % 2) + 2) % 2 == 0) ? 1 : -1;  // (-1)^k
            Rat expo = Rat(-ps) * a;
            r *= power_one_minus(f.gamma_rank(), f.gamma_max(), g, k, ps, expo);
        }
    }
    // Terms of f beyond its window correspond to factors we could not form;
    // their first effect on slice h is at exponent m(g) + min-support of the
    // complementary known part, so h stays exact strictly below that.
    for (const auto& g : GradedSeries::enumerate_gammas(f.gamma_rank(), f.gamma_max())) {
        if (GradedSeries::gdeg(g) == 0) continue;
        long long m = unknown_floor(f, g);
        if (m >= GradedSeries::KINF) continue;
        for (const auto& h :
             GradedSeries::enumerate_gammas(f.gamma_rank(), f.gamma_max())) {
            bool ge = true;
            for (size_t i = 0; i < g.size(); ++i)
                if (h[i] < g[i]) ge = false;
            if (!ge) continue;
            GradedSeries::Gamma rest(h.size());
            for (size_t i = 0; i < h.size(); ++i) rest[i] = h[i] - g[i];
            long long lim =
                GradedSeries::clamp_add(GradedSeries::clamp_add(m, r.support_min(rest)), -1);
            r.set_slice_kmax(h, std::min(r.kmax_of(h), lim));
        }
    }
    return r;
}

// Inverse of pexp, gamma-degree by gamma-degree.  Requires A|_{gamma=0} = 1.
inline GradedSeries plog(const GradedSeries& A) {
    if (!A.gamma0_is_one())
        throw series_error("plog: gamma-degree-0 part must be exactly 1");
    GradedSeries f(A.gamma_rank(), A.gamma_max(), GradedSeries::KINF);
    f.set_slice_kmax(GradedSeries::Gamma(A.gamma_rank(), 0), GradedSeries::KINF);
    auto gammas = GradedSeries::enumerate_gammas(A.gamma_rank(), A.gamma_max());
    for (int d = 1; d <= A.gamma_max(); ++d) {
        GradedSeries E = pexp(f);
        for (const auto& g : gammas) {
            if (GradedSeries::gdeg(g) != d) continue;
            long long km = std::min(A.kmax_of(g), E.kmax_of(g));
            f.set_slice_kmax(g, km);
            long long lo = std::min(A.support_min(g), E.support_min(g));
            long long hi = std::min(km, std::max(A.support_max(g), E.support_max(g)));
            for (long long k = lo; k <= hi; ++k) {
                Rat v = A.coeff(g, k) - E.coeff(g, k);
                if (!v.is_zero()) f.set(g, k, v);
            }
        }
    }
    return f;
}

// Molien product prod_i 1/(1 - q^{d_i}) in integer q powers (k = 2 * power).
inline GradedSeries molien_series(const std::vector<int>& degrees, long long qmax) {
    GradedSeries r = GradedSeries::one(0, 0, 2 * qmax);
    r.set_slice_kmax(GradedSeries::Gamma{}, 2 * qmax);
    for (int d : degrees)
        r *= GradedSeries::geometric(0, 0, GradedSeries::Gamma{}, 2 * d, 2 * qmax);
    return r;
}

}  // namespace cohint
