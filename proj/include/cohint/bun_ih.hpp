// Intersection-cohomology Poincare polynomials of moduli of semistable
// GL_r-bundles on a curve: the tautological closed form for the full stack,
// the Harder-Narasimhan recursion for the semistable stack, and the
// slope-class plethystic inversion extracting IH; plus the admissibility
// combinatorics (degree lifts and the special-face census) for general G.
//
// Series here live in the topologist's variable t (t^2 = q); the shared
// plethystic machinery applies with odd t-powers fermionic, so the k index
// of GradedSeries is literally the t-exponent.

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/face_lattice.hpp"
#include "cohint/graded_series.hpp"
#include "cohint/root_datum.hpp"

namespace cohint {

struct bunih_error : std::runtime_error {
    explicit bunih_error(const std::string& w) : std::runtime_error(w) {}
};
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& w) : std::runtime_error(w) {}
};

// Poincare series of the stack of all rank-r degree-d bundles (d-independent):
//   prod_{k=1}^{r} (1+t^{2k-1})^{2g} / (1-t^{2k}) * prod_{k=1}^{r-1} 1/(1-t^{2k})
inline GradedSeries stack_series_bun_gl(int r, int genus, long long nmax) {
    if (r < 1) throw bunih_error("rank must be >= 1");
    GradedSeries s = GradedSeries::one(0, 0, nmax);
    s.set_slice_kmax({}, nmax);
    for (int k = 1; k <= r; ++k) {
        GradedSeries odd(0, 0, GradedSeries::KINF);
        odd.set({}, 0, Rat(1));
        odd.set({}, 2 * k - 1, Rat(1));
        for (int e = 0; e < 2 * genus; ++e) s *= odd;
        s *= GradedSeries::geometric(0, 0, {}, 2 * k, nmax);
        if (k < r) s *= GradedSeries::geometric(0, 0, {}, 2 * k, nmax);
    }
    return s;
}

namespace detail {

struct HnSegment {
    int r;
    long long d;
};

// codimension of the stratum of a given HN type
inline long long hn_codim(const std::vector<HnSegment>& type, int genus) {
    long long c = 0;
    for (size_t i = 0; i < type.size(); ++i)
        for (size_t j = i + 1; j < type.size(); ++j)
            c += (long long)type[i].r * type[j].r * (genus - 1) +
                 (type[j].r * type[i].d - type[i].r * type[j].d);
    return c;
}

// All proper HN types (l >= 2) for (r, d) with 2 * codim <= nmax.
// The first slope is bounded through codim >= r*(d_1 - r_1 d/r) - r^2 (worst
// genus 0); subsequent slopes are pinched between the remaining average and
// the previous slope, so the search is finite and complete.
inline void enumerate_hn_types(int r, long long d, int genus, long long nmax,
                               std::vector<HnSegment>& prefix, int rem_r, long long rem_d,
                               std::vector<std::vector<HnSegment>>& out) {
    if (rem_r == 0) {
        if (prefix.size() >= 2 && 2 * hn_codim(prefix, genus) <= nmax)
            out.push_back(prefix);
        return;
    }
    for (int r1 = 1; r1 <= rem_r; ++r1) {
        long long lo, hi;
        if (prefix.empty()) {
            // mu_1 > d/r strictly; r*e_1 <= nmax/2 + r^2 with e_1 = d_1 - r_1 d/r
            // (conservative genus-0 bound)
            // d_1 > r_1 d / r
            lo = (r1 * d) / r + 1;
            while ((lo - 1) * (long long)r > (long long)r1 * d) --lo;  // guard rounding
            while (lo * (long long)r <= (long long)r1 * d) ++lo;
            long long bound = (nmax / 2 + (long long)r * r + r) / r + 1;
            hi = (r1 * d) / r + bound + 2;
        } else {
            // d_next / r_next in ( rem_d / rem_r , prev_slope )
            const auto& prev = prefix.back();
            if (r1 == rem_r) {
                lo = hi = rem_d;  // last segment forced
                if ((long long)rem_d * prev.r >= (long long)prev.d * r1) continue;
            } else {
                lo = hi = 0;
                // strict lower bound: d1 * rem_r > rem_d * r1
                lo = (rem_d * r1) / rem_r;
                while (lo * (long long)rem_r <= rem_d * (long long)r1) ++lo;
                // strict upper bound: d1 * prev.r < prev.d * r1
                hi = (prev.d * (long long)r1) / prev.r;
                while (hi * (long long)prev.r >= prev.d * (long long)r1) --hi;
            }
        }
        for (long long d1 = lo; d1 <= hi; ++d1) {
            if (!prefix.empty()) {
                const auto& prev = prefix.back();
                if (d1 * (long long)prev.r >= prev.d * (long long)r1) continue;
            }
            prefix.push_back({r1, d1});
            // cheap prune: codim of the chosen pairs only falls short of the
            // final value by at most r^2 (genus-0 cross terms)
            if (2 * (hn_codim(prefix, genus) - (long long)r * r) <= nmax)
                enumerate_hn_types(r, d, genus, nmax, prefix, rem_r - r1, rem_d - d1, out);
            prefix.pop_back();
        }
    }
}

}  // namespace detail

class BunSeriesCache {
  public:
    BunSeriesCache(int genus, long long nmax) : genus_(genus), nmax_(nmax) {}

    int genus() const { return genus_; }
    long long nmax() const { return nmax_; }

    // Concurrent reads are safe and writes are idempotent: the maps are
    // only mutated under the lock, computation happens outside it, and a
    // losing racer discards its duplicate result.
    const GradedSeries& stack(int r) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = stack_.find(r);
            if (it != stack_.end()) return it->second;
        }
        GradedSeries s = stack_series_bun_gl(r, genus_, nmax_);
        std::lock_guard<std::mutex> lock(mu_);
        return stack_.emplace(r, std::move(s)).first->second;
    }

    // Poincare series of the semistable stack, by the HN recursion
    const GradedSeries& semistable(int r, long long d) {
        auto key = std::make_pair(r, d);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = ss_.find(key);
            if (it != ss_.end()) return it->second;
        }
        GradedSeries s = stack(r);
        std::vector<std::vector<detail::HnSegment>> types;
        std::vector<detail::HnSegment> prefix;
        detail::enumerate_hn_types(r, d, genus_, nmax_, prefix, r, d, types);
        for (const auto& type : types) {
            long long c = detail::hn_codim(type, genus_);
            if (c < 0) throw invariant_violation("negative HN stratum codimension");
            GradedSeries term = GradedSeries::one(0, 0, GradedSeries::KINF);
            for (const auto& seg : type) term *= semistable(seg.r, seg.d);
            s -= term.shifted(2 * c);
        }
        std::lock_guard<std::mutex> lock(mu_);
        return ss_.emplace(key, std::move(s)).first->second;
    }

  private:
    int genus_;
    long long nmax_;
    std::mutex mu_;
    std::map<int, GradedSeries> stack_;
    std::map<std::pair<int, long long>, GradedSeries> ss_;
};

inline long long moduli_dimension(int r, int genus) {
    return (long long)r * r * (genus - 1) + 1;
}

struct IhResult {
    GradedSeries polynomial;       // the IH Poincare polynomial, from t^0
    long long degree = 0;          // top t-degree, 2 * moduli_dimension
    std::vector<long long> betti;  // coefficients t^0 .. t^degree
};

// IH Poincare polynomial of the moduli space of semistable (r, d) bundles.
// Solves, over the slope class (r_m = m r / gcd, d_m = m d / gcd),
//
//   1 + sum_m t^{1 - n_{r_m}} SS(r_m, d_m) x^m
//     = pexp( sum_m t^{-n_{r_m}} IH_m(t) * t/(1-t^2) * x^m ),
//
// i.e. the plethystic identity for the intersection-complex-normalized stack
// series t^{-dim} SS (whose shift parity also carries the Riemann-Roch sign
// twist of the permutation action), and returns IH_r from t^0.  The r = 1
// case reduces to IH = (1+t)^{2g} exactly, which pins the normalization.
// Integrality, nonnegativity and palindromy are enforced, never silently
// dropped.
inline IhResult ih_series(int r, long long d, int genus, long long nmax,
                          BunSeriesCache* shared_cache = nullptr) {
    if (r < 1) throw bunih_error("rank must be >= 1");
    long long n_top = moduli_dimension(r, genus);
    if (nmax < 2 * n_top + 4)
        throw bunih_error("window too small: need N >= 2 r^2 (g-1) + 6");
    BunSeriesCache local(genus, nmax);
    BunSeriesCache& cache = shared_cache ? *shared_cache : local;
    long long g0 = gcd_ll(r, d);
    int r0 = (int)(r / g0);
    int mmax = (int)(r / r0);
    GradedSeries a = GradedSeries::one(1, mmax, GradedSeries::KINF);
    for (int m = 1; m <= mmax; ++m) {
        int rm = m * r0;
        long long dm = m * (d / g0);
        GradedSeries ss = cache.semistable(rm, dm);
        GradedSeries sh = ss.shifted(1 - moduli_dimension(rm, genus));
        GradedSeries placed(1, mmax, GradedSeries::KINF);
        placed.set_slice_kmax({m}, sh.kmax_of({}));
        auto it = sh.slices().find(GradedSeries::Gamma{});
        if (it != sh.slices().end())
            for (const auto& [k, c] : it->second.coeff) placed.set({m}, k, c);
        a += placed;
    }
    GradedSeries f = plog(a);
    // each slice is t^{-n_m} IH_m(t) * t^2/(1-t^2) (the t/(1-t^2) factor plus
    // the global t rebalancing): strip it and re-center at t^0
    GradedSeries corr(1, mmax, GradedSeries::KINF);
    corr.set({0}, -2, Rat(1));
    corr.set({0}, 0, Rat(-1));
    GradedSeries omega = f * corr;
    IhResult out;
    out.degree = 2 * n_top;
    GradedSeries shifted = omega.slice_series({mmax}).shifted(n_top + 1);
    if (shifted.kmax_of({mmax}) <= out.degree)
        throw bunih_error("window too small to certify the IH polynomial");
    out.polynomial = shifted;
    // hard gates: polynomial support [0, 2n], integer, nonnegative, palindromic
    long long lo = shifted.support_min({mmax}), hi = shifted.support_max({mmax});
    if (lo < 0 || hi > out.degree)
        throw invariant_violation("IH series support escapes [0, 2 dim]");
    out.betti.assign((size_t)out.degree + 1, 0);
    for (long long k = 0; k <= out.degree; ++k) {
        Rat c = shifted.coeff({mmax}, k);
        if (!c.is_integer()) throw invariant_violation("IH coefficient is not an integer");
        long long v = c.to_longlong_exact();
        if (v < 0) throw invariant_violation("IH coefficient is negative");
        out.betti[(size_t)k] = v;
    }
    for (long long k = 0; k <= out.degree; ++k)
        if (out.betti[(size_t)k] != out.betti[(size_t)(out.degree - k)])
            throw invariant_violation("IH polynomial is not palindromic");
    return out;
}

// ---------------------------------------------------------------------------
// Admissibility: unique rational degree lift killed by the characters of the
// Levi trivial on the connected centre of G, and its integrality in pi_1(L).
// ---------------------------------------------------------------------------

struct AdmissibleDatum {
    QVec rational_lift;   // the unique constrained lift in pi_1(L) (x) Q
    bool integral = false;  // whether it comes from an honest element of pi_1(L)
};

inline std::optional<AdmissibleDatum> admissible_lift(const RootDatum& rd,
                                                      const LeviDatum& levi,
                                                      const IVec& degree_rep) {
    size_t n = rd.rank;
    // span of the Levi coroots and the central directions of G
    QMat levi_coroots;
    for (size_t idx : levi.root_indices) levi_coroots.push_back(to_qvec(rd.coroots[idx]));
    QMat root_rows;
    for (const auto& rt : rd.roots) root_rows.push_back(to_qvec(rt));
    QMat zg = null_space(root_rows, n);  // central cocharacter directions of G
    // constraint characters: vanish on Levi coroots and on Z(G)^circ
    QMat vecs = levi_coroots;
    vecs.insert(vecs.end(), zg.begin(), zg.end());
    QMat constraints = null_space(vecs, n);
    // adjust the lift by an element of the G-coroot span
    QMat g_coroots;
    for (size_t i : rd.simple) g_coroots.push_back(to_qvec(rd.coroots[i]));
    QVec delta = to_qvec(degree_rep);
    size_t s = g_coroots.size();
    QVec w(n, Rat(0));
    if (!constraints.empty() && s > 0) {
        QMat aug(constraints.size(), QVec(s + 1));
        for (size_t i = 0; i < constraints.size(); ++i) {
            for (size_t j = 0; j < s; ++j) aug[i][j] = dot(constraints[i], g_coroots[j]);
            aug[i][s] = -dot(constraints[i], delta);
        }
        auto pivots = rref(aug);
        QVec coeff(s, Rat(0));
        for (size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] == s) return std::nullopt;  // no rational lift at all
            coeff[pivots[i]] = aug[i][s];
        }
        for (size_t j = 0; j < s; ++j)
            for (size_t k = 0; k < n; ++k) w[k] += coeff[j] * g_coroots[j][k];
    } else if (!constraints.empty()) {
        for (const auto& chi : constraints)
            if (!dot(chi, delta).is_zero()) return std::nullopt;
    }
    AdmissibleDatum ad;
    ad.rational_lift.resize(n);
    for (size_t k = 0; k < n; ++k) ad.rational_lift[k] = delta[k] + w[k];
    for (const auto& chi : constraints)
        if (!dot(chi, ad.rational_lift).is_zero())
            throw bunih_error("constrained lift failed to satisfy its constraints");
    // integrality: exists v in the G-coroot lattice with v = w (mod span of
    // the Levi coroots)
    QMat ann_levi = null_space(levi_coroots, n);
    if (ann_levi.empty()) {
        ad.integral = true;  // pi_1(L) (x) Q trivial direction: lift is t-integral
        return ad;
    }
    QMat A(ann_levi.size(), QVec(s));
    QVec b(ann_levi.size());
    for (size_t i = 0; i < ann_levi.size(); ++i) {
        for (size_t j = 0; j < s; ++j) A[i][j] = dot(ann_levi[i], g_coroots[j]);
        b[i] = dot(ann_levi[i], w);
    }
    ad.integral = integer_solvable(A, b);
    return ad;
}

// ---------------------------------------------------------------------------
// Census of the special faces of BG with signs and admissibility.
// ---------------------------------------------------------------------------

struct CensusRow {
    size_t face_dim = 0;
    std::string levi_label;
    size_t relative_weyl_order = 0;
    bool base_sign_trivial = true;   // the sign character of BG at this face
    bool twisted_sign_trivial = true;  // after raising to the power (1 - g)
    bool admissible = false;
    QVec rational_lift;
    std::vector<size_t> partition;  // GL block sizes when applicable
};

// GL block partition of a face subspace: coordinates i, j fall in one block
// iff the root e_i - e_j vanishes on F
inline std::vector<size_t> gl_block_partition(const RootDatum& rd, const QMat& basis) {
    size_t n = rd.rank;
    std::vector<size_t> comp(n);
    for (size_t i = 0; i < n; ++i) comp[i] = i;
    for (const auto& rt : rd.roots) {
        int a = -1, b = -1;
        int ones = 0;
        for (size_t j = 0; j < n; ++j) {
            if (rt[j] == 1 && a < 0) {
                a = (int)j;
                ++ones;
            } else if (rt[j] == -1 && b < 0) {
                b = (int)j;
            } else if (rt[j] != 0)
                return {};  // not a GL-type root
        }
        if (a < 0 || b < 0 || ones != 1) return {};
        bool vanishes = true;
        for (const auto& row : basis)
            if (!dot_iq(rt, row).is_zero()) vanishes = false;
        if (vanishes) {
            size_t ra = comp[a], rb = comp[b];
            for (size_t j = 0; j < n; ++j)
                if (comp[j] == rb) comp[j] = ra;
        }
    }
    std::map<size_t, size_t> sizes;
    for (size_t j = 0; j < n; ++j) sizes[comp[j]]++;
    std::vector<size_t> parts;
    for (auto& [c, s] : sizes) parts.push_back(s);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

inline std::vector<CensusRow> special_face_census_bun(const RootDatum& rd, int genus,
                                                      const IVec& degree_rep,
                                                      const std::vector<IMat>& weyl) {
    WeightMultiset empty;
    auto classes = special_faces(rd, empty, weyl);
    std::vector<CensusRow> rows;
    for (const auto& fc : classes) {
        CensusRow row;
        row.face_dim = fc.face.dim();
        LeviDatum levi = levi_of_subspace(rd, fc.face.basis);
        row.partition = gl_block_partition(rd, fc.face.basis);
        if (!row.partition.empty()) {
            row.levi_label = "GL(";
            for (size_t i = 0; i < row.partition.size(); ++i) {
                if (i) row.levi_label += ",";
                row.levi_label += std::to_string(row.partition[i]);
            }
            row.levi_label += ")";
        } else {
            row.levi_label = levi.label;
        }
        row.relative_weyl_order = fc.aut.order();
        auto chambers = chambers_in_face(fc.face);
        auto sgn = sign_representation(rd, empty, fc.face, fc.aut, chambers);
        bool base_trivial = true;
        for (int s : sgn.values)
            if (s < 0) base_trivial = false;
        row.base_sign_trivial = base_trivial;
        int exponent = (((1 - genus) % 2) + 2) % 2;
        row.twisted_sign_trivial = exponent == 0 ? true : base_trivial;
        auto ad = admissible_lift(rd, levi, degree_rep);
        row.admissible = ad.has_value() && ad->integral;
        if (ad) row.rational_lift = ad->rational_lift;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cohint
