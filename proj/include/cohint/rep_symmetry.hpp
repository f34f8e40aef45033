// Symmetry and orthogonality analysis of representations given by their
// torus weights: Weyl invariance, the dim V_gamma = dim V_{-gamma} test,
// highest-weight decomposition through Freudenthal multiplicities, and the
// orthogonal / symplectic / not-self-dual trichotomy for irreducibles.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/linalg.hpp"
#include "cohint/root_datum.hpp"

namespace cohint {

struct repsym_error : std::runtime_error {
    explicit repsym_error(const std::string& w) : std::runtime_error(w) {}
};

// Finite multiset of integer covectors.  Multiplicities may be negative,
// in which case the object represents a virtual character.
struct WeightMultiset {
    std::map<IVec, long long> mult;

    static WeightMultiset of(std::initializer_list<std::pair<IVec, long long>> items) {
        WeightMultiset w;
        for (const auto& [v, m] : items) w.add(v, m);
        return w;
    }
    void add(const IVec& v, long long m) {
        if (m == 0) return;
        auto it = mult.find(v);
        if (it == mult.end())
            mult[v] = m;
        else {
            it->second += m;
            if (it->second == 0) mult.erase(it);
        }
    }
    long long total_dim() const {
        long long s = 0;
        for (const auto& [v, m] : mult) s += m;
        return s;
    }
    bool is_virtual() const {
        for (const auto& [v, m] : mult)
            if (m < 0) return true;
        return false;
    }
    bool empty() const { return mult.empty(); }

    // adjoint representation: all roots once, zero weight with multiplicity rank
    static WeightMultiset adjoint(const RootDatum& rd) {
        WeightMultiset w;
        for (const auto& r : rd.roots) w.add(r, 1);
        if (rd.rank > 0) w.add(IVec(rd.rank, 0), (long long)rd.rank);
        return w;
    }
};

// reflected covector gamma - <gamma, alpha^vee> alpha
inline IVec reflect_covector(const IVec& gamma, const IVec& alpha, const IVec& alpha_vee) {
    long long p = idot(gamma, alpha_vee);
    IVec r = gamma;
    for (size_t j = 0; j < r.size(); ++j) r[j] -= p * alpha[j];
    return r;
}

inline bool is_weyl_invariant(const RootDatum& rd, const WeightMultiset& v) {
    for (size_t i = 0; i < rd.simple.size(); ++i) {
        IVec a = rd.simple_root(i), av = rd.simple_coroot(i);
        for (const auto& [g, m] : v.mult) {
            IVec rg = reflect_covector(g, a, av);
            auto it = v.mult.find(rg);
            if (it == v.mult.end() || it->second != m) return false;
        }
    }
    return true;
}

inline bool is_symmetric(const WeightMultiset& v) {
    for (const auto& [g, m] : v.mult) {
        IVec neg(g.size());
        for (size_t j = 0; j < g.size(); ++j) neg[j] = -g[j];
        auto it = v.mult.find(neg);
        if (it == v.mult.end() || it->second != m) return false;
    }
    return true;
}

inline bool is_symmetric(const RootDatum& rd, const WeightMultiset& v) {
    if (!is_weyl_invariant(rd, v))
        throw repsym_error("is_symmetric: weight multiset is not Weyl invariant");
    return is_symmetric(v);
}

inline bool is_dominant(const RootDatum& rd, const IVec& lambda) {
    for (size_t i = 0; i < rd.simple.size(); ++i)
        if (idot(lambda, rd.simple_coroot(i)) < 0) return false;
    return true;
}

inline IVec dominant_representative(const RootDatum& rd, IVec mu) {
    bool moved = true;
    size_t guard = 0;
    while (moved) {
        moved = false;
        for (size_t i = 0; i < rd.simple.size(); ++i) {
            if (idot(mu, rd.simple_coroot(i)) < 0) {
                mu = reflect_covector(mu, rd.simple_root(i), rd.simple_coroot(i));
                moved = true;
            }
        }
        if (++guard > 100000) throw repsym_error("dominant chamber walk does not terminate");
    }
    return mu;
}

namespace detail {

// W-invariant form on covectors: B(x, y) = sum_{alpha in Phi} <x, a^vee><y, a^vee>
inline Rat form_b(const RootDatum& rd, const QVec& x, const QVec& y) {
    Rat s;
    for (const auto& av : rd.coroots) {
        Rat px = dot_iq(av, x), py = dot_iq(av, y);
        if (!px.is_zero() && !py.is_zero()) s += px * py;
    }
    return s;
}

inline QVec qadd(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace detail

// All weights of the irreducible with highest weight lambda, with exact
// multiplicities by Freudenthal's recursion.
inline std::map<IVec, long long> irrep_weights(const RootDatum& rd, const IVec& lambda) {
    if (!is_dominant(rd, lambda))
        throw repsym_error("irrep_weights: highest weight is not dominant");
    // weight set: saturate along simple-root strings downward from lambda
    std::map<IVec, long long> wts;
    std::vector<IVec> queue{lambda};
    wts[lambda] = -1;  // placeholder
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        IVec mu = queue[qi];
        for (size_t i = 0; i < rd.simple.size(); ++i) {
            long long p = idot(mu, rd.simple_coroot(i));
            IVec cur = mu;
            for (long long k = 1; k <= p; ++k) {
                for (size_t j = 0; j < rd.rank; ++j) cur[j] -= rd.simple_root(i)[j];
                if (wts.emplace(cur, -1).second) queue.push_back(cur);
            }
        }
        if (wts.size() > 2000000) throw repsym_error("irrep weight set runaway");
    }
    // rho as a rational covector
    QVec rho(rd.rank);
    {
        IVec tr = rd.two_rho();
        for (size_t j = 0; j < rd.rank; ++j) rho[j] = Rat(tr[j], 2);
    }
    QVec lam_q = to_qvec(lambda);
    Rat top = detail::form_b(rd, detail::qadd(lam_q, rho), detail::qadd(lam_q, rho));
    // positive roots once
    std::vector<size_t> pos;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (rd.is_positive(rd.roots[i])) pos.push_back(i);
    // process by decreasing height
    std::vector<IVec> order;
    for (const auto& [w, m] : wts) order.push_back(w);
    std::sort(order.begin(), order.end(), [&](const IVec& a, const IVec& b) {
        long long ha = idot(a, rd.regular_cocharacter), hb = idot(b, rd.regular_cocharacter);
        if (ha != hb) return ha > hb;
        return a > b;
    });
    for (const auto& mu : order) {
        if (mu == lambda) {
            wts[mu] = 1;
            continue;
        }
        QVec mu_q = to_qvec(mu);
        Rat denom = top - detail::form_b(rd, detail::qadd(mu_q, rho), detail::qadd(mu_q, rho));
        if (denom.is_zero()) throw repsym_error("Freudenthal: vanishing denominator");
        Rat num;
        for (size_t pi : pos) {
            const IVec& a = rd.roots[pi];
            IVec nu = mu;
            for (long long k = 1;; ++k) {
                for (size_t j = 0; j < rd.rank; ++j) nu[j] += a[j];
                auto it = wts.find(nu);
                if (it == wts.end()) break;
                num += Rat(2 * it->second) * detail::form_b(rd, to_qvec(nu), to_qvec(a));
            }
        }
        Rat m = num / denom;
        if (!m.is_integer() || m.sign() < 0)
            throw repsym_error("Freudenthal: non-integral or negative multiplicity");
        wts[mu] = m.to_longlong_exact();
    }
    return wts;
}

struct IrrepLabel {
    IVec highest_weight;
    long long multiplicity;
};

// Highest-weight decomposition by greedy subtraction of Freudenthal
// characters.  For a genuine character all multiplicities are positive;
// allow_virtual permits signed coefficients.
inline std::vector<IrrepLabel> decompose_irreducibles(const RootDatum& rd, WeightMultiset v,
                                                      bool allow_virtual = false) {
    if (!is_weyl_invariant(rd, v))
        throw repsym_error("decompose: weight multiset is not Weyl invariant");
    std::vector<IrrepLabel> out;
    size_t guard = 0;
    while (!v.empty()) {
        // maximal height among supported weights, ties broken lexicographically
        const IVec* best = nullptr;
        long long besth = 0;
        for (const auto& [g, m] : v.mult) {
            long long h = idot(g, rd.regular_cocharacter);
            if (!best || h > besth || (h == besth && g > *best)) {
                best = &g;
                besth = h;
            }
        }
        IVec lambda = *best;
        long long m = v.mult[lambda];
        if (!is_dominant(rd, lambda))
            throw repsym_error("decompose: maximal weight is not dominant (not a character)");
        if (m < 0 && !allow_virtual)
            throw repsym_error("decompose: negative multiplicity (virtual character)");
        auto chi = irrep_weights(rd, lambda);
        for (const auto& [w, c] : chi) v.add(w, -m * c);
        out.push_back({lambda, m});
        if (++guard > 10000) throw repsym_error("decompose: runaway");
    }
    return out;
}

enum class SelfDuality { Orthogonal, Symplectic, NotSelfDual };

inline const char* to_string(SelfDuality s) {
    switch (s) {
        case SelfDuality::Orthogonal: return "orthogonal";
        case SelfDuality::Symplectic: return "symplectic";
        default: return "not-self-dual";
    }
}

// Dual test via -w0(lambda); then the h-criterion evaluated as the parity of
// <lambda, 2 rho^vee>.
inline SelfDuality self_dual_indicator(const RootDatum& rd, const IVec& lambda) {
    if (!is_dominant(rd, lambda))
        throw repsym_error("self_dual_indicator: weight is not dominant");
    IVec neg(lambda.size());
    for (size_t j = 0; j < lambda.size(); ++j) neg[j] = -lambda[j];
    if (dominant_representative(rd, neg) != lambda) return SelfDuality::NotSelfDual;
    long long pairing = idot(lambda, rd.two_rho_check());
    return pairing % 2 == 0 ? SelfDuality::Orthogonal : SelfDuality::Symplectic;
}

inline bool is_orthogonal(const RootDatum& rd, const WeightMultiset& v) {
    if (v.is_virtual())
        throw repsym_error("is_orthogonal: virtual input; use is_orthogonal_virtual");
    if (!is_symmetric(rd, v)) throw repsym_error("is_orthogonal: input is not symmetric");
    auto dec = decompose_irreducibles(rd, v);
    for (const auto& s : dec)
        if (self_dual_indicator(rd, s.highest_weight) == SelfDuality::Symplectic &&
            s.multiplicity % 2 != 0)
            return false;
    return true;
}

// Even-multiplicity rule applied to the signed decomposition.
inline bool is_orthogonal_virtual(const RootDatum& rd, const WeightMultiset& v) {
    if (!is_weyl_invariant(rd, v))
        throw repsym_error("is_orthogonal_virtual: not Weyl invariant");
    if (!is_symmetric(v)) throw repsym_error("is_orthogonal_virtual: not symmetric");
    auto dec = decompose_irreducibles(rd, v, /*allow_virtual=*/true);
    for (const auto& s : dec)
        if (self_dual_indicator(rd, s.highest_weight) == SelfDuality::Symplectic &&
            s.multiplicity % 2 != 0)
            return false;
    return true;
}

// Re-expansion of a decomposition through Freudenthal characters (test oracle).
inline WeightMultiset expand_decomposition(const RootDatum& rd,
                                           const std::vector<IrrepLabel>& dec) {
    WeightMultiset v;
    for (const auto& s : dec) {
        auto chi = irrep_weights(rd, s.highest_weight);
        for (const auto& [w, c] : chi) v.add(w, s.multiplicity * c);
    }
    return v;
}

}  // namespace cohint
