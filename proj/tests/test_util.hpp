// Shared helpers for the test suite: a small deterministic RNG and random
// generators for the algebraic objects under test.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "cohint/poly.hpp"
#include "cohint/rep_symmetry.hpp"
#include "cohint/root_datum.hpp"

namespace cohint::testutil {

// xorshift64*: deterministic across platforms
class Rng {
  public:
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ULL) : s_(seed ? seed : 1) {}
    uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dULL;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }

  private:
    uint64_t s_;
};

inline Rat random_rat(Rng& rng, long long num_bound = 20, long long den_bound = 6) {
    return Rat(rng.range(-num_bound, num_bound), rng.range(1, den_bound));
}

// random polynomial of bounded degree, then symmetrized over a group
inline Poly random_poly(Rng& rng, size_t nvars, int max_degree, int terms) {
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(nvars, 0);
        int budget = (int)rng.range(0, max_degree);
        for (size_t i = 0; i < nvars; ++i) {
            int v = (int)rng.range(0, budget);
            e[i] = v;
            budget -= v;
        }
        p.add_term(e, Rat(rng.range(-9, 9)));
    }
    return p;
}

inline Poly symmetrize(const Poly& p, const std::vector<IMat>& group) {
    Poly s(p.nvars());
    for (const auto& m : group) s += p.compose_linear(m);
    return s;
}

// random W-invariant weight multiset: a few full Weyl orbits
inline WeightMultiset random_invariant_multiset(Rng& rng, const RootDatum& rd,
                                                const std::vector<IMat>& weyl, int orbits,
                                                long long coord_bound = 2,
                                                bool symmetric = false) {
    WeightMultiset v;
    for (int o = 0; o < orbits; ++o) {
        IVec seed(rd.rank);
        for (size_t i = 0; i < rd.rank; ++i) seed[i] = rng.range(-coord_bound, coord_bound);
        long long mult = rng.range(1, 3);
        std::set<IVec> orbit;
        for (const auto& w : weyl) orbit.insert(apply_mat_right(seed, w));
        for (const auto& g : orbit) v.add(g, mult);
        if (symmetric) {
            for (const auto& g : orbit) {
                IVec neg(g.size());
                for (size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
                v.add(neg, mult);
            }
        }
    }
    return v;
}

// random genuine character: a nonnegative combination of irreducible
// characters; optionally forced symmetric by adding the dual of each summand
inline WeightMultiset random_character(Rng& rng, const RootDatum& rd, int summands,
                                       bool force_symmetric, long long coord_bound = 2) {
    WeightMultiset v;
    for (int s = 0; s < summands; ++s) {
        IVec lam(rd.rank);
        for (size_t i = 0; i < rd.rank; ++i) lam[i] = rng.range(0, coord_bound);
        lam = dominant_representative(rd, lam);
        long long m = rng.range(1, 2);
        for (const auto& [w, c] : irrep_weights(rd, lam)) v.add(w, m * c);
        if (force_symmetric) {
            IVec neg(rd.rank);
            for (size_t i = 0; i < rd.rank; ++i) neg[i] = -lam[i];
            IVec dual = dominant_representative(rd, neg);
            if (dual != lam)
                for (const auto& [w, c] : irrep_weights(rd, dual)) v.add(w, m * c);
            else if (self_dual_indicator(rd, lam) == SelfDuality::Symplectic) {
                // double a symplectic summand so the total stays orthogonal
                // only when the random draw says so; symmetry needs no fix
            }
        }
    }
    return v;
}

}  // namespace cohint::testutil
