// The explicit cohomological Hall induction operator on Weyl-invariant
// polynomial rings: the localization-formula Weyl sum
//
//   f  ->  (1/|W_alpha|) sum_{w in W} w( f * prod_{gamma in S^-} t_gamma
//                                          / prod_{beta in Phi^-} t_beta ),
//
// its chamber-independence on the sign-isotypic part, and the degreewise
// H*(BT)^W = H*(BG) bijectivity check.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/face_lattice.hpp"
#include "cohint/graded_series.hpp"
#include "cohint/poly.hpp"
#include "cohint/root_datum.hpp"

namespace cohint {

struct induction_error : std::runtime_error {
    explicit induction_error(const std::string& w) : std::runtime_error(w) {}
};

// The chamber's interior point lifted to ambient cocharacter coordinates.
// Covectors vanishing identically on F pair to zero with it (they belong to
// the face's Levi and enter neither the numerator nor the denominator of
// the induction formula); all other arrangement covectors are nonzero at an
// interior point, which is certified below.
inline QVec chamber_cocharacter(const RootDatum& rd, const WeightMultiset& v, const Face& f,
                                const Chamber& sigma) {
    QVec v0(rd.rank, Rat(0));
    for (size_t i = 0; i < f.dim(); ++i)
        for (size_t j = 0; j < rd.rank; ++j) v0[j] += sigma.witness[i] * f.basis[i][j];
    auto vanishes_on_f = [&f](const IVec& gamma) {
        for (const auto& row : f.basis)
            if (!dot_iq(gamma, row).is_zero()) return false;
        return true;
    };
    auto certify = [&](const IVec& gamma) {
        if (!vanishes_on_f(gamma) && dot_iq(gamma, v0).is_zero())
            throw induction_error("chamber point is not interior to its chamber");
    };
    for (const auto& r : rd.roots) certify(r);
    for (const auto& [g, m] : v.mult) certify(g);
    return v0;
}

struct InductionResult {
    Poly value;
    long long shift = 0;  // d_sigma = #Phi^- - #S^-
    size_t chamber_id = 0;
};

inline bool invariant_under(const Poly& f, const std::vector<IMat>& group) {
    for (const auto& m : group)
        if (f.compose_linear(m) != f) return false;
    return true;
}

inline InductionResult induction(const RootDatum& rd, const WeightMultiset& v, const Face& f,
                                 const std::vector<Chamber>& chambers, size_t chamber_id,
                                 const Poly& input, const std::vector<IMat>& weyl) {
    if (input.nvars() != rd.rank) throw induction_error("polynomial has wrong arity");
    const Chamber& sigma = chambers.at(chamber_id);
    QVec lambda = chamber_cocharacter(rd, v, f, sigma);

    LeviDatum levi = levi_of_subspace(rd, f.basis);
    if (!invariant_under(input, levi.weyl_subgroup))
        throw induction_error("input polynomial is not invariant under the face Levi");

    // roots and weights strictly negative on the chamber cocharacter; Levi
    // roots and face-constant weights pair to zero and drop out
    std::vector<IVec> phi_neg;
    for (const auto& r : rd.roots)
        if (dot_iq(r, lambda).sign() < 0) phi_neg.push_back(r);
    std::vector<std::pair<IVec, long long>> s_neg;
    long long s_neg_count = 0;
    for (const auto& [g, m] : v.mult)
        if (dot_iq(g, lambda).sign() < 0) {
            s_neg.emplace_back(g, m);
            s_neg_count += m;
        }
    long long d_sigma = (long long)phi_neg.size() - s_neg_count;

    // common denominator: one representative per +- pair of ALL roots.  The
    // Weyl image of the chamber's denominator multiset is a sub-multiset of
    // the root pairs, so each summand is completed by the complementary
    // factors and an overall sign.
    std::vector<IVec> pair_reps;
    std::map<IVec, size_t> rep_index;
    for (const auto& r : rd.roots) {
        if (rep_index.count(r)) continue;
        IVec neg(r.size());
        for (size_t j = 0; j < r.size(); ++j) neg[j] = -r[j];
        if (rep_index.count(neg)) continue;
        rep_index[r] = pair_reps.size();
        pair_reps.push_back(r);
    }
    Poly weight_factor = Poly::constant(rd.rank, Rat(1));
    for (const auto& [g, m] : s_neg) {
        Poly lf = Poly::linear_form(g);
        for (long long i = 0; i < m; ++i) weight_factor *= lf;
    }
    Poly base = input * weight_factor;
    Poly total(rd.rank);
    for (const auto& m : weyl) {
        int eps = 1;
        std::vector<bool> hit(pair_reps.size(), false);
        for (const auto& beta : phi_neg) {
            IVec img = apply_mat_right(beta, m);
            auto it = rep_index.find(img);
            if (it == rep_index.end()) {
                IVec neg(img.size());
                for (size_t j = 0; j < img.size(); ++j) neg[j] = -img[j];
                it = rep_index.find(neg);
                if (it == rep_index.end())
                    throw induction_error("root image is not a root");
                eps = -eps;
            }
            if (hit[it->second])
                throw induction_error("denominator multiset degenerated");
            hit[it->second] = true;
        }
        Poly term = base.compose_linear(m);
        for (size_t i = 0; i < pair_reps.size(); ++i)
            if (!hit[i]) term *= Poly::linear_form(pair_reps[i]);
        total += Rat(eps) * term;
    }
    for (const auto& rep : pair_reps) {
        auto q = total.divide_exact(Poly::linear_form(rep));
        if (!q)
            throw induction_error(
                "Weyl sum is not divisible by the root product (precondition violated)");
        total = *q;
    }
    InductionResult out;
    out.value = Rat(1, (long long)levi.weyl_subgroup.size()) * total;
    out.shift = d_sigma;
    out.chamber_id = chamber_id;
    // the image lands in W-invariants
    for (size_t i = 0; i < rd.simple.size(); ++i)
        if (out.value.compose_linear(rd.reflection(rd.simple[i])) != out.value)
            throw induction_error("induction output is not Weyl invariant");
    return out;
}

// Chamber-independent induction on the sgn-isotypic part: computed along the
// first chamber and re-derived along a second one as a consistency check.
inline InductionResult symmetric_induction(const RootDatum& rd, const WeightMultiset& v,
                                           const Face& f, const Poly& input,
                                           const std::vector<IMat>& weyl) {
    auto chambers = chambers_in_face(f);
    auto aut = relative_weyl(rd, f.basis, weyl);
    auto sgn = sign_representation(rd, v, f, aut, chambers);
    if (!sgn.symmetric_on_face)
        throw induction_error("symmetric induction requires a numerically symmetric V");
    // isotypic check: w acting on the input matches sgn of its class
    for (size_t si = 0; si < aut.stabilizer.size(); ++si) {
        int s = sgn.values[aut.action_of[si]];
        Poly moved = input.compose_linear(aut.stabilizer[si]);
        if (moved != Rat(s) * input)
            throw induction_error("input is not in the sign-isotypic part");
    }
    InductionResult r0 = induction(rd, v, f, chambers, 0, input, weyl);
    if (chambers.size() > 1) {
        InductionResult r1 = induction(rd, v, f, chambers, 1, input, weyl);
        int d = cotangent_distance(rd, v, f, chambers[0], chambers[1]).value;
        Poly expect = d == 0 ? r1.value : Rat(-1) * r1.value;
        if (r0.value != expect || r0.shift != r1.shift)
            throw induction_error("chamber dependence detected in symmetric induction");
    }
    return r0;
}

struct BgDegreeReport {
    long long cohomological_degree = 0;
    size_t source_dim = 0;
    size_t target_dim = 0;
    size_t image_rank = 0;
    bool pass = false;
};

struct BgReport {
    std::vector<BgDegreeReport> rows;
    bool pass = true;
};

namespace detail {

inline std::vector<std::vector<int>> monomials_of_degree(size_t nvars, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    // lexicographic enumeration of compositions of d into nvars parts
    struct Rec {
        size_t nvars;
        int d;
        std::vector<std::vector<int>>& out;
        void go(std::vector<int>& cur, size_t i, int rem) {
            if (i + 1 == nvars) {
                cur[i] = rem;
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[i] = v;
                go(cur, i + 1, rem - v);
            }
        }
    } rec{nvars, d, out};
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec.go(cur, 0, d);
    return out;
}

inline QVec poly_coeff_vector(const Poly& p, const std::vector<std::vector<int>>& monos) {
    QVec v(monos.size(), Rat(0));
    for (size_t i = 0; i < monos.size(); ++i) v[i] = p.coeff(monos[i]);
    return v;
}

}  // namespace detail

// Degree-by-degree bijectivity of the induction from the sign-isotypic part
// of H*(BT) onto H*(BG), verified against the Molien series of the
// fundamental degrees.  V is the adjoint representation and F the full
// Cartan, so the isotypic projector really is computed from the computed
// sign character, not assumed trivial.
inline BgReport check_integrality_bg(const RootDatum& rd, long long degree_bound,
                                     const std::vector<IMat>& weyl) {
    if (degree_bound % 2 != 0) throw induction_error("degree bound must be even");
    WeightMultiset v = WeightMultiset::adjoint(rd);
    Arrangement arr = arrangement(rd, v);
    QMat full(rd.rank, QVec(rd.rank, Rat(0)));
    for (size_t i = 0; i < rd.rank; ++i) full[i][i] = Rat(1);
    Face f = make_face(arr, full);
    auto chambers = chambers_in_face(f);
    auto aut = relative_weyl(rd, f.basis, weyl);
    auto sgn = sign_representation(rd, v, f, aut, chambers);

    GradedSeries molien = molien_series(rd.degrees, degree_bound / 2 + 1);

    BgReport rep;
    for (long long k = 0; 2 * k <= degree_bound; ++k) {
        auto monos = detail::monomials_of_degree(rd.rank, (int)k);
        // project monomials onto the sgn-isotypic subspace
        QMat projected;
        std::vector<Poly> basis_polys;
        for (const auto& e : monos) {
            Poly mono(rd.rank);
            mono.add_term(e, Rat(1));
            Poly proj(rd.rank);
            for (size_t si = 0; si < aut.stabilizer.size(); ++si) {
                Rat s = Rat(sgn.values[aut.action_of[si]]);
                proj += s * mono.compose_linear(aut.stabilizer[si]);
            }
            proj = Rat(1, (long long)aut.stabilizer.size()) * proj;
            if (proj.is_zero()) continue;
            projected.push_back(detail::poly_coeff_vector(proj, monos));
            basis_polys.push_back(proj);
        }
        // independent subset
        std::vector<Poly> basis;
        {
            // recover independent rows greedily
            QMat acc;
            for (size_t i = 0; i < projected.size(); ++i) {
                QMat test = acc;
                test.push_back(projected[i]);
                if (rank_of(test) > acc.size()) {
                    acc.push_back(projected[i]);
                    basis.push_back(basis_polys[i]);
                }
            }
        }
        size_t source_dim = basis.size();
        // apply induction and measure the image rank in degree k - d_sigma
        QMat images;
        long long shift = 0;
        auto out_monos = monos;  // d_sigma = 0 for the adjoint, asserted below
        for (const auto& b : basis) {
            InductionResult r = induction(rd, v, f, chambers, 0, b, weyl);
            shift = r.shift;
            if (shift != 0) throw induction_error("adjoint induction must have zero shift");
            images.push_back(detail::poly_coeff_vector(r.value, out_monos));
        }
        size_t image_rank = images.empty() ? 0 : rank_of(images);
        Rat target = molien.coeff({}, 2 * k);
        size_t target_dim = (size_t)target.to_longlong_exact();
        BgDegreeReport row;
        row.cohomological_degree = 2 * k;
        row.source_dim = source_dim;
        row.target_dim = target_dim;
        row.image_rank = image_rank;
        row.pass = source_dim == target_dim && image_rank == target_dim;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace cohint
