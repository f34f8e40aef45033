// The combinatorial component lattice of V/G: the hyperplane arrangement
// spanned by roots and weights, its intersection subspaces up to the Weyl
// action, chambers of restricted arrangements with exact interior witnesses,
// the mod-2 cotangent distance, the sign character of the face automorphism
// group, and the smallness margin for torus actions.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/linalg.hpp"
#include "cohint/rep_symmetry.hpp"
#include "cohint/root_datum.hpp"

namespace cohint {

struct facelat_error : std::runtime_error {
    explicit facelat_error(const std::string& w) : std::runtime_error(w) {}
};

inline long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// primitive normal form of a covector: divide by content, first nonzero > 0
inline IVec primitive_covector(IVec v) {
    long long g = 0;
    for (long long x : v) g = gcd_ll(g, x);
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    for (long long x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

struct Hyperplane {
    IVec normal;  // primitive covector; the hyperplane is its kernel
    bool from_weight = false;
    bool from_root = false;
};

struct Arrangement {
    size_t dim = 0;
    std::vector<Hyperplane> hyperplanes;
};

inline Arrangement arrangement(const RootDatum& rd, const WeightMultiset& v) {
    Arrangement arr;
    arr.dim = rd.rank;
    std::map<IVec, Hyperplane> seen;
    auto insert = [&seen](const IVec& raw, bool w, bool r) {
        IVec n = primitive_covector(raw);
        bool zero = true;
        for (long long x : n)
            if (x) zero = false;
        if (zero) return;
        auto& h = seen[n];
        h.normal = n;
        h.from_weight |= w;
        h.from_root |= r;
    };
    for (const auto& [g, m] : v.mult) insert(g, true, false);
    for (const auto& r : rd.roots) insert(r, false, true);
    for (auto& [n, h] : seen) arr.hyperplanes.push_back(h);
    return arr;
}

// F cap ker(h) for a subspace given by basis rows.
inline QMat cap_hyperplane(const QMat& basis, const IVec& h) {
    if (basis.empty()) return basis;
    size_t k = basis.size();
    QMat constraint(1, QVec(k));
    for (size_t i = 0; i < k; ++i) constraint[0][i] = dot_iq(h, basis[i]);
    QMat coeffs = null_space(constraint, k);
    QMat out;
    for (const auto& c : coeffs) {
        QVec v(basis[0].size(), Rat(0));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < v.size(); ++j) v[j] += c[i] * basis[i][j];
        out.push_back(v);
    }
    return row_space_basis(out);
}

struct Face {
    QMat basis;                         // canonical echelon basis of F
    std::vector<size_t> defining;       // hyperplanes containing F
    std::vector<IVec> walls;            // restricted covectors on F, primitive,
                                        // deduped up to sign (F coordinates)
    size_t dim() const { return basis.size(); }
};

inline Face make_face(const Arrangement& arr, const QMat& subspace) {
    Face f;
    f.basis = row_space_basis(subspace);
    std::map<IVec, bool> wall_set;
    for (size_t hi = 0; hi < arr.hyperplanes.size(); ++hi) {
        const auto& h = arr.hyperplanes[hi];
        IVec restr(f.basis.size());
        bool zero = true;
        QVec restr_q(f.basis.size());
        for (size_t i = 0; i < f.basis.size(); ++i) {
            restr_q[i] = dot_iq(h.normal, f.basis[i]);
            if (!restr_q[i].is_zero()) zero = false;
        }
        if (zero) {
            f.defining.push_back(hi);
            continue;
        }
        // clear denominators to a primitive integer covector on F
        BigInt lcm(1);
        for (const auto& c : restr_q) {
            BigInt g = BigInt::gcd(lcm, c.den());
            lcm = lcm / g * c.den();
        }
        for (size_t i = 0; i < f.basis.size(); ++i)
            restr[i] = (restr_q[i].num() * (lcm / restr_q[i].den())).to_longlong();
        wall_set[primitive_covector(restr)] = true;
    }
    for (const auto& [w, b] : wall_set) f.walls.push_back(w);
    return f;
}

// All intersection subspaces of the arrangement (the empty intersection, the
// full space, included), as canonical bases.
inline std::vector<QMat> intersection_subspaces(const Arrangement& arr) {
    QMat full(arr.dim, QVec(arr.dim, Rat(0)));
    for (size_t i = 0; i < arr.dim; ++i) full[i][i] = Rat(1);
    std::vector<QMat> out{row_space_basis(full)};
    std::set<QMat, bool (*)(const QMat&, const QMat&)> seen(subspace_less);
    seen.insert(out[0]);
    for (size_t qi = 0; qi < out.size(); ++qi) {
        QMat cur = out[qi];
        for (const auto& h : arr.hyperplanes) {
            QMat nxt = cap_hyperplane(cur, h.normal);
            if (nxt.size() == cur.size()) continue;  // h contains cur
            if (seen.insert(nxt).second) out.push_back(nxt);
        }
    }
    return out;
}

// lexicographically minimal canonical basis in the W-orbit
inline QMat orbit_minimum(const QMat& basis, const std::vector<IMat>& weyl) {
    QMat best = row_space_basis(basis);
    for (const auto& w : weyl) {
        QMat img;
        for (const auto& row : basis) img.push_back(apply_mat_q(w, row));
        img = row_space_basis(img);
        if (subspace_less(img, best)) best = img;
    }
    return best;
}

struct FaceClass {
    Face face;
    size_t orbit_size = 1;
    RelativeWeyl aut;
};

// Special faces of V/G up to the Weyl action, each with its automorphism
// group W_stab(F)/W_fix(F) acting on F.
inline std::vector<FaceClass> special_faces(const RootDatum& rd, const WeightMultiset& v,
                                            const std::vector<IMat>& weyl) {
    Arrangement arr = arrangement(rd, v);
    auto subs = intersection_subspaces(arr);
    std::map<QMat, std::pair<QMat, size_t>, bool (*)(const QMat&, const QMat&)> classes(
        subspace_less);  // orbit min -> (representative, orbit size)
    for (const auto& s : subs) {
        QMat rep = orbit_minimum(s, weyl);
        auto it = classes.find(rep);
        if (it == classes.end())
            classes[rep] = {rep, 1};
        else
            it->second.second += 1;
    }
    std::vector<FaceClass> out;
    for (auto& [rep, pr] : classes) {
        FaceClass fc;
        fc.face = make_face(arr, pr.first);
        fc.orbit_size = pr.second;
        fc.aut = relative_weyl(rd, pr.first, weyl);
        out.push_back(std::move(fc));
    }
    // largest faces first, then lexicographic
    std::sort(out.begin(), out.end(), [](const FaceClass& a, const FaceClass& b) {
        if (a.face.dim() != b.face.dim()) return a.face.dim() > b.face.dim();
        return subspace_less(a.face.basis, b.face.basis);
    });
    return out;
}

inline size_t central_rank(const RootDatum& rd, const WeightMultiset& v) {
    Arrangement arr = arrangement(rd, v);
    QMat normals;
    for (const auto& h : arr.hyperplanes) normals.push_back(to_qvec(h.normal));
    return null_space(normals, rd.rank).size();
}

struct Chamber {
    std::vector<int> signs;  // sign of each wall covector at the witness
    QVec witness;            // interior point in F coordinates
};

struct ChamberBounds {
    size_t max_dim = 4;
    size_t max_walls = 64;
};

// All chambers of the restricted arrangement on F, by incremental region
// subdivision with exact feasibility witnesses.  Deterministic order.
inline std::vector<Chamber> chambers_in_face(const Face& f,
                                             const ChamberBounds& bounds = {}) {
    size_t k = f.dim();
    if (k > bounds.max_dim)
        throw facelat_error("chamber enumeration: face dimension exceeds the bound");
    if (f.walls.size() > bounds.max_walls)
        throw facelat_error("chamber enumeration: wall count exceeds the bound");
    std::vector<Chamber> regions{{std::vector<int>{}, QVec(k, Rat(0))}};
    for (size_t wi = 0; wi < f.walls.size(); ++wi) {
        const IVec& h = f.walls[wi];
        std::vector<Chamber> next;
        for (const auto& reg : regions) {
            for (int side : {+1, -1}) {
                // feasibility of existing strict signs plus the new one
                QMat gs;
                for (size_t j = 0; j < wi; ++j) {
                    QVec g = to_qvec(f.walls[j]);
                    if (reg.signs[j] < 0)
                        for (auto& x : g) x = -x;
                    gs.push_back(g);
                }
                QVec g = to_qvec(h);
                if (side < 0)
                    for (auto& x : g) x = -x;
                gs.push_back(g);
                auto wpt = strict_feasible_point(gs, k);
                if (!wpt) continue;
                Chamber c = reg;
                c.signs.push_back(side);
                c.witness = *wpt;
                next.push_back(std::move(c));
            }
        }
        regions = std::move(next);
    }
    std::sort(regions.begin(), regions.end(),
              [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
    return regions;
}

// signs of every wall at a point of F; nullopt if some wall vanishes there
inline std::optional<std::vector<int>> wall_signs_at(const Face& f, const QVec& p) {
    std::vector<int> s(f.walls.size());
    for (size_t i = 0; i < f.walls.size(); ++i) {
        Rat v = dot_iq(f.walls[i], p);
        if (v.is_zero()) return std::nullopt;
        s[i] = v.sign() > 0 ? 1 : -1;
    }
    return s;
}

inline size_t chamber_index_of(const Face& f, const std::vector<Chamber>& chambers,
                               const QVec& p) {
    auto s = wall_signs_at(f, p);
    if (!s) throw facelat_error("point lies on a wall");
    for (size_t i = 0; i < chambers.size(); ++i)
        if (chambers[i].signs == *s) return i;
    throw facelat_error("no chamber matches the sign vector");
}

// Signed cotangent weights of V/G restricted to F: weights of V^vee in
// degree 0, roots in degree 1.
struct CotangentClass {
    std::vector<std::pair<IVec, long long>> dual_weights;  // restriction, multiplicity
    std::vector<IVec> roots;                               // restrictions of roots
    long long signed_rank = 0;                             // dim V - dim G
};

inline IVec restrict_covector(const IVec& gamma, const QMat& basis) {
    QVec restr_q(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) restr_q[i] = dot_iq(gamma, basis[i]);
    BigInt lcm(1);
    for (const auto& c : restr_q) {
        BigInt g = BigInt::gcd(lcm, c.den());
        lcm = lcm / g * c.den();
    }
    IVec restr(basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        restr[i] = (restr_q[i].num() * (lcm / restr_q[i].den())).to_longlong();
    return restr;
}

inline CotangentClass cotangent_class(const RootDatum& rd, const WeightMultiset& v,
                                      const Face& f) {
    CotangentClass cc;
    for (const auto& [g, m] : v.mult) {
        IVec dual(g.size());
        for (size_t j = 0; j < g.size(); ++j) dual[j] = -g[j];
        cc.dual_weights.emplace_back(restrict_covector(dual, f.basis), m);
        cc.signed_rank += m;
    }
    for (const auto& r : rd.roots) cc.roots.push_back(restrict_covector(r, f.basis));
    cc.signed_rank -= (long long)(rd.roots.size() + rd.rank);
    return cc;
}

// restriction of the weight multiset to F is numerically symmetric
inline bool restriction_symmetric(const WeightMultiset& v, const Face& f) {
    std::map<IVec, long long> restr;
    for (const auto& [g, m] : v.mult) restr[restrict_covector(g, f.basis)] += m;
    for (const auto& [g, m] : restr) {
        IVec neg(g.size());
        for (size_t j = 0; j < g.size(); ++j) neg[j] = -g[j];
        auto it = restr.find(neg);
        if ((it == restr.end() ? 0 : it->second) != m) return false;
    }
    return true;
}

struct CotangentDistance {
    int value = 0;  // in Z/2
    bool symmetric_on_face = true;
};

// Parity of the signed count of cotangent weights positive on sigma and
// negative on sigma', evaluated at the chambers' interior points.
inline CotangentDistance cotangent_distance(const RootDatum& rd, const WeightMultiset& v,
                                            const Face& f, const Chamber& sigma,
                                            const Chamber& sigma2) {
    if (sigma.signs.size() != f.walls.size() || sigma2.signs.size() != f.walls.size())
        throw facelat_error("cotangent_distance: chambers do not belong to this face");
    CotangentClass cc = cotangent_class(rd, v, f);
    long long count = 0;
    auto pos_neg = [&](const IVec& w) {
        Rat a = dot_iq(w, sigma.witness), b = dot_iq(w, sigma2.witness);
        return a.sign() > 0 && b.sign() < 0;
    };
    for (const auto& [w, m] : cc.dual_weights)
        if (pos_neg(w)) count += m;
    long long root_part = 0;
    for (const auto& r : cc.roots)
        if (pos_neg(r)) root_part += 1;
    CotangentDistance out;
    out.value = (int)(((count - root_part) % 2 + 2) % 2);
    out.symmetric_on_face = restriction_symmetric(v, f);
    // the parity does not depend on the sign given to the degree-1 part
    if ((((count + root_part) % 2 + 2) % 2) != out.value)
        throw facelat_error("cotangent distance parity is not sign-stable");
    return out;
}

struct SignRepresentation {
    std::vector<int> values;  // one per element of aut.action_on_f, each +-1
    bool symmetric_on_face = true;
};

// g -> (-1)^{d(sigma_0, g sigma_0)}; verified independent of the base chamber.
inline SignRepresentation sign_representation(const RootDatum& rd, const WeightMultiset& v,
                                              const Face& f, const RelativeWeyl& aut,
                                              const std::vector<Chamber>& chambers) {
    if (chambers.empty()) throw facelat_error("sign_representation: no chambers");
    SignRepresentation out;
    out.symmetric_on_face = restriction_symmetric(v, f);
    out.values.assign(aut.action_on_f.size(), 1);
    for (size_t base = 0; base < chambers.size(); ++base) {
        const Chamber& s0 = chambers[base];
        for (size_t gi = 0; gi < aut.action_on_f.size(); ++gi) {
            const QMat& m = aut.action_on_f[gi];
            // row vector of coordinates transforms as q_j = sum_i p_i m[i][j]
            QVec q(f.dim(), Rat(0));
            for (size_t j = 0; j < f.dim(); ++j)
                for (size_t i = 0; i < f.dim(); ++i) q[j] += s0.witness[i] * m[i][j];
            size_t target = chamber_index_of(f, chambers, q);
            int d = cotangent_distance(rd, v, f, s0, chambers[target]).value;
            int val = d == 0 ? 1 : -1;
            if (base == 0)
                out.values[gi] = val;
            else if (out.values[gi] != val)
                throw facelat_error("sign character depends on the base chamber");
        }
    }
    return out;
}

struct SmallnessReport {
    long long margin = 0;
    bool equality = false;
    long long dim_v = 0;
    long long max_positive = 0;
};

// dim V/T - 2 dim p^{-1}(0) for a torus representation given by weights.
// The empty multiset is the degenerate case: reported as margin 0 with the
// equality flag, the finite-stabilizer clause collapsing to rank 0.
inline SmallnessReport smallness_margin(const WeightMultiset& weights, size_t rank,
                                        const ChamberBounds& bounds = {}) {
    for (const auto& [g, m] : weights.mult)
        if (g.size() != rank) throw facelat_error("smallness_margin: rank mismatch");
    if (!is_symmetric(weights))
        throw facelat_error("smallness_margin: weights are not symmetric");
    SmallnessReport rep;
    rep.dim_v = weights.total_dim();
    if (weights.empty()) {
        rep.margin = 0;
        rep.equality = true;
        return rep;
    }
    // chambers of the weight arrangement in the full cocharacter space
    Arrangement arr;
    arr.dim = rank;
    std::map<IVec, bool> dedup;
    for (const auto& [g, m] : weights.mult) {
        IVec n = primitive_covector(g);
        bool zero = true;
        for (long long x : n)
            if (x) zero = false;
        if (!zero) dedup[n] = true;
    }
    for (const auto& [n, b] : dedup) arr.hyperplanes.push_back({n, true, false});
    QMat full(rank, QVec(rank, Rat(0)));
    for (size_t i = 0; i < rank; ++i) full[i][i] = Rat(1);
    Face f = make_face(arr, full);
    auto chambers = chambers_in_face(f, bounds);
    long long maxpos = 0;
    for (const auto& c : chambers) {
        long long pos = 0;
        for (const auto& [g, m] : weights.mult)
            if (dot_iq(g, c.witness).sign() > 0) pos += m;
        maxpos = std::max(maxpos, pos);
    }
    if (chambers.empty()) maxpos = 0;  // all weights zero
    rep.max_positive = maxpos;
    rep.margin = (rep.dim_v - (long long)rank) - 2 * (maxpos - (long long)rank);
    rep.equality = rep.margin == 0;
    return rep;
}

}  // namespace cohint
