// Root data for the supported reductive groups: construction from Cartan
// tables, Weyl group enumeration as integer matrices on the cocharacter
// lattice, Levi subgroups of rational subspaces, relative Weyl groups and
// fundamental degrees.
//
// Conventions.  The cocharacter lattice is Z^rank.  Roots are integer
// covectors (rows) on it, coroots integer vectors (columns), and
// <alpha, beta^vee> is the plain dot product of those coordinate vectors.
// A Weyl element acts on cocharacters as v -> M v and on covectors as
// gamma -> gamma M.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohint/linalg.hpp"

namespace cohint {

struct rootdatum_error : std::runtime_error {
    explicit rootdatum_error(const std::string& w) : std::runtime_error(w) {}
};

enum class Isogeny { SimplyConnected, Adjoint, GL };

struct FactorSpec {
    char type = 'A';  // A, B, C, D, G, F, E
    int rank = 1;     // Cartan rank (for GL form of A_{n-1}, rank = n - 1)
    Isogeny isogeny = Isogeny::SimplyConnected;
};

struct GroupSpec {
    std::vector<FactorSpec> factors;
    int central_torus = 0;
};

struct RootDatum {
    size_t rank = 0;                  // dim of the cocharacter lattice
    std::vector<IVec> roots;          // all roots, as covectors
    std::vector<IVec> coroots;        // parallel list
    std::vector<size_t> simple;       // indices of the simple roots
    IVec regular_cocharacter;         // strictly dominant: alpha_i > 0 on it
    std::vector<int> degrees;         // fundamental degrees, incl. 1 per central dim
    long long weyl_order = 1;
    std::string label;

    size_t positive_count() const { return roots.size() / 2; }
    bool is_positive(const IVec& root) const { return idot(root, regular_cocharacter) > 0; }

    IVec simple_root(size_t i) const { return roots[simple[i]]; }
    IVec simple_coroot(size_t i) const { return coroots[simple[i]]; }

    // reflection in the i-th listed root, as a matrix on the cocharacter lattice:
    // v -> v - <alpha, v> alpha^vee
    IMat reflection(size_t root_index) const {
        const IVec& a = roots[root_index];
        const IVec& av = coroots[root_index];
        IMat m = identity_mat(rank);
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j) m[i][j] -= av[i] * a[j];
        return m;
    }

    // sum of positive coroots (2 rho^vee)
    IVec two_rho_check() const {
        IVec s(rank, 0);
        for (size_t i = 0; i < roots.size(); ++i) {
            if (!is_positive(roots[i])) continue;
            for (size_t j = 0; j < rank; ++j) s[j] += coroots[i][j];
        }
        return s;
    }
    // sum of positive roots (2 rho), as a covector
    IVec two_rho() const {
        IVec s(rank, 0);
        for (size_t i = 0; i < roots.size(); ++i) {
            if (!is_positive(roots[i])) continue;
            for (size_t j = 0; j < rank; ++j) s[j] += roots[i][j];
        }
        return s;
    }

    int root_index_of(const IVec& r) const {
        for (size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == r) return (int)i;
        return -1;
    }
};

namespace detail {

// Cartan pairing tables: cart[i][j] = <alpha_i, alpha_j^vee>.
inline std::vector<std::vector<int>> cartan_table(char type, int n) {
    auto bond = [](std::vector<std::vector<int>>& c, int i, int j, int cij, int cji) {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (type) {
        case 'A':
            if (n < 0) throw rootdatum_error("A_n requires n >= 0");
            for (int i = 0; i + 1 < n; ++i) bond(c, i, i + 1, -1, -1);
            return c;
        case 'B':  // alpha_{n-1} long, alpha_n short: <a_{n-1}, a_n^vee> = -2
            if (n < 2) throw rootdatum_error("B_n requires n >= 2");
            for (int i = 0; i + 1 < n; ++i) bond(c, i, i + 1, -1, -1);
            bond(c, n - 2, n - 1, -2, -1);
            return c;
        case 'C':
            if (n < 3) throw rootdatum_error("C_n requires n >= 3");
            for (int i = 0; i + 1 < n; ++i) bond(c, i, i + 1, -1, -1);
            bond(c, n - 2, n - 1, -1, -2);
            return c;
        case 'D':
            if (n < 4) throw rootdatum_error("D_n requires n >= 4");
            for (int i = 0; i + 2 < n; ++i) bond(c, i, i + 1, -1, -1);
            bond(c, n - 3, n - 1, -1, -1);
            return c;
        case 'G':
            if (n != 2) throw rootdatum_error("G type has rank 2");
            bond(c, 0, 1, -1, -3);  // alpha_0 long, alpha_1 short
            return c;
        case 'F':
            if (n != 4) throw rootdatum_error("F type has rank 4");
            bond(c, 0, 1, -1, -1);
            bond(c, 1, 2, -2, -1);  // double bond, alpha_1 long
            bond(c, 2, 3, -1, -1);
            return c;
        case 'E':
            if (n != 6)
                throw rootdatum_error(
                    "E type: only E6 is supported (E7/E8 Weyl groups exceed the "
                    "enumeration contract)");
            {
                // Bourbaki: node 1-3-4-5-6 chain, node 2 attached to node 4
                std::vector<std::pair<int, int>> edges = {
                    {0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
                for (auto [i, j] : edges) bond(c, i, j, -1, -1);
            }
            return c;
        default:
            throw rootdatum_error(std::string("unknown Cartan type '") + type + "'");
    }
}

inline std::vector<int> degrees_table(char type, int n) {
    std::vector<int> d;
    switch (type) {
        case 'A':
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            return d;
        case 'B':
        case 'C':
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            return d;
        case 'D':
            for (int i = 1; i + 1 <= n; ++i) d.push_back(2 * i);
            d.push_back(n);
            return d;
        case 'G':
            return {2, 6};
        case 'F':
            return {2, 6, 8, 12};
        case 'E':
            return {2, 5, 6, 8, 9, 12};
        default:
            throw rootdatum_error("no degrees table for type");
    }
}

// Simple roots/coroots of one factor in its own lattice coordinates.
// Returns (lattice dim, simple roots as covectors, simple coroots as vectors).
struct FactorLattice {
    size_t dim;
    std::vector<IVec> simple_roots;
    std::vector<IVec> simple_coroots;
};

inline FactorLattice factor_lattice(const FactorSpec& f) {
    auto cart = cartan_table(f.type, f.rank);
    int n = f.rank;
    FactorLattice out;
    if (f.isogeny == Isogeny::GL) {
        if (f.type != 'A')
            throw rootdatum_error("GL isogeny form only exists for type A");
        out.dim = (size_t)n + 1;  // GL_{n+1}: lattice Z^{n+1}, roots e_i - e_j
        for (int i = 0; i < n; ++i) {
            IVec r((size_t)n + 1, 0), cr((size_t)n + 1, 0);
            r[i] = 1;
            r[i + 1] = -1;
            cr[i] = 1;
            cr[i + 1] = -1;
            out.simple_roots.push_back(r);
            out.simple_coroots.push_back(cr);
        }
        return out;
    }
    out.dim = (size_t)n;
    if (f.isogeny == Isogeny::SimplyConnected) {
        // basis = simple coroots; alpha_i has coordinates cart[i][*]
        for (int i = 0; i < n; ++i) {
            IVec r(cart[i].begin(), cart[i].end());
            IVec cr((size_t)n, 0);
            cr[i] = 1;
            out.simple_roots.push_back(r);
            out.simple_coroots.push_back(cr);
        }
    } else {
        // adjoint: basis = fundamental coweights; alpha_i = e_i,
        // alpha_i^vee = column i of the Cartan table
        for (int i = 0; i < n; ++i) {
            IVec r((size_t)n, 0);
            r[i] = 1;
            IVec cr((size_t)n, 0);
            for (int j = 0; j < n; ++j) cr[j] = cart[j][i];
            out.simple_roots.push_back(r);
            out.simple_coroots.push_back(cr);
        }
    }
    return out;
}

}  // namespace detail

// Close the simple roots under simple reflections; returns all (root, coroot)
// pairs.  The closure is finite for the supported tables.
inline void generate_all_roots(RootDatum& rd) {
    std::set<IVec> seen;
    std::vector<std::pair<IVec, IVec>> queue;
    for (size_t i : rd.simple) {
        if (seen.insert(rd.roots[i]).second) queue.emplace_back(rd.roots[i], rd.coroots[i]);
    }
    std::vector<IMat> refl;
    std::vector<IVec> refl_root, refl_coroot;
    for (size_t i : rd.simple) {
        refl_root.push_back(rd.roots[i]);
        refl_coroot.push_back(rd.coroots[i]);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [r, cr] = queue[qi];
        for (size_t s = 0; s < refl_root.size(); ++s) {
            // s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i  (on covectors)
            long long pairing = idot(r, refl_coroot[s]);
            IVec nr = r;
            for (size_t j = 0; j < rd.rank; ++j) nr[j] -= pairing * refl_root[s][j];
            // s_i(v) = v - <alpha_i, v> alpha_i^vee  (on vectors)
            long long pairing2 = idot(refl_root[s], cr);
            IVec ncr = cr;
            for (size_t j = 0; j < rd.rank; ++j) ncr[j] -= pairing2 * refl_coroot[s][j];
            if (seen.insert(nr).second) queue.emplace_back(nr, ncr);
        }
        if (queue.size() > 4096) throw rootdatum_error("root closure runaway");
    }
    // rebuild the lists: simple roots first (stable indices), then the rest,
    // then all negatives
    std::vector<IVec> roots, coroots;
    std::set<IVec> emitted;
    for (size_t i : rd.simple) {
        roots.push_back(rd.roots[i]);
        coroots.push_back(rd.coroots[i]);
        emitted.insert(rd.roots[i]);
    }
    std::sort(queue.begin(), queue.end());
    for (auto& [r, cr] : queue) {
        if (emitted.count(r)) continue;
        IVec neg(r.size());
        for (size_t j = 0; j < r.size(); ++j) neg[j] = -r[j];
        if (emitted.count(neg)) continue;  // negatives appended below
        emitted.insert(r);
        roots.push_back(r);
        coroots.push_back(cr);
    }
    size_t pos = roots.size();
    for (size_t i = 0; i < pos; ++i) {
        IVec nr(rd.rank), ncr(rd.rank);
        for (size_t j = 0; j < rd.rank; ++j) {
            nr[j] = -roots[i][j];
            ncr[j] = -coroots[i][j];
        }
        roots.push_back(nr);
        coroots.push_back(ncr);
    }
    std::vector<size_t> simple_idx(rd.simple.size());
    for (size_t i = 0; i < rd.simple.size(); ++i) simple_idx[i] = i;
    rd.roots = std::move(roots);
    rd.coroots = std::move(coroots);
    rd.simple = std::move(simple_idx);
}

inline RootDatum build_root_datum(const GroupSpec& spec) {
    RootDatum rd;
    if (spec.central_torus < 0) throw rootdatum_error("central torus rank must be >= 0");
    std::vector<detail::FactorLattice> lats;
    size_t total = (size_t)spec.central_torus;
    for (const auto& f : spec.factors) {
        lats.push_back(detail::factor_lattice(f));
        total += lats.back().dim;
    }
    rd.rank = total;
    size_t off = 0;
    std::string label;
    for (size_t fi = 0; fi < spec.factors.size(); ++fi) {
        const auto& f = spec.factors[fi];
        const auto& lat = lats[fi];
        for (size_t s = 0; s < lat.simple_roots.size(); ++s) {
            IVec r(total, 0), cr(total, 0);
            for (size_t j = 0; j < lat.dim; ++j) {
                r[off + j] = lat.simple_roots[s][j];
                cr[off + j] = lat.simple_coroots[s][j];
            }
            rd.simple.push_back(rd.roots.size());
            rd.roots.push_back(r);
            rd.coroots.push_back(cr);
        }
        off += lat.dim;
        if (!label.empty()) label += " x ";
        if (f.isogeny == Isogeny::GL)
            label += "GL" + std::to_string(f.rank + 1);
        else {
            label += std::string(1, f.type) + std::to_string(f.rank);
            label += f.isogeny == Isogeny::Adjoint ? " (adjoint)" : " (simply connected)";
        }
        auto degs = detail::degrees_table(f.type, f.rank);
        if (f.isogeny == Isogeny::GL) degs.insert(degs.begin(), 1);
        rd.degrees.insert(rd.degrees.end(), degs.begin(), degs.end());
    }
    for (int i = 0; i < spec.central_torus; ++i) rd.degrees.push_back(1);
    if (spec.central_torus > 0) {
        if (!label.empty()) label += " x ";
        label += "T" + std::to_string(spec.central_torus);
    }
    rd.label = label.empty() ? "T0" : label;
    generate_all_roots(rd);
    // strictly dominant cocharacter: alpha_i > 0 for all simple i, found on a
    // deterministic moment-like curve
    {
        QMat gs;
        for (size_t i : rd.simple) gs.push_back(to_qvec(rd.roots[i]));
        rd.regular_cocharacter.assign(rd.rank, 0);
        if (!gs.empty()) {
            auto w = strict_feasible_point(gs, rd.rank);
            if (!w) throw rootdatum_error("no regular cocharacter found");
            // clear denominators to an integer vector
            BigInt lcm(1);
            for (const auto& c : *w) {
                BigInt g = BigInt::gcd(lcm, c.den());
                lcm = lcm / g * c.den();
            }
            for (size_t j = 0; j < rd.rank; ++j)
                rd.regular_cocharacter[j] =
                    ((*w)[j].num() * (lcm / (*w)[j].den())).to_longlong();
        }
    }
    long long order = 1;
    for (int d : rd.degrees) order *= d;
    rd.weyl_order = order;
    return rd;
}

// Breadth-first closure of the simple reflections; deterministic order
// (identity first, then by word length, ties by matrix lexicographic order).
inline std::vector<IMat> weyl_elements(const RootDatum& rd, long long bound = 1 << 20) {
    if (rd.weyl_order > bound)
        throw rootdatum_error("Weyl group order " + std::to_string(rd.weyl_order) +
                              " exceeds the enumeration bound");
    std::vector<IMat> gens;
    for (size_t i : rd.simple) gens.push_back(rd.reflection(i));
    std::vector<IMat> elems{identity_mat(rd.rank)};
    std::set<IMat> seen{elems[0]};
    std::vector<IMat> frontier = elems;
    while (!frontier.empty()) {
        std::vector<IMat> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                IMat p = mat_mul(g, m);
                if (seen.insert(p).second) next.push_back(p);
            }
        std::sort(next.begin(), next.end());
        elems.insert(elems.end(), next.begin(), next.end());
        if ((long long)elems.size() > bound)
            throw rootdatum_error("Weyl closure exceeded the bound");
        frontier = std::move(next);
    }
    if ((long long)elems.size() != rd.weyl_order)
        throw rootdatum_error("Weyl closure size disagrees with the degree product");
    return elems;
}

// Sub-root-datum of roots vanishing identically on a rational subspace F
// (given by basis rows), together with its Weyl subgroup.
struct LeviDatum {
    QMat subspace;                    // canonical basis of F
    std::vector<size_t> root_indices; // roots of the Levi, indices into rd.roots
    std::vector<IMat> weyl_subgroup;  // W_L, enumerated
    std::string label;
};

inline LeviDatum levi_of_subspace(const RootDatum& rd, const QMat& f_basis) {
    LeviDatum ld;
    ld.subspace = row_space_basis(f_basis);
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        bool vanishes = true;
        for (const auto& v : ld.subspace)
            if (!dot_iq(rd.roots[i], v).is_zero()) vanishes = false;
        if (vanishes) ld.root_indices.push_back(i);
    }
    // closure of the reflections in the vanishing roots
    std::vector<IMat> gens;
    for (size_t i : ld.root_indices) gens.push_back(rd.reflection(i));
    std::vector<IMat> elems{identity_mat(rd.rank)};
    std::set<IMat> seen{elems[0]};
    for (size_t qi = 0; qi < elems.size(); ++qi)
        for (const auto& g : gens) {
            IMat p = mat_mul(g, elems[qi]);
            if (seen.insert(p).second) elems.push_back(p);
            if (elems.size() > (size_t)rd.weyl_order)
                throw rootdatum_error("Levi Weyl closure runaway");
        }
    ld.weyl_subgroup = std::move(elems);
    ld.label = "Levi[" + std::to_string(ld.root_indices.size() / 2) + " pos roots]";
    return ld;
}

// Elements of W stabilizing F setwise, and their induced action on F.
struct RelativeWeyl {
    QMat subspace;                   // canonical basis of F (rows)
    std::vector<IMat> stabilizer;    // all w with w(F) = F
    std::vector<QMat> action_on_f;   // induced matrices on F-coordinates, deduped
    std::vector<size_t> action_of;   // stabilizer index -> index into action_on_f
    size_t order() const { return action_on_f.size(); }
};

// The matrix of w restricted to F in the given basis: w . f_i = sum_j m[i][j] f_j.
inline std::optional<QMat> restrict_to_subspace(const IMat& w, const QMat& basis) {
    QMat m;
    for (const auto& f : basis) {
        QVec img = apply_mat_q(w, f);
        auto c = coordinates_in_basis(basis, img);
        if (!c) return std::nullopt;
        m.push_back(*c);
    }
    return m;
}

inline RelativeWeyl relative_weyl(const RootDatum& rd, const QMat& f_basis,
                                  const std::vector<IMat>& weyl) {
    (void)rd;
    RelativeWeyl rw;
    rw.subspace = row_space_basis(f_basis);
    for (const auto& w : weyl) {
        auto m = restrict_to_subspace(w, rw.subspace);
        if (!m) continue;
        rw.stabilizer.push_back(w);
        size_t idx = rw.action_on_f.size();
        for (size_t i = 0; i < rw.action_on_f.size(); ++i)
            if (rw.action_on_f[i] == *m) {
                idx = i;
                break;
            }
        if (idx == rw.action_on_f.size()) rw.action_on_f.push_back(*m);
        rw.action_of.push_back(idx);
    }
    return rw;
}

inline std::vector<int> fundamental_degrees(const RootDatum& rd) { return rd.degrees; }

}  // namespace cohint
