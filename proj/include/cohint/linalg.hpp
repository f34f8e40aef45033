// Exact rational linear algebra: reduced row echelon form, rank, kernels,
// subspace operations, strict-feasibility LP (simplex, Bland's rule) and an
// integer linear solver for lattice membership questions.

#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "cohint/rational.hpp"

namespace cohint {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row major
using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

inline QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline Rat dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

inline long long idot(const IVec& a, const IVec& b) {
    assert(a.size() == b.size());
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot_iq(const IVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat s;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && !b[i].is_zero()) s += Rat(a[i]) * b[i];
    return s;
}

// v -> M v for an integer matrix acting on column vectors.
inline IVec apply_mat(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = idot(m[i], v);
    return r;
}

inline QVec apply_mat_q(const IMat& m, const QVec& v) {
    QVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot_iq(m[i], v);
    return r;
}

// covector row gamma -> gamma . M (action on covectors dual to v -> M v)
inline IVec apply_mat_right(const IVec& gamma, const IMat& m) {
    size_t n = m.empty() ? gamma.size() : m[0].size();
    IVec r(n, 0);
    for (size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (size_t i = 0; i < m.size(); ++i) s += gamma[i] * m[i][j];
        r[j] = s;
    }
    return r;
}

inline IMat identity_mat(size_t n) {
    IMat m(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    IMat r(n, IVec(mcols, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < mcols; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

// In-place reduced row echelon form.  Returns the list of pivot columns.
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = m[r][c].inv();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank_of(QMat m) { return rref(m).size(); }

// Canonical basis of the row space: RREF with zero rows dropped.
// Two subspaces are equal iff their canonical bases are identical.
inline QMat row_space_basis(QMat m) {
    auto pivots = rref(m);
    m.resize(pivots.size());
    return m;
}

// Basis of the null space { x : m x = 0 }, canonicalized.
inline QMat null_space(QMat m, size_t cols) {
    if (m.empty()) {
        QMat id(cols, QVec(cols, Rat(0)));
        for (size_t i = 0; i < cols; ++i) id[i][i] = Rat(1);
        return id;
    }
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    QMat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = Rat(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
        basis.push_back(v);
    }
    return row_space_basis(std::move(basis));
}

// Intersection of two row spaces (given by any spanning sets).
inline QMat subspace_intersection(const QMat& a, const QMat& b, size_t cols) {
    // x in A cap B  <=>  x ⟂ (ann A  ∪  ann B)
    QMat annA = null_space(a, cols);
    QMat annB = null_space(b, cols);
    QMat ann = annA;
    ann.insert(ann.end(), annB.begin(), annB.end());
    return null_space(ann, cols);
}

inline bool in_row_space(const QMat& basis, const QVec& v) {
    QMat m = basis;
    m.push_back(v);
    return rank_of(std::move(m)) == basis.size();
}

// Solve basis^T c = v, i.e. express v as a combination of the basis rows.
inline std::optional<QVec> coordinates_in_basis(const QMat& basis, const QVec& v) {
    size_t n = basis.size();
    if (n == 0) {
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        return QVec{};
    }
    size_t cols = v.size();
    // least-structure approach: augmented system over the basis rows
    QMat aug(cols, QVec(n + 1));
    for (size_t j = 0; j < cols; ++j) {
        for (size_t i = 0; i < n; ++i) aug[j][i] = basis[i][j];
        aug[j][n] = v[j];
    }
    auto pivots = rref(aug);
    QVec c(n, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt;  // inconsistent
        c[pivots[i]] = aug[i][n];
    }
    return c;
}

// Lexicographic comparison of canonical subspace bases (dimension first).
inline bool subspace_less(const QMat& a, const QMat& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] == b[i][j]) continue;
            return a[i][j] < b[i][j];
        }
    return false;
}

// ---------------------------------------------------------------------------
// Strict feasibility of homogeneous systems: find x with g.x > 0 for all g.
// Scaling reduces this to feasibility of g.x >= 1, solved by a phase-I
// simplex with Bland's rule (exact arithmetic, guaranteed termination).
// ---------------------------------------------------------------------------

namespace detail {

// max sum(slack-free) phase-I tableau for  A y = b, y >= 0  with artificials.
// Returns y if the system is feasible.
inline std::optional<QVec> phase1(const QMat& A, const QVec& b) {
    size_t m = A.size();
    size_t n = m == 0 ? 0 : A[0].size();
    // tableau rows: m constraint rows + objective row; columns: n vars +
    // m artificials + rhs
    size_t cols = n + m + 1;
    QMat T(m + 1, QVec(cols, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        bool neg = b[i].sign() < 0;
        for (size_t j = 0; j < n; ++j) T[i][j] = neg ? -A[i][j] : A[i][j];
        T[i][n + i] = Rat(1);
        T[i][cols - 1] = neg ? -b[i] : b[i];
    }
    // objective: minimize sum of artificials == maximize -sum
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    for (size_t j = 0; j < cols; ++j) {
        Rat s;
        for (size_t i = 0; i < m; ++i) s += T[i][j];
        T[m][j] = -s;  // reduced costs of phase-I objective
    }
    for (size_t i = 0; i < m; ++i) T[m][n + i] = Rat(0);

    while (true) {
        // Bland: entering = smallest index with negative reduced cost
        size_t enter = cols - 1;
        for (size_t j = 0; j + 1 < cols; ++j)
            if (T[m][j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == cols - 1) break;  // optimal
        // ratio test, Bland ties by smallest basis index
        size_t leave = m;
        Rat best;
        for (size_t i = 0; i < m; ++i) {
            if (T[i][enter].sign() <= 0) continue;
            Rat ratio = T[i][cols - 1] / T[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m) return std::nullopt;  // unbounded phase-I: cannot happen
        // pivot
        Rat piv = T[leave][enter].inv();
        for (size_t j = 0; j < cols; ++j) T[leave][j] *= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter].is_zero()) continue;
            Rat f = T[i][enter];
            for (size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    // feasible iff optimum of phase-I objective is 0
    if (!T[m][cols - 1].is_zero()) return std::nullopt;
    QVec y(n, Rat(0));
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n) y[basis[i]] = T[i][cols - 1];
        else if (!T[i][cols - 1].is_zero())
            return std::nullopt;  // artificial stuck at positive level
    }
    return y;
}

}  // namespace detail

// Witness x with g.x > 0 for every row g, or nullopt when infeasible.
inline std::optional<QVec> strict_feasible_point(const QMat& gs, size_t dim) {
    if (gs.empty()) return QVec(dim, Rat(0));
    // g.x >= 1 for all g; x = u - v with u, v >= 0; surplus s >= 0:
    //   g.(u - v) - s = 1
    size_t m = gs.size();
    QMat A(m, QVec(2 * dim + m, Rat(0)));
    QVec b(m, Rat(1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            A[i][j] = gs[i][j];
            A[i][dim + j] = -gs[i][j];
        }
        A[i][2 * dim + i] = Rat(-1);
    }
    auto y = detail::phase1(A, b);
    if (!y) return std::nullopt;
    QVec x(dim);
    for (size_t j = 0; j < dim; ++j) x[j] = (*y)[j] - (*y)[dim + j];
    return x;
}

// ---------------------------------------------------------------------------
// Integer linear algebra: solvability of A y = b over the integers
// (column-style Hermite elimination; A rational input is cleared to integers).
// ---------------------------------------------------------------------------

inline bool integer_solvable(const QMat& A, const QVec& b) {
    size_t m = A.size();
    if (m == 0) return true;
    size_t n = A[0].size();
    // Scale each equation by the lcm of its denominators (solution set for
    // integer y unchanged).
    std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(n));
    std::vector<BigInt> rhs(m);
    for (size_t i = 0; i < m; ++i) {
        BigInt lcm(1);
        auto lcm_with = [&lcm](const BigInt& d) {
            BigInt g = BigInt::gcd(lcm, d);
            lcm = lcm / g * d;
        };
        for (size_t j = 0; j < n; ++j) lcm_with(A[i][j].den());
        lcm_with(b[i].den());
        for (size_t j = 0; j < n; ++j) M[i][j] = A[i][j].num() * (lcm / A[i][j].den());
        rhs[i] = b[i].num() * (lcm / b[i].den());
    }
    // Column Hermite elimination: unimodular column operations bring M to a
    // lower-triangular-by-columns form H; A y = b solvable over Z iff
    // H z = b is, which forward substitution decides.
    size_t lead = 0;
    std::vector<long long> pivot_row_of_col(n, -1);
    for (size_t i = 0; i < m && lead < n; ++i) {
        // reduce columns >= lead so at most one has a nonzero entry in row i
        while (true) {
            size_t jmin = n;
            for (size_t j = lead; j < n; ++j)
                if (!M[i][j].is_zero() && (jmin == n || M[i][j].abs() < M[i][jmin].abs()))
                    jmin = j;
            if (jmin == n) break;  // row i zero past lead
            bool others = false;
            for (size_t j = lead; j < n; ++j) {
                if (j == jmin || M[i][j].is_zero()) continue;
                others = true;
                BigInt q = M[i][j] / M[i][jmin];
                for (size_t k = 0; k < m; ++k) M[k][j] -= q * M[k][jmin];
            }
            if (!others) {
                for (size_t k = 0; k < m; ++k) std::swap(M[k][jmin], M[k][lead]);
                pivot_row_of_col[lead] = (long long)i;
                ++lead;
                break;
            }
        }
    }
    // forward substitution
    std::vector<BigInt> z(n, BigInt(0));
    std::vector<BigInt> residual = rhs;
    size_t col = 0;
    for (size_t i = 0; i < m; ++i) {
        if (col < lead && pivot_row_of_col[col] == (long long)i) {
            BigInt piv = M[i][col];
            BigInt rem = residual[i] % piv;
            if (!rem.is_zero()) return false;
            z[col] = residual[i] / piv;
            for (size_t k = i; k < m; ++k) residual[k] -= z[col] * M[k][col];
            ++col;
        } else if (!residual[i].is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace cohint
