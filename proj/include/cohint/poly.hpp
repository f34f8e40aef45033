// Sparse multivariate polynomials over Q, with the linear substitutions and
// exact division needed by the Weyl-sum induction operator.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cohint/linalg.hpp"
#include "cohint/rational.hpp"

namespace cohint {

// Exponent vectors compared degree-lexicographically (total degree first).
struct DegLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

class Poly {
  public:
    using Terms = std::map<std::vector<int>, Rat, DegLexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(size_t nvars) : nvars_(nvars) {}

    static Poly constant(size_t nvars, const Rat& c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static Poly variable(size_t nvars, size_t i, const Rat& c = Rat(1)) {
        Poly p(nvars);
        if (!c.is_zero()) {
            std::vector<int> e(nvars, 0);
            e[i] = 1;
            p.terms_[e] = c;
        }
        return p;
    }
    // the linear form  v -> gamma . v
    static Poly linear_form(const QVec& gamma) {
        Poly p(gamma.size());
        for (size_t i = 0; i < gamma.size(); ++i)
            if (!gamma[i].is_zero()) {
                std::vector<int> e(gamma.size(), 0);
                e[i] = 1;
                p.terms_[e] = gamma[i];
            }
        return p;
    }
    static Poly linear_form(const IVec& gamma) { return linear_form(to_qvec(gamma)); }

    size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int degree() const {  // -1 for the zero polynomial
        if (terms_.empty()) return -1;
        const auto& e = terms_.rbegin()->first;
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (d < 0) d = t;
            if (t != d) return false;
        }
        return true;
    }

    Poly homogeneous_part(int d) const {
        Poly p(nvars_);
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t == d) p.terms_[e] = c;
        }
        return p;
    }

    void add_term(const std::vector<int>& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_[e] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(a.nvars_);
                for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& a) {
        Poly r(a.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : a.terms_) r.terms_[e] = c * v;
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const QVec& x) const {
        Rat s;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    // f(M v): substitute x_i -> sum_j M[i][j] x_j.
    Poly compose_linear(const IMat& m) const {
        std::vector<Poly> images;
        images.reserve(nvars_);
        for (size_t i = 0; i < nvars_; ++i) {
            QVec row(nvars_);
            for (size_t j = 0; j < nvars_; ++j) row[j] = Rat(m[i][j]);
            images.push_back(linear_form(row));
        }
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Poly t = constant(nvars_, c);
            for (size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= images[i];
            r += t;
        }
        return r;
    }

    // Exact division: returns the quotient if divisor divides *this exactly.
    std::optional<Poly> divide_exact(const Poly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly rem = *this, q(nvars_);
        auto lead = *divisor.terms_.rbegin();
        while (!rem.is_zero()) {
            auto lt = *rem.terms_.rbegin();
            std::vector<int> e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) {
                e[i] = lt.first[i] - lead.first[i];
                if (e[i] < 0) return std::nullopt;
            }
            Rat c = lt.second / lead.second;
            Poly mono(nvars_);
            mono.terms_[e] = c;
            q += mono;
            rem -= mono * divisor;
        }
        return q;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) s += " + ";
            first = false;
            s += it->second.to_string();
            for (size_t i = 0; i < nvars_; ++i) {
                if (it->first[i] == 0) continue;
                s += "*";
                s += names.empty() ? ("x" + std::to_string(i)) : names[i];
                if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
            }
        }
        return s;
    }

  private:
    size_t nvars_;
    Terms terms_;
};

}  // namespace cohint
