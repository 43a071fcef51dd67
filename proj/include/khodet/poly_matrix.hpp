#pragma once

// Matrices over F_2[t,t^-1]: Smith normal form (the ring is a PID),
// determinants by fraction-free elimination, rank over the fraction field.

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "laurent.hpp"

namespace khodet {

class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static PolyMatrix identity(int n) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
        return m;
    }
    static PolyMatrix from_f2(const F2Matrix& a, int y_power = 0) {
        PolyMatrix m(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a.get(i, j)) m.at(i, j) = LaurentPoly::monomial(y_power);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    LaurentPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }
    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    PolyMatrix operator+(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("PolyMatrix: dimension mismatch in sum");
        PolyMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    PolyMatrix operator*(const PolyMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
        PolyMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const LaurentPoly& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const LaurentPoly& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }
    PolyMatrix scaled(const LaurentPoly& s) const {
        PolyMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }
    PolyMatrix transpose() const {
        PolyMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    PolyMatrix hasse(int n) const {
        PolyMatrix r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].hasse(n);
        return r;
    }
    int max_degree() const {  // largest degree over nonzero entries, 0 if none
        int d = 0;
        bool any = false;
        for (const auto& p : e_)
            if (!p.is_zero()) { d = any ? std::max(d, p.degree()) : p.degree(); any = true; }
        return any ? d : 0;
    }
    F2Matrix eval_at_one() const {
        F2Matrix m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j).eval_at_one()) m.set(i, j, true);
        return m;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += "[ ";
            for (int j = 0; j < cols_; ++j) { s += at(i, j).str(); s += j + 1 < cols_ ? ", " : " "; }
            s += "]\n";
        }
        return s;
    }

  private:
    int rows_, cols_;
    std::vector<LaurentPoly> e_;
};

struct SmithNormalForm {
    PolyMatrix u, d, v; // u * m * v = d
    int rank = 0;       // nonzero diagonal entries
    std::vector<LaurentPoly> diagonal() const {
        std::vector<LaurentPoly> out;
        for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
        return out;
    }
};

// Valuation-reduction pivoting: strip monomial units, then the Euclidean
// algorithm on F_2[t].  Deterministic (minimal width, then lowest (i,j)).
inline SmithNormalForm smith_normal_form(const PolyMatrix& m) {
    SmithNormalForm s;
    s.d = m;
    s.u = PolyMatrix::identity(m.rows());
    s.v = PolyMatrix::identity(m.cols());
    PolyMatrix& d = s.d;
    PolyMatrix& u = s.u;
    PolyMatrix& v = s.v;

    auto row_op = [&](int dst, int src, const LaurentPoly& f) { // row dst += f * row src
        for (int j = 0; j < d.cols(); ++j) d.at(dst, j) = d.at(dst, j) + f * d.at(src, j);
        for (int j = 0; j < u.cols(); ++j) u.at(dst, j) = u.at(dst, j) + f * u.at(src, j);
    };
    auto col_op = [&](int dst, int src, const LaurentPoly& f) {
        for (int i = 0; i < d.rows(); ++i) d.at(i, dst) = d.at(i, dst) + f * d.at(i, src);
        for (int i = 0; i < v.rows(); ++i) v.at(i, dst) = v.at(i, dst) + f * v.at(i, src);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto row_scale = [&](int i, int e) { // times t^e (a unit)
        for (int j = 0; j < d.cols(); ++j) d.at(i, j) = d.at(i, j).times_monomial(e);
        for (int j = 0; j < u.cols(); ++j) u.at(i, j) = u.at(i, j).times_monomial(e);
    };

    const int kmax = std::min(d.rows(), d.cols());
    int k = 0;
    while (k < kmax) {
        // pick pivot: minimal width, then lexicographically first
        int pi = -1, pj = -1, best = -1;
        for (int i = k; i < d.rows(); ++i)
            for (int j = k; j < d.cols(); ++j)
                if (!d.at(i, j).is_zero()) {
                    int w = d.at(i, j).width();
                    if (best < 0 || w < best) { best = w; pi = i; pj = j; }
                }
        if (pi < 0) break;
        row_swap(k, pi);
        col_swap(k, pj);
        row_scale(k, -d.at(k, k).valuation());

        bool clean = true;
        for (int i = k + 1; i < d.rows(); ++i) {
            if (d.at(i, k).is_zero()) continue;
            LaurentPoly q, r;
            d.at(i, k).divmod(d.at(k, k), q, r);
            row_op(i, k, q);
            if (!d.at(i, k).is_zero()) clean = false;
        }
        for (int j = k + 1; j < d.cols(); ++j) {
            if (d.at(k, j).is_zero()) continue;
            LaurentPoly q, r;
            d.at(k, j).divmod(d.at(k, k), q, r);
            col_op(j, k, q);
            if (!d.at(k, j).is_zero()) clean = false;
        }
        if (!clean) continue; // smaller remainders became candidate pivots
        // enforce divisibility of the remaining block by the pivot
        bool redo = false;
        for (int i = k + 1; i < d.rows() && !redo; ++i)
            for (int j = k + 1; j < d.cols() && !redo; ++j)
                if (!d.at(i, j).is_zero() && !d.at(i, j).divisible_by(d.at(k, k))) {
                    row_op(k, i, LaurentPoly::one());
                    redo = true;
                }
        if (redo) continue;
        ++k;
    }
    s.rank = k;
    return s;
}

// determinant by Bareiss fraction-free elimination (exact over the PID)
inline LaurentPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: not square");
    const int n = m.rows();
    if (n == 0) return LaurentPoly::one();
    PolyMatrix a = m;
    // strip row valuations once up front; track the total unit factor
    int unit_exp = 0;
    for (int i = 0; i < n; ++i) {
        int v = 0;
        bool any = false;
        for (int j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) {
                v = any ? std::min(v, a.at(i, j).valuation()) : a.at(i, j).valuation();
                any = true;
            }
        if (!any) return LaurentPoly::zero();
        unit_exp += v;
        for (int j = 0; j < n; ++j) a.at(i, j) = a.at(i, j).times_monomial(-v);
    }
    LaurentPoly prev = LaurentPoly::one();
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) { sw = i; break; }
            if (sw < 0) return LaurentPoly::zero();
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(sw, j)); // char 2: no sign
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = a.at(k, k) * a.at(i, j) + a.at(i, k) * a.at(k, j);
                a.at(i, j) = num.exact_div(prev);
            }
        prev = a.at(k, k);
    }
    return a.at(n - 1, n - 1).times_monomial(unit_exp);
}

// rank over the fraction field F_2(t) (stable under extension to the
// Laurent-series field).  Bareiss with minimal-width pivoting.
inline int rational_rank(const PolyMatrix& m) {
    PolyMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    for (int i = 0; i < rows; ++i) { // row units don't change the rank
        int v = 0;
        bool any = false;
        for (int j = 0; j < cols; ++j)
            if (!a.at(i, j).is_zero()) {
                v = any ? std::min(v, a.at(i, j).valuation()) : a.at(i, j).valuation();
                any = true;
            }
        if (any)
            for (int j = 0; j < cols; ++j) a.at(i, j) = a.at(i, j).times_monomial(-v);
    }
    LaurentPoly prev = LaurentPoly::one();
    int rank = 0;
    const int kmax = std::min(rows, cols);
    for (int k = 0; k < kmax; ++k) {
        int pi = -1, pj = -1, best = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (!a.at(i, j).is_zero()) {
                    int w = a.at(i, j).width();
                    if (best < 0 || w < best) { best = w; pi = i; pj = j; }
                }
        if (pi < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(a.at(k, j), a.at(pi, j));
        for (int i = 0; i < rows; ++i) std::swap(a.at(i, k), a.at(i, pj));
        ++rank;
        for (int i = k + 1; i < rows; ++i)
            for (int j = k + 1; j < cols; ++j) {
                LaurentPoly num = a.at(k, k) * a.at(i, j) + a.at(i, k) * a.at(k, j);
                a.at(i, j) = num.exact_div(prev);
            }
        prev = a.at(k, k);
    }
    return rank;
}

} // namespace khodet
