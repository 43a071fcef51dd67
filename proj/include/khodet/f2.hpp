#pragma once

// Bit-packed exact linear algebra over the two-element field.
// Vectors are columns; matrices act on the left.  Rows are stored as
// packed 64-bit words, so row operations are word-wise xors.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace khodet {

class F2Matrix {
  public:
    F2Matrix() : rows_(0), cols_(0), wpr_(0) {}
    F2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * wpr_, 0) {
        assert(rows >= 0 && cols >= 0);
    }

    static F2Matrix identity(int n) {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const {
        return (word(i, j / 64) >> (j % 64)) & 1u;
    }
    void set(int i, int j, bool v) {
        uint64_t& w = word(i, j / 64);
        uint64_t bit = uint64_t(1) << (j % 64);
        if (v) w |= bit; else w &= ~bit;
    }
    void flip(int i, int j) { word(i, j / 64) ^= uint64_t(1) << (j % 64); }

    void xor_row(int dst, int src) {
        uint64_t* d = row_ptr(dst);
        const uint64_t* s = row_ptr(src);
        for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        uint64_t* pa = row_ptr(a);
        uint64_t* pb = row_ptr(b);
        for (int w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
    }
    bool row_is_zero(int i) const {
        const uint64_t* p = row_ptr(i);
        for (int w = 0; w < wpr_; ++w)
            if (p[w]) return false;
        return true;
    }

    bool is_zero() const {
        for (uint64_t w : data_)
            if (w) return false;
        return true;
    }

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const F2Matrix& o) const { return !(*this == o); }

    F2Matrix operator+(const F2Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        F2Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] ^= o.data_[k];
        return r;
    }

    F2Matrix operator*(const F2Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("F2Matrix: dimension mismatch in product");
        F2Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            const uint64_t* a = row_ptr(i);
            uint64_t* out = r.row_ptr(i);
            for (int wk = 0; wk < wpr_; ++wk) {
                uint64_t bits = a[wk];
                while (bits) {
                    int k = wk * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    const uint64_t* b = o.row_ptr(k);
                    for (int w = 0; w < r.wpr_; ++w) out[w] ^= b[w];
                }
            }
        }
        return r;
    }

    F2Matrix transpose() const {
        F2Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            const uint64_t* p = row_ptr(i);
            for (int wk = 0; wk < wpr_; ++wk) {
                uint64_t bits = p[wk];
                while (bits) {
                    int j = wk * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    r.set(j, i, true);
                }
            }
        }
        return r;
    }

    // column j as an n x 1 matrix
    F2Matrix column(int j) const {
        F2Matrix c(rows_, 1);
        for (int i = 0; i < rows_; ++i) c.set(i, 0, get(i, j));
        return c;
    }
    void set_column(int j, const F2Matrix& c) {
        assert(c.rows() == rows_ && c.cols() == 1);
        for (int i = 0; i < rows_; ++i) set(i, j, c.get(i, 0));
    }

    // [A | B] side by side
    static F2Matrix hstack(const F2Matrix& a, const F2Matrix& b) {
        assert(a.rows() == b.rows());
        F2Matrix r(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.get(i, j));
            for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.get(i, j));
        }
        return r;
    }

    F2Matrix submatrix_cols(const std::vector<int>& cols) const {
        F2Matrix r(rows_, static_cast<int>(cols.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                r.set(i, static_cast<int>(j), get(i, cols[j]));
        return r;
    }

    int rank() const {
        F2Matrix m = *this;
        int rk = 0;
        for (int j = 0; j < cols_ && rk < rows_; ++j) {
            int piv = -1;
            for (int i = rk; i < rows_; ++i)
                if (m.get(i, j)) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(rk, piv);
            for (int i = 0; i < rows_; ++i)
                if (i != rk && m.get(i, j)) m.xor_row(i, rk);
            ++rk;
        }
        return rk;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '.';
            s += '\n';
        }
        return s;
    }

  private:
    uint64_t& word(int i, int w) { return data_[static_cast<size_t>(i) * wpr_ + w]; }
    const uint64_t& word(int i, int w) const { return data_[static_cast<size_t>(i) * wpr_ + w]; }
    uint64_t* row_ptr(int i) { return data_.data() + static_cast<size_t>(i) * wpr_; }
    const uint64_t* row_ptr(int i) const { return data_.data() + static_cast<size_t>(i) * wpr_; }

    int rows_, cols_, wpr_;
    std::vector<uint64_t> data_;
};

// Row-reduced echelon form with the transform recorded: R = E * A, pivot
// columns in increasing order (lowest index first, for reproducibility).
struct Rref {
    F2Matrix r;                  // echelon form
    F2Matrix e;                  // transform, r = e * a
    std::vector<int> pivot_cols; // one per pivot row

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

inline Rref rref(const F2Matrix& a) {
    Rref out{a, F2Matrix::identity(a.rows()), {}};
    int rk = 0;
    for (int j = 0; j < a.cols() && rk < a.rows(); ++j) {
        int piv = -1;
        for (int i = rk; i < a.rows(); ++i)
            if (out.r.get(i, j)) { piv = i; break; }
        if (piv < 0) continue;
        out.r.swap_rows(rk, piv);
        out.e.swap_rows(rk, piv);
        for (int i = 0; i < a.rows(); ++i)
            if (i != rk && out.r.get(i, j)) {
                out.r.xor_row(i, rk);
                out.e.xor_row(i, rk);
            }
        out.pivot_cols.push_back(j);
        ++rk;
    }
    return out;
}

// Solves A x = b for a fixed A, many b.  solve() returns false when b is
// outside the column space.
class F2Solver {
  public:
    explicit F2Solver(const F2Matrix& a) : a_cols_(a.cols()), f_(rref(a)) {}

    int rank() const { return f_.rank(); }

    bool solve(const F2Matrix& b, F2Matrix& x) const {
        assert(b.cols() == 1);
        F2Matrix eb = f_.e * b;
        x = F2Matrix(a_cols_, 1);
        int rk = f_.rank();
        for (int i = 0; i < rk; ++i)
            if (eb.get(i, 0)) x.set(f_.pivot_cols[i], 0, true);
        for (int i = rk; i < eb.rows(); ++i)
            if (eb.get(i, 0)) return false;
        return true;
    }

  private:
    int a_cols_;
    Rref f_;
};

// Basis of ker(A), one column per free variable, deterministic.
inline F2Matrix kernel_basis(const F2Matrix& a) {
    Rref f = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (int c : f.pivot_cols) is_piv[c] = true;
    int nfree = a.cols() - f.rank();
    F2Matrix k(a.cols(), nfree);
    int idx = 0;
    for (int j = 0; j < a.cols(); ++j) {
        if (is_piv[j]) continue;
        k.set(j, idx, true);
        for (int i = 0; i < f.rank(); ++i)
            if (f.r.get(i, j)) k.set(f.pivot_cols[i], idx, true);
        ++idx;
    }
    return k;
}

inline F2Matrix inverse(const F2Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    Rref f = rref(a);
    if (f.rank() != a.rows()) throw std::invalid_argument("inverse: singular");
    return f.e;
}

// Splitting of a square-zero differential d on F_2^n:
//   F_2^n = H  (+)  im(d)  (+)  A,   d : A -> im(d) iso.
// Gives homology representatives, projection, inclusion and a homotopy
// satisfying  d h + h d = 1 + incl proj,  h^2 = 0,  h incl = 0,  proj h = 0.
struct Retraction {
    F2Matrix incl;     // n x h
    F2Matrix proj;     // h x n
    F2Matrix homotopy; // n x n
    int hom_dim = 0;
};

inline Retraction make_retraction(const F2Matrix& d) {
    const int n = d.rows();
    if (d.cols() != n) throw std::invalid_argument("make_retraction: not square");
    Rref fd = rref(d);
    const int r = fd.rank();
    // preimage columns: d(e_{c_i}) span im(d)
    F2Matrix im = d.submatrix_cols(fd.pivot_cols);
    F2Matrix ker = kernel_basis(d);
    // extend im inside ker to a homology basis, lowest kernel column first
    F2Matrix ext = F2Matrix::hstack(im, ker);
    Rref fe = rref(ext);
    std::vector<int> hom_cols;
    for (int c : fe.pivot_cols)
        if (c >= r) hom_cols.push_back(c - r);
    const int h = static_cast<int>(hom_cols.size());
    // basis matrix P = [H | im | A]
    F2Matrix p(n, n);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < n; ++i) p.set(i, j, ker.get(i, hom_cols[j]));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) p.set(i, h + j, im.get(i, j));
    for (int j = 0; j < r; ++j) p.set(fd.pivot_cols[j], h + r + j, true);
    F2Matrix pinv = inverse(p);

    Retraction out;
    out.hom_dim = h;
    out.incl = F2Matrix(n, h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < n; ++i) out.incl.set(i, j, p.get(i, j));
    out.proj = F2Matrix(h, n);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < n; ++j) out.proj.set(i, j, pinv.get(i, j));
    // homotopy: in P-coordinates send im-block basis vector j to A-block j
    F2Matrix nmat(n, n);
    for (int j = 0; j < r; ++j) nmat.set(h + r + j, h + j, true);
    out.homotopy = p * nmat * pinv;
    return out;
}

inline bool retraction_is_valid(const F2Matrix& d, const Retraction& r) {
    const int n = d.rows();
    F2Matrix id_h = F2Matrix::identity(r.hom_dim);
    F2Matrix id_n = F2Matrix::identity(n);
    if (!(r.proj * r.incl == id_h)) return false;
    F2Matrix lhs = d * r.homotopy + r.homotopy * d;
    if (!(lhs == id_n + r.incl * r.proj)) return false;
    if (!(r.homotopy * r.homotopy).is_zero()) return false;
    if (!(r.homotopy * r.incl).is_zero()) return false;
    if (!(r.proj * r.homotopy).is_zero()) return false;
    if (!(r.proj * d).is_zero()) return false;   // retracts onto homology
    if (!(d * r.incl).is_zero()) return false;
    return true;
}

} // namespace khodet
