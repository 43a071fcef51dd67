#pragma once

// Exact arithmetic over F_2[t,t^-1] and its fraction field F_2(t).
// A Laurent polynomial is a valuation plus a packed coefficient bitset;
// the zero polynomial has empty storage.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"

namespace khodet {

// C(m, n) mod 2 for arbitrary integer m, n >= 0.  Lucas for m >= 0;
// C(-a, n) = C(a+n-1, n) mod 2 for m < 0.
inline bool binom_mod2(long long m, long long n) {
    if (n < 0) throw std::invalid_argument("binom_mod2: negative n");
    if (m >= 0) {
        if (n > m) return false;
        return (static_cast<unsigned long long>(m) & static_cast<unsigned long long>(n)) ==
               static_cast<unsigned long long>(n);
    }
    long long mm = -m + n - 1;
    return (static_cast<unsigned long long>(mm) & static_cast<unsigned long long>(n)) ==
           static_cast<unsigned long long>(n);
}

class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int e) {
        LaurentPoly p;
        p.val_ = e;
        p.bits_.assign(1, 1);
        return p;
    }
    static LaurentPoly from_exponents(std::vector<int> exps) {
        LaurentPoly p;
        for (int e : exps) p = p + monomial(e);
        return p;
    }

    bool is_zero() const { return bits_.empty(); }
    bool is_one() const { return !is_zero() && val_ == 0 && degree() == 0; }
    // units in F_2[t, t^-1] are the monomials
    bool is_unit() const { return !is_zero() && degree() == val_; }

    int valuation() const {
        if (is_zero()) throw std::logic_error("valuation of zero");
        return val_;
    }
    int degree() const {
        if (is_zero()) throw std::logic_error("degree of zero");
        int w = static_cast<int>(bits_.size()) - 1;
        while (bits_[w] == 0) --w;
        return val_ + w * 64 + 63 - __builtin_clzll(bits_[w]);
    }
    // degree - valuation; 0 for monomials
    int width() const { return degree() - valuation(); }

    bool coeff(int e) const {
        if (is_zero()) return false;
        long long k = static_cast<long long>(e) - val_;
        if (k < 0 || k >= static_cast<long long>(bits_.size()) * 64) return false;
        return (bits_[k / 64] >> (k % 64)) & 1u;
    }

    std::vector<int> exponents() const {
        std::vector<int> out;
        for (size_t w = 0; w < bits_.size(); ++w) {
            uint64_t b = bits_[w];
            while (b) {
                out.push_back(val_ + static_cast<int>(w) * 64 + __builtin_ctzll(b));
                b &= b - 1;
            }
        }
        return out;
    }
    int support_size() const {
        int s = 0;
        for (uint64_t b : bits_) s += __builtin_popcountll(b);
        return s;
    }

    bool operator==(const LaurentPoly& o) const {
        return val_ == o.val_ && bits_ == o.bits_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const {  // arbitrary total order
        if (val_ != o.val_) return val_ < o.val_;
        return bits_ < o.bits_;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        int v = std::min(val_, o.val_);
        int top = std::max(val_ + static_cast<int>(bits_.size()) * 64,
                           o.val_ + static_cast<int>(o.bits_.size()) * 64);
        LaurentPoly r;
        r.val_ = v;
        r.bits_.assign((top - v + 63) / 64, 0);
        r.xor_shifted(*this);
        r.xor_shifted(o);
        r.normalize();
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        const LaurentPoly& small = support_size() <= o.support_size() ? *this : o;
        const LaurentPoly& big = support_size() <= o.support_size() ? o : *this;
        LaurentPoly r;
        r.val_ = val_ + o.val_;
        r.bits_.assign(bits_.size() + o.bits_.size() + 1, 0);
        for (int e : small.exponents()) {
            long long sh = static_cast<long long>(e) - small.val_;
            r.xor_words(big.bits_, static_cast<int>(sh));
        }
        r.normalize();
        return r;
    }

    LaurentPoly times_monomial(int e) const {
        if (is_zero()) return zero();
        LaurentPoly r = *this;
        r.val_ += e;
        return r;
    }

    // evaluation at t = 1 (the only interesting F_2 point)
    bool eval_at_one() const { return support_size() & 1; }

    // n-th Hasse derivative: t^m -> C(m,n) t^{m-n}
    LaurentPoly hasse(int n) const {
        if (n < 0) throw std::invalid_argument("hasse: negative order");
        if (n == 0) return *this;
        LaurentPoly r;
        for (int e : exponents())
            if (binom_mod2(e, n)) r = r + monomial(e - n);
        return r;
    }

    // Euclidean division within F_2[t] after stripping units:
    // *this = q * d + r with width(r) < width(d) (r == 0 allowed).
    void divmod(const LaurentPoly& d, LaurentPoly& q, LaurentPoly& r) const {
        if (d.is_zero()) throw std::invalid_argument("divmod: zero divisor");
        q = zero();
        r = *this;
        int dw = d.width();
        while (!r.is_zero() && r.width() >= dw) {
            int sh = r.degree() - d.degree();
            q = q + monomial(sh);
            r = r + d.times_monomial(sh);
        }
    }

    bool divisible_by(const LaurentPoly& d) const {
        LaurentPoly q, r;
        divmod(d, q, r);
        return r.is_zero();
    }
    LaurentPoly exact_div(const LaurentPoly& d) const {
        LaurentPoly q, r;
        divmod(d, q, r);
        if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
        return q;
    }

    // monomial-unit normalization: shift valuation to 0
    LaurentPoly unit_normalized() const {
        if (is_zero()) return zero();
        return times_monomial(-valuation());
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int e : exponents()) {
            if (!s.empty()) s += "+";
            if (e == 0) s += "1";
            else if (e == 1) s += "t";
            else s += "t^" + std::to_string(e);
        }
        return s;
    }

  private:
    void normalize() {
        // find lowest set bit, realign to keep bits_[0] bit 0 = lowest term
        size_t lo = 0;
        while (lo < bits_.size() && bits_[lo] == 0) ++lo;
        if (lo == bits_.size()) { bits_.clear(); val_ = 0; return; }
        int bit = __builtin_ctzll(bits_[lo]);
        int shift = static_cast<int>(lo) * 64 + bit;
        if (shift) {
            std::vector<uint64_t> nb((bits_.size() * 64 - shift + 63) / 64, 0);
            for (size_t w = 0; w < bits_.size(); ++w) {
                uint64_t b = bits_[w];
                while (b) {
                    int e = static_cast<int>(w) * 64 + __builtin_ctzll(b);
                    b &= b - 1;
                    int ne = e - shift;
                    nb[ne / 64] |= uint64_t(1) << (ne % 64);
                }
            }
            bits_ = std::move(nb);
            val_ += shift;
        }
        while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
    }

    void xor_shifted(const LaurentPoly& o) {
        xor_words_from(o.bits_, o.val_ - val_);
    }
    void xor_words(const std::vector<uint64_t>& src, int bitshift) {
        xor_words_from(src, bitshift);
    }
    void xor_words_from(const std::vector<uint64_t>& src, int bitshift) {
        for (size_t w = 0; w < src.size(); ++w) {
            uint64_t b = src[w];
            while (b) {
                int e = static_cast<int>(w) * 64 + __builtin_ctzll(b) + bitshift;
                b &= b - 1;
                bits_[e / 64] ^= uint64_t(1) << (e % 64);
            }
        }
    }

    int val_ = 0;
    std::vector<uint64_t> bits_; // coefficient of t^{val_+i} at bit i
};

inline LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.unit_normalized();
    if (b.is_zero()) return a.unit_normalized();
    a = a.unit_normalized();
    b = b.unit_normalized();
    while (!b.is_zero()) {
        LaurentPoly q, r;
        a.divmod(b, q, r);
        a = b;
        b = r.is_zero() ? r : r.unit_normalized();
    }
    return a;
}

// Reduced fraction num/den over F_2(t); den is valuation-0 and coprime to num.
class RationalFn {
  public:
    RationalFn() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    RationalFn(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
        reduce();
    }
    static RationalFn from_poly(LaurentPoly p) { return RationalFn(std::move(p), LaurentPoly::one()); }
    static RationalFn one() { return from_poly(LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const {
        return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFn operator*(const RationalFn& o) const {
        return RationalFn(num_ * o.num_, den_ * o.den_);
    }
    RationalFn inv() const {
        if (is_zero()) throw std::invalid_argument("RationalFn: inverting zero");
        return RationalFn(den_, num_);
    }
    bool operator==(const RationalFn& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

  private:
    void reduce() {
        if (num_.is_zero()) { den_ = LaurentPoly::one(); return; }
        LaurentPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        int dv = den_.valuation();
        den_ = den_.times_monomial(-dv);
        num_ = num_.times_monomial(-dv);
    }

    LaurentPoly num_, den_;
};

} // namespace khodet
