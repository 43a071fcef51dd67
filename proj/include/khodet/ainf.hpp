#pragma once

// Strictly unital ungraded A-infinity modules over F_2[X]/(X^2).  Such a
// module is a sequence of maps ops[j] encoding mu_{1+j}(., X, ..., X); the
// defining relations collapse to sum_{i+j=n} ops[i] ops[j] = 0 for all n.

#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"
#include "homalg.hpp"

namespace khodet {

struct AinfModuleX {
    int dim = 0;
    std::vector<F2Matrix> ops; // ops[j]: dim x dim; trailing zeros trimmed

    AinfModuleX() = default;
    AinfModuleX(int d, std::vector<F2Matrix> o) : dim(d), ops(std::move(o)), zero_(d, d) {
        for (const auto& m : ops)
            if (m.rows() != dim || m.cols() != dim)
                throw std::invalid_argument("AinfModuleX: op shape mismatch");
        trim();
    }

    const F2Matrix& op(int j) const {
        return j < static_cast<int>(ops.size()) ? ops[j] : zero_;
    }
    int op_count() const { return static_cast<int>(ops.size()); }

    void trim() {
        while (!ops.empty() && ops.back().is_zero()) ops.pop_back();
    }

  private:
    F2Matrix zero_;
};

// empty list iff all relations hold; entries are the failing n
inline std::vector<int> check_relations(const AinfModuleX& m) {
    std::vector<int> bad;
    int top = 2 * std::max(m.op_count() - 1, 0);
    for (int n = 0; n <= top; ++n) {
        F2Matrix acc(m.dim, m.dim);
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            if (i < m.op_count() && j < m.op_count()) acc = acc + m.op(i) * m.op(j);
        }
        if (!acc.is_zero()) bad.push_back(n);
    }
    return bad;
}

struct AinfMorphismX {
    AinfModuleX source, target;
    std::vector<F2Matrix> maps; // maps[j]: f_{1+j}(., X, ..., X)

    AinfMorphismX() = default;
    AinfMorphismX(AinfModuleX s, AinfModuleX t, std::vector<F2Matrix> f)
        : source(std::move(s)), target(std::move(t)), maps(std::move(f)) {
        for (const auto& m : maps)
            if (m.rows() != target.dim || m.cols() != source.dim)
                throw std::invalid_argument("AinfMorphismX: map shape mismatch");
        while (!maps.empty() && maps.back().is_zero()) maps.pop_back();
    }

    F2Matrix map(int j) const {
        if (j < static_cast<int>(maps.size())) return maps[j];
        return F2Matrix(target.dim, source.dim);
    }
    int map_count() const { return static_cast<int>(maps.size()); }

    static AinfMorphismX identity(const AinfModuleX& m) {
        return AinfMorphismX(m, m, {F2Matrix::identity(m.dim)});
    }
};

inline std::vector<int> check_morphism(const AinfMorphismX& f) {
    std::vector<int> bad;
    int top = 2 * std::max({f.map_count(), f.source.op_count(), f.target.op_count()});
    for (int n = 0; n <= top; ++n) {
        F2Matrix acc(f.target.dim, f.source.dim);
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            acc = acc + f.map(i) * f.source.op(j) + f.target.op(i) * f.map(j);
        }
        if (!acc.is_zero()) bad.push_back(n);
    }
    return bad;
}

inline AinfMorphismX compose(const AinfMorphismX& g, const AinfMorphismX& f) {
    if (f.target.dim != g.source.dim)
        throw std::invalid_argument("compose: middle dimension mismatch");
    int len = f.map_count() + g.map_count();
    std::vector<F2Matrix> maps;
    for (int n = 0; n < std::max(len, 1); ++n) {
        F2Matrix acc(g.target.dim, f.source.dim);
        for (int i = 0; i <= n; ++i) acc = acc + g.map(i) * f.map(n - i);
        maps.push_back(acc);
    }
    return AinfMorphismX(f.source, g.target, std::move(maps));
}

// a strict module is an A-infinity module with vanishing higher operations
inline AinfModuleX promote(const DGModuleX& m) {
    return AinfModuleX(m.dim(), {m.cx.d, m.x});
}

struct TransferResult {
    AinfModuleX module;    // structure induced on homology
    AinfMorphismX incl;    // quasi-isomorphism H -> M extending r.incl
};

// Homotopy transfer along a retraction with side conditions:
//   m'_n = p . sum over compositions k_1+...+k_r = n (k_i >= 1) of
//          m_{k_1} h m_{k_2} h ... h m_{k_r} . incl
// and incl_n the matching sum led by h.  Ops truncated at dim(M)+1.
inline TransferResult transfer(const AinfModuleX& m, const Retraction& r) {
    if (r.incl.rows() != m.dim)
        throw std::invalid_argument("transfer: retraction dimension mismatch");
    if (!retraction_is_valid(m.op(0), r))
        throw std::invalid_argument("transfer: invalid retraction data");
    const int h = r.hom_dim;
    const int top = m.dim + 1;

    // W_0 = incl, W_j = sum_k h m_k W_{j-k}
    std::vector<F2Matrix> w{r.incl};
    for (int j = 1; j <= top; ++j) {
        F2Matrix acc(m.dim, h);
        for (int k = 1; k <= j; ++k)
            if (k < m.op_count()) acc = acc + r.homotopy * (m.op(k) * w[j - k]);
        w.push_back(acc);
    }
    std::vector<F2Matrix> ops{F2Matrix(h, h)};
    for (int n = 1; n <= top; ++n) {
        F2Matrix acc(m.dim, h);
        for (int k = 1; k <= n; ++k)
            if (k < m.op_count()) acc = acc + m.op(k) * w[n - k];
        ops.push_back(r.proj * acc);
    }

    TransferResult out;
    out.module = AinfModuleX(h, std::move(ops));
    out.incl = AinfMorphismX(out.module, m, std::move(w));
    return out;
}

inline TransferResult transfer_to_homology(const AinfModuleX& m) {
    return transfer(m, make_retraction(m.op(0)));
}

} // namespace khodet
