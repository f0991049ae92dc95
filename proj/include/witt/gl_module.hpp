#pragma once

#include "witt/linalg.hpp"
#include "witt/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace witt {

/// Index bookkeeping for gl(p, q): indices 1..p are even, p+1..p+q odd.
struct GlDims {
    int p = 0, q = 0;

    int size() const { return p + q; }
    int index_parity(int a) const { return a > p ? 1 : 0; }

    friend bool operator==(const GlDims& a, const GlDims& b) { return a.p == b.p && a.q == b.q; }
};

/// Element of the Lie superalgebra gl(p, q) as a (p+q) x (p+q) matrix.
class GlElement {
public:
    GlElement() = default;
    explicit GlElement(GlDims d) : d_(d), mat_(static_cast<std::size_t>(d.size()), static_cast<std::size_t>(d.size())) {}

    /// Matrix unit E_{ab}, 1-based indices.
    static GlElement unit(GlDims d, int a, int b);

    const GlDims& dims() const { return d_; }
    const QMatrix& mat() const { return mat_; }
    QMatrix& mat() { return mat_; }
    bool is_zero() const { return mat_.is_zero(); }

    /// Parity when the support is homogeneous w.r.t. |a| + |b|; nullopt for
    /// mixed support. Zero reports even.
    std::optional<int> homogeneous_parity() const;

    GlElement& operator+=(const GlElement& o);
    GlElement& operator-=(const GlElement& o);
    GlElement& operator*=(const Rational& c);
    friend GlElement operator+(GlElement a, const GlElement& b) { return a += b; }
    friend GlElement operator-(GlElement a, const GlElement& b) { return a -= b; }
    friend GlElement operator*(GlElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const GlElement& a, const GlElement& b) {
        return a.d_ == b.d_ && a.mat_ == b.mat_;
    }

private:
    GlDims d_;
    QMatrix mat_;
};

/// Super commutator [x, y] = xy - (-1)^{|x||y|} yx. Requires homogeneous
/// operands.
GlElement gl_bracket(const GlElement& x, const GlElement& y);

/// Explicit finite-dimensional Z_2-graded gl(p, q) module: one matrix per
/// generator E_{ab} acting on a fixed homogeneous basis.
class GlModule {
public:
    GlModule() = default;
    GlModule(GlDims d, int dim, std::vector<int> parity, std::vector<QMatrix> mats);

    const GlDims& dims() const { return d_; }
    int dim() const { return dim_; }
    const std::vector<int>& parity() const { return parity_; }
    int basis_parity(int k) const { return parity_[static_cast<std::size_t>(k)]; }

    const QMatrix& E(int a, int b) const {
        return mats_[static_cast<std::size_t>((a - 1) * d_.size() + (b - 1))];
    }
    QMatrix& E(int a, int b) {
        return mats_[static_cast<std::size_t>((a - 1) * d_.size() + (b - 1))];
    }

    /// Representation matrix of an arbitrary gl element.
    QMatrix act(const GlElement& x) const;

    struct Report {
        bool ok = true;
        long checked = 0;
        std::string first_failure;
    };

    /// Checks parity homogeneity of every E_{ab} and the super commutator
    /// relations [E_ab, E_cd] = delta_bc E_ad - (-1)^{(|a|+|b|)(|c|+|d|)} delta_da E_cb.
    Report verify() const;

    friend bool operator==(const GlModule& a, const GlModule& b) {
        return a.d_ == b.d_ && a.dim_ == b.dim_ && a.parity_ == b.parity_ && a.mats_ == b.mats_;
    }

private:
    GlDims d_;
    int dim_ = 0;
    std::vector<int> parity_;
    std::vector<QMatrix> mats_; // (p+q)^2 matrices, row-major over (a, b)
};

/// One-dimensional even module with every E_{ab} acting by zero.
GlModule gl_trivial(GlDims d);
/// Natural module C^{p|q}: E_{ab} e_c = delta_{bc} e_a.
GlModule gl_natural(GlDims d);
/// Dual module with the super-transpose action (x f)(v) = -(-1)^{|x||f|} f(x v).
GlModule gl_dual(const GlModule& V);
/// Tensor product with the Koszul rule x(v (x) v') = xv (x) v' + (-1)^{|x||v|} v (x) xv'.
GlModule gl_tensor(const GlModule& V, const GlModule& W);
/// Parity flip: same matrices, flipped basis parities.
GlModule gl_parity_flip(const GlModule& V);
/// Pullback along the automorphism x -> (-1)^{|x|} x: odd E_{ab} negated.
GlModule gl_twist_T(const GlModule& V);

} // namespace witt
