#pragma once

#include "witt/gl_module.hpp"
#include "witt/w_element.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace witt {

/// Element of the tensor module Gamma(lambda, V) = A_{m,n} (x) V, stored as a
/// sparse map (monomial, module basis index) -> coefficient. The weight of a
/// term (t^alpha xi_I, v) under D_m is lambda + alpha; its parity is
/// parity(monomial) + parity(v).
class TensorVector {
public:
    TensorVector() = default;
    TensorVector(int m, int n, int vdim);

    static TensorVector zero(int m, int n, int vdim) { return TensorVector(m, n, vdim); }
    static TensorVector term(int m, int n, int vdim, SuperMonomial mono, int k,
                             Rational c = Rational(1));

    int m() const { return m_; }
    int n() const { return n_; }
    int vdim() const { return vdim_; }
    const std::map<std::pair<SuperMonomial, int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SuperMonomial& mono, int k, const Rational& c);

    /// Parity of a term given the module's basis parities.
    static int term_parity(const SuperMonomial& mono, int k, const GlModule& V) {
        return (mono.parity() + V.basis_parity(k)) & 1;
    }

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const Rational& c);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(TensorVector a, const Rational& c) { return a *= c; }
    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.vdim_ == b.vdim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

    std::string str() const;

private:
    int m_ = 0, n_ = 0, vdim_ = 0;
    std::map<std::pair<SuperMonomial, int>, Rational> terms_;
};

/// A acting by multiplication: a . (y (x) v) = (a y) (x) v.
TensorVector a_mul(const AElement& a, const TensorVector& v);

/// The W_{m,n} action on Gamma(lambda, V) for a gl(m, n) module V:
///   x d_i . (y(x)v)  = sum_s (-1)^{|x|-1+|y|} (dx/dxi_s) y (x) E_{m+s,i} v
///                    + sum_s d_s(x) y (x) E_{s,i} v + x (d_i(y) + lambda_i y) (x) v
///   x del_j . (y(x)v) = sum_s (-1)^{|x|-1} (dx/dxi_s) y (x) E_{m+s,m+j} v
///                    + sum_s (-1)^{|y|} d_s(x) y (x) E_{s,m+j} v + x (dy/dxi_j) (x) v.
TensorVector tensor_action(const WElement& x, std::span<const Rational> lambda, const GlModule& V,
                           const TensorVector& v);

/// The W'_{m,n} = A_{m-1,n} Delta action on Gamma(lambda, V) for a
/// gl(m-1, n) module V; x must have Z^m degrees with last coordinate 0, the
/// tensor factor lives over A_{m-1,n}. d_m acts by the scalar lambda_m.
TensorVector tensor_action_prime(const WElement& x, std::span<const Rational> lambda,
                                 const GlModule& V, const TensorVector& v);

/// Weight-space dimension table: weight vector (length m, rational) -> dim.
using WeightTable = std::map<std::vector<Rational>, long>;

/// Computes dim Gamma(lambda, V)_{lambda + alpha} for every alpha in the
/// window by diagonalizing the d_i action on the candidate basis vectors
/// (each must be an exact eigenvector; PreconditionError otherwise).
WeightTable weight_char(std::span<const Rational> lambda, const GlModule& V, int m, int n,
                        const std::vector<ExpVec>& window);

/// sum_{i=0..l} (-1)^i C(l,i) (t^{alpha+i gamma} xi_I del) . ((t^{beta-i gamma} d_mu) . v)
/// computed through the tensor action. gamma must be nonzero.
TensorVector annihilator_probe(int l, const ExpVec& alpha, const ExpVec& beta,
                               const ExpVec& gamma, XiMask I, Generator del,
                               std::span<const Rational> mu, const TensorVector& v,
                               std::span<const Rational> lambda, const GlModule& V);

struct ProbeSample {
    ExpVec alpha, beta;
    XiMask I = 0;
    Generator del{GenKind::D, 1};
    std::vector<Rational> mu;
};

struct ProbeSearchResult {
    bool found = false;
    int l0 = -1;                    // least l vanishing on every sample and basis vector
    std::vector<int> per_sample_l0; // per-sample minima, -1 when not found
};

/// Least l <= l_max such that the probe vanishes for all samples and all v in
/// the weight-space basis {t^offset xi_L (x) v_k}.
ProbeSearchResult find_min_l0(const ExpVec& gamma, std::span<const Rational> lambda, const GlModule& V,
                          int m, int n, const std::vector<ProbeSample>& samples,
                          const ExpVec& v_offset, int l_max = 16);

using ModuleAction = std::function<TensorVector(const WElement&, const TensorVector&)>;

struct AxiomReport {
    long checked = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

/// Checks [x, y] . v = x.(y.v) - (-1)^{|x||y|} y.(x.v) for every combination;
/// x, y must be parity homogeneous.
AxiomReport verify_module_axiom(std::span<const WElement> xs, std::span<const WElement> ys,
                                std::span<const TensorVector> vs, const ModuleAction& act);

} // namespace witt
