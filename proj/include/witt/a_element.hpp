#pragma once

#include "witt/monomial.hpp"
#include "witt/rational.hpp"

#include <map>
#include <string>

namespace witt {

/// Element of A_{m,n}: a sparse exact-coefficient combination of monomials
/// t^alpha xi_I. No zero coefficients are ever stored; the term map is keyed
/// by a deterministic total order so serialization is reproducible.
class AElement {
public:
    AElement() = default;
    AElement(int m, int n);

    static AElement zero(int m, int n) { return AElement(m, n); }
    static AElement one(int m, int n);
    static AElement monomial(int m, int n, SuperMonomial mono, Rational c = Rational(1));

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<SuperMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * mono, dropping the entry if the result cancels.
    void add_term(const SuperMonomial& mono, const Rational& c);

    bool is_homogeneous() const;
    /// Parity of a homogeneous element (zero counts as even). Throws
    /// PreconditionError on mixed parity.
    int parity() const;
    AElement parity_component(int p) const;

    AElement& operator+=(const AElement& o);
    AElement& operator-=(const AElement& o);
    AElement& operator*=(const AElement& o);
    AElement& operator*=(const Rational& c);
    AElement operator-() const;

    friend AElement operator+(AElement a, const AElement& b) { return a += b; }
    friend AElement operator-(AElement a, const AElement& b) { return a -= b; }
    friend AElement operator*(AElement a, const AElement& b) { return a *= b; }
    friend AElement operator*(AElement a, const Rational& c) { return a *= c; }
    friend AElement operator*(const Rational& c, AElement a) { return a *= c; }
    friend bool operator==(const AElement& a, const AElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AElement& a, const AElement& b) { return !(a == b); }

    std::string str() const;

private:
    int m_ = 0, n_ = 0;
    std::map<SuperMonomial, Rational> terms_;

    void check_same(const AElement& o) const;
};

/// t^alpha as an element of A_{m,n}.
AElement t_power(int m, int n, const ExpVec& alpha);
/// xi_I as an element of A_{m,n}.
AElement xi_element(int m, int n, XiMask I);

/// Left partial derivative d/dxi_j, extended A-linearly in the t part.
AElement xi_derive(int j, const AElement& a);
/// Euler derivation d_i = t_i d/dt_i: eigenvalue alpha_i on t^alpha xi_I.
AElement d_derive(int i, const AElement& a);
/// Substitutes t_i = 1, xi_j = 0; a lies in the maximal ideal m iff this is 0.
Rational eval_at_origin(const AElement& a);

} // namespace witt
