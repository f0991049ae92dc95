#pragma once

#include "witt/a_element.hpp"
#include "witt/linalg.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace witt {

enum class GenKind : std::uint8_t { D, Del };

/// Basis superderivation: d_i = t_i d/dt_i (even) or d/dxi_j (odd).
struct Generator {
    GenKind kind;
    std::int32_t index; // 1..m for D, 1..n for Del

    int parity() const { return kind == GenKind::Del ? 1 : 0; }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }

    std::string str() const;
};

inline Generator gen_d(int i) { return Generator{GenKind::D, i}; }
inline Generator gen_del(int j) { return Generator{GenKind::Del, j}; }

/// Standard basis label t^alpha xi_I delta of W_{m,n}.
using WKey = std::pair<SuperMonomial, Generator>;

inline int wkey_parity(const WKey& k) { return (k.first.parity() + k.second.parity()) & 1; }

/// Element of the Witt superalgebra W_{m,n} = A_{m,n} Delta, stored sparsely
/// over the standard basis. The Z^m degree of a term is its alpha.
class WElement {
public:
    WElement() = default;
    WElement(int m, int n);

    static WElement zero(int m, int n) { return WElement(m, n); }
    static WElement term(int m, int n, SuperMonomial mono, Generator g, Rational c = Rational(1));

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<WKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const WKey& key, const Rational& c);
    void add_term(const SuperMonomial& mono, const Generator& g, const Rational& c) {
        add_term(WKey(mono, g), c);
    }

    bool is_homogeneous() const;
    int parity() const; // throws on mixed parity; zero counts as even
    WElement parity_component(int p) const;

    /// Z^m degrees appearing among the terms.
    std::set<ExpVec> degree_support() const;
    WElement degree_component(const ExpVec& alpha) const;

    WElement& operator+=(const WElement& o);
    WElement& operator-=(const WElement& o);
    WElement& operator*=(const Rational& c);
    WElement operator-() const;

    friend WElement operator+(WElement a, const WElement& b) { return a += b; }
    friend WElement operator-(WElement a, const WElement& b) { return a -= b; }
    friend WElement operator*(WElement a, const Rational& c) { return a *= c; }
    friend WElement operator*(const Rational& c, WElement a) { return a *= c; }
    friend bool operator==(const WElement& a, const WElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WElement& a, const WElement& b) { return !(a == b); }

    std::string str() const;

private:
    int m_ = 0, n_ = 0;
    std::map<WKey, Rational> terms_;

    void check_same(const WElement& o) const;
};

/// Action of a basis generator on a monomial; at most one term.
std::optional<SignedMonomial> gen_apply(const Generator& g, const SuperMonomial& mono,
                                        Rational& scale);

/// w acting on f as a superderivation of A.
AElement apply(const WElement& w, const AElement& f);

/// Superbracket of superderivations:
/// [a d, b d'] = a d(b) d' - (-1)^{|ad||bd'|} b d'(a) d on basis terms.
WElement bracket(const WElement& x, const WElement& y);

/// Left multiplication by an A element: (f, w) -> f w inside W.
WElement a_mul_w(const AElement& f, const WElement& w);

/// Element of the extended Witt superalgebra W~ = W x| A.
struct WTildeElement {
    WElement w;
    AElement a;

    friend bool operator==(const WTildeElement& x, const WTildeElement& y) {
        return x.w == y.w && x.a == y.a;
    }
};

/// [w + a, w' + a'] = [w, w'] + w(a') - (-1)^{|w'||a|} w'(a); [A, A] = 0.
WTildeElement bracket_tilde(const WTildeElement& x, const WTildeElement& y);

/// The 2^n (m + n) standard basis elements of degree alpha, in a fixed
/// deterministic order (xi mask ascending, then d_1..d_m, del_1..del_n).
std::vector<WElement> graded_component_basis(int m, int n, const ExpVec& alpha);

/// Rank of the coefficient matrix of the elements over the standard basis.
int span_dim(std::span<const WElement> elements);

/// Membership in m Delta: the aggregate A coefficient of every generator
/// evaluates to 0 at the origin.
bool in_m_delta(const WElement& x);

/// GL_m(Z) twist B(t^alpha xi_I d_i) = t^{B alpha} xi_I d_{e_i B^{-1}},
/// B(t^alpha xi_I del_j) = t^{B alpha} xi_I del_j, extended linearly.
WElement glz_twist(const LatticeMatrix& B, const WElement& x);

/// t^beta d_mu = sum_i mu_i t^beta d_i.
WElement d_mu_element(int m, int n, std::span<const Rational> mu, const ExpVec& beta);

} // namespace witt
