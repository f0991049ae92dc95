#pragma once

#include "witt/gl_module.hpp"
#include "witt/w_element.hpp"

#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace witt {

enum class TKind : std::uint8_t { X, Y, Xp, Yp };

/// Basis label of the commutant subalgebra T inside the loop algebra A.W:
///   X_{alpha,i}     = t^{-alpha} . t^alpha d_i - d_i              (alpha != 0)
///   Y_{alpha,j}     = t^{-alpha} . t^alpha del_j - del_j          (alpha != 0)
///   X'_{alpha,I,i}  = sum_{J <= I} (-1)^{tau(J,I\J)+|J|} t^{-alpha} xi_J . t^alpha xi_{I\J} d_i   (I != {})
///   Y'_{alpha,I,j}  analogously with del_j.
struct TBasisKey {
    TKind kind;
    ExpVec alpha;
    XiMask xi = 0;      // only Xp / Yp
    std::int32_t target = 1;

    int parity() const {
        switch (kind) {
        case TKind::X: return 0;
        case TKind::Y: return 1;
        case TKind::Xp: return mask_size(xi) & 1;
        default: return (mask_size(xi) + 1) & 1;
        }
    }

    void validate(int m, int n) const;

    friend bool operator==(const TBasisKey& a, const TBasisKey& b) {
        return a.kind == b.kind && a.xi == b.xi && a.target == b.target && a.alpha == b.alpha;
    }
    friend bool operator<(const TBasisKey& a, const TBasisKey& b) {
        return std::tie(a.kind, a.alpha, a.xi, a.target) < std::tie(b.kind, b.alpha, b.xi, b.target);
    }

    std::string str() const;
};

/// Key into the free A-module basis B~ = B u {d_i, del_j} of A.W. Plain
/// generators order before commutant keys.
struct BTildeKey {
    std::variant<Generator, TBasisKey> v;

    static BTildeKey plain(Generator g) { return BTildeKey{g}; }
    static BTildeKey t(TBasisKey k) { return BTildeKey{std::move(k)}; }

    bool is_plain() const { return std::holds_alternative<Generator>(v); }
    const Generator& gen() const { return std::get<Generator>(v); }
    const TBasisKey& tkey() const { return std::get<TBasisKey>(v); }

    int parity() const { return is_plain() ? gen().parity() : tkey().parity(); }

    friend bool operator==(const BTildeKey& a, const BTildeKey& b) { return a.v == b.v; }
    friend bool operator<(const BTildeKey& a, const BTildeKey& b) {
        if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
        if (a.is_plain()) return a.gen() < b.gen();
        return a.tkey() < b.tkey();
    }

    std::string str() const;
};

/// Element of the loop algebra A.W in normal form: A-valued coordinates over
/// the free basis B~. Zero coordinates are never stored, so the normal form
/// is unique.
class AWElement {
public:
    AWElement() = default;
    AWElement(int m, int n) : m_(m), n_(n) {}

    static AWElement zero(int m, int n) { return AWElement(m, n); }
    /// The basis element itself: coordinate 1 on the given key.
    static AWElement basis(int m, int n, const BTildeKey& key);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<BTildeKey, AElement>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    void add(const BTildeKey& key, const AElement& f);
    void add_mono(const BTildeKey& key, const SuperMonomial& mono, const Rational& c);

    bool t_supported() const;      // no plain-generator coordinates
    bool constant_coords() const;  // every coordinate is c . t^0 xi_{}

    AWElement& operator+=(const AWElement& o);
    AWElement& operator-=(const AWElement& o);
    AWElement& operator*=(const Rational& c);
    friend AWElement operator+(AWElement a, const AWElement& b) { return a += b; }
    friend AWElement operator-(AWElement a, const AWElement& b) { return a -= b; }
    friend bool operator==(const AWElement& a, const AWElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const AWElement& a, const AWElement& b) { return !(a == b); }

    std::string str() const;

private:
    int m_ = 0, n_ = 0;
    std::map<BTildeKey, AElement> coords_;
};

/// Formal expansion of an A.W element over the A (x) W basis
/// {monomial . (W basis term)}; A.W is free over this basis, so the pair form
/// is a faithful normal form independent of the B~ coordinates.
using AWPairForm = std::map<std::pair<SuperMonomial, WKey>, Rational>;

/// The defining expression of a B~ basis key as (coefficient, A monomial,
/// W basis term) triples.
std::vector<std::tuple<Rational, SuperMonomial, WKey>> defining_pairs(const BTildeKey& key, int m,
                                                                      int n);

AWPairForm pair_form(const AWElement& x);

/// Adds c . (f . w) to out in B~ coordinates, expanding the W basis term w
/// through the free-basis identities.
void accumulate_product(AWElement& out, const Rational& c, const SuperMonomial& f,
                        const SuperMonomial& wmono, const Generator& wgen);

/// Normal form of a W element inside A.W.
AWElement embed_w(const WElement& x);

/// Bracket on A.W:
/// [f.b, g.d] = f[b,g].d - (-1)^{|fb||gd|} g[d,f].b + (-1)^{|b||g|} fg.[b,d],
/// evaluated on pair expansions and re-normalized through embed_w.
AWElement aw_bracket(const AWElement& x, const AWElement& y);

/// psi on the commutant basis:
///   X_{a,i} -> (t^a - 1) d_i, X'_{a,I,i} -> t^a xi_I d_i,
///   Y_{a,j} -> (t^a - 1) del_j, Y'_{a,I,j} -> t^a xi_I del_j.
WElement psi_key(const TBasisKey& key, int m, int n);

/// psi of an element with constant coordinates supported on commutant keys.
/// Throws PreconditionError on plain-generator support or non-constant
/// coordinates.
WElement psi(const AWElement& x);

struct PsiPairReport {
    bool ok = false;
    bool closure_ok = false; // bracket has constant coords, no plain support
    std::string detail;      // mismatch description, empty when ok
    AWElement t_bracket;
};

/// Computes [k1, k2] in A.W, checks commutant closure, maps through psi and
/// compares with the bracket of the psi images inside m Delta.
PsiPairReport verify_psi_pair(const TBasisKey& k1, const TBasisKey& k2, int m, int n);

/// Image of an m Delta element under the quotient map to gl(m, n):
///   (t^a - 1) d_i -> sum_s a_s E_{s,i},  t^a xi_{j} d_i -> E_{m+j,i},
///   (t^a - 1) del_j -> sum_s a_s E_{s,m+j}, t^a xi_{s} del_j -> E_{m+s,m+j},
/// and 0 on |I| > 1. Throws PreconditionError when the input is not in
/// m Delta.
GlElement bar_psi(const WElement& x);

/// All commutant basis keys with |alpha_i| <= bound, deterministic order.
std::vector<TBasisKey> t_basis_keys(int m, int n, int alpha_bound);

/// The m Delta spanning set (t^a - 1) delta (a != 0), t^a xi_I delta (I != {})
/// with |alpha_i| <= bound and |I| <= max_xi, deterministic order.
std::vector<WElement> m_delta_spanning_set(int m, int n, int alpha_bound, int max_xi);

} // namespace witt
