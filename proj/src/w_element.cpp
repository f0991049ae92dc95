#include "witt/w_element.hpp"

#include <sstream>

namespace witt {

std::string Generator::str() const {
    std::ostringstream os;
    if (kind == GenKind::D)
        os << "d" << index;
    else
        os << "del" << index;
    return os.str();
}

WElement::WElement(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || n > 32) throw PreconditionError("bad algebra dimensions");
}

WElement WElement::term(int m, int n, SuperMonomial mono, Generator g, Rational c) {
    WElement r(m, n);
    if (static_cast<int>(mono.alpha.size()) != m) throw DimMismatchError("monomial exponent length != m");
    const int bound = g.kind == GenKind::D ? m : n;
    if (g.index < 1 || g.index > bound) throw PreconditionError("generator index out of range");
    r.add_term(mono, g, c);
    return r;
}

void WElement::add_term(const WKey& key, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WElement::check_same(const WElement& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimMismatchError("W elements over different (m, n)");
}

bool WElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int p = wkey_parity(terms_.begin()->first);
    for (const auto& [key, c] : terms_)
        if (wkey_parity(key) != p) return false;
    return true;
}

int WElement::parity() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw PreconditionError("parity of a non-homogeneous element");
    return wkey_parity(terms_.begin()->first);
}

WElement WElement::parity_component(int p) const {
    WElement r(m_, n_);
    for (const auto& [key, c] : terms_)
        if (wkey_parity(key) == (p & 1)) r.terms_.emplace(key, c);
    return r;
}

std::set<ExpVec> WElement::degree_support() const {
    std::set<ExpVec> s;
    for (const auto& [key, c] : terms_) s.insert(key.first.alpha);
    return s;
}

WElement WElement::degree_component(const ExpVec& alpha) const {
    WElement r(m_, n_);
    for (const auto& [key, c] : terms_)
        if (key.first.alpha == alpha) r.terms_.emplace(key, c);
    return r;
}

WElement& WElement::operator+=(const WElement& o) {
    check_same(o);
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

WElement& WElement::operator-=(const WElement& o) {
    check_same(o);
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
}

WElement& WElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coef] : terms_) coef *= c;
    return *this;
}

WElement WElement::operator-() const {
    WElement r(m_, n_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

std::string WElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*" << key.first.str() << " "
           << key.second.str();
        first = false;
    }
    return os.str();
}

std::optional<SignedMonomial> gen_apply(const Generator& g, const SuperMonomial& mono,
                                        Rational& scale) {
    if (g.kind == GenKind::D) {
        long e = mono.alpha[static_cast<std::size_t>(g.index - 1)];
        if (e == 0) return std::nullopt;
        scale = Rational(e);
        return SignedMonomial{1, mono};
    }
    auto d = mono_xi_derive(g.index, mono);
    if (!d) return std::nullopt;
    scale = Rational(1);
    return d;
}

AElement apply(const WElement& w, const AElement& f) {
    if (w.m() != f.m() || w.n() != f.n()) throw DimMismatchError("apply: (m, n) mismatch");
    AElement r(f.m(), f.n());
    for (const auto& [key, cw] : w.terms()) {
        const auto& [mono, g] = key;
        for (const auto& [fm, cf] : f.terms()) {
            Rational scale;
            auto d = gen_apply(g, fm, scale);
            if (!d) continue;
            auto prod = mono_mul(mono, d->mono);
            if (!prod) continue;
            Rational c = cw * cf * scale;
            if (d->sign * prod->sign < 0) c = -c;
            r.add_term(prod->mono, c);
        }
    }
    return r;
}

namespace {

/// [a delta, b delta'] on basis terms, appended into out.
void bracket_terms(const SuperMonomial& a, const Generator& da, const SuperMonomial& b,
                   const Generator& db, const Rational& coef, WElement& out) {
    const int pa = (a.parity() + da.parity()) & 1;
    const int pb = (b.parity() + db.parity()) & 1;
    {
        Rational scale;
        auto d = gen_apply(da, b, scale);
        if (d) {
            auto prod = mono_mul(a, d->mono);
            if (prod) {
                Rational c = coef * scale;
                if (d->sign * prod->sign < 0) c = -c;
                out.add_term(prod->mono, db, c);
            }
        }
    }
    {
        Rational scale;
        auto d = gen_apply(db, a, scale);
        if (d) {
            auto prod = mono_mul(b, d->mono);
            if (prod) {
                Rational c = coef * scale;
                int s = d->sign * prod->sign;
                if ((pa & pb) == 0) s = -s; // -(-1)^{pa pb}
                if (s < 0) c = -c;
                out.add_term(prod->mono, da, c);
            }
        }
    }
}

} // namespace

WElement bracket(const WElement& x, const WElement& y) {
    if (x.m() != y.m() || x.n() != y.n()) throw DimMismatchError("bracket: (m, n) mismatch");
    WElement r(x.m(), x.n());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            bracket_terms(kx.first, kx.second, ky.first, ky.second, cx * cy, r);
    return r;
}

WElement a_mul_w(const AElement& f, const WElement& w) {
    if (w.m() != f.m() || w.n() != f.n()) throw DimMismatchError("a_mul_w: (m, n) mismatch");
    WElement r(w.m(), w.n());
    for (const auto& [fm, cf] : f.terms())
        for (const auto& [key, cw] : w.terms()) {
            auto prod = mono_mul(fm, key.first);
            if (!prod) continue;
            Rational c = cf * cw;
            if (prod->sign < 0) c = -c;
            r.add_term(prod->mono, key.second, c);
        }
    return r;
}

WTildeElement bracket_tilde(const WTildeElement& x, const WTildeElement& y) {
    WTildeElement r{bracket(x.w, y.w), AElement(x.a.m(), x.a.n())};
    r.a += apply(x.w, y.a);
    // - (-1)^{|w'||a|} w'(a), term by term so mixed-parity inputs work.
    for (const auto& [ky, cy] : y.w.terms()) {
        const int pw = wkey_parity(ky);
        for (const auto& [ma, ca] : x.a.terms()) {
            Rational scale;
            auto d = gen_apply(ky.second, ma, scale);
            if (!d) continue;
            auto prod = mono_mul(ky.first, d->mono);
            if (!prod) continue;
            Rational c = cy * ca * scale;
            int s = d->sign * prod->sign;
            if ((pw & ma.parity()) == 0) s = -s;
            if (s < 0) c = -c;
            r.a.add_term(prod->mono, c);
        }
    }
    return r;
}

std::vector<WElement> graded_component_basis(int m, int n, const ExpVec& alpha) {
    if (static_cast<int>(alpha.size()) != m) throw DimMismatchError("degree vector length != m");
    std::vector<WElement> basis;
    basis.reserve((std::size_t{1} << n) * static_cast<std::size_t>(m + n));
    for (XiMask xi = 0; xi < (XiMask{1} << n); ++xi) {
        SuperMonomial mono(alpha, xi);
        for (int i = 1; i <= m; ++i) basis.push_back(WElement::term(m, n, mono, gen_d(i)));
        for (int j = 1; j <= n; ++j) basis.push_back(WElement::term(m, n, mono, gen_del(j)));
    }
    return basis;
}

int span_dim(std::span<const WElement> elements) {
    if (elements.empty()) return 0;
    std::map<WKey, std::size_t> columns;
    for (const auto& e : elements)
        for (const auto& [key, c] : e.terms())
            columns.emplace(key, columns.size());
    if (columns.empty()) return 0;
    QMatrix mat(elements.size(), columns.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& [key, c] : elements[i].terms()) mat.at(i, columns.at(key)) = c;
    return rank(std::move(mat));
}

bool in_m_delta(const WElement& x) {
    std::map<Generator, Rational> constants;
    for (const auto& [key, c] : x.terms())
        if (key.first.xi == 0) constants[key.second] += c;
    for (const auto& [g, c] : constants)
        if (!c.is_zero()) return false;
    return true;
}

WElement glz_twist(const LatticeMatrix& B, const WElement& x) {
    if (static_cast<int>(B.dim()) != x.m()) throw DimMismatchError("glz_twist: matrix size != m");
    WElement r(x.m(), x.n());
    for (const auto& [key, c] : x.terms()) {
        SuperMonomial mono(B.apply(key.first.alpha), key.first.xi);
        if (key.second.kind == GenKind::Del) {
            r.add_term(mono, key.second, c);
            continue;
        }
        // d_{e_i B^{-1}} = sum_s (B^{-1})_{i s} d_s
        const std::size_t i = static_cast<std::size_t>(key.second.index - 1);
        for (std::size_t s = 0; s < B.dim(); ++s) {
            long long e = B.inv().at(i, s);
            if (e == 0) continue;
            r.add_term(mono, gen_d(static_cast<int>(s) + 1), c * Rational(e));
        }
    }
    return r;
}

WElement d_mu_element(int m, int n, std::span<const Rational> mu, const ExpVec& beta) {
    if (static_cast<int>(mu.size()) != m) throw DimMismatchError("mu length != m");
    WElement r(m, n);
    SuperMonomial mono(beta, 0);
    for (int i = 1; i <= m; ++i) r.add_term(mono, gen_d(i), mu[static_cast<std::size_t>(i - 1)]);
    return r;
}

} // namespace witt
