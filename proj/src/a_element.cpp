#include "witt/a_element.hpp"

#include <sstream>

namespace witt {

AElement::AElement(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || n > 32) throw PreconditionError("bad algebra dimensions");
}

AElement AElement::one(int m, int n) { return monomial(m, n, unit_monomial(m)); }

AElement AElement::monomial(int m, int n, SuperMonomial mono, Rational c) {
    AElement r(m, n);
    if (static_cast<int>(mono.alpha.size()) != m) throw DimMismatchError("monomial exponent length != m");
    if (n < 32 && (mono.xi >> n)) throw PreconditionError("xi index out of range");
    r.add_term(mono, c);
    return r;
}

void AElement::add_term(const SuperMonomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AElement::check_same(const AElement& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimMismatchError("A elements over different (m, n)");
}

bool AElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int p = terms_.begin()->first.parity();
    for (const auto& [mono, c] : terms_)
        if (mono.parity() != p) return false;
    return true;
}

int AElement::parity() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw PreconditionError("parity of a non-homogeneous element");
    return terms_.begin()->first.parity();
}

AElement AElement::parity_component(int p) const {
    AElement r(m_, n_);
    for (const auto& [mono, c] : terms_)
        if (mono.parity() == (p & 1)) r.terms_.emplace(mono, c);
    return r;
}

AElement& AElement::operator+=(const AElement& o) {
    check_same(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

AElement& AElement::operator-=(const AElement& o) {
    check_same(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

AElement& AElement::operator*=(const AElement& o) {
    check_same(o);
    AElement r(m_, n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto prod = mono_mul(ma, mb);
            if (!prod) continue;
            Rational c = ca * cb;
            if (prod->sign < 0) c = -c;
            r.add_term(prod->mono, c);
        }
    }
    *this = std::move(r);
    return *this;
}

AElement& AElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_) coef *= c;
    return *this;
}

AElement AElement::operator-() const {
    AElement r(m_, n_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

std::string AElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*" << mono.str();
        first = false;
    }
    return os.str();
}

AElement t_power(int m, int n, const ExpVec& alpha) {
    return AElement::monomial(m, n, SuperMonomial(alpha, 0));
}

AElement xi_element(int m, int n, XiMask I) {
    return AElement::monomial(m, n, SuperMonomial(zero_exp(m), I));
}

AElement xi_derive(int j, const AElement& a) {
    if (j < 1 || j > a.n()) throw PreconditionError("xi_derive: index out of range");
    AElement r(a.m(), a.n());
    for (const auto& [mono, c] : a.terms()) {
        auto d = mono_xi_derive(j, mono);
        if (!d) continue;
        Rational coef = c;
        if (d->sign < 0) coef = -coef;
        r.add_term(d->mono, coef);
    }
    return r;
}

AElement d_derive(int i, const AElement& a) {
    if (i < 1 || i > a.m()) throw PreconditionError("d_derive: index out of range");
    AElement r(a.m(), a.n());
    for (const auto& [mono, c] : a.terms()) {
        long e = mono.alpha[static_cast<std::size_t>(i - 1)];
        if (e == 0) continue;
        r.add_term(mono, c * Rational(e));
    }
    return r;
}

Rational eval_at_origin(const AElement& a) {
    Rational s;
    for (const auto& [mono, c] : a.terms())
        if (mono.xi == 0) s += c;
    return s;
}

} // namespace witt
