#include "witt/loop_algebra.hpp"

#include <sstream>

namespace witt {

void TBasisKey::validate(int m, int n) const {
    if (static_cast<int>(alpha.size()) != m) throw DimMismatchError("commutant key exponent length != m");
    const bool primed = kind == TKind::Xp || kind == TKind::Yp;
    if (!primed && is_zero_exp(alpha))
        throw PreconditionError("X/Y keys need alpha != 0");
    if (!primed && xi != 0) throw PreconditionError("X/Y keys carry no xi part");
    if (primed && xi == 0) throw PreconditionError("X'/Y' keys need a nonempty index set");
    if (n < 32 && (xi >> n)) throw PreconditionError("xi index out of range");
    const bool towards_d = kind == TKind::X || kind == TKind::Xp;
    const int bound = towards_d ? m : n;
    if (target < 1 || target > bound) throw PreconditionError("commutant key target out of range");
}

std::string TBasisKey::str() const {
    static const char* names[] = {"X", "Y", "X'", "Y'"};
    std::ostringstream os;
    os << names[static_cast<int>(kind)] << "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << ")";
    if (kind == TKind::Xp || kind == TKind::Yp) {
        os << "{";
        bool first = true;
        for (int j : list_from_mask(xi)) {
            os << (first ? "" : ",") << j;
            first = false;
        }
        os << "}";
    }
    os << "[" << target << "]";
    return os.str();
}

std::string BTildeKey::str() const { return is_plain() ? gen().str() : tkey().str(); }

AWElement AWElement::basis(int m, int n, const BTildeKey& key) {
    AWElement r(m, n);
    r.add_mono(key, unit_monomial(m), Rational(1));
    return r;
}

void AWElement::add(const BTildeKey& key, const AElement& f) {
    if (f.is_zero()) return;
    auto it = coords_.find(key);
    if (it == coords_.end()) {
        coords_.emplace(key, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

void AWElement::add_mono(const BTildeKey& key, const SuperMonomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto it = coords_.find(key);
    if (it == coords_.end()) it = coords_.emplace(key, AElement(m_, n_)).first;
    it->second.add_term(mono, c);
    if (it->second.is_zero()) coords_.erase(it);
}

bool AWElement::t_supported() const {
    for (const auto& [key, f] : coords_)
        if (key.is_plain()) return false;
    return true;
}

bool AWElement::constant_coords() const {
    for (const auto& [key, f] : coords_) {
        if (f.size() > 1) return false;
        if (f.size() == 1 && !f.terms().begin()->first.is_unit()) return false;
    }
    return true;
}

AWElement& AWElement::operator+=(const AWElement& o) {
    if (m_ != o.m_ || n_ != o.n_) throw DimMismatchError("A.W elements over different (m, n)");
    for (const auto& [key, f] : o.coords_) add(key, f);
    return *this;
}

AWElement& AWElement::operator-=(const AWElement& o) {
    if (m_ != o.m_ || n_ != o.n_) throw DimMismatchError("A.W elements over different (m, n)");
    for (const auto& [key, f] : o.coords_) add(key, -f);
    return *this;
}

AWElement& AWElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coords_.clear();
        return *this;
    }
    for (auto& [key, f] : coords_) f *= c;
    return *this;
}

std::string AWElement::str() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : coords_) {
        os << (first ? "" : " + ") << "[" << f.str() << "] . " << key.str();
        first = false;
    }
    return os.str();
}

std::vector<std::tuple<Rational, SuperMonomial, WKey>> defining_pairs(const BTildeKey& key, int m,
                                                                      int /*n*/) {
    std::vector<std::tuple<Rational, SuperMonomial, WKey>> out;
    if (key.is_plain()) {
        out.emplace_back(Rational(1), unit_monomial(m), WKey(unit_monomial(m), key.gen()));
        return out;
    }
    const TBasisKey& k = key.tkey();
    const Generator g = (k.kind == TKind::X || k.kind == TKind::Xp) ? gen_d(k.target)
                                                                    : gen_del(k.target);
    if (k.kind == TKind::X || k.kind == TKind::Y) {
        out.emplace_back(Rational(1), SuperMonomial(neg_exp(k.alpha), 0),
                         WKey(SuperMonomial(k.alpha, 0), g));
        out.emplace_back(Rational(-1), unit_monomial(m), WKey(unit_monomial(m), g));
        return out;
    }
    // X'/Y': sum over all J <= I of (-1)^{tau(J, I\J) + |J|} t^{-a} xi_J . t^a xi_{I\J} g
    XiMask sub = k.xi;
    while (true) {
        const XiMask rest = k.xi & ~sub;
        const int s = tau(sub, rest) + mask_size(sub);
        out.emplace_back(Rational(sign_pow(s)), SuperMonomial(neg_exp(k.alpha), sub),
                         WKey(SuperMonomial(k.alpha, rest), g));
        if (sub == 0) break;
        sub = (sub - 1) & k.xi;
    }
    return out;
}

AWPairForm pair_form(const AWElement& x) {
    AWPairForm out;
    auto put = [&out](std::pair<SuperMonomial, WKey> key, const Rational& c) {
        auto it = out.find(key);
        if (it == out.end()) {
            if (!c.is_zero()) out.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [key, f] : x.coords()) {
        const auto pairs = defining_pairs(key, x.m(), x.n());
        for (const auto& [fmono, cf] : f.terms())
            for (const auto& [c, g, w] : pairs) {
                auto prod = mono_mul(fmono, g);
                if (!prod) continue;
                Rational coef = cf * c;
                if (prod->sign < 0) coef = -coef;
                put({prod->mono, w}, coef);
            }
    }
    return out;
}

void accumulate_product(AWElement& out, const Rational& c, const SuperMonomial& f,
                        const SuperMonomial& wmono, const Generator& wgen) {
    // Free-basis expansion of the W term t^a xi_I delta:
    //   sum_{J < I} (-1)^{tau(J, I\J)} t^a xi_J . K'_{a, I\J, idx}
    //   + [a != 0] t^a xi_I . K_{a, idx} + t^a xi_I . delta
    const ExpVec& a = wmono.alpha;
    const XiMask I = wmono.xi;
    const bool towards_d = wgen.kind == GenKind::D;
    XiMask sub = I;
    while (true) {
        if (sub != I) {
            const XiMask rest = I & ~sub;
            Rational coef = c;
            if (sign_pow(tau(sub, rest)) < 0) coef = -coef;
            auto prod = mono_mul(f, SuperMonomial(a, sub));
            if (prod) {
                if (prod->sign < 0) coef = -coef;
                TBasisKey key{towards_d ? TKind::Xp : TKind::Yp, a, rest, wgen.index};
                out.add_mono(BTildeKey::t(std::move(key)), prod->mono, coef);
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & I;
    }
    auto full = mono_mul(f, wmono);
    if (full) {
        Rational coef = c;
        if (full->sign < 0) coef = -coef;
        if (!is_zero_exp(a)) {
            TBasisKey key{towards_d ? TKind::X : TKind::Y, a, 0, wgen.index};
            out.add_mono(BTildeKey::t(std::move(key)), full->mono, coef);
        }
        out.add_mono(BTildeKey::plain(wgen), full->mono, coef);
    }
}

AWElement embed_w(const WElement& x) {
    AWElement r(x.m(), x.n());
    const SuperMonomial one = unit_monomial(x.m());
    for (const auto& [key, c] : x.terms()) accumulate_product(r, c, one, key.first, key.second);
    return r;
}

namespace {

struct AWPair {
    Rational c;
    SuperMonomial f;
    SuperMonomial wmono;
    Generator wgen;
};

std::vector<AWPair> expand_pairs(const AWElement& x) {
    std::vector<AWPair> out;
    for (const auto& [key, f] : x.coords()) {
        const auto pairs = defining_pairs(key, x.m(), x.n());
        for (const auto& [fmono, cf] : f.terms())
            for (const auto& [c, g, w] : pairs) {
                auto prod = mono_mul(fmono, g);
                if (!prod) continue;
                Rational coef = cf * c;
                if (prod->sign < 0) coef = -coef;
                out.push_back(AWPair{std::move(coef), prod->mono, w.first, w.second});
            }
    }
    return out;
}

} // namespace

AWElement aw_bracket(const AWElement& x, const AWElement& y) {
    if (x.m() != y.m() || x.n() != y.n()) throw DimMismatchError("aw_bracket: (m, n) mismatch");
    const int m = x.m(), n = x.n();
    AWElement out(m, n);
    const auto px = expand_pairs(x);
    const auto py = expand_pairs(y);
    for (const auto& P : px) {
        const int pf = P.f.parity();
        const int pb = (P.wmono.parity() + P.wgen.parity()) & 1;
        for (const auto& Q : py) {
            const int pg = Q.f.parity();
            const int pd = (Q.wmono.parity() + Q.wgen.parity()) & 1;
            const Rational base = P.c * Q.c;
            // f [b, g] . d
            {
                Rational scale;
                auto dg = gen_apply(P.wgen, Q.f, scale);
                if (dg) {
                    auto bg = mono_mul(P.wmono, dg->mono);
                    if (bg) {
                        auto fbg = mono_mul(P.f, bg->mono);
                        if (fbg) {
                            Rational c = base * scale;
                            if (dg->sign * bg->sign * fbg->sign < 0) c = -c;
                            accumulate_product(out, c, fbg->mono, Q.wmono, Q.wgen);
                        }
                    }
                }
            }
            // - (-1)^{|fb||gd|} g [d, f] . b
            {
                Rational scale;
                auto df = gen_apply(Q.wgen, P.f, scale);
                if (df) {
                    auto dfm = mono_mul(Q.wmono, df->mono);
                    if (dfm) {
                        auto gdf = mono_mul(Q.f, dfm->mono);
                        if (gdf) {
                            Rational c = base * scale;
                            int s = df->sign * dfm->sign * gdf->sign;
                            if ((((pf + pb) & (pg + pd)) & 1) == 0) s = -s;
                            if (s < 0) c = -c;
                            accumulate_product(out, c, gdf->mono, P.wmono, P.wgen);
                        }
                    }
                }
            }
            // + (-1)^{|b||g|} f g . [b, d]
            {
                auto fg = mono_mul(P.f, Q.f);
                if (fg) {
                    WElement br = bracket(WElement::term(m, n, P.wmono, P.wgen),
                                          WElement::term(m, n, Q.wmono, Q.wgen));
                    if (!br.is_zero()) {
                        Rational c = base;
                        int s = fg->sign;
                        if ((pb & pg) != 0) s = -s;
                        if (s < 0) c = -c;
                        for (const auto& [wk, wc] : br.terms())
                            accumulate_product(out, c * wc, fg->mono, wk.first, wk.second);
                    }
                }
            }
        }
    }
    return out;
}

WElement psi_key(const TBasisKey& key, int m, int n) {
    key.validate(m, n);
    const Generator g = (key.kind == TKind::X || key.kind == TKind::Xp) ? gen_d(key.target)
                                                                        : gen_del(key.target);
    WElement r(m, n);
    if (key.kind == TKind::X || key.kind == TKind::Y) {
        r.add_term(SuperMonomial(key.alpha, 0), g, Rational(1));
        r.add_term(unit_monomial(m), g, Rational(-1));
    } else {
        r.add_term(SuperMonomial(key.alpha, key.xi), g, Rational(1));
    }
    return r;
}

WElement psi(const AWElement& x) {
    WElement r(x.m(), x.n());
    for (const auto& [key, f] : x.coords()) {
        if (key.is_plain())
            throw PreconditionError("psi: element has plain-generator support");
        if (f.size() != 1 || !f.terms().begin()->first.is_unit())
            throw PreconditionError("psi: non-constant coordinate on " + key.str());
        const Rational& c = f.terms().begin()->second;
        WElement img = psi_key(key.tkey(), x.m(), x.n());
        img *= c;
        r += img;
    }
    return r;
}

PsiPairReport verify_psi_pair(const TBasisKey& k1, const TBasisKey& k2, int m, int n) {
    PsiPairReport rep;
    rep.t_bracket = aw_bracket(AWElement::basis(m, n, BTildeKey::t(k1)),
                               AWElement::basis(m, n, BTildeKey::t(k2)));
    rep.closure_ok = rep.t_bracket.t_supported() && rep.t_bracket.constant_coords();
    if (!rep.closure_ok) {
        rep.detail = "bracket left the commutant span: " + rep.t_bracket.str();
        return rep;
    }
    const WElement lhs = psi(rep.t_bracket);
    const WElement rhs = bracket(psi_key(k1, m, n), psi_key(k2, m, n));
    if (lhs == rhs) {
        rep.ok = true;
    } else {
        rep.detail = "psi([x,y]) = " + lhs.str() + " vs [psi x, psi y] = " + rhs.str();
    }
    return rep;
}

GlElement bar_psi(const WElement& x) {
    if (!in_m_delta(x)) throw PreconditionError("bar_psi: element is not in m Delta");
    const int m = x.m(), n = x.n();
    GlElement out(GlDims{m, n});
    auto add_unit = [&out](int a, int b, const Rational& c) {
        out.mat().at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) += c;
    };
    for (const auto& [key, c] : x.terms()) {
        const auto& [mono, g] = key;
        const int col = g.kind == GenKind::D ? g.index : m + g.index;
        if (mono.xi == 0) {
            // c t^a delta = c (t^a - 1) delta + c delta; the constants cancel
            // across terms by the m Delta precondition.
            for (int s = 1; s <= m; ++s) {
                const long e = mono.alpha[static_cast<std::size_t>(s - 1)];
                if (e != 0) add_unit(s, col, c * Rational(e));
            }
        } else if (mask_size(mono.xi) == 1) {
            const int j = list_from_mask(mono.xi)[0];
            add_unit(m + j, col, c);
        }
        // |I| > 1 maps to 0.
    }
    return out;
}

std::vector<TBasisKey> t_basis_keys(int m, int n, int alpha_bound) {
    std::vector<TBasisKey> keys;
    const auto window = exp_window(m, alpha_bound);
    for (const auto& a : window) {
        if (!is_zero_exp(a)) {
            for (int i = 1; i <= m; ++i) keys.push_back(TBasisKey{TKind::X, a, 0, i});
            for (int j = 1; j <= n; ++j) keys.push_back(TBasisKey{TKind::Y, a, 0, j});
        }
        for (XiMask xi = 1; xi < (XiMask{1} << n); ++xi) {
            for (int i = 1; i <= m; ++i) keys.push_back(TBasisKey{TKind::Xp, a, xi, i});
            for (int j = 1; j <= n; ++j) keys.push_back(TBasisKey{TKind::Yp, a, xi, j});
        }
    }
    return keys;
}

std::vector<WElement> m_delta_spanning_set(int m, int n, int alpha_bound, int max_xi) {
    std::vector<WElement> out;
    const auto window = exp_window(m, alpha_bound);
    auto generators = [&](auto&& emit) {
        for (int i = 1; i <= m; ++i) emit(gen_d(i));
        for (int j = 1; j <= n; ++j) emit(gen_del(j));
    };
    for (const auto& a : window) {
        if (!is_zero_exp(a)) {
            generators([&](Generator g) {
                WElement e(m, n);
                e.add_term(SuperMonomial(a, 0), g, Rational(1));
                e.add_term(unit_monomial(m), g, Rational(-1));
                out.push_back(std::move(e));
            });
        }
        for (XiMask xi = 1; xi < (XiMask{1} << n); ++xi) {
            if (mask_size(xi) > max_xi) continue;
            generators([&](Generator g) {
                out.push_back(WElement::term(m, n, SuperMonomial(a, xi), g));
            });
        }
    }
    return out;
}

} // namespace witt
