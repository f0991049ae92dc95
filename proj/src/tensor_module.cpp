#include "witt/tensor_module.hpp"

#include <sstream>

namespace witt {

TensorVector::TensorVector(int m, int n, int vdim) : m_(m), n_(n), vdim_(vdim) {
    if (m < 0 || n < 0 || n > 32 || vdim <= 0) throw PreconditionError("bad tensor module shape");
}

TensorVector TensorVector::term(int m, int n, int vdim, SuperMonomial mono, int k, Rational c) {
    TensorVector r(m, n, vdim);
    if (static_cast<int>(mono.alpha.size()) != m) throw DimMismatchError("monomial exponent length != m");
    if (k < 0 || k >= vdim) throw PreconditionError("module basis index out of range");
    r.add_term(mono, k, c);
    return r;
}

void TensorVector::add_term(const SuperMonomial& mono, int k, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(mono, k);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (m_ != o.m_ || n_ != o.n_ || vdim_ != o.vdim_)
        throw DimMismatchError("tensor vectors over different shapes");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (m_ != o.m_ || n_ != o.n_ || vdim_ != o.vdim_)
        throw DimMismatchError("tensor vectors over different shapes");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

TensorVector& TensorVector::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coef] : terms_) coef *= c;
    return *this;
}

std::string TensorVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*" << key.first.str() << " (x) v"
           << key.second;
        first = false;
    }
    return os.str();
}

TensorVector a_mul(const AElement& a, const TensorVector& v) {
    if (a.m() != v.m() || a.n() != v.n()) throw DimMismatchError("a_mul: (m, n) mismatch");
    TensorVector r(v.m(), v.n(), v.vdim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [key, cv] : v.terms()) {
            auto prod = mono_mul(ma, key.first);
            if (!prod) continue;
            Rational c = ca * cv;
            if (prod->sign < 0) c = -c;
            r.add_term(prod->mono, key.second, c);
        }
    return r;
}

namespace {

/// Scatters c . (mono (x) E_{ab} v_k) into out.
void add_module_image(TensorVector& out, const GlModule& V, int a, int b,
                      const SuperMonomial& mono, int k, const Rational& c) {
    const QMatrix& mat = V.E(a, b);
    for (int r = 0; r < V.dim(); ++r) {
        const Rational& e = mat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
        if (e.is_zero()) continue;
        out.add_term(mono, r, c * e);
    }
}

/// Shared body for the two displayed action formulas. `even_cols` is the
/// number of even gl columns (m for the full action, m-1 for the primed one);
/// `x_proj` strips the Laurent exponents down to the tensor factor's m.
template <typename Proj>
void action_term(TensorVector& out, const GlModule& V, std::span<const Rational> lambda,
                 const Rational& coef, const SuperMonomial& xm, const Generator& g,
                 const SuperMonomial& ym, int k, int even_cols, const Proj& x_proj) {
    const int n = out.n();
    const int px = xm.parity();
    const int py = ym.parity();
    if (g.kind == GenKind::D) {
        const int col = g.index;
        // first line of the action
        for (int s = 1; s <= n; ++s) {
            auto dx = mono_xi_derive(s, xm);
            if (!dx) continue;
            auto prod = mono_mul(x_proj(dx->mono), ym);
            if (!prod) continue;
            Rational c = coef;
            int sign = dx->sign * prod->sign * sign_pow(px - 1 + py);
            if (sign < 0) c = -c;
            add_module_image(out, V, even_cols + s, col, prod->mono, k, c);
        }
        auto prod = mono_mul(x_proj(xm), ym);
        if (!prod) return;
        Rational c = coef;
        if (prod->sign < 0) c = -c;
        for (int s = 1; s <= even_cols; ++s) {
            const long e = xm.alpha[static_cast<std::size_t>(s - 1)];
            if (e == 0) continue;
            add_module_image(out, V, s, col, prod->mono, k, c * Rational(e));
        }
        // x (d_i(y) + lambda_i y) (x) v
        Rational eig = lambda[static_cast<std::size_t>(g.index - 1)];
        eig += Rational(ym.alpha[static_cast<std::size_t>(g.index - 1)]);
        out.add_term(prod->mono, k, c * eig);
    } else {
        // second line of the action
        for (int s = 1; s <= n; ++s) {
            auto dx = mono_xi_derive(s, xm);
            if (!dx) continue;
            auto prod = mono_mul(x_proj(dx->mono), ym);
            if (!prod) continue;
            Rational c = coef;
            int sign = dx->sign * prod->sign * sign_pow(px - 1);
            if (sign < 0) c = -c;
            add_module_image(out, V, even_cols + s, even_cols + g.index, prod->mono, k, c);
        }
        auto prod = mono_mul(x_proj(xm), ym);
        if (prod) {
            Rational c = coef;
            int sign = prod->sign * sign_pow(py);
            if (sign < 0) c = -c;
            for (int s = 1; s <= even_cols; ++s) {
                const long e = xm.alpha[static_cast<std::size_t>(s - 1)];
                if (e == 0) continue;
                add_module_image(out, V, s, even_cols + g.index, prod->mono, k, c * Rational(e));
            }
        }
        auto dy = mono_xi_derive(g.index, ym);
        if (dy) {
            auto prod2 = mono_mul(x_proj(xm), dy->mono);
            if (prod2) {
                Rational c = coef;
                if (dy->sign * prod2->sign < 0) c = -c;
                out.add_term(prod2->mono, k, c);
            }
        }
    }
}

} // namespace

TensorVector tensor_action(const WElement& x, std::span<const Rational> lambda, const GlModule& V,
                           const TensorVector& v) {
    if (x.m() != v.m() || x.n() != v.n()) throw DimMismatchError("tensor_action: (m, n) mismatch");
    if (static_cast<int>(lambda.size()) != x.m()) throw DimMismatchError("lambda length != m");
    if (!(V.dims() == GlDims{x.m(), x.n()})) throw DimMismatchError("module over wrong gl(p, q)");
    if (V.dim() != v.vdim()) throw DimMismatchError("vector over wrong module dimension");
    TensorVector out(v.m(), v.n(), v.vdim());
    auto ident = [](const SuperMonomial& mo) { return mo; };
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [kv, cv] : v.terms())
            action_term(out, V, lambda, cx * cv, kx.first, kx.second, kv.first, kv.second, x.m(),
                        ident);
    return out;
}

TensorVector tensor_action_prime(const WElement& x, std::span<const Rational> lambda,
                                 const GlModule& V, const TensorVector& v) {
    const int m = x.m(), n = x.n();
    if (m < 1) throw PreconditionError("primed action needs m >= 1");
    if (v.m() != m - 1 || v.n() != n) throw DimMismatchError("tensor factor must live over A_{m-1,n}");
    if (static_cast<int>(lambda.size()) != m) throw DimMismatchError("lambda length != m");
    if (!(V.dims() == GlDims{m - 1, n})) throw DimMismatchError("module over wrong gl(p, q)");
    if (V.dim() != v.vdim()) throw DimMismatchError("vector over wrong module dimension");
    for (const auto& [kx, cx] : x.terms())
        if (kx.first.alpha[static_cast<std::size_t>(m - 1)] != 0)
            throw PreconditionError("element is not in W' (nonzero degree in t_m)");
    TensorVector out(m - 1, n, v.vdim());
    auto proj = [](const SuperMonomial& mo) {
        ExpVec a(mo.alpha.begin(), mo.alpha.end() - 1);
        return SuperMonomial(std::move(a), mo.xi);
    };
    const Rational& lam_m = lambda[static_cast<std::size_t>(m - 1)];
    for (const auto& [kx, cx] : x.terms()) {
        const auto& g = kx.second;
        if (g.kind == GenKind::D && g.index == m) {
            // x d_m . (y (x) v) = lambda_m x y (x) v
            for (const auto& [kv, cv] : v.terms()) {
                auto prod = mono_mul(proj(kx.first), kv.first);
                if (!prod) continue;
                Rational c = cx * cv * lam_m;
                if (prod->sign < 0) c = -c;
                out.add_term(prod->mono, kv.second, c);
            }
            continue;
        }
        for (const auto& [kv, cv] : v.terms())
            action_term(out, V, lambda, cx * cv, kx.first, g, kv.first, kv.second, m - 1, proj);
    }
    return out;
}

WeightTable weight_char(std::span<const Rational> lambda, const GlModule& V, int m, int n,
                        const std::vector<ExpVec>& window) {
    WeightTable table;
    for (const auto& alpha : window) {
        std::vector<Rational> weight(lambda.begin(), lambda.end());
        for (int i = 0; i < m; ++i) weight[static_cast<std::size_t>(i)] += Rational(alpha[static_cast<std::size_t>(i)]);
        long count = 0;
        for (XiMask xi = 0; xi < (XiMask{1} << n); ++xi)
            for (int k = 0; k < V.dim(); ++k) {
                TensorVector v = TensorVector::term(m, n, V.dim(), SuperMonomial(alpha, xi), k);
                for (int i = 1; i <= m; ++i) {
                    TensorVector dv =
                        tensor_action(WElement::term(m, n, unit_monomial(m), gen_d(i)), lambda, V, v);
                    TensorVector expect = v;
                    expect *= weight[static_cast<std::size_t>(i - 1)];
                    if (dv != expect)
                        throw PreconditionError("d_i action is not diagonal on the weight basis");
                }
                ++count;
            }
        if (count > 0) table[std::move(weight)] = count;
    }
    return table;
}

TensorVector annihilator_probe(int l, const ExpVec& alpha, const ExpVec& beta,
                               const ExpVec& gamma, XiMask I, Generator del,
                               std::span<const Rational> mu, const TensorVector& v,
                               std::span<const Rational> lambda, const GlModule& V) {
    if (is_zero_exp(gamma)) throw PreconditionError("annihilator probe needs gamma != 0");
    const int m = v.m(), n = v.n();
    TensorVector acc(m, n, v.vdim());
    ExpVec hi = alpha, lo = beta;
    for (int i = 0; i <= l; ++i) {
        const WElement lower = d_mu_element(m, n, mu, lo);
        WElement upper(m, n);
        upper.add_term(SuperMonomial(hi, I), del, Rational(1));
        TensorVector w = tensor_action(upper, lambda, V, tensor_action(lower, lambda, V, v));
        Rational c = Rational::binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(i));
        if (i & 1) c = -c;
        w *= c;
        acc += w;
        hi = add_exp(hi, gamma);
        lo = add_exp(lo, neg_exp(gamma));
    }
    return acc;
}

ProbeSearchResult find_min_l0(const ExpVec& gamma, std::span<const Rational> lambda, const GlModule& V,
                          int m, int n, const std::vector<ProbeSample>& samples,
                          const ExpVec& v_offset, int l_max) {
    ProbeSearchResult res;
    res.per_sample_l0.assign(samples.size(), -1);
    std::vector<TensorVector> basis;
    for (XiMask xi = 0; xi < (XiMask{1} << n); ++xi)
        for (int k = 0; k < V.dim(); ++k)
            basis.push_back(TensorVector::term(m, n, V.dim(), SuperMonomial(v_offset, xi), k));
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& smp = samples[s];
        for (int l = 0; l <= l_max; ++l) {
            bool all_zero = true;
            for (const auto& v : basis)
                if (!annihilator_probe(l, smp.alpha, smp.beta, gamma, smp.I, smp.del, smp.mu, v,
                                       lambda, V)
                         .is_zero()) {
                    all_zero = false;
                    break;
                }
            if (all_zero) {
                res.per_sample_l0[s] = l;
                break;
            }
        }
        if (res.per_sample_l0[s] < 0) return res; // not found within bound
    }
    res.found = true;
    res.l0 = 0;
    for (int l : res.per_sample_l0) res.l0 = std::max(res.l0, l);
    return res;
}

AxiomReport verify_module_axiom(std::span<const WElement> xs, std::span<const WElement> ys,
                                std::span<const TensorVector> vs, const ModuleAction& act) {
    AxiomReport rep;
    for (const auto& x : xs) {
        const int px = x.parity();
        std::vector<TensorVector> xv;
        xv.reserve(vs.size());
        for (const auto& v : vs) xv.push_back(act(x, v));
        for (const auto& y : ys) {
            const int py = y.parity();
            const WElement br = bracket(x, y);
            for (std::size_t iv = 0; iv < vs.size(); ++iv) {
                ++rep.checked;
                TensorVector lhs = act(br, vs[iv]);
                TensorVector rhs = act(x, act(y, vs[iv]));
                TensorVector yxv = act(y, xv[iv]);
                if ((px & py) != 0)
                    rhs += yxv;
                else
                    rhs -= yxv;
                if (lhs != rhs) {
                    ++rep.failures;
                    if (rep.first_failure.empty())
                        rep.first_failure = "x = " + x.str() + "; y = " + y.str() +
                                            "; v = " + vs[iv].str() + "; [x,y]v = " + lhs.str() +
                                            "; x(yv) -+ y(xv) = " + rhs.str();
                }
            }
        }
    }
    return rep;
}

} // namespace witt
