#pragma once

// Test fixture: the tensor action with the Koszul factor (-1)^{|y|} dropped
// from the first summand of the x d_i line. One wrong sign, everything else
// identical; module-axiom sweeps must reject it.

#include "witt/tensor_module.hpp"

namespace witt::testing {

inline TensorVector mutated_tensor_action(const WElement& x, std::span<const Rational> lambda,
                                          const GlModule& V, const TensorVector& v) {
    TensorVector out(v.m(), v.n(), v.vdim());
    const int m = x.m(), n = x.n();
    for (const auto& [kx, cx] : x.terms()) {
        const auto& [xm, g] = kx;
        if (g.kind == GenKind::Del) {
            WElement single(m, n);
            single.add_term(kx, cx);
            out += tensor_action(single, lambda, V, v);
            continue;
        }
        for (const auto& [kv, cv] : v.terms()) {
            const auto& [ym, k] = kv;
            const Rational coef = cx * cv;
            for (int s = 1; s <= n; ++s) {
                auto dx = mono_xi_derive(s, xm);
                if (!dx) continue;
                auto prod = mono_mul(dx->mono, ym);
                if (!prod) continue;
                Rational c = coef;
                // sign_pow(px - 1 + py) in the real action; py dropped here
                if (dx->sign * prod->sign * sign_pow(xm.parity() - 1) < 0) c = -c;
                for (int r = 0; r < V.dim(); ++r) {
                    const Rational& e = V.E(m + s, g.index).at(static_cast<std::size_t>(r),
                                                               static_cast<std::size_t>(k));
                    if (!e.is_zero()) out.add_term(prod->mono, r, c * e);
                }
            }
            auto prod = mono_mul(xm, ym);
            if (!prod) continue;
            Rational c = coef;
            if (prod->sign < 0) c = -c;
            for (int s = 1; s <= m; ++s) {
                const long e = xm.alpha[static_cast<std::size_t>(s - 1)];
                if (e == 0) continue;
                for (int r = 0; r < V.dim(); ++r) {
                    const Rational& w = V.E(s, g.index).at(static_cast<std::size_t>(r),
                                                           static_cast<std::size_t>(k));
                    if (!w.is_zero()) out.add_term(prod->mono, r, c * Rational(e) * w);
                }
            }
            Rational eig = lambda[static_cast<std::size_t>(g.index - 1)];
            eig += Rational(ym.alpha[static_cast<std::size_t>(g.index - 1)]);
            out.add_term(prod->mono, k, c * eig);
        }
    }
    return out;
}

} // namespace witt::testing
