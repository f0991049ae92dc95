#include "witt/w_element.hpp"

#include "witt/prng.hpp"
#include "witt/verify.hpp"

#include <doctest.h>

using namespace witt;

namespace {

WElement basis_term(int m, int n, const ExpVec& a, XiMask xi, Generator g) {
    return WElement::term(m, n, SuperMonomial(a, xi), g);
}

} // namespace

TEST_CASE("bracket values pinned from the component-generation computation") {
    const int m = 2, n = 2;
    // [t^a d_1, t^b xi_I del_j] = b_1 t^{a+b} xi_I del_j
    const ExpVec a{1, -1}, b{2, 1};
    for (XiMask I = 0; I < 4u; ++I)
        for (int j = 1; j <= n; ++j) {
            WElement lhs = bracket(basis_term(m, n, a, 0, gen_d(1)), basis_term(m, n, b, I, gen_del(j)));
            WElement rhs = basis_term(m, n, add_exp(a, b), I, gen_del(j)) * Rational(b[0]);
            CHECK(lhs == rhs);
        }
    // [t^a xi_I del_1, t^b xi_1 d_i] = t^{a+b} xi_I d_i + (-1)^{|I|} a_i t^{a+b} xi_1 xi_I del_1
    for (XiMask I : {XiMask{0}, XiMask{2}, XiMask{3}}) // {}, {2}, {1,2}
        for (int i = 1; i <= m; ++i) {
            WElement lhs = bracket(basis_term(m, n, a, I, gen_del(1)), basis_term(m, n, b, 1, gen_d(i)));
            WElement rhs = basis_term(m, n, add_exp(a, b), I, gen_d(i));
            auto prod = mono_mul(SuperMonomial(zero_exp(m), 1), SuperMonomial(add_exp(a, b), I));
            if (prod) {
                Rational c(a[static_cast<std::size_t>(i - 1)]);
                if (mask_size(I) & 1) c = -c;
                if (prod->sign < 0) c = -c;
                rhs += WElement::term(m, n, prod->mono, gen_del(1), c);
            }
            CHECK(lhs == rhs);
        }
    // torus commutes, odd squares vanish
    CHECK(bracket(basis_term(m, n, zero_exp(m), 0, gen_d(1)), basis_term(m, n, zero_exp(m), 0, gen_d(2)))
              .is_zero());
    WElement del1 = basis_term(m, n, zero_exp(m), 0, gen_del(1));
    CHECK(bracket(del1, del1).is_zero());
    CHECK_THROWS_AS(bracket(del1, WElement::zero(1, 1)), DimMismatchError);
}

TEST_CASE("tilde bracket pinned examples") {
    const int m = 2, n = 2;
    const AElement zero_a = AElement::zero(m, n);
    const WElement zero_w = WElement::zero(m, n);
    // [d_1, t^{e_1}] = t^{e_1}
    WTildeElement d1{basis_term(m, n, zero_exp(m), 0, gen_d(1)), zero_a};
    WTildeElement te1{zero_w, t_power(m, n, unit_exp(m, 1))};
    WTildeElement out = bracket_tilde(d1, te1);
    CHECK(out.w.is_zero());
    CHECK(out.a == t_power(m, n, unit_exp(m, 1)));
    // [t^a, t^b] = 0
    WTildeElement ta{zero_w, t_power(m, n, ExpVec{1, 2})};
    WTildeElement tb{zero_w, t_power(m, n, ExpVec{-1, 3})};
    out = bracket_tilde(ta, tb);
    CHECK(out.w.is_zero());
    CHECK(out.a.is_zero());
    // [del_1, xi_1] = 1
    WTildeElement del1{basis_term(m, n, zero_exp(m), 0, gen_del(1)), zero_a};
    WTildeElement x1{zero_w, xi_element(m, n, 1)};
    out = bracket_tilde(del1, x1);
    CHECK(out.w.is_zero());
    CHECK(out.a == AElement::one(m, n));
    // odd-odd super skew-symmetry: [xi_1, del_1] = +[del_1, xi_1]
    out = bracket_tilde(x1, del1);
    CHECK(out.a == AElement::one(m, n));
}

TEST_CASE("tilde bracket satisfies super skew-symmetry and Jacobi on samples") {
    const int m = 2, n = 2;
    Rng rng(61);
    auto random_tilde = [&](int par) {
        WTildeElement e{WElement::zero(m, n), AElement::zero(m, n)};
        while (true) {
            const SuperMonomial mono(rng.exp_vec(m, 1), rng.mask(n));
            const Generator g = (rng.next() & 1) ? gen_d(static_cast<int>(rng.uniform(1, m)))
                                                 : gen_del(static_cast<int>(rng.uniform(1, n)));
            if (((mono.parity() + g.parity()) & 1) == par) {
                e.w.add_term(mono, g, rng.rational(3) + Rational(1));
                break;
            }
        }
        while (true) {
            const SuperMonomial mono(rng.exp_vec(m, 1), rng.mask(n));
            if (mono.parity() == par) {
                e.a.add_term(mono, rng.rational(3) + Rational(1));
                break;
            }
        }
        return e;
    };
    auto minus = [](const WTildeElement& x) { return WTildeElement{-x.w, -x.a}; };
    auto add = [](WTildeElement x, const WTildeElement& y) {
        x.w += y.w;
        x.a += y.a;
        return x;
    };
    for (int it = 0; it < 80; ++it) {
        const int px = static_cast<int>(rng.uniform(0, 1));
        const int py = static_cast<int>(rng.uniform(0, 1));
        const int pz = static_cast<int>(rng.uniform(0, 1));
        const WTildeElement x = random_tilde(px), y = random_tilde(py), z = random_tilde(pz);
        WTildeElement xy = bracket_tilde(x, y);
        WTildeElement yx = bracket_tilde(y, x);
        CHECK(xy == ((px & py) ? yx : minus(yx)));
        WTildeElement lhs = bracket_tilde(x, bracket_tilde(y, z));
        WTildeElement rhs = bracket_tilde(xy, z);
        WTildeElement t = bracket_tilde(y, bracket_tilde(x, z));
        rhs = add(rhs, (px & py) ? minus(t) : t);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sampled super skew-symmetry and Jacobi, plus grading additivity") {
    const int m = 2, n = 2;
    std::vector<WElement> basis;
    for (const auto& a : exp_window(m, 2))
        for (const auto& e : graded_component_basis(m, n, a)) basis.push_back(e);
    Rng rng(3);
    const long nb = static_cast<long>(basis.size());
    for (int it = 0; it < 300; ++it) {
        const WElement& x = basis[static_cast<std::size_t>(rng.uniform(0, nb - 1))];
        const WElement& y = basis[static_cast<std::size_t>(rng.uniform(0, nb - 1))];
        const WElement& z = basis[static_cast<std::size_t>(rng.uniform(0, nb - 1))];
        WElement xy = bracket(x, y);
        WElement yx = bracket(y, x);
        if ((x.parity() & y.parity()) == 0) yx = -yx;
        CHECK(xy == yx);
        // deg([x, y]) = deg(x) + deg(y)
        if (!xy.is_zero()) {
            const ExpVec want = add_exp(*x.degree_support().begin(), *y.degree_support().begin());
            for (const auto& d : xy.degree_support()) CHECK(d == want);
        }
        WElement lhs = bracket(x, bracket(y, z));
        WElement rhs = bracket(xy, z);
        WElement t = bracket(y, bracket(x, z));
        if ((x.parity() & y.parity()) != 0)
            rhs -= t;
        else
            rhs += t;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("graded component basis has dimension 2^n (m+n)") {
    CHECK(graded_component_basis(2, 2, ExpVec{1, -1}).size() == 16);
    CHECK(graded_component_basis(1, 0, ExpVec{5}).size() == 1);
    auto b01 = graded_component_basis(0, 1, zero_exp(0));
    CHECK(b01.size() == 2);
    CHECK(span_dim(b01) == 2);
}

TEST_CASE("span_dim pinned examples") {
    const int m = 2, n = 2;
    CHECK(span_dim(std::vector<WElement>{}) == 0);
    WElement x = basis_term(m, n, ExpVec{1, 0}, 1, gen_d(2));
    std::vector<WElement> dup{x, x};
    CHECK(span_dim(dup) == 1);
    // Component brackets generate the full target component (rank 2^n(m+n)).
    std::vector<WElement> brackets;
    for (const auto& u : graded_component_basis(m, n, ExpVec{1, 0}))
        for (const auto& v : graded_component_basis(m, n, ExpVec{0, 1}))
            brackets.push_back(bracket(u, v));
    CHECK(span_dim(brackets) == 16);
}

TEST_CASE("m Delta membership predicate and bracket closure") {
    const int m = 2, n = 2;
    WElement good(m, n);
    good.add_term(SuperMonomial(ExpVec{1, 0}, 0), gen_d(1), Rational(1));
    good.add_term(SuperMonomial(zero_exp(m), 0), gen_d(1), Rational(-1)); // (t^e1 - 1) d_1
    CHECK(in_m_delta(good));
    WElement bad = basis_term(m, n, ExpVec{1, 0}, 0, gen_d(1)); // t^e1 d_1
    CHECK(!in_m_delta(bad));
    CHECK(in_m_delta(basis_term(m, n, ExpVec{1, 0}, 1, gen_del(2)))); // xi part is in m

    const auto span = m_delta_spanning_set(m, n, 1, 2);
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        const auto& x = span[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(span.size()) - 1))];
        const auto& y = span[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(span.size()) - 1))];
        CHECK(in_m_delta(bracket(x, y)));
    }
}

TEST_CASE("glz twist pinned substitution and automorphism property") {
    const int m = 2, n = 1;
    CHECK(glz_twist(LatticeMatrix::identity(m), basis_term(m, n, ExpVec{3, -2}, 1, gen_del(1))) ==
          basis_term(m, n, ExpVec{3, -2}, 1, gen_del(1)));
    // swap of e_1, e_2 sends t^{e_1} d_1 to t^{e_2} d_2
    IntMatrix swp(2, 2);
    swp.at(0, 1) = 1;
    swp.at(1, 0) = 1;
    LatticeMatrix B(swp);
    CHECK(glz_twist(B, basis_term(m, n, ExpVec{1, 0}, 0, gen_d(1))) ==
          basis_term(m, n, ExpVec{0, 1}, 0, gen_d(2)));

    Rng rng(17);
    std::vector<WElement> basis;
    for (const auto& a : exp_window(m, 2))
        for (const auto& e : graded_component_basis(m, n, a)) basis.push_back(e);
    for (int it = 0; it < 60; ++it) {
        LatticeMatrix M = sample_unimodular(m, rng);
        const WElement& x = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
        const WElement& y = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
        CHECK(glz_twist(M, bracket(x, y)) == bracket(glz_twist(M, x), glz_twist(M, y)));
        LatticeMatrix M2 = sample_unimodular(m, rng);
        CHECK(glz_twist(M * M2, x) == glz_twist(M, glz_twist(M2, x)));
    }
}

TEST_CASE("degree components and apply") {
    const int m = 2, n = 2;
    WElement x = basis_term(m, n, ExpVec{1, 0}, 0, gen_d(1)) +
                 basis_term(m, n, ExpVec{0, 1}, 1, gen_del(2));
    CHECK(x.degree_support().size() == 2);
    CHECK(x.degree_component(ExpVec{1, 0}) == basis_term(m, n, ExpVec{1, 0}, 0, gen_d(1)));
    CHECK(x.degree_component(ExpVec{5, 5}).is_zero());
    // (t^a d_1)(t^b) = b_1 t^{a+b}
    AElement f = t_power(m, n, ExpVec{2, 3});
    CHECK(apply(basis_term(m, n, ExpVec{1, 0}, 0, gen_d(1)), f) ==
          t_power(m, n, ExpVec{3, 3}) * Rational(2));
}
