#include "witt/a_element.hpp"

#include "witt/prng.hpp"

#include <doctest.h>

using namespace witt;

namespace {

AElement random_homogeneous(Rng& rng, int m, int n, int terms) {
    // All terms share one xi-size parity so the element is homogeneous.
    const int par = static_cast<int>(rng.uniform(0, 1));
    AElement r(m, n);
    int made = 0;
    while (made < terms) {
        XiMask xi = rng.mask(n);
        if ((mask_size(xi) & 1) != par) continue;
        r.add_term(SuperMonomial(rng.exp_vec(m, 2), xi), rng.rational(4));
        ++made;
    }
    return r;
}

} // namespace

TEST_CASE("pinned multiplication examples") {
    const int m = 2, n = 2;
    AElement xi1 = xi_element(m, n, mask_from_list({1}, n));
    AElement xi2 = xi_element(m, n, mask_from_list({2}, n));
    CHECK((xi1 * xi1).is_zero());
    AElement xi12 = xi_element(m, n, mask_from_list({1, 2}, n));
    CHECK(xi2 * xi1 == -xi12);
    AElement ta = t_power(m, n, ExpVec{1, -2});
    AElement tb = t_power(m, n, ExpVec{3, 5});
    CHECK(ta * tb == t_power(m, n, ExpVec{4, 3}));
    CHECK_THROWS_AS(ta * AElement::one(1, 1), DimMismatchError);
}

TEST_CASE("pinned derivation examples") {
    const int m = 2, n = 2;
    CHECK(xi_derive(1, xi_element(m, n, 1)) == AElement::one(m, n));
    // d xi_{1,2} / d xi_2 = -xi_1
    CHECK(xi_derive(2, xi_element(m, n, mask_from_list({1, 2}, n))) ==
          -xi_element(m, n, mask_from_list({1}, n)));
    CHECK(xi_derive(1, t_power(m, n, ExpVec{3, 1})).is_zero());
    // d_1 t^{(2,0)} = 2 t^{(2,0)}
    CHECK(d_derive(1, t_power(m, n, ExpVec{2, 0})) == t_power(m, n, ExpVec{2, 0}) * Rational(2));
    CHECK(d_derive(1, xi_element(m, n, 1)).is_zero());
    // d_2 (t^{(1,-3)} xi_1) = -3 t^{(1,-3)} xi_1
    AElement a = AElement::monomial(m, n, SuperMonomial(ExpVec{1, -3}, 1));
    CHECK(d_derive(2, a) == a * Rational(-3));
    CHECK_THROWS_AS(xi_derive(3, a), PreconditionError);
    CHECK_THROWS_AS(d_derive(0, a), PreconditionError);
}

TEST_CASE("eval_at_origin pinned examples and homomorphism property") {
    const int m = 2, n = 2;
    CHECK(eval_at_origin(t_power(m, n, ExpVec{4, -1}) - AElement::one(m, n)).is_zero());
    CHECK(eval_at_origin(xi_element(m, n, mask_from_list({1, 2}, n))).is_zero());
    CHECK(eval_at_origin(AElement::one(m, n) * Rational(3)) == Rational(3));

    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        AElement a = random_homogeneous(rng, m, n, 3);
        AElement b = random_homogeneous(rng, m, n, 3);
        CHECK(eval_at_origin(a * b) == eval_at_origin(a) * eval_at_origin(b));
    }
}

TEST_CASE("supercommutativity and associativity on random homogeneous elements") {
    const int m = 2, n = 3;
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        AElement a = random_homogeneous(rng, m, n, 2);
        AElement b = random_homogeneous(rng, m, n, 2);
        AElement c = random_homogeneous(rng, m, n, 2);
        AElement ab = a * b;
        AElement ba = b * a;
        if ((a.parity() & b.parity()) != 0)
            CHECK(ab == -ba);
        else
            CHECK(ab == ba);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("xi_{I u J} = (-1)^tau xi_I xi_J exhaustively for n = 4") {
    const int n = 4;
    for (XiMask I = 0; I < (1u << n); ++I)
        for (XiMask J = 0; J < (1u << n); ++J) {
            if (I & J) continue;
            AElement lhs = xi_element(0, n, I | J) * Rational(sign_pow(tau(I, J)));
            CHECK(lhs == xi_element(0, n, I) * xi_element(0, n, J));
        }
}

TEST_CASE("super-Leibniz rule for every generator derivation") {
    const int m = 2, n = 3;
    Rng rng(13);
    for (int it = 0; it < 40; ++it) {
        AElement a = random_homogeneous(rng, m, n, 2);
        AElement b = random_homogeneous(rng, m, n, 2);
        for (int i = 1; i <= m; ++i) {
            CHECK(d_derive(i, a * b) == d_derive(i, a) * b + a * d_derive(i, b));
        }
        for (int j = 1; j <= n; ++j) {
            AElement rhs = xi_derive(j, a) * b;
            AElement second = a * xi_derive(j, b);
            if (a.parity() != 0) rhs -= second; // (-1)^{|del||a|}
            else rhs += second;
            CHECK(xi_derive(j, a * b) == rhs);
        }
    }
}

TEST_CASE("odd derivations square to zero and anticommute, all monomials n = 4") {
    const int n = 4;
    for (XiMask I = 0; I < (1u << n); ++I) {
        AElement a = xi_element(0, n, I);
        for (int j = 1; j <= n; ++j) {
            CHECK(xi_derive(j, xi_derive(j, a)).is_zero());
            for (int k = 1; k <= n; ++k) {
                if (k == j) continue;
                CHECK(xi_derive(j, xi_derive(k, a)) == -xi_derive(k, xi_derive(j, a)));
            }
        }
    }
}

TEST_CASE("parity queries answer consistently with term parities") {
    const int m = 1, n = 2;
    AElement even = t_power(m, n, ExpVec{2}) + xi_element(m, n, mask_from_list({1, 2}, n));
    CHECK(even.is_homogeneous());
    CHECK(even.parity() == 0);
    AElement mixed = even + xi_element(m, n, 1);
    CHECK(!mixed.is_homogeneous());
    CHECK_THROWS_AS(mixed.parity(), PreconditionError);
    CHECK(mixed.parity_component(1) == xi_element(m, n, 1));
    CHECK(AElement::zero(m, n).parity() == 0);
}

TEST_CASE("degenerate sectors: m = 0 and n = 0") {
    AElement pure_odd = xi_element(0, 2, mask_from_list({1, 2}, 2));
    CHECK(pure_odd.parity() == 0);
    CHECK((pure_odd * pure_odd).is_zero());
    AElement pure_even = t_power(2, 0, ExpVec{-1, 5});
    CHECK(pure_even * pure_even == t_power(2, 0, ExpVec{-2, 10}));
}
