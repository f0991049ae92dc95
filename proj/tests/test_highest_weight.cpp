#include "witt/highest_weight.hpp"

#include "witt/prng.hpp"

#include <doctest.h>

using namespace witt;

namespace {

LatticeSplit canon_split_m2() { return LatticeSplit{{ExpVec{1, 0}}, ExpVec{0, 1}}; }

} // namespace

TEST_CASE("lattice split validation and alignment") {
    LatticeSplit s = canon_split_m2();
    s.validate();
    CHECK(s.align().mat() == IntMatrix::identity(2));
    CHECK(s.coords(ExpVec{3, -2}) == ExpVec{3, -2});

    // skew split: G = Z(1,1), beta = (0,1)
    LatticeSplit skew{{ExpVec{1, 1}}, ExpVec{0, 1}};
    skew.validate();
    CHECK(skew.coords(ExpVec{1, 1}) == ExpVec{1, 0});
    CHECK(skew.coords(ExpVec{0, 1}) == ExpVec{0, 1});
    CHECK(skew.coords(ExpVec{2, 5}) == ExpVec{2, 3});

    LatticeSplit bad{{ExpVec{2, 0}}, ExpVec{0, 2}};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
    LatticeSplit wrong_rank{{}, ExpVec{0, 1}};
    CHECK_THROWS_AS(wrong_rank.validate(), PreconditionError);
}

TEST_CASE("triangular split pinned example and bracket consistency") {
    const int m = 2, n = 1;
    LatticeSplit s = canon_split_m2();
    WElement x(m, n);
    x.add_term(SuperMonomial(ExpVec{1, 0}, 0), gen_d(1), Rational(1));   // in W_G
    x.add_term(SuperMonomial(ExpVec{0, 1}, 0), gen_d(2), Rational(1));   // in W_{G + N beta}
    x.add_term(SuperMonomial(ExpVec{0, -1}, 0), gen_del(1), Rational(1)); // in W_{G - N beta}
    const auto parts = triangular_split(x, s);
    CHECK(parts.minus == WElement::term(m, n, SuperMonomial(ExpVec{0, -1}, 0), gen_del(1)));
    CHECK(parts.zero == WElement::term(m, n, SuperMonomial(ExpVec{1, 0}, 0), gen_d(1)));
    CHECK(parts.plus == WElement::term(m, n, SuperMonomial(ExpVec{0, 1}, 0), gen_d(2)));
    CHECK(parts.minus + parts.zero + parts.plus == x);

    WElement inside(m, n);
    inside.add_term(SuperMonomial(ExpVec{4, 0}, 1), gen_d(2), Rational(1));
    const auto p2 = triangular_split(inside, s);
    CHECK(p2.minus.is_zero());
    CHECK(p2.plus.is_zero());
    CHECK(p2.zero == inside);

    // brackets add beta coordinates
    Rng rng(59);
    for (int it = 0; it < 50; ++it) {
        const ExpVec a{static_cast<std::int32_t>(rng.uniform(-2, 2)),
                       static_cast<std::int32_t>(rng.uniform(-3, -1))};
        const ExpVec b{static_cast<std::int32_t>(rng.uniform(-2, 2)),
                       static_cast<std::int32_t>(rng.uniform(1, 3))};
        WElement u = WElement::term(m, n, SuperMonomial(a, rng.mask(n)), gen_d(1));
        WElement v = WElement::term(m, n, SuperMonomial(b, rng.mask(n)), gen_d(2));
        WElement br = bracket(u, v);
        if (br.is_zero()) continue;
        for (const auto& d : br.degree_support())
            CHECK(s.coords(d)[1] == a[1] + b[1]);
    }
}

TEST_CASE("depth-1 pairing: frozen rank sequences, monotone and stabilized") {
    LatticeSplit s = canon_split_m2();
    const std::vector<Rational> lam{Rational(1, 2), Rational(1, 3)};
    // m = 2, n = 0, trivial module: ranks 2 4 4 4 4 at every nearby target
    {
        CuspidalInput X{lam, gl_trivial(GlDims{1, 0})};
        const auto rep = depth1_quotient_dim(X, s, ExpVec{0}, 5, 5);
        CHECK(rep.ranks == std::vector<int>{2, 4, 4, 4, 4});
        CHECK(rep.radii == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(rep.stabilized);
        CHECK(rep.target_weight == std::vector<Rational>{Rational(1, 2), Rational(1, 3) - Rational(1)});
        // strictly less than the unquotiented lowering span (2 per offset, 9 offsets)
        CHECK(rep.final_rank() < 18);
    }
    // m = 2, n = 1, natural gl(1,1): ranks 24 32 32 32 32
    {
        CuspidalInput X{lam, gl_natural(GlDims{1, 1})};
        const auto rep = depth1_quotient_dim(X, s, ExpVec{1}, 5, 5);
        CHECK(rep.ranks == std::vector<int>{24, 32, 32, 32, 32});
        CHECK(rep.stabilized);
    }
    // degenerate lambda = 0 case: the depth-1 action collapses further
    {
        CuspidalInput X{{Rational(0), Rational(0)}, gl_trivial(GlDims{1, 0})};
        const auto rep = depth1_quotient_dim(X, s, ExpVec{0}, 5, 5);
        CHECK(rep.ranks == std::vector<int>{0, 2, 2, 2, 2});
        CHECK(rep.stabilized);
    }
    // R = 0: empty lowering window, rank-0 report
    {
        CuspidalInput X{lam, gl_trivial(GlDims{1, 0})};
        const auto rep = depth1_quotient_dim(X, s, ExpVec{0}, 0, 5);
        CHECK(rep.ranks.empty());
        CHECK(rep.final_rank() == 0);
        CHECK(!rep.stabilized);
    }
    // monotonicity holds on a skew split as well
    {
        CuspidalInput X{lam, gl_natural(GlDims{1, 0})};
        LatticeSplit skew{{ExpVec{1, 1}}, ExpVec{0, 1}};
        const auto rep = depth1_quotient_dim(X, skew, ExpVec{-1}, 5, 5);
        for (std::size_t i = 1; i < rep.ranks.size(); ++i) CHECK(rep.ranks[i] >= rep.ranks[i - 1]);
        CHECK(rep.stabilized);
    }
}

TEST_CASE("cuspidality scan") {
    // constant table from a tensor-module character: bounded at 2^n dim V
    {
        const std::vector<Rational> lam{Rational(1, 4)};
        WeightTable t = weight_char(lam, gl_natural(GlDims{1, 1}), 1, 1, exp_window(1, 3));
        const auto scan = cuspidality_scan(t);
        CHECK(scan.max_dim == 4);
        CHECK(scan.bounded);
    }
    // artificial depth-growing table: flagged unbounded
    {
        WeightTable t;
        for (int k = -3; k <= 3; ++k)
            t[{Rational(k)}] = 1 + std::abs(k); // grows toward the window edge
        const auto scan = cuspidality_scan(t);
        CHECK(scan.max_dim == 4);
        CHECK(!scan.bounded);
    }
    // empty table
    {
        const auto scan = cuspidality_scan({});
        CHECK(scan.max_dim == 0);
        CHECK(scan.bounded);
    }
}

TEST_CASE("support pattern of computed reports") {
    LatticeSplit s = canon_split_m2();
    const std::vector<Rational> lam{Rational(1, 2), Rational(1, 3)};
    CuspidalInput X{lam, gl_trivial(GlDims{1, 0})};
    std::vector<PairingReport> reports;
    for (int t = -1; t <= 1; ++t) reports.push_back(depth1_quotient_dim(X, s, ExpVec{t}, 4, 4));
    CHECK(support_pattern(reports, lam));
    CHECK(support_pattern({}, lam));
    // a fabricated weight at lambda + beta violates the highest-weight cone
    PairingReport badrep = reports[0];
    badrep.target_weight = lam;
    badrep.target_weight[1] += Rational(1);
    CHECK(!support_pattern({badrep}, lam));
}
