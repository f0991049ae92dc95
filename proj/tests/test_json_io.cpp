#include "witt/json_io.hpp"

#include "witt/prng.hpp"
#include "witt/verify.hpp"

#include <doctest.h>

using namespace witt;
using nlohmann::json;

namespace {

AElement random_a(Rng& rng, int m, int n) {
    AElement a(m, n);
    const long terms = rng.uniform(0, 5);
    for (long t = 0; t < terms; ++t)
        a.add_term(SuperMonomial(rng.exp_vec(m, 6), rng.mask(n)), rng.rational(40));
    return a;
}

WElement random_w(Rng& rng, int m, int n) {
    WElement w(m, n);
    const long terms = rng.uniform(0, 5);
    for (long t = 0; t < terms; ++t) {
        Generator g = (m > 0 && (n == 0 || (rng.next() & 1)))
                          ? gen_d(static_cast<int>(rng.uniform(1, m)))
                          : gen_del(static_cast<int>(rng.uniform(1, n)));
        w.add_term(SuperMonomial(rng.exp_vec(m, 6), rng.mask(n)), g, rng.rational(40));
    }
    return w;
}

TensorVector random_tv(Rng& rng, int m, int n, int vdim) {
    TensorVector v(m, n, vdim);
    const long terms = rng.uniform(0, 5);
    for (long t = 0; t < terms; ++t)
        v.add_term(SuperMonomial(rng.exp_vec(m, 6), rng.mask(n)),
                   static_cast<int>(rng.uniform(0, vdim - 1)), rng.rational(40));
    return v;
}

} // namespace

TEST_CASE("wire format matches the documented term encoding") {
    const int m = 2, n = 2;
    AElement a(m, n);
    a.add_term(SuperMonomial(ExpVec{1, -2}, mask_from_list({1, 2}, n)), Rational(3, 4));
    const json j = io::to_json(a);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["c"] == "3/4");
    CHECK(j[0]["alpha"] == json::array({1, -2}));
    CHECK(j[0]["xi"] == json::array({1, 2}));

    WElement w = WElement::term(m, n, SuperMonomial(ExpVec{0, 5}, 0), gen_del(2), Rational(-7));
    const json jw = io::to_json(w);
    CHECK(jw[0]["gen"]["kind"] == "del");
    CHECK(jw[0]["gen"]["index"] == 2);
}

TEST_CASE("json round trips are the identity on random elements") {
    Rng rng(71);
    for (int it = 0; it < 100; ++it) {
        const int m = static_cast<int>(rng.uniform(0, 3));
        const int n = static_cast<int>(rng.uniform(m == 0 ? 1 : 0, 3));
        AElement a = random_a(rng, m, n);
        CHECK(io::aelement_from_json(io::to_json(a), m, n) == a);
        if (m + n > 0) {
            WElement w = random_w(rng, m, n);
            CHECK(io::welement_from_json(io::to_json(w), m, n) == w);
            WTildeElement wt{w, a};
            const WTildeElement back = io::wtilde_from_json(io::to_json(wt), m, n);
            CHECK(back == wt);
        }
        const int vdim = static_cast<int>(rng.uniform(1, 4));
        TensorVector v = random_tv(rng, m, n, vdim);
        CHECK(io::tensorvector_from_json(io::to_json(v), m, n, vdim) == v);
    }
}

TEST_CASE("gl module and lattice matrix round trips") {
    Rng rng(73);
    for (int it = 0; it < 100; ++it) {
        const int p = static_cast<int>(rng.uniform(1, 2));
        const int q = static_cast<int>(rng.uniform(0, 2));
        GlModule V = (it % 3 == 0)   ? gl_natural(GlDims{p, q})
                     : (it % 3 == 1) ? gl_dual(gl_natural(GlDims{p, q}))
                                     : gl_tensor(gl_natural(GlDims{p, q}), gl_trivial(GlDims{p, q}));
        CHECK(io::glmodule_from_json(io::to_json(V), p, q) == V);

        const int md = static_cast<int>(rng.uniform(1, 3));
        LatticeMatrix B = sample_unimodular(md, rng);
        CHECK(io::lattice_from_json(io::to_json(B)) == B);
    }
}

TEST_CASE("decoder rejects malformed input") {
    CHECK_THROWS_AS(io::aelement_from_json(json::parse("{}"), 1, 1), ParseError);
    CHECK_THROWS_AS(io::aelement_from_json(json::parse(R"([{"c":"1"}])"), 1, 1), ParseError);
    CHECK_THROWS_AS(io::aelement_from_json(json::parse(R"([{"c":"x","alpha":[0],"xi":[]}])"), 1, 1),
                    ParseError);
    CHECK_THROWS_AS(io::aelement_from_json(json::parse(R"([{"c":"1","alpha":[0,0],"xi":[]}])"), 1, 1),
                    DimMismatchError);
    CHECK_THROWS_AS(io::aelement_from_json(json::parse(R"([{"c":"1","alpha":[0],"xi":[2,1]}])"), 1, 2),
                    ParseError);
    CHECK_THROWS_AS(io::welement_from_json(json::parse(R"([{"c":"1","alpha":[0],"xi":[],"gen":{"kind":"q","index":1}}])"), 1, 1),
                    ParseError);
    CHECK_THROWS_AS(io::lattice_from_json(json::parse("[[1,0],[0]]")), ParseError);
    CHECK_THROWS_AS(io::parse_weight_list("1,,2"), ParseError);
    CHECK_THROWS_AS(io::parse_int_list("1,x"), ParseError);
}

TEST_CASE("pairing report serialization is stable") {
    PairingReport rep;
    rep.target_weight = {Rational(1, 2), Rational(-2, 3)};
    rep.radii = {0, 1};
    rep.ranks = {2, 4};
    rep.stabilized = false;
    const json j = io::to_json(rep);
    CHECK(j["final_rank"] == 4);
    CHECK(j["target_weight"][1] == "-2/3");
    CHECK(j.dump() == io::to_json(rep).dump());
}
