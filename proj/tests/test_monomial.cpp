#include "witt/monomial.hpp"

#include <doctest.h>

#include <algorithm>

using namespace witt;

namespace {

/// Brute-force inversion count of the concatenated index sequence.
int tau_oracle(XiMask I, XiMask J) {
    std::vector<int> seq = list_from_mask(I);
    for (int j : list_from_mask(J)) seq.push_back(j);
    int inv = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inv;
    return inv;
}

} // namespace

TEST_CASE("tau pinned examples") {
    CHECK(tau(0, 0) == 0);
    CHECK(tau(mask_from_list({2}, 4), mask_from_list({1}, 4)) == 1);
    CHECK(tau(mask_from_list({1, 3}, 4), mask_from_list({2}, 4)) == 1);
    CHECK_THROWS_AS(tau(1, 1), PreconditionError);
}

TEST_CASE("tau equals the brute-force inversion count, exhaustively for n <= 4") {
    const int n = 4;
    for (XiMask I = 0; I < (1u << n); ++I)
        for (XiMask J = 0; J < (1u << n); ++J) {
            if (I & J) continue;
            CHECK(tau(I, J) == tau_oracle(I, J));
        }
}

TEST_CASE("monomial product signs match the tau convention") {
    // xi_2 * xi_1 = -xi_{1,2}
    SuperMonomial x2(zero_exp(0), mask_from_list({2}, 3));
    SuperMonomial x1(zero_exp(0), mask_from_list({1}, 3));
    auto p = mono_mul(x2, x1);
    REQUIRE(p.has_value());
    CHECK(p->sign == -1);
    CHECK(p->mono.xi == mask_from_list({1, 2}, 3));
    CHECK(!mono_mul(x1, x1).has_value());
}

TEST_CASE("left xi derivative position sign") {
    SuperMonomial x12(zero_exp(0), mask_from_list({1, 2}, 3));
    auto d2 = mono_xi_derive(2, x12);
    REQUIRE(d2.has_value());
    CHECK(d2->sign == -1); // second position: (-1)^(2-1)
    CHECK(d2->mono.xi == mask_from_list({1}, 3));
    auto d1 = mono_xi_derive(1, x12);
    REQUIRE(d1.has_value());
    CHECK(d1->sign == 1);
    CHECK(!mono_xi_derive(3, x12).has_value());
}

TEST_CASE("exp_window enumerates the full box in lexicographic order") {
    auto w = exp_window(2, 1);
    CHECK(w.size() == 9);
    CHECK(std::is_sorted(w.begin(), w.end()));
    CHECK(w.front() == ExpVec{-1, -1});
    CHECK(w.back() == ExpVec{1, 1});
    CHECK(exp_window(0, 3).size() == 1);
}
