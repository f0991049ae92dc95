#pragma once

#include "witt/errors.hpp"

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace witt {

/// (-1)^e as a plain int sign.
inline int sign_pow(long e) { return (e & 1) ? -1 : 1; }

/// Integer exponent vector for the Laurent part t^alpha.
using ExpVec = boost::container::small_vector<std::int32_t, 4>;

/// Subset of {1..n} as a bitmask; bit j-1 set means xi_j is present.
using XiMask = std::uint32_t;

inline ExpVec zero_exp(int m) { return ExpVec(static_cast<std::size_t>(m), 0); }

inline bool is_zero_exp(const ExpVec& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

inline ExpVec add_exp(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline ExpVec neg_exp(const ExpVec& a) {
    ExpVec r(a);
    for (auto& v : r) v = -v;
    return r;
}

/// e_i (1-based) in Z^m.
inline ExpVec unit_exp(int m, int i) {
    ExpVec r = zero_exp(m);
    r[static_cast<std::size_t>(i - 1)] = 1;
    return r;
}

inline int mask_size(XiMask x) { return std::popcount(x); }

XiMask mask_from_list(const std::vector<int>& idx, int n);
std::vector<int> list_from_mask(XiMask x);

/// Inversion count of the concatenation (sorted I, sorted J).
/// Governs the sign in xi_{I u J} = (-1)^tau(I,J) xi_I xi_J.
/// Throws PreconditionError when I and J overlap.
int tau(XiMask I, XiMask J);

/// Basis element t^alpha xi_I of the supercommutative algebra A_{m,n}.
struct SuperMonomial {
    ExpVec alpha;
    XiMask xi = 0;

    SuperMonomial() = default;
    SuperMonomial(ExpVec a, XiMask x) : alpha(std::move(a)), xi(x) {}

    int parity() const { return mask_size(xi) & 1; }
    bool is_unit() const { return xi == 0 && is_zero_exp(alpha); }

    friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) {
        return a.xi == b.xi && a.alpha == b.alpha;
    }
    friend bool operator<(const SuperMonomial& a, const SuperMonomial& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.xi < b.xi;
    }

    std::string str() const;
};

inline SuperMonomial unit_monomial(int m) { return SuperMonomial(zero_exp(m), 0); }

struct SignedMonomial {
    int sign;
    SuperMonomial mono;
};

/// Supercommutative product of monomials; nullopt when the xi parts overlap
/// (odd square). Sign is (-1)^tau(I,J).
std::optional<SignedMonomial> mono_mul(const SuperMonomial& a, const SuperMonomial& b);

/// Left partial derivative d/dxi_j on a monomial: (-1)^(q-1) with q the
/// position of j among sorted I; nullopt when j is absent.
std::optional<SignedMonomial> mono_xi_derive(int j, const SuperMonomial& a);

/// All exponent vectors of length m with |alpha_i| <= bound, in lexicographic
/// order.
std::vector<ExpVec> exp_window(int m, int bound);

} // namespace witt
