#include "witt/monomial.hpp"

#include <sstream>

namespace witt {

XiMask mask_from_list(const std::vector<int>& idx, int n) {
    XiMask x = 0;
    for (int j : idx) {
        if (j < 1 || j > n) throw PreconditionError("xi index out of range");
        XiMask bit = XiMask{1} << (j - 1);
        if (x & bit) throw PreconditionError("repeated xi index");
        x |= bit;
    }
    return x;
}

std::vector<int> list_from_mask(XiMask x) {
    std::vector<int> r;
    while (x) {
        int b = std::countr_zero(x);
        r.push_back(b + 1);
        x &= x - 1;
    }
    return r;
}

int tau(XiMask I, XiMask J) {
    if (I & J) throw PreconditionError("tau: overlapping index sets");
    // Inversions of (sorted I, sorted J) are exactly the pairs i in I, j in J
    // with j < i.
    int inv = 0;
    XiMask rest = I;
    while (rest) {
        int b = std::countr_zero(rest);
        inv += std::popcount(J & ((XiMask{1} << b) - 1));
        rest &= rest - 1;
    }
    return inv;
}

std::optional<SignedMonomial> mono_mul(const SuperMonomial& a, const SuperMonomial& b) {
    if (a.xi & b.xi) return std::nullopt;
    int s = sign_pow(tau(a.xi, b.xi));
    return SignedMonomial{s, SuperMonomial(add_exp(a.alpha, b.alpha), a.xi | b.xi)};
}

std::optional<SignedMonomial> mono_xi_derive(int j, const SuperMonomial& a) {
    XiMask bit = XiMask{1} << (j - 1);
    if (!(a.xi & bit)) return std::nullopt;
    int below = std::popcount(a.xi & (bit - 1));
    SuperMonomial out(a.alpha, a.xi & ~bit);
    return SignedMonomial{sign_pow(below), std::move(out)};
}

std::vector<ExpVec> exp_window(int m, int bound) {
    std::vector<ExpVec> out;
    ExpVec cur(static_cast<std::size_t>(m), static_cast<std::int32_t>(-bound));
    if (m == 0) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound) {
            cur[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(-bound);
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

std::string SuperMonomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) {
            os << (any ? " " : "") << "t" << (i + 1) << "^" << alpha[i];
            any = true;
        }
    }
    for (int j : list_from_mask(xi)) {
        os << (any ? " " : "") << "xi" << j;
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

} // namespace witt
