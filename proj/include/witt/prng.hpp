#pragma once

#include "witt/monomial.hpp"
#include "witt/rational.hpp"

#include <cstdint>

namespace witt {

/// SplitMix64 generator. Self-contained so sampled sweeps are bit-identical
/// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
    /// test sampling.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    ExpVec exp_vec(int m, int bound) {
        ExpVec r = zero_exp(m);
        for (auto& v : r) v = static_cast<std::int32_t>(uniform(-bound, bound));
        return r;
    }

    ExpVec nonzero_exp_vec(int m, int bound) {
        while (true) {
            ExpVec r = exp_vec(m, bound);
            if (!is_zero_exp(r)) return r;
        }
    }

    XiMask mask(int n) { return static_cast<XiMask>(next() & ((XiMask{1} << n) - 1)); }

    Rational rational(long bound) {
        long num = uniform(-bound, bound);
        long den = uniform(1, bound);
        return Rational(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace witt
