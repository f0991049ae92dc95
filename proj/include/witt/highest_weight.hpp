#pragma once

#include "witt/tensor_module.hpp"

#include <string>
#include <vector>

namespace witt {

/// Splitting Z^m = G (+) Z beta with G of rank m-1. The stacked matrix
/// (G rows, then beta) must be unimodular; membership and coset queries are
/// exact integer arithmetic.
struct LatticeSplit {
    std::vector<ExpVec> g_rows; // m-1 rows, each of length m
    ExpVec beta;

    int m() const { return static_cast<int>(beta.size()); }

    /// Throws PreconditionError when the stacked matrix is not unimodular.
    void validate() const;

    /// The stacked matrix U with rows g_1, ..., g_{m-1}, beta.
    LatticeMatrix stacked() const;

    /// Alignment twist B = (U^T)^{-1}: maps every g_k to e_k and beta to e_m,
    /// so degrees decompose by their last aligned coordinate.
    LatticeMatrix align() const;

    /// Coordinates c with alpha = sum_k c_k g_k + c_m beta.
    ExpVec coords(const ExpVec& alpha) const;
};

struct TriangularParts {
    WElement minus, zero, plus;
};

/// Partition of the terms of x by the sign of the beta coordinate of their
/// Z^m degree: W = W_{G - N beta} (+) W_G (+) W_{G + N beta}.
TriangularParts triangular_split(const WElement& x, const LatticeSplit& split);

/// Data of the cuspidal W_G module X = Gamma(lambda, V) in aligned
/// coordinates (G = Z e_1 + ... + Z e_{m-1}, beta = e_m): lambda is a length-m
/// rational weight, V a gl(m-1, n) module.
struct CuspidalInput {
    std::vector<Rational> lambda;
    GlModule V;
};

struct PairingReport {
    std::vector<Rational> target_weight; // length m, aligned coordinates
    std::vector<int> radii;              // lowering window bounds |g| <= r
    std::vector<int> ranks;
    bool stabilized = false; // the last two radii agree
    std::string warning;

    int final_rank() const { return ranks.empty() ? 0 : ranks.back(); }
};

/// Depth-one weight-space dimension of the simple quotient of the induced
/// module M(G, beta, X), computed as the rank of the pairing
/// (raising w', lowering w (x) v) -> [w', w] . v in X.
///
/// Windows are strict bounds: the lowering set ranges over |g|_inf < R (ranks
/// are reported per radius r = 0..R-1), the raising set over |g'|_inf < Rp.
/// R = 0 yields an empty lowering set and a rank-0 report.
PairingReport depth1_quotient_dim(const CuspidalInput& X, const LatticeSplit& split,
                                  const ExpVec& target_g, int R, int Rp);

struct ScanResult {
    long max_dim = 0;
    bool bounded = true;
};

/// Maximum weight-space dimension over the table and a heuristic boundedness
/// witness: bounded when the maximum is already attained strictly inside the
/// bounding box of the table's support (tables with no interior points count
/// as bounded only when constant).
ScanResult cuspidality_scan(const WeightTable& table);

/// Checks that every report with a nonzero computed weight space sits inside
/// lambda + G - Z_+ beta (in aligned coordinates: integral offset from lambda
/// with non-positive last coordinate).
bool support_pattern(const std::vector<PairingReport>& reports, std::span<const Rational> lambda);

} // namespace witt
