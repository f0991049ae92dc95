#include "witt/highest_weight.hpp"

#include <algorithm>

namespace witt {

void LatticeSplit::validate() const {
    const int mm = m();
    if (mm < 1) throw PreconditionError("split needs m >= 1");
    if (static_cast<int>(g_rows.size()) != mm - 1)
        throw PreconditionError("split needs exactly m-1 subgroup generators");
    for (const auto& row : g_rows)
        if (static_cast<int>(row.size()) != mm) throw PreconditionError("subgroup row length != m");
    stacked(); // throws when not unimodular
}

LatticeMatrix LatticeSplit::stacked() const {
    const int mm = m();
    IntMatrix u(static_cast<std::size_t>(mm), static_cast<std::size_t>(mm));
    for (int r = 0; r < mm - 1; ++r)
        for (int c = 0; c < mm; ++c)
            u.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                g_rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int c = 0; c < mm; ++c)
        u.at(static_cast<std::size_t>(mm - 1), static_cast<std::size_t>(c)) =
            beta[static_cast<std::size_t>(c)];
    return LatticeMatrix(std::move(u));
}

LatticeMatrix LatticeSplit::align() const {
    const LatticeMatrix u = stacked();
    const int mm = m();
    // (U^T)^{-1} = (U^{-1})^T
    IntMatrix b(static_cast<std::size_t>(mm), static_cast<std::size_t>(mm));
    for (int r = 0; r < mm; ++r)
        for (int c = 0; c < mm; ++c)
            b.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                u.inv().at(static_cast<std::size_t>(c), static_cast<std::size_t>(r));
    return LatticeMatrix(std::move(b));
}

ExpVec LatticeSplit::coords(const ExpVec& alpha) const { return align().apply(alpha); }

TriangularParts triangular_split(const WElement& x, const LatticeSplit& split) {
    split.validate();
    if (split.m() != x.m()) throw DimMismatchError("split dimension != m");
    const LatticeMatrix B = split.align();
    TriangularParts parts{WElement(x.m(), x.n()), WElement(x.m(), x.n()), WElement(x.m(), x.n())};
    for (const auto& [key, c] : x.terms()) {
        const ExpVec coord = B.apply(key.first.alpha);
        const int b = coord[static_cast<std::size_t>(x.m() - 1)];
        (b < 0 ? parts.minus : b == 0 ? parts.zero : parts.plus).add_term(key, c);
    }
    return parts;
}

namespace {

/// Embeds a length-(m-1) coefficient vector c over the G basis into the
/// aligned Z^m as (c, shift).
ExpVec with_last(const ExpVec& c, int last) {
    ExpVec r(c);
    r.push_back(static_cast<std::int32_t>(last));
    return r;
}

std::vector<ExpVec> g_window(int rank, int bound_exclusive) {
    if (bound_exclusive <= 0) return {};
    return exp_window(rank, bound_exclusive - 1);
}

int inf_norm(const ExpVec& v) {
    int r = 0;
    for (auto x : v) r = std::max(r, std::abs(static_cast<int>(x)));
    return r;
}

} // namespace

PairingReport depth1_quotient_dim(const CuspidalInput& X, const LatticeSplit& split,
                                  const ExpVec& target_g, int R, int Rp) {
    split.validate();
    const int m = split.m();
    const int n = X.V.dims().q;
    if (!(X.V.dims() == GlDims{m - 1, n})) throw DimMismatchError("V must be a gl(m-1, n) module");
    if (static_cast<int>(X.lambda.size()) != m) throw DimMismatchError("lambda length != m");
    if (static_cast<int>(target_g.size()) != m - 1)
        throw DimMismatchError("target offset has rank m-1");
    if (R < 0 || Rp < 0) throw PreconditionError("windows must be non-negative");

    PairingReport rep;
    rep.target_weight.assign(X.lambda.begin(), X.lambda.end());
    for (int i = 0; i < m - 1; ++i)
        rep.target_weight[static_cast<std::size_t>(i)] += Rational(target_g[static_cast<std::size_t>(i)]);
    rep.target_weight[static_cast<std::size_t>(m - 1)] -= Rational(1);

    const int xdim = (1 << n) * X.V.dim();

    if (R == 0) return rep;

    // Diagnostic: scan X's weight dimensions over the window actually used.
    // Gamma(lambda, V) is constant at 2^n dim V, so this stays quiet unless
    // the input data is broken.
    {
        std::vector<Rational> xlam(X.lambda.begin(), X.lambda.end() - 1);
        const auto scan =
            cuspidality_scan(weight_char(xlam, X.V, m - 1, n, exp_window(m - 1, R + 1)));
        if (!scan.bounded) rep.warning = "weight dimensions of X look unbounded in the window";
    }

    const LatticeMatrix B = split.align();
    auto original_degree = [&](const ExpVec& aligned) {
        // alpha with coords c: alpha = U^T c, i.e. sum of rows scaled.
        ExpVec alpha = zero_exp(m);
        for (int k = 0; k < m - 1; ++k)
            for (int j = 0; j < m; ++j)
                alpha[static_cast<std::size_t>(j)] +=
                    aligned[static_cast<std::size_t>(k)] * split.g_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        for (int j = 0; j < m; ++j)
            alpha[static_cast<std::size_t>(j)] += aligned[static_cast<std::size_t>(m - 1)] * split.beta[static_cast<std::size_t>(j)];
        return alpha;
    };

    // Lowering vectors w (x) v built in original coordinates, then aligned.
    struct LowCol {
        int radius;
        WElement w;          // aligned, degree (g, -1)
        TensorVector v;      // X basis vector at offset target - g
    };
    std::vector<LowCol> cols;
    const auto low_offsets = g_window(m - 1, R);
    for (const auto& g : low_offsets) {
        const int rad = inf_norm(g);
        const ExpVec deg = original_degree(with_last(g, -1));
        ExpVec voff(target_g);
        for (int i = 0; i < m - 1; ++i) voff[static_cast<std::size_t>(i)] -= g[static_cast<std::size_t>(i)];
        for (const auto& w : graded_component_basis(m, n, deg)) {
            const WElement aligned = glz_twist(B, w);
            for (XiMask xi = 0; xi < (XiMask{1} << n); ++xi)
                for (int k = 0; k < X.V.dim(); ++k)
                    cols.push_back(LowCol{rad, aligned,
                                          TensorVector::term(m - 1, n, X.V.dim(),
                                                             SuperMonomial(voff, xi), k)});
        }
    }
    std::stable_sort(cols.begin(), cols.end(),
                     [](const LowCol& a, const LowCol& b) { return a.radius < b.radius; });

    struct RaiseRow {
        WElement w;     // aligned, degree (g', +1)
        ExpVec offset;  // target + g'
    };
    std::vector<RaiseRow> raises;
    for (const auto& gp : g_window(m - 1, Rp)) {
        const ExpVec deg = original_degree(with_last(gp, +1));
        ExpVec roff(target_g);
        for (int i = 0; i < m - 1; ++i) roff[static_cast<std::size_t>(i)] += gp[static_cast<std::size_t>(i)];
        for (const auto& w : graded_component_basis(m, n, deg))
            raises.push_back(RaiseRow{glz_twist(B, w), roff});
    }

    // Row index space: per raising element, the X weight-space basis at its
    // landing offset (xi mask, module index).
    QMatrix mat(raises.size() * static_cast<std::size_t>(xdim), cols.size());
    for (std::size_t ri = 0; ri < raises.size(); ++ri) {
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            const WElement br = bracket(raises[ri].w, cols[ci].w);
            if (br.is_zero()) continue;
            const TensorVector img = tensor_action_prime(br, X.lambda, X.V, cols[ci].v);
            for (const auto& [key, c] : img.terms()) {
                if (key.first.alpha != raises[ri].offset)
                    throw PreconditionError("pairing image escaped the target weight space");
                const std::size_t row = ri * static_cast<std::size_t>(xdim) +
                                        static_cast<std::size_t>(key.first.xi) * static_cast<std::size_t>(X.V.dim()) +
                                        static_cast<std::size_t>(key.second);
                mat.at(row, ci) = c;
            }
        }
    }

    for (int r = 0; r < R; ++r) {
        std::size_t ncols = 0;
        while (ncols < cols.size() && cols[ncols].radius <= r) ++ncols;
        QMatrix sub(mat.rows(), ncols);
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < ncols; ++j) sub.at(i, j) = mat.at(i, j);
        rep.radii.push_back(r);
        rep.ranks.push_back(rank(std::move(sub)));
    }
    rep.stabilized = rep.ranks.size() >= 2 &&
                     rep.ranks[rep.ranks.size() - 1] == rep.ranks[rep.ranks.size() - 2];
    return rep;
}

ScanResult cuspidality_scan(const WeightTable& table) {
    ScanResult res;
    if (table.empty()) return res;
    const std::size_t m = table.begin()->first.size();
    std::vector<Rational> lo(table.begin()->first), hi(table.begin()->first);
    for (const auto& [w, d] : table) {
        res.max_dim = std::max(res.max_dim, d);
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], w[i]);
            hi[i] = std::max(hi[i], w[i]);
        }
    }
    bool interior_max = false, any_interior = false;
    for (const auto& [w, d] : table) {
        bool interior = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!(lo[i] < w[i] && w[i] < hi[i])) {
                interior = false;
                break;
            }
        if (interior) {
            any_interior = true;
            if (d == res.max_dim) interior_max = true;
        }
    }
    if (any_interior) {
        res.bounded = interior_max;
    } else {
        // Window too thin for an interior: fall back to constancy.
        long mn = res.max_dim;
        for (const auto& [w, d] : table) mn = std::min(mn, d);
        res.bounded = mn == res.max_dim;
    }
    return res;
}

bool support_pattern(const std::vector<PairingReport>& reports, std::span<const Rational> lambda) {
    for (const auto& rep : reports) {
        if (rep.final_rank() == 0) continue;
        if (rep.target_weight.size() != lambda.size()) return false;
        const std::size_t m = lambda.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Rational off = rep.target_weight[i] - lambda[i];
            // Integral offset; last coordinate non-positive.
            if (off.raw().get_den() != 1) return false;
            if (i + 1 == m && off.sign() > 0) return false;
        }
    }
    return true;
}

} // namespace witt
