#include "witt/gl_module.hpp"

#include "witt/errors.hpp"

#include <sstream>

namespace witt {

GlElement GlElement::unit(GlDims d, int a, int b) {
    GlElement r(d);
    r.mat_.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = Rational(1);
    return r;
}

std::optional<int> GlElement::homogeneous_parity() const {
    std::optional<int> p;
    const int sz = d_.size();
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            if (mat_.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)).is_zero())
                continue;
            int pab = (d_.index_parity(a) + d_.index_parity(b)) & 1;
            if (!p)
                p = pab;
            else if (*p != pab)
                return std::nullopt;
        }
    return p ? p : std::optional<int>(0);
}

GlElement& GlElement::operator+=(const GlElement& o) {
    if (!(d_ == o.d_)) throw DimMismatchError("gl elements over different (p, q)");
    mat_ += o.mat_;
    return *this;
}

GlElement& GlElement::operator-=(const GlElement& o) {
    if (!(d_ == o.d_)) throw DimMismatchError("gl elements over different (p, q)");
    mat_ -= o.mat_;
    return *this;
}

GlElement& GlElement::operator*=(const Rational& c) {
    mat_ *= c;
    return *this;
}

GlElement gl_bracket(const GlElement& x, const GlElement& y) {
    if (!(x.dims() == y.dims())) throw DimMismatchError("gl elements over different (p, q)");
    auto px = x.homogeneous_parity();
    auto py = y.homogeneous_parity();
    if (!px || !py) throw PreconditionError("gl_bracket needs homogeneous operands");
    GlElement r(x.dims());
    r.mat() = x.mat() * y.mat();
    QMatrix yx = y.mat() * x.mat();
    if ((*px & *py) != 0)
        r.mat() += yx;
    else
        r.mat() -= yx;
    return r;
}

GlModule::GlModule(GlDims d, int dim, std::vector<int> parity, std::vector<QMatrix> mats)
    : d_(d), dim_(dim), parity_(std::move(parity)), mats_(std::move(mats)) {
    if (dim_ <= 0) throw PreconditionError("module dimension must be positive");
    if (static_cast<int>(parity_.size()) != dim_) throw DimMismatchError("parity vector length != dim");
    if (static_cast<int>(mats_.size()) != d_.size() * d_.size())
        throw DimMismatchError("expected one matrix per (a, b)");
    for (const auto& mat : mats_)
        if (mat.rows() != static_cast<std::size_t>(dim_) || mat.cols() != static_cast<std::size_t>(dim_))
            throw DimMismatchError("action matrix shape != dim x dim");
}

QMatrix GlModule::act(const GlElement& x) const {
    if (!(x.dims() == d_)) throw DimMismatchError("gl element over different (p, q)");
    QMatrix r(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    const int sz = d_.size();
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            const Rational& c = x.mat().at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
            if (c.is_zero()) continue;
            QMatrix scaled = E(a, b);
            scaled *= c;
            r += scaled;
        }
    return r;
}

GlModule::Report GlModule::verify() const {
    Report rep;
    const int sz = d_.size();
    auto fail = [&](const std::string& what) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_failure = what;
        }
    };
    for (int a = 1; a <= sz && rep.ok; ++a)
        for (int b = 1; b <= sz && rep.ok; ++b) {
            const int pab = (d_.index_parity(a) + d_.index_parity(b)) & 1;
            for (int r = 0; r < dim_; ++r)
                for (int c = 0; c < dim_; ++c) {
                    ++rep.checked;
                    if (E(a, b).at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).is_zero())
                        continue;
                    if (((parity_[static_cast<std::size_t>(r)] + parity_[static_cast<std::size_t>(c)]) & 1) != pab) {
                        std::ostringstream os;
                        os << "E(" << a << "," << b << ") entry (" << r << "," << c
                           << ") breaks parity homogeneity";
                        fail(os.str());
                    }
                }
        }
    for (int a = 1; a <= sz && rep.ok; ++a)
        for (int b = 1; b <= sz && rep.ok; ++b)
            for (int c = 1; c <= sz && rep.ok; ++c)
                for (int d = 1; d <= sz && rep.ok; ++d) {
                    ++rep.checked;
                    const int pab = (d_.index_parity(a) + d_.index_parity(b)) & 1;
                    const int pcd = (d_.index_parity(c) + d_.index_parity(d)) & 1;
                    QMatrix lhs = E(a, b) * E(c, d);
                    QMatrix other = E(c, d) * E(a, b);
                    if ((pab & pcd) != 0)
                        lhs += other;
                    else
                        lhs -= other;
                    QMatrix rhs(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
                    if (b == c) rhs += E(a, d);
                    if (d == a) {
                        QMatrix t = E(c, b);
                        if ((pab & pcd) != 0)
                            rhs += t;
                        else
                            rhs -= t;
                    }
                    if (!(lhs == rhs)) {
                        std::ostringstream os;
                        os << "commutator relation fails at (a,b,c,d)=(" << a << "," << b << ","
                           << c << "," << d << ")";
                        fail(os.str());
                    }
                }
    return rep;
}

GlModule gl_trivial(GlDims d) {
    std::vector<QMatrix> mats(static_cast<std::size_t>(d.size() * d.size()), QMatrix(1, 1));
    return GlModule(d, 1, {0}, std::move(mats));
}

GlModule gl_natural(GlDims d) {
    const int sz = d.size();
    std::vector<int> parity(static_cast<std::size_t>(sz));
    for (int c = 1; c <= sz; ++c) parity[static_cast<std::size_t>(c - 1)] = d.index_parity(c);
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<std::size_t>(sz * sz));
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            QMatrix mat(static_cast<std::size_t>(sz), static_cast<std::size_t>(sz));
            mat.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = Rational(1);
            mats.push_back(std::move(mat));
        }
    return GlModule(d, sz, std::move(parity), std::move(mats));
}

GlModule gl_dual(const GlModule& V) {
    const GlDims d = V.dims();
    const int sz = d.size();
    const int dim = V.dim();
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<std::size_t>(sz * sz));
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            const int pab = (d.index_parity(a) + d.index_parity(b)) & 1;
            QMatrix mat(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
            // (x f_k)(v_l) = -(-1)^{|x||f_k|} f_k(x v_l)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    Rational v = V.E(a, b).at(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
                    if (v.is_zero()) continue;
                    if ((pab & V.basis_parity(k)) == 0) v = -v;
                    mat.at(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) = v;
                }
            mats.push_back(std::move(mat));
        }
    return GlModule(d, dim, V.parity(), std::move(mats));
}

GlModule gl_tensor(const GlModule& V, const GlModule& W) {
    if (!(V.dims() == W.dims())) throw DimMismatchError("tensor factors over different gl(p, q)");
    const GlDims d = V.dims();
    const int sz = d.size();
    const int dim = V.dim() * W.dim();
    std::vector<int> parity(static_cast<std::size_t>(dim));
    for (int i = 0; i < V.dim(); ++i)
        for (int j = 0; j < W.dim(); ++j)
            parity[static_cast<std::size_t>(i * W.dim() + j)] =
                (V.basis_parity(i) + W.basis_parity(j)) & 1;
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<std::size_t>(sz * sz));
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            const int pab = (d.index_parity(a) + d.index_parity(b)) & 1;
            QMatrix mat(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
            for (int i = 0; i < V.dim(); ++i)
                for (int j = 0; j < W.dim(); ++j) {
                    const int col = i * W.dim() + j;
                    for (int r = 0; r < V.dim(); ++r) {
                        const Rational& v = V.E(a, b).at(static_cast<std::size_t>(r), static_cast<std::size_t>(i));
                        if (v.is_zero()) continue;
                        mat.at(static_cast<std::size_t>(r * W.dim() + j), static_cast<std::size_t>(col)) += v;
                    }
                    for (int r = 0; r < W.dim(); ++r) {
                        Rational v = W.E(a, b).at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
                        if (v.is_zero()) continue;
                        if ((pab & V.basis_parity(i)) != 0) v = -v;
                        mat.at(static_cast<std::size_t>(i * W.dim() + r), static_cast<std::size_t>(col)) += v;
                    }
                }
            mats.push_back(std::move(mat));
        }
    return GlModule(d, dim, std::move(parity), std::move(mats));
}

GlModule gl_parity_flip(const GlModule& V) {
    std::vector<int> parity = V.parity();
    for (auto& p : parity) p ^= 1;
    std::vector<QMatrix> mats;
    const int sz = V.dims().size();
    mats.reserve(static_cast<std::size_t>(sz * sz));
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) mats.push_back(V.E(a, b));
    return GlModule(V.dims(), V.dim(), std::move(parity), std::move(mats));
}

GlModule gl_twist_T(const GlModule& V) {
    const GlDims d = V.dims();
    const int sz = d.size();
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<std::size_t>(sz * sz));
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            QMatrix mat = V.E(a, b);
            if (((d.index_parity(a) + d.index_parity(b)) & 1) != 0) mat *= Rational(-1);
            mats.push_back(std::move(mat));
        }
    return GlModule(d, V.dim(), V.parity(), std::move(mats));
}

} // namespace witt
