#include "witt/linalg.hpp"

#include "witt/errors.hpp"

namespace witt {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = Rational(1);
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatchError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatchError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
    for (auto& v : a_) v *= c;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimMismatchError("matrix product shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

int rank(QMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        const Rational inv_p = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv_p;
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Rational f = m.at(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return static_cast<int>(r);
}

Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw DimMismatchError("determinant of a non-square matrix");
    Rational det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
            det = -det;
        }
        det *= m.at(c, c);
        const Rational inv_p = Rational(1) / m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = m.at(i, c) * inv_p;
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw DimMismatchError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(c, j), a.at(piv, j));
                std::swap(inv.at(c, j), inv.at(piv, j));
            }
        const Rational inv_p = Rational(1) / a.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(c, j) *= inv_p;
            inv.at(c, j) *= inv_p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Rational f = a.at(i, c);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimMismatchError("matrix product shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            long long v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

QMatrix IntMatrix::to_q() const {
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = Rational(at(i, j));
    return r;
}

LatticeMatrix::LatticeMatrix(IntMatrix b) : b_(std::move(b)) {
    if (b_.rows() != b_.cols()) throw PreconditionError("lattice matrix must be square");
    const Rational det = determinant(b_.to_q());
    if (det != Rational(1) && det != Rational(-1))
        throw PreconditionError("lattice matrix must be unimodular");
    auto qinv = inverse(b_.to_q());
    inv_ = IntMatrix(b_.rows(), b_.cols());
    for (std::size_t i = 0; i < b_.rows(); ++i)
        for (std::size_t j = 0; j < b_.cols(); ++j) {
            const Rational& v = qinv->at(i, j);
            // Unimodularity makes the inverse integral.
            inv_.at(i, j) = std::stoll(v.str());
        }
}

ExpVec LatticeMatrix::apply(const ExpVec& alpha) const {
    if (alpha.size() != b_.rows()) throw DimMismatchError("lattice matrix / vector size mismatch");
    ExpVec r = zero_exp(static_cast<int>(alpha.size()));
    for (std::size_t i = 0; i < b_.rows(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < b_.cols(); ++j) acc += b_.at(i, j) * alpha[j];
        r[i] = static_cast<std::int32_t>(acc);
    }
    return r;
}

} // namespace witt
