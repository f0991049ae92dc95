#pragma once

#include "witt/monomial.hpp"
#include "witt/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace witt {

/// Dense matrix over exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& c);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Rank over Q by fraction-exact Gaussian elimination. Serial by design so
/// results are bit-identical run to run.
int rank(QMatrix m);

Rational determinant(QMatrix m);

/// Exact inverse; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

/// Small dense integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long long& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    long long at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    QMatrix to_q() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

/// Element of GL_m(Z): an integer matrix with determinant +-1, so its inverse
/// is integral as well.
class LatticeMatrix {
public:
    explicit LatticeMatrix(IntMatrix b);

    static LatticeMatrix identity(std::size_t m) { return LatticeMatrix(IntMatrix::identity(m)); }

    std::size_t dim() const { return b_.rows(); }
    const IntMatrix& mat() const { return b_; }
    const IntMatrix& inv() const { return inv_; }

    /// B . alpha (alpha as a column vector).
    ExpVec apply(const ExpVec& alpha) const;

    friend LatticeMatrix operator*(const LatticeMatrix& a, const LatticeMatrix& b) {
        return LatticeMatrix(a.b_ * b.b_);
    }
    friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) { return a.b_ == b.b_; }

private:
    IntMatrix b_, inv_;
};

} // namespace witt
