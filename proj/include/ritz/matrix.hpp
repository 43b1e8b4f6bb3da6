#pragma once

#include <ostream>
#include <vector>

#include "ritz/errors.hpp"
#include "ritz/mp.hpp"

namespace ritz {

/// Dense row-major matrix over an arbitrary scalar (BigReal or BigComplex).
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw ConfigError("negative matrix dimension");
    }

    static Matrix identity(int n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    /// Top-left block copy.
    Matrix truncated(int rows, int cols) const {
        if (rows > rows_ || cols > cols_) throw ConfigError("truncation larger than matrix");
        Matrix out(rows, cols, data_.empty() ? T() : data_[0]);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
        return out;
    }

    /// Plain-text dump: one row per line, full-precision decimal entries.
    void dump(std::ostream& os, int significant = 0) const {
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << (*this)(i, j).to_string(significant);
            }
            os << '\n';
        }
    }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw ConfigError("matrix product dimension mismatch");
    Matrix<T> out(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i) {
        for (int kk = 0; kk < a.cols(); ++kk) {
            const T& aik = a(i, kk);
            for (int j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(kk, j);
            }
        }
    }
    return out;
}

} // namespace ritz
