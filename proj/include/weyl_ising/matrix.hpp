#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weyl_ising/error.hpp"
#include "weyl_ising/rational.hpp"

namespace weyl_ising {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj != 0) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

inline QMatrix to_rational(const ZMatrix& z) {
  QMatrix q(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) q(i, j) = Rational(z(i, j));
  return q;
}

/// Integer matrix if every entry is integral.
inline std::optional<ZMatrix> to_integer(const QMatrix& q) {
  ZMatrix z(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (!is_integer(q(i, j))) return std::nullopt;
      z(i, j) = q(i, j).get_num();
    }
  return z;
}

/// Least common denominator of all entries.
inline Integer common_denominator(const QMatrix& q) {
  Integer d = 1;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) d = lcm(d, q(i, j).get_den());
  return d;
}

inline Rational determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

inline std::size_t rank(QMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

inline QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidArgument, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Exact LDLᵀ factorisation without pivoting.
struct LdlFactorization {
  QMatrix lower;                 // unit lower triangular
  std::vector<Rational> pivots;  // diagonal of D
  bool complete = true;          // false if a zero pivot stopped the elimination
};

inline LdlFactorization ldlt(const QMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::InvalidArgument, "LDLᵀ needs a symmetric matrix");
  const std::size_t n = a.rows();
  LdlFactorization f{QMatrix::identity(n), {}, true};
  f.pivots.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) {
      if (f.lower(j, k) != 0) d -= f.lower(j, k) * f.lower(j, k) * f.pivots[k];
    }
    f.pivots.push_back(d);
    if (d == 0) {
      f.complete = false;
      return f;
    }
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) {
        if (f.lower(i, k) != 0 && f.lower(j, k) != 0) s -= f.lower(i, k) * f.lower(j, k) * f.pivots[k];
      }
      f.lower(i, j) = s / d;
    }
  }
  return f;
}

/// True iff the symmetric matrix is positive definite (all LDLᵀ pivots positive).
inline bool is_positive_definite(const QMatrix& a) {
  if (!a.is_symmetric()) return false;
  const auto f = ldlt(a);
  if (!f.complete) return false;
  return std::all_of(f.pivots.begin(), f.pivots.end(), [](const Rational& p) { return p > 0; });
}

/// Sparse linear equation: sum of coeff * x[var] == rhs.
struct LinearEquation {
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational rhs;
};

/// Incremental exact solver over the rationals that keeps its pivot rows in
/// reduced row echelon form. Once the rank reaches the number of unknowns,
/// further equations are only checked for consistency.
class RowReducer {
 public:
  explicit RowReducer(std::size_t unknowns) : n_(unknowns), pivot_of_col_(unknowns, npos) {}

  void add(const LinearEquation& eq) {
    if (inconsistent_) return;
    if (rows_.size() == n_) {
      Rational lhs = 0;
      for (const auto& [var, c] : eq.terms) lhs += c * solution_value(var);
      if (lhs != eq.rhs) inconsistent_ = true;
      return;
    }
    std::vector<Rational> row(n_ + 1, Rational(0));
    for (const auto& [var, c] : eq.terms) row.at(var) += c;
    row[n_] = eq.rhs;
    for (std::size_t col = 0; col < n_; ++col) {
      if (row[col] == 0 || pivot_of_col_[col] == npos) continue;
      const Rational f = row[col];
      const auto& prow = rows_[pivot_of_col_[col]];
      for (std::size_t j = 0; j <= n_; ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    }
    std::size_t pc = 0;
    while (pc < n_ && row[pc] == 0) ++pc;
    if (pc == n_) {
      if (row[n_] != 0) inconsistent_ = true;
      return;
    }
    const Rational inv = 1 / row[pc];
    for (auto& x : row) x *= inv;
    for (auto& other : rows_) {
      if (other[pc] == 0) continue;
      const Rational f = other[pc];
      for (std::size_t j = 0; j <= n_; ++j)
        if (row[j] != 0) other[j] -= f * row[j];
    }
    pivot_of_col_[pc] = rows_.size();
    rows_.push_back(std::move(row));
  }

  bool consistent() const noexcept { return !inconsistent_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t nullity() const noexcept { return n_ - rows_.size(); }

  /// Unique solution, if the system is consistent and of full rank.
  std::optional<std::vector<Rational>> unique_solution() const {
    if (inconsistent_ || rows_.size() != n_) return std::nullopt;
    std::vector<Rational> x(n_);
    for (std::size_t v = 0; v < n_; ++v) x[v] = solution_value(v);
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const Rational& solution_value(std::size_t var) const { return rows_[pivot_of_col_[var]][n_]; }

  std::size_t n_;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<std::vector<Rational>> rows_;
  bool inconsistent_ = false;
};

}  // namespace weyl_ising
