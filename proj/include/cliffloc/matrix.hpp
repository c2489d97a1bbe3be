#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffloc/exact.hpp"

namespace cliffloc {

// Dense matrix over an exact field (Rational or QComplex).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix scalar(std::size_t n, const T& value) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!cliffloc::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    std::vector<std::vector<std::pair<std::size_t, T>>> brows(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!cliffloc::is_zero(b(k, j))) brows[k].emplace_back(j, b(k, j));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (cliffloc::is_zero(aik)) continue;
        for (const auto& [j, v] : brows[k]) {
          T prod = aik * v;
          out(i, j) += prod;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<QComplex>;

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <typename T>
Matrix<T> anticommutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b + b * a;
}

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

// Returns s if m == s * Id, nothing otherwise.
template <typename T>
std::optional<T> scalar_value(const Matrix<T>& m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  T s = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? s : T(0))) return std::nullopt;
  return s;
}

template <typename T>
std::string to_string(const Matrix<T>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

inline ComplexMatrix complexify(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = QComplex(m(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Sparse exact elimination.

template <typename T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

// row + factor * other, both sorted by column.
template <typename T>
SparseRow<T> axpy(const SparseRow<T>& row, const T& factor, const SparseRow<T>& other) {
  SparseRow<T> out;
  out.reserve(row.size() + other.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < other.size()) {
    if (b == other.size() || (a < row.size() && row[a].first < other[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || other[b].first < row[a].first) {
      T v = factor * other[b].second;
      out.emplace_back(other[b].first, v);
      ++b;
    } else {
      T v = row[a].second + factor * other[b].second;
      if (!is_zero(v)) out.emplace_back(row[a].first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

// Sorts and merges duplicate columns, dropping zeros.
template <typename T>
SparseRow<T> canonical_row(SparseRow<T> row) {
  std::map<std::size_t, T> acc;
  for (auto& [c, v] : row) acc[c] += v;
  SparseRow<T> out;
  for (auto& [c, v] : acc)
    if (!is_zero(v)) out.emplace_back(c, v);
  return out;
}

// Incremental row-echelon form keyed by pivot column.
template <typename T>
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }

  SparseRow<T> reduce(SparseRow<T> row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      T factor = -row.front().second;
      row = axpy(row, factor, it->second);
    }
    return row;
  }

  bool in_span(const SparseRow<T>& row) const { return reduce(row).empty(); }

  // Returns true if the row was independent of the rows seen so far.
  bool add(SparseRow<T> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    T inv = T(1) / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    std::size_t col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
  }

  // Basis of {x : row . x = 0 for every added row}.
  std::vector<std::vector<T>> nullspace() const {
    std::map<std::size_t, SparseRow<T>> reduced;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const std::size_t col = it->first;
      SparseRow<T> row = it->second;
      SparseRow<T> acc{{col, T(1)}};
      std::map<std::size_t, T> sum;
      for (const auto& [c, v] : row) {
        if (c == col) continue;
        auto r = reduced.find(c);
        if (r == reduced.end()) {
          sum[c] += v;
        } else {
          for (const auto& [c2, v2] : r->second) {
            if (c2 == c) continue;
            T prod = v * v2;
            sum[c2] -= prod;
          }
        }
      }
      for (auto& [c, v] : sum)
        if (!is_zero(v)) acc.emplace_back(c, v);
      reduced.emplace(col, std::move(acc));
    }
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<T> x(ncols_, T(0));
      x[f] = T(1);
      for (const auto& [col, row] : reduced)
        for (const auto& [c, v] : row)
          if (c == f) x[col] = -v;
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseRow<T>> pivots_;
};

template <typename T>
SparseRow<T> to_sparse(const std::vector<T>& dense) {
  SparseRow<T> row;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) row.emplace_back(i, dense[i]);
  return row;
}

template <typename T>
SparseRow<T> flatten(const Matrix<T>& m) {
  SparseRow<T> row;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) row.emplace_back(i * m.cols() + j, m(i, j));
  return row;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  SparseEchelon<T> ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow<T> row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) row.emplace_back(j, m(i, j));
    ech.add(std::move(row));
  }
  return ech.rank();
}

template <typename T>
bool is_invertible(const Matrix<T>& m) {
  return m.is_square() && rank(m) == m.rows();
}

// Gauss-Jordan inverse; throws if singular.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) throw std::domain_error("inverse: matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T p = T(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        T da = f * a(col, j);
        T di = f * inv(col, j);
        a(r, j) -= da;
        inv(r, j) -= di;
      }
    }
  }
  return inv;
}

// Dimension of the linear span of a family of matrices.
template <typename T>
std::size_t span_dimension(std::span<const Matrix<T>> family) {
  if (family.empty()) return 0;
  SparseEchelon<T> ech(family.front().rows() * family.front().cols());
  for (const auto& m : family) ech.add(flatten(m));
  return ech.rank();
}

// Linear equations in the entries of an unknown rows x cols matrix X.
template <typename T>
class MatrixEquations {
 public:
  MatrixEquations(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), echelon_(rows * cols) {}

  std::size_t unknowns() const { return rows_ * cols_; }
  std::size_t rank() const { return echelon_.rank(); }

  // X * a == sign * b * X, with a (cols x cols) and b (rows x rows).
  void intertwine(const Matrix<T>& a, const Matrix<T>& b, int sign = 1) {
    if (a.rows() != cols_ || a.cols() != cols_ || b.rows() != rows_ || b.cols() != rows_)
      throw std::invalid_argument("MatrixEquations::intertwine: shape mismatch");
    std::vector<SparseRow<T>> acol(cols_);
    for (std::size_t k = 0; k < cols_; ++k)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(a(k, j))) acol[j].emplace_back(k, a(k, j));
    std::vector<SparseRow<T>> brow(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < rows_; ++k)
        if (!is_zero(b(i, k))) brow[i].emplace_back(k, b(i, k));
    const T s(sign);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        SparseRow<T> row;
        for (const auto& [k, v] : acol[j]) row.emplace_back(i * cols_ + k, v);
        for (const auto& [k, v] : brow[i]) {
          T coeff = -(s * v);
          row.emplace_back(k * cols_ + j, coeff);
        }
        add(canonical_row(std::move(row)));
      }
  }

  // X^T == sign * X (square unknowns only).
  void symmetry(int sign) {
    if (rows_ != cols_) throw std::invalid_argument("MatrixEquations::symmetry: unknown is not square");
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j) {
        SparseRow<T> row{{j * cols_ + i, T(1)}};
        row.emplace_back(i * cols_ + j, T(-sign));
        add(canonical_row(std::move(row)));
      }
  }

  void add(SparseRow<T> row) {
    if (!row.empty()) echelon_.add(std::move(row));
  }

  std::vector<Matrix<T>> solve() const {
    std::vector<Matrix<T>> out;
    for (const auto& v : echelon_.nullspace()) {
      Matrix<T> m(rows_, cols_);
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = v[i * cols_ + j];
      out.push_back(std::move(m));
    }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  SparseEchelon<T> echelon_;
};

// Small integer coefficient vectors in deterministic order: entries drawn from
// 0, 1, -1, 2, -2 (in that order), lexicographic, zero vector skipped.
class SmallIntegerScan {
 public:
  SmallIntegerScan(std::size_t dim, int bound = 2) : dim_(dim), bound_(bound), digits_(dim, 0) {}

  // Advances to the next candidate; false when exhausted.
  bool next(std::vector<int>& out);

 private:
  std::size_t dim_;
  int bound_;
  std::vector<int> digits_;
};

inline bool SmallIntegerScan::next(std::vector<int>& out) {
  const int base = 2 * bound_ + 1;
  auto value = [](int d) { return d == 0 ? 0 : (d % 2 == 1 ? (d + 1) / 2 : -(d / 2)); };
  if (dim_ == 0) return false;
  std::size_t k = dim_;
  while (true) {
    --k;
    if (++digits_[k] < base) break;
    digits_[k] = 0;
    if (k == 0) return false;
  }
  out.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = value(digits_[i]);
  return true;
}

template <typename T>
Matrix<T> combine(std::span<const Matrix<T>> basis, const std::vector<int>& coeffs) {
  Matrix<T> m(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k] != 0) m += basis[k] * T(coeffs[k]);
  return m;
}

// First invertible small-integer combination of the basis, if any within the scan budget.
template <typename T>
std::optional<Matrix<T>> first_invertible(std::span<const Matrix<T>> basis, std::size_t budget = 20000) {
  if (basis.empty()) return std::nullopt;
  SmallIntegerScan scan(basis.size());
  std::vector<int> c;
  for (std::size_t tried = 0; tried < budget && scan.next(c); ++tried) {
    Matrix<T> m = combine(basis, c);
    if (is_invertible(m)) return m;
  }
  return std::nullopt;
}

}  // namespace cliffloc
