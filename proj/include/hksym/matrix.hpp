#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/gauss_rat.hpp"

namespace hksym {

using Vector = std::vector<GaussRat>;

inline Vector unit_vector(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v.at(k) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vector conj(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw ContractError("vector size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw ContractError("vector size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

inline Vector operator*(const GaussRat& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussRat> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ContractError("matrix entry count != rows * cols");
  }
  Matrix(std::initializer_list<std::initializer_list<GaussRat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ContractError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw ContractError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ContractError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GaussRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<GaussRat>& entries() const { return data_; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix conj() const {
    Matrix c(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] = data_[k].conj();
    return c;
  }

  Matrix adjoint() const { return transpose().conj(); }

  GaussRat trace() const {
    if (!is_square()) throw ContractError("trace of non-square matrix");
    GaussRat t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw ContractError("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const auto& a = (*this)(i, j);
        if (!a.is_zero()) out[i] += a * v[j];
      }
    }
    return out;
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
  Matrix& operator*=(const GaussRat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const GaussRat& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= GaussRat(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractError("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch");
  }

  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<GaussRat> data_;
};

/// Matrix commutator [a, b] = ab - ba.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Row-major flattening, used to treat endomorphisms as vectors.
inline Vector flatten(const Matrix& m) { return m.entries(); }

inline Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, v);
}

/// Kronecker product a (x) b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot of each column is the first nonzero
/// entry at or below the current row, so the result is a function of the
/// input alone.
inline Echelon rref(Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const GaussRat inv = GaussRat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const GaussRat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

struct RankKernel {
  std::size_t rank{0};
  std::vector<Vector> kernel_basis;
  std::vector<std::size_t> pivot_columns;
};

/// Rank, a kernel basis in reduced echelon parametrization (one vector per
/// free column, with a 1 in that column) and the pivot columns.
inline RankKernel rank_kernel(const Matrix& m) {
  Echelon e = rref(m);
  RankKernel out;
  out.rank = e.pivots.size();
  out.pivot_columns = e.pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Solves a x = b. Returns nullopt when b is outside the column span; an
/// underdetermined system gets zeros in the non-pivot coordinates.
inline std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw ContractError("solve_linear: rows != length(b)");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw ContractError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline Matrix inverse_or_throw(const Matrix& m) {
  auto inv = inverse(m);
  if (!inv) throw ContractError("matrix is singular");
  return *std::move(inv);
}

/// Sylvester inertia of a Hermitian form.
struct Inertia {
  std::size_t positive{0};
  std::size_t negative{0};
  std::size_t null{0};
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline bool is_hermitian(const Matrix& h) { return h.is_square() && h == h.adjoint(); }

/// Exact inertia by congruence over Q(i). A nonzero diagonal entry is split
/// off with its Schur complement; when the diagonal vanishes but an
/// off-diagonal entry h_kl does not, e_k is replaced by e_k + conj(h_kl) e_l,
/// whose square norm is 2|h_kl|^2 > 0.
inline Inertia hermitian_inertia(const Matrix& h) {
  if (!is_hermitian(h)) throw ContractError("hermitian_inertia: matrix is not Hermitian");
  Inertia out;
  Matrix a = h;
  while (a.rows() > 0) {
    const std::size_t n = a.rows();
    std::size_t k = 0;
    while (k < n && a(k, k).is_zero()) ++k;
    if (k == n) {
      std::size_t r = n, c = n;
      for (std::size_t i = 0; i < n && r == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!a(i, j).is_zero()) {
            r = i;
            c = j;
            break;
          }
      if (r == n) {
        out.null += n;
        break;
      }
      // Congruence by P = I + conj(a_rc) E_cr: row r += a_rc * row c, then
      // column r += conj(a_rc) * column c.
      const GaussRat s = a(r, c);
      const GaussRat sc = s.conj();
      for (std::size_t j = 0; j < n; ++j) a(r, j) += s * a(c, j);
      for (std::size_t i = 0; i < n; ++i) a(i, r) += sc * a(i, c);
      k = r;
    }
    const GaussRat d = a(k, k);
    if (!d.is_real()) throw TheoremViolation("Hermitian pivot is not real");
    if (sgn(d.re()) > 0)
      ++out.positive;
    else
      ++out.negative;
    Matrix next(n - 1, n - 1);
    for (std::size_t i = 0, ii = 0; i < n; ++i) {
      if (i == k) continue;
      const GaussRat f = a(i, k) / d;
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == k) continue;
        next(ii, jj) = a(i, j) - f * a(k, j);
        ++jj;
      }
      ++ii;
    }
    a = std::move(next);
  }
  return out;
}

/// Row-echelon basis of a span with cheap coordinate extraction: the
/// coefficient of basis row r in any member is its entry at pivot column r.
class EchelonBasis {
public:
  EchelonBasis() = default;
  EchelonBasis(const std::vector<Vector>& generators, std::size_t dim) : dim_(dim) {
    if (generators.empty()) return;
    Echelon e = rref(Matrix::from_rows(generators, dim));
    pivots_ = e.pivots;
    for (std::size_t r = 0; r < pivots_.size(); ++r) rows_.push_back(e.reduced.row(r));
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coefficients of v in the basis rows, or nullopt if v is not in the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (v.size() != dim_) throw ContractError("EchelonBasis: dimension mismatch");
    Vector c(rows_.size());
    Vector residual = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      c[r] = v[pivots_[r]];
      if (c[r].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!rows_[r][j].is_zero()) residual[j] -= c[r] * rows_[r][j];
    }
    if (!hksym::is_zero(residual)) return std::nullopt;
    return c;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

private:
  std::size_t dim_{0};
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Splits a complex vector into (real parts, imaginary parts) as a vector
/// over Q embedded in Q(i). Real spans are computed on this realification.
inline Vector realify(const Vector& v) {
  Vector out(2 * v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = GaussRat(v[k].re());
    out[v.size() + k] = GaussRat(v[k].im());
  }
  return out;
}

inline Vector derealify(const Vector& v) {
  if (v.size() % 2 != 0) throw ContractError("derealify: odd length");
  const std::size_t n = v.size() / 2;
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = GaussRat(v[k].re(), v[n + k].re());
  return out;
}

}  // namespace hksym
