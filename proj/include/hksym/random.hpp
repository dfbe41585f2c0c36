#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hksym/matrix.hpp"
#include "hksym/sym_tensor.hpp"
#include "hksym/symplectic.hpp"

namespace hksym {

/// Seeded source of small exact scalars. Uses the raw mt19937_64 stream
/// (std distributions are implementation-defined), so a seed gives the same
/// output on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 1) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// Numerator in [-9, 9], denominator in {1, 2, 3}.
  GaussRat real_scalar() {
    const long num = uniform(-9, 9);
    return GaussRat::rational(num, uniform(1, 3));
  }

  GaussRat scalar() {
    GaussRat re = real_scalar();
    return re + real_scalar() * GaussRat::i();
  }

  GaussRat nonzero_scalar() {
    for (;;) {
      GaussRat s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
    return m;
  }

  Matrix invertible_matrix(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (rank(m) == n) return m;
    }
  }

  Vector vector(std::size_t dim) {
    Vector v(dim);
    for (auto& x : v) x = scalar();
    return v;
  }

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// Random element of S^d V: a random polynomial in dim V variables with the
/// variables replaced by the basis of V.
inline SymTensor random_symmetric_power(const Subspace& v, unsigned degree, Rng& rng) {
  const std::size_t n = v.ambient().n();
  SymTensor out(n, degree);
  if (v.dim() == 0) return out;
  std::vector<SymTensor> vars;
  for (const auto& b : v.basis()) vars.push_back(SymTensor::from_vector(n, b));
  for (const auto& alpha : monomials(v.dim(), degree)) {
    SymTensor term = SymTensor::constant(n, rng.scalar());
    for (std::size_t k = 0; k < alpha.size(); ++k) term = term * vars[k].pow(alpha[k]);
    out += term;
  }
  return out;
}

/// Random element of S^d E with every monomial coefficient drawn.
inline SymTensor random_tensor(std::size_t n, unsigned degree, Rng& rng) {
  SymTensor out(n, degree);
  for (const auto& alpha : monomials(2 * n, degree)) out.add_term(alpha, rng.scalar());
  return out;
}

/// Span of p_1..p_n.
inline Subspace p_span(const SymplecticSpace& sp) {
  std::vector<Vector> basis;
  for (std::size_t a = 0; a < sp.n(); ++a) basis.push_back(sp.p(a));
  return Subspace(sp, basis);
}

/// Span of q_1..q_n.
inline Subspace q_span(const SymplecticSpace& sp) {
  std::vector<Vector> basis;
  for (std::size_t a = 0; a < sp.n(); ++a) basis.push_back(sp.q(a));
  return Subspace(sp, basis);
}

/// Random element of Sp(E): a product of symplectic shears
/// [[I, X], [0, I]], [[I, 0], [Y, I]] (X, Y symmetric) and blocks
/// diag(A, A^{-T}).
inline Matrix random_symplectic(const SymplecticSpace& sp, Rng& rng, int factors = 3) {
  const std::size_t n = sp.n();
  Matrix t = Matrix::identity(sp.dim());
  auto sym = [&] {
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) x(i, j) = x(j, i) = rng.scalar();
    return x;
  };
  for (int f = 0; f < factors; ++f) {
    Matrix upper = Matrix::identity(sp.dim());
    Matrix lower = Matrix::identity(sp.dim());
    Matrix block(sp.dim(), sp.dim());
    const Matrix x = sym();
    const Matrix y = sym();
    const Matrix a = rng.invertible_matrix(n);
    const Matrix a_inv_t = inverse_or_throw(a).transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        upper(i, n + j) = x(i, j);
        lower(n + i, j) = y(i, j);
        block(i, j) = a(i, j);
        block(n + i, n + j) = a_inv_t(i, j);
      }
    t = t * upper * block * lower;
  }
  return t;
}

}  // namespace hksym
