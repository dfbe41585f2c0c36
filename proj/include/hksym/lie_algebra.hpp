#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/matrix.hpp"

namespace hksym {

/// Finite-dimensional algebra g = h + m given by structure constants:
/// structure_constants[a][b] holds the coordinates of [x_a, x_b]. The first
/// dim_h basis elements span h, the remaining dim_m span m.
struct LieAlgebraModel {
  std::vector<std::string> basis_labels;
  std::size_t dim_h{0};
  std::size_t dim_m{0};
  std::vector<std::vector<Vector>> structure_constants;
  Matrix metric_on_m;
  bool real{false};

  std::size_t dim() const { return dim_h + dim_m; }
  bool in_h(std::size_t a) const { return a < dim_h; }

  static LieAlgebraModel zero(std::size_t dim_h, std::size_t dim_m) {
    LieAlgebraModel m;
    m.dim_h = dim_h;
    m.dim_m = dim_m;
    m.structure_constants.assign(m.dim(), std::vector<Vector>(m.dim(), Vector(m.dim())));
    m.metric_on_m = Matrix(dim_m, dim_m);
    for (std::size_t k = 0; k < m.dim(); ++k) m.basis_labels.push_back("x" + std::to_string(k + 1));
    return m;
  }

  const Vector& bracket(std::size_t a, std::size_t b) const { return structure_constants[a][b]; }

  /// [x, y] for coordinate vectors x, y.
  Vector bracket(const Vector& x, const Vector& y) const {
    Vector out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (y[b].is_zero()) continue;
        const GaussRat c = x[a] * y[b];
        const Vector& s = structure_constants[a][b];
        for (std::size_t d = 0; d < dim(); ++d)
          if (!s[d].is_zero()) out[d] += c * s[d];
      }
    }
    return out;
  }

  /// Shape check: table sizes agree with the declared dimensions.
  void validate_shape() const {
    if (basis_labels.size() != dim()) throw FormatError("algebra: label count != dimension");
    if (structure_constants.size() != dim()) throw FormatError("algebra: structure constant table has wrong size");
    for (const auto& row : structure_constants) {
      if (row.size() != dim()) throw FormatError("algebra: structure constant table has wrong size");
      for (const auto& v : row)
        if (v.size() != dim()) throw FormatError("algebra: structure constant vector has wrong length");
    }
    if (metric_on_m.rows() != dim_m || metric_on_m.cols() != dim_m) throw FormatError("algebra: metric has wrong size");
  }
};

using Triple = std::array<std::size_t, 3>;

struct JacobiResult {
  bool ok{true};
  std::optional<Triple> witness;
};

struct PairCheck {
  bool ok{true};
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline PairCheck verify_antisymmetry(const LieAlgebraModel& g) {
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b)
      if (g.bracket(a, b) + g.bracket(b, a) != Vector(g.dim())) return {false, std::make_pair(a, b)};
  return {};
}

/// [h,h] in h, [h,m] in m, [m,m] in h.
inline PairCheck verify_grading(const LieAlgebraModel& g) {
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      const bool target_h = g.in_h(a) == g.in_h(b);
      const Vector& v = g.bracket(a, b);
      for (std::size_t d = 0; d < g.dim(); ++d)
        if (!v[d].is_zero() && g.in_h(d) != target_h) return {false, std::make_pair(a, b)};
    }
  return {};
}

/// Exhaustive Jacobi identity [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 over all
/// ordered basis triples.
inline JacobiResult verify_jacobi(const LieAlgebraModel& g) {
  const std::size_t n = g.dim();
  auto bracket_with = [&](const Vector& x, std::size_t c) {
    Vector out(n);
    for (std::size_t d = 0; d < n; ++d) {
      if (x[d].is_zero()) continue;
      const Vector& s = g.structure_constants[d][c];
      for (std::size_t e = 0; e < n; ++e)
        if (!s[e].is_zero()) out[e] += x[d] * s[e];
    }
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector sum = bracket_with(g.bracket(a, b), c);
        sum = sum + bracket_with(g.bracket(b, c), a);
        sum = sum + bracket_with(g.bracket(c, a), b);
        if (!is_zero(sum)) return {false, Triple{a, b, c}};
      }
  return {};
}

/// metric_on_m symmetric, nondegenerate and ad(h)-invariant:
/// g([A,x],y) + g(x,[A,y]) = 0.
struct MetricCheck {
  bool symmetric{true};
  bool nondegenerate{true};
  bool invariant{true};
  bool ok() const { return symmetric && nondegenerate && invariant; }
};

inline MetricCheck verify_metric(const LieAlgebraModel& g) {
  MetricCheck out;
  const Matrix& m = g.metric_on_m;
  out.symmetric = m == m.transpose();
  out.nondegenerate = g.dim_m == 0 || rank(m) == g.dim_m;
  for (std::size_t a = 0; a < g.dim_h && out.invariant; ++a) {
    // ad(A) restricted to m as a dim_m x dim_m matrix.
    Matrix ad(g.dim_m, g.dim_m);
    for (std::size_t x = 0; x < g.dim_m; ++x) {
      const Vector& v = g.bracket(a, g.dim_h + x);
      for (std::size_t y = 0; y < g.dim_m; ++y) ad(y, x) = v[g.dim_h + y];
    }
    out.invariant = (ad.transpose() * m + m * ad).is_zero();
  }
  return out;
}

/// Ricci form on m: Ric(x, y) = trace(z -> R(z, x) y) with
/// R(x, y) z = -[[x, y], z], the trace taken over m.
inline Matrix ricci_from_structure(const LieAlgebraModel& g) {
  Matrix ric(g.dim_m, g.dim_m);
  for (std::size_t x = 0; x < g.dim_m; ++x)
    for (std::size_t y = 0; y < g.dim_m; ++y) {
      GaussRat tr;
      for (std::size_t z = 0; z < g.dim_m; ++z) {
        const Vector& zx = g.bracket(g.dim_h + z, g.dim_h + x);
        // coefficient of x_z in [[z, x], y]
        for (std::size_t d = 0; d < g.dim(); ++d)
          if (!zx[d].is_zero()) tr -= zx[d] * g.bracket(d, g.dim_h + y)[g.dim_h + z];
      }
      ric(x, y) = tr;
    }
  return ric;
}

/// Structure constants all real (imaginary parts vanish).
inline bool has_real_constants(const LieAlgebraModel& g) {
  for (const auto& row : g.structure_constants)
    for (const auto& v : row)
      for (const auto& c : v)
        if (!c.is_real()) return false;
  for (const auto& c : g.metric_on_m.entries())
    if (!c.is_real()) return false;
  return true;
}

}  // namespace hksym
