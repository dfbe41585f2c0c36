#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/lie_algebra.hpp"
#include "hksym/matrix.hpp"
#include "hksym/sym_tensor.hpp"
#include "hksym/symplectic.hpp"

namespace hksym {

using BasisPair = std::pair<std::size_t, std::size_t>;

struct InvarianceResult {
  bool ok{true};
  std::optional<BasisPair> witness;
};

/// S_{e,f} . S = 0 on all standard basis pairs e <= f (enough by
/// bilinearity and symmetry in e, f). The witness is the first failing pair
/// in lexicographic order.
inline InvarianceResult check_invariance(const SymTensor& s) {
  if (s.degree() != 4) throw ContractError("check_invariance: degree != 4");
  const auto all = basis_double_contractions(s);
  for (std::size_t e = 0; e < s.dim(); ++e)
    for (std::size_t f = e; f < s.dim(); ++f)
      if (!sp_action(all[e][f], s).is_zero()) return {false, BasisPair{e, f}};
  return {};
}

struct HolonomyData {
  std::vector<Matrix> basis;
  std::size_t dimension{0};
  bool is_abelian{true};
  bool is_solvable{true};
  std::vector<std::size_t> derived_series_lengths;
  /// Echelon form of the flattened basis; basis[r] is row r unflattened.
  EchelonBasis echelon;

  /// Coordinates of A in `basis`, or nullopt if A is outside the span.
  std::optional<Vector> coordinates(const Matrix& a) const { return echelon.coordinates(flatten(a)); }
};

namespace detail {

inline std::vector<std::size_t> derived_series(const std::vector<Matrix>& basis, std::size_t dim) {
  std::vector<std::size_t> lengths{basis.size()};
  std::vector<Matrix> cur = basis;
  while (!cur.empty()) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        Matrix c = commutator(cur[i], cur[j]);
        if (!c.is_zero()) gens.push_back(flatten(c));
      }
    EchelonBasis next(gens, dim * dim);
    if (next.rank() == cur.size()) break;  // perfect: the series stabilizes
    cur.clear();
    for (const auto& r : next.rows()) cur.push_back(unflatten(r, dim, dim));
    lengths.push_back(cur.size());
  }
  return lengths;
}

}  // namespace detail

inline HolonomyData holonomy_from_generators(const std::vector<Matrix>& generators, std::size_t dim) {
  HolonomyData h;
  std::vector<Vector> flat;
  for (const auto& g : generators)
    if (!g.is_zero()) flat.push_back(flatten(g));
  h.echelon = EchelonBasis(flat, dim * dim);
  for (const auto& r : h.echelon.rows()) h.basis.push_back(unflatten(r, dim, dim));
  h.dimension = h.basis.size();
  for (std::size_t i = 0; i < h.basis.size() && h.is_abelian; ++i)
    for (std::size_t j = i + 1; j < h.basis.size(); ++j)
      if (!commutator(h.basis[i], h.basis[j]).is_zero()) {
        h.is_abelian = false;
        break;
      }
  h.derived_series_lengths = detail::derived_series(h.basis, dim);
  h.is_solvable = h.derived_series_lengths.back() == 0;
  return h;
}

/// h = S_{E,E} = span{S_{e,f}} over basis pairs.
inline HolonomyData holonomy(const SymTensor& s) {
  if (s.degree() != 4) throw ContractError("holonomy: degree != 4");
  const auto all = basis_double_contractions(s);
  std::vector<Matrix> gens;
  for (std::size_t e = 0; e < s.dim(); ++e)
    for (std::size_t f = e; f < s.dim(); ++f) gens.push_back(all[e][f]);
  return holonomy_from_generators(gens, s.dim());
}

/// Index of h_a (x) e_k inside H (x) E.
inline std::size_t tensor_index(std::size_t a, std::size_t k, std::size_t dim_e) { return a * dim_e + k; }

/// Gram matrix of g = omega_H (x) omega_E on H (x) E.
inline Matrix tensor_metric(const SymplecticSpace& e) { return kron(h_space().omega(), e.omega()); }

/// g = h + H (x) E with [A, B] = AB - BA, [A, h (x) e] = h (x) Ae and
/// [h (x) e, h' (x) e'] = omega_H(h, h') S_{e,e'}.
inline LieAlgebraModel build_complex_algebra(const SymTensor& s, const HolonomyData& hol) {
  const std::size_t de = s.dim();
  const std::size_t dh = hol.dimension;
  const std::size_t dm = 2 * de;
  LieAlgebraModel g = LieAlgebraModel::zero(dh, dm);
  g.basis_labels.clear();
  for (std::size_t i = 0; i < dh; ++i) g.basis_labels.push_back("A" + std::to_string(i + 1));
  const SymplecticSpace sp = s.space();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t k = 0; k < de; ++k) g.basis_labels.push_back("h" + std::to_string(a + 1) + "*" + sp.label(k));

  auto h_coords = [&](const Matrix& m) {
    auto c = hol.coordinates(m);
    if (!c) throw TheoremViolation("bracket leaves the holonomy algebra");
    return *c;
  };
  // [h, h]
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = i + 1; j < dh; ++j) {
      const Vector c = h_coords(commutator(hol.basis[i], hol.basis[j]));
      for (std::size_t t = 0; t < dh; ++t) {
        g.structure_constants[i][j][t] = c[t];
        g.structure_constants[j][i][t] = -c[t];
      }
    }
  // [h, m]
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t k = 0; k < de; ++k) {
        const std::size_t x = dh + tensor_index(a, k, de);
        for (std::size_t l = 0; l < de; ++l) {
          const GaussRat& v = hol.basis[i](l, k);
          if (v.is_zero()) continue;
          const std::size_t y = dh + tensor_index(a, l, de);
          g.structure_constants[i][x][y] = v;
          g.structure_constants[x][i][y] = -v;
        }
      }
  // [m, m]: only omega_H(h1, h2) = 1 = -omega_H(h2, h1) survives.
  const auto all = basis_double_contractions(s);
  for (std::size_t k = 0; k < de; ++k)
    for (std::size_t l = 0; l < de; ++l) {
      const Vector c = h_coords(all[k][l]);
      const std::size_t x = dh + tensor_index(0, k, de);
      const std::size_t y = dh + tensor_index(1, l, de);
      for (std::size_t t = 0; t < dh; ++t) {
        g.structure_constants[x][y][t] = c[t];
        g.structure_constants[y][x][t] = -c[t];
      }
    }
  g.metric_on_m = tensor_metric(sp);
  return g;
}

/// Builds and certifies the complex symmetric Lie algebra of S.
inline LieAlgebraModel build_complex_algebra(const SymTensor& s) {
  if (s.degree() != 4) throw ContractError("build_complex_algebra: degree != 4");
  const auto inv = check_invariance(s);
  if (!inv.ok) throw NotHyperKahler("not a hyper-Kaehler quartic: S_{e,f} . S != 0");
  LieAlgebraModel g = build_complex_algebra(s, holonomy(s));
  if (!verify_antisymmetry(g).ok) throw TheoremViolation("constructed bracket is not antisymmetric");
  if (!verify_grading(g).ok) throw TheoremViolation("constructed bracket violates the symmetric grading");
  if (!verify_metric(g).ok()) throw TheoremViolation("metric is not an invariant nondegenerate symmetric form");
  if (!verify_jacobi(g).ok) throw TheoremViolation("constructed bracket violates the Jacobi identity");
  return g;
}

struct RicciResult {
  Matrix ricci;
  bool metric_invariant{true};
  bool is_zero() const { return ricci.is_zero(); }
};

/// Ricci form on m from the structure constants of the complex algebra.
inline RicciResult curvature_ricci(const LieAlgebraModel& g) {
  return {ricci_from_structure(g), verify_metric(g).invariant};
}

inline RicciResult curvature_ricci(const SymTensor& s) { return curvature_ricci(build_complex_algebra(s)); }

/// Lagrangian E_+ with S in S^4 E_+: the greedy Lagrangian extension of the
/// support.
inline Subspace find_lagrangian(const SymTensor& s) {
  if (s.degree() != 4) throw ContractError("find_lagrangian: degree != 4");
  const Subspace sigma = support(s);
  if (!is_isotropic(sigma)) throw TheoremViolation("support of S is not isotropic");
  const Subspace l = extend_to_lagrangian(sigma);
  if (!in_symmetric_power(s, l)) throw TheoremViolation("S is not in S^4 of the Lagrangian extension of its support");
  return l;
}

struct FlatDecomposition {
  Subspace e_plus, e_minus;
  Subspace e1_plus, e0_plus, e1_minus, e0_minus;
  Subspace e1, e0;
  std::size_t flat_complex_dim{0};
};

namespace detail {

/// {x in w : omega(x, v) = 0 for all v in s}.
inline Subspace annihilator_within(const Subspace& w, const Subspace& s) {
  const auto& sp = w.ambient();
  if (s.dim() == 0 || w.dim() == 0) return w;
  Matrix m(s.dim(), w.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) m(i, j) = omega_pair(sp, w.basis()[j], s.basis()[i]);
  std::vector<Vector> out;
  for (const auto& c : rank_kernel(m).kernel_basis) {
    Vector v(sp.dim());
    for (std::size_t j = 0; j < w.dim(); ++j)
      if (!c[j].is_zero()) v = v + c[j] * w.basis()[j];
    out.push_back(std::move(v));
  }
  return Subspace(sp, out);
}

inline Subspace direct_sum(const Subspace& a, const Subspace& b) {
  auto basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient(), basis);
}

inline bool nondegenerate(const Subspace& s) {
  if (s.dim() == 0) return true;
  Matrix gram(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) gram(i, j) = omega_pair(s.ambient(), s.basis()[i], s.basis()[j]);
  return rank(gram) == s.dim();
}

}  // namespace detail

/// E = E^1 + E^0 with E^1_+ = Sigma_S, E^0_+ a complement of Sigma_S in E_+,
/// E_- the greedy Lagrangian complement, E^1_- = E_- cap (E^0_+)^omega and
/// E^0_- = E_- cap (E^1_+)^omega. H (x) E^0 is the flat factor.
inline FlatDecomposition flat_decomposition(const SymTensor& s) {
  const Subspace e_plus = find_lagrangian(s);
  const SymplecticSpace sp = s.space();
  FlatDecomposition d{e_plus, lagrangian_complement(e_plus), support(s), Subspace(sp), Subspace(sp), Subspace(sp),
                      Subspace(sp), Subspace(sp), 0};
  std::vector<Vector> span = d.e1_plus.basis(), extra;
  for (const auto& v : e_plus.basis()) {
    auto trial = span;
    trial.push_back(v);
    if (rank(Matrix::from_columns(trial, sp.dim())) == trial.size()) {
      span = std::move(trial);
      extra.push_back(v);
    }
  }
  d.e0_plus = Subspace(sp, extra);
  d.e1_minus = detail::annihilator_within(d.e_minus, d.e0_plus);
  d.e0_minus = detail::annihilator_within(d.e_minus, d.e1_plus);
  d.e1 = detail::direct_sum(d.e1_plus, d.e1_minus);
  d.e0 = detail::direct_sum(d.e0_plus, d.e0_minus);
  d.flat_complex_dim = 2 * d.e0.dim();
  if (d.e1.dim() + d.e0.dim() != sp.dim() || rank(detail::direct_sum(d.e1, d.e0).as_matrix()) != sp.dim())
    throw TheoremViolation("E^1 + E^0 is not a direct sum decomposition of E");
  if (!detail::nondegenerate(d.e1) || !detail::nondegenerate(d.e0))
    throw TheoremViolation("flat decomposition parts are degenerate");
  for (const auto& x : d.e1.basis())
    for (const auto& y : d.e0.basis())
      if (!omega_pair(sp, x, y).is_zero()) throw TheoremViolation("E^1 and E^0 are not omega-orthogonal");
  if (!in_symmetric_power(s, d.e1_plus)) throw TheoremViolation("S is not in S^4 of its support");
  return d;
}

struct AutResult {
  /// Kernel basis as n x n matrices acting on E_+ in the given basis.
  std::vector<Matrix> gl_basis;
  /// The same elements embedded in sp(E).
  std::vector<Matrix> sp_basis;
  std::size_t dimension{0};
};

/// gl(E_+) inside sp(E): B acts as B on E_+ and as -B^T on the dual
/// Lagrangian, in an adapted symplectic basis (u | v) of E_+ + E_-.
inline Matrix embed_gl(const Matrix& b, const Matrix& adapted) {
  const std::size_t n = b.rows();
  Matrix block(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block(i, j) = b(i, j);
      block(n + i, n + j) = -b(j, i);
    }
  return adapted * block * inverse_or_throw(adapted);
}

/// aut(S) = {B in gl(E_+) : B . S = 0}.
inline AutResult compute_aut(const SymTensor& s, const Subspace& e_plus) {
  if (!is_lagrangian(e_plus)) throw ContractError("compute_aut: E_+ is not Lagrangian");
  if (!in_symmetric_power(s, e_plus)) throw ContractError("compute_aut: S is not supported in E_+");
  const std::size_t n = s.n();
  const Matrix adapted = adapted_symplectic_basis(e_plus, lagrangian_complement(e_plus));
  const auto mons = monomials(s.dim(), s.degree());
  Matrix system(mons.size(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix unit(n, n);
      unit(a, b) = 1;
      const SymTensor image = sp_action(embed_gl(unit, adapted), s);
      for (std::size_t r = 0; r < mons.size(); ++r) system(r, a * n + b) = image.coefficient(mons[r]);
    }
  AutResult out;
  for (const auto& v : rank_kernel(system).kernel_basis) {
    Matrix b = unflatten(v, n, n);
    out.sp_basis.push_back(embed_gl(b, adapted));
    out.gl_basis.push_back(std::move(b));
  }
  out.dimension = out.gl_basis.size();
  return out;
}

}  // namespace hksym
