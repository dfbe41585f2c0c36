#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/hk_algebra.hpp"
#include "hksym/lie_algebra.hpp"
#include "hksym/matrix.hpp"
#include "hksym/sym_tensor.hpp"
#include "hksym/symplectic.hpp"

namespace hksym {

struct RealityReport {
  bool commutator_condition_ok{true};
  bool tau_fixed{true};
  bool equivalent{true};
  /// First failing pair of real basis vectors, by label ("p1", "i*q2").
  std::optional<std::pair<std::string, std::string>> witness;
  std::size_t real_holonomy_dim{0};
  std::optional<Inertia> signature_on_m;
};

namespace detail {

/// Real basis e_1, .., e_2n, i e_1, .., i e_2n of E.
inline std::vector<Vector> real_basis(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back(unit_vector(dim, k));
  for (std::size_t k = 0; k < dim; ++k) out.push_back(GaussRat::i() * unit_vector(dim, k));
  return out;
}

inline std::string real_basis_label(const SymplecticSpace& sp, std::size_t r) {
  return r < sp.dim() ? sp.label(r) : "i*" + sp.label(r - sp.dim());
}

/// S_{x,y} = sum_{k,l} x_k y_l S_{e_k,e_l}.
inline Matrix bilinear_endo(const std::vector<std::vector<Matrix>>& all, const Vector& x, const Vector& y) {
  const std::size_t d = x.size();
  Matrix out(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t l = 0; l < d; ++l) {
      if (y[l].is_zero()) continue;
      out = out + (x[k] * y[l]) * all[k][l];
    }
  }
  return out;
}

/// Generators S_{je,e'} - S_{e,je'} over pairs of the real basis (the map is
/// R-bilinear and antisymmetric in (e, e')).
struct RealGenerator {
  std::size_t e, f;
  Matrix a;
};

inline std::vector<RealGenerator> reality_generators(const SymTensor& s, const QuaternionicStructure& j) {
  const auto all = basis_double_contractions(s);
  const auto basis = real_basis(s.dim());
  std::vector<Vector> jb;
  for (const auto& v : basis) jb.push_back(j.apply(v));
  std::vector<RealGenerator> out;
  for (std::size_t e = 0; e < basis.size(); ++e)
    for (std::size_t f = e + 1; f < basis.size(); ++f)
      out.push_back({e, f, bilinear_endo(all, jb[e], basis[f]) - bilinear_endo(all, basis[e], jb[f])});
  return out;
}

}  // namespace detail

struct RealHolonomy {
  std::vector<Matrix> basis;
  /// Echelon form of the realified flattened basis; basis[r] is row r.
  EchelonBasis realified;

  /// Real coordinates of A in `basis`, or nullopt if A is outside the real span.
  std::optional<Vector> coordinates(const Matrix& a) const { return realified.coordinates(realify(flatten(a))); }
};

namespace detail {

inline RealHolonomy real_span(const std::vector<Matrix>& gens, std::size_t dim) {
  RealHolonomy h;
  std::vector<Vector> flat;
  for (const auto& g : gens)
    if (!g.is_zero()) flat.push_back(realify(flatten(g)));
  h.realified = EchelonBasis(flat, 2 * dim * dim);
  for (const auto& r : h.realified.rows()) h.basis.push_back(unflatten(derealify(r), dim, dim));
  return h;
}

}  // namespace detail

/// Commutator condition [S_{je,e'} - S_{e,je'}, j] = 0 on the real basis
/// and, independently, tau S = S.
inline RealityReport check_reality(const SymTensor& s, const QuaternionicStructure& j) {
  if (s.degree() != 4) throw ContractError("check_reality: degree != 4");
  if (j.space().n() != s.n()) throw ContractError("check_reality: quaternionic structure on a different space");
  RealityReport r;
  const auto gens = detail::reality_generators(s, j);
  std::vector<Matrix> mats;
  for (const auto& g : gens) {
    if (r.commutator_condition_ok && !j.commutes_with(g.a)) {
      r.commutator_condition_ok = false;
      r.witness = std::make_pair(detail::real_basis_label(s.space(), g.e), detail::real_basis_label(s.space(), g.f));
    }
    mats.push_back(g.a);
  }
  r.tau_fixed = tau(s, j) == s;
  r.equivalent = r.commutator_condition_ok == r.tau_fixed;
  r.real_holonomy_dim = detail::real_span(mats, s.dim()).basis.size();
  return r;
}

/// h = real span of {S_{je,e'} - S_{e,je'}}, echelonized over the
/// realification. Every element commutes with j.
inline RealHolonomy real_holonomy(const SymTensor& s, const QuaternionicStructure& j) {
  const auto report = check_reality(s, j);
  if (!report.commutator_condition_ok) throw NotReal("reality condition fails: S is not tau-fixed");
  std::vector<Matrix> mats;
  for (const auto& g : detail::reality_generators(s, j)) mats.push_back(g.a);
  RealHolonomy h = detail::real_span(mats, s.dim());
  for (const auto& a : h.basis)
    if (!j.commutes_with(a)) throw TheoremViolation("real holonomy element does not commute with j");
  return h;
}

/// t + tau t, always tau-fixed.
inline SymTensor symmetrize_real(const SymTensor& t, const QuaternionicStructure& j) { return t + tau(t, j); }

struct RealAlgebra {
  LieAlgebraModel model;
  std::vector<Matrix> h_basis;
  /// rho-fixed vectors of H (x) E spanning m over R.
  std::vector<Vector> m_basis;
  Inertia signature;
};

/// Real basis {v + rho v, i(v - rho v)} of m = (H (x) E)^rho, echelonized
/// over the realification.
inline std::vector<Vector> real_m_basis(const RealStructureRho& rho, EchelonBasis* realified = nullptr) {
  std::vector<Vector> cands;
  for (std::size_t k = 0; k < rho.dim(); ++k) {
    const Vector v = unit_vector(rho.dim(), k);
    const Vector rv = rho.apply(v);
    cands.push_back(realify(v + rv));
    cands.push_back(realify(GaussRat::i() * (v - rv)));
  }
  EchelonBasis e(cands, 2 * rho.dim());
  if (e.rank() != rho.dim()) throw TheoremViolation("rho-fixed space has wrong real dimension");
  std::vector<Vector> out;
  for (const auto& r : e.rows()) out.push_back(derealify(r));
  if (realified) *realified = std::move(e);
  return out;
}

/// Real form g = h + m with m = (H (x) E)^rho, rho = j_H (x) j_E; all
/// structure constants are certified real and the Lie algebra axioms are
/// re-verified over the real model.
inline RealAlgebra build_real_algebra(const SymTensor& s, const QuaternionicStructure& j_e) {
  if (!check_invariance(s).ok) throw NotHyperKahler("not a hyper-Kaehler quartic: S_{e,f} . S != 0");
  const RealHolonomy hol = real_holonomy(s, j_e);
  const std::size_t de = s.dim();
  const RealStructureRho rho(j_h(), j_e);
  EchelonBasis m_echelon;
  const std::vector<Vector> mb = real_m_basis(rho, &m_echelon);
  const std::size_t dh = hol.basis.size(), dm = mb.size();

  RealAlgebra out;
  out.h_basis = hol.basis;
  out.m_basis = mb;
  LieAlgebraModel& g = out.model;
  g = LieAlgebraModel::zero(dh, dm);
  g.real = true;
  g.basis_labels.clear();
  for (std::size_t t = 0; t < dh; ++t) g.basis_labels.push_back("B" + std::to_string(t + 1));
  for (std::size_t u = 0; u < dm; ++u) g.basis_labels.push_back("m" + std::to_string(u + 1));

  auto h_coords = [&](const Matrix& a) {
    auto c = hol.coordinates(a);
    if (!c) throw TheoremViolation("real bracket leaves the real holonomy algebra");
    return *c;
  };
  auto m_coords = [&](const Vector& v) {
    auto c = m_echelon.coordinates(realify(v));
    if (!c) throw TheoremViolation("bracket leaves m");
    return *c;
  };
  for (std::size_t a = 0; a < dh; ++a)
    for (std::size_t b = a + 1; b < dh; ++b) {
      const Vector c = h_coords(commutator(hol.basis[a], hol.basis[b]));
      for (std::size_t t = 0; t < dh; ++t) {
        g.structure_constants[a][b][t] = c[t];
        g.structure_constants[b][a][t] = -c[t];
      }
    }
  const Matrix lift_id = Matrix::identity(2);
  for (std::size_t a = 0; a < dh; ++a) {
    const Matrix lifted = kron(lift_id, hol.basis[a]);
    for (std::size_t u = 0; u < dm; ++u) {
      const Vector c = m_coords(lifted.apply(mb[u]));
      for (std::size_t w = 0; w < dm; ++w) {
        g.structure_constants[a][dh + u][dh + w] = c[w];
        g.structure_constants[dh + u][a][dh + w] = -c[w];
      }
    }
  }
  // S_{e_k,e_l} in the holonomy basis, read over C: the real basis of h is a
  // complex basis of h^C.
  const auto all = basis_double_contractions(s);
  std::vector<Vector> hcols;
  for (const auto& b : hol.basis) hcols.push_back(flatten(b));
  const Matrix hmat = Matrix::from_columns(hcols, de * de);
  std::vector<std::vector<Vector>> skl(de, std::vector<Vector>(de));
  for (std::size_t k = 0; k < de; ++k)
    for (std::size_t l = 0; l < de; ++l) {
      if (dh == 0) {
        if (!all[k][l].is_zero()) throw TheoremViolation("S_{E,E} is not in the complexified real holonomy");
        skl[k][l] = Vector();
        continue;
      }
      auto c = solve_linear(hmat, flatten(all[k][l]));
      if (!c) throw TheoremViolation("S_{E,E} is not in the complexified real holonomy");
      skl[k][l] = *c;
    }
  for (std::size_t u = 0; u < dm; ++u)
    for (std::size_t w = u + 1; w < dm; ++w) {
      Vector c(dh);
      const Vector& r = mb[u];
      const Vector& t = mb[w];
      for (std::size_t k = 0; k < de && dh > 0; ++k)
        for (std::size_t l = 0; l < de; ++l) {
          // [h_a (x) e_k, h_b (x) e_l] = omega_H(h_a, h_b) S_{kl}
          const GaussRat wkl = r[tensor_index(0, k, de)] * t[tensor_index(1, l, de)] -
                               r[tensor_index(1, k, de)] * t[tensor_index(0, l, de)];
          if (wkl.is_zero()) continue;
          for (std::size_t q = 0; q < dh; ++q)
            if (!skl[k][l][q].is_zero()) c[q] += wkl * skl[k][l][q];
        }
      for (std::size_t q = 0; q < dh; ++q) {
        if (!c[q].is_real()) throw TheoremViolation("[m, m] has a non-real holonomy component");
        g.structure_constants[dh + u][dh + w][q] = c[q];
        g.structure_constants[dh + w][dh + u][q] = -c[q];
      }
    }
  const Matrix gm = tensor_metric(s.space());
  for (std::size_t u = 0; u < dm; ++u) {
    const Vector gu = gm.transpose().apply(mb[u]);
    for (std::size_t w = 0; w < dm; ++w) {
      GaussRat v;
      for (std::size_t k = 0; k < gu.size(); ++k)
        if (!gu[k].is_zero()) v += gu[k] * mb[w][k];
      g.metric_on_m(u, w) = v;
    }
  }
  if (!has_real_constants(g)) throw TheoremViolation("real form has non-real structure constants or metric");
  if (!verify_antisymmetry(g).ok) throw TheoremViolation("real bracket is not antisymmetric");
  if (!verify_grading(g).ok) throw TheoremViolation("real bracket violates the symmetric grading");
  if (!verify_metric(g).ok()) throw TheoremViolation("real metric is not an invariant nondegenerate symmetric form");
  if (!verify_jacobi(g).ok) throw TheoremViolation("real bracket violates the Jacobi identity");
  out.signature = hermitian_inertia(g.metric_on_m);
  return out;
}

/// The default quaternionic structure for the real analysis of S: the
/// standard one for the split E_+ = find_lagrangian(S), E_- its greedy
/// Lagrangian complement.
inline QuaternionicStructure default_quaternionic_for(const SymTensor& s) {
  const Subspace plus = find_lagrangian(s);
  return standard_quaternionic(s.space(), std::make_pair(plus, lagrangian_complement(plus)));
}

}  // namespace hksym
