#pragma once

#include <array>
#include <cstddef>
#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/matrix.hpp"
#include "hksym/sym_tensor.hpp"
#include "hksym/symplectic.hpp"
#include "hksym/upoly.hpp"

namespace hksym {

/// a0 x^4 + 4 a1 x^3 y + 6 a2 x^2 y^2 + 4 a3 x y^3 + a4 y^4.
struct BinaryQuartic {
  std::array<GaussRat, 5> a;

  /// From plain monomial coefficients c_k of x^(4-k) y^k.
  static BinaryQuartic from_monomials(const std::array<GaussRat, 5>& c) {
    static const long w[5] = {1, 4, 6, 4, 1};
    BinaryQuartic q;
    for (std::size_t k = 0; k < 5; ++k) q.a[k] = c[k] / GaussRat(w[k]);
    return q;
  }

  /// Coefficient of x^(4-k) y^k.
  std::array<GaussRat, 5> monomial_coeffs() const {
    static const long w[5] = {1, 4, 6, 4, 1};
    std::array<GaussRat, 5> c;
    for (std::size_t k = 0; k < 5; ++k) c[k] = a[k] * GaussRat(w[k]);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const BinaryQuartic& l, const BinaryQuartic& r) { return l.a == r.a; }
};

/// The quartic in variables x = p_1, y = p_2 as a SymTensor on n = 2.
inline SymTensor to_tensor(const BinaryQuartic& q) {
  SymTensor t(2, 4);
  const auto c = q.monomial_coeffs();
  for (unsigned k = 0; k < 5; ++k) t.add_term(MultiIndex{4 - k, k, 0, 0}, c[k]);
  return t;
}

/// Inverse of to_tensor on S^4(span{p_1, p_2}).
inline BinaryQuartic from_tensor(const SymTensor& t) {
  if (t.n() != 2 || t.degree() != 4) throw ContractError("binary quartic needs a degree-4 tensor on n = 2");
  std::array<GaussRat, 5> c;
  for (const auto& [a, v] : t.terms()) {
    if (a[2] != 0 || a[3] != 0) throw ContractError("tensor is not in S^4 span{p1, p2}");
    c[a[1]] = v;
  }
  return BinaryQuartic::from_monomials(c);
}

/// The quartic S restricted to a Lagrangian E_+ (dim 2), written in the
/// given basis (u_1, u_2) of E_+ as x = u_1, y = u_2.
inline BinaryQuartic restrict_to(const SymTensor& s, const std::vector<Vector>& basis) {
  if (s.n() != 2 || basis.size() != 2) throw ContractError("restriction needs dim E = 4 and a 2-vector basis");
  const Subspace plus(s.space(), basis);
  if (!is_lagrangian(plus)) throw ContractError("E_+ is not Lagrangian");
  if (!in_symmetric_power(s, plus)) throw ContractError("S is not supported in E_+");
  const Matrix adapted = adapted_symplectic_basis(plus, lagrangian_complement(plus));
  return from_tensor(act(inverse_or_throw(adapted), s));
}

struct QuarticInvariants {
  GaussRat i, j;
  /// Root multiplicities on P^1, sorted descending; empty for the zero form.
  std::vector<unsigned> pattern;
};

/// Root multiplicity pattern of the form on P^1 via Yun on f(x, 1), with
/// the root at infinity contributing 4 - deg f.
inline std::vector<unsigned> multiplicity_pattern(const BinaryQuartic& q) {
  if (q.is_zero()) return {};
  const auto c = q.monomial_coeffs();
  // f(x, 1) = sum_k c_k x^(4-k), low to high: c_4, c_3, .., c_0.
  const UPoly f(std::vector<GaussRat>{c[4], c[3], c[2], c[1], c[0]});
  std::vector<unsigned> pattern;
  const auto degs = squarefree_degrees(f);
  for (std::size_t k = 0; k < degs.size(); ++k)
    for (std::size_t r = 0; r < degs[k]; ++r) pattern.push_back(static_cast<unsigned>(k + 1));
  if (f.degree() < 4) pattern.push_back(static_cast<unsigned>(4 - f.degree()));
  std::sort(pattern.rbegin(), pattern.rend());
  return pattern;
}

inline QuarticInvariants quartic_invariants(const BinaryQuartic& q) {
  const auto& [a0, a1, a2, a3, a4] = q.a;
  QuarticInvariants out;
  out.i = a0 * a4 - GaussRat(4) * a1 * a3 + GaussRat(3) * a2 * a2;
  out.j = a0 * a2 * a4 + GaussRat(2) * a1 * a2 * a3 - a0 * a3 * a3 - a1 * a1 * a4 - a2 * a2 * a2;
  out.pattern = multiplicity_pattern(q);
  return out;
}

/// {1,1,1,1} -> I, {2,1,1} -> II, {2,2} -> D, {3,1} -> III, {4} -> N,
/// zero form -> O.
inline std::string petrov_type(const std::vector<unsigned>& pattern) {
  using P = std::vector<unsigned>;
  if (pattern.empty()) return "O";
  if (pattern == P{1, 1, 1, 1}) return "I";
  if (pattern == P{2, 1, 1}) return "II";
  if (pattern == P{2, 2}) return "D";
  if (pattern == P{3, 1}) return "III";
  if (pattern == P{4}) return "N";
  throw TheoremViolation("multiplicity pattern of a binary quartic does not sum to 4");
}

/// Quadrics u = (x^2, xy, y^2). G is the Gram matrix of the invariant
/// form on S^2 C^2 induced by sigma(x, y) = 1, i.e. the polarization of the
/// discriminant b^2/4 - ac of a x^2 + b xy + c y^2.
inline const Matrix& quadric_gram() {
  static const Matrix g{{0, 0, GaussRat::rational(-1, 2)}, {0, GaussRat::rational(1, 4), 0}, {GaussRat::rational(-1, 2), 0, 0}};
  return g;
}

inline const Matrix& quadric_gram_inverse() {
  static const Matrix g{{0, 0, -2}, {0, 4, 0}, {-2, 0, 0}};
  return g;
}

/// A symmetric 3x3 matrix with tr(G A) = 0.
struct TracelessSym3 {
  Matrix a{3, 3};

  bool valid() const { return a == a.transpose() && (quadric_gram() * a).trace().is_zero(); }
};

/// sum A_ij u_i u_j.
inline BinaryQuartic matrix_to_quartic(const TracelessSym3& m) {
  const Matrix& a = m.a;
  return BinaryQuartic::from_monomials({a(0, 0), GaussRat(2) * a(0, 1), GaussRat(2) * a(0, 2) + a(1, 1),
                                        GaussRat(2) * a(1, 2), a(2, 2)});
}

/// The unique G-traceless A with matrix_to_quartic(A) = q.
inline TracelessSym3 quartic_to_matrix(const BinaryQuartic& q) {
  const auto c = q.monomial_coeffs();
  const GaussRat half = GaussRat::rational(1, 2), sixth = GaussRat::rational(1, 6);
  TracelessSym3 m;
  m.a(0, 0) = c[0];
  m.a(0, 1) = m.a(1, 0) = half * c[1];
  m.a(0, 2) = m.a(2, 0) = sixth * c[2];
  m.a(1, 1) = GaussRat(4) * sixth * c[2];
  m.a(1, 2) = m.a(2, 1) = half * c[3];
  m.a(2, 2) = c[4];
  return m;
}

/// A - t G^{-1} with t chosen so the result is G-traceless; the quartic is
/// unchanged because sum (G^{-1})_ij u_i u_j = 0.
inline TracelessSym3 traceless_projection(const Matrix& a) {
  const GaussRat t = (quadric_gram() * a).trace() / GaussRat(3);
  return {a - t * quadric_gram_inverse()};
}

/// Segre-type classification of M = G A from its characteristic and
/// minimal polynomials, mapped to the Petrov letters.
inline std::string segre_type(const TracelessSym3& m) {
  const Matrix x = quadric_gram() * m.a;
  const Matrix id = Matrix::identity(3);
  if (x.is_zero()) return "O";
  // t^3 + p t + q with p = (tr^2 - tr(M^2)) / 2 = -tr(M^2) / 2, q = -det M.
  const Matrix x2 = x * x;
  const GaussRat p = GaussRat::rational(-1, 2) * x2.trace();
  const GaussRat q = -(x2 * x).trace() / GaussRat(3);
  const GaussRat disc = GaussRat(-4) * p * p * p - GaussRat(27) * q * q;
  if (!disc.is_zero()) return "I";
  if (p.is_zero()) return x2.is_zero() ? "N" : "III";
  const GaussRat r = GaussRat(-3) * q / (GaussRat(2) * p);
  const Matrix min = (x - r * id) * (x + GaussRat(2) * r * id);
  return min.is_zero() ? "D" : "II";
}

struct PetrovClass {
  std::string type;
  std::vector<unsigned> pattern;
  /// (I^3 : J^2) scaled so the first nonzero entry is 1; type I only.
  std::optional<std::pair<GaussRat, GaussRat>> invariant;

  friend bool operator==(const PetrovClass& a, const PetrovClass& b) {
    return a.type == b.type && a.pattern == b.pattern && a.invariant == b.invariant;
  }
};

inline PetrovClass classify_quartic(const BinaryQuartic& q) {
  const auto inv = quartic_invariants(q);
  PetrovClass c{petrov_type(inv.pattern), inv.pattern, std::nullopt};
  if (c.type == "I") {
    const GaussRat i3 = inv.i * inv.i * inv.i, j2 = inv.j * inv.j;
    if (!i3.is_zero())
      c.invariant = std::make_pair(GaussRat(1), j2 / i3);
    else
      c.invariant = std::make_pair(GaussRat(0), GaussRat(1));
  }
  return c;
}

/// C^* . SO(3, C) orbit of S in S^4 E_+ for dim E = 4.
inline PetrovClass classify_complex8(const SymTensor& s, const Subspace& e_plus) {
  if (s.n() != 2) throw ContractError("classify_complex8 needs dim E = 4");
  if (e_plus.dim() != 2) throw ContractError("classify_complex8 needs dim E_+ = 2");
  return classify_quartic(restrict_to(s, e_plus.basis()));
}

/// R^+ . SO(3) orbit invariant of a real traceless symmetric matrix with
/// characteristic polynomial t^3 + p t + q.
struct RealOrbitInvariant {
  bool zero{true};
  int sign_p{0};
  int sign_q{0};
  /// q^2 / p^3 when p != 0.
  std::optional<mpq_class> q2_over_p3;
  /// q |q| / (-p)^3; together with `zero` a complete invariant.
  mpq_class kappa{0};
  PetrovClass petrov;
  Matrix real_matrix{3, 3};

  friend bool operator==(const RealOrbitInvariant& a, const RealOrbitInvariant& b) {
    return a.zero == b.zero && a.sign_p == b.sign_p && a.sign_q == b.sign_q && a.q2_over_p3 == b.q2_over_p3 &&
           a.kappa == b.kappa && a.petrov == b.petrov;
  }
};

/// Basis (x^2 + y^2, i(x^2 - y^2), 2ixy) of the tau-fixed quadrics in the
/// coordinates of a basis (u, ju); the invariant form is -I there.
inline const Matrix& real_slice_basis() {
  static const Matrix b{{1, GaussRat::i(), 0}, {0, 0, GaussRat(2) * GaussRat::i()}, {1, -GaussRat::i(), 0}};
  return b;
}

inline RealOrbitInvariant real_invariant_of(const Matrix& a) {
  if (a.rows() != 3 || a.cols() != 3 || a != a.transpose()) throw ContractError("real invariant needs a symmetric 3x3 matrix");
  for (const auto& x : a.entries())
    if (!x.is_real()) throw ContractError("real invariant needs a real matrix");
  if (!a.trace().is_zero()) throw ContractError("real invariant needs a traceless matrix");
  RealOrbitInvariant r;
  r.real_matrix = a;
  const Matrix a2 = a * a;
  const mpq_class p = mpq_class(-a2.trace().re() / 2);
  const mpq_class q = mpq_class(-(a2 * a).trace().re() / 3);
  r.zero = sgn(p) == 0 && sgn(q) == 0;
  r.sign_p = sgn(p);
  r.sign_q = sgn(q);
  if (sgn(p) != 0) {
    r.q2_over_p3 = mpq_class(q * q / (p * p * p));
    r.kappa = mpq_class(q * abs(q) / (-p * -p * -p));
  }
  return r;
}

/// R^+ . SO(3) orbit of a tau-fixed S in S^4 E_+ (dim E = 4): S is written in
/// the basis (u, ju) of E_+, u the first basis vector, and mapped to the
/// real traceless matrix of its quadric decomposition.
inline RealOrbitInvariant classify_real8(const SymTensor& s, const QuaternionicStructure& j, const Subspace& e_plus) {
  if (s.n() != 2) throw ContractError("classify_real8 needs dim E = 4");
  if (e_plus.dim() != 2) throw ContractError("classify_real8 needs dim E_+ = 2");
  if (!j.preserves(e_plus)) throw ContractError("E_+ is not j-invariant");
  if (tau(s, j) != s) throw NotReal("S is not tau-fixed");
  const Vector u = e_plus.basis()[0];
  const BinaryQuartic bq = restrict_to(s, {u, j.apply(u)});
  const TracelessSym3 m = quartic_to_matrix(bq);
  const Matrix& b = real_slice_basis();
  const Matrix b_inv = inverse_or_throw(b);
  const Matrix real = b_inv * m.a * b_inv.transpose();
  for (const auto& x : real.entries())
    if (!x.is_real()) throw TheoremViolation("tau-fixed quartic has a non-real slice matrix");
  RealOrbitInvariant r = real_invariant_of(real);
  r.petrov = classify_quartic(bq);
  return r;
}

inline bool isomorphic8_complex(const SymTensor& s1, const Subspace& e1, const SymTensor& s2, const Subspace& e2) {
  return classify_complex8(s1, e1) == classify_complex8(s2, e2);
}

inline bool isomorphic8_real(const SymTensor& s1, const QuaternionicStructure& j1, const Subspace& e1, const SymTensor& s2,
                             const QuaternionicStructure& j2, const Subspace& e2) {
  return classify_real8(s1, j1, e1) == classify_real8(s2, j2, e2);
}

}  // namespace hksym
