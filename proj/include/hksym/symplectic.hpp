#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/matrix.hpp"

namespace hksym {

/// (E, omega) with E = C^{2n}, basis p_1..p_n, q_1..q_n and the standard
/// form omega(p_a, q_b) = delta_ab, omega(p_a, p_b) = omega(q_a, q_b) = 0.
class SymplecticSpace {
public:
  explicit SymplecticSpace(std::size_t n) : n_(n), omega_(2 * n, 2 * n) {
    if (n == 0) throw ContractError("symplectic space needs n >= 1");
    for (std::size_t a = 0; a < n; ++a) {
      omega_(a, n + a) = 1;
      omega_(n + a, a) = -1;
    }
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const Matrix& omega() const { return omega_; }

  Vector p(std::size_t a) const { return unit_vector(dim(), a); }
  Vector q(std::size_t a) const { return unit_vector(dim(), n_ + a); }

  std::string label(std::size_t k) const {
    return (k < n_ ? "p" : "q") + std::to_string(k % n_ + 1);
  }
  std::vector<std::string> basis_labels() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(label(k));
    return out;
  }

  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) { return a.n_ == b.n_; }

private:
  std::size_t n_;
  Matrix omega_;
};

/// The two-dimensional space H with omega_H(h_1, h_2) = 1.
inline const SymplecticSpace& h_space() {
  static const SymplecticSpace h(1);
  return h;
}

/// omega(x, y) = x^T Omega y. The pairing of a vector v with the covector
/// omega x is <v, omega x> := omega(x, v).
inline GaussRat omega_pair(const SymplecticSpace& sp, const Vector& x, const Vector& y) {
  if (x.size() != sp.dim() || y.size() != sp.dim()) throw ContractError("omega_pair: dimension mismatch");
  const std::size_t n = sp.n();
  GaussRat s;
  for (std::size_t a = 0; a < n; ++a) {
    if (!x[a].is_zero() && !y[n + a].is_zero()) s += x[a] * y[n + a];
    if (!x[n + a].is_zero() && !y[a].is_zero()) s -= x[n + a] * y[a];
  }
  return s;
}

/// True iff omega(A x, y) + omega(x, A y) = 0, i.e. A^T Omega + Omega A = 0.
inline bool is_in_sp(const SymplecticSpace& sp, const Matrix& a) {
  if (a.rows() != sp.dim() || a.cols() != sp.dim()) return false;
  return (a.transpose() * sp.omega() + sp.omega() * a).is_zero();
}

inline bool is_symplectic(const SymplecticSpace& sp, const Matrix& t) {
  if (t.rows() != sp.dim() || t.cols() != sp.dim()) return false;
  return t.transpose() * sp.omega() * t == sp.omega();
}

/// A linear subspace given by an explicit, linearly independent basis.
class Subspace {
public:
  explicit Subspace(SymplecticSpace ambient) : ambient_(std::move(ambient)) {}
  Subspace(SymplecticSpace ambient, std::vector<Vector> basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      if (v.size() != ambient_.dim()) throw ContractError("Subspace: basis vector has wrong length");
    if (!basis_.empty() && hksym::rank(as_matrix()) != basis_.size())
      throw ContractError("Subspace: basis vectors are linearly dependent");
  }

  /// The span of arbitrary generators, with an echelonized basis.
  static Subspace span(const SymplecticSpace& ambient, const std::vector<Vector>& generators) {
    EchelonBasis e(generators, ambient.dim());
    return Subspace(ambient, e.rows());
  }

  const SymplecticSpace& ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Basis vectors as columns.
  Matrix as_matrix() const { return Matrix::from_columns(basis_, ambient_.dim()); }

  bool contains(const Vector& v) const {
    if (basis_.empty()) return hksym::is_zero(v);
    auto cols = basis_;
    cols.push_back(v);
    return hksym::rank(Matrix::from_columns(cols, ambient_.dim())) == basis_.size();
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis())
      if (!contains(v)) return false;
    return true;
  }

  friend bool same_subspace(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.contains(b);
  }

private:
  SymplecticSpace ambient_;
  std::vector<Vector> basis_;
};

inline bool is_isotropic(const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!omega_pair(s.ambient(), b[i], b[j]).is_zero()) return false;
  return true;
}

inline bool is_lagrangian(const Subspace& s) { return s.dim() == s.ambient().n() && is_isotropic(s); }

/// omega-annihilator {x : omega(x, v) = 0 for all v in s}.
inline Subspace omega_annihilator(const Subspace& s) {
  const auto& sp = s.ambient();
  if (s.dim() == 0) {
    std::vector<Vector> all;
    for (std::size_t k = 0; k < sp.dim(); ++k) all.push_back(unit_vector(sp.dim(), k));
    return Subspace(sp, all);
  }
  // Row i is (Omega v_i)^T up to sign: omega(x, v) = x^T Omega v.
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(sp.omega().apply(v));
  auto rk = rank_kernel(Matrix::from_rows(rows, sp.dim()));
  return Subspace(sp, rk.kernel_basis);
}

/// Greedy extension of an isotropic subspace to a Lagrangian one: standard
/// basis vectors are tried in order and kept when they enlarge the span and
/// preserve isotropy. When no standard vector fits any more, the first
/// echelon basis vector of the omega-annihilator outside the span is added.
inline Subspace extend_to_lagrangian(const Subspace& s) {
  if (!is_isotropic(s)) throw ContractError("extend_to_lagrangian: input is not isotropic");
  const auto& sp = s.ambient();
  std::vector<Vector> basis = s.basis();
  auto try_add = [&](const Vector& e) {
    for (const auto& b : basis)
      if (!omega_pair(sp, b, e).is_zero()) return false;
    auto trial = basis;
    trial.push_back(e);
    if (hksym::rank(Matrix::from_columns(trial, sp.dim())) != trial.size()) return false;
    basis = std::move(trial);
    return true;
  };
  for (std::size_t k = 0; k < sp.dim() && basis.size() < sp.n(); ++k) try_add(unit_vector(sp.dim(), k));
  while (basis.size() < sp.n()) {
    const Subspace ann = Subspace::span(sp, omega_annihilator(Subspace(sp, basis)).basis());
    bool added = false;
    for (const auto& w : ann.basis())
      if ((added = try_add(w))) break;
    if (!added) throw TheoremViolation("isotropic subspace has no isotropic extension");
  }
  Subspace out(sp, basis);
  if (!is_lagrangian(out)) throw TheoremViolation("Lagrangian extension did not reach dimension n");
  return out;
}

/// Lagrangian complement of a Lagrangian subspace: greedy over the standard
/// basis (keeping a vector when isotropy and transversality survive), then,
/// if that stalls, the first transverse coordinate Lagrangian
/// span{p_a : a in A} + span{q_b : b not in A} (one always exists).
inline Subspace lagrangian_complement(const Subspace& lag) {
  if (!is_lagrangian(lag)) throw ContractError("lagrangian_complement: input is not Lagrangian");
  const auto& sp = lag.ambient();
  auto transverse = [&](const std::vector<Vector>& chosen) {
    auto all = lag.basis();
    all.insert(all.end(), chosen.begin(), chosen.end());
    return hksym::rank(Matrix::from_columns(all, sp.dim())) == all.size();
  };
  std::vector<Vector> chosen;
  for (std::size_t k = 0; k < sp.dim() && chosen.size() < sp.n(); ++k) {
    Vector e = unit_vector(sp.dim(), k);
    bool ok = true;
    for (const auto& b : chosen)
      if (!omega_pair(sp, b, e).is_zero()) {
        ok = false;
        break;
      }
    if (!ok) continue;
    auto trial = chosen;
    trial.push_back(std::move(e));
    if (transverse(trial)) chosen = std::move(trial);
  }
  if (chosen.size() < sp.n()) {
    chosen.clear();
    const std::size_t n = sp.n();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Vector> cand;
      for (std::size_t a = 0; a < n; ++a) cand.push_back((mask >> a) & 1 ? sp.p(a) : sp.q(a));
      if (transverse(cand)) {
        chosen = std::move(cand);
        break;
      }
    }
  }
  Subspace out(sp, chosen);
  if (!is_lagrangian(out) || !transverse(chosen)) throw TheoremViolation("no transverse Lagrangian found");
  return out;
}

/// Columns u_1..u_n (basis of plus) followed by v_1..v_n in minus with
/// omega(u_a, v_b) = delta_ab. The result is a symplectic matrix.
inline Matrix adapted_symplectic_basis(const Subspace& plus, const Subspace& minus) {
  const auto& sp = plus.ambient();
  const std::size_t n = sp.n();
  if (!is_lagrangian(plus) || !is_lagrangian(minus)) throw ContractError("adapted basis needs two Lagrangians");
  // Pairing matrix M_ab = omega(u_a, w_b) over the given basis w of minus;
  // v_b = sum_c w_c (M^{-1})_{cb}.
  Matrix pairing(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) pairing(a, b) = omega_pair(sp, plus.basis()[a], minus.basis()[b]);
  auto inv = inverse(pairing);
  if (!inv) throw ContractError("Lagrangian subspaces are not transverse");
  std::vector<Vector> cols = plus.basis();
  for (std::size_t b = 0; b < n; ++b) {
    Vector v(sp.dim());
    for (std::size_t c = 0; c < n; ++c)
      if (!(*inv)(c, b).is_zero()) v = v + (*inv)(c, b) * minus.basis()[c];
    cols.push_back(std::move(v));
  }
  Matrix p = Matrix::from_columns(cols, sp.dim());
  if (!is_symplectic(sp, p)) throw TheoremViolation("adapted basis is not symplectic");
  return p;
}

/// Antilinear j(v) = C conj(v) with C conj(C) = -1 and C^T Omega C =
/// conj(Omega), i.e. j^2 = -1 and omega(jx, jy) = conj(omega(x, y)).
class QuaternionicStructure {
public:
  /// Validates both invariants.
  QuaternionicStructure(SymplecticSpace space, Matrix c) : space_(std::move(space)), c_(std::move(c)) {
    if (c_.rows() != space_.dim() || c_.cols() != space_.dim())
      throw ContractError("quaternionic structure: matrix has wrong size");
    if (c_ * c_.conj() != -Matrix::identity(space_.dim()))
      throw ContractError("quaternionic structure: j^2 != -1");
    if (c_.transpose() * space_.omega() * c_ != space_.omega().conj())
      throw ContractError("quaternionic structure: omega(jx, jy) != conj(omega(x, y))");
  }

  const SymplecticSpace& space() const { return space_; }
  const Matrix& c_matrix() const { return c_; }

  Vector apply(const Vector& v) const { return c_.apply(hksym::conj(v)); }

  /// [A, j] = 0 for a complex-linear A, i.e. A C = C conj(A).
  bool commutes_with(const Matrix& a) const { return a * c_ == c_ * a.conj(); }

  /// Hermitian Gram matrix of gamma(x, y) = omega(x, j y) = x^T (Omega C) conj(y).
  Matrix gamma_gram() const { return space_.omega() * c_; }

  bool preserves(const Subspace& s) const {
    for (const auto& v : s.basis())
      if (!s.contains(apply(v))) return false;
    return true;
  }

private:
  SymplecticSpace space_;
  Matrix c_;
};

namespace detail {

/// Block-diagonal [[0,-1],[1,0]] on consecutive coordinate pairs.
inline Matrix pair_rotation(std::size_t dim) {
  Matrix j(dim, dim);
  for (std::size_t k = 0; k + 1 < dim; k += 2) {
    j(k, k + 1) = -1;
    j(k + 1, k) = 1;
  }
  return j;
}

}  // namespace detail

/// A compatible quaternionic structure. Without a split, C = -Omega (for H
/// this is [[0,-1],[1,0]] and gamma is positive definite). With a Lagrangian
/// split E = E_+ + E_-, j preserves both parts and acts as
/// (z_1, z_2) -> (-conj z_2, conj z_1) on consecutive coordinate pairs of an
/// adapted symplectic basis.
inline QuaternionicStructure standard_quaternionic(const SymplecticSpace& sp,
                                                   const std::optional<std::pair<Subspace, Subspace>>& split = std::nullopt) {
  if (!split) return QuaternionicStructure(sp, -sp.omega());
  if (sp.n() % 2 != 0)
    throw ContractError("no compatible quaternionic structure for this split (dim E not divisible by 4)");
  const Matrix p = adapted_symplectic_basis(split->first, split->second);
  const std::size_t n = sp.n();
  Matrix block(sp.dim(), sp.dim());
  const Matrix rot = detail::pair_rotation(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      block(i, k) = rot(i, k);
      block(n + i, n + k) = rot(i, k);
    }
  // j = P o j_std o P^{-1}, so C = P C_std conj(P)^{-1}.
  QuaternionicStructure j(sp, p * block * inverse_or_throw(p.conj()));
  if (!j.preserves(split->first) || !j.preserves(split->second))
    throw TheoremViolation("standard quaternionic structure does not preserve the split");
  return j;
}

/// The fixed j_H on H; gamma_H is positive definite.
inline const QuaternionicStructure& j_h() {
  static const QuaternionicStructure j = standard_quaternionic(h_space());
  return j;
}

/// Inertia of gamma = omega(., j .).
inline Inertia gamma_signature(const QuaternionicStructure& j) {
  Inertia s = hermitian_inertia(j.gamma_gram());
  if (s.null != 0) throw ContractError("gamma is degenerate: corrupted quaternionic structure");
  return s;
}

/// rho = j_H (x) j_E on H (x) E (coordinates (a, k) -> a * dim E + k).
class RealStructureRho {
public:
  RealStructureRho(QuaternionicStructure jh, QuaternionicStructure je)
      : jh_(std::move(jh)), je_(std::move(je)), kron_(kron(jh_.c_matrix(), je_.c_matrix())) {}

  const QuaternionicStructure& j_h() const { return jh_; }
  const QuaternionicStructure& j_e() const { return je_; }
  const Matrix& matrix() const { return kron_; }
  std::size_t dim() const { return kron_.rows(); }

  Vector apply(const Vector& v) const { return kron_.apply(hksym::conj(v)); }

private:
  QuaternionicStructure jh_;
  QuaternionicStructure je_;
  Matrix kron_;
};

}  // namespace hksym
