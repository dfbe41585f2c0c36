#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/matrix.hpp"
#include "hksym/symplectic.hpp"

namespace hksym {

/// Exponents over the basis order p_1..p_n, q_1..q_n.
using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); }

/// An element of S^d E, stored as a homogeneous polynomial in the basis
/// vectors (S^d E = C[E*]^(d)). Zero coefficients are never stored.
class SymTensor {
public:
  SymTensor(std::size_t n, unsigned degree) : n_(n), degree_(degree) {
    if (n == 0) throw ContractError("SymTensor needs n >= 1");
  }

  /// The linear polynomial sum_k v_k e_k.
  static SymTensor from_vector(std::size_t n, const Vector& v) {
    if (v.size() != 2 * n) throw ContractError("from_vector: dimension mismatch");
    SymTensor t(n, 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
      MultiIndex a(2 * n, 0);
      a[k] = 1;
      t.add_term(a, v[k]);
    }
    return t;
  }

  static SymTensor variable(std::size_t n, std::size_t k) { return from_vector(n, unit_vector(2 * n, k)); }
  static SymTensor p(std::size_t n, std::size_t a) { return variable(n, a); }
  static SymTensor q(std::size_t n, std::size_t a) { return variable(n, n + a); }

  static SymTensor constant(std::size_t n, const GaussRat& c) {
    SymTensor t(n, 0);
    t.add_term(MultiIndex(2 * n, 0), c);
    return t;
  }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  unsigned degree() const { return degree_; }
  SymplecticSpace space() const { return SymplecticSpace(n_); }

  const std::map<MultiIndex, GaussRat>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  GaussRat coefficient(const MultiIndex& a) const {
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? GaussRat() : it->second;
  }

  void add_term(const MultiIndex& a, const GaussRat& c) {
    if (a.size() != dim()) throw ContractError("multi-index has wrong length");
    if (total_degree(a) != degree_) throw ContractError("multi-index has wrong total degree");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  /// Degree-1 tensor read as a vector of E.
  Vector as_vector() const {
    if (degree_ != 1) throw ContractError("as_vector needs degree 1");
    Vector v(dim());
    for (const auto& [a, c] : coeffs_)
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] == 1) v[k] = c;
    return v;
  }

  GaussRat as_scalar() const {
    if (degree_ != 0) throw ContractError("as_scalar needs degree 0");
    return coeffs_.empty() ? GaussRat() : coeffs_.begin()->second;
  }

  SymTensor& operator+=(const SymTensor& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.coeffs_) add_term(a, c);
    return *this;
  }
  SymTensor& operator-=(const SymTensor& o) {
    check_compatible(o);
    for (const auto& [a, c] : o.coeffs_) add_term(a, -c);
    return *this;
  }
  SymTensor& operator*=(const GaussRat& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [a, c] : coeffs_) c *= s;
    return *this;
  }

  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const GaussRat& s, SymTensor t) { return t *= s; }
  friend SymTensor operator-(SymTensor t) { return t *= GaussRat(-1); }

  /// Symmetric product (polynomial multiplication).
  friend SymTensor operator*(const SymTensor& a, const SymTensor& b) {
    if (a.n_ != b.n_) throw ContractError("symmetric product of tensors on different spaces");
    SymTensor out(a.n_, a.degree_ + b.degree_);
    for (const auto& [ia, ca] : a.coeffs_)
      for (const auto& [ib, cb] : b.coeffs_) {
        MultiIndex s(ia.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = ia[k] + ib[k];
        out.add_term(s, ca * cb);
      }
    return out;
  }

  SymTensor pow(unsigned e) const {
    SymTensor r = constant(n_, 1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SymTensor& a, const SymTensor& b) { return !(a == b); }

  /// Human-readable polynomial, e.g. "2*p1^3*q1 + (1/2+i)*p2^4".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    const SymplecticSpace sp(n_);
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const auto& [a, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += sp.label(k);
        if (a[k] > 1) mono += "^" + std::to_string(a[k]);
      }
      const std::string cs = c.is_real() || c.re() == 0 ? c.str() : "(" + c.str() + ")";
      if (mono.empty())
        out += cs;
      else if (c == GaussRat(1))
        out += mono;
      else
        out += cs + "*" + mono;
    }
    return out;
  }

private:
  void check_compatible(const SymTensor& o) const {
    if (n_ != o.n_ || degree_ != o.degree_) throw ContractError("tensor shape mismatch");
  }

  std::size_t n_;
  unsigned degree_;
  std::map<MultiIndex, GaussRat> coeffs_;
};

/// All multi-indices of total degree d over `vars` variables, in std::map
/// (lexicographic) order.
inline std::vector<MultiIndex> monomials(std::size_t vars, unsigned d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(vars, 0);
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == vars) {
      cur[k] = left;
      out.push_back(cur);
      cur[k] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[k] = e;
      self(self, k + 1, left - e);
    }
    cur[k] = 0;
  };
  if (vars == 0) return out;
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficients on the monomial basis of S^d E (see monomials()).
inline Vector coordinates(const SymTensor& t) {
  const auto basis = monomials(t.dim(), t.degree());
  Vector v(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) v[k] = t.coefficient(basis[k]);
  return v;
}

/// omega-contraction T_x = (1/d) d_{omega x} T, where d_xi differentiates
/// the polynomial along the covector xi and d_{omega x} e_k = omega(x, e_k).
inline SymTensor contract(const SymTensor& t, const Vector& x) {
  if (t.degree() == 0) throw ContractError("contract: degree-0 tensor");
  if (x.size() != t.dim()) throw ContractError("contract: dimension mismatch");
  const std::size_t n = t.n();
  // w_k = omega(x, e_k): omega(x, p_a) = -x_{q_a}, omega(x, q_a) = x_{p_a}.
  Vector w(t.dim());
  for (std::size_t a = 0; a < n; ++a) {
    w[a] = -x[n + a];
    w[n + a] = x[a];
  }
  const GaussRat inv_d = GaussRat::rational(1, t.degree());
  SymTensor out(n, t.degree() - 1);
  for (const auto& [a, c] : t.terms())
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0 || w[k].is_zero()) continue;
      MultiIndex b = a;
      --b[k];
      out.add_term(b, c * w[k] * GaussRat(static_cast<long>(a[k])) * inv_d);
    }
  return out;
}

/// Full polarization M_t(omega x_1, ..., omega x_d): iterated contraction.
inline GaussRat eval_on_vectors(const SymTensor& t, const std::vector<Vector>& xs) {
  if (xs.size() != t.degree()) throw ContractError("eval_on_vectors: argument count != degree");
  SymTensor cur = t;
  for (const auto& x : xs) cur = contract(cur, x);
  return cur.as_scalar();
}

/// sp(E) = S^2 E: the endomorphism of a quadratic tensor B is
/// x -> B x := -B_x. With this sign the map is Sp(E)-equivariant for the
/// derivation action below, and pq . (lambda p^4 + mu p^3 q) =
/// -2 lambda p^4 - mu p^3 q.
inline Matrix endo_of_quadratic(const SymTensor& b) {
  if (b.degree() != 2) throw ContractError("endo_of_quadratic: degree != 2");
  Matrix m(b.dim(), b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Vector col = contract(b, unit_vector(b.dim(), k)).as_vector();
    for (std::size_t i = 0; i < b.dim(); ++i) m(i, k) = -col[i];
  }
  return m;
}

/// Derivation action of A in sp(E): A . (v_1 ... v_d) = sum_i v_1 .. (A v_i) .. v_d.
/// Equivalently (A . t) polarized = -sum_i M_t(x_1, .., A x_i, .., x_d).
inline SymTensor sp_action(const Matrix& a, const SymTensor& t) {
  const SymplecticSpace sp = t.space();
  if (!is_in_sp(sp, a)) throw ContractError("sp_action: matrix is not in sp(E)");
  SymTensor out(t.n(), t.degree());
  for (const auto& [idx, c] : t.terms())
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] == 0) continue;
      const GaussRat ck = c * GaussRat(static_cast<long>(idx[k]));
      for (std::size_t l = 0; l < idx.size(); ++l) {
        const auto& alk = a(l, k);
        if (alk.is_zero()) continue;
        MultiIndex b = idx;
        --b[k];
        ++b[l];
        out.add_term(b, ck * alk);
      }
    }
  return out;
}

/// S_{e,f} as an endomorphism: endo_of_quadratic((S_e)_f).
inline Matrix double_contraction_endo(const SymTensor& s, const Vector& e, const Vector& f) {
  if (s.degree() != 4) throw ContractError("double_contraction_endo: degree != 4");
  return endo_of_quadratic(contract(contract(s, e), f));
}

/// All S_{e_k, e_l} for basis vectors, indexed [k][l] (symmetric).
inline std::vector<std::vector<Matrix>> basis_double_contractions(const SymTensor& s) {
  if (s.degree() != 4) throw ContractError("basis_double_contractions: degree != 4");
  const std::size_t d = s.dim();
  std::vector<SymTensor> first;
  for (std::size_t k = 0; k < d; ++k) first.push_back(contract(s, unit_vector(d, k)));
  std::vector<std::vector<Matrix>> out(d, std::vector<Matrix>(d));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k; l < d; ++l) {
      out[k][l] = endo_of_quadratic(contract(first[k], unit_vector(d, l)));
      if (l != k) out[l][k] = out[k][l];
    }
  return out;
}

/// Support Sigma_T = span{T_{x_1..x_{d-2}} x_{d-1}} over standard basis
/// tuples, with an echelonized basis.
inline Subspace support(const SymTensor& t) {
  if (t.degree() < 2) throw ContractError("support: degree < 2");
  const std::size_t d = t.dim();
  std::vector<Vector> gens;
  // Contractions only depend on the multiset of arguments.
  auto rec = [&](auto&& self, const SymTensor& cur, std::size_t first) -> void {
    if (cur.is_zero()) return;
    if (cur.degree() == 1) {
      gens.push_back(cur.as_vector());
      return;
    }
    for (std::size_t k = first; k < d; ++k) self(self, contract(cur, unit_vector(d, k)), k);
  };
  rec(rec, t, 0);
  return Subspace::span(t.space(), gens);
}

/// Linear change of variables e_k -> sum_l L(k, l) e_l.
inline SymTensor substitute(const SymTensor& t, const Matrix& l) {
  const std::size_t d = t.dim();
  if (l.rows() != d || l.cols() != d) throw ContractError("substitute: matrix has wrong size");
  std::vector<SymTensor> images;
  for (std::size_t k = 0; k < d; ++k) images.push_back(SymTensor::from_vector(t.n(), l.row(k)));
  SymTensor out(t.n(), t.degree());
  for (const auto& [a, c] : t.terms()) {
    SymTensor term = SymTensor::constant(t.n(), c);
    for (std::size_t k = 0; k < d; ++k)
      for (unsigned e = 0; e < a[k]; ++e) term = term * images[k];
    out += term;
  }
  return out;
}

/// Natural GL(E) action v -> T v extended multiplicatively.
inline SymTensor act(const Matrix& t_map, const SymTensor& t) { return substitute(t, t_map.transpose()); }

/// True iff t lies in S^d V, i.e. every contraction by the omega-annihilator
/// of V vanishes.
inline bool in_symmetric_power(const SymTensor& t, const Subspace& v) {
  if (t.degree() == 0) return true;
  const Subspace ann = omega_annihilator(v);
  for (const auto& x : ann.basis())
    if (!contract(t, x).is_zero()) return false;
  return true;
}

/// Real structure on even symmetric powers,
/// (tau t)(x_1..x_d) = conj(t(j x_1, .., j x_d)), reassembled from the
/// polarization on the vectors dual to the coordinate covectors.
inline SymTensor tau(const SymTensor& t, const QuaternionicStructure& j) {
  if (t.degree() % 2 != 0) throw ContractError("tau: odd degree");
  if (j.space().n() != t.n()) throw ContractError("tau: quaternionic structure on a different space");
  const std::size_t d = t.dim();
  const SymplecticSpace sp = t.space();
  // y_k with omega(y_k, e_l) = delta_kl is column k of Omega; store j y_k.
  std::vector<Vector> jy;
  for (std::size_t k = 0; k < d; ++k) jy.push_back(j.apply(sp.omega().column(k)));
  // factorials for d!/alpha!
  auto fact = [](unsigned m) {
    mpz_class f = 1;
    for (unsigned k = 2; k <= m; ++k) f *= k;
    return f;
  };
  SymTensor out(t.n(), t.degree());
  for (const auto& alpha : monomials(d, t.degree())) {
    std::vector<Vector> args;
    mpz_class denom = 1;
    for (std::size_t k = 0; k < d; ++k) {
      for (unsigned e = 0; e < alpha[k]; ++e) args.push_back(jy[k]);
      denom *= fact(alpha[k]);
    }
    const GaussRat value = eval_on_vectors(t, args).conj();
    if (value.is_zero()) continue;
    out.add_term(alpha, value * GaussRat(mpq_class(fact(t.degree()), denom)));
  }
  return out;
}

}  // namespace hksym
