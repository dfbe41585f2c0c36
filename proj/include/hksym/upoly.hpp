#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hksym/errors.hpp"
#include "hksym/gauss_rat.hpp"

namespace hksym {

/// Dense univariate polynomial over Q(i), coefficients low to high degree,
/// never with a zero leading coefficient.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussRat> c) : c_(std::move(c)) { trim(); }

  static UPoly constant(const GaussRat& a) { return UPoly(std::vector<GaussRat>{a}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<GaussRat>& coeffs() const { return c_; }
  GaussRat lead() const { return c_.empty() ? GaussRat() : c_.back(); }

  UPoly derivative() const {
    std::vector<GaussRat> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussRat(static_cast<long>(k)));
    return UPoly(d);
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    const GaussRat l = lead();
    std::vector<GaussRat> out = c_;
    for (auto& x : out) x /= l;
    return UPoly(out);
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<GaussRat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
    return UPoly(out);
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(out);
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidScalar("polynomial division by zero");
    std::vector<GaussRat> r = a.c_;
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<GaussRat> q(a.c_.size() - b.c_.size() + 1);
    const GaussRat lb = b.lead();
    for (std::size_t k = q.size(); k-- > 0;) {
      const GaussRat f = r[k + b.c_.size() - 1] / lb;
      q[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
    }
    return {UPoly(q), UPoly(r)};
  }

  /// Exact quotient; throws if the division leaves a remainder.
  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw TheoremViolation("inexact polynomial division");
    return q;
  }

  /// Monic gcd.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRat> c_;
};

/// Yun square-free decomposition of a nonzero polynomial: entry k of the
/// result is the degree of the product of the roots of multiplicity k + 1.
inline std::vector<std::size_t> squarefree_degrees(const UPoly& f) {
  if (f.is_zero()) throw ContractError("square-free decomposition of the zero polynomial");
  std::vector<std::size_t> out;
  if (f.degree() == 0) return out;
  const UPoly fm = f.monic();
  const UPoly d = fm.derivative();
  const UPoly a0 = gcd(fm, d);
  UPoly b = exact_div(fm, a0);
  UPoly c = exact_div(d, a0);
  UPoly e = c - b.derivative();
  while (b.degree() > 0) {
    const UPoly a = gcd(b, e);
    out.push_back(static_cast<std::size_t>(a.degree()));
    b = exact_div(b, a);
    c = exact_div(e, a);
    e = c - b.derivative();
  }
  return out;
}

}  // namespace hksym
