#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "hksym/errors.hpp"

namespace hksym {

/// Exact element a + b i of the Gaussian rationals Q(i).
///
/// Both components are canonical GMP rationals (reduced, positive
/// denominator); every arithmetic result is canonical again.
class GaussRat {
public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT: implicit from integers is intended
  GaussRat(long re, long im) : re_(re), im_(im) {}
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return {0L, 1L}; }
  static GaussRat rational(long num, long den) {
    if (den == 0) throw InvalidScalar("zero denominator");
    return GaussRat(mpq_class(num, den));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  explicit operator bool() const { return !is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |z|^2 = re^2 + im^2.
  mpq_class norm() const { return mpq_class(re_ * re_ + im_ * im_); }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw InvalidScalar("division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    const mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// Canonical literal: "3/4", "-2i", "3/4-2i", "0".
  std::string str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = im_.get_str();
    if (sgn(re_) == 0) return imag + "i";
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag + "i";
  }

  /// Parses "a/b", "a", "a/b+c/di", "ci", "-i", whitespace-insensitive, with
  /// U+2212 accepted as a minus sign.
  static GaussRat parse(std::string_view text);

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

namespace detail {

inline std::string normalize_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (c == 0xE2 && k + 2 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out.push_back('-');
      k += 2;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

/// Parses an optionally signed "a" or "a/b".
inline mpq_class parse_rational(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidScalar("malformed rational literal: '" + std::string(whole) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidScalar("zero denominator in literal: '" + std::string(whole) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace detail

inline GaussRat GaussRat::parse(std::string_view text) {
  const std::string s = detail::normalize_literal(text);
  if (s.empty()) throw InvalidScalar("empty scalar literal");
  if (s.back() != 'i') return GaussRat(detail::parse_rational(s, text));

  const std::string_view body = std::string_view(s).substr(0, s.size() - 1);
  // The real/imaginary split is the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view real_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string imag_part(split == std::string_view::npos ? body : body.substr(split));
  if (imag_part.empty() || imag_part == "+" || imag_part == "-") imag_part += "1";
  if (imag_part.back() == '*') imag_part.pop_back();
  mpq_class re = real_part.empty() ? mpq_class(0) : detail::parse_rational(real_part, text);
  return GaussRat(std::move(re), detail::parse_rational(imag_part, text));
}

}  // namespace hksym
