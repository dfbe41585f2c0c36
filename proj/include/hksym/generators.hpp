#pragma once

#include <cstdint>
#include <exception>
#include <string>

#include "hksym/errors.hpp"
#include "hksym/random.hpp"
#include "hksym/real_form.hpp"
#include "hksym/sym_tensor.hpp"

namespace hksym {

namespace detail {

inline std::size_t parse_count(const std::string& text, const std::string& kind) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v <= 0 || v > 16) throw FormatError("bad parameter in generator kind " + kind);
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Normal forms x = p1, y = p2 on n = 2, one per Petrov type.
inline SymTensor petrov_normal_form(const std::string& type) {
  const SymTensor x = SymTensor::p(2, 0), y = SymTensor::p(2, 1);
  if (type == "I") return x.pow(3) * y - x * y.pow(3);
  if (type == "II") return x.pow(3) * y - x.pow(2) * y.pow(2);
  if (type == "D") return x.pow(2) * y.pow(2);
  if (type == "III") return x.pow(3) * y;
  if (type == "N") return x.pow(4);
  if (type == "O") return SymTensor(2, 4);
  throw FormatError("unknown Petrov type " + type);
}

/// dim4 | petrov:<type> | random-lagrangian:<n> | real-random:<m> (n = 2m).
inline SymTensor generate_quartic(const std::string& kind, std::uint64_t seed) {
  Rng rng(seed);
  if (kind == "dim4") return SymTensor::p(1, 0).pow(4);
  const auto colon = kind.find(':');
  const std::string head = kind.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : kind.substr(colon + 1);
  if (head == "petrov" && colon != std::string::npos) return petrov_normal_form(arg);
  if (head == "random-lagrangian" && colon != std::string::npos) {
    const SymplecticSpace sp(detail::parse_count(arg, kind));
    return random_symmetric_power(p_span(sp), 4, rng);
  }
  if (head == "real-random" && colon != std::string::npos) {
    const SymplecticSpace sp(2 * detail::parse_count(arg, kind));
    const auto j = standard_quaternionic(sp, std::make_pair(p_span(sp), q_span(sp)));
    return symmetrize_real(random_symmetric_power(p_span(sp), 4, rng), j);
  }
  throw FormatError("unknown generator kind " + kind);
}

}  // namespace hksym
