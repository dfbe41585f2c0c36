#pragma once

// JSON encodings. Scalars are strings in the GaussRat literal syntax,
// matrices are arrays of rows.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hksym/errors.hpp"
#include "hksym/lie_algebra.hpp"
#include "hksym/matrix.hpp"
#include "hksym/sym_tensor.hpp"
#include "hksym/symplectic.hpp"

namespace hksym::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline json scalar_to_json(const GaussRat& z) { return z.str(); }

inline GaussRat scalar_from_json(const json& j) {
  if (!j.is_string()) throw FormatError("scalar must be a string such as \"3/4\" or \"1-2i\"");
  try {
    return GaussRat::parse(j.get<std::string>());
  } catch (const InvalidScalar& e) {
    throw FormatError(e.what());
  }
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

inline Vector vector_from_json(const json& j, std::size_t len) {
  if (!j.is_array() || j.size() != len) throw FormatError("vector must be an array of length " + std::to_string(len));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw FormatError("matrix must have " + std::to_string(rows) + " rows");
  std::vector<GaussRat> entries;
  for (const auto& r : j) {
    const Vector row = vector_from_json(r, cols);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(rows, cols, std::move(entries));
}

inline json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
  return {{"n", s.ambient().n()}, {"basis", basis}};
}

inline json quaternionic_to_json(const QuaternionicStructure& j) {
  return {{"n", j.space().n()}, {"c_matrix", matrix_to_json(j.c_matrix())}};
}

/// {"n", "c_matrix"}; validated by the QuaternionicStructure constructor.
inline QuaternionicStructure quaternionic_from_json(const json& j) {
  const std::size_t n = detail::as_size(detail::field(j, "n"), "n");
  if (n == 0) throw FormatError("n must be positive");
  const SymplecticSpace sp(n);
  Matrix c = matrix_from_json(detail::field(j, "c_matrix"), sp.dim(), sp.dim());
  try {
    return QuaternionicStructure(sp, std::move(c));
  } catch (const ContractError& e) {
    throw FormatError(e.what());
  }
}

inline json quartic_to_json(const SymTensor& s) {
  json coeffs = json::array();
  for (const auto& [a, c] : s.terms()) coeffs.push_back({{"monomial", a}, {"value", c.str()}});
  return {{"n", s.n()}, {"degree", s.degree()}, {"coeffs", coeffs}};
}

/// {"n", "degree": 4, "coeffs": [{"monomial": [2n ints], "value": "q"}]}.
/// Repeated monomials are rejected.
inline SymTensor quartic_from_json(const json& j) {
  const std::size_t n = detail::as_size(detail::field(j, "n"), "n");
  if (n == 0) throw FormatError("n must be positive");
  if (detail::as_size(detail::field(j, "degree"), "degree") != 4) throw FormatError("degree must be 4");
  const json& coeffs = detail::field(j, "coeffs");
  if (!coeffs.is_array()) throw FormatError("coeffs must be an array");
  SymTensor s(n, 4);
  std::set<MultiIndex> seen;
  for (const auto& term : coeffs) {
    const json& mon = detail::field(term, "monomial");
    if (!mon.is_array() || mon.size() != 2 * n)
      throw FormatError("monomial must list " + std::to_string(2 * n) + " exponents");
    MultiIndex a;
    for (const auto& e : mon) a.push_back(static_cast<unsigned>(detail::as_size(e, "exponent")));
    if (total_degree(a) != 4) throw FormatError("monomial of degree != 4");
    if (!seen.insert(a).second) throw FormatError("repeated monomial");
    s.add_term(a, scalar_from_json(detail::field(term, "value")));
  }
  return s;
}

inline SymTensor read_quartic(const std::string& path) { return quartic_from_json(parse_json(read_file(path))); }

inline bool is_algebra_json(const json& j) { return j.is_object() && j.contains("structure_constants"); }

/// Sparse encoding: every nonzero bracket [x_a, x_b] is listed as
/// {"a", "b", "value": [[c, scalar], ..]}; omitted entries are zero.
inline json algebra_to_json(const LieAlgebraModel& g) {
  json brackets = json::array();
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      const Vector& v = g.bracket(a, b);
      json entries = json::array();
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) entries.push_back({c, v[c].str()});
      if (!entries.empty()) brackets.push_back({{"a", a}, {"b", b}, {"value", entries}});
    }
  return {{"basis_labels", g.basis_labels}, {"dim_h", g.dim_h},     {"dim_m", g.dim_m},
          {"real", g.real},                 {"structure_constants", brackets},
          {"metric_on_m", matrix_to_json(g.metric_on_m)}};
}

inline LieAlgebraModel algebra_from_json(const json& j) {
  const std::size_t dh = detail::as_size(detail::field(j, "dim_h"), "dim_h");
  const std::size_t dm = detail::as_size(detail::field(j, "dim_m"), "dim_m");
  LieAlgebraModel g = LieAlgebraModel::zero(dh, dm);
  const json& labels = detail::field(j, "basis_labels");
  if (!labels.is_array() || labels.size() != g.dim()) throw FormatError("basis_labels has wrong length");
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (!labels[k].is_string()) throw FormatError("basis label must be a string");
    g.basis_labels[k] = labels[k].get<std::string>();
  }
  if (j.contains("real")) {
    if (!j.at("real").is_boolean()) throw FormatError("real must be a boolean");
    g.real = j.at("real").get<bool>();
  }
  const json& brackets = detail::field(j, "structure_constants");
  if (!brackets.is_array()) throw FormatError("structure_constants must be an array");
  for (const auto& br : brackets) {
    const std::size_t a = detail::as_size(detail::field(br, "a"), "a");
    const std::size_t b = detail::as_size(detail::field(br, "b"), "b");
    if (a >= g.dim() || b >= g.dim()) throw FormatError("bracket index out of range");
    const json& value = detail::field(br, "value");
    if (!value.is_array()) throw FormatError("bracket value must be an array");
    for (const auto& e : value) {
      if (!e.is_array() || e.size() != 2) throw FormatError("bracket entry must be [index, scalar]");
      const std::size_t c = detail::as_size(e[0], "bracket component");
      if (c >= g.dim()) throw FormatError("bracket component out of range");
      g.structure_constants[a][b][c] = scalar_from_json(e[1]);
    }
  }
  g.metric_on_m = matrix_from_json(detail::field(j, "metric_on_m"), dm, dm);
  g.validate_shape();
  return g;
}

inline json inertia_to_json(const Inertia& i) {
  return {{"positive", i.positive}, {"negative", i.negative}, {"null", i.null}};
}

}  // namespace hksym::io
