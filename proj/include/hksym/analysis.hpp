#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hksym/dim8.hpp"
#include "hksym/hk_algebra.hpp"
#include "hksym/io.hpp"
#include "hksym/real_form.hpp"

namespace hksym {

enum class Mode { complex, real };

inline std::string pair_label(const SymplecticSpace& sp, const BasisPair& p) {
  return "(" + sp.label(p.first) + ", " + sp.label(p.second) + ")";
}

struct RealPart {
  RealityReport reality;
  std::optional<Inertia> signature;
};

/// Aggregate verdict of the full pipeline. Fields after invariance are only
/// filled when invariance holds.
struct AnalysisReport {
  std::size_t n{0};
  Mode mode{Mode::complex};
  bool invariance_ok{false};
  std::optional<std::string> invariance_witness;
  std::optional<HolonomyData> holonomy;
  std::size_t support_dim{0};
  bool support_isotropic{false};
  std::optional<Subspace> lagrangian_found;
  std::size_t flat_complex_dim{0};
  std::size_t algebra_dim_h{0}, algebra_dim_m{0};
  bool jacobi_ok{false};
  std::optional<Triple> jacobi_witness;
  bool ricci_zero{false};
  std::optional<RealPart> real;
  std::optional<std::string> classification;
  std::optional<LieAlgebraModel> algebra;

  /// Every applicable check passed.
  bool ok() const {
    if (!invariance_ok || !jacobi_ok || !ricci_zero) return false;
    if (real && (!real->reality.tau_fixed || !real->reality.equivalent || !real->signature)) return false;
    return true;
  }
};

/// n = 1: "flat" or "e4" (the single non-flat space in dim 4);
/// n = 2: the Petrov letter of S on E_+.
inline std::optional<std::string> classification_tag(const SymTensor& s, const Subspace& e_plus) {
  if (s.n() == 1) return s.is_zero() ? "flat" : "e4";
  if (s.n() == 2) return classify_complex8(s, e_plus).type;
  return std::nullopt;
}

/// Runs invariance, holonomy, support, Lagrangian, flat decomposition,
/// algebra, Jacobi, Ricci and (real mode) reality and signature. `j` is
/// only read in real mode.
inline AnalysisReport analyze(const SymTensor& s, Mode mode, const std::optional<QuaternionicStructure>& j = std::nullopt) {
  if (s.degree() != 4) throw ContractError("analyze: degree != 4");
  AnalysisReport r;
  r.n = s.n();
  r.mode = mode;
  const Subspace sigma = support(s);
  r.support_dim = sigma.dim();
  r.support_isotropic = is_isotropic(sigma);
  const auto inv = check_invariance(s);
  r.invariance_ok = inv.ok;
  if (!inv.ok) {
    r.invariance_witness = pair_label(s.space(), *inv.witness);
    return r;
  }
  r.holonomy = holonomy(s);
  const FlatDecomposition flat = flat_decomposition(s);
  r.lagrangian_found = flat.e_plus;
  r.flat_complex_dim = flat.flat_complex_dim;
  LieAlgebraModel g = build_complex_algebra(s, *r.holonomy);
  r.algebra_dim_h = g.dim_h;
  r.algebra_dim_m = g.dim_m;
  const auto jac = verify_jacobi(g);
  r.jacobi_ok = jac.ok;
  r.jacobi_witness = jac.witness;
  r.ricci_zero = curvature_ricci(g).is_zero();
  r.algebra = std::move(g);
  r.classification = classification_tag(s, flat.e_plus);
  if (mode == Mode::real) {
    const QuaternionicStructure je = j ? *j : default_quaternionic_for(s);
    RealPart rp{check_reality(s, je), std::nullopt};
    if (rp.reality.tau_fixed) {
      rp.signature = build_real_algebra(s, je).signature;
      rp.reality.signature_on_m = rp.signature;
    }
    r.real = rp;
  }
  return r;
}

inline io::json report_to_json(const AnalysisReport& r) {
  using io::json;
  json out;
  out["n"] = r.n;
  out["mode"] = r.mode == Mode::real ? "real" : "complex";
  out["invariance_ok"] = r.invariance_ok;
  out["invariance_witness"] = r.invariance_witness ? json(*r.invariance_witness) : json(nullptr);
  out["support_dim"] = r.support_dim;
  out["support_isotropic"] = r.support_isotropic;
  if (r.holonomy) {
    out["holonomy"] = {{"dimension", r.holonomy->dimension},
                       {"is_abelian", r.holonomy->is_abelian},
                       {"is_solvable", r.holonomy->is_solvable},
                       {"derived_series_lengths", r.holonomy->derived_series_lengths}};
  } else {
    out["holonomy"] = nullptr;
  }
  out["lagrangian_found"] = r.lagrangian_found ? io::subspace_to_json(*r.lagrangian_found) : json(nullptr);
  out["flat_complex_dim"] = r.flat_complex_dim;
  out["algebra"] = r.invariance_ok ? json{{"dim_h", r.algebra_dim_h}, {"dim_m", r.algebra_dim_m}} : json(nullptr);
  out["jacobi_ok"] = r.jacobi_ok;
  out["ricci_zero"] = r.ricci_zero;
  if (r.real) {
    const auto& rr = r.real->reality;
    json w = nullptr;
    if (rr.witness) w = {rr.witness->first, rr.witness->second};
    out["reality"] = {{"commutator_condition_ok", rr.commutator_condition_ok},
                      {"tau_fixed", rr.tau_fixed},
                      {"equivalent", rr.equivalent},
                      {"witness", w},
                      {"real_holonomy_dim", rr.real_holonomy_dim}};
    out["signature"] = r.real->signature ? json{r.real->signature->positive, r.real->signature->negative} : json(nullptr);
  } else {
    out["reality"] = nullptr;
    out["signature"] = nullptr;
  }
  out["classification"] = r.classification ? json(*r.classification) : json(nullptr);
  return out;
}

inline std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

inline std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << " (dim E = " << 2 * r.n << "), mode " << (r.mode == Mode::real ? "real" : "complex") << "\n";
  os << "invariance: " << yes_no(r.invariance_ok);
  if (r.invariance_witness) os << " at basis pair " << *r.invariance_witness;
  os << "\n";
  os << "support: dim " << r.support_dim << (r.support_isotropic ? ", isotropic" : ", not isotropic") << "\n";
  if (!r.invariance_ok) return os.str();
  const auto& h = *r.holonomy;
  os << "holonomy: dim " << h.dimension << (h.is_abelian ? ", abelian" : ", non-abelian")
     << (h.is_solvable ? ", solvable" : ", not solvable") << "\n";
  os << "lagrangian E_+: dim " << r.lagrangian_found->dim() << "\n";
  os << "flat factor: complex dim " << r.flat_complex_dim << "\n";
  os << "algebra: dim h = " << r.algebra_dim_h << ", dim m = " << r.algebra_dim_m << "\n";
  os << "jacobi: " << yes_no(r.jacobi_ok) << "\n";
  os << "ricci zero: " << yes_no(r.ricci_zero) << "\n";
  if (r.real) {
    const auto& rr = r.real->reality;
    os << "reality: commutator condition " << yes_no(rr.commutator_condition_ok) << ", tau-fixed "
       << yes_no(rr.tau_fixed) << ", equivalent " << yes_no(rr.equivalent);
    if (rr.witness) os << " (witness " << rr.witness->first << ", " << rr.witness->second << ")";
    os << "\n";
    os << "real holonomy: dim " << rr.real_holonomy_dim << "\n";
    if (r.real->signature) os << "signature on m: (" << r.real->signature->positive << ", " << r.real->signature->negative << ")\n";
  }
  if (r.classification) os << "classification: " << *r.classification << "\n";
  return os.str();
}

/// {"type", "pattern", "invariant": [num, den] | null, "mode": "complex"}.
inline io::json classify8_to_json(const PetrovClass& c) {
  using io::json;
  json inv = nullptr;
  if (c.invariant) inv = {c.invariant->first.str(), c.invariant->second.str()};
  return {{"type", c.type}, {"pattern", c.pattern}, {"invariant", inv}, {"mode", "complex"}};
}

/// Real mode: "invariant" is kappa = q|q| / (-p)^3 as [num, den], null for
/// the zero class; the full real invariant is echoed under "real".
inline io::json classify8_to_json(const RealOrbitInvariant& r) {
  using io::json;
  json out = classify8_to_json(r.petrov);
  out["mode"] = "real";
  out["invariant"] = r.zero ? json(nullptr) : json{r.kappa.get_num().get_str(), r.kappa.get_den().get_str()};
  out["real"] = {{"zero", r.zero},
                 {"sign_p", r.sign_p},
                 {"sign_q", r.sign_q},
                 {"q2_over_p3", r.q2_over_p3 ? json(r.q2_over_p3->get_str()) : json(nullptr)},
                 {"kappa", r.kappa.get_str()},
                 {"matrix", io::matrix_to_json(r.real_matrix)}};
  return out;
}

inline std::string classify8_to_text(const PetrovClass& c) {
  std::ostringstream os;
  os << "type " << c.type << ", pattern {";
  for (std::size_t k = 0; k < c.pattern.size(); ++k) os << (k ? "," : "") << c.pattern[k];
  os << "}";
  if (c.invariant) os << ", (I^3 : J^2) = (" << c.invariant->first << " : " << c.invariant->second << ")";
  return os.str();
}

inline std::string classify8_to_text(const RealOrbitInvariant& r) {
  std::ostringstream os;
  os << classify8_to_text(r.petrov);
  if (r.zero)
    os << ", real class zero";
  else
    os << ", sign p = " << r.sign_p << ", sign q = " << r.sign_q << ", kappa = " << r.kappa.get_str();
  return os.str();
}

}  // namespace hksym
