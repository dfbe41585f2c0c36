// hksym: analyze, verify, classify and generate quartics S in S^4 E.
//
// Exit codes: 0 all checks pass, 1 I/O or format error, 2 the quartic is
// mathematically rejected (invariance or reality fails, or no real form is
// possible for this dim E), 3 internal consistency failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <hksym/hksym.hpp>

using namespace hksym;
using io::json;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kFormat = 1, kRejected = 2, kInternal = 3 };

/// Carries an exit code and message up to main.
struct Reject {
  int code;
  std::string message;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

struct Input {
  std::string text;
  json doc;
};

Input load(const std::string& path) {
  Input in;
  in.text = io::read_file(path);
  in.doc = io::parse_json(in.text);
  return in;
}

std::optional<QuaternionicStructure> load_j(const std::string& path, std::size_t n) {
  if (path.empty()) return std::nullopt;
  QuaternionicStructure j = io::quaternionic_from_json(load(path).doc);
  if (j.space().n() != n) throw FormatError("quaternionic structure has n = " + std::to_string(j.space().n()) +
                                            ", quartic has n = " + std::to_string(n));
  return j;
}

/// The structure for real mode: the supplied one, else the standard j of
/// the split (E_+, greedy complement).
QuaternionicStructure real_structure(const SymTensor& s, const std::optional<QuaternionicStructure>& custom) {
  if (custom) return *custom;
  if (s.n() % 2 != 0)
    throw Reject{kRejected, "real mode needs dim E divisible by 4 for a j-invariant Lagrangian split (n = " +
                                std::to_string(s.n()) + ")"};
  const auto inv = check_invariance(s);
  if (!inv.ok) {
    // No Lagrangian carries S; fall back to the coordinate split p | q.
    return standard_quaternionic(s.space(), std::make_pair(p_span(s.space()), q_span(s.space())));
  }
  return default_quaternionic_for(s);
}

json provenance(const Input& in) { return {{"input_sha256", sha256_hex(in.text)}, {"tool_version", kVersion}}; }

void emit(const std::string& text) { std::cout << text << std::flush; }

int cmd_analyze(const std::string& path, bool real, bool as_json, const std::string& j_path,
                const std::string& algebra_out) {
  const Input in = load(path);
  const SymTensor s = io::quartic_from_json(in.doc);
  std::optional<QuaternionicStructure> j = load_j(j_path, s.n());
  if (real && !j) j = real_structure(s, j);
  const AnalysisReport r = analyze(s, real ? Mode::real : Mode::complex, j);
  if (!algebra_out.empty() && r.algebra) {
    std::ofstream out(algebra_out);
    if (!out) throw FormatError("cannot write " + algebra_out);
    out << io::algebra_to_json(*r.algebra).dump(1) << "\n";
  }
  if (as_json) {
    json doc = report_to_json(r);
    doc["provenance"] = provenance(in);
    emit(doc.dump(2) + "\n");
  } else {
    emit(report_to_text(r));
  }
  if (!r.invariance_ok) return kRejected;
  if (r.real && !r.real->reality.tau_fixed) return kRejected;
  if (!r.ok()) return kInternal;
  return kOk;
}

int verify_algebra(const LieAlgebraModel& g) {
  const auto jac = verify_jacobi(g);
  std::string line = "jacobi: " + yes_no(jac.ok);
  if (jac.witness) {
    const auto& t = *jac.witness;
    line += " at triple (" + g.basis_labels[t[0]] + ", " + g.basis_labels[t[1]] + ", " + g.basis_labels[t[2]] + ")";
  }
  emit(line + "\n");
  return jac.ok ? kOk : kRejected;
}

int cmd_verify(const std::string& path, bool invariance, bool jacobi, bool reality, const std::string& j_path) {
  const Input in = load(path);
  if (io::is_algebra_json(in.doc)) {
    if (invariance || reality) throw FormatError("an algebra file only supports --jacobi");
    return verify_algebra(io::algebra_from_json(in.doc));
  }
  const SymTensor s = io::quartic_from_json(in.doc);
  bool all = true;
  if (invariance) {
    const auto inv = check_invariance(s);
    std::string line = "invariance: " + yes_no(inv.ok);
    if (inv.witness) line += " at basis pair " + pair_label(s.space(), *inv.witness);
    emit(line + "\n");
    all = all && inv.ok;
  }
  if (jacobi) {
    if (!check_invariance(s).ok) {
      emit("jacobi: FAIL (S violates invariance, no algebra)\n");
      all = false;
    } else {
      all = verify_algebra(build_complex_algebra(s, holonomy(s))) == kOk && all;
    }
  }
  if (reality) {
    const QuaternionicStructure j = real_structure(s, load_j(j_path, s.n()));
    const auto r = check_reality(s, j);
    std::string line = "reality: commutator condition " + yes_no(r.commutator_condition_ok) + ", tau-fixed " +
                       yes_no(r.tau_fixed) + ", equivalent " + yes_no(r.equivalent);
    if (r.witness) line += " (witness " + r.witness->first + ", " + r.witness->second + ")";
    emit(line + "\n");
    if (!r.equivalent) throw TheoremViolation("commutator condition and tau-fixedness disagree");
    all = all && r.tau_fixed;
  }
  return all ? kOk : kRejected;
}

int cmd_classify8(const std::string& path, bool real, bool as_json, const std::string& j_path) {
  const Input in = load(path);
  const SymTensor s = io::quartic_from_json(in.doc);
  if (s.n() != 2) throw FormatError("classify8 needs dim E = 4 (n = 2), got n = " + std::to_string(s.n()));
  const auto inv = check_invariance(s);
  if (!inv.ok) throw Reject{kRejected, "invariance fails at basis pair " + pair_label(s.space(), *inv.witness)};
  json doc;
  std::string text;
  if (!real) {
    const PetrovClass c = classify_complex8(s, find_lagrangian(s));
    doc = classify8_to_json(c);
    text = classify8_to_text(c);
  } else {
    const QuaternionicStructure j = real_structure(s, load_j(j_path, s.n()));
    if (tau(s, j) != s) throw Reject{kRejected, "S is not tau-fixed for this quaternionic structure"};
    Subspace e_plus = find_lagrangian(s);
    if (!j.preserves(e_plus)) {
      // Try E_+ = support + j(support).
      std::vector<Vector> gens = support(s).basis();
      for (const auto& v : support(s).basis()) gens.push_back(j.apply(v));
      e_plus = Subspace::span(s.space(), gens);
      if (!is_lagrangian(e_plus) || !j.preserves(e_plus))
        throw Reject{kRejected, "no j-invariant Lagrangian E_+ carrying S was found"};
    }
    const RealOrbitInvariant r = classify_real8(s, j, e_plus);
    doc = classify8_to_json(r);
    text = classify8_to_text(r);
  }
  if (as_json) {
    doc["provenance"] = provenance(in);
    emit(doc.dump(2) + "\n");
  } else {
    emit(text + "\n");
  }
  return kOk;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, const std::string& out_path) {
  const std::string text = io::quartic_to_json(generate_quartic(kind, seed)).dump(1) + "\n";
  if (out_path.empty()) {
    emit(text);
  } else {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot write " + out_path);
    out << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyper-Kähler symmetric spaces from quartics S in S^4 E"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string path, j_path, algebra_out, kind, out_path;
  bool real = false, as_json = false, invariance = false, jacobi = false, reality = false;
  std::uint64_t seed = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis pipeline on a quartic file");
  analyze_cmd->add_option("file", path, "Quartic JSON file")->required();
  analyze_cmd->add_flag("--real", real, "Also check reality and the real form");
  analyze_cmd->add_flag("--json", as_json, "JSON report");
  analyze_cmd->add_option("--j", j_path, "Quaternionic structure JSON {\"n\", \"c_matrix\"}");
  analyze_cmd->add_option("--algebra-out", algebra_out, "Write the complex Lie algebra as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run selected checks on a quartic or algebra file");
  verify_cmd->add_option("file", path, "Quartic or algebra JSON file")->required();
  verify_cmd->add_flag("--invariance", invariance, "S_{e,f} . S = 0 on basis pairs");
  verify_cmd->add_flag("--jacobi", jacobi, "Jacobi identity on all basis triples");
  verify_cmd->add_flag("--reality", reality, "Commutator condition and tau-fixedness");
  verify_cmd->add_option("--j", j_path, "Quaternionic structure JSON {\"n\", \"c_matrix\"}");

  auto* classify_cmd = app.add_subcommand("classify8", "Classify a quartic on dim E = 4");
  classify_cmd->add_option("file", path, "Quartic JSON file")->required();
  classify_cmd->add_flag("--real", real, "Real orbit invariant instead of the complex class");
  classify_cmd->add_flag("--json", as_json, "JSON output");
  classify_cmd->add_option("--j", j_path, "Quaternionic structure JSON {\"n\", \"c_matrix\"}");

  auto* generate_cmd = app.add_subcommand("generate", "Write an example quartic");
  generate_cmd->add_option("kind", kind, "dim4 | petrov:I|II|D|III|N|O | random-lagrangian:n | real-random:m")
      ->required();
  generate_cmd->add_option("--seed", seed, "Random seed");
  generate_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFormat;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path, real, as_json, j_path, algebra_out);
    if (*verify_cmd) {
      if (!invariance && !jacobi && !reality) {
        std::cerr << "verify: give at least one of --invariance, --jacobi, --reality\n";
        return kFormat;
      }
      return cmd_verify(path, invariance, jacobi, reality, j_path);
    }
    if (*classify_cmd) return cmd_classify8(path, real, as_json, j_path);
    if (*generate_cmd) return cmd_generate(kind, seed, out_path);
  } catch (const Reject& r) {
    std::cerr << "rejected: " << r.message << "\n";
    return r.code;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const NotHyperKahler& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const NotReal& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kFormat;
}
