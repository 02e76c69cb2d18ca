#include "wgs/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wgs/adjoint.hpp"
#include "wgs/analysis.hpp"
#include "wgs/dense.hpp"
#include "wgs/generate.hpp"
#include "wgs/semigroup.hpp"
#include "wgs/serialize.hpp"

namespace wgs {

namespace {

using ojson = nlohmann::ordered_json;

struct EffectiveTolerance {
  Tolerance tol;
  bool from_env = false;
};

// WGS_TOLERANCE overrides the comparison tolerance: either a single number
// (the relative part) or "atol,rtol".
EffectiveTolerance effective_tolerance() {
  EffectiveTolerance result;
  const char* raw = std::getenv("WGS_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return result;

  const std::string text(raw);
  const auto parse_positive = [&](const std::string& piece) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size() || !(value > 0.0) || !std::isfinite(value)) {
      throw DomainError("WGS_TOLERANCE: expected a positive number, got \"" +
                        piece + "\"");
    }
    return value;
  };

  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    result.tol.rtol = parse_positive(text);
  } else {
    result.tol.atol = parse_positive(text.substr(0, comma));
    result.tol.rtol = parse_positive(text.substr(comma + 1));
  }
  result.from_env = true;
  return result;
}

ojson tolerance_json(const EffectiveTolerance& et) {
  ojson j;
  j["atol"] = et.tol.atol;
  j["rtol"] = et.tol.rtol;
  j["source"] = et.from_env ? "env:WGS_TOLERANCE" : "default";
  return j;
}

std::string tolerance_line(const EffectiveTolerance& et) {
  std::ostringstream out;
  out << "tolerance: atol=" << et.tol.atol << " rtol=" << et.tol.rtol
      << (et.from_env ? " (from WGS_TOLERANCE)" : " (default)");
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

WeightedShift load_operator_file(const std::string& path) {
  return load_operator(read_file(path));
}

int cmd_info(const std::string& op_path, bool as_json, std::ostream& out) {
  const WeightedShift op = load_operator_file(op_path);
  const double norm = fiber_norm(op);
  const std::size_t image_size = op.map().image_size();
  const std::size_t max_fiber = max_fiber_cardinality(op.map());
  if (as_json) {
    ojson j;
    j["n"] = op.dim();
    j["image_size"] = image_size;
    j["max_fiber_cardinality"] = max_fiber;
    j["fiber_norm"] = norm;
    out << j.dump() << "\n";
  } else {
    out << "n: " << op.dim() << "\n"
        << "image size: " << image_size << "\n"
        << "max fiber cardinality: " << max_fiber << "\n"
        << "fiber norm: " << std::setprecision(17) << norm << "\n";
  }
  return 0;
}

int cmd_apply(const std::string& op_path, const std::string& vector_path,
              std::ostream& out) {
  const WeightedShift op = load_operator_file(op_path);
  const Vector x = load_vector(read_file(vector_path));
  out << save_vector(apply(op, x)) << "\n";
  return 0;
}

int cmd_adjoint(const std::string& op_path, const std::string& out_dir,
                std::ostream& out) {
  const WeightedShift op = load_operator_file(op_path);
  const AdjointDecomposition d = adjoint_decompose(op);
  write_decomposition(out_dir, d);
  out << "terms: " << d.terms.size() << "\n";
  return 0;
}

int cmd_classify(const std::string& op_path, const EffectiveTolerance& et,
                 std::ostream& out) {
  const WeightedShift op = load_operator_file(op_path);
  const ClassificationReport report = classify(op, et.tol);
  ojson j;
  j["n"] = report.n;
  j["norm"] = report.norm;
  j["max_fiber_cardinality"] = report.max_fiber_cardinality;
  j["is_self_adjoint"] = report.self_adjoint;
  j["is_invertible"] = report.invertible;
  j["is_isometry"] = report.isometry;
  j["is_unitary"] = report.unitary;
  if (report.invertibility_bound) {
    j["invertibility_bound"] = *report.invertibility_bound;
  } else {
    j["invertibility_bound"] = nullptr;
  }
  j["tolerance"] = tolerance_json(et);
  out << j.dump() << "\n";
  return 0;
}

struct VerifyCheck {
  std::string name;
  double residual = 0.0;
  double limit = 0.0;
  bool passed = false;
};

int cmd_verify(const std::string& op_path, std::size_t trials,
               std::uint64_t seed, const std::string& decomposition_path,
               const EffectiveTolerance& et, bool as_json, std::ostream& out) {
  const WeightedShift op = load_operator_file(op_path);
  const std::size_t n = op.dim();
  const AdjointDecomposition d = adjoint_decompose(op);
  const ShiftSum adjoint = d.as_sum();
  std::vector<VerifyCheck> checks;

  // Pairing identity <Tx, y> = <x, T*y> on random vector pairs, with the
  // adjoint applied through the decomposition.
  {
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Vector x = random_vector(n, seed + 2 * t);
      const Vector y = random_vector(n, seed + 2 * t + 1);
      const Complex lhs = inner_product(apply(op, x), y);
      const Complex rhs = inner_product(x, apply(adjoint, y));
      const double scale = 1.0 + x.norm() * y.norm();
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    checks.push_back({"adjoint identity", worst, 1e-9, worst <= 1e-9});
  }

  // The decomposition summed densely must equal the conjugate transpose
  // entry for entry; the construction only conjugates, so exactly.
  {
    const DenseMatrix direct = conjugate_transpose(to_dense(op));
    const DenseMatrix summed = to_dense(adjoint);
    double worst = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) {
      worst = std::max(worst,
                       std::abs(summed.entries()[i] - direct.entries()[i]));
    }
    checks.push_back({"oracle equality", worst, 0.0, worst == 0.0});
  }

  {
    const double structural = fiber_norm(op);
    const SpectralNormResult power = spectral_norm(to_dense(op));
    const double denom = std::max({structural, power.value, 1e-300});
    const double rel = std::abs(structural - power.value) / denom;
    checks.push_back({"norm agreement", rel, 1e-6, rel <= 1e-6});
  }

  {
    const bool structural = is_self_adjoint(op, et.tol);
    const bool dense = hermitian_test(to_dense(op), 1e-9);
    const double residual = structural == dense ? 0.0 : 1.0;
    checks.push_back(
        {"self-adjoint predicate", residual, 0.0, structural == dense});
  }

  {
    const bool structural = is_unitary(op, et.tol);
    const bool dense = unitary_test(to_dense(op), 1e-9);
    const double residual = structural == dense ? 0.0 : 1.0;
    checks.push_back(
        {"unitary predicate", residual, 0.0, structural == dense});
  }

  if (!decomposition_path.empty()) {
    const ShiftSum stored = load_sum_manifest(decomposition_path);
    const DenseMatrix direct = conjugate_transpose(to_dense(op));
    const DenseMatrix summed = to_dense(stored);
    if (summed.dim() != n) {
      throw ShapeError("decomposition dimension " +
                       std::to_string(summed.dim()) +
                       " does not match operator dimension " +
                       std::to_string(n));
    }
    double worst = 0.0;
    bool all_close = true;
    for (std::size_t i = 0; i < n * n; ++i) {
      const Complex a = summed.entries()[i];
      const Complex b = direct.entries()[i];
      worst = std::max(worst, std::abs(a - b));
      if (!et.tol.close(a, b)) all_close = false;
    }
    checks.push_back({"stored decomposition", worst,
                      et.tol.atol + et.tol.rtol, all_close});
  }

  const bool all_passed =
      std::all_of(checks.begin(), checks.end(),
                  [](const VerifyCheck& c) { return c.passed; });

  if (as_json) {
    ojson j;
    j["operator"] = op_path;
    j["trials"] = trials;
    j["seed"] = seed;
    ojson list = ojson::array();
    for (const VerifyCheck& c : checks) {
      ojson e;
      e["name"] = c.name;
      e["max_residual"] = c.residual;
      e["limit"] = c.limit;
      e["passed"] = c.passed;
      list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    j["tolerance"] = tolerance_json(et);
    j["passed"] = all_passed;
    out << j.dump() << "\n";
  } else {
    for (const VerifyCheck& c : checks) {
      out << std::left << std::setw(24) << c.name << " max residual "
          << std::scientific << std::setprecision(3) << c.residual
          << "  limit " << c.limit << (c.passed ? "  PASS" : "  FAIL")
          << "\n";
      out.unsetf(std::ios::floatfield);
    }
    out << tolerance_line(et) << "\n";
    out << (all_passed ? "verify: PASS" : "verify: FAIL") << "\n";
  }
  return all_passed ? 0 : 1;
}

int cmd_closure(const std::string& manifest_path,
                const std::string& alphabet_path,
                const EffectiveTolerance& et, bool as_json,
                std::ostream& out) {
  const ShiftSum sum = load_sum_manifest(manifest_path);
  const WeightAlphabet alphabet = load_alphabet(read_file(alphabet_path));
  const ClosureReport report = check_closure(sum, alphabet, et.tol);

  if (as_json) {
    ojson j;
    j["alphabet"] = alphabet.describe();
    j["closed"] = report.closed;
    ojson witnesses = ojson::array();
    for (const ClosureWitness& w : report.witnesses) {
      ojson e;
      e["term"] = w.term_index;
      e["coordinate"] = w.coordinate;
      e["weight"] = ojson::array({w.weight.real(), w.weight.imag()});
      witnesses.push_back(std::move(e));
    }
    j["witnesses"] = std::move(witnesses);
    j["tolerance"] = tolerance_json(et);
    out << j.dump() << "\n";
  } else {
    out << "alphabet: " << alphabet.describe() << "\n";
    out << "closed: " << (report.closed ? "yes" : "no") << "\n";
    for (const ClosureWitness& w : report.witnesses) {
      out << "  witness: term " << w.term_index << ", coordinate "
          << w.coordinate << ", weight " << w.weight.real() << "+"
          << w.weight.imag() << "i\n";
    }
    out << tolerance_line(et) << "\n";
  }
  return report.closed ? 0 : 1;
}

int cmd_study(const std::string& rule_name, double scale, double ratio,
              const std::vector<std::size_t>& dims, bool as_json,
              std::ostream& out) {
  const NullSequenceRule rule = rule_name == "reciprocal"
                                    ? NullSequenceRule::reciprocal()
                                    : NullSequenceRule::geometric(scale, ratio);
  const TruncationStudy study = run_truncation_study(rule, dims);

  if (as_json) {
    ojson j;
    j["rule"] = rule_name;
    j["dimensions"] = study.dimensions;
    j["term_counts"] = study.term_counts;
    j["norm_bounds"] = study.norm_bounds;
    j["invertibility_bounds"] = study.invertibility_bounds;
    out << j.dump() << "\n";
  } else {
    out << std::setw(10) << "dimension" << std::setw(12) << "term_count"
        << std::setw(16) << "fiber_norm" << std::setw(22)
        << "invertibility_bound" << "\n";
    for (std::size_t i = 0; i < study.dimensions.size(); ++i) {
      out << std::setw(10) << study.dimensions[i] << std::setw(12)
          << study.term_counts[i] << std::setw(16) << std::fixed
          << std::setprecision(8) << study.norm_bounds[i] << std::setw(22)
          << std::setprecision(6) << study.invertibility_bounds[i] << "\n";
      out.unsetf(std::ios::floatfield);
    }
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"weighted generalized shift toolkit"};
  app.require_subcommand(1);

  std::string op_path;
  std::string vector_path;
  std::string out_dir = ".";
  std::string manifest_path;
  std::string alphabet_path;
  std::string decomposition_path;
  std::string rule_name = "reciprocal";
  double rule_scale = 0.5;
  double rule_ratio = 0.5;
  std::vector<std::size_t> dims;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  bool as_json = false;

  CLI::App* info = app.add_subcommand("info", "Print operator summary");
  info->add_option("operator", op_path, "operator document")->required();
  info->add_flag("--json", as_json, "emit JSON");

  CLI::App* apply_cmd = app.add_subcommand("apply", "Apply operator to a vector");
  apply_cmd->add_option("operator", op_path, "operator document")->required();
  apply_cmd->add_option("--vector", vector_path, "vector document")->required();

  CLI::App* adjoint_cmd =
      app.add_subcommand("adjoint", "Decompose the adjoint into shift terms");
  adjoint_cmd->add_option("operator", op_path, "operator document")->required();
  adjoint_cmd->add_option("--out", out_dir, "output directory");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Report structural properties as JSON");
  classify_cmd->add_option("operator", op_path, "operator document")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check sparse results against the dense oracle");
  verify_cmd->add_option("operator", op_path, "operator document")->required();
  verify_cmd->add_option("--trials", trials, "random vector pairs");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--decomposition", decomposition_path,
                         "stored decomposition manifest to check");
  verify_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* closure_cmd = app.add_subcommand(
      "closure", "Check that adjoint weights stay inside an alphabet");
  closure_cmd->add_option("manifest", manifest_path, "sum manifest")
      ->required();
  closure_cmd->add_option("--alphabet", alphabet_path, "alphabet document")
      ->required();
  closure_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* study_cmd = app.add_subcommand(
      "study", "Track adjoint term growth across truncation dimensions");
  study_cmd->add_option("--rule", rule_name, "null sequence rule")
      ->check(CLI::IsMember({"reciprocal", "geometric"}));
  study_cmd->add_option("--scale", rule_scale, "geometric rule scale");
  study_cmd->add_option("--ratio", rule_ratio, "geometric rule ratio");
  study_cmd->add_option("--dims", dims, "comma separated dimensions")
      ->required()
      ->delimiter(',');
  study_cmd->add_flag("--json", as_json, "emit JSON");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    const EffectiveTolerance et = effective_tolerance();
    if (info->parsed()) return cmd_info(op_path, as_json, out);
    if (apply_cmd->parsed()) return cmd_apply(op_path, vector_path, out);
    if (adjoint_cmd->parsed()) return cmd_adjoint(op_path, out_dir, out);
    if (classify_cmd->parsed()) return cmd_classify(op_path, et, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(op_path, trials, seed, decomposition_path, et, as_json,
                        out);
    }
    if (closure_cmd->parsed()) {
      return cmd_closure(manifest_path, alphabet_path, et, as_json, out);
    }
    if (study_cmd->parsed()) {
      return cmd_study(rule_name, rule_scale, rule_ratio, dims, as_json, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace wgs
