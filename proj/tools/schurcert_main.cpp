#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurcert/block_io.hpp"
#include "schurcert/explicit_small.hpp"
#include "schurcert/extremum.hpp"
#include "schurcert/oracle.hpp"
#include "schurcert/schur_first.hpp"
#include "schurcert/schur_second.hpp"

namespace {

using namespace schurcert;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInputError = 3;

Tolerances parse_tolerances(const std::vector<std::string>& overrides) {
  Tolerances tol;
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error("--tol expects KEY=VAL, got '" + kv + "'");
    }
    const std::string key = kv.substr(0, eq);
    const double val = std::stod(kv.substr(eq + 1));
    if (key == "sym_tol") {
      tol.sym_tol = val;
    } else if (key == "pd_eps") {
      tol.pd_eps = val;
    } else if (key == "inv_tol") {
      tol.inv_tol = val;
    } else if (key == "nn_tol") {
      tol.nn_tol = val;
    } else {
      throw Error("unknown tolerance key '" + key + "'");
    }
  }
  tol.validate();
  return tol;
}

int run_check(const std::string& kind, const std::string& file, bool json_out,
              bool full_tree, const std::vector<std::string>& tol_kv) {
  const Tolerances tol = parse_tolerances(tol_kv);
  const BlockMatrix b = load_block_matrix(file, tol);

  if (kind == "pd") {
    SignCertificate cert;
    bool bidiagonal_path = false;
    if (!full_tree && b.order() >= 2 && is_bidiagonal(b, tol)) {
      cert = check_pd_bidiagonal(b, tol);
      bidiagonal_path = true;
    } else {
      cert = check_pd(b, tol, full_tree ? PdMode::FullTree : PdMode::EarlyExit);
    }
    if (json_out) {
      std::cout << cert.to_json().dump(2) << '\n';
    } else {
      if (bidiagonal_path) {
        std::cout << "bidiagonal fast path: " << cert.leaf_count << " checks\n";
      }
      std::cout << cert.pretty();
    }
    switch (cert.verdict) {
      case PdVerdict::PositiveDefinite: return kExitPositive;
      case PdVerdict::NotPositiveDefinite: return kExitNegative;
      default: return kExitPrecondition;
    }
  }

  const NNCertificate cert = check_nn(b, tol);
  if (json_out) {
    std::cout << cert.to_json().dump(2) << '\n';
  } else {
    std::cout << cert.pretty();
  }
  switch (cert.verdict) {
    case NNVerdict::Nonnegative: return kExitPositive;
    case NNVerdict::NotNonnegative: return kExitNegative;
    default: return kExitPrecondition;
  }
}

int run_schur(const std::string& file, const std::string& kind, int i, int j) {
  const Tolerances tol;
  const BlockMatrix b = load_block_matrix(file, tol);
  try {
    const BlockMatrix result =
        (kind == "first") ? schur_first(b, i, j, tol) : schur_second(b, tol);
    std::cout << block_matrix_to_json(result).dump(2) << '\n';
    return kExitPositive;
  } catch (const NumericallySingular& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

int run_classify(const std::string& example, int trunc, const std::string& hessian_file,
                 double step, bool json_out, const std::vector<std::string>& tol_kv) {
  const Tolerances tol = parse_tolerances(tol_kv);
  ExtremumReport report;
  if (!hessian_file.empty()) {
    report = classify_hessian(load_block_matrix(hessian_file, tol), tol);
  } else {
    if (example != "l2") {
      throw Error("unknown example '" + example + "' (available: l2)");
    }
    const ProductFunctional f = example_l2_functional(trunc);
    ExtremumOptions opt;
    opt.step = step;
    report = classify_critical_point(f, zero_point(f.dims), tol, opt);
  }
  if (json_out) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.pretty();
  }
  if (report.is(ExtremumClass::StrongLocalMin) || report.is(ExtremumClass::StrongLocalMax)) {
    return kExitPositive;
  }
  if (report.is(ExtremumClass::NotAMin) || report.is(ExtremumClass::NotAMax)) {
    return kExitNegative;
  }
  return kExitPrecondition;
}

int run_sweep_cmd(const std::string& seeds, int n_max, const std::string& out_path) {
  const auto dots = seeds.find("..");
  if (dots == std::string::npos) {
    throw Error("--seeds expects A..B, got '" + seeds + "'");
  }
  const std::uint64_t first = std::stoull(seeds.substr(0, dots));
  const std::uint64_t last = std::stoull(seeds.substr(dots + 2));

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output path " << out_path << '\n';
    return kExitInputError;
  }
  const SweepResult res = run_sweep(first, last, n_max, out, Tolerances{});
  out.flush();
  if (!out) {
    std::cerr << "error: write failed on " << out_path << '\n';
    return kExitInputError;
  }
  std::cout << "instances=" << res.instances << " disagreements=" << res.disagreements
            << " skipped=" << res.skipped << " gates_failed=" << res.gates_failed << '\n';
  return res.disagreements > 0 ? kExitNegative : kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign certificates for block operator matrices via Schur complements"};
  app.require_subcommand(1);

  // check
  std::string check_kind, check_file;
  bool json_out = false, full_tree = false;
  std::vector<std::string> tol_kv;
  CLI::App* check = app.add_subcommand("check", "decide positive definiteness or nonnegativity");
  check->add_option("kind", check_kind, "pd or nn")->required()->check(CLI::IsMember({"pd", "nn"}));
  check->add_option("file", check_file, "block-matrix JSON file")->required();
  check->add_flag("--json", json_out, "emit the certificate as JSON");
  check->add_flag("--full-tree", full_tree, "evaluate every inequality, no early exit");
  check->add_option("--tol", tol_kv, "tolerance override KEY=VAL");

  // count / depth
  std::int64_t count_n = 0, depth_n = 0;
  CLI::App* count = app.add_subcommand("count", "number of first-kind inequalities V_n");
  count->add_option("n", count_n, "block order")->required()->check(CLI::PositiveNumber);
  CLI::App* depth = app.add_subcommand("depth", "bisection recursion depth m");
  depth->add_option("n", depth_n, "block order")->required()->check(CLI::PositiveNumber);

  // schur
  std::string schur_file, schur_kind;
  int schur_i = 1, schur_j = 2;
  CLI::App* schur = app.add_subcommand("schur", "apply one Schur operator");
  schur->add_option("file", schur_file, "block-matrix JSON file")->required();
  schur->add_option("--kind", schur_kind, "first or second")
      ->required()
      ->check(CLI::IsMember({"first", "second"}));
  schur->add_option("--i", schur_i, "superscript index (first kind)")->check(CLI::Range(1, 2));
  schur->add_option("--j", schur_j, "subscript index (first kind)")->check(CLI::Range(1, 2));

  // classify
  std::string example, hessian_file;
  int trunc = 4;
  double step = 0.0;
  bool classify_json = false;
  std::vector<std::string> classify_tol;
  CLI::App* classify = app.add_subcommand("classify", "second-order extremum classification");
  auto* ex_opt = classify->add_option("--example", example, "built-in functional (l2)");
  classify->add_option("--trunc", trunc, "truncation dimension per factor");
  auto* hess_opt = classify->add_option("--hessian", hessian_file, "explicit Hessian file");
  classify->add_option("--step", step, "finite-difference step (0 = automatic)");
  classify->add_flag("--json", classify_json, "emit the report as JSON");
  classify->add_option("--tol", classify_tol, "tolerance override KEY=VAL");
  ex_opt->excludes(hess_opt);

  // sweep
  std::string seeds, sweep_out;
  int n_max = 6;
  CLI::App* sweep = app.add_subcommand("sweep", "seeded oracle-agreement sweep, CSV output");
  sweep->add_option("--seeds", seeds, "seed range A..B")->required();
  sweep->add_option("--n-max", n_max, "maximum block order")->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_kind, check_file, json_out, full_tree, tol_kv);
    if (count->parsed()) {
      std::cout << count_inequalities(count_n) << '\n';
      return kExitPositive;
    }
    if (depth->parsed()) {
      std::cout << recursion_depth(depth_n) << '\n';
      return kExitPositive;
    }
    if (schur->parsed()) return run_schur(schur_file, schur_kind, schur_i, schur_j);
    if (classify->parsed()) {
      if (example.empty() && hessian_file.empty()) {
        throw schurcert::Error("classify needs --example or --hessian");
      }
      return run_classify(example, trunc, hessian_file, step, classify_json, classify_tol);
    }
    if (sweep->parsed()) return run_sweep_cmd(seeds, n_max, sweep_out);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const schurcert::NotSelfAdjoint& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const schurcert::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
