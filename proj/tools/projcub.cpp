// Command-line front end. Exit codes: 0 ok, 1 usage or argument error,
// 2 node cap exceeded, 3 verification failed, 4 malformed input file,
// 5 table mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "projcub/bounds.hpp"
#include "projcub/cubature.hpp"
#include "projcub/error.hpp"
#include "projcub/io.hpp"
#include "projcub/verification.hpp"

namespace {

using namespace projcub;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapExceeded = 2,
  kVerificationFailed = 3,
  kMalformedInput = 4,
  kTableMismatch = 5,
};

std::size_t default_samples(Field field, std::size_t m, int p) {
  try {
    return static_cast<std::size_t>(std::max<std::int64_t>(512, dim_phi(field, static_cast<int>(m), p)));
  } catch (const OverflowError&) {
    return 512;
  }
}

struct ConstructArgs {
  std::string field;
  std::size_t m = 1;
  int p = 2;
  std::string out;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  bool merge = false;
};

int run_construct(const ConstructArgs& a) {
  const Field field = parse_field(a.field);
  LiftOptions options;
  options.probe_seed = a.seed;
  options.merge_coincident = a.merge;
  CubatureFormula f;
  try {
    f = construct(field, a.m, a.p, a.cap.value_or(default_node_cap()), options);
  } catch (const NodeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kVerificationFailed;
  }
  if (!a.out.empty()) save_formula(a.out, FormulaDocument{f, a.seed});
  const std::size_t samples = a.samples.value_or(default_samples(field, a.m, a.p));
  const VerificationReport r = check(f, samples, a.seed);
  std::printf("%zu nodes, residual <= %.1e\n", f.size(), std::max(r.max_rel_residual, 1e-16));
  std::cout << report_to_text(r);
  return r.pass ? kOk : kVerificationFailed;
}

struct VerifyArgs {
  std::string in;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  FormulaDocument doc;
  try {
    doc = load_formula(a.in);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  const CubatureFormula& f = doc.formula;
  const std::size_t samples =
      a.samples.value_or(default_samples(f.field(), f.dimension(), f.index()));
  const VerificationReport r =
      check(f, samples, a.seed, a.tol.value_or(default_tolerance(f.size())));
  std::cout << (a.json ? report_to_json(r) : report_to_text(r));
  return r.pass ? kOk : kVerificationFailed;
}

struct BoundArgs {
  std::string field;
  int m = 1;
  int p = 2;
  std::string mode = "derive";
};

int run_bound(const BoundArgs& a) {
  const Field field = parse_field(a.field);
  const FactDatabase& db = FactDatabase::embedded();
  if (a.mode == "gub") {
    std::cout << gub(field, a.m, a.p) << "\n";
  } else if (a.mode == "dim") {
    std::cout << dim_phi_exact(field, a.m, a.p) << "\n";
  } else if (a.mode == "nu") {
    const BoundFact f = nu_fact(field, a.p, db);
    std::cout << f.n << " " << f.provenance << "\n";
  } else {
    const BoundFact f = best_bound(field, a.m, a.p, db);
    std::cout << f.n << " " << f.provenance << "\n";
  }
  return kOk;
}

struct TablesArgs {
  int which = 3;
  std::string out;
};

int run_tables(const TablesArgs& a) {
  const TableExport t = export_table(a.which, FactDatabase::embedded(), embedded_rows());
  if (a.out.empty()) {
    std::cout << t.csv;
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw Error("cannot open " + a.out + " for writing");
    out << t.csv;
  }
  for (const auto& m : t.mismatches) std::cerr << "mismatch: " << m << "\n";
  return t.mismatches.empty() ? kOk : kTableMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective cubature formulas: construction, verification and bounds"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build a formula by iterated lifts");
  construct_cmd->add_option("--field", ca.field, "R, C or H")->required();
  construct_cmd->add_option("--m", ca.m, "Dimension over the field")->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--p", ca.p, "Even index")->required();
  construct_cmd->add_option("--out", ca.out, "Write the formula as JSON");
  construct_cmd->add_option("--cap", ca.cap, "Node cap (default PROJCUB_NODE_CAP or 1e7)");
  construct_cmd->add_option("--samples", ca.samples, "Verification directions (default max(512, dim))");
  construct_cmd->add_option("--seed", ca.seed, "Seed for probes and verification");
  construct_cmd->add_flag("--merge", ca.merge, "Merge projectively coincident nodes");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a formula file");
  verify_cmd->add_option("--in", va.in, "Formula JSON")->required();
  verify_cmd->add_option("--samples", va.samples, "Random directions (default max(512, dim))");
  verify_cmd->add_option("--seed", va.seed, "Direction seed");
  verify_cmd->add_option("--tol", va.tol, "Residual tolerance (default by node count)");
  verify_cmd->add_flag("--json", va.json, "Print the report as JSON");

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Print bounds and dimensions");
  bound_cmd->add_option("--field", ba.field, "R, C or H")->required();
  bound_cmd->add_option("--m", ba.m, "Dimension")->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("--p", ba.p, "Even index")->required();
  bound_cmd->add_option("--mode", ba.mode, "gub, derive, nu or dim")
      ->check(CLI::IsMember({"gub", "derive", "nu", "dim"}));

  TablesArgs ta;
  auto* tables_cmd = app.add_subcommand("tables", "Emit a reproduced table as CSV");
  tables_cmd->add_option("which", ta.which, "Table number 1..5")->required()->check(CLI::Range(1, 5));
  tables_cmd->add_option("--out", ta.out, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) return run_construct(ca);
    if (*verify_cmd) return run_verify(va);
    if (*bound_cmd) return run_bound(ba);
    if (*tables_cmd) return run_tables(ta);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
