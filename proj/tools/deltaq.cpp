// deltaq: expansions of Delta_{e_k} e_n at q = 1 and identity checks.
//
// Exit codes: 0 success, 1 counterexample or oracle mismatch, 2 usage or
// malformed input.

#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "deltaq/bijection.hpp"
#include "deltaq/json_io.hpp"
#include "deltaq/sequences.hpp"
#include "deltaq/verify.hpp"

using namespace deltaq;

namespace {

constexpr int kExpandMaxN = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg != "-") return parse_json_text(arg);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

void check_nk(int n, int k) {
  if (n < 1 || n > kExpandMaxN) throw UsageError("n must lie in 1.." + std::to_string(kExpandMaxN));
  if (k < 1 || k > n) throw UsageError("k must lie in 1..n");
}

std::string csv_table(const SymFuncExpr& e) {
  int top = 0;
  for (const auto& [lambda, c] : e.terms) top = std::max(top, c.to_poly().degree());
  std::ostringstream out;
  out << "partition";
  for (int d = 0; d <= top; ++d) out << ",t^" << d;
  out << '\n';
  for (const auto& [lambda, c] : e.terms) {
    const TPoly p = c.to_poly();
    out << '"' << to_string(lambda) << '"';
    for (int d = 0; d <= top; ++d) out << ',' << p.coeff(d);
    out << '\n';
  }
  return out.str();
}

int cmd_expand(int n, int k, const std::string& basis_tag, const std::string& format, bool oracle) {
  check_nk(n, k);
  Basis basis;
  try {
    basis = parse_basis(basis_tag);
  } catch (const std::invalid_argument&) {
    throw UsageError("basis must be one of e, f, m, s");
  }
  if (basis != Basis::e && basis != Basis::f && basis != Basis::m && basis != Basis::s) {
    throw UsageError("basis must be one of e, f, m, s");
  }
  const SymFuncExpr model = combinatorial_expansion(n, k, basis);
  bool match = true;
  if (oracle) match = model == oracle_expansion(n, k, basis);
  if (format == "csv") {
    std::cout << csv_table(model);
    if (oracle) std::cerr << (match ? "oracle: match" : "oracle: MISMATCH") << '\n';
  } else {
    json out = {{"n", n}, {"k", k}, {"basis", basis_tag}, {"expansion", to_json(model)}};
    if (oracle) out["oracle_match"] = match;
    std::cout << out.dump(2) << '\n';
  }
  return match ? 0 : 1;
}

int cmd_verify(const std::string& suite, VerifyOptions opt, const std::string& audit, bool timing) {
  if (!audit.empty()) {
    const json a = parse_json_text(audit);
    if (!a.is_object() || !a.contains("k") || !a.contains("lambda") || !a.contains("degree")) {
      throw UsageError("--audit expects {\"k\":..,\"lambda\":[..],\"degree\":..}");
    }
    opt.audit = AuditSlice{a.at("k").get<int>(), partition_from_json(a.at("lambda")), a.at("degree").get<int>()};
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = run_suite(suite, opt);
  if (timing) {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  std::cout << report.to_json().dump(2) << '\n';
  if (!report.passed()) {
    std::cerr << "counterexample: " << report.cases[*report.first_failure()].detail << '\n';
    return 1;
  }
  return 0;
}

int cmd_phi(const std::string& input) {
  std::cout << to_json(phi(decorated_path_from_json(read_json_arg(input)))).dump() << '\n';
  return 0;
}

int cmd_phi_inverse(const std::string& input) {
  std::cout << to_json(phi_inverse(msequence_from_json(read_json_arg(input)))).dump() << '\n';
  return 0;
}

int cmd_hilbert(int n, int k) {
  check_nk(n, k);
  const TPoly p = P_polynomial(n, k);
  std::cout << json{{"n", n}, {"k", k}, {"polynomial", to_json(p)}, {"at_one", p.eval(1).str()}}.dump(2) << '\n';
  return 0;
}

int cmd_schur(const std::string& lambda_text, int k) {
  const Partition lambda = partition_from_json(parse_json_text(lambda_text));
  check_nk(lambda.size(), k);
  const TPoly p = S_polynomial(lambda, k);
  std::cout << json{{"lambda", to_json(lambda)}, {"k", k}, {"polynomial", to_json(p)}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta_{e_k} e_n at q = 1: expansions and identity checks"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::string basis, format = "json";
  bool oracle = false;
  auto* expand = app.add_subcommand("expand", "expansion in the e, f, m or s basis");
  expand->add_option("n", n)->required();
  expand->add_option("k", k)->required();
  expand->add_option("basis", basis)->required();
  expand->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  expand->add_flag("--oracle", oracle, "recompute with the Macdonald oracle and compare");

  std::string suite, audit;
  int n_max = 0;
  VerifyOptions opt;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", n_max);
  verify->add_option("--k-max", opt.k_max);
  verify->add_option("--degree-max", opt.degree_max);
  verify->add_option("--threads", opt.threads);
  verify->add_option("--audit", audit, "involution pairings for one slice, {\"k\",\"lambda\",\"degree\"}");
  verify->add_flag("--timing", timing, "add wall-clock duration to the report");

  std::string input;
  auto* phi_cmd = app.add_subcommand("phi", "decorated Dyck path to M-sequence");
  phi_cmd->add_option("path", input, "JSON, or - / omitted for stdin");
  auto* inv_cmd = app.add_subcommand("phi-inverse", "M-sequence to decorated Dyck path");
  inv_cmd->add_option("sequence", input, "JSON, or - / omitted for stdin");

  auto* hilbert = app.add_subcommand("hilbert", "sum over ordered set partition sequences");
  hilbert->add_option("n", n)->required();
  hilbert->add_option("k", k)->required();

  std::string lambda_text;
  auto* schur = app.add_subcommand("schur", "sum over tableau sequences of shape lambda");
  schur->add_option("lambda", lambda_text, "partition as a JSON array")->required();
  schur->add_option("k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) return cmd_expand(n, k, basis, format, oracle);
    if (*verify) {
      if (verify->count("--n-max") > 0) opt.n_max = n_max;
      return cmd_verify(suite, opt, audit, timing);
    }
    if (*phi_cmd) return cmd_phi(input);
    if (*inv_cmd) return cmd_phi_inverse(input);
    if (*hilbert) return cmd_hilbert(n, k);
    if (*schur) return cmd_schur(lambda_text, k);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
