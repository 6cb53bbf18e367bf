#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaq/json_io.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

/// Delta_{e_k} e_n at q = 1 in basis e, f, m or s, read off the
/// combinatorial models: M-sequence counts for e, generic a-vector sums for
/// m and f, tableau sequences for s. Requires 1 <= k <= n.
SymFuncExpr combinatorial_expansion(int n, int k, Basis basis);

/// The same expansion from the Macdonald oracle.
SymFuncExpr oracle_expansion(int n, int k, Basis basis);

/// Classical parking functions of length n, counted by brute force over
/// all n^n preference sequences.
long long count_parking_functions(int n);

struct AuditSlice {
  int k = 1;
  Partition lambda;
  int degree = 0;
};

struct VerifyOptions {
  std::optional<int> n_max;  // unset: suite default
  int k_max = 3;
  int degree_max = 8;
  unsigned threads = 0;
  std::optional<AuditSlice> audit;
};

struct CaseOutcome {
  json params;
  bool pass = true;
  json summary;
  json lhs;
  json rhs;
  std::string detail;
};

struct VerificationReport {
  std::string identity;
  json ranges;
  std::vector<CaseOutcome> cases;
  json audit;
  std::optional<double> seconds;

  bool passed() const;
  /// Index of the first failing case.
  std::optional<std::size_t> first_failure() const;
  json to_json() const;
};

/// eq1, eq2, bijection, involution, hilbert, schur, haglund, formal.
const std::vector<std::string>& suite_names();

/// Runs every case of the suite up to the configured bounds. Throws
/// std::invalid_argument for an unknown suite or out-of-range bounds.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace deltaq
