#include <gtest/gtest.h>

#include <stdexcept>

#include "deltaq/parallel.hpp"
#include "deltaq/verify.hpp"

using namespace deltaq;

TEST(ParallelMap, KeepsIndexOrder) {
  for (unsigned threads : {1u, 2u, 4u, 0u}) {
    const auto out = parallel_map(100, threads, [](std::size_t i) { return static_cast<int>(i * i); });
    ASSERT_EQ(out.size(), 100u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  }
  EXPECT_TRUE(parallel_map(0, 3, [](std::size_t) { return 1; }).empty());
}

TEST(ParallelMap, RethrowsLowestFailure) {
  try {
    parallel_map(20, 4, [](std::size_t i) -> int {
      if (i == 7 || i == 13) throw std::runtime_error("fail " + std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "fail 7");
  }
}

TEST(Expansion, EBasisSpotValues) {
  const SymFuncExpr one = combinatorial_expansion(1, 1, Basis::e);
  EXPECT_EQ(one, SymFuncExpr::element(Basis::e, {1}));
  const SymFuncExpr two = combinatorial_expansion(2, 1, Basis::e);
  EXPECT_EQ(two.coeff({1, 1}), TRat(TPoly{1}));
  EXPECT_EQ(two.coeff({2}), TRat(TPoly{1, 1}));
  EXPECT_EQ(combinatorial_expansion(2, 2, Basis::e).coeff({2}), TRat(TPoly{0, 1}));
  EXPECT_THROW(combinatorial_expansion(2, 3, Basis::e), std::invalid_argument);
  EXPECT_THROW(combinatorial_expansion(2, 1, Basis::p), std::invalid_argument);
}

TEST(Expansion, EveryBasisMatchesOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (Basis b : {Basis::e, Basis::f, Basis::m, Basis::s}) {
        EXPECT_EQ(combinatorial_expansion(n, k, b), oracle_expansion(n, k, b))
            << "n=" << n << " k=" << k << " basis " << basis_name(b);
      }
    }
  }
}

TEST(ParkingFunctions, BruteForce) {
  EXPECT_EQ(count_parking_functions(1), 1);
  EXPECT_EQ(count_parking_functions(2), 3);
  EXPECT_EQ(count_parking_functions(3), 16);
  EXPECT_EQ(count_parking_functions(4), 125);
}

TEST(Report, PassingSuiteShape) {
  VerifyOptions opt;
  opt.n_max = 3;
  const VerificationReport r = run_suite("eq2", opt);
  EXPECT_TRUE(r.passed());
  const json j = r.to_json();
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_FALSE(j.contains("counterexample"));
  EXPECT_FALSE(j.contains("duration_seconds"));
  EXPECT_EQ(j.at("cases").size(), r.cases.size());
}

TEST(Report, FailingCaseCarriesCounterexample) {
  VerificationReport r;
  r.identity = "demo";
  r.cases.push_back(CaseOutcome{json{{"n", 1}}, true, json(), json(), json(), ""});
  r.cases.push_back(CaseOutcome{json{{"n", 2}}, false, json(), json("lhs"), json("rhs"), "differs"});
  EXPECT_FALSE(r.passed());
  const json j = r.to_json();
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("counterexample").at("params").at("n"), 2);
  EXPECT_EQ(j.at("counterexample").at("lhs"), "lhs");
}

TEST(Report, DeterministicAcrossThreadCounts) {
  VerifyOptions a, b;
  a.n_max = b.n_max = 4;
  a.threads = 1;
  b.threads = 3;
  for (const auto& suite : suite_names()) {
    EXPECT_EQ(run_suite(suite, a).to_json().dump(), run_suite(suite, b).to_json().dump()) << suite;
  }
}

TEST(Report, AuditSlice) {
  VerifyOptions opt;
  opt.n_max = 2;
  opt.k_max = 1;
  opt.degree_max = 2;
  opt.audit = AuditSlice{1, Partition{2}, 1};
  const json j = run_suite("involution", opt).to_json();
  ASSERT_TRUE(j.contains("audit"));
  int fixed = 0;
  for (const auto& row : j.at("audit").at("pairs")) fixed += row.at("partner") == "fixed";
  EXPECT_EQ(fixed, 1);
}

TEST(Report, RejectsBadOptions) {
  VerifyOptions opt;
  EXPECT_THROW(run_suite("nope", opt), std::invalid_argument);
  opt.n_max = 0;
  EXPECT_THROW(run_suite("eq1", opt), std::invalid_argument);
}
