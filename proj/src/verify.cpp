#include "deltaq/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "deltaq/bijection.hpp"
#include "deltaq/dyck.hpp"
#include "deltaq/involution.hpp"
#include "deltaq/oracle.hpp"
#include "deltaq/parallel.hpp"
#include "deltaq/sequences.hpp"
#include "deltaq/specialization.hpp"

namespace deltaq {

namespace {

constexpr int kMaxN = 8;

void require_nk(int n, int k, const char* who) {
  if (k < 1 || k > n) throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n");
}

TRat generic_sum_of(const SymFuncExpr& f, int k) {
  const auto monos = default_engine().monomial_expansion(f, k + 1);
  return generic_F_sum(monos, k);
}

bool nonnegative_integral(const TRat& c) {
  if (!c.is_polynomial()) return false;
  for (const auto& x : c.num().coeffs()) {
    if (x < 0) return false;
  }
  return true;
}

CaseOutcome failed(CaseOutcome c, json lhs, json rhs, std::string detail) {
  c.pass = false;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.detail = std::move(detail);
  return c;
}

// ---------------------------------------------------------------- eq1

CaseOutcome eq1_case(int n, int k) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}};
  const SymFuncExpr model = combinatorial_expansion(n, k, Basis::e);
  const SymFuncExpr oracle = delta_ek_en_q1(n, k);
  c.summary = {{"terms", model.terms.size()}};
  if (!(model == oracle)) {
    for (const auto& lambda : partitions_of(n)) {
      if (model.coeff(lambda) != oracle.coeff(lambda)) {
        return failed(c, to_json(model), to_json(oracle), "coefficient of e" + to_string(lambda) + " differs");
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- eq2

CaseOutcome eq2_case(int n, int k, const Partition& lambda) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}, {"lambda", to_json(lambda)}};
  const TPoly lhs = M_polynomial(lambda, k);
  TLaurent rhs;
  int paths = 0;
  for (const auto& d : enumerate_paths(n)) {
    if (lambda_of(d) != lambda) continue;
    ++paths;
    rhs += H_poly(d, n - k).shifted(d.area());
  }
  c.summary = {{"paths", paths}};
  if (!rhs.is_polynomial()) return failed(c, to_json(lhs), to_json(rhs), "path side has negative powers of t");
  if (rhs.to_poly() != lhs) return failed(c, to_json(lhs), to_json(rhs), "polynomials differ");
  return c;
}

// ---------------------------------------------------------------- bijection

CaseOutcome bijection_case(int n, int k, const Partition& lambda) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}, {"lambda", to_json(lambda)}};
  const auto paths = enumerate_decorated(n, k, lambda);
  const auto seqs = enumerate_M(lambda, k);
  c.summary = {{"paths", paths.size()}, {"sequences", seqs.size()}};
  const std::set<MSequence> target(seqs.begin(), seqs.end());
  std::set<MSequence> images;
  for (const auto& d : paths) {
    try {
      const MSequence s = phi(d);
      if (auto bad = m_violation(s)) return failed(c, to_json(d), to_json(s), "image is not an M-sequence: " + *bad);
      if (s.k() != k || s.lambda() != lambda) return failed(c, to_json(d), to_json(s), "image has the wrong shape");
      if (s.rho() != d.decorated_area()) return failed(c, to_json(d), to_json(s), "weight not preserved");
      const DecoratedDyckPath back = phi_inverse(s);
      if (!(back == d)) return failed(c, to_json(d), to_json(back), "phi_inverse(phi(D)) != D");
      if (!images.insert(s).second) return failed(c, to_json(d), to_json(s), "two paths share an image");
    } catch (const std::exception& e) {
      return failed(c, to_json(d), json(), e.what());
    }
  }
  if (images != target) return failed(c, json(paths.size()), json(seqs.size()), "image differs from M-sequence set");
  for (const auto& s : seqs) {
    try {
      const MSequence again = phi(phi_inverse(s));
      if (!(again == s)) return failed(c, to_json(s), to_json(again), "phi(phi_inverse(s)) != s");
    } catch (const std::exception& e) {
      return failed(c, to_json(s), json(), e.what());
    }
  }
  return c;
}

// ---------------------------------------------------------------- involution

CaseOutcome involution_case(int k, const Partition& lambda, int degree_max) {
  CaseOutcome c;
  c.params = {{"k", k}, {"lambda", to_json(lambda)}};
  const TPoly expected = M_polynomial(lambda, k);
  const auto all_m = enumerate_M(lambda, k);
  json ledger = json::array();
  for (int d = 0; d <= degree_max; ++d) {
    const auto diagrams = enumerate_degree(k, lambda, d);
    long long signed_count = 0;
    long long fixed = 0;
    std::set<MSequence> fixed_seqs;
    for (const auto& t : diagrams) {
      signed_count += sign(t);
      if (auto bad = diagram_violation(t)) return failed(c, to_json(t), json(), "enumerated an invalid diagram: " + *bad);
      const auto partner = involution_partner(t);
      bool all_unit = true;
      for (const auto& s : t.stacks) all_unit = all_unit && s.row_len == 1;
      const bool m_ok = all_unit && !m_violation(fixed_to_msequence(t));
      if (!partner) {
        if (!m_ok) return failed(c, to_json(t), json("fixed"), "fixed point is not an M-sequence diagram");
        ++fixed;
        fixed_seqs.insert(fixed_to_msequence(t));
        continue;
      }
      if (m_ok) return failed(c, to_json(t), to_json(*partner), "M-sequence diagram was paired");
      if (auto bad = diagram_violation(*partner)) return failed(c, to_json(t), to_json(*partner), "partner invalid: " + *bad);
      if (weight(*partner) != weight(t)) return failed(c, to_json(t), to_json(*partner), "partner weight differs");
      if (sign(*partner) == sign(t)) return failed(c, to_json(t), to_json(*partner), "partner has the same sign");
      const auto back = involution_partner(*partner);
      if (!back || !(*back == t)) return failed(c, to_json(t), to_json(*partner), "partner does not map back");
    }
    const Int want = expected.coeff(d);
    if (Int(signed_count) != want) {
      return failed(c, json(signed_count), json(want.str()), "signed count at degree " + std::to_string(d) + " differs");
    }
    std::set<MSequence> m_at_d;
    for (const auto& s : all_m) {
      if (s.rho() == d) m_at_d.insert(s);
    }
    if (fixed_seqs != m_at_d || static_cast<std::size_t>(fixed) != m_at_d.size()) {
      return failed(c, json(fixed), json(m_at_d.size()),
                    "fixed points at degree " + std::to_string(d) + " differ from the M-sequences of that weight");
    }
    ledger.push_back({{"degree", d}, {"diagrams", diagrams.size()}, {"fixed", fixed}, {"signed", signed_count}});
  }
  c.summary = {{"ledger", ledger}};
  return c;
}

json audit_slice(const AuditSlice& a) {
  json rows = json::array();
  for (const auto& t : enumerate_degree(a.k, a.lambda, a.degree)) {
    const auto partner = involution_partner(t);
    rows.push_back({{"diagram", to_json(t)},
                    {"sign", sign(t)},
                    {"weight", weight(t)},
                    {"partner", partner ? to_json(*partner) : json("fixed")}});
  }
  return {{"k", a.k}, {"lambda", to_json(a.lambda)}, {"degree", a.degree}, {"pairs", rows}};
}

// ---------------------------------------------------------------- hilbert

CaseOutcome hilbert_case(int n, int k) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}};
  const TPoly lhs = P_polynomial(n, k);
  const TRat rhs = default_engine().hall_inner(delta_ek_en_q1(n, k),
                                               SymFuncExpr::element(Basis::p, Partition(std::vector<int>(n, 1))));
  if (TRat(lhs) != rhs) return failed(c, to_json(lhs), to_json(rhs), "Hilbert series differs");
  c.summary = {{"at_one", lhs.eval(1).str()}};
  if (k == n && n <= 5) {
    const long long brute = count_parking_functions(n);
    c.summary["parking_functions"] = brute;
    if (lhs.eval(1) != brute) return failed(c, json(lhs.eval(1).str()), json(brute), "parking function count differs");
  }
  return c;
}

// ---------------------------------------------------------------- schur

CaseOutcome schur_case(int n, int k) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}};
  const SymEngine& eng = default_engine();
  const SymFuncExpr delta = delta_ek_en_q1(n, k);
  const SymFuncExpr flipped = eng.omega(delta);
  for (const auto& lambda : partitions_of(n)) {
    const TPoly lhs = S_polynomial(lambda, k);
    const TRat rhs = eng.hall_inner(flipped, SymFuncExpr::element(Basis::s, lambda));
    if (TRat(lhs) != rhs) return failed(c, to_json(lhs), to_json(rhs), "tableau count differs at " + to_string(lambda));
    if (!nonnegative_integral(rhs)) return failed(c, to_json(lhs), to_json(rhs), "negative Schur coefficient");
  }
  for (Basis b : {Basis::s, Basis::f}) {
    const SymFuncExpr e = eng.convert(delta, b);
    for (const auto& [lambda, coeff] : e.terms) {
      if (!nonnegative_integral(coeff)) {
        return failed(c, to_json(e), json(), std::string("coefficient of ") + std::string(basis_name(b)) +
                                                 to_string(lambda) + " is not a nonnegative polynomial");
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- haglund

CaseOutcome haglund_case(int n, int k) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}};
  int checked = 0;
  for (const auto& lambda : partitions_of(n)) {
    const auto [lhs, rhs] = haglund_sides(n, k, SymFuncExpr::element(Basis::f, lambda));
    if (lhs != rhs) return failed(c, to_json(lhs), to_json(rhs), "identity fails for F = f" + to_string(lambda));
    ++checked;
  }
  c.summary = {{"functions", checked}};
  return c;
}

// ---------------------------------------------------------------- formal

CaseOutcome formal_case(int n, int k) {
  CaseOutcome c;
  c.params = {{"n", n}, {"k", k}};
  const int order = n * (n - 1) / 2;
  const SymFuncExpr delta = delta_ek_en_q1(n, k);
  for (const auto& lambda : partitions_of(n)) {
    const TSeries lhs = coeff_f_formal(lambda, k, order);
    const TRat rhs = default_engine().hall_inner(delta, SymFuncExpr::element(Basis::f, lambda));
    if (!rhs.is_polynomial() || rhs.num().degree() > order || TSeries(rhs.num(), order) != lhs) {
      return failed(c, to_json(lhs.truncated_poly()), to_json(rhs), "series differs at " + to_string(lambda));
    }
  }
  c.summary = {{"order", order}};
  return c;
}

// ---------------------------------------------------------------- dispatch

struct Suite {
  std::string name;
  int default_n;
  std::function<std::vector<std::function<CaseOutcome()>>(const VerifyOptions&, int, json&)> plan;
};

std::vector<std::function<CaseOutcome()>> nk_cases(int n_max, CaseOutcome (*fn)(int, int)) {
  std::vector<std::function<CaseOutcome()>> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) out.emplace_back([=] { return fn(n, k); });
  }
  return out;
}

std::vector<std::function<CaseOutcome()>> nkl_cases(int n_max, CaseOutcome (*fn)(int, int, const Partition&)) {
  std::vector<std::function<CaseOutcome()>> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& lambda : partitions_of(n)) out.emplace_back([=] { return fn(n, k, lambda); });
    }
  }
  return out;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"eq1", 6,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nk_cases(n, eq1_case);
       }},
      {"eq2", 7,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nkl_cases(n, eq2_case);
       }},
      {"bijection", 7,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nkl_cases(n, bijection_case);
       }},
      {"involution", 5,
       [](const VerifyOptions& o, int n, json& r) {
         r = {{"n_max", n}, {"k_max", o.k_max}, {"degree_max", o.degree_max}};
         std::vector<std::function<CaseOutcome()>> out;
         for (int k = 1; k <= o.k_max; ++k) {
           for (int size = 1; size <= n; ++size) {
             for (const auto& lambda : partitions_of(size)) {
               const int d = o.degree_max;
               out.emplace_back([=] { return involution_case(k, lambda, d); });
             }
           }
         }
         return out;
       }},
      {"hilbert", 5,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nk_cases(n, hilbert_case);
       }},
      {"schur", 5,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nk_cases(n, schur_case);
       }},
      {"haglund", 5,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nk_cases(n, haglund_case);
       }},
      {"formal", 5,
       [](const VerifyOptions&, int n, json& r) {
         r = {{"n_max", n}};
         return nk_cases(n, formal_case);
       }},
  };
  return all;
}

}  // namespace

SymFuncExpr combinatorial_expansion(int n, int k, Basis basis) {
  require_nk(n, k, "combinatorial_expansion");
  SymFuncExpr out = SymFuncExpr::zero(basis, n);
  for (const auto& lambda : partitions_of(n)) {
    switch (basis) {
      case Basis::e:
        out.add(lambda, TRat(M_polynomial(lambda, k)));
        break;
      case Basis::s:
        out.add(lambda, TRat(S_polynomial(lambda.conjugate(), k)));
        break;
      case Basis::m:
        out.add(lambda, generic_sum_of(SymFuncExpr::element(Basis::e, lambda), k));
        break;
      case Basis::f:
        out.add(lambda, generic_sum_of(SymFuncExpr::element(Basis::h, lambda), k));
        break;
      default:
        throw std::invalid_argument("combinatorial_expansion: basis must be e, f, m or s");
    }
  }
  return out;
}

SymFuncExpr oracle_expansion(int n, int k, Basis basis) {
  require_nk(n, k, "oracle_expansion");
  return default_engine().convert(delta_ek_en_q1(n, k), basis);
}

long long count_parking_functions(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("count_parking_functions: need 1 <= n <= 7");
  std::vector<int> pref(static_cast<std::size_t>(n), 1);
  long long count = 0;
  while (true) {
    std::vector<int> sorted = pref;
    std::sort(sorted.begin(), sorted.end());
    bool parks = true;
    for (int i = 0; i < n; ++i) parks = parks && sorted[static_cast<std::size_t>(i)] <= i + 1;
    if (parks) ++count;
    int pos = n - 1;
    while (pos >= 0 && pref[static_cast<std::size_t>(pos)] == n) pref[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++pref[static_cast<std::size_t>(pos)];
  }
  return count;
}

bool VerificationReport::passed() const { return !first_failure(); }

std::optional<std::size_t> VerificationReport::first_failure() const {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!cases[i].pass) return i;
  }
  return std::nullopt;
}

json VerificationReport::to_json() const {
  json out;
  out["identity"] = identity;
  out["ranges"] = ranges;
  out["status"] = passed() ? "pass" : "fail";
  json list = json::array();
  for (const auto& c : cases) {
    json row = {{"params", c.params}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.summary.is_null()) row["summary"] = c.summary;
    list.push_back(std::move(row));
  }
  out["cases"] = std::move(list);
  if (auto i = first_failure()) {
    const auto& c = cases[*i];
    out["counterexample"] = {{"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"detail", c.detail}};
  }
  if (!audit.is_null()) out["audit"] = audit;
  if (seconds) out["duration_seconds"] = *seconds;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.name == name; });
  if (it == all.end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  const int n_max = opt.n_max.value_or(it->default_n);
  if (n_max < 1 || n_max > kMaxN) throw std::invalid_argument("n-max must lie in 1.." + std::to_string(kMaxN));
  if (opt.k_max < 1 || opt.k_max > 5) throw std::invalid_argument("k-max must lie in 1..5");
  if (opt.degree_max < 0 || opt.degree_max > 12) throw std::invalid_argument("degree-max must lie in 0..12");

  VerificationReport report;
  report.identity = name;
  const auto plan = it->plan(opt, n_max, report.ranges);
  report.cases = parallel_map(plan.size(), opt.threads, [&](std::size_t i) { return plan[i](); });
  if (opt.audit) report.audit = audit_slice(*opt.audit);
  return report;
}

}  // namespace deltaq
