#include "deltaq/oracle.hpp"

#include <stdexcept>

#include "deltaq/specialization.hpp"

namespace deltaq {

SymFuncExpr macdonald_q1(const Partition& mu, const SymEngine& eng) {
  const Partition conj = mu.conjugate();
  TPoly scale{1};
  for (int part : conj.parts()) scale *= t_pochhammer(part);
  SymFuncExpr out = eng.plethysm_geometric(SymFuncExpr::element(Basis::h, conj));
  out *= TRat(scale);
  return out;
}

TPoly cell_alphabet(const Partition& mu) {
  TPoly a;
  for (int part : mu.parts()) a += t_analog(part);
  return a;
}

TPoly eigenvalue_ek(const Partition& mu, int k) {
  if (k < 0) throw std::invalid_argument("eigenvalue_ek: negative k");
  // by_z[j]: coefficient of z^j
  std::vector<TPoly> by_z{TPoly{1}};
  for (int part : mu.parts()) {
    for (int j = 0; j < part; ++j) {
      by_z.emplace_back();
      for (std::size_t z = by_z.size() - 1; z >= 1; --z) by_z[z] += by_z[z - 1] * TPoly::monomial(1, j);
    }
  }
  if (static_cast<std::size_t>(k) >= by_z.size()) return {};
  return by_z[static_cast<std::size_t>(k)];
}

std::map<Partition, TPoly> e_n_in_h_over_1mt(int n, const SymEngine& eng) {
  if (n < 1) throw std::invalid_argument("e_n_in_h_over_1mt: n must be positive");
  std::map<Partition, TPoly> out;
  SymFuncExpr sum = SymFuncExpr::zero(Basis::p, n);
  for (const auto& mu : partitions_of(n)) {
    TPoly c = f_at_one_minus_t(mu, n);
    SymFuncExpr term = eng.plethysm_geometric(SymFuncExpr::element(Basis::h, mu));
    term *= TRat(c);
    sum += term;
    out.emplace(mu, std::move(c));
  }
  const SymFuncExpr target = eng.convert(SymFuncExpr::element(Basis::e, Partition{n}), Basis::p);
  if (!(sum == target)) throw std::logic_error("e_n_in_h_over_1mt: expansion does not reproduce e_n");
  return out;
}

namespace {

SymFuncExpr apply_eigenvalues(int m, const SymEngine& eng, const auto& eigenvalue) {
  SymFuncExpr sum = SymFuncExpr::zero(Basis::p, m);
  for (const auto& [mu, c] : e_n_in_h_over_1mt(m, eng)) {
    const TRat ev = eigenvalue(mu);
    if (ev.is_zero()) continue;
    SymFuncExpr term = eng.plethysm_geometric(SymFuncExpr::element(Basis::h, mu));
    term *= TRat(c) * ev;
    sum += term;
  }
  return eng.convert(sum, Basis::e);
}

}  // namespace

SymFuncExpr delta_ek_en_q1(int n, int k, const SymEngine& eng) {
  if (k < 1 || k > n) throw std::invalid_argument("delta_ek_en_q1: need 1 <= k <= n");
  SymFuncExpr out = apply_eigenvalues(n, eng, [k](const Partition& mu) { return TRat(eigenvalue_ek(mu, k)); });
  for (const auto& [lambda, c] : out.terms) {
    if (!c.is_polynomial()) {
      throw std::logic_error("delta_ek_en_q1: coefficient of e" + to_string(lambda) + " is " + to_string(c));
    }
  }
  return out;
}

SymFuncExpr delta_q1(const SymFuncExpr& g, int m, const SymEngine& eng) {
  if (m < 1) throw std::invalid_argument("delta_q1: m must be positive");
  return apply_eigenvalues(m, eng, [&](const Partition& mu) { return eng.plethystic_eval(g, cell_alphabet(mu)); });
}

std::pair<TRat, TRat> haglund_sides(int n, int k, const SymFuncExpr& f, const SymEngine& eng) {
  if (f.degree != n) throw std::invalid_argument("haglund_check: F must have degree n");
  TRat lhs = eng.hall_inner(delta_ek_en_q1(n, k, eng), f);
  const SymFuncExpr rhs_delta = delta_q1(eng.omega(f), k + 1, eng);
  TRat rhs = eng.hall_inner(rhs_delta, SymFuncExpr::element(Basis::s, Partition{k + 1}));
  return {std::move(lhs), std::move(rhs)};
}

bool haglund_check(int n, int k, const SymFuncExpr& f, const SymEngine& eng) {
  const auto [lhs, rhs] = haglund_sides(n, k, f, eng);
  return lhs == rhs;
}

}  // namespace deltaq
