#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "deltaq/integer.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/tpoly.hpp"

namespace deltaq {

/// Elementary, complete homogeneous, monomial, power-sum, Schur, forgotten.
enum class Basis { e, h, m, p, s, f };

std::string_view basis_name(Basis b);
/// Throws std::invalid_argument for an unknown tag.
Basis parse_basis(std::string_view name);

/// A homogeneous symmetric function of a fixed degree written in one basis.
/// Every key has size == degree and no stored coefficient is zero.
struct SymFuncExpr {
  int degree = 0;
  Basis basis = Basis::p;
  std::map<Partition, TRat> terms;

  static SymFuncExpr zero(Basis b, int degree);
  static SymFuncExpr element(Basis b, const Partition& lambda, const TRat& coeff = TRat(TPoly{1}));

  void add(const Partition& lambda, const TRat& c);
  TRat coeff(const Partition& lambda) const;

  /// Both operands must share basis and degree (std::invalid_argument).
  SymFuncExpr& operator+=(const SymFuncExpr& o);
  SymFuncExpr& operator*=(const TRat& c);
  bool operator==(const SymFuncExpr& o) const = default;
};

/// A term of a polynomial in finitely many variables: coeff * x^exponents.
struct Monomial {
  Rational coeff;
  std::vector<int> exponents;
};

/// Degree-bounded symmetric function algebra. Every basis change pivots
/// through the power sums; per-degree transition tables are built lazily,
/// once, and are immutable afterwards, so a const engine may be shared
/// across threads.
class SymEngine {
 public:
  static constexpr int kDefaultDegreeBound = 10;

  explicit SymEngine(int degree_bound = kDefaultDegreeBound);

  int degree_bound() const { return degree_bound_; }

  /// Throws std::out_of_range when the degree exceeds the bound.
  SymFuncExpr convert(const SymFuncExpr& expr, Basis target) const;

  /// Hall scalar product, <p_a, p_b> = z_a delta_ab. Degrees must agree.
  TRat hall_inner(const SymFuncExpr& a, const SymFuncExpr& b) const;

  /// The involution omega, as a relabelling: e <-> h, m <-> f, s_l -> s_l',
  /// p_r -> (-1)^{r-1} p_r.
  SymFuncExpr omega(const SymFuncExpr& expr) const;

  /// X -> X/(1-t): result in the p basis with p_r scaled by 1/(1-t^r).
  SymFuncExpr plethysm_geometric(const SymFuncExpr& expr) const;

  /// F[A] for an alphabet A in Z[t] (t a monomial variable): p_r[A] = A(t^r).
  TRat plethystic_eval(const SymFuncExpr& expr, const TPoly& alphabet) const;

  /// Expansion of expr in nvars variables. Coefficients in the m basis must
  /// be constants (std::domain_error otherwise).
  std::vector<Monomial> monomial_expansion(const SymFuncExpr& expr, int nvars) const;

  /// Coefficients of b_lambda in the p basis.
  std::map<Partition, Rational> to_power_sums(Basis b, const Partition& lambda) const;

 private:
  struct Tables;
  std::shared_ptr<const Tables> tables(int degree) const;
  std::vector<TRat> power_sum_coeffs(const SymFuncExpr& expr, const Tables& t) const;

  int degree_bound_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const Tables>> cache_;
};

/// Process-wide engine with the default degree bound.
const SymEngine& default_engine();

}  // namespace deltaq
