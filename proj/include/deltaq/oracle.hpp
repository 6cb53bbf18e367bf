#pragma once

#include <map>
#include <utility>

#include "deltaq/partition.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/tpoly.hpp"

namespace deltaq {

// Delta operators at q = 1, computed from the eigenvalue definition on the
// product formula for the modified Macdonald polynomials at q = 1.

/// H~_mu[X; 1, t] = prod_i (t;t)_{mu'_i} h_{mu'_i}[X/(1-t)], p basis.
SymFuncExpr macdonald_q1(const Partition& mu, const SymEngine& eng = default_engine());

/// The alphabet sum_i [mu_i]_t as a polynomial with one monomial per cell.
TPoly cell_alphabet(const Partition& mu);

/// e_k of the alphabet {t^j : 0 <= j < mu_i}, read off the product
/// prod_i prod_j (1 + z t^j).
TPoly eigenvalue_ek(const Partition& mu, int k);

/// mu -> f_mu[1-t] with e_n = sum_mu f_mu[1-t] h_mu[X/(1-t)]. The expansion
/// is re-summed and compared with e_n; std::logic_error on mismatch.
std::map<Partition, TPoly> e_n_in_h_over_1mt(int n, const SymEngine& eng = default_engine());

/// Delta_{e_k} e_n at q = 1 in the e basis. Requires 1 <= k <= n
/// (std::invalid_argument); std::logic_error if a coefficient is not a
/// polynomial.
SymFuncExpr delta_ek_en_q1(int n, int k, const SymEngine& eng = default_engine());

/// Delta_G e_m at q = 1 for an arbitrary symmetric function G, e basis,
/// eigenvalues by plethystic evaluation G[sum_i [mu_i]_t].
SymFuncExpr delta_q1(const SymFuncExpr& g, int m, const SymEngine& eng = default_engine());

/// Both sides of <Delta_{e_k} e_n, F> = <Delta_{omega F} e_{k+1}, s_{k+1}>
/// at q = 1, left first.
std::pair<TRat, TRat> haglund_sides(int n, int k, const SymFuncExpr& f, const SymEngine& eng = default_engine());

/// Whether the two haglund_sides agree.
bool haglund_check(int n, int k, const SymFuncExpr& f, const SymEngine& eng = default_engine());

}  // namespace deltaq
