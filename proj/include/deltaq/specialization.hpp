#pragma once

#include "deltaq/integer.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/tpoly.hpp"

namespace deltaq {

// Closed-form specializations of the forgotten basis and the formal power
// series for the f_lambda coefficient of Delta_{e_k} e_n at q = 1.
//
// Every function taking (mu, m) requires |mu| == m and throws
// std::invalid_argument otherwise.

/// f_mu[1] = (-1)^{m - l(mu)} |R(mu)|.
Int f_at_one(const Partition& mu, int m);

/// f_mu[1 - t] = (-1)^{m - l(mu)} (|R(mu)| - sum_i t^i |R(mu - (i))|), the
/// sum running over the distinct part values i of mu.
TPoly f_at_one_minus_t(const Partition& mu, int m);

/// h_mu[1/(1-t)] f_mu[1-t] to order N. Computed twice, as the product
/// G_{mu_1}...G_{mu_l} f_mu[1-t] and as the signed sum
/// sum_i G_{i-1} |R(mu-(i))| prod_{parts of mu-(i)} G; throws
/// std::logic_error if the two disagree.
TSeries hf_product_series(const Partition& mu, int m, int order);

/// m_lambda at the alphabet {t^j : 0 <= j < mu_i}, summing over placements of
/// lambda's parts into the cells of mu. Zero when l(lambda) > |mu|.
TPoly monomial_eval(const Partition& lambda, const Partition& mu);

/// sum_{mu |- k+1} h_mu[1/(1-t)] f_mu[1-t] m_lambda[sum [mu_i]_t] to order N,
/// the f_lambda coefficient of Delta_{e_k} e_n at q = 1 as a formal series.
/// Requires 1 <= k <= |lambda| (std::invalid_argument).
TSeries coeff_f_formal(const Partition& lambda, int k, int order);

}  // namespace deltaq
