#include "deltaq/specialization.hpp"

#include <stdexcept>
#include <string>

namespace deltaq {

namespace {

void require_size(const Partition& mu, int m, const char* who) {
  if (mu.size() != m) {
    throw std::invalid_argument(std::string(who) + ": partition " + to_string(mu) +
                                " is not a partition of " + std::to_string(m));
  }
}

int sign(int m, const Partition& mu) { return (m - mu.length()) % 2 == 0 ? 1 : -1; }

TSeries product_of_gf(const Partition& mu, int order) {
  TSeries acc(TPoly{1}, order);
  for (int part : mu.parts()) acc *= partition_gf_series(part, order);
  return acc;
}

}  // namespace

Int f_at_one(const Partition& mu, int m) {
  require_size(mu, m, "f_at_one");
  return sign(m, mu) * rearrangement_count(mu);
}

TPoly f_at_one_minus_t(const Partition& mu, int m) {
  require_size(mu, m, "f_at_one_minus_t");
  TPoly acc = TPoly::constant(rearrangement_count(mu));
  for (int i : mu.distinct_parts()) acc -= TPoly::monomial(rearrangement_count(remove_part(mu, i)), i);
  return acc * Int(sign(m, mu));
}

TSeries hf_product_series(const Partition& mu, int m, int order) {
  require_size(mu, m, "hf_product_series");
  TSeries direct = product_of_gf(mu, order) * TSeries(f_at_one_minus_t(mu, m), order);

  TSeries by_first_part(order);
  for (int i : mu.distinct_parts()) {
    Partition rest = remove_part(mu, i);
    TSeries term = partition_gf_series(i - 1, order) * product_of_gf(rest, order);
    by_first_part += term * rearrangement_count(rest);
  }
  by_first_part *= Int(sign(m, mu));

  if (direct != by_first_part) {
    throw std::logic_error("hf_product_series: product and first-part forms disagree for " +
                           to_string(mu) + ": " + to_string(direct) + " vs " +
                           to_string(by_first_part));
  }
  return direct;
}

TPoly monomial_eval(const Partition& lambda, const Partition& mu) {
  const int cells = mu.size();
  if (lambda.length() > cells) return {};
  // position of each cell inside its row of mu
  std::vector<int> column;
  for (int part : mu.parts()) {
    for (int j = 0; j < part; ++j) column.push_back(j);
  }
  std::vector<Int> acc;
  for (const auto& filling : padded_rearrangements(lambda, cells)) {
    std::size_t exponent = 0;
    for (std::size_t c = 0; c < filling.size(); ++c) {
      exponent += static_cast<std::size_t>(column[c] * filling[c]);
    }
    if (acc.size() <= exponent) acc.resize(exponent + 1, Int(0));
    acc[exponent] += 1;
  }
  return TPoly(std::move(acc));
}

TSeries coeff_f_formal(const Partition& lambda, int k, int order) {
  const int n = lambda.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("coeff_f_formal: need 1 <= k <= n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
  TSeries acc(order);
  if (lambda.length() > k + 1) return acc;
  for (const auto& mu : partitions_of(k + 1)) {
    TPoly placements = monomial_eval(lambda, mu);
    if (placements.is_zero()) continue;
    acc += hf_product_series(mu, k + 1, order) * TSeries(placements, order);
  }
  return acc;
}

}  // namespace deltaq
