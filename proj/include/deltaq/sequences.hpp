#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/tpoly.hpp"

namespace deltaq {

/// ((a_1,b_1), ..., (a_{k+1},b_{k+1})) with a_1 = 0, a_{i+1} < a_i + b_i and
/// the b's a zero-padded rearrangement of lambda. Weight rho = sum of a_i.
struct MSequence {
  std::vector<std::pair<int, int>> pairs;

  int rho() const;
  int k() const { return static_cast<int>(pairs.size()) - 1; }
  /// Partition formed by the nonzero b's.
  Partition lambda() const;
  bool operator==(const MSequence&) const = default;
  auto operator<=>(const MSequence&) const = default;
};

/// First violated defining condition, or nullopt if s is in M^lambda_k for
/// lambda = s.lambda() and k = s.k().
std::optional<std::string> m_violation(const MSequence& s);

/// Every a-vector (a_1 = 0, 0 <= a_{i+1} < a_i + b_i) for a fixed b-vector,
/// lexicographic order.
std::vector<std::vector<int>> enumerate_a_vectors(std::span<const int> b);

/// The finite set M^lambda_k. Order: b-vectors as padded_rearrangements,
/// then a-vectors lexicographically.
std::vector<MSequence> enumerate_M(const Partition& lambda, int k);
TPoly M_polynomial(const Partition& lambda, int k);

/// sum_j c_j sum_{admissible a for b = exponents_j} t^{sum a}. The a-vector
/// count is done by a degree-tracking recurrence, not by enumeration.
/// Exponent lists must all have length k+1.
TRat generic_F_sum(std::span<const Monomial> monomials, int k);

/// ((a_1,B_1), ..., (a_{k+1},B_{k+1})), the B's an ordered set partition of
/// {1..n} with empty blocks allowed, a_1 = 0, a_{i+1} < a_i + |B_i|.
struct OSPSequence {
  std::vector<std::pair<int, std::vector<int>>> pairs;
  int rho() const;
  bool operator==(const OSPSequence&) const = default;
};

std::vector<OSPSequence> enumerate_P(int n, int k);
TPoly P_polynomial(int n, int k);

/// A semistandard tableau of shape lambda (rows weakly increasing, columns
/// strictly increasing) with an a-vector satisfying a_{i+1} < a_i + c_i(T).
struct SSYTSequence {
  std::vector<std::vector<int>> tableau;
  std::vector<int> avector;
  int rho() const;
  bool operator==(const SSYTSequence&) const = default;
};

/// Semistandard tableaux of shape lambda with entries in 1..max_entry, in
/// row-reading lexicographic order.
std::vector<std::vector<std::vector<int>>> enumerate_ssyt(const Partition& lambda, int max_entry);

/// Number of entries equal to 1..max_entry.
std::vector<int> content_of(const std::vector<std::vector<int>>& tableau, int max_entry);

std::vector<SSYTSequence> enumerate_S(const Partition& lambda, int k);
TPoly S_polynomial(const Partition& lambda, int k);

}  // namespace deltaq
