#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "deltaq/integer.hpp"

namespace deltaq {

/// An integer partition stored as weakly decreasing positive parts.
///
/// Construction normalizes its input (sorts, drops zeros), so two partitions
/// are equal exactly when their part lists are equal. Ordering is
/// lexicographic on the part list.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(int part) const;
  /// Distinct part values, largest first.
  std::vector<int> distinct_parts() const;

  Partition conjugate() const;
  /// Sum of (i-1) * part_i.
  int n_statistic() const;
  /// z_lambda = prod_i i^{m_i} m_i!, the centralizer size.
  Int z() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n, lexicographically descending: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Partitions of n whose largest part is at most max_part, same order.
std::vector<Partition> partitions_with_max_part(int n, int max_part);

/// Number of distinct orderings of the parts of mu.
Int rearrangement_count(const Partition& mu);

/// Distinct length-m arrangements of lambda's parts padded with zeros, in
/// lexicographically descending order. Throws std::invalid_argument when
/// lambda has more than m parts.
std::vector<std::vector<int>> padded_rearrangements(const Partition& lambda, int m);

/// mu with one copy of the part i removed. Throws std::invalid_argument if
/// i is not a part of mu.
Partition remove_part(const Partition& mu, int i);

/// All compositions (ordered positive parts) of n, lexicographically
/// descending.
std::vector<std::vector<int>> compositions_of(int n);

}  // namespace deltaq
