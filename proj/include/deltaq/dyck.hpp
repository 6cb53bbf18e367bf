#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/tpoly.hpp"

namespace deltaq {

/// A Dyck path in the n x n square, stored as its area sequence: row i
/// (1-based, bottom to top) has area()[i-1] full cells between the path and
/// the diagonal.
class DyckPath {
 public:
  /// Validates a_1 = 0, 0 <= a_{i+1} <= a_i + 1; throws std::invalid_argument.
  explicit DyckPath(std::vector<int> area_seq);

  int size() const { return static_cast<int>(area_.size()); }
  const std::vector<int>& area_seq() const { return area_; }
  /// Area of row i, 1-based; row 0 is the origin with area 0.
  int row_area(int row) const { return row == 0 ? 0 : area_.at(static_cast<std::size_t>(row - 1)); }
  int area() const;

  /// True when row i starts a vertical run (row 1, or the step below it is East).
  bool starts_run(int row) const;
  /// Rows that may carry a decoration: 0 and every row continuing a run.
  std::vector<int> decorable_rows() const;
  /// Step word, 'N' and 'E', from (0,0) to (n,n).
  std::string steps() const;

  bool operator==(const DyckPath&) const = default;

 private:
  std::vector<int> area_;
};

/// A Dyck path with a set of decorated rows drawn from {0} and the rows that
/// continue a vertical run.
class DecoratedDyckPath {
 public:
  /// Sorts the rows; throws std::invalid_argument on duplicate or
  /// undecorable rows.
  DecoratedDyckPath(DyckPath path, std::vector<int> decorated_rows);

  const DyckPath& path() const { return path_; }
  const std::vector<int>& decorated_rows() const { return rows_; }
  bool is_decorated(int row) const;
  /// Area with the decorated rows' cells removed.
  int decorated_area() const;

  bool operator==(const DecoratedDyckPath&) const = default;

 private:
  DyckPath path_;
  std::vector<int> rows_;
};

/// All Dyck paths of size n, area sequences in lexicographic order.
std::vector<DyckPath> enumerate_paths(int n);

/// Partition formed by the lengths of the maximal vertical runs.
Partition lambda_of(const DyckPath& d);

/// Coefficient of w^j in (1+w) prod_{runs continuing at i} (1 + w t^{-a_i}).
TLaurent H_poly(const DyckPath& d, int j);

/// All decorated paths with exactly n-k decorations, over paths with
/// lambda_of(path) == *lambda when a filter is given. Ordered by path, then
/// lexicographically by decoration set. Requires 1 <= k <= n.
std::vector<DecoratedDyckPath> enumerate_decorated(int n, int k,
                                                   const std::optional<Partition>& lambda = std::nullopt);

}  // namespace deltaq
