#include "deltaq/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltaq {

DyckPath::DyckPath(std::vector<int> area_seq) : area_(std::move(area_seq)) {
  if (area_.empty()) throw std::invalid_argument("DyckPath: empty area sequence");
  if (area_[0] != 0) throw std::invalid_argument("DyckPath: first row must have area 0");
  for (std::size_t i = 1; i < area_.size(); ++i) {
    if (area_[i] < 0 || area_[i] > area_[i - 1] + 1) {
      throw std::invalid_argument("DyckPath: invalid area step at row " + std::to_string(i + 1));
    }
  }
}

int DyckPath::area() const {
  int s = 0;
  for (int a : area_) s += a;
  return s;
}

bool DyckPath::starts_run(int row) const {
  if (row < 1 || row > size()) throw std::out_of_range("DyckPath::starts_run: bad row");
  return row == 1 || row_area(row - 1) != row_area(row) - 1;
}

std::vector<int> DyckPath::decorable_rows() const {
  std::vector<int> rows{0};
  for (int i = 2; i <= size(); ++i) {
    if (!starts_run(i)) rows.push_back(i);
  }
  return rows;
}

std::string DyckPath::steps() const {
  std::string out;
  // North step i starts at x = (i-1) - a_i.
  int x = 0;
  for (int i = 1; i <= size(); ++i) {
    int start_x = (i - 1) - row_area(i);
    out.append(static_cast<std::size_t>(start_x - x), 'E');
    out.push_back('N');
    x = start_x;
  }
  out.append(static_cast<std::size_t>(size() - x), 'E');
  return out;
}

DecoratedDyckPath::DecoratedDyckPath(DyckPath path, std::vector<int> decorated_rows)
    : path_(std::move(path)), rows_(std::move(decorated_rows)) {
  std::sort(rows_.begin(), rows_.end());
  if (std::adjacent_find(rows_.begin(), rows_.end()) != rows_.end()) {
    throw std::invalid_argument("DecoratedDyckPath: duplicate decorated row");
  }
  for (int r : rows_) {
    if (r < 0 || r > path_.size()) {
      throw std::invalid_argument("DecoratedDyckPath: row " + std::to_string(r) + " out of range");
    }
    if (r > 0 && path_.starts_run(r)) {
      throw std::invalid_argument("DecoratedDyckPath: row " + std::to_string(r) +
                                  " starts a vertical run and cannot be decorated");
    }
  }
}

bool DecoratedDyckPath::is_decorated(int row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

int DecoratedDyckPath::decorated_area() const {
  int a = path_.area();
  for (int r : rows_) a -= path_.row_area(r);
  return a;
}

namespace {

void paths_rec(int n, std::vector<int>& prefix, std::vector<DyckPath>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(prefix);
    return;
  }
  for (int a = 0; a <= prefix.back() + 1; ++a) {
    prefix.push_back(a);
    paths_rec(n, prefix, out);
    prefix.pop_back();
  }
}

void subsets_rec(const std::vector<int>& pool, std::size_t from, int need, std::vector<int>& chosen,
                 std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(need) <= pool.size(); ++i) {
    chosen.push_back(pool[i]);
    subsets_rec(pool, i + 1, need - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_paths(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_paths: n must be positive");
  std::vector<DyckPath> out;
  std::vector<int> prefix{0};
  paths_rec(n, prefix, out);
  return out;
}

Partition lambda_of(const DyckPath& d) {
  std::vector<int> runs;
  for (int i = 1; i <= d.size(); ++i) {
    if (d.starts_run(i)) {
      runs.push_back(1);
    } else {
      ++runs.back();
    }
  }
  return Partition(std::move(runs));
}

TLaurent H_poly(const DyckPath& d, int j) {
  if (j < 0) throw std::invalid_argument("H_poly: negative w-degree");
  // coeffs[w-degree]
  std::vector<TLaurent> coeffs{TLaurent(TPoly{1}), TLaurent(TPoly{1})};
  for (int i = 2; i <= d.size(); ++i) {
    if (d.starts_run(i)) continue;
    TLaurent factor = TLaurent::monomial(1, -d.row_area(i));
    coeffs.emplace_back();
    for (std::size_t w = coeffs.size() - 1; w >= 1; --w) coeffs[w] += coeffs[w - 1] * factor;
  }
  if (static_cast<std::size_t>(j) >= coeffs.size()) return {};
  return coeffs[static_cast<std::size_t>(j)];
}

std::vector<DecoratedDyckPath> enumerate_decorated(int n, int k, const std::optional<Partition>& lambda) {
  if (k < 1 || k > n) throw std::invalid_argument("enumerate_decorated: need 1 <= k <= n");
  std::vector<DecoratedDyckPath> out;
  for (const auto& path : enumerate_paths(n)) {
    if (lambda && lambda_of(path) != *lambda) continue;
    std::vector<std::vector<int>> subsets;
    std::vector<int> chosen;
    subsets_rec(path.decorable_rows(), 0, n - k, chosen, subsets);
    for (auto& rows : subsets) out.emplace_back(path, std::move(rows));
  }
  return out;
}

}  // namespace deltaq
