#include "deltaq/partition.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace deltaq {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  for (int p : parts_) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 1; j <= largest(); ++j) {
    int height = 0;
    for (int p : parts_) {
      if (p >= j) ++height;
    }
    cols.push_back(height);
  }
  return Partition(std::move(cols));
}

int Partition::n_statistic() const {
  int s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
  return s;
}

Int Partition::z() const {
  Int z = 1;
  for (int p : distinct_parts()) {
    int m = multiplicity(p);
    for (int j = 1; j <= m; ++j) z *= Int(p) * j;
  }
  return z;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(remaining, cap); first >= 1; --first) {
    prefix.push_back(first);
    partitions_rec(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

void compositions_rec(int remaining, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = remaining; first >= 1; --first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_with_max_part(n, n); }

std::vector<Partition> partitions_with_max_part(int n, int max_part) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, std::max(max_part, 0), prefix, out);
  return out;
}

Int rearrangement_count(const Partition& mu) {
  Int count = 1;
  for (int j = 2; j <= mu.length(); ++j) count *= j;
  for (int p : mu.distinct_parts()) {
    for (int j = 2; j <= mu.multiplicity(p); ++j) count /= j;
  }
  return count;
}

std::vector<std::vector<int>> padded_rearrangements(const Partition& lambda, int m) {
  if (lambda.length() > m) {
    throw std::invalid_argument("padded_rearrangements: partition " + to_string(lambda) +
                                " has more than " + std::to_string(m) + " parts");
  }
  std::vector<int> word = lambda.parts();
  word.resize(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(word);
  } while (std::prev_permutation(word.begin(), word.end()));
  return out;
}

Partition remove_part(const Partition& mu, int i) {
  std::vector<int> parts = mu.parts();
  auto it = std::find(parts.begin(), parts.end(), i);
  if (i <= 0 || it == parts.end()) {
    throw std::invalid_argument("remove_part: " + std::to_string(i) + " is not a part of " +
                                to_string(mu));
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

std::vector<std::vector<int>> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative size");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

}  // namespace deltaq
