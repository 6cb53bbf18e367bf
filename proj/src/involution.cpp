#include "deltaq/involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltaq {

int LabeledDiagram::cells() const {
  int c = 0;
  for (const auto& s : stacks) c += s.row_len;
  return c;
}

std::vector<int> LabeledDiagram::row_lengths() const {
  std::vector<int> out;
  for (const auto& s : stacks) out.push_back(s.row_len);
  return out;
}

std::optional<std::string> diagram_violation(const LabeledDiagram& t) {
  if (t.stacks.empty()) return "diagram has no stacks";
  std::vector<int> labels;
  for (std::size_t i = 0; i < t.stacks.size(); ++i) {
    const auto& s = t.stacks[i];
    const std::string where = "stack " + std::to_string(i + 1);
    if (s.row_len < 1) return where + ": row length must be positive";
    if (static_cast<int>(s.labels.size()) != s.row_len) return where + ": label count differs from row length";
    const int width = i == 0 ? s.row_len - 1 : s.row_len;
    if (s.above.largest() > width) {
      return where + ": partition " + to_string(s.above) + " wider than " + std::to_string(width);
    }
    for (int v : s.labels) {
      if (v < 0) return where + ": negative label";
      if (v > 0) labels.push_back(v);
    }
  }
  if (Partition(labels) != t.lambda) {
    return "labels " + to_string(Partition(labels)) + " do not match lambda " + to_string(t.lambda);
  }
  return std::nullopt;
}

int weight(const LabeledDiagram& t) {
  int w = 0;
  for (const auto& s : t.stacks) {
    w += s.above.size();
    for (std::size_t j = 0; j < s.labels.size(); ++j) w += static_cast<int>(j) * s.labels[j];
  }
  return w;
}

int sign(const LabeledDiagram& t) {
  return (t.cells() - static_cast<int>(t.stacks.size())) % 2 == 0 ? 1 : -1;
}

bool can_combine(const LabeledDiagram& t, std::size_t i) {
  if (i + 1 >= t.stacks.size()) throw std::out_of_range("can_combine: stack index has no successor");
  const auto& left = t.stacks[i];
  const auto& right = t.stacks[i + 1];
  if (left.row_len != 1) return false;
  const int column = left.above.size();
  if (i == 0 && column > 0) return false;  // merged first stack must leave its last column empty
  return left.labels[0] + column <= right.above.multiplicity(right.row_len);
}

LabeledDiagram split(const LabeledDiagram& t, std::size_t i) {
  if (i >= t.stacks.size()) throw std::out_of_range("split: stack index out of range");
  const auto& s = t.stacks[i];
  const int r = s.row_len;
  if (r < 2) throw std::invalid_argument("split: row length must exceed 1");
  const int c = s.labels.back();

  ColumnStack column;
  column.row_len = 1;
  column.above = Partition(std::vector<int>(static_cast<std::size_t>(s.above.multiplicity(r)), 1));
  column.labels = {c};

  ColumnStack rest;
  rest.row_len = r - 1;
  std::vector<int> parts;
  for (int p : s.above.parts()) parts.push_back(std::min(p, r - 1));
  parts.insert(parts.end(), static_cast<std::size_t>(c), r - 1);
  rest.above = Partition(std::move(parts));
  rest.labels.assign(s.labels.begin(), s.labels.end() - 1);

  LabeledDiagram out = t;
  out.stacks[i] = std::move(column);
  out.stacks.insert(out.stacks.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(rest));
  return out;
}

LabeledDiagram combine(const LabeledDiagram& t, std::size_t i) {
  if (!can_combine(t, i)) throw std::invalid_argument("combine: stacks cannot be combined");
  const auto& left = t.stacks[i];
  const auto& right = t.stacks[i + 1];
  const int c = left.labels[0];
  const int height = left.above.size();
  const int s = right.row_len;

  // drop c full-width rows, then widen the next `height` full rows by one
  std::vector<int> parts = right.above.parts();
  parts.erase(parts.begin(), parts.begin() + c);
  for (int j = 0; j < height; ++j) parts[static_cast<std::size_t>(j)] = s + 1;

  ColumnStack merged;
  merged.row_len = s + 1;
  merged.above = Partition(std::move(parts));
  merged.labels = right.labels;
  merged.labels.push_back(c);

  LabeledDiagram out = t;
  out.stacks[i] = std::move(merged);
  out.stacks.erase(out.stacks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return out;
}

std::optional<LabeledDiagram> involution_partner(const LabeledDiagram& t) {
  for (std::size_t i = 0; i < t.stacks.size(); ++i) {
    if (t.stacks[i].row_len > 1) return split(t, i);
    if (i + 1 < t.stacks.size() && can_combine(t, i)) return combine(t, i);
  }
  return std::nullopt;
}

namespace {

struct DegreeEnumerator {
  const Partition& lambda;
  std::vector<LabeledDiagram>& out;

  void distribute(LabeledDiagram& t, std::size_t stack, int remaining) {
    if (stack == t.stacks.size()) {
      if (remaining == 0) out.push_back(t);
      return;
    }
    const int width = stack == 0 ? t.stacks[0].row_len - 1 : t.stacks[stack].row_len;
    const bool last = stack + 1 == t.stacks.size();
    for (int size = last ? remaining : 0; size <= remaining; ++size) {
      for (const auto& nu : partitions_with_max_part(size, width)) {
        t.stacks[stack].above = nu;
        distribute(t, stack + 1, remaining - size);
      }
    }
    t.stacks[stack].above = Partition{};
  }
};

}  // namespace

std::vector<LabeledDiagram> enumerate_degree(int k, const Partition& lambda, int d) {
  if (k < 1) throw std::invalid_argument("enumerate_degree: k must be at least 1");
  if (d < 0) throw std::invalid_argument("enumerate_degree: negative degree");
  std::vector<LabeledDiagram> out;
  const int m = k + 1;
  if (lambda.length() > m) return out;
  const auto fillings = padded_rearrangements(lambda, m);
  DegreeEnumerator gen{lambda, out};
  for (const auto& comp : compositions_of(m)) {
    for (const auto& filling : fillings) {
      LabeledDiagram t;
      t.lambda = lambda;
      std::size_t cell = 0;
      for (int r : comp) {
        ColumnStack s;
        s.row_len = r;
        s.labels.assign(filling.begin() + static_cast<std::ptrdiff_t>(cell),
                        filling.begin() + static_cast<std::ptrdiff_t>(cell) + r);
        cell += static_cast<std::size_t>(r);
        t.stacks.push_back(std::move(s));
      }
      const int contribution = weight(t);
      if (contribution > d) continue;
      gen.distribute(t, 0, d - contribution);
    }
  }
  return out;
}

MSequence fixed_to_msequence(const LabeledDiagram& t) {
  MSequence s;
  for (const auto& st : t.stacks) {
    if (st.row_len != 1) throw std::invalid_argument("fixed_to_msequence: every row length must be 1");
    s.pairs.emplace_back(st.above.size(), st.labels[0]);
  }
  return s;
}

}  // namespace deltaq
