#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/sequences.hpp"

namespace deltaq {

/// One row of a labelled diagram: a base row of row_len cells, the
/// partition drawn above it, and the label in each base cell (0 or a part
/// of lambda), left to right.
struct ColumnStack {
  int row_len = 1;
  Partition above;
  std::vector<int> labels;

  auto operator<=>(const ColumnStack&) const = default;
  bool operator==(const ColumnStack&) const = default;
};

/// A sequence of column stacks whose row lengths form a composition of
/// k+1, carrying lambda's parts as labels, at most one per cell.
///
/// The partition over the first stack must fit in row_len - 1 columns;
/// every other one in row_len columns. The weight is the total size of the
/// partitions plus, for every label, its value times the number of cells to
/// its left. The sign is (-1)^{(k+1) - number of stacks}.
struct LabeledDiagram {
  std::vector<ColumnStack> stacks;
  Partition lambda;

  int cells() const;
  std::vector<int> row_lengths() const;

  auto operator<=>(const LabeledDiagram&) const = default;
  bool operator==(const LabeledDiagram&) const = default;
};

/// Describes the first broken invariant, or nullopt for a valid diagram.
std::optional<std::string> diagram_violation(const LabeledDiagram& t);

int weight(const LabeledDiagram& t);
int sign(const LabeledDiagram& t);

/// Whether stack i (row length 1, label c, column of height h) merges into
/// stack i+1: c + h must not exceed the number of full-width rows above
/// stack i+1. False whenever stack i is wider than one cell. Throws
/// std::out_of_range if stack i+1 does not exist.
bool can_combine(const LabeledDiagram& t, std::size_t i);

/// Splits stack i (row_len r > 1, last label c) into a one-cell stack
/// carrying column r of its partition over label c, followed by a stack of
/// width r-1 holding the rest plus c new full-width rows. Throws
/// std::invalid_argument when row_len == 1, std::out_of_range for a bad
/// index.
LabeledDiagram split(const LabeledDiagram& t, std::size_t i);

/// Inverse of split. Throws std::invalid_argument unless can_combine(t, i).
LabeledDiagram combine(const LabeledDiagram& t, std::size_t i);

/// The sign-reversing involution: scanning left to right, split the first
/// stack wider than one cell or combine the first combinable one-cell stack
/// with its successor, whichever comes first. nullopt marks a fixed point.
std::optional<LabeledDiagram> involution_partner(const LabeledDiagram& t);

/// Every diagram over all compositions of k+1 with weight exactly d.
std::vector<LabeledDiagram> enumerate_degree(int k, const Partition& lambda, int d);

/// Reads a fixed point as the pair sequence (|partition_i|, label_i).
/// Throws std::invalid_argument unless every stack has row_len 1.
MSequence fixed_to_msequence(const LabeledDiagram& t);

}  // namespace deltaq
