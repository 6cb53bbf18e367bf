#include "deltaq/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace deltaq {

namespace {

using Point = std::pair<int, int>;  // (x, y)

// Lattice points of the path in order; step s goes from points[s] to
// points[s+1].
struct Walk {
  std::string steps;
  std::vector<Point> points;
  std::map<Point, std::size_t> index;

  explicit Walk(const DyckPath& p) : steps(p.steps()) {
    Point at{0, 0};
    points.push_back(at);
    for (char c : steps) {
      if (c == 'N') {
        ++at.second;
      } else {
        ++at.first;
      }
      points.push_back(at);
    }
    for (std::size_t s = 0; s < points.size(); ++s) index.emplace(points[s], s);
  }

  std::optional<std::size_t> find(Point p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  bool outgoing(std::size_t s, char c) const { return s < steps.size() && steps[s] == c; }
  bool incoming(std::size_t s, char c) const { return s > 0 && steps[s - 1] == c; }
};

// Step index of North step number `row` (1-based).
std::vector<std::size_t> north_step_indices(const Walk& w) {
  std::vector<std::size_t> out{0};  // placeholder for row 0
  for (std::size_t s = 0; s < w.steps.size(); ++s) {
    if (w.steps[s] == 'N') out.push_back(s);
  }
  return out;
}

}  // namespace

MSequence phi(const DecoratedDyckPath& d) {
  const DyckPath& path = d.path();
  const int n = path.size();
  const Walk w(path);
  const auto north = north_step_indices(w);

  std::map<std::size_t, std::pair<int, int>> labels;  // by step index
  for (int row = 1; row <= n; ++row) {
    const int a = path.row_area(row);
    if (path.starts_run(row)) {
      int len = 1;
      while (row + len <= n && !path.starts_run(row + len)) ++len;
      labels.emplace(north[static_cast<std::size_t>(row)], std::make_pair(a, len));
      continue;
    }
    if (d.is_decorated(row)) continue;
    Point p = w.points[north[static_cast<std::size_t>(row)]];
    std::optional<std::size_t> hit;
    while (p.first <= n && p.second <= n) {
      if (auto s = w.find(p); s && w.outgoing(*s, 'E')) {
        hit = s;
        break;
      }
      ++p.first;
      ++p.second;
    }
    if (!hit || !w.incoming(*hit, 'E')) {
      throw std::logic_error("phi: row " + std::to_string(row) + " has no East step on its diagonal");
    }
    if (!labels.emplace(*hit - 1, std::make_pair(a, 0)).second) {
      throw std::logic_error("phi: two labels land on the same East step");
    }
  }

  MSequence out;
  for (const auto& [step, pair] : labels) out.pairs.push_back(pair);
  if (!d.is_decorated(0)) out.pairs.emplace_back(0, 0);
  return out;
}

DecoratedDyckPath phi_inverse(const MSequence& s) {
  if (auto bad = m_violation(s)) throw std::invalid_argument("phi_inverse: " + *bad);

  std::vector<std::pair<int, int>> pairs = s.pairs;
  const bool origin_decorated = pairs.back() != std::make_pair(0, 0);
  if (!origin_decorated) pairs.pop_back();

  // Segments give the area sequence; zero pairs wait on the run after the
  // segment preceding them.
  std::vector<int> area;
  std::vector<std::vector<int>> pending;  // pending[j]: zero labels after segment j
  std::vector<int> segment_top_row;
  for (const auto& [a, b] : pairs) {
    if (b > 0) {
      for (int j = 0; j < b; ++j) area.push_back(a + j);
      segment_top_row.push_back(static_cast<int>(area.size()));
      pending.emplace_back();
    } else {
      if (pending.empty()) throw std::logic_error("phi_inverse: zero pair before the first segment");
      pending.back().push_back(a);
    }
  }
  const DyckPath path(area);
  const int n = path.size();
  const Walk w(path);

  std::vector<bool> labelled(static_cast<std::size_t>(n) + 1, false);
  for (int row = 1; row <= n; ++row) {
    if (path.starts_run(row)) labelled[static_cast<std::size_t>(row)] = true;
  }

  for (std::size_t j = 0; j < pending.size(); ++j) {
    const int y = segment_top_row[j];
    // the horizontal run at height y spans [run_start, run_end]
    const int run_start = (y - 1) - path.row_area(y);
    const int run_end = y < n ? y - path.row_area(y + 1) : n;
    int previous = run_start + 1;
    for (int r : pending[j]) {
      const int end_x = y - r;  // East step ending on diagonal r
      if (end_x <= run_start || end_x > run_end) {
        throw std::logic_error("phi_inverse: no East step ends on diagonal " + std::to_string(r) + " at height " +
                               std::to_string(y));
      }
      if (end_x < previous) throw std::logic_error("phi_inverse: two labels share an East step");
      previous = end_x + 1;

      Point p{end_x, y};
      std::optional<std::size_t> hit;
      while (p.first >= 0 && p.second >= 0) {
        if (auto st = w.find(p); st && w.incoming(*st, 'N')) {
          hit = st;
          break;
        }
        --p.first;
        --p.second;
      }
      if (!hit || !w.outgoing(*hit, 'N')) {
        throw std::logic_error("phi_inverse: label " + std::to_string(r) + " finds no North step below");
      }
      const int row = w.points[*hit].second + 1;
      if (labelled[static_cast<std::size_t>(row)] || path.row_area(row) != r) {
        throw std::logic_error("phi_inverse: label " + std::to_string(r) + " collides at row " + std::to_string(row));
      }
      labelled[static_cast<std::size_t>(row)] = true;
    }
  }

  std::vector<int> decorated;
  if (origin_decorated) decorated.push_back(0);
  for (int row = 1; row <= n; ++row) {
    if (!labelled[static_cast<std::size_t>(row)]) decorated.push_back(row);
  }
  return DecoratedDyckPath(path, std::move(decorated));
}

}  // namespace deltaq
