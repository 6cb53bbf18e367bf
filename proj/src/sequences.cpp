#include "deltaq/sequences.hpp"

#include <stdexcept>

namespace deltaq {

namespace {

void a_vectors_rec(std::span<const int> b, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (prefix.size() == b.size()) {
    out.push_back(prefix);
    return;
  }
  const std::size_t i = prefix.size() - 1;
  const int bound = prefix[i] + b[i];  // a_{i+1} < a_i + b_i
  for (int a = 0; a < bound; ++a) {
    prefix.push_back(a);
    a_vectors_rec(b, prefix, out);
    prefix.pop_back();
  }
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

void add_monomial(std::vector<Int>& acc, int exponent) {
  if (acc.size() <= static_cast<std::size_t>(exponent)) acc.resize(static_cast<std::size_t>(exponent) + 1, Int(0));
  acc[static_cast<std::size_t>(exponent)] += 1;
}

void require_k(int k, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be at least 1");
}

}  // namespace

// ---------------------------------------------------------------- M-sequences

int MSequence::rho() const {
  int s = 0;
  for (const auto& [a, b] : pairs) s += a;
  return s;
}

Partition MSequence::lambda() const {
  std::vector<int> parts;
  for (const auto& [a, b] : pairs) parts.push_back(b);
  return Partition(std::move(parts));
}

std::optional<std::string> m_violation(const MSequence& s) {
  if (s.pairs.size() < 2) return "a sequence needs at least two pairs";
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (s.pairs[i].first < 0 || s.pairs[i].second < 0) {
      return "pair " + std::to_string(i + 1) + " has a negative entry";
    }
  }
  if (s.pairs[0].first != 0) return "a_1 = " + std::to_string(s.pairs[0].first) + " is not 0";
  for (std::size_t i = 0; i + 1 < s.pairs.size(); ++i) {
    const auto [a, b] = s.pairs[i];
    const int next = s.pairs[i + 1].first;
    if (!(next < a + b)) {
      return "a_" + std::to_string(i + 2) + " < a_" + std::to_string(i + 1) + " + b_" +
             std::to_string(i + 1) + " fails: " + std::to_string(next) + " >= " + std::to_string(a) +
             " + " + std::to_string(b);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> enumerate_a_vectors(std::span<const int> b) {
  std::vector<std::vector<int>> out;
  if (b.empty()) return out;
  std::vector<int> prefix{0};
  a_vectors_rec(b, prefix, out);
  return out;
}

std::vector<MSequence> enumerate_M(const Partition& lambda, int k) {
  require_k(k, "enumerate_M");
  std::vector<MSequence> out;
  if (lambda.length() > k + 1) return out;
  for (const auto& b : padded_rearrangements(lambda, k + 1)) {
    for (const auto& a : enumerate_a_vectors(b)) {
      MSequence s;
      for (std::size_t i = 0; i < b.size(); ++i) s.pairs.emplace_back(a[i], b[i]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

TPoly M_polynomial(const Partition& lambda, int k) {
  std::vector<Int> acc;
  for (const auto& s : enumerate_M(lambda, k)) add_monomial(acc, s.rho());
  return TPoly(std::move(acc));
}

TRat generic_F_sum(std::span<const Monomial> monomials, int k) {
  require_k(k, "generic_F_sum");
  std::vector<Rational> acc;
  for (const auto& mono : monomials) {
    if (static_cast<int>(mono.exponents.size()) != k + 1) {
      throw std::invalid_argument("generic_F_sum: monomial has " + std::to_string(mono.exponents.size()) +
                                  " exponents, expected " + std::to_string(k + 1));
    }
    // by_last[a]: generating polynomial of admissible prefixes ending in a.
    std::vector<TPoly> by_last{TPoly{1}};
    for (int i = 0; i < k; ++i) {
      std::vector<TPoly> next;
      for (std::size_t a = 0; a < by_last.size(); ++a) {
        if (by_last[a].is_zero()) continue;
        const int bound = static_cast<int>(a) + mono.exponents[static_cast<std::size_t>(i)];
        if (static_cast<int>(next.size()) < bound) next.resize(static_cast<std::size_t>(bound));
        for (int na = 0; na < bound; ++na) next[static_cast<std::size_t>(na)] += by_last[a] * TPoly::monomial(1, na);
      }
      by_last = std::move(next);
    }
    TPoly total;
    for (const auto& p : by_last) total += p;
    if (acc.size() < total.coeffs().size()) acc.resize(total.coeffs().size(), Rational(0));
    for (std::size_t d = 0; d < total.coeffs().size(); ++d) acc[d] += mono.coeff * Rational(total.coeffs()[d]);
  }
  Int common = 1;
  for (const auto& c : acc) common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(c));
  std::vector<Int> num;
  for (const auto& c : acc) num.push_back(boost::multiprecision::numerator(c * Rational(common)));
  return TRat(TPoly(std::move(num)), TPoly::constant(common));
}

// ---------------------------------------------------------------- ordered set partitions

int OSPSequence::rho() const {
  int s = 0;
  for (const auto& [a, block] : pairs) s += a;
  return s;
}

std::vector<OSPSequence> enumerate_P(int n, int k) {
  require_k(k, "enumerate_P");
  if (n < 0) throw std::invalid_argument("enumerate_P: negative n");
  std::vector<OSPSequence> out;
  const int blocks = k + 1;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
    for (int e = 0; e < n; ++e) parts[static_cast<std::size_t>(assign[static_cast<std::size_t>(e)])].push_back(e + 1);
    std::vector<int> sizes;
    for (const auto& blk : parts) sizes.push_back(static_cast<int>(blk.size()));
    for (const auto& a : enumerate_a_vectors(sizes)) {
      OSPSequence s;
      for (std::size_t i = 0; i < parts.size(); ++i) s.pairs.emplace_back(a[i], parts[i]);
      out.push_back(std::move(s));
    }
    // advance the assignment odometer, last element fastest
    int pos = n - 1;
    while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == blocks - 1) assign[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++assign[static_cast<std::size_t>(pos)];
  }
  return out;
}

TPoly P_polynomial(int n, int k) {
  std::vector<Int> acc;
  for (const auto& s : enumerate_P(n, k)) add_monomial(acc, s.rho());
  return TPoly(std::move(acc));
}

// ---------------------------------------------------------------- SSYT sequences

int SSYTSequence::rho() const { return sum(avector); }

namespace {

void ssyt_rec(const Partition& shape, int max_entry, std::size_t row, std::size_t col,
              std::vector<std::vector<int>>& t, std::vector<std::vector<std::vector<int>>>& out) {
  if (row == static_cast<std::size_t>(shape.length())) {
    out.push_back(t);
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    ssyt_rec(shape, max_entry, row + 1, 0, t, out);
    return;
  }
  int low = 1;
  if (col > 0) low = std::max(low, t[row][col - 1]);
  if (row > 0) low = std::max(low, t[row - 1][col] + 1);
  for (int v = low; v <= max_entry; ++v) {
    t[row][col] = v;
    ssyt_rec(shape, max_entry, row, col + 1, t, out);
  }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> enumerate_ssyt(const Partition& lambda, int max_entry) {
  std::vector<std::vector<int>> t;
  for (int part : lambda.parts()) t.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<std::vector<std::vector<int>>> out;
  ssyt_rec(lambda, max_entry, 0, 0, t, out);
  return out;
}

std::vector<int> content_of(const std::vector<std::vector<int>>& tableau, int max_entry) {
  std::vector<int> c(static_cast<std::size_t>(max_entry), 0);
  for (const auto& row : tableau) {
    for (int v : row) {
      if (v < 1 || v > max_entry) throw std::invalid_argument("content_of: entry out of range");
      ++c[static_cast<std::size_t>(v - 1)];
    }
  }
  return c;
}

std::vector<SSYTSequence> enumerate_S(const Partition& lambda, int k) {
  require_k(k, "enumerate_S");
  std::vector<SSYTSequence> out;
  for (const auto& t : enumerate_ssyt(lambda, k + 1)) {
    for (auto& a : enumerate_a_vectors(content_of(t, k + 1))) out.push_back(SSYTSequence{t, std::move(a)});
  }
  return out;
}

TPoly S_polynomial(const Partition& lambda, int k) {
  std::vector<Int> acc;
  for (const auto& s : enumerate_S(lambda, k)) add_monomial(acc, s.rho());
  return TPoly(std::move(acc));
}

}  // namespace deltaq
