#include "deltaq/symfunc.hpp"

#include <stdexcept>
#include <string>

namespace deltaq {

namespace {

using Matrix = std::vector<std::vector<Rational>>;
using PExpansion = std::map<Partition, Rational>;

constexpr int kBasisCount = 6;

int sign_of(int n, const Partition& rho) { return (n - rho.length()) % 2 == 0 ? 1 : -1; }

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

PExpansion multiply(const PExpansion& a, const PExpansion& b) {
  PExpansion out;
  for (const auto& [ra, ca] : a) {
    for (const auto& [rb, cb] : b) out[merge(ra, rb)] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// h_r (signed = false) or e_r (signed = true) in power sums.
PExpansion single_row(int r, bool signed_sum) {
  PExpansion out;
  for (const auto& rho : partitions_of(r)) {
    Rational c(Int(1), rho.z());
    if (signed_sum && sign_of(r, rho) < 0) c = -c;
    out[rho] = c;
  }
  return out;
}

PExpansion product_of_rows(const Partition& lambda, const std::vector<PExpansion>& rows) {
  PExpansion out{{Partition{}, Rational(1)}};
  for (int part : lambda.parts()) out = multiply(out, rows[static_cast<std::size_t>(part)]);
  return out;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}) as a signed sum of h products.
void jacobi_trudi(const Partition& lambda, int row, unsigned used, int inversions,
                  std::vector<int>& chosen, std::map<Partition, Int>& out) {
  const int l = lambda.length();
  if (row == l) {
    out[Partition(chosen)] += (inversions % 2 == 0) ? 1 : -1;
    return;
  }
  for (int col = 0; col < l; ++col) {
    if (used & (1u << col)) continue;
    int index = lambda[static_cast<std::size_t>(row)] - row + col;
    if (index < 0) continue;
    int extra = 0;
    for (int c = col + 1; c < l; ++c) {
      if (used & (1u << c)) ++extra;
    }
    chosen.push_back(index);
    jacobi_trudi(lambda, row + 1, used | (1u << col), inversions + extra, chosen, out);
    chosen.pop_back();
  }
}

// Nonnegative integer matrices with row sums `rows` (from index r on) and
// the given remaining column sums.
Int count_matrices(const std::vector<int>& rows, std::size_t r, std::vector<int>& cols) {
  if (r == rows.size()) {
    for (int c : cols) {
      if (c != 0) return 0;
    }
    return 1;
  }
  Int total = 0;
  // distribute rows[r] over the columns
  auto rec = [&](auto&& self, std::size_t col, int left) -> void {
    if (col + 1 == cols.size()) {
      if (left <= cols[col]) {
        cols[col] -= left;
        total += count_matrices(rows, r + 1, cols);
        cols[col] += left;
      }
      return;
    }
    for (int take = 0; take <= std::min(left, cols[col]); ++take) {
      cols[col] -= take;
      self(self, col + 1, left - take);
      cols[col] += take;
    }
  };
  if (cols.empty()) return rows[r] == 0 ? count_matrices(rows, r + 1, cols) : Int(0);
  rec(rec, 0, rows[r]);
  return total;
}

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("symfunc: singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[col][j] != 0) a[r][j] -= factor * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

std::size_t slot(Basis b) { return static_cast<std::size_t>(b); }

}  // namespace

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::m: return "m";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::f: return "f";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::e, Basis::h, Basis::m, Basis::p, Basis::s, Basis::f}) {
    if (basis_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- SymFuncExpr

SymFuncExpr SymFuncExpr::zero(Basis b, int degree) { return SymFuncExpr{degree, b, {}}; }

SymFuncExpr SymFuncExpr::element(Basis b, const Partition& lambda, const TRat& coeff) {
  SymFuncExpr out = zero(b, lambda.size());
  out.add(lambda, coeff);
  return out;
}

void SymFuncExpr::add(const Partition& lambda, const TRat& c) {
  if (lambda.size() != degree) {
    throw std::invalid_argument("SymFuncExpr: partition " + to_string(lambda) +
                                " does not have size " + std::to_string(degree));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

TRat SymFuncExpr::coeff(const Partition& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? TRat() : it->second;
}

SymFuncExpr& SymFuncExpr::operator+=(const SymFuncExpr& o) {
  if (o.basis != basis || o.degree != degree) {
    throw std::invalid_argument("SymFuncExpr: addition needs matching basis and degree");
  }
  for (const auto& [lambda, c] : o.terms) add(lambda, c);
  return *this;
}

SymFuncExpr& SymFuncExpr::operator*=(const TRat& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms) coeff *= c;
  return *this;
}

// ---------------------------------------------------------------- SymEngine

struct SymEngine::Tables {
  int degree = 0;
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  // to_p[b][i][j]: coefficient of p_{parts[j]} in b_{parts[i]}; from_p is its inverse.
  Matrix to_p[kBasisCount];
  Matrix from_p[kBasisCount];
};

SymEngine::SymEngine(int degree_bound) : degree_bound_(degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("SymEngine: negative degree bound");
}

std::shared_ptr<const SymEngine::Tables> SymEngine::tables(int n) const {
  if (n < 0 || n > degree_bound_) {
    throw std::out_of_range("symmetric function degree " + std::to_string(n) +
                            " exceeds the engine bound " + std::to_string(degree_bound_));
  }
  std::lock_guard lock(mu_);
  if (auto it = cache_.find(n); it != cache_.end()) return it->second;

  auto t = std::make_shared<Tables>();
  t->degree = n;
  t->parts = partitions_of(n);
  const std::size_t size = t->parts.size();
  for (std::size_t i = 0; i < size; ++i) t->index[t->parts[i]] = i;

  std::vector<PExpansion> h_rows, e_rows;
  for (int r = 0; r <= n; ++r) {
    h_rows.push_back(single_row(r, false));
    e_rows.push_back(single_row(r, true));
  }
  auto dense = [&](const PExpansion& x) {
    std::vector<Rational> row(size, Rational(0));
    for (const auto& [rho, c] : x) row[t->index.at(rho)] = c;
    return row;
  };

  for (const auto& lambda : t->parts) {
    PExpansion h = product_of_rows(lambda, h_rows);
    t->to_p[slot(Basis::h)].push_back(dense(h));
    t->to_p[slot(Basis::e)].push_back(dense(product_of_rows(lambda, e_rows)));

    PExpansion p{{lambda, Rational(1)}};
    t->to_p[slot(Basis::p)].push_back(dense(p));

    std::map<Partition, Int> jt;
    std::vector<int> chosen;
    jacobi_trudi(lambda, 0, 0u, 0, chosen, jt);
    PExpansion s;
    for (const auto& [hmu, c] : jt) {
      if (c == 0) continue;
      for (const auto& [rho, v] : product_of_rows(hmu, h_rows)) s[rho] += v * Rational(c);
    }
    std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
    t->to_p[slot(Basis::s)].push_back(dense(s));
  }

  // h_mu = sum_lambda N(mu, lambda) m_lambda, N counting integer matrices
  // with row sums mu and column sums lambda.
  Matrix h_in_m(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      std::vector<int> cols = t->parts[j].parts();
      h_in_m[i][j] = Rational(count_matrices(t->parts[i].parts(), 0, cols));
    }
  }
  Matrix m_in_h = invert(h_in_m);
  // m_i = sum_j m_in_h[i][j] h_j
  t->to_p[slot(Basis::m)] = multiply(m_in_h, t->to_p[slot(Basis::h)]);
  t->to_p[slot(Basis::f)] = t->to_p[slot(Basis::m)];
  for (auto& row : t->to_p[slot(Basis::f)]) {
    for (std::size_t j = 0; j < size; ++j) {
      if (sign_of(n, t->parts[j]) < 0) row[j] = -row[j];
    }
  }

  for (int b = 0; b < kBasisCount; ++b) t->from_p[b] = invert(t->to_p[b]);

  cache_.emplace(n, t);
  return t;
}

std::vector<TRat> SymEngine::power_sum_coeffs(const SymFuncExpr& expr, const Tables& t) const {
  std::vector<TRat> pc(t.parts.size());
  for (const auto& [lambda, c] : expr.terms) {
    auto it = t.index.find(lambda);
    if (it == t.index.end()) {
      throw std::invalid_argument("SymFuncExpr: partition " + to_string(lambda) + " has wrong size");
    }
    const auto& row = t.to_p[slot(expr.basis)][it->second];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) pc[j] += c * row[j];
    }
  }
  return pc;
}

SymFuncExpr SymEngine::convert(const SymFuncExpr& expr, Basis target) const {
  auto t = tables(expr.degree);
  if (expr.basis == target) return expr;
  std::vector<TRat> pc = power_sum_coeffs(expr, *t);
  SymFuncExpr out = SymFuncExpr::zero(target, expr.degree);
  const std::size_t size = t->parts.size();
  if (target == Basis::p) {
    for (std::size_t j = 0; j < size; ++j) out.add(t->parts[j], pc[j]);
    return out;
  }
  const Matrix& inv = t->from_p[slot(target)];
  for (std::size_t j = 0; j < size; ++j) {
    TRat acc;
    for (std::size_t r = 0; r < size; ++r) {
      if (!pc[r].is_zero() && inv[r][j] != 0) acc += pc[r] * inv[r][j];
    }
    out.add(t->parts[j], acc);
  }
  return out;
}

TRat SymEngine::hall_inner(const SymFuncExpr& a, const SymFuncExpr& b) const {
  if (a.degree != b.degree) {
    throw std::invalid_argument("hall_inner: degree mismatch " + std::to_string(a.degree) +
                                " vs " + std::to_string(b.degree));
  }
  auto t = tables(a.degree);
  std::vector<TRat> pa = power_sum_coeffs(a, *t);
  std::vector<TRat> pb = power_sum_coeffs(b, *t);
  TRat acc;
  for (std::size_t j = 0; j < pa.size(); ++j) {
    if (pa[j].is_zero() || pb[j].is_zero()) continue;
    acc += pa[j] * pb[j] * Rational(t->parts[j].z());
  }
  return acc;
}

SymFuncExpr SymEngine::omega(const SymFuncExpr& expr) const {
  SymFuncExpr out = SymFuncExpr::zero(expr.basis, expr.degree);
  switch (expr.basis) {
    case Basis::e: out.basis = Basis::h; break;
    case Basis::h: out.basis = Basis::e; break;
    case Basis::m: out.basis = Basis::f; break;
    case Basis::f: out.basis = Basis::m; break;
    case Basis::s:
    case Basis::p: break;
  }
  for (const auto& [lambda, c] : expr.terms) {
    if (expr.basis == Basis::s) {
      out.add(lambda.conjugate(), c);
    } else if (expr.basis == Basis::p && sign_of(expr.degree, lambda) < 0) {
      out.add(lambda, -c);
    } else {
      out.add(lambda, c);
    }
  }
  return out;
}

SymFuncExpr SymEngine::plethysm_geometric(const SymFuncExpr& expr) const {
  SymFuncExpr p = convert(expr, Basis::p);
  for (auto& [rho, c] : p.terms) {
    TPoly den{1};
    for (int r : rho.parts()) den *= TPoly{1} - TPoly::monomial(1, r);
    c /= TRat(den);
  }
  return p;
}

TRat SymEngine::plethystic_eval(const SymFuncExpr& expr, const TPoly& alphabet) const {
  SymFuncExpr p = convert(expr, Basis::p);
  TRat acc;
  for (const auto& [rho, c] : p.terms) {
    TPoly value{1};
    for (int r : rho.parts()) value *= alphabet.compose_power(r);
    acc += c * TRat(value);
  }
  return acc;
}

std::vector<Monomial> SymEngine::monomial_expansion(const SymFuncExpr& expr, int nvars) const {
  SymFuncExpr m = convert(expr, Basis::m);
  std::vector<Monomial> out;
  for (const auto& [lambda, c] : m.terms) {
    if (lambda.length() > nvars) continue;
    Rational coeff = c.constant_value();
    for (auto& exps : padded_rearrangements(lambda, nvars)) out.push_back(Monomial{coeff, std::move(exps)});
  }
  return out;
}

std::map<Partition, Rational> SymEngine::to_power_sums(Basis b, const Partition& lambda) const {
  auto t = tables(lambda.size());
  const auto& row = t->to_p[slot(b)][t->index.at(lambda)];
  std::map<Partition, Rational> out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) out[t->parts[j]] = row[j];
  }
  return out;
}

const SymEngine& default_engine() {
  static const SymEngine engine;
  return engine;
}

}  // namespace deltaq
