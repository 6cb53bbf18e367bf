#include "deltaq/tpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace deltaq {

namespace {

const Int kZero = 0;

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

TPoly primitive_part(const TPoly& p) {
  if (p.is_zero()) return p;
  Int c = p.content();
  std::vector<Int> out = p.coeffs();
  for (auto& x : out) x /= c;
  return TPoly(std::move(out));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
TPoly pseudo_remainder(TPoly r, const TPoly& b) {
  const Int& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    TPoly step = TPoly::monomial(r.leading(), r.degree() - b.degree()) * b;
    r *= lb;
    r -= step;
  }
  return r;
}

void write_term(std::ostream& os, const Int& c, int e, bool first) {
  Int mag = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (e == 0 || mag != 1) os << mag;
  if (e != 0) {
    os << 't';
    if (e != 1) os << '^' << e;
  }
}

}  // namespace

// ---------------------------------------------------------------- TPoly

TPoly::TPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

TPoly::TPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::constant(const Int& c) { return TPoly(std::vector<Int>{c}); }

TPoly TPoly::monomial(const Int& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("TPoly::monomial: negative exponent");
  std::vector<Int> v(static_cast<std::size_t>(exponent) + 1, Int(0));
  v.back() = c;
  return TPoly(std::move(v));
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int TPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return c_[static_cast<std::size_t>(d)];
}

const Int& TPoly::leading() const { return c_.empty() ? kZero : c_.back(); }

Int TPoly::eval(const Int& t) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly TPoly::compose_power(int r) const {
  if (r < 1) throw std::invalid_argument("TPoly::compose_power: power must be positive");
  if (is_zero()) return {};
  std::vector<Int> out(static_cast<std::size_t>(degree() * r) + 1, Int(0));
  for (std::size_t d = 0; d < c_.size(); ++d) out[d * static_cast<std::size_t>(r)] = c_[d];
  return TPoly(std::move(out));
}

Int TPoly::content() const {
  Int g = 0;
  for (const auto& c : c_) g = int_gcd(g, c);
  return g;
}

TPoly TPoly::operator-() const {
  TPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return TPoly(std::move(out));
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const Int& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

TPoly exact_quotient(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: inexact division");
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
  const Int& lb = b.leading();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    const Int& top = rem[static_cast<std::size_t>(d + b.degree())];
    if (top % lb != 0) throw std::domain_error("exact_quotient: inexact division");
    Int qd = top / lb;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[static_cast<std::size_t>(d + j)] -= qd * b.coeffs()[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(d)] = std::move(qd);
  }
  if (!TPoly(std::move(rem)).is_zero()) throw std::domain_error("exact_quotient: inexact division");
  return TPoly(std::move(q));
}

TPoly poly_gcd(const TPoly& a, const TPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Int c = int_gcd(a.content(), b.content());
  TPoly x = primitive_part(a);
  TPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    TPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  x *= c;
  if (x.leading() < 0) x = -x;
  return x;
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    const Int& c = p.coeffs()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    write_term(os, c, d, first);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------- TLaurent

TLaurent::TLaurent(TPoly p, int offset) : body_(std::move(p)), offset_(offset) { normalize(); }

TLaurent TLaurent::monomial(const Int& c, int exponent) {
  return TLaurent(TPoly::constant(c), exponent);
}

void TLaurent::normalize() {
  if (body_.is_zero()) {
    offset_ = 0;
    return;
  }
  const auto& c = body_.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    body_ = TPoly(std::vector<Int>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
    offset_ += static_cast<int>(low);
  }
}

Int TLaurent::coeff(int exponent) const { return body_.coeff(exponent - offset_); }

TPoly TLaurent::to_poly() const {
  if (!is_polynomial()) throw std::domain_error("TLaurent::to_poly: negative powers present");
  if (is_zero()) return {};
  return body_ * TPoly::monomial(1, offset_);
}

TLaurent TLaurent::shifted(int k) const {
  TLaurent out = *this;
  if (!out.is_zero()) out.offset_ += k;
  return out;
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int low = std::min(offset_, o.offset_);
  TPoly sum = body_ * TPoly::monomial(1, offset_ - low) + o.body_ * TPoly::monomial(1, o.offset_ - low);
  body_ = std::move(sum);
  offset_ = low;
  normalize();
  return *this;
}

TLaurent& TLaurent::operator*=(const TLaurent& o) {
  body_ *= o.body_;
  offset_ += o.offset_;
  normalize();
  return *this;
}

std::string to_string(const TLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= p.body().degree(); ++d) {
    const Int& c = p.body().coeffs()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    write_term(os, c, d + p.offset(), first);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TLaurent& p) { return os << to_string(p); }

// ---------------------------------------------------------------- TRat

TRat::TRat(TPoly num) : num_(std::move(num)), den_{1} {}

TRat::TRat(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

TRat TRat::from_rational(const Rational& q) {
  return TRat(TPoly::constant(boost::multiprecision::numerator(q)),
              TPoly::constant(boost::multiprecision::denominator(q)));
}

void TRat::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("TRat: zero denominator");
  if (num_.is_zero()) {
    den_ = TPoly{1};
    return;
  }
  TPoly g = poly_gcd(num_, den_);
  if (g != TPoly{1}) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

TPoly TRat::to_poly() const {
  if (!is_polynomial()) throw std::domain_error("TRat::to_poly: nontrivial denominator " + to_string(den_));
  return num_;
}

Rational TRat::constant_value() const {
  if (!is_constant()) throw std::domain_error("TRat::constant_value: not a constant");
  return Rational(num_.coeff(0), den_.coeff(0));
}

TRat TRat::operator-() const {
  TRat out = *this;
  out.num_ = -out.num_;
  return out;
}

TRat& TRat::operator+=(const TRat& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

TRat& TRat::operator-=(const TRat& o) { return *this += -o; }

TRat& TRat::operator*=(const TRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

TRat& TRat::operator/=(const TRat& o) {
  if (o.is_zero()) throw std::domain_error("TRat: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

TRat& TRat::operator*=(const Rational& q) {
  num_ *= boost::multiprecision::numerator(q);
  den_ *= boost::multiprecision::denominator(q);
  if (den_.is_zero()) throw std::domain_error("TRat: zero denominator");
  canonicalize();
  return *this;
}

std::string to_string(const TRat& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const TRat& r) { return os << to_string(r); }

// ---------------------------------------------------------------- TSeries

TSeries::TSeries(int order) {
  if (order < 0) throw std::invalid_argument("TSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

TSeries::TSeries(const TPoly& p, int order) : TSeries(order) {
  for (int d = 0; d <= std::min(order, p.degree()); ++d) c_[static_cast<std::size_t>(d)] = p.coeffs()[static_cast<std::size_t>(d)];
}

TSeries TSeries::from_rat(const TRat& r, int order) {
  const Int d0 = r.den().coeff(0);
  if (d0 == 0) throw std::domain_error("TSeries::from_rat: denominator vanishes at t = 0");
  TSeries out(order);
  for (int j = 0; j <= order; ++j) {
    Int acc = r.num().coeff(j);
    for (int i = 1; i <= std::min(j, r.den().degree()); ++i) acc -= r.den().coeff(i) * out.c_[static_cast<std::size_t>(j - i)];
    if (acc % d0 != 0) throw std::domain_error("TSeries::from_rat: expansion is not integral");
    out.c_[static_cast<std::size_t>(j)] = acc / d0;
  }
  return out;
}

bool TSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& c) { return c == 0; });
}

void TSeries::truncate(int order) {
  if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries& TSeries::operator+=(const TSeries& o) {
  truncate(o.order());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  truncate(o.order());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TSeries& TSeries::operator*=(const TSeries& o) {
  int n = std::min(order(), o.order());
  std::vector<Int> out(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= n; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      out[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  c_ = std::move(out);
  return *this;
}

TSeries& TSeries::operator*=(const Int& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

std::string to_string(const TSeries& s) {
  return to_string(s.truncated_poly()) + " + O(t^" + std::to_string(s.order() + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const TSeries& s) { return os << to_string(s); }

// ---------------------------------------------------------------- named values

TPoly t_analog(int m) {
  if (m < 0) throw std::invalid_argument("t_analog: negative argument");
  return TPoly(std::vector<Int>(static_cast<std::size_t>(m), Int(1)));
}

TPoly t_pochhammer(int k) {
  if (k < 0) throw std::invalid_argument("t_pochhammer: negative argument");
  TPoly out{1};
  for (int j = 1; j <= k; ++j) out *= TPoly{1} - TPoly::monomial(1, j);
  return out;
}

TSeries partition_gf_series(int r, int order) {
  if (r < 0) throw std::invalid_argument("partition_gf_series: negative bound");
  std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
  c[0] = 1;
  for (int part = 1; part <= r; ++part) {
    for (int s = part; s <= order; ++s) c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s - part)];
  }
  return TSeries(TPoly(std::move(c)), order);
}

TRat partition_gf_rat(int r) {
  if (r < 0) throw std::invalid_argument("partition_gf_rat: negative bound");
  return TRat(TPoly{1}, t_pochhammer(r));
}

}  // namespace deltaq
