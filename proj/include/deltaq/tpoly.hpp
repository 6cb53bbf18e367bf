#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "deltaq/integer.hpp"

namespace deltaq {

/// Polynomial in t with arbitrary-precision integer coefficients.
/// coeffs()[d] is the coefficient of t^d; trailing zeros are never stored,
/// so the zero polynomial has no coefficients and degree -1.
class TPoly {
 public:
  TPoly() = default;
  TPoly(std::initializer_list<long long> coeffs);
  explicit TPoly(std::vector<Int> coeffs);

  static TPoly constant(const Int& c);
  static TPoly monomial(const Int& c, int exponent);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int d) const;
  const Int& leading() const;

  Int eval(const Int& t) const;
  /// p(t^r).
  TPoly compose_power(int r) const;
  /// gcd of the coefficients, nonnegative.
  Int content() const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Int& c);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const Int& c) { return a *= c; }
  friend TPoly operator*(const Int& c, TPoly a) { return a *= c; }
  bool operator==(const TPoly& o) const = default;

 private:
  void trim();
  std::vector<Int> c_;
};

/// a / b, required to be exact over the integers; throws std::domain_error
/// otherwise (including b == 0).
TPoly exact_quotient(const TPoly& a, const TPoly& b);

/// Greatest common divisor in Z[t]: primitive-content gcd times the integer
/// gcd of the contents, normalized to a positive leading coefficient.
TPoly poly_gcd(const TPoly& a, const TPoly& b);

std::string to_string(const TPoly& p);
std::ostream& operator<<(std::ostream& os, const TPoly& p);

/// Laurent polynomial t^offset * (c_0 + c_1 t + ...), with c_0 != 0 unless
/// the value is zero.
class TLaurent {
 public:
  TLaurent() = default;
  explicit TLaurent(TPoly p, int offset = 0);
  static TLaurent monomial(const Int& c, int exponent);

  bool is_zero() const { return body_.is_zero(); }
  int offset() const { return offset_; }
  const TPoly& body() const { return body_; }
  int max_exponent() const { return offset_ + body_.degree(); }
  Int coeff(int exponent) const;

  bool is_polynomial() const { return is_zero() || offset_ >= 0; }
  /// Throws std::domain_error when negative powers are present.
  TPoly to_poly() const;
  /// Multiplies by t^k.
  TLaurent shifted(int k) const;

  TLaurent& operator+=(const TLaurent& o);
  TLaurent& operator*=(const TLaurent& o);
  friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
  friend TLaurent operator*(TLaurent a, const TLaurent& b) { return a *= b; }
  bool operator==(const TLaurent& o) const = default;

 private:
  void normalize();
  TPoly body_;
  int offset_ = 0;
};

std::string to_string(const TLaurent& p);
std::ostream& operator<<(std::ostream& os, const TLaurent& p);

/// Rational function num/den in t, kept reduced: gcd(num, den) = 1 in Z[t]
/// and den has a positive leading coefficient. Structural equality is
/// therefore mathematical equality.
class TRat {
 public:
  TRat() : den_{1} {}
  TRat(TPoly num);  // NOLINT(google-explicit-constructor)
  TRat(TPoly num, TPoly den);
  static TRat from_rational(const Rational& q);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == TPoly{1}; }
  /// Throws std::domain_error unless the denominator is 1.
  TPoly to_poly() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Throws std::domain_error unless is_constant().
  Rational constant_value() const;

  TRat operator-() const;
  TRat& operator+=(const TRat& o);
  TRat& operator-=(const TRat& o);
  TRat& operator*=(const TRat& o);
  TRat& operator/=(const TRat& o);
  TRat& operator*=(const Rational& q);
  friend TRat operator+(TRat a, const TRat& b) { return a += b; }
  friend TRat operator-(TRat a, const TRat& b) { return a -= b; }
  friend TRat operator*(TRat a, const TRat& b) { return a *= b; }
  friend TRat operator/(TRat a, const TRat& b) { return a /= b; }
  friend TRat operator*(TRat a, const Rational& q) { return a *= q; }
  bool operator==(const TRat& o) const = default;

 private:
  void canonicalize();
  TPoly num_;
  TPoly den_;
};

std::string to_string(const TRat& r);
std::ostream& operator<<(std::ostream& os, const TRat& r);

/// Power series in t known through t^order. Arithmetic between series of
/// different orders keeps the smaller order.
class TSeries {
 public:
  explicit TSeries(int order);
  TSeries(const TPoly& p, int order);
  /// Expands num/den; den(0) must be nonzero and the expansion must stay
  /// integral, otherwise std::domain_error.
  static TSeries from_rat(const TRat& r, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int d) const { return c_.at(static_cast<std::size_t>(d)); }
  const std::vector<Int>& coeffs() const { return c_; }
  TPoly truncated_poly() const { return TPoly(c_); }
  bool is_zero() const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const TSeries& o);
  TSeries& operator*=(const Int& c);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const TSeries& b) { return a *= b; }
  friend TSeries operator*(TSeries a, const Int& c) { return a *= c; }
  bool operator==(const TSeries& o) const = default;

 private:
  void truncate(int order);
  std::vector<Int> c_;
};

std::string to_string(const TSeries& s);
std::ostream& operator<<(std::ostream& os, const TSeries& s);

/// [m]_t = 1 + t + ... + t^{m-1}.
TPoly t_analog(int m);
/// (t;t)_k = (1-t)(1-t^2)...(1-t^k).
TPoly t_pochhammer(int k);

/// Generating function of partitions with largest part <= r, counted
/// directly, truncated at t^order.
TSeries partition_gf_series(int r, int order);
/// The same generating function as the rational 1 / (t;t)_r.
TRat partition_gf_rat(int r);

}  // namespace deltaq
