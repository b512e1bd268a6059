#pragma once

// Truncated formal power series in (x, y) and in t.
//
// Every value carries its truncation order N: the coefficients of total degree
// <= N are exact, everything above is unknown. Binary operations combine
// truncations by taking the minimum; nothing ever widens silently.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "germs/scalar.hpp"

namespace germs {

inline constexpr int kDefaultTrunc = 24;

/// Truncation-honest multiplicity: Exact(n) when a nonzero coefficient of
/// degree n is known and nothing below it, AtLeast(n) when everything known
/// vanishes (n = N + 1).
class OrderResult {
 public:
  enum class Kind { exact, at_least };

  static OrderResult exact(int n) { return {Kind::exact, n}; }
  static OrderResult at_least(int n) { return {Kind::at_least, n}; }

  Kind kind() const { return kind_; }
  int value() const { return value_; }
  bool is_exact() const { return kind_ == Kind::exact; }

  friend bool operator==(const OrderResult&, const OrderResult&) = default;

  /// Order of a product.
  friend OrderResult operator+(const OrderResult& a, const OrderResult& b) {
    return {a.is_exact() && b.is_exact() ? Kind::exact : Kind::at_least, a.value_ + b.value_};
  }

  std::string to_string() const;

 private:
  OrderResult(Kind k, int v) : kind_(k), value_(v) {}
  Kind kind_;
  int value_;
};

/// Minimum of two orders (order of a sum, multiplicity of a pair of components).
OrderResult min_order(const OrderResult& a, const OrderResult& b);

/// x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;
  int degree() const { return i + j; }
  /// Position in graded-lex order: x^d, x^(d-1) y, ..., y^d, degree by degree.
  std::size_t index() const {
    auto d = static_cast<std::size_t>(degree());
    return d * (d + 1) / 2 + static_cast<std::size_t>(j);
  }
  static Monomial from_index(std::size_t idx);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.index() <=> b.index(); }
};

class BiSeries {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit BiSeries(int trunc = kDefaultTrunc);

  static BiSeries x(int trunc = kDefaultTrunc);
  static BiSeries y(int trunc = kDefaultTrunc);
  static BiSeries constant(const Scalar& c, int trunc = kDefaultTrunc);
  static BiSeries monomial(Monomial m, const Scalar& c, int trunc = kDefaultTrunc);
  /// Builds from arbitrary terms; drops zeros, degrees above trunc, merges duplicates.
  static BiSeries from_terms(std::vector<Term> terms, int trunc);

  int trunc() const { return trunc_; }
  std::span<const Term> terms() const { return terms_; }
  Scalar coeff(Monomial m) const;
  Scalar coeff(int i, int j) const { return coeff(Monomial{i, j}); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest stored exponent of x (resp. y); -1 for zero.
  int max_x_exponent() const;
  int max_y_exponent() const;

  OrderResult order() const;
  /// Lower bound on the order: the exact order, or N + 1.
  int order_bound() const { return order().value(); }

  /// j^k f: drops degrees > k. The result is a polynomial and keeps the
  /// truncation of f (its coefficients above k are exactly zero).
  BiSeries jet(int k) const;
  /// Forgets information above degree k: truncation becomes min(N, k).
  BiSeries truncated(int k) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }
  BiSeries& operator*=(const Scalar& s);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(BiSeries a, const Scalar& s) { return a *= s; }
  friend BiSeries operator*(const Scalar& s, BiSeries a) { return a *= s; }
  BiSeries operator-() const;
  BiSeries pow(int n) const;
  /// 1/f for a unit f; throws DomainError("not a unit") otherwise.
  BiSeries reciprocal() const;

  /// Partial derivatives; truncation drops by one.
  BiSeries diff_x() const;
  BiSeries diff_y() const;

  /// (x, y) -> (y, x).
  BiSeries swapped() const;

  friend bool operator==(const BiSeries&, const BiSeries&);

  /// Ascending-degree text in the CLI grammar, e.g. "y - x^2 + (1/2)*x*y".
  std::string to_string() const;

  /// Product computing only degrees <= max_degree; the caller owns the
  /// truncation bookkeeping of the result (set to `trunc`).
  static BiSeries product_to(const BiSeries& a, const BiSeries& b, int max_degree, int trunc);

 private:
  int trunc_;
  std::vector<Term> terms_;  // sorted by Monomial::index, no zeros, degree <= trunc_
};

class UniSeries {
 public:
  explicit UniSeries(int trunc = kDefaultTrunc);

  static UniSeries t(int trunc = kDefaultTrunc);
  static UniSeries constant(const Scalar& c, int trunc = kDefaultTrunc);
  static UniSeries monomial(int n, const Scalar& c, int trunc = kDefaultTrunc);
  /// coeffs[n] is the coefficient of t^n; entries above trunc are dropped.
  static UniSeries from_coeffs(std::vector<Scalar> coeffs, int trunc);

  int trunc() const { return trunc_; }
  Scalar coeff(int n) const;
  /// Dense coefficient view, trailing zeros trimmed.
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  OrderResult order() const;
  int order_bound() const { return order().value(); }

  UniSeries jet(int k) const;
  UniSeries truncated(int k) const;

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  UniSeries& operator*=(const Scalar& s);
  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(UniSeries a, const Scalar& s) { return a *= s; }
  friend UniSeries operator*(const Scalar& s, UniSeries a) { return a *= s; }
  UniSeries operator-() const;
  UniSeries pow(int n) const;
  UniSeries reciprocal() const;
  UniSeries derivative() const;
  /// f / t^k when t^k divides f (truncation drops by k); throws DomainError otherwise.
  UniSeries divide_by_t_power(int k) const;
  /// Quotient f/g where g = t^m * unit and t^m | f. Truncation is min(N_f, N_g) - m.
  UniSeries divide(const UniSeries& g) const;
  /// f(g(t)) with g(0) = 0.
  UniSeries compose(const UniSeries& g) const;
  /// u^(p/q) for a unit u with u(0) = 1 (binomial series).
  UniSeries rational_power(long p, long q) const;

  friend bool operator==(const UniSeries&, const UniSeries&);

  std::string to_string() const;

 private:
  int trunc_;
  std::vector<Scalar> coeffs_;  // size <= trunc_ + 1, last entry nonzero
  void trim();
};

/// f(x(t), y(t)). Requires xt, yt in the maximal ideal; truncation is
/// min(N_x, N_y, (N_f + 1) * v - 1) with v the smaller order of the inputs.
UniSeries substitute(const BiSeries& f, const UniSeries& xt, const UniSeries& yt);

/// f(u(x,y), v(x,y)) with u, v in the maximal ideal.
BiSeries compose_bi(const BiSeries& f, const BiSeries& u, const BiSeries& v);

/// Index helpers for the graded-lex basis of m/m^(k+1) (constant excluded).
std::size_t jet_dimension(int k);

}  // namespace germs
