#pragma once

// Exact coefficients: the field Q(i)(e) of rational functions in one
// transcendental e over the Gaussian rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace germs {

/// a + b*i with a, b rational.
struct Gaussian {
  mpq_class re{0};
  mpq_class im{0};

  Gaussian() = default;
  Gaussian(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_one() const { return sgn(im) == 0 && re == 1; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  Gaussian operator-() const { return {-re, -im}; }
  Gaussian inverse() const;  // throws DomainError on zero
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string() const;
};

/// Element of Q(i)(e). Values without an e-dependence are stored inline; the
/// rest carry a shared, immutable reduced fraction num(e)/den(e) with den
/// monic and gcd(num, den) = 1. The representation is canonical, so
/// structural equality is field equality.
class Scalar {
 public:
  /// Coefficients in increasing powers of e, no trailing zeros.
  using EpsPoly = std::vector<Gaussian>;

  Scalar() = default;
  Scalar(long v) : c_(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Gaussian g) : c_(std::move(g)) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(long num, long den);
  static Scalar rational(const mpq_class& q) { return Scalar(Gaussian(q)); }
  static Scalar gaussian(const mpq_class& re, const mpq_class& im) { return Scalar(Gaussian(re, im)); }
  static Scalar imaginary_unit() { return gaussian(0, 1); }
  static Scalar epsilon();
  /// num/den with den != 0; reduces to canonical form.
  static Scalar fraction(EpsPoly num, EpsPoly den);

  bool is_zero() const { return !frac_ && c_.is_zero(); }
  bool is_one() const { return !frac_ && c_.is_one(); }
  /// True when the value lies in Q(i), i.e. does not depend on e.
  bool is_gaussian() const { return !frac_; }
  /// True when the value is a rational number.
  bool is_rational() const { return !frac_ && c_.is_real(); }
  const Gaussian& gaussian_value() const;  // requires is_gaussian()

  /// Numerator and denominator polynomials in e (denominator monic).
  EpsPoly numerator() const;
  EpsPoly denominator() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  Scalar inverse() const;  // throws DomainError("division by zero")
  Scalar pow(long n) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Textual form accepted back by the CLI grammar: "3/4", "-i", "2-3i",
  /// "1/2+i", "e^2", "2*e-1", "(e^2+1)/(e-1)".
  std::string to_string() const;
  /// True when to_string() needs parentheses to act as a product factor.
  bool needs_parens() const;

  /// Stable 64-bit hash of the canonical form (for dedup tables).
  std::uint64_t hash() const;

 private:
  struct Fraction {
    EpsPoly num;
    EpsPoly den;
  };
  static Scalar from_reduced(EpsPoly num, EpsPoly den);

  Gaussian c_;
  std::shared_ptr<const Fraction> frac_;
};

}  // namespace germs
