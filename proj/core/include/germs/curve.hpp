#pragma once

// Formal irreducible plane curves, entered as primitive parametrizations.

#include <string>

#include "germs/diffeo.hpp"
#include "germs/series.hpp"

namespace germs {

/// t -> (x(t), y(t)), both components in the maximal ideal, not both zero,
/// and primitive: not of the form delta(s(t)) with ord s >= 2.
class CurveParam {
 public:
  /// Validates the invariants; throws DomainError for a non-primitive or
  /// degenerate parametrization, TruncationError when the truncation cannot
  /// decide.
  static CurveParam make(UniSeries xt, UniSeries yt);
  /// Skips validation. Use for results of operations known to preserve
  /// primitivity (diffeomorphism action, strict transforms).
  static CurveParam unchecked(UniSeries xt, UniSeries yt);

  const UniSeries& x() const { return x_; }
  const UniSeries& y() const { return y_; }
  int trunc() const { return std::min(x_.trunc(), y_.trunc()); }

  /// "curve(t^2; t^3)".
  std::string to_string() const;

  friend bool operator==(const CurveParam&, const CurveParam&) = default;

 private:
  CurveParam(UniSeries xt, UniSeries yt) : x_(std::move(xt)), y_(std::move(yt)) {}
  UniSeries x_, y_;
};

/// Exact primitivity test (Puiseux criterion): after reparametrizing so that
/// the lower-order component is c*s^m, the other component's exponents
/// together with m have gcd 1.
bool is_primitive(const UniSeries& xt, const UniSeries& yt);

/// Direction vector [a : b] scaled so the first nonzero entry is 1.
struct TangentDirection {
  Scalar a{1};
  Scalar b{0};

  static TangentDirection from_vector(const Scalar& a, const Scalar& b);
  static TangentDirection horizontal() { return {Scalar(1), Scalar(0)}; }
  static TangentDirection vertical() { return {Scalar(0), Scalar(1)}; }

  /// "[1:0]".
  std::string to_string() const;
  /// Equation of the tangent line, e.g. "y = 0", "x + y = 0", "x = 0".
  std::string line() const;
  friend bool operator==(const TangentDirection&, const TangentDirection&) = default;
};

OrderResult multiplicity(const CurveParam& gamma);
TangentDirection tangent_direction(const CurveParam& gamma);

/// Largest degree D for which implicitize() can return exact coefficients.
int implicit_precision(const CurveParam& gamma);

/// Generator f of the curve's ideal, a Weierstrass polynomial of degree m in
/// the variable of higher order, computed as the local norm
/// prod_i (y - y(s_i(x))) through power sums. Truncation is
/// min(degree_bound, implicit_precision(gamma)).
BiSeries implicitize(const CurveParam& gamma, int degree_bound);

/// ord_t f_beta(alpha(t)) with f_beta = implicitize(beta).
OrderResult intersect_order_directed(const CurveParam& alpha, const CurveParam& beta);
/// Intersection multiplicity by substitution; implicitizes whichever curve
/// gives the sharper truncation bound (beta on ties).
OrderResult intersect_order(const CurveParam& alpha, const CurveParam& beta);

/// phi(gamma) = (phi_x(x(t), y(t)), phi_y(x(t), y(t))).
CurveParam act(const FormalDiffeo& phi, const CurveParam& gamma);

/// True iff alpha and beta share their first `depth` infinitely near points.
bool equal_up_to(const CurveParam& alpha, const CurveParam& beta, int depth);

}  // namespace germs
