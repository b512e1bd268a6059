#pragma once

// Formal vector fields a d/dx + b d/dy singular at the origin.

#include <string>

#include "germs/curve.hpp"
#include "germs/diffeo.hpp"
#include "germs/series.hpp"

namespace germs {

class FormalVectorField {
 public:
  /// Both components must vanish at the origin; they are brought to the
  /// smaller truncation.
  FormalVectorField(BiSeries a, BiSeries b);

  static FormalVectorField zero(int trunc = kDefaultTrunc);

  const BiSeries& a() const { return a_; }
  const BiSeries& b() const { return b_; }
  int trunc() const { return a_.trunc(); }
  /// Linear part j^1 X as a matrix (rows: components, columns: d/dx, d/dy).
  Mat2 linear_part() const { return linear_part_of(a_, b_); }
  bool is_nilpotent() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  FormalVectorField& operator+=(const FormalVectorField& o);
  FormalVectorField& operator-=(const FormalVectorField& o);
  FormalVectorField& operator*=(const Scalar& s);
  friend FormalVectorField operator+(FormalVectorField a, const FormalVectorField& b) { return a += b; }
  friend FormalVectorField operator-(FormalVectorField a, const FormalVectorField& b) { return a -= b; }
  friend FormalVectorField operator*(const Scalar& s, FormalVectorField v) { return v *= s; }

  friend bool operator==(const FormalVectorField&, const FormalVectorField&) = default;

  /// "vf(a; b)".
  std::string to_string() const;

 private:
  BiSeries a_, b_;
};

/// X(f) = a df/dx + b df/dy. X preserves powers of the maximal ideal, so the
/// result keeps truncation min(N_a, N_b, N_f).
BiSeries apply(const FormalVectorField& X, const BiSeries& f);

FormalVectorField bracket(const FormalVectorField& X, const FormalVectorField& Y);

/// Time-one flow: (sum_m X^m(x)/m!, sum_m X^m(y)/m!). X must be nilpotent.
FormalDiffeo exp_vf(const FormalVectorField& X);

/// Infinitesimal generator of a unipotent diffeomorphism: the derivation
/// log(A) of m/m^(N+1), A = pullback by phi, read off on x and y.
FormalVectorField log_diffeo(const FormalDiffeo& phi);

/// Answer of a predicate that can only be confirmed up to truncation.
struct TruncatedVerdict {
  bool holds = false;
  /// Lowest degree of the obstruction when !holds.
  int witness_degree = 0;
  /// Degrees checked (the truncation of the tested expression).
  int checked_through = 0;
};

/// X(f) == 0 up to truncation.
TruncatedVerdict is_first_integral(const FormalVectorField& X, const BiSeries& f);
/// a(gamma) y'(t) - b(gamma) x'(t) == 0 up to truncation.
TruncatedVerdict is_invariant_curve(const FormalVectorField& X, const CurveParam& gamma);

}  // namespace germs
