#pragma once

// Formal diffeomorphisms of (C^2, 0) at working truncation.

#include <array>
#include <string>

#include "germs/series.hpp"

namespace germs {

/// 2x2 scalar matrix, row-major: {{a, b}, {c, d}}.
struct Mat2 {
  std::array<Scalar, 4> m;
  const Scalar& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  Scalar det() const { return m[0] * m[3] - m[1] * m[2]; }
  Scalar trace() const { return m[0] + m[3]; }
  bool is_identity() const { return m[0].is_one() && m[1].is_zero() && m[2].is_zero() && m[3].is_one(); }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

enum class DiffeoClass { general, unipotent, tangent_to_identity };
std::string to_string(DiffeoClass c);

/// phi(x, y) = (phi_x(x, y), phi_y(x, y)) with invertible linear part.
///
/// Composition follows map composition: compose(phi, eta) = phi o eta, i.e.
/// (phi_x(eta_x, eta_y), phi_y(eta_x, eta_y)).
class FormalDiffeo {
 public:
  /// Throws DomainError if a component has a constant term or the linear part
  /// is singular. Both components are brought to the smaller truncation.
  FormalDiffeo(BiSeries comp_x, BiSeries comp_y);

  static FormalDiffeo identity(int trunc = kDefaultTrunc);
  /// (a x + b y, c x + d y).
  static FormalDiffeo linear(const Mat2& m, int trunc = kDefaultTrunc);

  const BiSeries& x() const { return x_; }
  const BiSeries& y() const { return y_; }
  int trunc() const { return x_.trunc(); }
  /// Jacobian at the origin: rows are the components, columns d/dx, d/dy.
  const Mat2& linear_part() const { return linear_; }

  bool is_identity() const;
  /// j^k phi as a diffeomorphism (same truncation, polynomial components).
  FormalDiffeo jet(int k) const;
  FormalDiffeo truncated(int k) const;

  friend bool operator==(const FormalDiffeo& a, const FormalDiffeo& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  /// "(x, y + x^2)".
  std::string to_string() const;

 private:
  BiSeries x_, y_;
  Mat2 linear_;
};

FormalDiffeo compose(const FormalDiffeo& phi, const FormalDiffeo& eta);
FormalDiffeo invert(const FormalDiffeo& phi);
DiffeoClass classify(const FormalDiffeo& phi);
/// [h, l] = h l h^-1 l^-1.
FormalDiffeo commutator(const FormalDiffeo& h, const FormalDiffeo& l);
/// f o phi.
BiSeries pullback(const BiSeries& f, const FormalDiffeo& phi);
/// phi^n for any integer n.
FormalDiffeo power(const FormalDiffeo& phi, int n);

Mat2 linear_part_of(const BiSeries& a, const BiSeries& b);
Mat2 inverse(const Mat2& m);
Mat2 operator*(const Mat2& a, const Mat2& b);

}  // namespace germs
