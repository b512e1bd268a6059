#include "germs/diffeo.hpp"

#include <algorithm>

#include "germs/error.hpp"

namespace germs {

std::string to_string(DiffeoClass c) {
  switch (c) {
    case DiffeoClass::general: return "general";
    case DiffeoClass::unipotent: return "unipotent";
    case DiffeoClass::tangent_to_identity: return "tangent_to_identity";
  }
  return "general";
}

Mat2 linear_part_of(const BiSeries& a, const BiSeries& b) {
  return Mat2{{a.coeff(1, 0), a.coeff(0, 1), b.coeff(1, 0), b.coeff(0, 1)}};
}

Mat2 inverse(const Mat2& m) {
  Scalar d = m.det();
  if (d.is_zero()) throw DomainError("singular linear part");
  Scalar inv = d.inverse();
  return Mat2{{m(1, 1) * inv, -m(0, 1) * inv, -m(1, 0) * inv, m(0, 0) * inv}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2{{a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
               a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)}};
}

FormalDiffeo::FormalDiffeo(BiSeries comp_x, BiSeries comp_y)
    : x_(std::move(comp_x)), y_(std::move(comp_y)) {
  if (!x_.coeff(0, 0).is_zero() || !y_.coeff(0, 0).is_zero())
    throw DomainError("diffeomorphism components must vanish at the origin");
  int n = std::min(x_.trunc(), y_.trunc());
  if (n < 1) throw TruncationError("insufficient truncation");
  x_ = x_.truncated(n);
  y_ = y_.truncated(n);
  linear_ = linear_part_of(x_, y_);
  if (linear_.det().is_zero()) throw DomainError("linear part is not invertible");
}

FormalDiffeo FormalDiffeo::identity(int trunc) { return {BiSeries::x(trunc), BiSeries::y(trunc)}; }

FormalDiffeo FormalDiffeo::linear(const Mat2& m, int trunc) {
  return {BiSeries::x(trunc) * m(0, 0) + BiSeries::y(trunc) * m(0, 1),
          BiSeries::x(trunc) * m(1, 0) + BiSeries::y(trunc) * m(1, 1)};
}

bool FormalDiffeo::is_identity() const {
  return x_ == BiSeries::x(trunc()) && y_ == BiSeries::y(trunc());
}

FormalDiffeo FormalDiffeo::jet(int k) const { return {x_.jet(k), y_.jet(k)}; }
FormalDiffeo FormalDiffeo::truncated(int k) const { return {x_.truncated(k), y_.truncated(k)}; }

std::string FormalDiffeo::to_string() const { return "(" + x_.to_string() + ", " + y_.to_string() + ")"; }

FormalDiffeo compose(const FormalDiffeo& phi, const FormalDiffeo& eta) {
  return {compose_bi(phi.x(), eta.x(), eta.y()), compose_bi(phi.y(), eta.x(), eta.y())};
}

BiSeries pullback(const BiSeries& f, const FormalDiffeo& phi) { return compose_bi(f, phi.x(), phi.y()); }

FormalDiffeo invert(const FormalDiffeo& phi) {
  // phi = L + R with R of order >= 2. The inverse psi solves
  // psi = L^-1 (Id - R o psi); each pass fixes one more degree.
  int n = phi.trunc();
  Mat2 li = inverse(phi.linear_part());
  BiSeries rx = phi.x() - phi.x().jet(1);
  BiSeries ry = phi.y() - phi.y().jet(1);
  BiSeries X = BiSeries::x(n), Y = BiSeries::y(n);
  BiSeries px = X * li(0, 0) + Y * li(0, 1);
  BiSeries py = X * li(1, 0) + Y * li(1, 1);
  if (rx.is_zero() && ry.is_zero()) return {px, py};
  for (int degree = 2; degree <= n; ++degree) {
    // Only degrees <= `degree` of the iterate are settled; cutting above keeps
    // the products small.
    BiSeries a = X - compose_bi(rx, px, py).truncated(degree);
    BiSeries b = Y - compose_bi(ry, px, py).truncated(degree);
    BiSeries nx = (a * li(0, 0) + b * li(0, 1));
    BiSeries ny = (a * li(1, 0) + b * li(1, 1));
    px = BiSeries::from_terms({nx.terms().begin(), nx.terms().end()}, n);
    py = BiSeries::from_terms({ny.terms().begin(), ny.terms().end()}, n);
  }
  return {px, py};
}

DiffeoClass classify(const FormalDiffeo& phi) {
  const Mat2& l = phi.linear_part();
  if (l.is_identity()) return DiffeoClass::tangent_to_identity;
  // Characteristic polynomial (z - 1)^2: trace 2 and determinant 1.
  if (l.trace() == Scalar(2) && l.det().is_one()) return DiffeoClass::unipotent;
  return DiffeoClass::general;
}

FormalDiffeo commutator(const FormalDiffeo& h, const FormalDiffeo& l) {
  return compose(compose(h, l), compose(invert(h), invert(l)));
}

FormalDiffeo power(const FormalDiffeo& phi, int n) {
  FormalDiffeo base = n < 0 ? invert(phi) : phi;
  FormalDiffeo result = FormalDiffeo::identity(phi.trunc());
  for (int k = 0; k < std::abs(n); ++k) result = compose(result, base);
  return result;
}

}  // namespace germs
