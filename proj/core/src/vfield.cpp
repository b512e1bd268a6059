#include "germs/vfield.hpp"

#include <algorithm>

#include "germs/error.hpp"

namespace germs {

FormalVectorField::FormalVectorField(BiSeries a, BiSeries b) {
  if (!a.coeff(0, 0).is_zero() || !b.coeff(0, 0).is_zero())
    throw DomainError("vector field must vanish at the origin");
  int n = std::min(a.trunc(), b.trunc());
  a_ = a.truncated(n);
  b_ = b.truncated(n);
}

FormalVectorField FormalVectorField::zero(int trunc) { return {BiSeries(trunc), BiSeries(trunc)}; }

bool FormalVectorField::is_nilpotent() const {
  Mat2 l = linear_part();
  return l.trace().is_zero() && l.det().is_zero();
}

FormalVectorField& FormalVectorField::operator+=(const FormalVectorField& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FormalVectorField& FormalVectorField::operator-=(const FormalVectorField& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FormalVectorField& FormalVectorField::operator*=(const Scalar& s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

std::string FormalVectorField::to_string() const { return "vf(" + a_.to_string() + "; " + b_.to_string() + ")"; }

BiSeries apply(const FormalVectorField& X, const BiSeries& f) {
  int n = std::min(X.trunc(), f.trunc());
  BiSeries r = BiSeries::product_to(X.a(), f.diff_x(), n, n);
  r += BiSeries::product_to(X.b(), f.diff_y(), n, n);
  return r;
}

FormalVectorField bracket(const FormalVectorField& X, const FormalVectorField& Y) {
  return {apply(X, Y.a()) - apply(Y, X.a()), apply(X, Y.b()) - apply(Y, X.b())};
}

namespace {

// sum_m X^m(f)/m!; X acts nilpotently on m/m^(N+1), so the sum is finite.
BiSeries flow(const FormalVectorField& X, const BiSeries& f) {
  BiSeries sum = f.truncated(X.trunc());
  BiSeries term = sum;
  for (long m = 1; !term.is_zero(); ++m) {
    term = apply(X, term) * Scalar::rational(1, m);
    sum += term;
  }
  return sum;
}

}  // namespace

FormalDiffeo exp_vf(const FormalVectorField& X) {
  if (!X.is_nilpotent()) throw PreconditionError("vector field is not nilpotent");
  int n = X.trunc();
  return {flow(X, BiSeries::x(n)), flow(X, BiSeries::y(n))};
}

namespace {

// log(P) f = sum_m (-1)^(m+1) (P - I)^m f / m with P the pullback by phi.
BiSeries log_column(const FormalDiffeo& phi, const BiSeries& f) {
  BiSeries sum(phi.trunc());
  BiSeries power = f;
  for (long m = 1;; ++m) {
    power = pullback(power, phi) - power;
    if (power.is_zero()) break;
    Scalar c = Scalar::rational(m % 2 == 1 ? 1 : -1, m);
    sum += power * c;
  }
  return sum;
}

}  // namespace

FormalVectorField log_diffeo(const FormalDiffeo& phi) {
  if (classify(phi) == DiffeoClass::general) throw PreconditionError("diffeomorphism is not unipotent");
  int n = phi.trunc();
  return {log_column(phi, BiSeries::x(n)), log_column(phi, BiSeries::y(n))};
}

namespace {

TruncatedVerdict verdict_of(const OrderResult& o, int trunc) {
  TruncatedVerdict v;
  v.checked_through = trunc;
  v.holds = !o.is_exact();
  if (o.is_exact()) v.witness_degree = o.value();
  return v;
}

}  // namespace

TruncatedVerdict is_first_integral(const FormalVectorField& X, const BiSeries& f) {
  BiSeries e = apply(X, f);
  return verdict_of(e.order(), e.trunc());
}

TruncatedVerdict is_invariant_curve(const FormalVectorField& X, const CurveParam& gamma) {
  UniSeries a = substitute(X.a(), gamma.x(), gamma.y());
  UniSeries b = substitute(X.b(), gamma.x(), gamma.y());
  UniSeries e = a * gamma.y().derivative() - b * gamma.x().derivative();
  return verdict_of(e.order(), e.trunc());
}

}  // namespace germs
