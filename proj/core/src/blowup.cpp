#include "germs/blowup.hpp"

#include <algorithm>

#include "germs/error.hpp"

namespace germs {

std::string NearPoint::to_string() const {
  if (chart == Chart::second) return "[0:1]";
  return "[1:" + coordinate.to_string() + "]";
}

StrictTransform strict_transform(const CurveParam& gamma) {
  const UniSeries& x = gamma.x();
  const UniSeries& y = gamma.y();
  OrderResult mo = multiplicity(gamma);
  if (!mo.is_exact() || mo.value() > gamma.trunc()) throw TruncationError("depth limit");
  int m = mo.value();
  Scalar xm = x.coeff(m), ym = y.coeff(m);
  if (!xm.is_zero()) {
    Scalar c = ym / xm;
    UniSeries v = y.divide(x) - UniSeries::constant(c, y.trunc());
    return {{NearPoint::Chart::first, c}, CurveParam::unchecked(x, v)};
  }
  return {{NearPoint::Chart::second, Scalar(0)}, CurveParam::unchecked(y, x.divide(y))};
}

NearPointSeq near_points_partial(const CurveParam& gamma, int depth) {
  NearPointSeq seq;
  CurveParam current = gamma;
  for (int k = 0; k < depth; ++k) {
    int m = multiplicity(current).value();
    std::optional<StrictTransform> next;
    try {
      next = strict_transform(current);
    } catch (const TruncationError&) {
      break;
    }
    StrictTransform& st = *next;
    seq.points.push_back(st.point);
    seq.mults.push_back(m);
    seq.transforms.push_back(st.curve);
    current = st.curve;
  }
  return seq;
}

NearPointSeq near_points(const CurveParam& gamma, int depth) {
  NearPointSeq seq = near_points_partial(gamma, depth);
  if (static_cast<int>(seq.depth()) < depth) throw TruncationError("depth limit");
  return seq;
}

namespace {

int agreeing(const NearPointSeq& a, const NearPointSeq& b) {
  std::size_t n = std::min(a.depth(), b.depth());
  std::size_t s = 0;
  while (s < n && a.points[s] == b.points[s]) ++s;
  return static_cast<int>(s);
}

// m_k of the sequence; k may be one past the recorded multiplicities.
OrderResult mult_at(const CurveParam& gamma, const NearPointSeq& seq, int k) {
  if (k < static_cast<int>(seq.mults.size())) return OrderResult::exact(seq.mults[static_cast<std::size_t>(k)]);
  return multiplicity(k == 0 ? gamma : seq.transforms[static_cast<std::size_t>(k - 1)]);
}

}  // namespace

int shared_prefix(const CurveParam& alpha, const CurveParam& beta, int depth) {
  NearPointSeq a = near_points_partial(alpha, depth), b = near_points_partial(beta, depth);
  int s = agreeing(a, b);
  int explored = static_cast<int>(std::min(a.depth(), b.depth()));
  if (s == explored && explored < depth) throw TruncationError("depth limit");
  return s;
}

OrderResult intersect_noether(const CurveParam& alpha, const CurveParam& beta, int depth) {
  NearPointSeq a = near_points_partial(alpha, depth), b = near_points_partial(beta, depth);
  int s = agreeing(a, b);
  int explored = static_cast<int>(std::min(a.depth(), b.depth()));
  long sum = 0;
  bool exact = s < explored;
  for (int k = 0; k <= s; ++k) {
    OrderResult ma = mult_at(alpha, a, k), mb = mult_at(beta, b, k);
    if (!ma.is_exact() || !mb.is_exact()) exact = false;
    sum += static_cast<long>(ma.value()) * mb.value();
  }
  int v = static_cast<int>(sum);
  return exact ? OrderResult::exact(v) : OrderResult::at_least(v);
}

FormalDiffeo straightening_map(const TangentDirection& dir, int trunc) {
  BiSeries x = BiSeries::x(trunc), y = BiSeries::y(trunc);
  if (dir.a.is_zero()) return {y, x};
  return {x, y - x * dir.b};
}

namespace {

FormalDiffeo straightening_inverse(const TangentDirection& dir, int trunc) {
  BiSeries x = BiSeries::x(trunc), y = BiSeries::y(trunc);
  if (dir.a.is_zero()) return {y, x};
  return {x, y + x * dir.b};
}

void require_invariant(const Mat2& l, const TangentDirection& dir) {
  Scalar mv0 = l(0, 0) * dir.a + l(0, 1) * dir.b;
  Scalar mv1 = l(1, 0) * dir.a + l(1, 1) * dir.b;
  if (!(mv0 * dir.b - mv1 * dir.a).is_zero()) throw PreconditionError("direction not invariant");
}

// f / x; every term must contain x. Truncation drops by one.
BiSeries divide_by_x(const BiSeries& f) {
  std::vector<BiSeries::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m.i == 0) throw DomainError("not divisible by the exceptional divisor");
    terms.emplace_back(Monomial{m.i - 1, m.j}, c);
  }
  return BiSeries::from_terms(std::move(terms), f.trunc() - 1);
}

// g(u, u v) for the blow-up chart.
BiSeries in_chart(const BiSeries& g) {
  int n = g.trunc();
  return compose_bi(g, BiSeries::x(n), BiSeries::x(n) * BiSeries::y(n));
}

}  // namespace

FormalDiffeo lift_diffeo(const FormalDiffeo& phi, const TangentDirection& dir) {
  require_invariant(phi.linear_part(), dir);
  int n = phi.trunc();
  FormalDiffeo straight =
      compose(straightening_map(dir, n), compose(phi, straightening_inverse(dir, n)));
  BiSeries a = in_chart(straight.x()), b = in_chart(straight.y());
  BiSeries a_red = divide_by_x(a), b_red = divide_by_x(b);
  return {a.truncated(n - 1), b_red * a_red.reciprocal()};
}

FormalVectorField lift_vfield(const FormalVectorField& X, const TangentDirection& dir) {
  require_invariant(X.linear_part(), dir);
  int n = X.trunc();
  FormalDiffeo inv = straightening_inverse(dir, n);
  // Push X forward by the linear straightening map.
  BiSeries a = dir.a.is_zero() ? X.b() : X.a();
  BiSeries b = dir.a.is_zero() ? X.a() : X.b() - X.a() * dir.b;
  a = pullback(a, inv);
  b = pullback(b, inv);
  BiSeries ca = in_chart(a), cb = in_chart(b);
  BiSeries v = BiSeries::y(n);
  return {ca.truncated(n - 1), divide_by_x(cb - v * ca)};
}

}  // namespace germs
