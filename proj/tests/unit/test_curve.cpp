#include "doctest.h"
#include "germs/curve.hpp"
#include "germs/error.hpp"
#include "oracles.hpp"
#include "random_objects.hpp"

using namespace germs;

namespace {

const UniSeries T = UniSeries::t();
const BiSeries X = BiSeries::x(), Y = BiSeries::y();

CurveParam curve(const UniSeries& a, const UniSeries& b) { return CurveParam::make(a, b); }

// f vanishes on gamma and has the expected order.
void check_equation(const CurveParam& gamma, const BiSeries& f, int order) {
  CHECK(substitute(f, gamma.x(), gamma.y()).is_zero());
  CHECK(f.order() == OrderResult::exact(order));
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(curve(T.pow(2), T.pow(4)), DomainError);
  CHECK_THROWS_AS(curve(UniSeries(), UniSeries()), DomainError);
  CHECK_THROWS_AS(curve(T + UniSeries::constant(Scalar(1)), T), DomainError);
  CHECK_NOTHROW(curve(T.pow(2), T.pow(4) + T.pow(5)));
  CHECK(is_primitive(T.pow(4), T.pow(6) + T.pow(7)));
  CHECK_FALSE(is_primitive(T.pow(4), T.pow(6) + T.pow(8)));
  // t^2 reparametrized: (s^2, s^4 + s^6) with s = t + t^2 is still not primitive.
  UniSeries s = T + T.pow(2);
  CHECK_FALSE(is_primitive(s.pow(2), s.pow(4) + s.pow(6)));
}

TEST_CASE("multiplicity and tangent") {
  CHECK(multiplicity(curve(T, T.pow(2))) == OrderResult::exact(1));
  CHECK(multiplicity(curve(T.pow(2), T.pow(3))) == OrderResult::exact(2));
  CHECK(multiplicity(curve(T.pow(3), T.pow(5))) == OrderResult::exact(3));
  CHECK(tangent_direction(curve(T, T.pow(2))).line() == "y = 0");
  CHECK(tangent_direction(curve(T.pow(2), T.pow(3))).line() == "y = 0");
  CHECK(tangent_direction(curve(T, -T)).line() == "x + y = 0");
  CHECK(tangent_direction(curve(T.pow(3), T)).line() == "x = 0");
  CHECK(tangent_direction(curve(T, -T)).to_string() == "[1:-1]");
}

TEST_CASE("implicit equations") {
  check_equation(curve(T, T.pow(2)), implicitize(curve(T, T.pow(2)), 10), 1);
  check_equation(curve(T.pow(2), T.pow(3)), implicitize(curve(T.pow(2), T.pow(3)), 10), 2);
  BiSeries line = implicitize(curve(T, UniSeries()), 10);
  CHECK(line == Y.truncated(line.trunc()));
  // Up to a unit the cusp equation is y^2 - x^3.
  BiSeries cusp = implicitize(curve(T.pow(2), T.pow(3)), 10);
  CHECK(cusp.jet(3) == (Y.pow(2) - X.pow(3)).truncated(cusp.trunc()).jet(3));
}

TEST_CASE("implicitization agrees with the resultant") {
  testing::Rng rng(3);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 4; ++i) {
      UniSeries q = testing::random_uni(rng, m + 1, m + 4, 3, testing::kOracleTrunc, 0.7);
      UniSeries tm = UniSeries::t(testing::kOracleTrunc).pow(m);
      if (!is_primitive(tm, q)) continue;
      CurveParam gamma = CurveParam::make(tm, q);
      BiSeries f = implicitize(gamma, 12);
      BiSeries ref = testing::sylvester_implicit(m, q);
      // The resultant is monic in y up to sign; both are Weierstrass polynomials.
      Scalar lead = ref.coeff(0, m);
      CHECK(f == (ref * lead.inverse()).truncated(f.trunc()));
    }
  }
}

TEST_CASE("intersection by substitution") {
  CHECK(intersect_order(curve(T, T.pow(2)), curve(T, T.pow(3))) == OrderResult::exact(2));
  CHECK(intersect_order(curve(T.pow(2), T.pow(3)), curve(T, UniSeries())) == OrderResult::exact(3));
  OrderResult self = intersect_order(curve(T, T.pow(2)), curve(T, T.pow(2)));
  CHECK_FALSE(self.is_exact());
  CHECK(self.value() >= kDefaultTrunc);
}

TEST_CASE("intersection is symmetric and matches the resultant oracle") {
  testing::Rng rng(8);
  for (int i = 0; i < 15; ++i) {
    CurveParam a = testing::random_curve(rng, 3, 4, 24), b = testing::random_curve(rng, 3, 4, 24);
    OrderResult ab = intersect_order(a, b), ba = intersect_order(b, a);
    if (ab.is_exact() && ba.is_exact()) CHECK(ab == ba);
  }
  int N = testing::kOracleTrunc;
  UniSeries t = UniSeries::t(N);
  UniSeries q = t.pow(3) + t.pow(4);
  BiSeries f = testing::sylvester_implicit(2, q);
  CurveParam other = CurveParam::make(UniSeries::t(24), UniSeries::t(24).pow(2));
  CHECK(intersect_order(other, CurveParam::make(UniSeries::t(24).pow(2), q.truncated(24))) ==
        testing::order_along(f, t, t.pow(2)));
}

TEST_CASE("action of diffeomorphisms") {
  CHECK(act(FormalDiffeo(X, Y + X.pow(3)), curve(T, UniSeries())) == curve(T, T.pow(3)));
  CurveParam c = curve(T.pow(2), T.pow(3));
  CHECK(act(FormalDiffeo::identity(), c) == c);
  CHECK(act(FormalDiffeo(Scalar(2) * X, Y), c) == curve(Scalar(2) * T.pow(2), T.pow(3)));
}

TEST_CASE("equality of infinitely near points") {
  CurveParam a = curve(T, T.pow(2));
  CHECK(equal_up_to(a, a, 10));
  CHECK_FALSE(equal_up_to(a, curve(T, T.pow(3)), 2));
  CHECK(equal_up_to(a, curve(T, T.pow(3)), 1));
  CHECK_FALSE(equal_up_to(a, curve(T, -T), 1));
}

TEST_CASE("text form") {
  CHECK(curve(T.pow(2), T.pow(3)).to_string() == "curve(t^2; t^3)");
}
