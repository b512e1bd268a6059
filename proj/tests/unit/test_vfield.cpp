#include "doctest.h"
#include "germs/error.hpp"
#include "germs/vfield.hpp"
#include "random_objects.hpp"

using namespace germs;

namespace {

const BiSeries X = BiSeries::x(), Y = BiSeries::y(), Zero;

}  // namespace

TEST_CASE("action on functions") {
  CHECK(apply(FormalVectorField(Zero, X.pow(2)), Y) == X.pow(2));
  CHECK(apply(FormalVectorField(Y, -X), X.pow(2) + Y.pow(2)).is_zero());
  CHECK(apply(FormalVectorField(X, Y), X * Y) == Scalar(2) * X * Y);
}

TEST_CASE("brackets") {
  FormalVectorField v(X * Y, X.pow(3));
  CHECK(bracket(v, v).is_zero());
  CHECK(bracket(FormalVectorField(Zero, X.pow(2)), FormalVectorField(Zero, X.pow(3))).is_zero());
  CHECK(bracket(FormalVectorField(Y, Zero), FormalVectorField(Zero, X)) == FormalVectorField(-X, Y));
}

TEST_CASE("exponential") {
  CHECK(exp_vf(FormalVectorField(Zero, X.pow(2))) == FormalDiffeo(X, Y + X.pow(2)));
  CHECK(exp_vf(FormalVectorField(Y, Zero)) == FormalDiffeo(X + Y, Y));
  FormalVectorField v(Zero, X.pow(2));
  CHECK(compose(exp_vf(v), exp_vf(v)) == exp_vf(Scalar(2) * v));
  CHECK(exp_vf(FormalVectorField::zero()).is_identity());
  CHECK_THROWS_AS(exp_vf(FormalVectorField(X, Y)), PreconditionError);
}

TEST_CASE("logarithm") {
  CHECK(log_diffeo(FormalDiffeo::identity()).is_zero());
  CHECK(log_diffeo(FormalDiffeo(X, Y + X.pow(3))) == FormalVectorField(Zero, X.pow(3)));
  FormalDiffeo phi(X, Y + X + X.pow(2));
  FormalVectorField L = log_diffeo(phi);
  CHECK(exp_vf(L) == phi);
  // b(x) d/dy kills b, so the flow is a single step.
  CHECK(L == FormalVectorField(Zero, X + X.pow(2)));
  CHECK_THROWS_AS(log_diffeo(FormalDiffeo(Scalar(2) * X, Y)), PreconditionError);
}

TEST_CASE("exp and log are inverse on random input") {
  testing::Rng rng(23);
  for (int i = 0; i < 8; ++i) {
    auto v = testing::random_vfield(rng, testing::random_nilpotent(rng, 3), 4, 3, 10);
    CHECK(log_diffeo(exp_vf(v)) == v);
  }
}

TEST_CASE("first integrals") {
  CHECK(is_first_integral(FormalVectorField(Zero, X.pow(2)), X).holds);
  TruncatedVerdict no = is_first_integral(FormalVectorField(Zero, X.pow(2)), Y);
  CHECK_FALSE(no.holds);
  CHECK(no.witness_degree == 2);
  CHECK(is_first_integral(FormalVectorField(Y, -X), X.pow(2) + Y.pow(2)).holds);
}

TEST_CASE("invariant curves") {
  UniSeries t = UniSeries::t();
  TruncatedVerdict line = is_invariant_curve(FormalVectorField(Zero, X.pow(2)), CurveParam::make(t, UniSeries()));
  CHECK_FALSE(line.holds);
  CHECK(line.witness_degree == 2);
  CHECK(is_invariant_curve(FormalVectorField(Zero, X * Y), CurveParam::make(t, UniSeries())).holds);
  CHECK_FALSE(is_invariant_curve(FormalVectorField(Zero, X.pow(2)), CurveParam::make(t, t.pow(2))).holds);
  // The flow of x d/dx + 2y d/dy preserves the parabola.
  CHECK(is_invariant_curve(FormalVectorField(X, Scalar(2) * Y), CurveParam::make(t, t.pow(2))).holds);
}

TEST_CASE("construction") {
  CHECK_THROWS_AS(FormalVectorField(BiSeries::constant(Scalar(1)), Y), DomainError);
  CHECK(FormalVectorField(BiSeries::x(5), BiSeries::y(8)).trunc() == 5);
  CHECK(FormalVectorField(Y, Zero).is_nilpotent());
  CHECK_FALSE(FormalVectorField(X, Zero).is_nilpotent());
  CHECK(FormalVectorField(Zero, X.pow(2)).to_string() == "vf(0; x^2)");
}
