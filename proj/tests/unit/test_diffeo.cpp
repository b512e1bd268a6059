#include "doctest.h"
#include "germs/diffeo.hpp"
#include "germs/error.hpp"
#include "random_objects.hpp"

using namespace germs;

namespace {

const BiSeries X = BiSeries::x(), Y = BiSeries::y();
const Scalar E = Scalar::epsilon();

}  // namespace

TEST_CASE("composition") {
  FormalDiffeo shear(X, Y + X);
  CHECK(compose(shear, shear) == FormalDiffeo(X, Y + Scalar(2) * X));
  FormalDiffeo phi(X + Y.pow(2), Y + X.pow(3));
  CHECK(compose(phi, FormalDiffeo::identity()) == phi);
  CHECK(compose(FormalDiffeo::identity(), phi) == phi);
  CHECK(compose(FormalDiffeo(X, Y + X.pow(2)), FormalDiffeo(X, Y + E * X)) == FormalDiffeo(X, Y + E * X + X.pow(2)));
}

TEST_CASE("composition is map composition") {
  FormalDiffeo a(X, Y + X.pow(2)), b(X + Y, Y);
  // a o b = (x + y, y + (x + y)^2).
  CHECK(compose(a, b) == FormalDiffeo(X + Y, Y + (X + Y).pow(2)));
  CHECK(pullback(X.pow(2), b) == (X + Y).pow(2));
}

TEST_CASE("inversion") {
  CHECK(invert(FormalDiffeo(X, Y + X.pow(2))) == FormalDiffeo(X, Y - X.pow(2)));
  CHECK(invert(FormalDiffeo(Scalar(2) * X, Scalar(3) * Y)) ==
        FormalDiffeo(Scalar::rational(1, 2) * X, Scalar::rational(1, 3) * Y));
  FormalDiffeo phi(X + Y.pow(2), Y);
  CHECK(invert(phi) == FormalDiffeo(X - Y.pow(2), Y));
  CHECK(compose(phi, invert(phi)).is_identity());
}

TEST_CASE("constructor checks") {
  CHECK_THROWS_AS(FormalDiffeo(X + BiSeries::constant(Scalar(1)), Y), DomainError);
  CHECK_THROWS_AS(FormalDiffeo(X, X), DomainError);
  CHECK(FormalDiffeo(BiSeries::x(6), BiSeries::y(9)).trunc() == 6);
}

TEST_CASE("classification") {
  CHECK(classify(FormalDiffeo(X, Y + X.pow(2))) == DiffeoClass::tangent_to_identity);
  CHECK(classify(FormalDiffeo(X + Y, Y)) == DiffeoClass::unipotent);
  CHECK(classify(FormalDiffeo(Scalar(2) * X, Y)) == DiffeoClass::general);
  CHECK(to_string(DiffeoClass::unipotent) == "unipotent");
}

TEST_CASE("commutators") {
  FormalDiffeo phi(X + Y.pow(2), Y - X.pow(3));
  CHECK(commutator(phi, phi).is_identity());
  CHECK(commutator(FormalDiffeo(X, Y + X), FormalDiffeo(X, Y + X.pow(2))).is_identity());
  // h l h^-1 l^-1 with h = (2x, y), l = (x, y + x^2), composed by hand.
  FormalDiffeo c = commutator(FormalDiffeo(Scalar(2) * X, Y), FormalDiffeo(X, Y + X.pow(2)));
  CHECK(c == FormalDiffeo(X, Y - Scalar::rational(3, 4) * X.pow(2)));
}

TEST_CASE("pullback") {
  CHECK(pullback(Y, FormalDiffeo(X, Y + X.pow(3))) == Y + X.pow(3));
  CHECK(pullback(Y - X.pow(2), FormalDiffeo(X, Y + X.pow(2))) == Y);
  FormalDiffeo phi(X + X * Y, Y + Y.pow(2));
  CHECK(pullback(X, phi) == phi.x());
}

TEST_CASE("powers") {
  FormalDiffeo phi(X, Y + X.pow(2));
  CHECK(power(phi, 3) == FormalDiffeo(X, Y + Scalar(3) * X.pow(2)));
  CHECK(power(phi, -2) == FormalDiffeo(X, Y - Scalar(2) * X.pow(2)));
  CHECK(power(phi, 0).is_identity());
}

TEST_CASE("group laws on random elements") {
  testing::Rng rng(5);
  for (int i = 0; i < 15; ++i) {
    auto a = testing::random_diffeo(rng, testing::random_invertible(rng, 3), 4, 3, 10);
    auto b = testing::random_diffeo(rng, testing::random_invertible(rng, 3), 4, 3, 10);
    auto c = testing::random_diffeo(rng, testing::random_invertible(rng, 3), 4, 3, 10);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, invert(a)).is_identity());
    CHECK(compose(invert(a), a).is_identity());
    CHECK(invert(compose(a, b)) == compose(invert(b), invert(a)));
    CHECK(compose(a, b).linear_part() == a.linear_part() * b.linear_part());
  }
}

TEST_CASE("jets and text") {
  FormalDiffeo phi(X + Y.pow(2), Y + X.pow(3));
  CHECK(phi.jet(2) == FormalDiffeo(X + Y.pow(2), Y));
  CHECK(phi.jet(1).is_identity());
  CHECK(FormalDiffeo(X, Y + X.pow(2)).to_string() == "(x, y + x^2)");
}
