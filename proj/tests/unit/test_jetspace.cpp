#include "doctest.h"
#include "germs/error.hpp"
#include "germs/jetspace.hpp"
#include "random_objects.hpp"

using namespace germs;

namespace {

const BiSeries X = BiSeries::x(), Y = BiSeries::y();

Matrix column_images(int k, const std::vector<BiSeries>& images) {
  Matrix m(jet_dimension(k));
  for (std::size_t c = 0; c < images.size(); ++c) {
    auto v = jet_coordinates(images[c], k);
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

}  // namespace

TEST_CASE("basis coordinates") {
  auto v = jet_coordinates(X + Scalar(2) * X * Y - Y.pow(3), 2);
  REQUIRE(v.size() == 5);
  CHECK(v[0] == Scalar(1));
  CHECK(v[3] == Scalar(2));
  CHECK(from_jet_coordinates(v, 2) == (X + Scalar(2) * X * Y).truncated(2));
}

TEST_CASE("projection of diffeomorphisms") {
  CHECK(project_diffeo(FormalDiffeo::identity(), 3).matrix().is_identity());
  // x, y, x^2, xy, y^2 go to x, y + x^2, x^2, xy, y^2.
  JetAutomorphism a = project_diffeo(FormalDiffeo(X, Y + X.pow(2)), 2);
  CHECK(a.matrix() == column_images(2, {X, Y + X.pow(2), X.pow(2), X * Y, Y.pow(2)}));
  CHECK(a.apply(Y * X) == (X * Y).truncated(2));
  CHECK_THROWS_AS(project_diffeo(FormalDiffeo::identity(2), 3), TruncationError);
}

TEST_CASE("projection of vector fields") {
  JetDerivation d = project_vfield(FormalVectorField(BiSeries(), X.pow(2)), 2);
  CHECK(d.matrix() == column_images(2, {BiSeries(), X.pow(2), BiSeries(), BiSeries(), BiSeries()}));
  JetDerivation s = project_vfield(FormalVectorField(Y, BiSeries()), 1);
  CHECK(s.matrix() == column_images(1, {Y, BiSeries()}));
  testing::Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    auto Xf = testing::random_vfield(rng, testing::random_invertible(rng, 3), 4, 3, 8);
    CHECK(project_vfield(Xf, 3).satisfies_leibniz());
  }
}

TEST_CASE("restriction between levels") {
  FormalDiffeo phi(Scalar(2) * X + Y + X.pow(2), Y - X * Y);
  JetAutomorphism a = project_diffeo(phi, 3);
  CHECK(truncate_level(a, 1) == JetAutomorphism(1, column_images(1, {Scalar(2) * X + Y, Y})));
  CHECK(truncate_level(a, 3) == a);
  CHECK_THROWS_AS(truncate_level(a, 4), PreconditionError);
}

TEST_CASE("exp and log on jets") {
  CHECK(exp_jet(JetDerivation(3, Matrix(jet_dimension(3)))).matrix().is_identity());
  CHECK(log_jet(project_diffeo(FormalDiffeo::identity(), 4)).matrix().is_zero());
  FormalVectorField v(BiSeries(), X.pow(2));
  CHECK(exp_jet(project_vfield(v, 3)) == project_diffeo(FormalDiffeo(X, Y + X.pow(2)), 3));
  CHECK(log_jet(project_diffeo(FormalDiffeo(X, Y + X.pow(2)), 4)) == project_vfield(v, 4));
  FormalVectorField radial(X, Y);
  CHECK_THROWS_WITH_AS(exp_jet(project_vfield(radial, 2)), "exp restricted to nilpotent derivations",
                       PreconditionError);
  CHECK_THROWS_AS(log_jet(project_diffeo(FormalDiffeo(Scalar(2) * X, Y), 2)), PreconditionError);
}

TEST_CASE("round trip through jets") {
  FormalDiffeo phi(X + Y.pow(2), Y + X.pow(3) - X * Y);
  CHECK(diffeo_from_jet(project_diffeo(phi, 3)) == phi.truncated(3));
  FormalVectorField v(X * Y, Y.pow(2) + X.pow(3));
  CHECK(vfield_from_jet(project_vfield(v, 3)) == FormalVectorField(v.a().truncated(3), v.b().truncated(3)));
}

TEST_CASE("anti-homomorphism on random pairs") {
  testing::Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    auto phi = testing::random_diffeo(rng, testing::random_invertible(rng, 3), 3, 3, 6);
    auto eta = testing::random_diffeo(rng, testing::random_invertible(rng, 3), 3, 3, 6);
    for (int k = 1; k <= 4; ++k) {
      CHECK(project_diffeo(compose(phi, eta), k) == project_diffeo(eta, k) * project_diffeo(phi, k));
      CHECK(project_diffeo(phi, k).is_multiplicative());
    }
  }
}

TEST_CASE("a non-multiplicative matrix is detected") {
  Matrix m = Matrix::identity(jet_dimension(2));
  m(0, 2) = Scalar(1);  // x^2 -> x^2 + x breaks A(x)A(x) = A(x^2)
  CHECK_FALSE(JetAutomorphism(2, m).is_multiplicative());
  CHECK_FALSE(JetDerivation(2, Matrix::identity(jet_dimension(2))).satisfies_leibniz());
}
