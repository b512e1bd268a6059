#include "doctest.h"
#include "germs/error.hpp"
#include "germs/scalar.hpp"

using germs::Gaussian;
using germs::Scalar;

namespace {

Scalar eps_poly(std::initializer_list<long> c) {
  Scalar r(0), e = Scalar::epsilon(), p(1);
  for (long v : c) {
    r += Scalar(v) * p;
    p *= e;
  }
  return r;
}

}  // namespace

TEST_CASE("gaussian cancellation") {
  Scalar a = Scalar::gaussian(mpq_class(1, 2), 1), b = Scalar::gaussian(mpq_class(1, 2), -1);
  CHECK(a + b == Scalar(1));
  CHECK((a + b).is_rational());
  CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
}

TEST_CASE("epsilon arithmetic") {
  Scalar e = Scalar::epsilon();
  CHECK(e * e == e.pow(2));
  CHECK_FALSE((e * e).is_gaussian());
  CHECK((eps_poly({-1, 0, 1}) / eps_poly({-1, 1})) == eps_poly({1, 1}));
  CHECK(e / e == Scalar(1));
  CHECK((e.pow(-2) * e.pow(2)).is_one());
  CHECK(e - e == Scalar(0));
}

TEST_CASE("canonical form makes equality structural") {
  Scalar e = Scalar::epsilon();
  Scalar a = (e + Scalar(1)) / (e * Scalar(2) + Scalar(2));
  CHECK(a == Scalar::rational(1, 2));
  CHECK(a.hash() == Scalar::rational(1, 2).hash());
  Scalar b = Scalar(1) / (e - Scalar(1)) - Scalar(1) / (e + Scalar(1));
  CHECK(b == Scalar(2) / (e * e - Scalar(1)));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Scalar(3) / Scalar(0), germs::DomainError);
  CHECK_THROWS_AS(Scalar(0).inverse(), germs::DomainError);
  CHECK_THROWS_AS(Gaussian().inverse(), germs::DomainError);
  CHECK_THROWS_AS((Scalar::epsilon() - Scalar::epsilon()).inverse(), germs::DomainError);
}

TEST_CASE("gaussian inverse") {
  Scalar z = Scalar::gaussian(2, -3);
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z.inverse() == Scalar::gaussian(mpq_class(2, 13), mpq_class(3, 13)));
}

TEST_CASE("text form") {
  CHECK(Scalar::rational(3, 4).to_string() == "3/4");
  CHECK((-Scalar::imaginary_unit()).to_string() == "-i");
  CHECK(Scalar::gaussian(2, -3).to_string() == "2-3i");
  CHECK(Scalar::epsilon().pow(2).to_string() == "e^2");
  CHECK(Scalar(5).to_string() == "5");
  CHECK_FALSE(Scalar(5).needs_parens());
  CHECK(Scalar::gaussian(2, -3).needs_parens());
}

TEST_CASE("field axioms on a sample") {
  Scalar e = Scalar::epsilon();
  std::vector<Scalar> xs = {Scalar::rational(-2, 3), Scalar::gaussian(1, 1), e, e.pow(2) - Scalar(3),
                            Scalar(1) / (e + Scalar::imaginary_unit())};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      for (const auto& c : xs) CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}
