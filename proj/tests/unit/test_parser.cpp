#include "doctest.h"
#include "germs/frontend/parser.hpp"
#include "random_objects.hpp"

using namespace germs;
using namespace germs::frontend;

TEST_CASE("node shapes") {
  ParsedObject c = parse("curve(t^2; t^3)");
  CHECK(c.root.kind == Node::Kind::call);
  CHECK(c.root.text == "curve");
  CHECK(c.root.args.size() == 2);
  ParsedObject d = parse("diff(x, y + e*x + x^2)@N=16");
  CHECK(d.root.args.size() == 2);
  CHECK(d.trunc == 16);
}

TEST_CASE("evaluation") {
  CHECK(read_series("(x + y)*(x - y)") == BiSeries::x().pow(2) - BiSeries::y().pow(2));
  CHECK(read_series("1/(1 + x)@N=3").trunc() == 3);
  CHECK(read_series("3/4i*x").coeff(1, 0) == Scalar::gaussian(0, mpq_class(3, 4)));
  CHECK(read_series("-x^2") == -BiSeries::x().pow(2));
  FormalDiffeo d = read_diffeo("diff(x, y + e*x + x^2)");
  CHECK(d.y().coeff(1, 0) == Scalar::epsilon());
  CHECK(read_diffeo("(2*x, y)") == FormalDiffeo(Scalar(2) * BiSeries::x(), BiSeries::y()));
  CHECK(read_vfield("vf(y; x^2)") == FormalVectorField(BiSeries::y(), BiSeries::x().pow(2)));
  CHECK(read_curve("curve(t^2; t^3 + t^4)").y() == UniSeries::t().pow(3) + UniSeries::t().pow(4));
  GroupSpec g = read_group("group(a=diff(2*x, 2*y), (x, y + x^2))");
  CHECK(g.names == std::vector<std::string>{"a", "g2"});
}

TEST_CASE("errors carry positions") {
  CHECK_THROWS_WITH_AS(read_diffeo("diff(x)"), doctest::Contains("expected two components"), ParseError);
  try {
    parse("x + * y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.span().col == 5);
    CHECK(std::string(e.what()).rfind("line 1, col 5", 0) == 0);
  }
  CHECK_THROWS_AS(read_series("x^y"), ParseError);
  CHECK_THROWS_AS(read_series("foo(x)"), ParseError);
  CHECK_THROWS_WITH_AS(read_curve("curve(t^2; t^4)"), "parametrization is not primitive", DomainError);
  CHECK_THROWS_AS(read_diffeo("vf(x; y)"), ParseError);
}

TEST_CASE("printing round-trips") {
  std::vector<std::string> inputs = {
      "x^2 + (1/2)*x*y - e*y^3", "diff(2*x + y^2, y + x^2)", "vf(y; x^2 - i*x*y)", "curve(t^2; t^3 + (3/4)*t^5)",
      "group(a=diff(2*x, 2*y), b=(x, y + x^2))", "x + x^3@N=5", "(e^2+1)/(e-1)*x"};
  for (const auto& s : inputs) {
    Object a = read_object(s);
    std::string text = print(a);
    Object b = read_object(text);
    CHECK(print(b) == text);
    CHECK(kind_name(a) == kind_name(b));
  }
  CHECK(print(read_object("x + x^3@N=5")).find("@N=5") != std::string::npos);
}

TEST_CASE("random series round-trip") {
  testing::Rng rng(99);
  for (int i = 0; i < 30; ++i) {
    BiSeries f = testing::random_bi(rng, 0, 5, 7, 12) * Scalar::gaussian(1, testing::uniform(rng, -2, 2));
    CHECK(read_series(print(Object(f), 12), 12) == f);
  }
}
