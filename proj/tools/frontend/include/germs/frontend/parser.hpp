#pragma once

// Text syntax for series, maps, fields, curves and groups.
//
//   series      x^2 + (1/2)*x*y - e*y^3
//   diffeo      diff(2*x, y + x^2)   or   (2*x, y + x^2)
//   field       vf(y; x^2)
//   curve       curve(t^2; t^3)
//   group       group(a=diff(2*x, 2*y), b=(x, y + x^2))
//
// Any object may end in "@N=16" to set its truncation. "e" is the
// transcendental parameter, "i" the imaginary unit; "1/2" and "3/4i" without
// spaces are single literals.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "germs/curve.hpp"
#include "germs/diffeo.hpp"
#include "germs/error.hpp"
#include "germs/vfield.hpp"

namespace germs::frontend {

struct Span {
  int line = 1;
  int col = 1;
  int length = 0;
};

/// Syntax or typing error located in the input.
class ParseError : public Error {
 public:
  ParseError(Span span, std::string message, std::vector<std::string> expected = {});
  const Span& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Span span_;
  std::vector<std::string> expected_;
};

struct Node {
  enum class Kind { number, name, negate, binary, call, tuple, named };
  Kind kind = Kind::number;
  Span span;
  std::string text;  // identifier, call name or argument name
  char op = 0;       // binary operator, or argument separator of a call
  Scalar number;
  std::vector<Node> args;
};

struct ParsedObject {
  Node root;
  std::optional<int> trunc;  // from the "@N=" suffix
};

ParsedObject parse(std::string_view src);

struct GroupSpec {
  std::vector<std::string> names;
  std::vector<FormalDiffeo> gens;
};

using Object = std::variant<BiSeries, FormalDiffeo, FormalVectorField, CurveParam, GroupSpec>;

/// Parses and evaluates; `default_trunc` applies without an "@N=" suffix.
Object read_object(std::string_view src, int default_trunc = kDefaultTrunc);

BiSeries read_series(std::string_view src, int default_trunc = kDefaultTrunc);
FormalDiffeo read_diffeo(std::string_view src, int default_trunc = kDefaultTrunc);
FormalVectorField read_vfield(std::string_view src, int default_trunc = kDefaultTrunc);
CurveParam read_curve(std::string_view src, int default_trunc = kDefaultTrunc);
GroupSpec read_group(std::string_view src, int default_trunc = kDefaultTrunc);

/// Text that read_object() maps back to the same value; adds "@N=" when the
/// truncation differs from `default_trunc`.
std::string print(const Object& obj, int default_trunc = kDefaultTrunc);

/// "series", "diffeo", "vfield", "curve", "group".
std::string kind_name(const Object& obj);

}  // namespace germs::frontend
