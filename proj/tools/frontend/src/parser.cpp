#include "germs/frontend/parser.hpp"

#include <cctype>
#include <set>

namespace germs::frontend {

namespace {

std::string locate(const Span& s, const std::string& message) {
  return "line " + std::to_string(s.line) + ", col " + std::to_string(s.col) + ": " + message;
}

std::string with_expected(std::string message, const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  message += " (expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k > 0) message += k + 1 == expected.size() ? " or " : ", ";
    message += expected[k];
  }
  return message + ")";
}

}  // namespace

ParseError::ParseError(Span span, std::string message, std::vector<std::string> expected)
    : Error(locate(span, with_expected(std::move(message), expected))),
      span_(span),
      expected_(std::move(expected)) {}

namespace {

struct Token {
  enum class Kind { number, ident, punct, end };
  Kind kind = Kind::end;
  std::string text;
  Span span;
  Scalar value;
};

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::end) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.span = {line, col, 0};
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      std::string num(src.substr(i, j - i));
      std::string den = "1";
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        std::size_t k = j + 1;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        den = std::string(src.substr(j + 1, k - j - 1));
        j = k;
      }
      bool imag = false;
      if (j < src.size() && src[j] == 'i' && (j + 1 >= src.size() || !is_word(src[j + 1]))) {
        imag = true;
        ++j;
      }
      mpz_class d(den);
      if (d == 0) throw ParseError(t.span, "zero denominator in literal");
      mpq_class q(mpz_class(num), d);
      q.canonicalize();
      t.kind = Token::Kind::number;
      t.value = imag ? Scalar::gaussian(0, q) : Scalar::rational(q);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && is_word(src[j])) ++j;
      t.kind = Token::Kind::ident;
      advance(j - i);
    } else if (std::string_view("+-*/^(),;=@").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::punct;
      advance(1);
    } else {
      throw ParseError(t.span, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(src.substr(start, i - start));
    t.span.length = static_cast<int>(i - start);
    out.push_back(std::move(t));
  }
  Token end;
  end.span = {line, col, 0};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ParsedObject object() {
    ParsedObject obj{expr(), std::nullopt};
    if (is("@")) {
      next();
      const Token& n = peek();
      if (n.kind != Token::Kind::ident || n.text != "N") fail({"'N'"});
      next();
      expect("=");
      const Token& v = peek();
      if (v.kind != Token::Kind::number || !v.value.is_rational() ||
          v.value.gaussian_value().re.get_den() != 1 || v.value.gaussian_value().re < 0)
        fail({"a non-negative integer"});
      obj.trunc = static_cast<int>(v.value.gaussian_value().re.get_num().get_si());
      next();
    }
    if (peek().kind != Token::Kind::end) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "'@'", "end of input"});
    return obj;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is(const char* p) const { return peek().kind == Token::Kind::punct && peek().text == p; }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().span, "unexpected " + describe(peek()), std::move(expected));
  }
  void expect(const char* p) {
    if (!is(p)) fail({std::string("'") + p + "'"});
    next();
  }

  static Node binary(char op, Node a, Node b) {
    Node n;
    n.kind = Node::Kind::binary;
    n.op = op;
    n.span = a.span;
    n.args.push_back(std::move(a));
    n.args.push_back(std::move(b));
    return n;
  }

  Node expr() {
    Node lhs = term();
    while (is("+") || is("-")) {
      char op = next().text[0];
      lhs = binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Node term() {
    Node lhs = unary();
    while (is("*") || is("/")) {
      char op = next().text[0];
      lhs = binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Node unary() {
    if (is("-")) {
      Node n;
      n.kind = Node::Kind::negate;
      n.span = next().span;
      n.args.push_back(unary());
      return n;
    }
    return power();
  }

  Node power() {
    Node base = primary();
    if (is("^")) {
      next();
      return binary('^', std::move(base), unary());
    }
    return base;
  }

  Node primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      Node n;
      n.kind = Node::Kind::number;
      n.span = t.span;
      n.number = t.value;
      next();
      return n;
    }
    if (t.kind == Token::Kind::ident) {
      Node n;
      n.span = t.span;
      n.text = t.text;
      next();
      if (!is("(")) {
        n.kind = Node::Kind::name;
        return n;
      }
      next();
      n.kind = Node::Kind::call;
      if (!is(")")) {
        n.args.push_back(argument());
        while (is(",") || is(";")) {
          char sep = next().text[0];
          if (n.op == 0) n.op = sep;
          n.args.push_back(argument());
        }
      }
      if (!is(")")) fail({"','", "';'", "')'"});
      next();
      return n;
    }
    if (is("(")) {
      Span open = next().span;
      Node first = expr();
      if (is(",")) {
        Node n;
        n.kind = Node::Kind::tuple;
        n.span = open;
        n.args.push_back(std::move(first));
        while (is(",")) {
          next();
          n.args.push_back(expr());
        }
        expect(")");
        return n;
      }
      if (!is(")")) fail({"','", "')'"});
      next();
      return first;
    }
    fail({"a number", "a name", "'('", "'-'"});
  }

  // name = expr inside calls (group members), otherwise a plain expression.
  Node argument() {
    if (peek().kind == Token::Kind::ident && pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == Token::Kind::punct &&
        toks_[pos_ + 1].text == "=") {
      Node n;
      n.kind = Node::Kind::named;
      n.span = peek().span;
      n.text = next().text;
      next();
      n.args.push_back(expr());
      return n;
    }
    return expr();
  }
};

// ---------------------------------------------------------------- evaluation

template <class S>
struct Vars;

template <>
struct Vars<BiSeries> {
  static BiSeries constant(const Scalar& c, int n) { return BiSeries::constant(c, n); }
  static std::optional<BiSeries> var(const std::string& name, int n) {
    if (name == "x") return BiSeries::x(n);
    if (name == "y") return BiSeries::y(n);
    return std::nullopt;
  }
  static std::optional<Scalar> as_constant(const BiSeries& s) {
    for (const auto& [m, c] : s.terms())
      if (m.degree() > 0) return std::nullopt;
    return s.coeff(0, 0);
  }
  static constexpr const char* vars = "'x' or 'y'";
};

template <>
struct Vars<UniSeries> {
  static UniSeries constant(const Scalar& c, int n) { return UniSeries::constant(c, n); }
  static std::optional<UniSeries> var(const std::string& name, int n) {
    if (name == "t") return UniSeries::t(n);
    return std::nullopt;
  }
  static std::optional<Scalar> as_constant(const UniSeries& s) {
    if (s.degree() > 0) return std::nullopt;
    return s.coeff(0);
  }
  static constexpr const char* vars = "'t'";
};

template <class S>
S eval(const Node& n, int trunc) {
  using V = Vars<S>;
  switch (n.kind) {
    case Node::Kind::number:
      return V::constant(n.number, trunc);
    case Node::Kind::name: {
      if (n.text == "e") return V::constant(Scalar::epsilon(), trunc);
      if (n.text == "i") return V::constant(Scalar::imaginary_unit(), trunc);
      if (auto v = V::var(n.text, trunc)) return *v;
      throw ParseError(n.span, "unknown name '" + n.text + "'", {V::vars, "'e'", "'i'"});
    }
    case Node::Kind::negate:
      return -eval<S>(n.args[0], trunc);
    case Node::Kind::binary: {
      S a = eval<S>(n.args[0], trunc);
      try {
        switch (n.op) {
          case '+':
            return a + eval<S>(n.args[1], trunc);
          case '-':
            return a - eval<S>(n.args[1], trunc);
          case '*':
            return a * eval<S>(n.args[1], trunc);
          case '/':
            return a * eval<S>(n.args[1], trunc).reciprocal();
          default: {
            auto e = V::as_constant(eval<S>(n.args[1], trunc));
            if (!e || !e->is_rational() || e->gaussian_value().re.get_den() != 1 ||
                !e->gaussian_value().re.get_num().fits_sint_p())
              throw ParseError(n.args[1].span, "exponent must be an integer");
            return a.pow(static_cast<int>(e->gaussian_value().re.get_num().get_si()));
          }
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        throw ParseError(n.args[1].span, err.what());
      }
    }
    case Node::Kind::call:
    case Node::Kind::tuple:
    case Node::Kind::named:
      break;
  }
  throw ParseError(n.span, "unexpected constructor inside an expression");
}

void require_arity(const Node& n, std::size_t count, const std::string& what) {
  if (n.args.size() != count) throw ParseError(n.span, "expected " + what);
}

FormalDiffeo make_diffeo(const Node& n, int trunc) {
  require_arity(n, 2, "two components");
  if (n.kind == Node::Kind::call && n.op != ',') throw ParseError(n.span, "components of diff are separated by ','");
  return {eval<BiSeries>(n.args[0], trunc), eval<BiSeries>(n.args[1], trunc)};
}

bool is_diffeo_node(const Node& n) {
  return n.kind == Node::Kind::tuple || (n.kind == Node::Kind::call && n.text == "diff");
}

Object evaluate(const Node& n, int trunc) {
  if (is_diffeo_node(n)) return make_diffeo(n, trunc);
  if (n.kind == Node::Kind::call && n.text == "vf") {
    require_arity(n, 2, "two components");
    return FormalVectorField(eval<BiSeries>(n.args[0], trunc), eval<BiSeries>(n.args[1], trunc));
  }
  if (n.kind == Node::Kind::call && n.text == "curve") {
    require_arity(n, 2, "two components");
    return CurveParam::make(eval<UniSeries>(n.args[0], trunc), eval<UniSeries>(n.args[1], trunc));
  }
  if (n.kind == Node::Kind::call && n.text == "group") {
    if (n.args.empty()) throw ParseError(n.span, "expected at least one generator");
    GroupSpec g;
    std::set<std::string> used;
    for (std::size_t k = 0; k < n.args.size(); ++k) {
      const Node& a = n.args[k];
      std::string name = a.kind == Node::Kind::named ? a.text : "g" + std::to_string(k + 1);
      const Node& body = a.kind == Node::Kind::named ? a.args[0] : a;
      if (!is_diffeo_node(body)) throw ParseError(body.span, "expected a diffeomorphism", {"diff(..)", "'('"});
      if (!used.insert(name).second) throw ParseError(a.span, "duplicate generator name '" + name + "'");
      g.names.push_back(name);
      g.gens.push_back(make_diffeo(body, trunc));
    }
    return g;
  }
  if (n.kind == Node::Kind::call && n.text != "e" && n.text != "i")
    throw ParseError(n.span, "unknown constructor '" + n.text + "'", {"diff", "vf", "curve", "group"});
  return eval<BiSeries>(n, trunc);
}

template <class T>
T expect_kind(std::string_view src, int default_trunc, const char* what) {
  Object o = read_object(src, default_trunc);
  if (auto* p = std::get_if<T>(&o)) return std::move(*p);
  throw ParseError(Span{}, std::string("expected ") + what + ", got " + kind_name(o));
}

std::string suffix(int trunc, int default_trunc) {
  return trunc == default_trunc ? "" : "@N=" + std::to_string(trunc);
}

}  // namespace

ParsedObject parse(std::string_view src) { return Parser(lex(src)).object(); }

Object read_object(std::string_view src, int default_trunc) {
  ParsedObject p = parse(src);
  return evaluate(p.root, p.trunc.value_or(default_trunc));
}

BiSeries read_series(std::string_view src, int default_trunc) {
  return expect_kind<BiSeries>(src, default_trunc, "a series");
}
FormalDiffeo read_diffeo(std::string_view src, int default_trunc) {
  return expect_kind<FormalDiffeo>(src, default_trunc, "a diffeomorphism");
}
FormalVectorField read_vfield(std::string_view src, int default_trunc) {
  return expect_kind<FormalVectorField>(src, default_trunc, "a vector field");
}
CurveParam read_curve(std::string_view src, int default_trunc) {
  return expect_kind<CurveParam>(src, default_trunc, "a curve");
}
GroupSpec read_group(std::string_view src, int default_trunc) {
  return expect_kind<GroupSpec>(src, default_trunc, "a group");
}

std::string kind_name(const Object& obj) {
  static const char* names[] = {"series", "diffeo", "vfield", "curve", "group"};
  return names[obj.index()];
}

std::string print(const Object& obj, int default_trunc) {
  struct Visitor {
    int d;
    std::string operator()(const BiSeries& s) const { return s.to_string() + suffix(s.trunc(), d); }
    std::string operator()(const FormalDiffeo& f) const { return f.to_string() + suffix(f.trunc(), d); }
    std::string operator()(const FormalVectorField& v) const { return v.to_string() + suffix(v.trunc(), d); }
    std::string operator()(const CurveParam& c) const { return c.to_string() + suffix(c.trunc(), d); }
    std::string operator()(const GroupSpec& g) const {
      std::string s = "group(";
      int trunc = d;
      for (std::size_t k = 0; k < g.gens.size(); ++k) {
        if (k > 0) s += ", ";
        s += g.names[k] + "=" + g.gens[k].to_string();
        trunc = k == 0 ? g.gens[k].trunc() : std::min(trunc, g.gens[k].trunc());
      }
      return s + ")" + suffix(trunc, d);
    }
  };
  return std::visit(Visitor{default_trunc}, obj);
}

}  // namespace germs::frontend
