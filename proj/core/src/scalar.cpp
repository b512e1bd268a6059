#include "germs/scalar.hpp"

#include <functional>
#include <utility>

#include "germs/error.hpp"

namespace germs {

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  if (sgn(o.im) != 0) im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  if (sgn(o.im) != 0) im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (sgn(im) == 0) return Gaussian(1 / re);
  mpq_class n = re * re + im * im;
  return Gaussian(re / n, -im / n);
}

std::string Gaussian::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  std::string imag;
  mpq_class a = abs(im);
  if (a != 1) imag = a.get_str();
  imag += "i";
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
  return re.get_str() + (sgn(im) < 0 ? "-" : "+") + imag;
}

namespace {

using Poly = Scalar::EpsPoly;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

Poly neg(Poly p) {
  for (auto& c : p) c = -c;
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(Poly p, const Gaussian& s) {
  for (auto& c : p) c *= s;
  trim(p);
  return p;
}

// Euclidean division a = q*b + r, b != 0.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Gaussian lead_inv = b.back().inverse();
  if (a.size() < b.size()) return {{}, std::move(a)};
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    Gaussian f = a[k] * lead_inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

Poly monic(Poly p) {
  if (p.empty() || p.back().is_one()) return p;
  return scale(std::move(p), p.back().inverse());
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    auto r = divmod(std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

bool is_one_poly(const Poly& p) { return p.size() == 1 && p[0].is_one(); }

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Gaussian& g = p[k];
    if (g.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = g.to_string();
    } else {
      std::string mono = k == 1 ? "e" : "e^" + std::to_string(k);
      if (g.is_one()) {
        term = mono;
      } else if ((-g).is_one()) {
        term = "-" + mono;
      } else if (g.is_real() || sgn(g.re) == 0) {
        term = g.to_string() + "*" + mono;
      } else {
        term = "(" + g.to_string() + ")*" + mono;
      }
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::size_t term_count(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Gaussian(q));
}

Scalar Scalar::epsilon() { return from_reduced(Poly{Gaussian(0), Gaussian(1)}, Poly{Gaussian(1)}); }

Scalar Scalar::fraction(EpsPoly num, EpsPoly den) {
  trim(num);
  trim(den);
  if (den.empty()) throw DomainError("division by zero");
  if (num.empty()) return {};
  Poly g = gcd(num, den);
  if (!is_one_poly(g)) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Gaussian lead_inv = den.back().inverse();
  return from_reduced(scale(std::move(num), lead_inv), scale(std::move(den), lead_inv));
}

Scalar Scalar::from_reduced(EpsPoly num, EpsPoly den) {
  if (num.empty()) return {};
  if (den.size() == 1 && num.size() == 1) return Scalar(std::move(num[0]));
  Scalar s;
  s.frac_ = std::make_shared<const Fraction>(Fraction{std::move(num), std::move(den)});
  return s;
}

const Gaussian& Scalar::gaussian_value() const {
  if (frac_) throw PreconditionError("scalar depends on e");
  return c_;
}

Scalar::EpsPoly Scalar::numerator() const {
  if (frac_) return frac_->num;
  if (c_.is_zero()) return {};
  return {c_};
}

Scalar::EpsPoly Scalar::denominator() const {
  if (frac_) return frac_->den;
  return {Gaussian(1)};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!frac_ && !o.frac_) {
    c_ += o.c_;
    return *this;
  }
  Poly n1 = numerator(), d1 = denominator(), n2 = o.numerator(), d2 = o.denominator();
  if (d1 == d2) {
    *this = fraction(add(n1, n2), d1);
  } else if (is_one_poly(d1)) {
    *this = from_reduced(add(mul(n1, d2), n2), d2);  // still coprime to d2
  } else if (is_one_poly(d2)) {
    *this = from_reduced(add(n1, mul(n2, d1)), d1);
  } else {
    *this = fraction(add(mul(n1, d2), mul(n2, d1)), mul(d1, d2));
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!frac_ && !o.frac_) {
    c_ *= o.c_;
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  Poly n1 = numerator(), d1 = denominator(), n2 = o.numerator(), d2 = o.denominator();
  if (is_one_poly(d1) && is_one_poly(d2)) {
    *this = from_reduced(mul(n1, n2), d1);
    return *this;
  }
  Poly g1 = gcd(n1, d2), g2 = gcd(n2, d1);
  if (!is_one_poly(g1)) {
    n1 = exact_div(n1, g1);
    d2 = exact_div(d2, g1);
  }
  if (!is_one_poly(g2)) {
    n2 = exact_div(n2, g2);
    d1 = exact_div(d1, g2);
  }
  Poly num = mul(n1, n2), den = mul(d1, d2);
  Gaussian lead_inv = den.back().inverse();
  *this = from_reduced(scale(std::move(num), lead_inv), scale(std::move(den), lead_inv));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (!frac_) return Scalar(-c_);
  return from_reduced(neg(frac_->num), frac_->den);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!frac_) return Scalar(c_.inverse());
  Gaussian lead_inv = frac_->num.back().inverse();
  return from_reduced(scale(frac_->den, lead_inv), scale(frac_->num, lead_inv));
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.frac_ && !b.frac_) return a.c_ == b.c_;
  if (!a.frac_ || !b.frac_) return false;
  return a.frac_->num == b.frac_->num && a.frac_->den == b.frac_->den;
}

std::string Scalar::to_string() const {
  if (!frac_) return c_.to_string();
  if (is_one_poly(frac_->den)) return poly_to_string(frac_->num);
  return "(" + poly_to_string(frac_->num) + ")/(" + poly_to_string(frac_->den) + ")";
}

bool Scalar::needs_parens() const {
  if (!frac_) return !(c_.is_real() && sgn(c_.re) >= 0 && c_.re.get_den() == 1);
  return !(is_one_poly(frac_->den) && term_count(frac_->num) == 1 && frac_->num.back().is_one());
}

std::uint64_t Scalar::hash() const { return std::hash<std::string>{}(to_string()); }

}  // namespace germs
