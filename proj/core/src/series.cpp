#include "germs/series.hpp"

#include <algorithm>
#include <cmath>

#include "germs/error.hpp"

namespace germs {

std::string OrderResult::to_string() const {
  return (is_exact() ? "Exact(" : "AtLeast(") + std::to_string(value_) + ")";
}

OrderResult min_order(const OrderResult& a, const OrderResult& b) {
  if (a.is_exact() && b.is_exact()) return a.value() <= b.value() ? a : b;
  if (a.is_exact()) return a.value() <= b.value() ? a : b;
  if (b.is_exact()) return b.value() <= a.value() ? b : a;
  return OrderResult::at_least(std::min(a.value(), b.value()));
}

Monomial Monomial::from_index(std::size_t idx) {
  int d = 0;
  while (static_cast<std::size_t>((d + 1) * (d + 2) / 2) <= idx) ++d;
  int j = static_cast<int>(idx - static_cast<std::size_t>(d * (d + 1) / 2));
  return {d - j, j};
}

std::size_t jet_dimension(int k) { return static_cast<std::size_t>(k * (k + 3) / 2); }

namespace {

std::size_t triangle(int deg) {
  auto d = static_cast<std::size_t>(deg + 1);
  return d * (d + 1) / 2;
}

std::string monomial_string(char var, int e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

bool is_negative_display(const Scalar& c) {
  if (!c.is_gaussian()) return false;
  const Gaussian& g = c.gaussian_value();
  if (g.is_real()) return sgn(g.re) < 0;
  return sgn(g.re) == 0 && sgn(g.im) < 0;
}

bool is_plain_integer(const Scalar& c) {
  return c.is_rational() && c.gaussian_value().re.get_den() == 1;
}

void append_term(std::string& out, const Scalar& c, const std::string& mono) {
  bool first = out.empty();
  if (mono.empty()) {
    std::string s = c.to_string();
    if (first) {
      out = s;
    } else if (c.is_rational() && is_negative_display(c)) {
      out += " - " + (-c).to_string();
    } else if (c.is_rational()) {
      out += " + " + s;
    } else {
      out += " + (" + s + ")";
    }
    return;
  }
  bool neg = is_negative_display(c);
  Scalar mag = neg ? -c : c;
  std::string body;
  if (mag.is_one()) {
    body = mono;
  } else if (is_plain_integer(mag)) {
    body = mag.to_string() + "*" + mono;
  } else {
    body = "(" + mag.to_string() + ")*" + mono;
  }
  if (first) {
    out = (neg ? "-" : "") + body;
  } else {
    out += (neg ? " - " : " + ") + body;
  }
}

}  // namespace

// ---------------------------------------------------------------- BiSeries

BiSeries::BiSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw PreconditionError("negative truncation order");
}

BiSeries BiSeries::x(int trunc) { return monomial({1, 0}, Scalar(1), trunc); }
BiSeries BiSeries::y(int trunc) { return monomial({0, 1}, Scalar(1), trunc); }
BiSeries BiSeries::constant(const Scalar& c, int trunc) { return monomial({0, 0}, c, trunc); }

BiSeries BiSeries::monomial(Monomial m, const Scalar& c, int trunc) {
  BiSeries r(trunc);
  if (!c.is_zero() && m.degree() <= trunc) r.terms_.emplace_back(m, c);
  return r;
}

BiSeries BiSeries::from_terms(std::vector<Term> terms, int trunc) {
  BiSeries r(trunc);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (t.first.i < 0 || t.first.j < 0) throw PreconditionError("negative exponent");
    if (t.first.degree() > trunc) continue;
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Scalar BiSeries::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

int BiSeries::max_x_exponent() const {
  int e = -1;
  for (const auto& [m, c] : terms_) e = std::max(e, m.i);
  return e;
}

int BiSeries::max_y_exponent() const {
  int e = -1;
  for (const auto& [m, c] : terms_) e = std::max(e, m.j);
  return e;
}

OrderResult BiSeries::order() const {
  if (terms_.empty()) return OrderResult::at_least(trunc_ + 1);
  return OrderResult::exact(terms_.front().first.degree());
}

BiSeries BiSeries::jet(int k) const {
  BiSeries r(trunc_);
  for (const auto& t : terms_) {
    if (t.first.degree() > k) break;
    r.terms_.push_back(t);
  }
  return r;
}

BiSeries BiSeries::truncated(int k) const {
  BiSeries r = jet(k);
  r.trunc_ = std::min(trunc_, std::max(k, 0));
  return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  int n = std::min(trunc_, o.trunc_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      if (a->first.degree() <= n) merged.push_back(std::move(*a));
      ++a;
    } else if (a == ae || b->first < a->first) {
      if (b->first.degree() <= n) merged.push_back(*b);
      ++b;
    } else {
      if (a->first.degree() <= n) {
        a->second += b->second;
        if (!a->second.is_zero()) merged.push_back(std::move(*a));
      }
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  trunc_ = n;
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) { return *this += -o; }

BiSeries& BiSeries::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

BiSeries BiSeries::product_to(const BiSeries& a, const BiSeries& b, int max_degree, int trunc) {
  BiSeries r(trunc);
  if (a.terms_.empty() || b.terms_.empty() || max_degree < 0) return r;
  std::vector<Scalar> acc(triangle(max_degree));
  std::vector<char> used(acc.size(), 0);
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.degree() > max_degree) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > max_degree) break;
      Monomial m{ma.i + mb.i, ma.j + mb.j};
      std::size_t idx = m.index();
      acc[idx] += ca * cb;
      used[idx] = 1;
    }
  }
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    if (used[idx] && !acc[idx].is_zero())
      r.terms_.emplace_back(Monomial::from_index(idx), std::move(acc[idx]));
  }
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  int n = std::min(a.trunc_, b.trunc_);
  return BiSeries::product_to(a, b, n, n);
}

BiSeries BiSeries::pow(int n) const {
  if (n < 0) return reciprocal().pow(-n);
  BiSeries result = constant(Scalar(1), trunc_), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

BiSeries BiSeries::reciprocal() const {
  Scalar c0 = coeff(0, 0);
  if (c0.is_zero()) throw DomainError("not a unit");
  Scalar inv = c0.inverse();
  // 1/f = inv * sum_k h^k with h = 1 - inv*f in the maximal ideal.
  BiSeries h = constant(Scalar(1), trunc_) - (*this * inv);
  BiSeries sum = constant(Scalar(1), trunc_), power = sum;
  for (int k = 1; k <= trunc_ && !h.is_zero(); ++k) {
    power = power * h;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * inv;
}

BiSeries BiSeries::diff_x() const {
  BiSeries r(std::max(trunc_ - 1, 0));
  for (const auto& [m, c] : terms_) {
    if (m.i == 0 || m.degree() - 1 > r.trunc_) continue;
    r.terms_.emplace_back(Monomial{m.i - 1, m.j}, c * Scalar(m.i));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

BiSeries BiSeries::diff_y() const {
  BiSeries r(std::max(trunc_ - 1, 0));
  for (const auto& [m, c] : terms_) {
    if (m.j == 0 || m.degree() - 1 > r.trunc_) continue;
    r.terms_.emplace_back(Monomial{m.i, m.j - 1}, c * Scalar(m.j));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

BiSeries BiSeries::swapped() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& [m, c] : terms_) t.emplace_back(Monomial{m.j, m.i}, c);
  return from_terms(std::move(t), trunc_);
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

std::string BiSeries::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_string('x', m.i);
    std::string ys = monomial_string('y', m.j);
    if (!mono.empty() && !ys.empty()) mono += "*";
    mono += ys;
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- UniSeries

UniSeries::UniSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw PreconditionError("negative truncation order");
}

UniSeries UniSeries::t(int trunc) { return monomial(1, Scalar(1), trunc); }
UniSeries UniSeries::constant(const Scalar& c, int trunc) { return monomial(0, c, trunc); }

UniSeries UniSeries::monomial(int n, const Scalar& c, int trunc) {
  UniSeries r(trunc);
  if (n <= trunc && !c.is_zero()) {
    r.coeffs_.assign(static_cast<std::size_t>(n) + 1, Scalar());
    r.coeffs_[static_cast<std::size_t>(n)] = c;
  }
  return r;
}

UniSeries UniSeries::from_coeffs(std::vector<Scalar> coeffs, int trunc) {
  UniSeries r(trunc);
  if (coeffs.size() > static_cast<std::size_t>(trunc) + 1) coeffs.resize(static_cast<std::size_t>(trunc) + 1);
  r.coeffs_ = std::move(coeffs);
  r.trim();
  return r;
}

void UniSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniSeries::coeff(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= coeffs_.size()) return {};
  return coeffs_[static_cast<std::size_t>(n)];
}

OrderResult UniSeries::order() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (!coeffs_[n].is_zero()) return OrderResult::exact(static_cast<int>(n));
  return OrderResult::at_least(trunc_ + 1);
}

UniSeries UniSeries::jet(int k) const {
  UniSeries r = *this;
  if (k < 0) {
    r.coeffs_.clear();
  } else if (r.coeffs_.size() > static_cast<std::size_t>(k) + 1) {
    r.coeffs_.resize(static_cast<std::size_t>(k) + 1);
  }
  r.trim();
  return r;
}

UniSeries UniSeries::truncated(int k) const {
  UniSeries r = jet(k);
  r.trunc_ = std::min(trunc_, std::max(k, 0));
  return r;
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  auto limit = static_cast<std::size_t>(trunc_) + 1;
  if (coeffs_.size() > limit) coeffs_.resize(limit);
  std::size_t n = std::min(o.coeffs_.size(), limit);
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) { return *this += -o; }

UniSeries& UniSeries::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UniSeries UniSeries::operator-() const {
  UniSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  int n = std::min(a.trunc_, b.trunc_);
  UniSeries r(n);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  std::size_t size = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, static_cast<std::size_t>(n) + 1);
  r.coeffs_.assign(size, Scalar());
  for (std::size_t i = 0; i < a.coeffs_.size() && i < size; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < size; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

UniSeries UniSeries::pow(int n) const {
  if (n < 0) return reciprocal().pow(-n);
  UniSeries result = constant(Scalar(1), trunc_), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

UniSeries UniSeries::reciprocal() const {
  Scalar c0 = coeff(0);
  if (c0.is_zero()) throw DomainError("not a unit");
  Scalar inv = c0.inverse();
  std::vector<Scalar> w(static_cast<std::size_t>(trunc_) + 1);
  w[0] = inv;
  for (std::size_t n = 1; n < w.size(); ++n) {
    Scalar s;
    for (std::size_t k = 1; k <= n && k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) s += coeffs_[k] * w[n - k];
    }
    w[n] = -(s * inv);
  }
  return from_coeffs(std::move(w), trunc_);
}

UniSeries UniSeries::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d.push_back(coeffs_[n] * Scalar(static_cast<long>(n)));
  return from_coeffs(std::move(d), std::max(trunc_ - 1, 0));
}

UniSeries UniSeries::divide_by_t_power(int k) const {
  if (k == 0) return *this;
  for (int n = 0; n < k && static_cast<std::size_t>(n) < coeffs_.size(); ++n)
    if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) throw DomainError("not divisible by t^" + std::to_string(k));
  if (trunc_ < k) throw TruncationError("insufficient truncation");
  std::vector<Scalar> c;
  if (coeffs_.size() > static_cast<std::size_t>(k)) c.assign(coeffs_.begin() + k, coeffs_.end());
  return from_coeffs(std::move(c), trunc_ - k);
}

UniSeries UniSeries::divide(const UniSeries& g) const {
  OrderResult og = g.order();
  if (!og.is_exact()) throw TruncationError("insufficient truncation");
  int m = og.value();
  UniSeries unit = g.divide_by_t_power(m);
  UniSeries num = divide_by_t_power(m);
  return num * unit.reciprocal();
}

UniSeries UniSeries::compose(const UniSeries& g) const {
  if (!g.coeff(0).is_zero()) throw DomainError("substitution not in m");
  int v = g.order_bound();
  long bound = static_cast<long>(trunc_ + 1) * v - 1;
  int n = static_cast<int>(std::min<long>(g.trunc_, bound));
  UniSeries gg = g.truncated(n);
  UniSeries r(n);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    r = r * gg;
    r += constant(coeffs_[k], n);
  }
  return r;
}

UniSeries UniSeries::rational_power(long p, long q) const {
  if (!coeff(0).is_one()) throw DomainError("rational power needs constant term 1");
  Scalar r = Scalar::rational(p, q);
  std::vector<Scalar> w(static_cast<std::size_t>(trunc_) + 1);
  w[0] = Scalar(1);
  for (std::size_t n = 1; n < w.size(); ++n) {
    Scalar s;
    for (std::size_t k = 1; k <= n && k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      Scalar factor = (r + Scalar(1)) * Scalar(static_cast<long>(k)) - Scalar(static_cast<long>(n));
      s += factor * coeffs_[k] * w[n - k];
    }
    w[n] = s / Scalar(static_cast<long>(n));
  }
  return from_coeffs(std::move(w), trunc_);
}

bool operator==(const UniSeries& a, const UniSeries& b) {
  return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
}

std::string UniSeries::to_string() const {
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    append_term(out, coeffs_[n], monomial_string('t', static_cast<int>(n)));
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------ substitution

UniSeries substitute(const BiSeries& f, const UniSeries& xt, const UniSeries& yt) {
  if (!xt.coeff(0).is_zero() || !yt.coeff(0).is_zero()) throw DomainError("substitution not in m");
  int v = std::min(xt.order_bound(), yt.order_bound());
  long bound = static_cast<long>(f.trunc() + 1) * v - 1;
  int n = static_cast<int>(std::min<long>({static_cast<long>(xt.trunc()), static_cast<long>(yt.trunc()), bound}));
  UniSeries x = xt.truncated(n), y = yt.truncated(n);

  int max_i = f.max_x_exponent(), max_j = f.max_y_exponent();
  UniSeries result(n);
  if (max_i < 0) return result;
  std::vector<UniSeries> ypow{UniSeries::constant(Scalar(1), n)};
  for (int j = 1; j <= max_j; ++j) ypow.push_back(ypow.back() * y);

  std::vector<UniSeries> inner(static_cast<std::size_t>(max_i) + 1, UniSeries(n));
  for (const auto& [m, c] : f.terms()) inner[static_cast<std::size_t>(m.i)] += ypow[static_cast<std::size_t>(m.j)] * c;
  for (int i = max_i; i >= 0; --i) {
    result = result * x;
    result += inner[static_cast<std::size_t>(i)];
  }
  return result;
}

BiSeries compose_bi(const BiSeries& f, const BiSeries& u, const BiSeries& v) {
  if (!u.coeff(0, 0).is_zero() || !v.coeff(0, 0).is_zero()) throw DomainError("substitution not in m");
  int w = std::min(u.order_bound(), v.order_bound());
  long bound = static_cast<long>(f.trunc() + 1) * w - 1;
  int n = static_cast<int>(std::min<long>({static_cast<long>(u.trunc()), static_cast<long>(v.trunc()), bound}));
  BiSeries uu = u.truncated(n), vv = v.truncated(n);

  int max_i = f.max_x_exponent(), max_j = f.max_y_exponent();
  BiSeries result(n);
  if (max_i < 0) return result;
  std::vector<BiSeries> vpow{BiSeries::constant(Scalar(1), n)};
  for (int j = 1; j <= max_j; ++j) vpow.push_back(vpow.back() * vv);

  std::vector<BiSeries> inner(static_cast<std::size_t>(max_i) + 1, BiSeries(n));
  for (const auto& [m, c] : f.terms()) inner[static_cast<std::size_t>(m.i)] += vpow[static_cast<std::size_t>(m.j)] * c;
  for (int i = max_i; i >= 0; --i) {
    if (!result.is_zero()) result = result * uu;
    result += inner[static_cast<std::size_t>(i)];
  }
  return result;
}

}  // namespace germs
