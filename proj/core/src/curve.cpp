#include "germs/curve.hpp"

#include <algorithm>
#include <numeric>

#include "germs/blowup.hpp"
#include "germs/error.hpp"

namespace germs {

namespace {

// Lower-order component first. `swapped` is set when that component is y(t).
struct Split {
  const UniSeries* lead;
  const UniSeries* other;
  int m;
  bool swapped;
};

Split split_components(const UniSeries& xt, const UniSeries& yt) {
  OrderResult ox = xt.order(), oy = yt.order();
  if (ox.is_exact() && ox.value() <= oy.value()) return {&xt, &yt, ox.value(), false};
  if (oy.is_exact() && oy.value() < ox.value()) return {&yt, &xt, oy.value(), true};
  if (!ox.is_exact() && !oy.is_exact()) throw DomainError("parametrization vanishes up to truncation");
  throw TruncationError("insufficient truncation");
}

// Series reversion: rho with sigma(rho(s)) = s, where sigma = t * w and w(0) = 1.
UniSeries revert(const UniSeries& w) {
  int n = w.trunc() + 1;
  UniSeries s = UniSeries::t(n);
  UniSeries rho = s;
  for (int pass = 0; pass < n; ++pass) rho = s * w.compose(rho).reciprocal();
  return rho;
}

}  // namespace

bool is_primitive(const UniSeries& xt, const UniSeries& yt) {
  if (!xt.coeff(0).is_zero() || !yt.coeff(0).is_zero()) throw DomainError("curve must pass through the origin");
  Split sp = split_components(xt, yt);
  if (sp.m == 1) return true;
  if (sp.other->is_zero()) return false;
  const UniSeries& lead = *sp.lead;
  Scalar c = lead.coeff(sp.m);
  // lead = c * s^m after s = t * (lead / (c t^m))^(1/m).
  UniSeries unit = lead.divide_by_t_power(sp.m) * c.inverse();
  UniSeries w = unit.rational_power(1, sp.m);
  UniSeries rho = revert(w);
  UniSeries other = sp.other->compose(rho);
  long g = sp.m;
  for (int k = 0; k <= other.degree(); ++k) {
    if (other.coeff(k).is_zero()) continue;
    g = std::gcd(g, static_cast<long>(k));
    if (g == 1) return true;
  }
  return false;
}

CurveParam CurveParam::make(UniSeries xt, UniSeries yt) {
  if (!is_primitive(xt, yt)) throw DomainError("parametrization is not primitive");
  return {std::move(xt), std::move(yt)};
}

CurveParam CurveParam::unchecked(UniSeries xt, UniSeries yt) { return {std::move(xt), std::move(yt)}; }

std::string CurveParam::to_string() const { return "curve(" + x_.to_string() + "; " + y_.to_string() + ")"; }

TangentDirection TangentDirection::from_vector(const Scalar& a, const Scalar& b) {
  if (!a.is_zero()) return {Scalar(1), b / a};
  if (b.is_zero()) throw DomainError("zero direction vector");
  return vertical();
}

std::string TangentDirection::to_string() const { return "[" + a.to_string() + ":" + b.to_string() + "]"; }

std::string TangentDirection::line() const {
  if (a.is_zero()) return "x = 0";
  BiSeries form = BiSeries::y(1) - BiSeries::x(1) * b;
  if (form.coeff(1, 0).is_rational() && form.coeff(1, 0).gaussian_value().re < 0) form = -form;
  return form.to_string() + " = 0";
}

OrderResult multiplicity(const CurveParam& gamma) { return min_order(gamma.x().order(), gamma.y().order()); }

TangentDirection tangent_direction(const CurveParam& gamma) {
  OrderResult m = multiplicity(gamma);
  if (!m.is_exact()) throw TruncationError("insufficient truncation");
  return TangentDirection::from_vector(gamma.x().coeff(m.value()), gamma.y().coeff(m.value()));
}

int implicit_precision(const CurveParam& gamma) {
  Split sp = split_components(gamma.x(), gamma.y());
  int m = sp.m;
  int n_lead = sp.lead->trunc(), n_other = sp.other->trunc();
  if (sp.other->is_zero()) return n_other / m;
  int q = sp.other->order().value();
  return std::min(n_other / m, (n_lead - m + q) / m);
}

BiSeries implicitize(const CurveParam& gamma, int degree_bound) {
  Split sp = split_components(gamma.x(), gamma.y());
  const int m = sp.m;
  const int precision = implicit_precision(gamma);
  const int D = std::min(degree_bound, precision);
  if (D < m) throw TruncationError("insufficient truncation");

  // Power sums p_k(x) = sum_i Q(s_i)^k over the m roots of P(s) = x, from
  //   p_k[n] = c^-(n+1) [s^(m(n+1)-1)] Q^k P' (P / c s^m)^-(n+1).
  // With Q = s^q Q~ and P' = s^(m-1) P~' the coefficient becomes
  //   [s^(mn - kq)] Q~^k P~' u^-(n+1),   u = P / (c s^m).
  const UniSeries& lead = *sp.lead;
  const UniSeries& other = *sp.other;
  std::vector<UniSeries> power_sums(static_cast<std::size_t>(m) + 1, UniSeries(D));
  if (!other.is_zero()) {
    const int q = other.order().value();
    Scalar c = lead.coeff(m);
    Scalar c_inv = c.inverse();
    UniSeries unit = lead.divide_by_t_power(m) * c_inv;
    UniSeries unit_inv = unit.reciprocal();
    UniSeries lead_deriv = lead.derivative().divide_by_t_power(m - 1);
    UniSeries other_red = other.divide_by_t_power(q);
    std::vector<UniSeries> other_pows{UniSeries::constant(Scalar(1), other_red.trunc())};
    for (int k = 1; k <= m; ++k) other_pows.push_back(other_pows.back() * other_red);

    std::vector<std::vector<Scalar>> coeffs(static_cast<std::size_t>(m) + 1,
                                            std::vector<Scalar>(static_cast<std::size_t>(D) + 1));
    UniSeries weight = unit_inv;
    Scalar c_pow = c_inv;
    for (int n = 0; n <= D; ++n) {
      UniSeries base = lead_deriv * weight;
      for (int k = 1; k <= m; ++k) {
        int idx = m * n - k * q;
        if (idx < 0) continue;
        const UniSeries& qk = other_pows[static_cast<std::size_t>(k)];
        Scalar s;
        for (int j = 0; j <= idx; ++j) {
          Scalar a = qk.coeff(j);
          if (a.is_zero()) continue;
          s += a * base.coeff(idx - j);
        }
        coeffs[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = s * c_pow;
      }
      weight = weight * unit_inv;
      c_pow *= c_inv;
    }
    for (int k = 1; k <= m; ++k)
      power_sums[static_cast<std::size_t>(k)] = UniSeries::from_coeffs(coeffs[static_cast<std::size_t>(k)], D);
  }

  // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i.
  std::vector<UniSeries> elem{UniSeries::constant(Scalar(1), D)};
  for (int k = 1; k <= m; ++k) {
    UniSeries acc(D);
    for (int i = 1; i <= k; ++i) {
      UniSeries term = elem[static_cast<std::size_t>(k - i)] * power_sums[static_cast<std::size_t>(i)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    elem.push_back(acc * Scalar::rational(1, k));
  }

  // f = sum_k (-1)^k e_k(lead) other^(m-k), written in (lead, other) variables.
  std::vector<BiSeries::Term> terms;
  for (int k = 0; k <= m; ++k) {
    const UniSeries& e = elem[static_cast<std::size_t>(k)];
    for (int n = 0; n <= e.degree(); ++n) {
      Scalar c = e.coeff(n);
      if (c.is_zero() || n + (m - k) > D) continue;
      if (k % 2 == 1) c = -c;
      terms.emplace_back(Monomial{n, m - k}, c);
    }
  }
  BiSeries f = BiSeries::from_terms(std::move(terms), D);
  return sp.swapped ? f.swapped() : f;
}

OrderResult intersect_order_directed(const CurveParam& alpha, const CurveParam& beta) {
  BiSeries f = implicitize(beta, beta.trunc());
  return substitute(f, alpha.x(), alpha.y()).order();
}

namespace {

long substitution_bound(const CurveParam& alpha, const CurveParam& beta) {
  OrderResult ma = multiplicity(alpha);
  long d = implicit_precision(beta);
  return std::min<long>(alpha.trunc(), (d + 1) * ma.value() - 1);
}

}  // namespace

OrderResult intersect_order(const CurveParam& alpha, const CurveParam& beta) {
  if (substitution_bound(beta, alpha) > substitution_bound(alpha, beta))
    return intersect_order_directed(beta, alpha);
  return intersect_order_directed(alpha, beta);
}

CurveParam act(const FormalDiffeo& phi, const CurveParam& gamma) {
  return CurveParam::unchecked(substitute(phi.x(), gamma.x(), gamma.y()),
                               substitute(phi.y(), gamma.x(), gamma.y()));
}

bool equal_up_to(const CurveParam& alpha, const CurveParam& beta, int depth) {
  return shared_prefix(alpha, beta, depth) >= depth;
}

}  // namespace germs
