#include "germs/jetspace.hpp"

#include "germs/error.hpp"

namespace germs {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      const Scalar& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::block(std::size_t l) const {
  if (l > n_) throw PreconditionError("block larger than matrix");
  Matrix b(l);
  for (std::size_t r = 0; r < l; ++r)
    for (std::size_t c = 0; c < l; ++c) b(r, c) = (*this)(r, c);
  return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.n_ != n_) throw PreconditionError("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.n_ != n_) throw PreconditionError("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  std::size_t n = a.n_;
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Scalar& s = a(i, l);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& t = b(l, j);
        if (!t.is_zero()) r(i, j) += s * t;
      }
    }
  return r;
}

std::vector<Scalar> jet_coordinates(const BiSeries& f, int k) {
  std::vector<Scalar> v(jet_dimension(k));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == 0) continue;
    if (m.degree() > k) break;
    v[m.index() - 1] = c;
  }
  return v;
}

BiSeries from_jet_coordinates(const std::vector<Scalar>& v, int k) {
  std::vector<BiSeries::Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.emplace_back(Monomial::from_index(i + 1), v[i]);
  return BiSeries::from_terms(std::move(terms), k);
}

namespace {

std::size_t dim_of(int level) {
  if (level < 1) throw PreconditionError("jet level must be at least 1");
  return jet_dimension(level);
}

std::vector<Scalar> column(const Matrix& m, std::size_t c) {
  std::vector<Scalar> v(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) v[r] = m(r, c);
  return v;
}

std::vector<Scalar> times(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> w(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < m.size(); ++r) {
      const Scalar& s = m(r, c);
      if (!s.is_zero()) w[r] += s * v[c];
    }
  }
  return w;
}

BiSeries basis(std::size_t c, int k) { return BiSeries::monomial(Monomial::from_index(c + 1), Scalar(1), k); }

// Image of the basis element c under a linear map given by its columns.
BiSeries image(const Matrix& m, std::size_t c, int k) { return from_jet_coordinates(column(m, c), k); }

// Calls check(p, q) on every basis pair with deg p + deg q <= k until it fails.
template <class Check>
bool all_pairs(int k, Check check) {
  std::size_t n = jet_dimension(k);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      if (Monomial::from_index(p + 1).degree() + Monomial::from_index(q + 1).degree() > k) break;
      if (!check(p, q)) return false;
    }
  return true;
}

BiSeries product_k(const BiSeries& a, const BiSeries& b, int k) { return BiSeries::product_to(a, b, k, k); }

// True when some power of m vanishes.
bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

}  // namespace

JetAutomorphism::JetAutomorphism(int level, Matrix m) : level_(level), m_(std::move(m)) {
  if (m_.size() != dim_of(level)) throw PreconditionError("matrix size does not match jet level");
}

BiSeries JetAutomorphism::apply(const BiSeries& f) const {
  BiSeries r = from_jet_coordinates(times(m_, jet_coordinates(f, level_)), level_);
  return r + BiSeries::constant(f.coeff(0, 0), level_);
}

bool JetAutomorphism::is_multiplicative() const {
  return all_pairs(level_, [&](std::size_t p, std::size_t q) {
    BiSeries pq = product_k(basis(p, level_), basis(q, level_), level_);
    return apply(pq) == product_k(image(m_, p, level_), image(m_, q, level_), level_);
  });
}

JetAutomorphism operator*(const JetAutomorphism& a, const JetAutomorphism& b) {
  if (a.level_ != b.level_) throw PreconditionError("jet level mismatch");
  return {a.level_, a.m_ * b.m_};
}

JetDerivation::JetDerivation(int level, Matrix m) : level_(level), m_(std::move(m)) {
  if (m_.size() != dim_of(level)) throw PreconditionError("matrix size does not match jet level");
}

BiSeries JetDerivation::apply(const BiSeries& f) const {
  return from_jet_coordinates(times(m_, jet_coordinates(f, level_)), level_);
}

bool JetDerivation::satisfies_leibniz() const {
  return all_pairs(level_, [&](std::size_t p, std::size_t q) {
    BiSeries bp = basis(p, level_), bq = basis(q, level_);
    BiSeries lhs = apply(product_k(bp, bq, level_));
    BiSeries rhs = product_k(image(m_, p, level_), bq, level_) + product_k(bp, image(m_, q, level_), level_);
    return lhs == rhs;
  });
}

JetAutomorphism project_diffeo(const FormalDiffeo& phi, int k) {
  std::size_t n = dim_of(k);
  if (phi.trunc() < k) throw TruncationError("insufficient truncation");
  BiSeries px = phi.x().jet(k).truncated(k), py = phi.y().jet(k).truncated(k);
  // Powers of the components, so each column is one product.
  std::vector<BiSeries> xp{BiSeries::constant(Scalar(1), k)}, yp{BiSeries::constant(Scalar(1), k)};
  for (int d = 1; d <= k; ++d) {
    xp.push_back(product_k(xp.back(), px, k));
    yp.push_back(product_k(yp.back(), py, k));
  }
  Matrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    Monomial mon = Monomial::from_index(c + 1);
    BiSeries img = product_k(xp[static_cast<std::size_t>(mon.i)], yp[static_cast<std::size_t>(mon.j)], k);
    auto v = jet_coordinates(img, k);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = v[r];
  }
  return {k, std::move(m)};
}

JetDerivation project_vfield(const FormalVectorField& X, int k) {
  std::size_t n = dim_of(k);
  if (X.trunc() < k) throw TruncationError("insufficient truncation");
  Matrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto v = jet_coordinates(apply(X, basis(c, k)), k);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = v[r];
  }
  return {k, std::move(m)};
}

JetAutomorphism truncate_level(const JetAutomorphism& a, int l) {
  if (l > a.level()) throw PreconditionError("target level above source level");
  return {l, a.matrix().block(dim_of(l))};
}

JetDerivation truncate_level(const JetDerivation& d, int l) {
  if (l > d.level()) throw PreconditionError("target level above source level");
  return {l, d.matrix().block(dim_of(l))};
}

JetAutomorphism exp_jet(const JetDerivation& d) {
  const Matrix& m = d.matrix();
  if (!is_nilpotent(m)) throw PreconditionError("exp restricted to nilpotent derivations");
  Matrix sum = Matrix::identity(m.size()), term = sum;
  for (long j = 1;; ++j) {
    term = term * m * Scalar::rational(1, j);
    if (term.is_zero()) break;
    sum += term;
  }
  return {d.level(), std::move(sum)};
}

JetDerivation log_jet(const JetAutomorphism& a) {
  Matrix n = a.matrix() - Matrix::identity(a.matrix().size());
  if (!is_nilpotent(n)) throw PreconditionError("automorphism is not unipotent");
  Matrix sum(n.size()), power = Matrix::identity(n.size());
  for (long j = 1;; ++j) {
    power = power * n;
    if (power.is_zero()) break;
    sum += power * Scalar::rational(j % 2 == 1 ? 1 : -1, j);
  }
  return {a.level(), std::move(sum)};
}

FormalDiffeo diffeo_from_jet(const JetAutomorphism& a) {
  return {image(a.matrix(), 0, a.level()), image(a.matrix(), 1, a.level())};
}

FormalVectorField vfield_from_jet(const JetDerivation& d) {
  return {image(d.matrix(), 0, d.level()), image(d.matrix(), 1, d.level())};
}

}  // namespace germs
