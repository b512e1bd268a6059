#pragma once

// Jet groups D_k and derivation algebras L_k acting on m/m^(k+1).
//
// The basis of m/m^(k+1) is the monomials of degree 1..k in graded-lex order
// (x, y, x^2, xy, y^2, ...), shared by every level, so restricting to a lower
// level is extracting the leading block.

#include <string>
#include <vector>

#include "germs/diffeo.hpp"
#include "germs/series.hpp"
#include "germs/vfield.hpp"

namespace germs {

/// Dense square matrix over Scalar, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  bool is_zero() const;
  bool is_identity() const;
  /// Leading l x l block.
  Matrix block(std::size_t l) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

/// Coordinates of f's degree 1..k part in the level-k basis.
std::vector<Scalar> jet_coordinates(const BiSeries& f, int k);
/// Inverse of jet_coordinates (truncation k).
BiSeries from_jet_coordinates(const std::vector<Scalar>& v, int k);

/// Element of D_k: an algebra automorphism of m/m^(k+1).
class JetAutomorphism {
 public:
  /// Throws PreconditionError if the matrix size does not match level k.
  JetAutomorphism(int level, Matrix m);
  int level() const { return level_; }
  const Matrix& matrix() const { return m_; }
  /// Image of f (degree <= k part used).
  BiSeries apply(const BiSeries& f) const;
  /// A(fg) == A(f)A(g) for every basis pair with deg f + deg g <= k.
  bool is_multiplicative() const;
  friend JetAutomorphism operator*(const JetAutomorphism& a, const JetAutomorphism& b);
  friend bool operator==(const JetAutomorphism&, const JetAutomorphism&) = default;

 private:
  int level_;
  Matrix m_;
};

/// Element of L_k: a derivation of m/m^(k+1).
class JetDerivation {
 public:
  JetDerivation(int level, Matrix m);
  int level() const { return level_; }
  const Matrix& matrix() const { return m_; }
  BiSeries apply(const BiSeries& f) const;
  /// D(fg) == D(f)g + fD(g) for every basis pair with deg f + deg g <= k.
  bool satisfies_leibniz() const;
  friend JetDerivation operator*(const Scalar& s, const JetDerivation& d) { return {d.level_, d.m_ * s}; }
  friend bool operator==(const JetDerivation&, const JetDerivation&) = default;

 private:
  int level_;
  Matrix m_;
};

/// pi_k(phi): column of monomial m holds the coordinates of m o phi.
JetAutomorphism project_diffeo(const FormalDiffeo& phi, int k);
/// Column of monomial m holds the coordinates of X(m).
JetDerivation project_vfield(const FormalVectorField& X, int k);
/// pi_{k,l}.
JetAutomorphism truncate_level(const JetAutomorphism& a, int l);
JetDerivation truncate_level(const JetDerivation& d, int l);

/// sum_m D^m/m! for nilpotent D; throws PreconditionError otherwise.
JetAutomorphism exp_jet(const JetDerivation& d);
/// sum_m (-1)^(m+1) (A - I)^m / m for unipotent A; throws PreconditionError otherwise.
JetDerivation log_jet(const JetAutomorphism& a);

/// Reads a diffeomorphism off the images of x and y (truncation k).
FormalDiffeo diffeo_from_jet(const JetAutomorphism& a);
/// Reads a vector field off the images of x and y (truncation k).
FormalVectorField vfield_from_jet(const JetDerivation& d);

}  // namespace germs
