#pragma once

// Point blow-ups following a curve: infinitely near points, multiplicity
// sequences, Noether's intersection formula, lifts of maps and fields.
//
// Local coordinates at a point of the exceptional line are always written
// (u, v) with u = 0 the exceptional divisor:
//   first chart  (x, y) = (u, u (v + c)),  used for directions [1 : c];
//   second chart (x, y) = (u v, u),        used only for the direction [0 : 1].
// Strict transforms and lifts are expressed in these coordinates.

#include <optional>
#include <string>
#include <vector>

#include "germs/curve.hpp"
#include "germs/diffeo.hpp"
#include "germs/vfield.hpp"

namespace germs {

inline constexpr int kDefaultDepth = 12;

struct NearPoint {
  enum class Chart { first, second };
  Chart chart = Chart::first;
  Scalar coordinate;

  friend bool operator==(const NearPoint&, const NearPoint&) = default;
  std::string to_string() const;
};

struct StrictTransform {
  NearPoint point;
  CurveParam curve;
};

struct NearPointSeq {
  std::vector<NearPoint> points;    // p_1 .. p_d
  std::vector<int> mults;           // m_0 .. m_(d-1)
  std::vector<CurveParam> transforms;  // gamma_1 .. gamma_d
  std::size_t depth() const { return points.size(); }
};

/// One blow-up step; throws TruncationError("depth limit") when the
/// truncation cannot determine the next point.
StrictTransform strict_transform(const CurveParam& gamma);

/// Exactly `depth` steps or TruncationError("depth limit").
NearPointSeq near_points(const CurveParam& gamma, int depth);
/// As many steps as the truncation supports, up to `depth`.
NearPointSeq near_points_partial(const CurveParam& gamma, int depth);

/// Largest s <= depth with p_k(alpha) = p_k(beta) for 1 <= k <= s.
int shared_prefix(const CurveParam& alpha, const CurveParam& beta, int depth);

/// m0(a)m0(b) + sum_{k=1..s} m_k(a)m_k(b) with s the shared prefix. AtLeast
/// when the prefix reaches the explored depth (or the truncation).
OrderResult intersect_noether(const CurveParam& alpha, const CurveParam& beta, int depth);

/// Lift tau_1 of phi to the point of the exceptional line given by `dir`.
/// Throws PreconditionError("direction not invariant") unless j^1 phi fixes dir.
FormalDiffeo lift_diffeo(const FormalDiffeo& phi, const TangentDirection& dir);
/// Lift of X to the same point; requires dir invariant under j^1 X.
FormalVectorField lift_vfield(const FormalVectorField& X, const TangentDirection& dir);

/// Linear change of coordinates sending `dir` to the horizontal direction
/// (as a diffeomorphism), matching the chart convention above.
FormalDiffeo straightening_map(const TangentDirection& dir, int trunc);

}  // namespace germs
