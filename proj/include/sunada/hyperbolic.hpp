#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "sunada/cover.hpp"

namespace sunada {

class HyperbolicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NonHyperbolic : public HyperbolicError {
 public:
  using HyperbolicError::HyperbolicError;
};

/// Real 2x2 matrix of determinant 1 acting on the upper half-plane.
struct MoebiusMap {
  double a = 1, b = 0, c = 0, d = 1;

  MoebiusMap operator*(const MoebiusMap& o) const;
  MoebiusMap inverse() const { return {d, -b, -c, a}; }
  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  bool hyperbolic() const { return std::abs(trace()) > 2.0; }
  void normalize();  // rescale to det 1; throws if |det| too small
};

/// Endpoint pair of a hyperbolic isometry's invariant geodesic, on the
/// boundary line R u {inf} (inf encoded as HUGE_VAL).
struct Axis {
  double p = 0, q = 0;
};

Axis axis_of(const MoebiusMap& m);

/// Endpoint pairs interleave on the boundary circle. `margin` (if given)
/// receives the smallest angular separation seen, so callers can flag
/// near-tangent configurations instead of trusting the verdict blindly.
bool axes_cross(const Axis& a1, const Axis& a2, double* margin = nullptr);
bool same_axis(const Axis& a1, const Axis& a2);

/// Discrete free two-generator representation with trace coordinates
/// (x, y, z) = (tr a, tr b, tr ab); the default (3,3,3) satisfies
/// tr[a,b] = -2 and uniformizes a once-punctured torus.
struct PuncturedTorusRep {
  MoebiusMap a, b;
  double x = 0, y = 0, z = 0;
  bool discrete_certified = false;  // tr[a,b] <= -2

  static PuncturedTorusRep standard();              // integral (3,3,3) matrices
  static PuncturedTorusRep from_traces(double x, double y, double z);

  MoebiusMap evaluate(const Word& w) const;
};

double length_of(const PuncturedTorusRep& rep, const Word& w);

struct OracleResult {
  int count = 0;
  double min_margin = HUGE_VAL;
  bool precision_warning = false;  // some crossing margin fell under 1e-9
};

/// Geodesic self-intersection count of the closed curve w (or of an
/// elevation, when `membership` restricts the conjugators to a finite-index
/// subgroup). Counts crossing axes of conjugates h w h^-1 over all reduced h
/// of length <= radius, deduplicated by double coset <w> h <w>; each
/// intersection point appears once per strand ordering, hence the halving.
OracleResult self_intersection_oracle(
    const PuncturedTorusRep& rep, const Word& w,
    const std::function<bool(const Word&)>& membership = nullptr, int radius = 10);

/// Oracle count for an elevation: conjugators restricted to the fundamental
/// group of the cover at the elevation's basepoint, base power w^degree.
OracleResult elevation_self_intersection_oracle(const PuncturedTorusRep& rep,
                                                const SchreierCover& cover,
                                                const Elevation& e, int radius = 10);

/// |d * len(w) - len(w^d)|: definitional residual of length multiplicativity
/// along the elevation; a sanity check, expected ~0.
double elevation_length_check(const PuncturedTorusRep& rep, const Elevation& e);

}  // namespace sunada
