#pragma once

// The unfolding geometry: projection (U, p) -> U diag(p) U†, dequantization,
// the tangent map, the pulled-back monotone metric, and its splitting into a
// classical Fisher-Rao block plus a unitary block. Both the simplified split
// and the full g-expansion are implemented separately so they can be
// cross-checked against the direct pullback.

#include "qig/gentropy.hpp"
#include "qig/petz.hpp"
#include "qig/states.hpp"

namespace qig {

struct SplitMetricValue {
    double classical = 0.0;  // Fisher-Rao term
    double quantum = 0.0;    // unitary term
    double total = 0.0;      // classical + quantum
};

// U diag(p) U†
DensityMatrix project(const UnfoldedPoint& m);

// factor projection onto the simplex, forgetting U
ProbabilityVector dequantize(const UnfoldedPoint& m);

// Tangent map of the projection under left trivialization:
// (iH, v) -> U([iH, diag(p)] + diag(v))U†. Directions with diagonal H and
// v = 0 are annihilated (the kernel of the pullback).
TangentVectorS tangent_project(const UnfoldedPoint& m, const TangentVectorM& x);

// sum_j v_j u_j / p_j on the open simplex
double fisher_rao(const ProbabilityVector& p, const std::vector<double>& v,
                  const std::vector<double>& u);

// monotone metric pulled back through the projection
double pullback_metric(const UnfoldedPoint& m, const TangentVectorM& x,
                       const TangentVectorM& y, const MonotoneF& f);

// Split form of the pulled-back metric:
//   classical = fisher_rao(p, v_x, v_y)
//   quantum   = 2 sum_{k>j} (p_k - p_j)^2 / (p_k f(p_j/p_k))
//               * Re(Hx_{kj} conj(Hy_{kj}))
// (equivalently -2 sum_{k>j} ... Re((iHx)_{kj} (iHy)_{jk}) in terms of the
// Maurer-Cartan pairing U†dU(X) = iHx).
SplitMetricValue split_metric(const UnfoldedPoint& m, const TangentVectorM& x,
                              const TangentVectorM& y, const MonotoneF& f);

// Full four-term second-order expansion of the pulled-back relative
// g-entropy. For normalized g (g(1) = 0, g''(1) = 1) the two g(1) terms
// vanish and the value coincides with split_metric under the bridged f.
double g_expansion_metric(const UnfoldedPoint& m, const TangentVectorM& x,
                          const TangentVectorM& y, const ConvexG& g);

}  // namespace qig
