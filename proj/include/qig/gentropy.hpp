#pragma once

// Relative g-entropies: catalog of operator convex functions g, the two-point
// divergence H_g, the data-processing defect, and the bridge from g to the
// operator monotone f of the matching monotone metric.

#include <functional>
#include <string>
#include <vector>

#include "qig/channel.hpp"
#include "qig/petz.hpp"
#include "qig/states.hpp"

namespace qig {

// Operator convex function on (0, inf) with g(1) and g''(1) recorded so the
// bridge and expansion formulas never differentiate numerically.
struct ConvexG {
    std::string name;
    std::function<double(double)> eval;
    double g_at_1 = 0.0;
    double g2_at_1 = 0.0;
};

// Built-in catalog: mlog (-ln x), xlogx (x ln x), sqrt2 (2(1-sqrt(x))^2).
// All satisfy g(1) = 0 and g''(1) = 1.
const std::vector<ConvexG>& catalog_g();

const ConvexG& find_g(const std::string& name);

// H_g(rho, sigma) = Tr(sqrt(rho) g(L_sigma R_{rho^{-1}}) (sqrt(rho))),
// evaluated as sum_{j,k} g(q_j/p_k) p_k |<s_j|r_k>|^2 over the two spectral
// decompositions; the modular operator's eigenoperators |s_j><r_k| make the
// double sum exact.
double relative_g_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                          const ConvexG& g);

// same double sum on raw spectral data (eigenvalues unsorted is fine);
// r_vecs/s_vecs hold eigenvectors as columns
double relative_g_entropy_spectral(const std::vector<double>& p, const ComplexMatrix& r_vecs,
                                   const std::vector<double>& q, const ComplexMatrix& s_vecs,
                                   const ConvexG& g);

// f(x) = (1-x)^2 / (g(x) + x g(1/x)) for normalized g; near x = 1 the
// removable singularity is resolved by the stored g''(1).
double f_from_g(const ConvexG& g, double x);

// the bridge packaged as a monotone-function object
MonotoneF bridged_f(const ConvexG& g);

// H_g(rho, sigma) - H_g(Phi rho, Phi sigma). Channel outputs are nudged back
// to faithfulness (symmetrically, both arguments) when a raw eigenvalue
// drops below 1e-9; the nudge is itself a CPTP map, so the data-processing
// inequality (defect >= 0) survives it.
double monotonicity_defect(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const CPTPChannel& phi, const ConvexG& g);

}  // namespace qig
