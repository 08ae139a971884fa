#pragma once

// Catalog of operator monotone functions and evaluation of the associated
// monotone metrics on the faithful-state manifold.

#include <functional>
#include <string>
#include <vector>

#include "qig/states.hpp"

namespace qig {

// Operator monotone function on (0, inf). `claims_normalized` asserts
// f(1) = 1 and the symmetry f(x) = x f(1/x).
struct MonotoneF {
    std::string name;
    std::function<double(double)> eval;
    bool claims_normalized = false;
};

// Built-in catalog: sld (Bures), wy (Wigner-Yanase), kmb (Kubo-Mori),
// rld (right logarithmic derivative). All normalized.
const std::vector<MonotoneF>& catalog_f();

// Lookup by name; throws UnknownName listing the available names.
const MonotoneF& find_f(const std::string& name);

// Monotone metric value Tr(A (K^f_rho)^{-1}(B)). Evaluated in rho's
// eigenbasis as sum_{j,k} conj(At_jk) Bt_jk / (lam_k f(lam_j/lam_k)) with
// At = V†AV, Bt = V†BV; the modular operator diagonalizes exactly on the
// matrix units of that basis, so no superoperator is ever formed.
double petz_metric(const DensityMatrix& rho, const TangentVectorS& a,
                   const TangentVectorS& b, const MonotoneF& f);

// Diagnostic: worst deviations from f(1) = 1 and f(x) = x f(1/x) over a
// grid. Reports, never throws.
struct FSymmetryReport {
    double normalization_dev = 0.0;  // |f(1) - 1|
    double symmetry_dev = 0.0;       // sup over grid of |f(x) - x f(1/x)|
};

FSymmetryReport check_f_symmetry(const MonotoneF& f, const std::vector<double>& grid);

// log-spaced grid helper used by the symmetry and bridge checks
std::vector<double> log_grid(double lo, double hi, std::size_t points);

}  // namespace qig
