#include "qig/petz.hpp"

#include <cmath>

#include "qig/errors.hpp"

namespace qig {

namespace {

double f_sld(double x) { return 0.5 * (1.0 + x); }

double f_wy(double x) {
    const double s = std::sqrt(x);
    return 0.25 * (1.0 + s) * (1.0 + s);
}

// (x-1)/ln x, with the removable singularity at 1 handled by the Taylor
// expansion 1 + u/2 - u^2/12; naive evaluation cancels near 1
double f_kmb(double x) {
    const double u = x - 1.0;
    if (std::abs(u) < 1e-6) return 1.0 + 0.5 * u - u * u / 12.0;
    return u / std::log(x);
}

double f_rld(double x) { return 2.0 * x / (1.0 + x); }

}  // namespace

const std::vector<MonotoneF>& catalog_f() {
    static const std::vector<MonotoneF> cat = {
        {"sld", f_sld, true},
        {"wy", f_wy, true},
        {"kmb", f_kmb, true},
        {"rld", f_rld, true},
    };
    return cat;
}

const MonotoneF& find_f(const std::string& name) {
    for (const MonotoneF& f : catalog_f())
        if (f.name == name) return f;
    throw UnknownName("unknown f '" + name + "' (available: sld, wy, kmb, rld)");
}

double petz_metric(const DensityMatrix& rho, const TangentVectorS& a,
                   const TangentVectorS& b, const MonotoneF& f) {
    const std::size_t n = rho.dim();
    if (a.dim() != n || b.dim() != n)
        throw DimensionMismatch("petz_metric: state and tangent dimensions differ");

    const HermitianEig& spec = rho.spectrum();
    const ComplexMatrix& v = spec.eigenvectors;
    const ComplexMatrix at = v.adjoint() * a.a * v;
    const ComplexMatrix bt = v.adjoint() * b.a * v;

    // accumulate real parts term by term; the (j,k)/(k,j) pairing makes the
    // sum exactly symmetric in (a, b)
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double fv = f.eval(spec.eigenvalues[j] / spec.eigenvalues[k]);
            if (!std::isfinite(fv))
                throw DomainError("petz_metric: f non-finite at an eigenvalue ratio");
            const double denom = spec.eigenvalues[k] * fv;
            sum += std::real(std::conj(at(j, k)) * bt(j, k)) / denom;
        }
    return sum;
}

FSymmetryReport check_f_symmetry(const MonotoneF& f, const std::vector<double>& grid) {
    FSymmetryReport rep;
    rep.normalization_dev = std::abs(f.eval(1.0) - 1.0);
    for (double x : grid) {
        const double dev = std::abs(f.eval(x) - x * f.eval(1.0 / x));
        rep.symmetry_dev = std::max(rep.symmetry_dev, dev);
    }
    return rep;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        g[i] = std::exp(llo + t * (lhi - llo));
    }
    return g;
}

}  // namespace qig
