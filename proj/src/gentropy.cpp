#include "qig/gentropy.hpp"

#include <cmath>

#include "qig/errors.hpp"

namespace qig {

namespace {

double g_mlog(double x) { return -std::log(x); }
double g_xlogx(double x) { return x * std::log(x); }
double g_sqrt2(double x) {
    const double d = 1.0 - std::sqrt(x);
    return 2.0 * d * d;
}

}  // namespace

const std::vector<ConvexG>& catalog_g() {
    static const std::vector<ConvexG> cat = {
        {"mlog", g_mlog, 0.0, 1.0},
        {"xlogx", g_xlogx, 0.0, 1.0},
        {"sqrt2", g_sqrt2, 0.0, 1.0},
    };
    return cat;
}

const ConvexG& find_g(const std::string& name) {
    for (const ConvexG& g : catalog_g())
        if (g.name == name) return g;
    throw UnknownName("unknown g '" + name + "' (available: mlog, xlogx, sqrt2)");
}

double relative_g_entropy_spectral(const std::vector<double>& p, const ComplexMatrix& r_vecs,
                                   const std::vector<double>& q, const ComplexMatrix& s_vecs,
                                   const ConvexG& g) {
    const std::size_t n = p.size();
    if (q.size() != n || r_vecs.rows() != n || s_vecs.rows() != n)
        throw DimensionMismatch("relative_g_entropy: dimensions differ");
    const ComplexMatrix overlap = s_vecs.adjoint() * r_vecs;  // <s_j|r_k>
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double w = std::norm(overlap(j, k));
            const double gv = g.eval(q[j] / p[k]);
            if (!std::isfinite(gv))
                throw DomainError("relative_g_entropy: g non-finite at an eigenvalue ratio");
            sum += gv * p[k] * w;
        }
    return sum;
}

double relative_g_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                          const ConvexG& g) {
    if (rho.dim() != sigma.dim())
        throw DimensionMismatch("relative_g_entropy: state dimensions differ");
    return relative_g_entropy_spectral(rho.spectrum().eigenvalues, rho.spectrum().eigenvectors,
                                       sigma.spectrum().eigenvalues, sigma.spectrum().eigenvectors,
                                       g);
}

double f_from_g(const ConvexG& g, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("f_from_g: x must be in (0, inf)");
    if (std::abs(g.g_at_1) > 1e-12) throw NotNormalized("f_from_g: requires g(1) = 0");
    if (std::abs(x - 1.0) < 1e-5) return 1.0 / g.g2_at_1;
    const double denom = g.eval(x) + x * g.eval(1.0 / x);
    if (std::abs(denom) < 1e-300)
        throw DegenerateDenominator("f_from_g: denominator vanished away from x = 1");
    const double d = 1.0 - x;
    return d * d / denom;
}

MonotoneF bridged_f(const ConvexG& g) {
    MonotoneF f;
    f.name = "f_from_g(" + g.name + ")";
    f.eval = [g](double x) { return f_from_g(g, x); };
    f.claims_normalized = std::abs(g.g_at_1) <= 1e-12 && std::abs(g.g2_at_1 - 1.0) <= 1e-12;
    return f;
}

double monotonicity_defect(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const CPTPChannel& phi, const ConvexG& g) {
    if (rho.dim() != phi.in_dim || sigma.dim() != phi.in_dim)
        throw DimensionMismatch("monotonicity_defect: channel input dimension mismatch");
    ComplexMatrix out_r = hermitian_part(apply_channel_raw(phi, rho.mat()));
    ComplexMatrix out_s = hermitian_part(apply_channel_raw(phi, sigma.mat()));
    const double min_r = eig_hermitian(out_r, 1e-10).eigenvalues.front();
    const double min_s = eig_hermitian(out_s, 1e-10).eigenvalues.front();
    if (min_r < 1e-9 || min_s < 1e-9) {
        const std::size_t m = phi.out_dim;
        const double eps = 1e-9;
        const double mix = eps / static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) {
            out_r(i, i) += mix;
            out_s(i, i) += mix;
        }
        out_r *= cplx(1.0 / (1.0 + eps), 0.0);
        out_s *= cplx(1.0 / (1.0 + eps), 0.0);
    }
    const DensityMatrix mapped_r(std::move(out_r));
    const DensityMatrix mapped_s(std::move(out_s));
    return relative_g_entropy(rho, sigma, g) - relative_g_entropy(mapped_r, mapped_s, g);
}

}  // namespace qig
