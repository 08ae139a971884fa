#include "qig/unfold.hpp"

#include <cmath>

#include "qig/errors.hpp"

namespace qig {

DensityMatrix project(const UnfoldedPoint& m) {
    const std::size_t n = m.dim();
    ComplexMatrix d(n, n);
    for (std::size_t j = 0; j < n; ++j) d(j, j) = m.p[j];
    ComplexMatrix rho = m.u.mat() * d * m.u.mat().adjoint();
    return DensityMatrix(hermitian_part(rho));
}

ProbabilityVector dequantize(const UnfoldedPoint& m) { return m.p; }

TangentVectorS tangent_project(const UnfoldedPoint& m, const TangentVectorM& x) {
    const std::size_t n = m.dim();
    if (x.dim() != n) throw DimensionMismatch("tangent_project: dimensions differ");
    // [iH, diag(p)] + diag(v), entrywise: (iH)_{jk} (p_k - p_j) + v_j delta_jk
    ComplexMatrix inner(n, n);
    const cplx iu(0.0, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k)
            inner(j, k) = iu * x.h(j, k) * (m.p[k] - m.p[j]);
        inner(j, j) += x.v[j];
    }
    ComplexMatrix out = m.u.mat() * inner * m.u.mat().adjoint();
    return TangentVectorS(hermitian_part(out));
}

double fisher_rao(const ProbabilityVector& p, const std::vector<double>& v,
                  const std::vector<double>& u) {
    const std::size_t n = p.size();
    if (v.size() != n || u.size() != n)
        throw DimensionMismatch("fisher_rao: vector lengths differ from simplex dimension");
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += v[j] * u[j] / p[j];
    return sum;
}

double pullback_metric(const UnfoldedPoint& m, const TangentVectorM& x,
                       const TangentVectorM& y, const MonotoneF& f) {
    return petz_metric(project(m), tangent_project(m, x), tangent_project(m, y), f);
}

SplitMetricValue split_metric(const UnfoldedPoint& m, const TangentVectorM& x,
                              const TangentVectorM& y, const MonotoneF& f) {
    const std::size_t n = m.dim();
    if (x.dim() != n || y.dim() != n)
        throw DimensionMismatch("split_metric: dimensions differ");
    SplitMetricValue out;
    out.classical = fisher_rao(m.p, x.v, y.v);
    double quantum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const double dp = m.p[k] - m.p[j];
            if (dp == 0.0) continue;  // degenerate entries contribute nothing
            const double fv = f.eval(m.p[j] / m.p[k]);
            if (!std::isfinite(fv))
                throw DomainError("split_metric: f non-finite at a simplex ratio");
            const double coef = dp * dp / (m.p[k] * fv);
            quantum += 2.0 * coef * std::real(x.h(k, j) * std::conj(y.h(k, j)));
        }
    out.quantum = quantum;
    out.total = out.classical + out.quantum;
    return out;
}

double g_expansion_metric(const UnfoldedPoint& m, const TangentVectorM& x,
                          const TangentVectorM& y, const ConvexG& g) {
    const std::size_t n = m.dim();
    if (x.dim() != n || y.dim() != n)
        throw DimensionMismatch("g_expansion_metric: dimensions differ");

    const double term_fr = g.g2_at_1 * fisher_rao(m.p, x.v, y.v);

    // the two g(1) terms vanish for normalized g but are kept so the
    // expansion is the literal four-term formula
    double term_anti = 0.0;
    double term_diag = 0.0;
    if (g.g_at_1 != 0.0) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx anti = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                anti += x.h(j, k) * y.h(k, j) + y.h(j, k) * x.h(k, j);
            // <e_j|(iHx)(iHy) + (iHy)(iHx)|e_j> = -(HxHy + HyHx)_{jj}
            term_anti += -g.g_at_1 * m.p[j] * std::real(anti);
            term_diag += 2.0 * g.g_at_1 * m.p[j] * std::real(x.h(j, j)) * std::real(y.h(j, j));
        }
    }

    double term_offdiag = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const double ratio_jk = m.p[j] / m.p[k];
            const double gjk = g.eval(ratio_jk);
            const double gkj = g.eval(1.0 / ratio_jk);
            if (!std::isfinite(gjk) || !std::isfinite(gkj))
                throw DomainError("g_expansion_metric: g non-finite at a simplex ratio");
            const double coef = gjk * m.p[k] + gkj * m.p[j];
            // -2 coef Re((iHx)_{kj}(iHy)_{jk}) = +2 coef Re(Hx_{kj} conj(Hy_{kj}))
            term_offdiag += 2.0 * coef * std::real(x.h(k, j) * std::conj(y.h(k, j)));
        }

    return term_fr + term_anti + term_diag + term_offdiag;
}

}  // namespace qig
