#include "qig/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qig/errors.hpp"

namespace qig {

QuantityCheck make_check(std::string name, double value, double reference, double abs_error,
                         double tolerance) {
    QuantityCheck c;
    c.name = std::move(name);
    c.value = value;
    c.reference = reference;
    c.abs_error = abs_error;
    c.tolerance = tolerance;
    c.pass = abs_error <= tolerance;
    return c;
}

void finalize_report(TrialReport& report) {
    report.pass = true;
    for (const QuantityCheck& c : report.checks) report.pass = report.pass && c.pass;
}

// -------------------------------------------------------------------------
// superoperator oracles

namespace {

// exactly Hermitian inverse / sqrt of a faithful state
ComplexMatrix hermitian_matrix_function(const ComplexMatrix& a, double (*phi)(double)) {
    return hermitian_part(matrix_function(a, phi));
}

double inv_phi(double x) { return 1.0 / x; }
double sqrt_phi(double x) { return std::sqrt(x); }

}  // namespace

double relative_g_entropy_superop(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  const ConvexG& g) {
    if (rho.dim() != sigma.dim())
        throw DimensionMismatch("relative_g_entropy_superop: dimensions differ");
    const ComplexMatrix rho_inv_t =
        hermitian_matrix_function(rho.mat(), inv_phi).transpose();
    // vec(sigma X rho^{-1}) = kron((rho^{-1})^T, sigma) vec(X)
    const ComplexMatrix modular = kron(rho_inv_t, sigma.mat());
    const ComplexMatrix g_modular = matrix_function(modular, g.eval, 1e-9);
    const ComplexMatrix w = vec_column(hermitian_matrix_function(rho.mat(), sqrt_phi));
    const ComplexMatrix gw = g_modular * w;
    return std::real(frobenius_inner(w, gw));
}

double petz_metric_superop(const DensityMatrix& rho, const TangentVectorS& a,
                           const TangentVectorS& b, const MonotoneF& f) {
    const std::size_t n = rho.dim();
    if (a.dim() != n || b.dim() != n)
        throw DimensionMismatch("petz_metric_superop: dimensions differ");
    const ComplexMatrix rho_inv_t =
        hermitian_matrix_function(rho.mat(), inv_phi).transpose();
    // L_rho R_{rho^{-1}} and R_rho in the vec basis; they commute
    const ComplexMatrix modular = kron(rho_inv_t, rho.mat());
    const ComplexMatrix right_mult = kron(rho.mat().transpose(), ComplexMatrix::identity(n));
    const ComplexMatrix inv_f_modular =
        matrix_function(modular, [&f](double x) { return 1.0 / f.eval(x); }, 1e-9);
    const ComplexMatrix inv_right = matrix_function(right_mult, inv_phi, 1e-9);
    const ComplexMatrix vb = vec_column(b.a);
    const ComplexMatrix kb = inv_right * (inv_f_modular * vb);
    return std::real(frobenius_inner(vec_column(a.a), kb));
}

WeightConventionReport weight_convention_report(const DensityMatrix& rho,
                                                const DensityMatrix& sigma, const ConvexG& g) {
    WeightConventionReport rep;
    rep.operator_route = relative_g_entropy_superop(rho, sigma, g);
    rep.weighted_sum = relative_g_entropy(rho, sigma, g);
    const std::size_t n = rho.dim();
    const auto& p = rho.spectrum().eigenvalues;
    const auto& q = sigma.spectrum().eigenvalues;
    const ComplexMatrix overlap = sigma.spectrum().eigenvectors.adjoint() * rho.spectrum().eigenvectors;
    double unweighted = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            unweighted += g.eval(q[j] / p[k]) * std::norm(overlap(j, k));
    rep.unweighted_sum = unweighted;
    return rep;
}

// -------------------------------------------------------------------------
// finite differences

namespace {

std::vector<double> simplex_on_curve(const ProbabilityVector& p, const std::vector<double>& v,
                                     double s) {
    std::vector<double> q(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        q[j] = p[j] + s * v[j];
        if (q[j] <= 1e-9) throw StepTooLarge("hessian_fd: curve left the faithful region");
    }
    return q;
}

// U * W diag(exp(i s mu)) W† — eigenvector frame of pi(gamma(s))
ComplexMatrix frame_on_curve(const ComplexMatrix& u, const HermitianEig& gen, double s) {
    const std::size_t n = u.rows();
    const ComplexMatrix& w = gen.eigenvectors;
    ComplexMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double ang = s * gen.eigenvalues[k];
                acc += w(i, k) * cplx(std::cos(ang), std::sin(ang)) * std::conj(w(j, k));
            }
            e(i, j) = acc;
        }
    return u * e;
}

}  // namespace

double hessian_fd(const UnfoldedPoint& m, const TangentVectorM& x, const TangentVectorM& y,
                  const ConvexG& g, double step) {
    if (!(step >= 1e-4 && step <= 1e-2))
        throw StepTooLarge("hessian_fd: step must lie in [1e-4, 1e-2]");
    const std::size_t n = m.dim();
    if (x.dim() != n || y.dim() != n) throw DimensionMismatch("hessian_fd: dimensions differ");

    const HermitianEig gen_x = eig_hermitian(x.h);
    const HermitianEig gen_y = eig_hermitian(y.h);

    // pi(gamma_x(s)) has eigenvalues p + s vx in the frame U exp(is Hx), so
    // the divergence is evaluated on exact spectral data; no eigensolver
    // noise enters the stencil
    const std::vector<double> px_plus = simplex_on_curve(m.p, x.v, step);
    const std::vector<double> px_minus = simplex_on_curve(m.p, x.v, -step);
    const std::vector<double> py_plus = simplex_on_curve(m.p, y.v, step);
    const std::vector<double> py_minus = simplex_on_curve(m.p, y.v, -step);
    const ComplexMatrix ux_plus = frame_on_curve(m.u.mat(), gen_x, step);
    const ComplexMatrix ux_minus = frame_on_curve(m.u.mat(), gen_x, -step);
    const ComplexMatrix uy_plus = frame_on_curve(m.u.mat(), gen_y, step);
    const ComplexMatrix uy_minus = frame_on_curve(m.u.mat(), gen_y, -step);

    const double fpp = relative_g_entropy_spectral(px_plus, ux_plus, py_plus, uy_plus, g);
    const double fpm = relative_g_entropy_spectral(px_plus, ux_plus, py_minus, uy_minus, g);
    const double fmp = relative_g_entropy_spectral(px_minus, ux_minus, py_plus, uy_plus, g);
    const double fmm = relative_g_entropy_spectral(px_minus, ux_minus, py_minus, uy_minus, g);

    return -(fpp - fpm - fmp + fmm) / (4.0 * step * step);
}

// -------------------------------------------------------------------------
// trial machinery

ProbabilityVector sample_interior_simplex(std::size_t n, SplitMix64& rng, double floor) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        ProbabilityVector p = sample_simplex(n, rng);
        double mn = p[0];
        for (std::size_t j = 1; j < n; ++j) mn = std::min(mn, p[j]);
        if (mn >= floor) return p;
    }
    throw ConfigError("sample_interior_simplex: floor too aggressive");
}

namespace {

constexpr double kInteriorFloor = 1e-2;

UnfoldedPoint sample_point(std::size_t n, SplitMix64& rng, double floor) {
    UnitaryMatrix u = haar_unitary(n, rng);
    ProbabilityVector p = sample_interior_simplex(n, rng, floor);
    return UnfoldedPoint(std::move(u), std::move(p));
}

TangentVectorS random_traceless(std::size_t n, SplitMix64& rng) {
    ComplexMatrix h = random_tangent_m(n, rng).h;
    const cplx shift = h.trace() / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) h(j, j) -= shift;
    return TangentVectorS(hermitian_part(h));
}

// commuting direction: diagonal generator plus a simplex velocity
TangentVectorM random_commuting_tangent(std::size_t n, SplitMix64& rng) {
    ComplexMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j) h(j, j) = rng.next_gaussian();
    std::vector<double> v(n);
    double mean = 0.0;
    for (double& e : v) {
        e = rng.next_gaussian();
        mean += e;
    }
    mean /= static_cast<double>(n);
    for (double& e : v) e -= mean;
    return TangentVectorM(std::move(h), std::move(v));
}

TangentVectorM scaled_tangent(const TangentVectorM& t, double s) {
    ComplexMatrix h = t.h;
    h *= cplx(s, 0.0);
    std::vector<double> v = t.v;
    for (double& e : v) e *= s;
    return TangentVectorM(std::move(h), std::move(v));
}

struct SuiteDefaults {
    std::vector<int> n_values;
    int trials;
    double tol;
};

SuiteDefaults defaults_for(Suite s) {
    switch (s) {
        case Suite::split: return {{2, 3, 4}, 100, 1e-9};
        case Suite::expansion: return {{2, 3, 4}, 100, 1e-9};
        case Suite::hessian: return {{2, 3}, 30, 5e-4};
        case Suite::monotonicity: return {{2, 3, 4}, 500, 1e-9};
        case Suite::fg_bridge: return {{2}, 1, 1e-12};
        case Suite::kernel: return {{2, 3, 4}, 100, 1e-10};
        case Suite::classical: return {{2, 3, 4}, 100, 1e-10};
    }
    throw ConfigError("unknown suite");
}

struct ResolvedConfig {
    Suite suite;
    std::vector<int> n_values;
    int trials;
    std::uint64_t seed;
    double step;
    double tol;
};

ResolvedConfig resolve(const SuiteConfig& config) {
    const SuiteDefaults d = defaults_for(config.suite);
    ResolvedConfig r;
    r.suite = config.suite;
    r.n_values = config.n_values.empty() ? d.n_values : config.n_values;
    for (int n : r.n_values)
        if (n < 2) throw ConfigError("suite config: n must be >= 2");
    r.trials = config.trials < 0 ? d.trials : config.trials;
    r.seed = config.seed;
    r.step = config.step;
    r.tol = config.tol < 0.0 ? d.tol : config.tol;
    if (r.suite == Suite::hessian && !(r.step >= 1e-4 && r.step <= 1e-2))
        throw ConfigError("suite config: hessian step must lie in [1e-4, 1e-2]");
    return r;
}

std::vector<TrialReport> run_split_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    std::uint64_t stream = 0;
    int trial_id = 0;
    for (int n : cfg.n_values)
        for (const MonotoneF& f : catalog_f())
            for (int t = 0; t < cfg.trials; ++t, ++stream, ++trial_id) {
                const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, stream);
                SplitMix64 rng(tseed);
                const UnfoldedPoint m = sample_point(n, rng, kInteriorFloor);
                const TangentVectorM x = random_tangent_m(n, rng);
                const TangentVectorM y = random_tangent_m(n, rng);
                const double total = split_metric(m, x, y, f).total;
                const double ref = pullback_metric(m, x, y, f);
                TrialReport rep;
                rep.trial_id = trial_id;
                rep.seed = tseed;
                rep.n = n;
                rep.f_name = f.name;
                rep.checks.push_back(make_check("split-identity", total, ref,
                                                std::abs(total - ref), cfg.tol));
                finalize_report(rep);
                out.push_back(std::move(rep));
            }
    return out;
}

std::vector<TrialReport> run_expansion_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    std::uint64_t stream = 0;
    int trial_id = 0;
    for (int n : cfg.n_values)
        for (const ConvexG& g : catalog_g()) {
            const MonotoneF f = bridged_f(g);
            for (int t = 0; t < cfg.trials; ++t, ++stream, ++trial_id) {
                const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, stream);
                SplitMix64 rng(tseed);
                const UnfoldedPoint m = sample_point(n, rng, kInteriorFloor);
                const TangentVectorM x = random_tangent_m(n, rng);
                const TangentVectorM y = random_tangent_m(n, rng);
                const double value = g_expansion_metric(m, x, y, g);
                const double ref = split_metric(m, x, y, f).total;
                TrialReport rep;
                rep.trial_id = trial_id;
                rep.seed = tseed;
                rep.n = n;
                rep.f_name = f.name;
                rep.g_name = g.name;
                rep.checks.push_back(make_check("expansion-identity", value, ref,
                                                std::abs(value - ref), cfg.tol));
                finalize_report(rep);
                out.push_back(std::move(rep));
            }
        }
    return out;
}

std::vector<TrialReport> run_hessian_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    const auto& gs = catalog_g();
    double sum_err_full = 0.0, sum_err_half = 0.0;
    double sum_fd_closed = 0.0, sum_closed_sq = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
        const int n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
        const ConvexG& g =
            gs[(static_cast<std::size_t>(t) / cfg.n_values.size()) % gs.size()];
        const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, t);
        SplitMix64 rng(tseed);
        // smooth trials: stay away from the simplex boundary and keep the
        // curves short so the h^2 stencil term dominates
        const UnfoldedPoint m = sample_point(n, rng, 0.1);
        const TangentVectorM x = scaled_tangent(random_tangent_m(n, rng), 0.5);
        const TangentVectorM y = scaled_tangent(random_tangent_m(n, rng), 0.5);
        const double closed = g_expansion_metric(m, x, y, g);
        const double fd_full = hessian_fd(m, x, y, g, cfg.step);
        const double fd_half = hessian_fd(m, x, y, g, 0.5 * cfg.step);
        const double err_full = std::abs(fd_full - closed);
        const double err_half = std::abs(fd_half - closed);
        sum_err_full += err_full;
        sum_err_half += err_half;
        sum_fd_closed += fd_full * closed;
        sum_closed_sq += closed * closed;
        TrialReport rep;
        rep.trial_id = t;
        rep.seed = tseed;
        rep.n = n;
        rep.g_name = g.name;
        rep.checks.push_back(make_check("hessian-fd", fd_full, closed, err_full, cfg.tol));
        rep.checks.push_back(make_check("hessian-fd-half", fd_half, closed, err_half, cfg.tol));
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    if (cfg.trials > 0) {
        // aggregate convergence order and the empirical FD/closed-form
        // proportionality constant
        TrialReport rep;
        rep.trial_id = cfg.trials;
        rep.seed = cfg.seed;
        rep.n = 0;
        const double ratio = sum_err_half > 0.0 ? sum_err_full / sum_err_half : 4.0;
        rep.checks.push_back(make_check("fd-ratio", ratio, 4.0, std::abs(ratio - 4.0), 1.0));
        const double fitted =
            sum_closed_sq > 0.0 ? sum_fd_closed / sum_closed_sq : 1.0;
        rep.checks.push_back(
            make_check("fd-fitted-constant", fitted, 1.0, std::abs(fitted - 1.0), 1e-3));
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<TrialReport> run_monotonicity_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    const auto& fs = catalog_f();
    const auto& gs = catalog_g();
    std::uint64_t stream = 0;
    // metric contraction family
    for (int t = 0; t < cfg.trials; ++t, ++stream) {
        const int n = cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()];
        const MonotoneF& f =
            fs[(static_cast<std::size_t>(t) / cfg.n_values.size()) % fs.size()];
        const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, stream);
        SplitMix64 rng(tseed);
        TrialReport rep = metric_monotonicity_trial(n, f, rng);
        rep.trial_id = t;
        rep.seed = tseed;
        for (QuantityCheck& c : rep.checks) {
            c.tolerance = cfg.tol;
            c.pass = c.abs_error <= c.tolerance;
        }
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    // g-entropy data-processing family, cycling channel shapes
    for (int t = 0; t < cfg.trials; ++t, ++stream) {
        const std::size_t n =
            static_cast<std::size_t>(cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()]);
        const ConvexG& g =
            gs[(static_cast<std::size_t>(t) / cfg.n_values.size()) % gs.size()];
        const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, stream);
        SplitMix64 rng(tseed);
        const UnfoldedPoint mr = sample_point(n, rng, 0.0);
        const UnfoldedPoint ms = sample_point(n, rng, 0.0);
        const DensityMatrix rho = project(mr);
        const DensityMatrix sigma = project(ms);

        const int kind = t % 6;
        std::string kind_name;
        CPTPChannel phi = identity_channel(n);
        switch (kind) {
            case 0:
                kind_name = "rank2";
                phi = random_cptp(n, n, 2, rng);
                break;
            case 1:
                kind_name = "dim-up";
                phi = random_cptp(n, n + 1, 2, rng);
                break;
            case 2:
                kind_name = "dim-down";
                phi = n >= 3 ? random_cptp(n, n - 1, 2, rng) : random_cptp(n, n, 2, rng);
                kind_name = n >= 3 ? kind_name : "rank2";
                break;
            case 3:
                kind_name = "depolarizing";
                phi = depolarizing_channel(n);
                break;
            case 4:
                kind_name = "unitary";
                phi = unitary_channel(haar_unitary(n, rng));
                break;
            default:
                kind_name = "identity";
                break;
        }
        const double defect = monotonicity_defect(rho, sigma, phi, g);
        TrialReport rep;
        rep.trial_id = cfg.trials + t;
        rep.seed = tseed;
        rep.n = static_cast<int>(n);
        rep.g_name = g.name;
        if (kind == 4 || kind == 5) {
            rep.checks.push_back(make_check("entropy-dpi-equality(" + kind_name + ")", defect,
                                            0.0, std::abs(defect), 1e-10));
        } else {
            rep.checks.push_back(make_check("entropy-dpi(" + kind_name + ")", defect, 0.0,
                                            std::max(0.0, -defect), cfg.tol));
        }
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<TrialReport> run_fg_bridge_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    if (cfg.trials <= 0) return out;
    const std::vector<double> bridge_grid = log_grid(0.01, 100.0, 200);
    const std::vector<double> sym_grid = log_grid(1e-4, 1e4, 201);
    int trial_id = 0;
    // g -> f bridge against the named catalog entries
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"mlog", "kmb"}, {"xlogx", "kmb"}, {"sqrt2", "wy"}};
    for (const auto& [gname, fname] : pairs) {
        const ConvexG& g = find_g(gname);
        const MonotoneF& f = find_f(fname);
        double dev = 0.0;
        for (double xval : bridge_grid)
            dev = std::max(dev, std::abs(f_from_g(g, xval) - f.eval(xval)));
        TrialReport rep;
        rep.trial_id = trial_id++;
        rep.seed = cfg.seed;
        rep.n = 0;
        rep.f_name = fname;
        rep.g_name = gname;
        rep.checks.push_back(
            make_check("bridge(" + gname + "->" + fname + ")", dev, 0.0, dev, cfg.tol));
        const double at_one = f_from_g(g, 1.0);
        rep.checks.push_back(make_check("bridge-at-one(" + gname + ")", at_one, 1.0,
                                        std::abs(at_one - 1.0), cfg.tol));
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    // f normalization and symmetry on the wide grid
    for (const MonotoneF& f : catalog_f()) {
        const FSymmetryReport rep_f = check_f_symmetry(f, sym_grid);
        TrialReport rep;
        rep.trial_id = trial_id++;
        rep.seed = cfg.seed;
        rep.n = 0;
        rep.f_name = f.name;
        rep.checks.push_back(make_check("fsym-normalization(" + f.name + ")",
                                        rep_f.normalization_dev, 0.0, rep_f.normalization_dev,
                                        1e-10));
        rep.checks.push_back(make_check("fsym-symmetry(" + f.name + ")", rep_f.symmetry_dev,
                                        0.0, rep_f.symmetry_dev, 1e-10));
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<TrialReport> run_kernel_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    for (int t = 0; t < cfg.trials; ++t) {
        const std::size_t n =
            static_cast<std::size_t>(cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()]);
        const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, t);
        SplitMix64 rng(tseed);
        const UnfoldedPoint m = sample_point(n, rng, kInteriorFloor);
        // kernel direction: diagonal generator, frozen simplex leg
        ComplexMatrix h(n, n);
        for (std::size_t j = 0; j < n; ++j) h(j, j) = rng.next_gaussian();
        const TangentVectorM x(std::move(h), std::vector<double>(n, 0.0));
        const TangentVectorM y = random_tangent_m(n, rng);
        TrialReport rep;
        rep.trial_id = t;
        rep.seed = tseed;
        rep.n = static_cast<int>(n);
        for (const MonotoneF& f : catalog_f()) {
            const double pb = pullback_metric(m, x, y, f);
            const double sp = split_metric(m, x, y, f).total;
            rep.checks.push_back(
                make_check("kernel-pullback(" + f.name + ")", pb, 0.0, std::abs(pb), cfg.tol));
            rep.checks.push_back(
                make_check("kernel-split(" + f.name + ")", sp, 0.0, std::abs(sp), cfg.tol));
        }
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<TrialReport> run_classical_suite(const ResolvedConfig& cfg) {
    std::vector<TrialReport> out;
    for (int t = 0; t < cfg.trials; ++t) {
        const std::size_t n =
            static_cast<std::size_t>(cfg.n_values[static_cast<std::size_t>(t) % cfg.n_values.size()]);
        const std::uint64_t tseed = SplitMix64::derive_seed(cfg.seed, t);
        SplitMix64 rng(tseed);
        const UnfoldedPoint m = sample_point(n, rng, kInteriorFloor);
        const TangentVectorM x = random_commuting_tangent(n, rng);
        const TangentVectorM y = random_commuting_tangent(n, rng);
        const double fr = fisher_rao(m.p, x.v, y.v);
        TrialReport rep;
        rep.trial_id = t;
        rep.seed = tseed;
        rep.n = static_cast<int>(n);
        for (const MonotoneF& f : catalog_f()) {
            const double pb = pullback_metric(m, x, y, f);
            rep.checks.push_back(make_check("classical-limit(" + f.name + ")", pb, fr,
                                            std::abs(pb - fr), cfg.tol));
        }
        // commuting pair of states: common eigenframe, classical reduction
        const ProbabilityVector q = sample_interior_simplex(n, rng, kInteriorFloor);
        const DensityMatrix rho = project(m);
        const DensityMatrix sigma = project(UnfoldedPoint(m.u, q));
        for (const ConvexG& g : catalog_g()) {
            double classical_sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) classical_sum += m.p[j] * g.eval(q[j] / m.p[j]);
            const double hg = relative_g_entropy(rho, sigma, g);
            rep.checks.push_back(make_check("commuting-reduction(" + g.name + ")", hg,
                                            classical_sum, std::abs(hg - classical_sum),
                                            cfg.tol));
        }
        if (t == 0) {
            // frozen hand value: H_{-ln}(diag(.5,.5), diag(.25,.75)) = ln(4/3)/2
            const DensityMatrix r2(
                embed_diagonal(ProbabilityVector(std::vector<double>{0.5, 0.5})));
            const DensityMatrix s2(
                embed_diagonal(ProbabilityVector(std::vector<double>{0.25, 0.75})));
            const double hg = relative_g_entropy(r2, s2, find_g("mlog"));
            rep.checks.push_back(make_check("commuting-frozen-kl", hg, 0.14384103622589046,
                                            std::abs(hg - 0.14384103622589046), 1e-12));
        }
        finalize_report(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace

TrialReport metric_monotonicity_trial(int n, const MonotoneF& f, SplitMix64& rng) {
    const auto dim = static_cast<std::size_t>(n);
    const UnfoldedPoint point = sample_point(dim, rng, kInteriorFloor);
    const DensityMatrix rho = project(point);
    const TangentVectorS a = random_traceless(dim, rng);
    const CPTPChannel phi = random_cptp(dim, dim, 2, rng);
    const DensityMatrix mapped_rho = apply_channel(phi, rho);
    const TangentVectorS mapped_a(hermitian_part(apply_channel_raw(phi, a.a)));
    const double lhs = petz_metric(mapped_rho, mapped_a, mapped_a, f);
    const double rhs = petz_metric(rho, a, a, f);
    TrialReport rep;
    rep.n = n;
    rep.f_name = f.name;
    rep.checks.push_back(
        make_check("metric-dpi", lhs, rhs, std::max(0.0, lhs - rhs), 1e-9));
    finalize_report(rep);
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "split", "expansion", "hessian", "monotonicity", "fg-bridge", "kernel", "classical"};
    return names;
}

std::string suite_name(Suite s) { return suite_names()[static_cast<std::size_t>(s)]; }

Suite suite_from_name(const std::string& name) {
    const auto& names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<Suite>(i);
    std::string msg = "unknown suite '" + name + "' (available:";
    for (const std::string& s : names) msg += " " + s;
    throw ConfigError(msg + ")");
}

std::vector<TrialReport> run_suite(const SuiteConfig& config) {
    const ResolvedConfig cfg = resolve(config);
    if (cfg.trials == 0) return {};
    switch (cfg.suite) {
        case Suite::split: return run_split_suite(cfg);
        case Suite::expansion: return run_expansion_suite(cfg);
        case Suite::hessian: return run_hessian_suite(cfg);
        case Suite::monotonicity: return run_monotonicity_suite(cfg);
        case Suite::fg_bridge: return run_fg_bridge_suite(cfg);
        case Suite::kernel: return run_kernel_suite(cfg);
        case Suite::classical: return run_classical_suite(cfg);
    }
    throw ConfigError("unknown suite");
}

bool all_pass(const std::vector<TrialReport>& reports) {
    for (const TrialReport& r : reports)
        if (!r.pass) return false;
    return true;
}

double max_abs_error(const std::vector<TrialReport>& reports) {
    double m = 0.0;
    for (const TrialReport& r : reports)
        for (const QuantityCheck& c : r.checks) m = std::max(m, c.abs_error);
    return m;
}

nlohmann::ordered_json report_to_json(const TrialReport& report) {
    nlohmann::ordered_json j;
    j["trial"] = report.trial_id;
    j["seed"] = report.seed;
    j["n"] = report.n;
    j["f"] = report.f_name;
    j["g"] = report.g_name;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const QuantityCheck& c : report.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["value"] = c.value;
        cj["reference"] = c.reference;
        cj["abs_error"] = c.abs_error;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass;
    return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<TrialReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TrialReport& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string reports_to_csv(const std::vector<TrialReport>& reports, const std::string& suite) {
    std::ostringstream os;
    os << "suite,trial,seed,n,f,g,check,value,reference,abs_error,tolerance,pass\n";
    for (const TrialReport& r : reports)
        for (const QuantityCheck& c : r.checks) {
            os << suite << ',' << r.trial_id << ',' << r.seed << ',' << r.n << ',' << r.f_name
               << ',' << r.g_name << ',' << c.name << ',' << format_double(c.value) << ','
               << format_double(c.reference) << ',' << format_double(c.abs_error) << ','
               << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
        }
    return os.str();
}

}  // namespace qig
