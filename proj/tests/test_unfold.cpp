#include <cmath>

#include "doctest.h"
#include "qig/errors.hpp"
#include "qig/unfold.hpp"
#include "test_helpers.hpp"

using namespace qig;
using namespace qig::test;

namespace {

UnfoldedPoint identity_point(std::vector<double> p) {
    const std::size_t n = p.size();
    return UnfoldedPoint(UnitaryMatrix(ComplexMatrix::identity(n)),
                         ProbabilityVector(std::move(p)));
}

TangentVectorM unitary_direction(ComplexMatrix h) {
    const std::size_t n = h.rows();
    return TangentVectorM(std::move(h), std::vector<double>(n, 0.0));
}

}  // namespace

TEST_SUITE("unfold") {

TEST_CASE("project with the identity unitary is the diagonal embedding") {
    const UnfoldedPoint m = identity_point({0.2, 0.3, 0.5});
    const DensityMatrix rho = project(m);
    CHECK(max_abs_diff(rho.mat(), embed_diagonal(m.p).mat()) == 0.0);
}

TEST_CASE("project of the uniform simplex is isotropic") {
    SplitMix64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const UnfoldedPoint m(haar_unitary(4, rng),
                              ProbabilityVector({0.25, 0.25, 0.25, 0.25}));
        ComplexMatrix expected = ComplexMatrix::identity(4);
        expected *= cplx(0.25, 0.0);
        CHECK(max_abs_diff(project(m).mat(), expected) < 1e-14);
    }
}

TEST_CASE("dequantize forgets the unitary") {
    SplitMix64 rng(5);
    const ProbabilityVector p({0.3, 0.7});
    const UnfoldedPoint a(haar_unitary(2, rng), p);
    const UnfoldedPoint b(haar_unitary(2, rng), p);
    const ProbabilityVector pa = dequantize(a);
    const ProbabilityVector pb = dequantize(b);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(pa[j] == p[j]);
        CHECK(pb[j] == p[j]);
    }
}

TEST_CASE("tangent map: pure simplex motion at the identity") {
    const UnfoldedPoint m = identity_point({0.25, 0.75});
    const TangentVectorM x(ComplexMatrix(2, 2), {0.1, -0.1});
    const TangentVectorS a = tangent_project(m, x);
    CHECK(a.a(0, 0) == cplx(0.1, 0.0));
    CHECK(a.a(1, 1) == cplx(-0.1, 0.0));
    CHECK(a.a(0, 1) == cplx(0.0, 0.0));
}

TEST_CASE("tangent map annihilates diagonal generators") {
    SplitMix64 rng(7);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnfoldedPoint m(haar_unitary(n, rng), sample_simplex(n, rng));
        ComplexMatrix h(n, n);
        for (std::size_t j = 0; j < n; ++j) h(j, j) = rng.next_gaussian();
        const TangentVectorS a = tangent_project(m, unitary_direction(std::move(h)));
        CHECK(a.a.max_abs() == 0.0);  // [i diag, diag(p)] vanishes identically
    }
}

TEST_CASE("tangent map output is traceless") {
    SplitMix64 rng(9);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnfoldedPoint m(haar_unitary(n, rng), sample_simplex(n, rng));
        const TangentVectorS a = tangent_project(m, random_tangent_m(n, rng));
        CHECK(std::abs(a.a.trace()) < 1e-13);
    }
}

TEST_CASE("fisher_rao basics") {
    CHECK(fisher_rao(ProbabilityVector({0.5, 0.5}), {1.0, -1.0}, {1.0, -1.0}) == 4.0);
    CHECK(fisher_rao(ProbabilityVector({0.2, 0.8}), {0.0, 0.0}, {1.0, -1.0}) == 0.0);
    // uniform p factors out n
    SplitMix64 rng(11);
    const TangentVectorM x = random_tangent_m(4, rng);
    const TangentVectorM y = random_tangent_m(4, rng);
    double dot = 0.0;
    for (std::size_t j = 0; j < 4; ++j) dot += x.v[j] * y.v[j];
    CHECK(fisher_rao(ProbabilityVector({0.25, 0.25, 0.25, 0.25}), x.v, y.v) ==
          doctest::Approx(4.0 * dot).epsilon(1e-13));
    CHECK_THROWS_AS(fisher_rao(ProbabilityVector({0.5, 0.5}), {1.0, -1.0, 0.0}, {1.0, -1.0}),
                    DimensionMismatch);
}

TEST_CASE("kernel directions are annihilated by the pulled-back metric") {
    SplitMix64 rng(13);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnfoldedPoint m(haar_unitary(n, rng), sample_simplex(n, rng));
        ComplexMatrix h(n, n);
        for (std::size_t j = 0; j < n; ++j) h(j, j) = rng.next_gaussian();
        const TangentVectorM x = unitary_direction(std::move(h));
        const TangentVectorM y = random_tangent_m(n, rng);
        for (const MonotoneF& f : catalog_f()) {
            CHECK(pullback_metric(m, x, y, f) == 0.0);
            CHECK(split_metric(m, x, y, f).total == 0.0);
        }
    }
}

TEST_CASE("simplex-only tangents at the identity reproduce fisher-rao for every f") {
    SplitMix64 rng(17);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnfoldedPoint m(UnitaryMatrix(ComplexMatrix::identity(n)),
                              sample_simplex(n, rng));
        const TangentVectorM x(ComplexMatrix(n, n), random_tangent_m(n, rng).v);
        const double fr = fisher_rao(m.p, x.v, x.v);
        for (const MonotoneF& f : catalog_f())
            CHECK(pullback_metric(m, x, x, f) == doctest::Approx(fr).epsilon(1e-11));
    }
}

TEST_CASE("pullback metric is symmetric") {
    SplitMix64 rng(19);
    const UnfoldedPoint m(haar_unitary(3, rng), sample_simplex(3, rng));
    const TangentVectorM x = random_tangent_m(3, rng);
    const TangentVectorM y = random_tangent_m(3, rng);
    for (const MonotoneF& f : catalog_f())
        CHECK(std::abs(pullback_metric(m, x, y, f) - pullback_metric(m, y, x, f)) < 1e-12);
}

TEST_CASE("split with zero generators is purely classical") {
    SplitMix64 rng(23);
    const UnfoldedPoint m(haar_unitary(3, rng), sample_simplex(3, rng));
    const TangentVectorM x(ComplexMatrix(3, 3), random_tangent_m(3, rng).v);
    const TangentVectorM y(ComplexMatrix(3, 3), random_tangent_m(3, rng).v);
    for (const MonotoneF& f : catalog_f()) {
        const SplitMetricValue s = split_metric(m, x, y, f);
        CHECK(s.quantum == 0.0);
        CHECK(s.total == fisher_rao(m.p, x.v, y.v));
    }
}

TEST_CASE("split at the uniform simplex has no unitary block") {
    SplitMix64 rng(29);
    const std::vector<double> uniform(4, 0.25);
    const UnfoldedPoint m(haar_unitary(4, rng), ProbabilityVector(uniform));
    const TangentVectorM x = random_tangent_m(4, rng);
    const TangentVectorM y = random_tangent_m(4, rng);
    for (const MonotoneF& f : catalog_f()) CHECK(split_metric(m, x, y, f).quantum == 0.0);
}

TEST_CASE("split total always equals classical plus quantum") {
    SplitMix64 rng(31);
    const UnfoldedPoint m(haar_unitary(3, rng), sample_simplex(3, rng));
    const TangentVectorM x = random_tangent_m(3, rng);
    const TangentVectorM y = random_tangent_m(3, rng);
    const SplitMetricValue s = split_metric(m, x, y, find_f("wy"));
    CHECK(s.total == s.classical + s.quantum);
}

TEST_CASE("central identity: split equals the pulled-back metric") {
    SplitMix64 rng(37);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnfoldedPoint m(haar_unitary(n, rng), sample_simplex(n, rng));
        const TangentVectorM x = random_tangent_m(n, rng);
        const TangentVectorM y = random_tangent_m(n, rng);
        for (const MonotoneF& f : catalog_f()) {
            const double total = split_metric(m, x, y, f).total;
            const double ref = pullback_metric(m, x, y, f);
            // scale-aware slack: the trial states here may sit near the
            // simplex boundary, where 1/p inflates both routes
            const double slack = 1e-9 * std::max(1.0, std::abs(ref));
            CHECK(std::abs(total - ref) < slack);
        }
    }
}

TEST_CASE("central identity survives repeated simplex entries") {
    SplitMix64 rng(41);
    const UnfoldedPoint m(haar_unitary(3, rng), ProbabilityVector({0.2, 0.2, 0.6}));
    const TangentVectorM x = random_tangent_m(3, rng);
    const TangentVectorM y = random_tangent_m(3, rng);
    for (const MonotoneF& f : catalog_f()) {
        const SplitMetricValue s = split_metric(m, x, y, f);
        CHECK(std::abs(s.total - pullback_metric(m, x, y, f)) < 1e-9);
        CHECK(std::isfinite(s.quantum));
    }
}

TEST_CASE("three routes agree on the frozen off-diagonal example") {
    // point (I, (0.25, 0.75)), both tangents the pauli-x direction: each
    // route must give ln 3
    const double expected = std::log(3.0);
    const UnfoldedPoint m = identity_point({0.25, 0.75});
    const TangentVectorM x = unitary_direction(pauli_x());

    const SplitMetricValue s = split_metric(m, x, x, find_f("kmb"));
    CHECK(s.classical == 0.0);
    CHECK(s.quantum == doctest::Approx(expected).epsilon(1e-13));

    CHECK(g_expansion_metric(m, x, x, find_g("mlog")) ==
          doctest::Approx(expected).epsilon(1e-13));

    CHECK(pullback_metric(m, x, x, find_f("kmb")) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("expansion with zero generators is the fisher-rao value") {
    SplitMix64 rng(43);
    const UnfoldedPoint m(haar_unitary(3, rng), sample_simplex(3, rng));
    const TangentVectorM x(ComplexMatrix(3, 3), random_tangent_m(3, rng).v);
    const TangentVectorM y(ComplexMatrix(3, 3), random_tangent_m(3, rng).v);
    const double fr = fisher_rao(m.p, x.v, y.v);
    for (const ConvexG& g : catalog_g())
        CHECK(g_expansion_metric(m, x, y, g) == doctest::Approx(fr).epsilon(1e-14));
}

TEST_CASE("expansion identity: four-term formula equals split under the bridged f") {
    SplitMix64 rng(47);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnfoldedPoint m(haar_unitary(n, rng), sample_simplex(n, rng));
        const TangentVectorM x = random_tangent_m(n, rng);
        const TangentVectorM y = random_tangent_m(n, rng);
        for (const ConvexG& g : catalog_g()) {
            const double lhs = g_expansion_metric(m, x, y, g);
            const double rhs = split_metric(m, x, y, bridged_f(g)).total;
            const double slack = 1e-9 * std::max(1.0, std::abs(rhs));
            CHECK(std::abs(lhs - rhs) < slack);
        }
    }
}

TEST_CASE("expansion is invariant under constant shifts of g") {
    // H_{g+c} = H_g + c on unit-trace states, so the g(1) terms of the
    // four-term formula must cancel the shifted off-diagonal coefficients
    SplitMix64 rng(53);
    const ConvexG& mlog = find_g("mlog");
    const ConvexG shifted{"mlog+c", [](double v) { return -std::log(v) + 1.7; }, 1.7, 1.0};
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 2;
        const UnfoldedPoint m(haar_unitary(n, rng), sample_simplex(n, rng));
        const TangentVectorM x = random_tangent_m(n, rng);
        const TangentVectorM y = random_tangent_m(n, rng);
        const double a = g_expansion_metric(m, x, y, mlog);
        const double b = g_expansion_metric(m, x, y, shifted);
        CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(a)));
    }
}

}  // TEST_SUITE
