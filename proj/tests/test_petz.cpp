#include <cmath>

#include "doctest.h"
#include "qig/errors.hpp"
#include "qig/petz.hpp"
#include "qig/unfold.hpp"
#include "test_helpers.hpp"

using namespace qig;
using namespace qig::test;

namespace {

DensityMatrix diag_state(std::vector<double> p) {
    return embed_diagonal(ProbabilityVector(std::move(p)));
}

TangentVectorS random_traceless_tangent(std::size_t n, SplitMix64& rng) {
    ComplexMatrix h = random_hermitian(n, rng);
    h -= (h.trace() / double(n)) * ComplexMatrix::identity(n);
    return TangentVectorS(hermitian_part(h));
}

}  // namespace

TEST_SUITE("petz") {

TEST_CASE("catalog values") {
    CHECK(find_f("sld").eval(1.0) == 1.0);
    CHECK(find_f("kmb").eval(std::exp(1.0)) ==
          doctest::Approx(1.718281828459045).epsilon(1e-14));
    CHECK(find_f("wy").eval(4.0) == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(find_f("rld").eval(1.0) == 1.0);
    CHECK(catalog_f().size() == 4);
    for (const MonotoneF& f : catalog_f()) CHECK(f.claims_normalized);
    CHECK_THROWS_AS(find_f("nosuch"), UnknownName);
}

TEST_CASE("catalog functions are finite and positive on a wide grid") {
    for (const MonotoneF& f : catalog_f())
        for (double x : log_grid(1e-4, 1e4, 100)) {
            const double v = f.eval(x);
            CHECK(std::isfinite(v));
            CHECK(v > 0.0);
        }
}

TEST_CASE("kmb taylor branch joins the direct formula") {
    const MonotoneF& kmb = find_f("kmb");
    CHECK(kmb.eval(1.0) == 1.0);
    for (double u : {9.9e-7, -9.9e-7, 1.1e-6, -1.1e-6})
        CHECK(kmb.eval(1.0 + u) == doctest::Approx(1.0 + 0.5 * u).epsilon(1e-12));
}

TEST_CASE("metric at the maximally mixed state") {
    const DensityMatrix rho = diag_state({0.5, 0.5});
    const TangentVectorS a{pauli_x()};
    for (const MonotoneF& f : catalog_f())
        CHECK(petz_metric(rho, a, a, f) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("metric vanishes on a zero tangent") {
    const DensityMatrix rho = diag_state({0.25, 0.75});
    const TangentVectorS zero{ComplexMatrix(2, 2)};
    const TangentVectorS a{pauli_y()};
    for (const MonotoneF& f : catalog_f()) CHECK(petz_metric(rho, zero, a, f) == 0.0);
}

TEST_CASE("diagonal tangents give the f-independent classical value") {
    const DensityMatrix rho = diag_state({0.25, 0.75});
    const TangentVectorS a{make_matrix(2, {1.0, 0.0, 0.0, -1.0})};
    for (const MonotoneF& f : catalog_f())
        CHECK(petz_metric(rho, a, a, f) == doctest::Approx(16.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("metric rejects mismatched dimensions") {
    const DensityMatrix rho = diag_state({0.25, 0.75});
    ComplexMatrix t3(3, 3);
    t3(0, 0) = 1.0;
    t3(1, 1) = -1.0;
    CHECK_THROWS_AS(petz_metric(rho, TangentVectorS{t3}, TangentVectorS{t3}, find_f("sld")),
                    DimensionMismatch);
}

TEST_CASE("metric is symmetric and positive on traceless tangents") {
    SplitMix64 rng(101);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnitaryMatrix w = haar_unitary(n, rng);
        const DensityMatrix rho(hermitian_part(
            w.mat() * embed_diagonal(sample_simplex(n, rng)).mat() * w.mat().adjoint()));
        const TangentVectorS a = random_traceless_tangent(n, rng);
        const TangentVectorS b = random_traceless_tangent(n, rng);
        for (const MonotoneF& f : catalog_f()) {
            const double gab = petz_metric(rho, a, b, f);
            const double gba = petz_metric(rho, b, a, f);
            CHECK(std::abs(gab - gba) < 1e-12);
            CHECK(petz_metric(rho, a, a, f) > 0.0);
        }
    }
}

TEST_CASE("metric is basis covariant") {
    SplitMix64 rng(202);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const DensityMatrix rho = embed_diagonal(sample_simplex(n, rng));
        const TangentVectorS a = random_traceless_tangent(n, rng);
        const UnitaryMatrix w = haar_unitary(n, rng);
        const DensityMatrix rho_w(hermitian_part(w.mat() * rho.mat() * w.mat().adjoint()));
        const TangentVectorS a_w{hermitian_part(w.mat() * a.a * w.mat().adjoint())};
        for (const MonotoneF& f : catalog_f())
            CHECK(std::abs(petz_metric(rho_w, a_w, a_w, f) - petz_metric(rho, a, a, f)) <
                  1e-9);
    }
}

TEST_CASE("commuting tangents agree across the whole catalog") {
    SplitMix64 rng(303);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnitaryMatrix w = haar_unitary(n, rng);
        const ProbabilityVector p = sample_simplex(n, rng);
        const DensityMatrix rho(
            hermitian_part(w.mat() * embed_diagonal(p).mat() * w.mat().adjoint()));
        // a tangent diagonal in rho's eigenframe commutes with rho
        ComplexMatrix dm(n, n);
        double mean = 0.0;
        std::vector<double> d(n);
        for (double& e : d) mean += (e = rng.next_gaussian());
        mean /= double(n);
        for (std::size_t j = 0; j < n; ++j) dm(j, j) = d[j] - mean;
        const TangentVectorS ad{hermitian_part(w.mat() * dm * w.mat().adjoint())};
        const double first = petz_metric(rho, ad, ad, catalog_f().front());
        for (const MonotoneF& f : catalog_f())
            CHECK(std::abs(petz_metric(rho, ad, ad, f) - first) < 1e-10);
    }
}

TEST_CASE("check_f_symmetry approves the catalog and flags a bad function") {
    const std::vector<double> grid = log_grid(0.1, 10.0, 50);
    const FSymmetryReport sld = check_f_symmetry(find_f("sld"), grid);
    CHECK(sld.normalization_dev < 1e-12);
    CHECK(sld.symmetry_dev < 1e-12);
    const FSymmetryReport kmb = check_f_symmetry(find_f("kmb"), grid);
    CHECK(kmb.normalization_dev < 1e-10);
    CHECK(kmb.symmetry_dev < 1e-10);

    // diagnostic only: the non-normalized f(x) = x reports, never throws
    const MonotoneF linear{"linear", [](double x) { return x; }, false};
    const FSymmetryReport rep = check_f_symmetry(linear, grid);
    CHECK(rep.symmetry_dev > 0.0);
    CHECK(rep.normalization_dev == 0.0);  // f(1) = 1 happens to hold
}

}  // TEST_SUITE
