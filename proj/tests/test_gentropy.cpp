#include <cmath>

#include "doctest.h"
#include "qig/errors.hpp"
#include "qig/gentropy.hpp"
#include "qig/unfold.hpp"
#include "test_helpers.hpp"

using namespace qig;
using namespace qig::test;

namespace {

DensityMatrix diag_state(std::vector<double> p) {
    return embed_diagonal(ProbabilityVector(std::move(p)));
}

DensityMatrix rotated_state(const UnitaryMatrix& u, const ProbabilityVector& p) {
    return DensityMatrix(
        hermitian_part(u.mat() * embed_diagonal(p).mat() * u.mat().adjoint()));
}

}  // namespace

TEST_SUITE("gentropy") {

TEST_CASE("catalog values and stored derivatives") {
    CHECK(catalog_g().size() == 3);
    CHECK(find_g("mlog").eval(1.0) == 0.0);
    CHECK(find_g("xlogx").eval(1.0) == 0.0);
    CHECK(find_g("sqrt2").eval(1.0) == 0.0);
    CHECK_THROWS_AS(find_g("nosuch"), UnknownName);
    for (const ConvexG& g : catalog_g()) {
        CHECK(std::abs(g.eval(1.0) - g.g_at_1) < 1e-12);
        // central second difference at 1, step 1e-4
        const double h = 1e-4;
        const double num = (g.eval(1.0 + h) - 2.0 * g.eval(1.0) + g.eval(1.0 - h)) / (h * h);
        CHECK(std::abs(num - g.g2_at_1) < 1e-5);
    }
}

TEST_CASE("divergence of a state from itself is g(1)") {
    SplitMix64 rng(11);
    for (int t = 0; t < 5; ++t) {
        const std::size_t n = 2 + t % 3;
        const DensityMatrix rho = rotated_state(haar_unitary(n, rng), sample_simplex(n, rng));
        for (const ConvexG& g : catalog_g())
            CHECK(std::abs(relative_g_entropy(rho, rho, g) - g.g_at_1) < 1e-12);
    }
}

TEST_CASE("commuting pair reduces to the classical divergences") {
    const DensityMatrix rho = diag_state({0.5, 0.5});
    const DensityMatrix sigma = diag_state({0.25, 0.75});
    // -ln: forward KL = 0.5 ln(4/3)
    CHECK(std::abs(relative_g_entropy(rho, sigma, find_g("mlog")) - 0.14384103622589046) <
          1e-12);
    // x ln x: reverse KL = sum q ln(q/p)
    const double reverse_kl = 0.25 * std::log(0.25 / 0.5) + 0.75 * std::log(0.75 / 0.5);
    CHECK(std::abs(relative_g_entropy(rho, sigma, find_g("xlogx")) - reverse_kl) < 1e-12);
    CHECK(reverse_kl == doctest::Approx(0.13081203594113697).epsilon(1e-14));
}

TEST_CASE("commuting reduction holds for rotated common frames") {
    SplitMix64 rng(21);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const UnitaryMatrix u = haar_unitary(n, rng);
        const ProbabilityVector p = sample_simplex(n, rng);
        const ProbabilityVector q = sample_simplex(n, rng);
        const DensityMatrix rho = rotated_state(u, p);
        const DensityMatrix sigma = rotated_state(u, q);
        for (const ConvexG& g : catalog_g()) {
            double classical = 0.0;
            for (std::size_t j = 0; j < n; ++j) classical += p[j] * g.eval(q[j] / p[j]);
            CHECK(std::abs(relative_g_entropy(rho, sigma, g) - classical) < 1e-10);
        }
    }
}

TEST_CASE("divergence is nonnegative and separates states") {
    SplitMix64 rng(31);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        const DensityMatrix rho = rotated_state(haar_unitary(n, rng), sample_simplex(n, rng));
        const DensityMatrix sigma =
            rotated_state(haar_unitary(n, rng), sample_simplex(n, rng));
        for (const ConvexG& g : catalog_g()) {
            const double h = relative_g_entropy(rho, sigma, g);
            CHECK(h >= -1e-12);
        }
        // generic sampled pairs are far apart
        CHECK(relative_g_entropy(rho, sigma, find_g("mlog")) > 1e-6);
    }
}

TEST_CASE("divergence is unitarily bi-invariant") {
    SplitMix64 rng(41);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const DensityMatrix rho = rotated_state(haar_unitary(n, rng), sample_simplex(n, rng));
        const DensityMatrix sigma =
            rotated_state(haar_unitary(n, rng), sample_simplex(n, rng));
        const UnitaryMatrix w = haar_unitary(n, rng);
        const DensityMatrix rho_w(hermitian_part(w.mat() * rho.mat() * w.mat().adjoint()));
        const DensityMatrix sigma_w(
            hermitian_part(w.mat() * sigma.mat() * w.mat().adjoint()));
        for (const ConvexG& g : catalog_g())
            CHECK(std::abs(relative_g_entropy(rho_w, sigma_w, g) -
                           relative_g_entropy(rho, sigma, g)) < 1e-10);
    }
}

TEST_CASE("divergence rejects mismatched dimensions") {
    const DensityMatrix rho = diag_state({0.5, 0.5});
    const DensityMatrix sigma = diag_state({0.2, 0.3, 0.5});
    CHECK_THROWS_AS(relative_g_entropy(rho, sigma, find_g("mlog")), DimensionMismatch);
}

TEST_CASE("bridge maps the catalog g's onto the catalog f's") {
    // -ln x at e: (1-e)^2 / ((e-1) ln e) = e - 1, the kmb value
    CHECK(f_from_g(find_g("mlog"), std::exp(1.0)) ==
          doctest::Approx(1.718281828459045).epsilon(1e-14));
    // 2(1-sqrt x)^2 at 4: 9 / (2 + 4*0.5) ... = 2.25, the wy value
    CHECK(f_from_g(find_g("sqrt2"), 4.0) == doctest::Approx(2.25).epsilon(1e-14));
    for (const ConvexG& g : catalog_g()) CHECK(f_from_g(g, 1.0) == 1.0);

    const MonotoneF& kmb = find_f("kmb");
    const MonotoneF& wy = find_f("wy");
    for (double x : log_grid(0.01, 100.0, 200)) {
        CHECK(std::abs(f_from_g(find_g("mlog"), x) - kmb.eval(x)) < 1e-12);
        CHECK(std::abs(f_from_g(find_g("xlogx"), x) - kmb.eval(x)) < 1e-12);
        CHECK(std::abs(f_from_g(find_g("sqrt2"), x) - wy.eval(x)) < 1e-12);
    }
}

TEST_CASE("bridge rejects bad arguments") {
    CHECK_THROWS_AS(f_from_g(find_g("mlog"), 0.0), DomainError);
    CHECK_THROWS_AS(f_from_g(find_g("mlog"), -2.0), DomainError);
    const ConvexG shifted{"shifted", [](double x) { return -std::log(x) + 0.5; }, 0.5, 1.0};
    CHECK_THROWS_AS(f_from_g(shifted, 2.0), NotNormalized);
    const ConvexG zero{"zero", [](double) { return 0.0; }, 0.0, 1.0};
    CHECK_THROWS_AS(f_from_g(zero, 2.0), DegenerateDenominator);
}

TEST_CASE("bridged_f wraps the bridge as a normalized monotone function") {
    const MonotoneF f = bridged_f(find_g("mlog"));
    CHECK(f.claims_normalized);
    CHECK(f.eval(1.0) == 1.0);
    CHECK(std::abs(f.eval(3.0) - find_f("kmb").eval(3.0)) < 1e-13);
}

TEST_CASE("data-processing defect for the identity channel is exactly zero") {
    SplitMix64 rng(51);
    const DensityMatrix rho = rotated_state(haar_unitary(3, rng), sample_simplex(3, rng));
    const DensityMatrix sigma = rotated_state(haar_unitary(3, rng), sample_simplex(3, rng));
    const CPTPChannel id = identity_channel(3);
    for (const ConvexG& g : catalog_g())
        CHECK(monotonicity_defect(rho, sigma, id, g) == 0.0);
}

TEST_CASE("data-processing defect for unitary channels vanishes to tolerance") {
    SplitMix64 rng(61);
    const DensityMatrix rho = rotated_state(haar_unitary(3, rng), sample_simplex(3, rng));
    const DensityMatrix sigma = rotated_state(haar_unitary(3, rng), sample_simplex(3, rng));
    const CPTPChannel phi = unitary_channel(haar_unitary(3, rng));
    for (const ConvexG& g : catalog_g())
        CHECK(std::abs(monotonicity_defect(rho, sigma, phi, g)) < 1e-10);
}

TEST_CASE("complete depolarization leaves the full divergence as defect") {
    SplitMix64 rng(71);
    const DensityMatrix rho = rotated_state(haar_unitary(3, rng), sample_simplex(3, rng));
    const DensityMatrix sigma = rotated_state(haar_unitary(3, rng), sample_simplex(3, rng));
    const CPTPChannel dep = depolarizing_channel(3);
    const ConvexG& g = find_g("mlog");
    const double defect = monotonicity_defect(rho, sigma, dep, g);
    CHECK(defect >= 0.0);
    CHECK(std::abs(defect - relative_g_entropy(rho, sigma, g)) < 1e-12);
}

}  // TEST_SUITE
