#include "qig/channel.hpp"

#include <cmath>
#include <utility>

#include "qig/errors.hpp"

namespace qig {

namespace {

constexpr double kFaithfulFloor = 1e-9;

void check_trace_preserving(const std::vector<ComplexMatrix>& kraus, std::size_t n) {
    ComplexMatrix sum(n, n);
    for (const ComplexMatrix& k : kraus) sum += k.adjoint() * k;
    sum -= ComplexMatrix::identity(n);
    if (sum.max_abs() > 1e-10)
        throw BadValue("CPTP channel: sum of K†K deviates from identity");
}

}  // namespace

CPTPChannel::CPTPChannel(std::vector<ComplexMatrix> kraus_, std::size_t in_dim_,
                         std::size_t out_dim_)
    : kraus(std::move(kraus_)), in_dim(in_dim_), out_dim(out_dim_) {
    if (kraus.empty()) throw BadDimension("CPTP channel: needs at least one Kraus operator");
    for (const ComplexMatrix& k : kraus)
        if (k.rows() != out_dim || k.cols() != in_dim)
            throw DimensionMismatch("CPTP channel: Kraus operator shape mismatch");
    check_trace_preserving(kraus, in_dim);
}

CPTPChannel random_cptp(std::size_t n, std::size_t m, std::size_t kraus_rank,
                        SplitMix64& rng) {
    if (n < 1 || m < 1 || kraus_rank < 1 || m * kraus_rank < n)
        throw BadDimension("random_cptp: need m * kraus_rank >= n and all dims >= 1");
    const std::size_t dil = m * kraus_rank;
    const UnitaryMatrix w = haar_unitary(dil, rng);
    // first n columns form an isometry; slice it into m x n blocks
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(kraus_rank);
    for (std::size_t b = 0; b < kraus_rank; ++b) {
        ComplexMatrix k(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) k(i, j) = w.mat()(b * m + i, j);
        kraus.push_back(std::move(k));
    }
    return CPTPChannel(std::move(kraus), n, m);
}

CPTPChannel identity_channel(std::size_t n) {
    std::vector<ComplexMatrix> kraus{ComplexMatrix::identity(n)};
    return CPTPChannel(std::move(kraus), n, n);
}

CPTPChannel unitary_channel(const UnitaryMatrix& u) {
    std::vector<ComplexMatrix> kraus{u.mat()};
    return CPTPChannel(std::move(kraus), u.dim(), u.dim());
}

CPTPChannel depolarizing_channel(std::size_t n) {
    if (n < 1) throw BadDimension("depolarizing_channel: need n >= 1");
    // Kraus set |e_i><e_j| / sqrt(n) maps every state to I/n
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(n * n);
    const double w = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix k(n, n);
            k(i, j) = w;
            kraus.push_back(std::move(k));
        }
    return CPTPChannel(std::move(kraus), n, n);
}

ComplexMatrix apply_channel_raw(const CPTPChannel& phi, const ComplexMatrix& x) {
    if (x.rows() != phi.in_dim || x.cols() != phi.in_dim)
        throw DimensionMismatch("apply_channel: input dimension mismatch");
    ComplexMatrix out(phi.out_dim, phi.out_dim);
    for (const ComplexMatrix& k : phi.kraus) out += k * x * k.adjoint();
    return out;
}

DensityMatrix apply_channel(const CPTPChannel& phi, const DensityMatrix& rho) {
    ComplexMatrix out = hermitian_part(apply_channel_raw(phi, rho.mat()));
    const HermitianEig eig = eig_hermitian(out, 1e-10);
    if (eig.eigenvalues.front() < kFaithfulFloor) {
        const std::size_t m = phi.out_dim;
        const double eps = kFaithfulFloor;
        const double mix = eps / static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) out(i, i) += mix;
        out *= cplx(1.0 / (1.0 + eps), 0.0);
    }
    return DensityMatrix(std::move(out));
}

}  // namespace qig
