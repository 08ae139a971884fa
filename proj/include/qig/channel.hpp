#pragma once

// CPTP channels in Kraus form. Owned by the verification layer but kept in
// its own header because the g-entropy monotonicity check consumes channels.

#include <cstddef>
#include <vector>

#include "qig/rng.hpp"
#include "qig/states.hpp"

namespace qig {

struct CPTPChannel {
    std::vector<ComplexMatrix> kraus;  // each out_dim x in_dim
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;

    CPTPChannel(std::vector<ComplexMatrix> kraus_, std::size_t in_dim_, std::size_t out_dim_);
};

// Stinespring-style sampler: a Haar unitary on the dilated space
// (dimension m * kraus_rank) is truncated to an isometry and sliced into
// m x n Kraus blocks. Requires m * kraus_rank >= n.
CPTPChannel random_cptp(std::size_t n, std::size_t m, std::size_t kraus_rank, SplitMix64& rng);

CPTPChannel identity_channel(std::size_t n);
CPTPChannel unitary_channel(const UnitaryMatrix& u);
// complete depolarization to I/n
CPTPChannel depolarizing_channel(std::size_t n);

// plain Kraus sum, no regularization; works on any n x n input
ComplexMatrix apply_channel_raw(const CPTPChannel& phi, const ComplexMatrix& x);

// Kraus sum on a state, nudged back to faithfulness (convex mix with
// 1e-9 * I/m, renormalized) whenever a raw eigenvalue drops below 1e-9.
DensityMatrix apply_channel(const CPTPChannel& phi, const DensityMatrix& rho);

}  // namespace qig
