#pragma once

// Domain types of the unfolding construction: faithful states, unitaries,
// interior simplex points, unfolded points (U, p) and tangent vectors, plus
// seeded random sampling of each.

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "qig/matcore.hpp"
#include "qig/rng.hpp"

namespace qig {

// Point of the open simplex: strictly positive entries summing to one.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> p);

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t j) const { return p_[j]; }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

// Faithful state: Hermitian, positive definite, unit trace. The spectral
// decomposition is computed once at construction and cached.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix mat);

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& mat() const { return mat_; }
    const HermitianEig& spectrum() const { return spectrum_; }

private:
    ComplexMatrix mat_;
    HermitianEig spectrum_;
};

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix mat);

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& mat() const { return mat_; }

private:
    ComplexMatrix mat_;
};

// Point of the unfolding space U(H) x interior simplex.
struct UnfoldedPoint {
    UnitaryMatrix u;
    ProbabilityVector p;

    UnfoldedPoint(UnitaryMatrix u_, ProbabilityVector p_);
    std::size_t dim() const { return p.size(); }
};

// Tangent vector at an unfolded point under left trivialization: the
// unitary-direction component is U * (i h) with h Hermitian, and v is a
// sum-zero simplex velocity.
struct TangentVectorM {
    ComplexMatrix h;
    std::vector<double> v;

    TangentVectorM(ComplexMatrix h_, std::vector<double> v_);
    std::size_t dim() const { return v.size(); }
};

// Tangent vector on the state manifold: Hermitian and traceless.
struct TangentVectorS {
    ComplexMatrix a;

    explicit TangentVectorS(ComplexMatrix a_);
    std::size_t dim() const { return a.rows(); }
};

// diag(p) in the fixed standard reference basis
DensityMatrix embed_diagonal(const ProbabilityVector& p);

// Dirichlet(1,...,1) point, floored at 1e-6 per entry and renormalized so
// downstream ratios stay well-conditioned.
ProbabilityVector sample_simplex(std::size_t n, SplitMix64& rng);

// Haar-distributed unitary: Gram-Schmidt of a complex Gaussian matrix with
// the triangular factor's diagonal kept real positive.
UnitaryMatrix haar_unitary(std::size_t n, SplitMix64& rng);

// Hermitian h with O(1) Gaussian entries; v Gaussian, mean-subtracted.
TangentVectorM random_tangent_m(std::size_t n, SplitMix64& rng);

// JSON codecs: p as [p1,...,pn]; point as {"u": <matrix>, "p": [...]};
// tangent as {"h": <matrix>, "v": [...]}.
nlohmann::ordered_json probability_to_json(const ProbabilityVector& p);
ProbabilityVector probability_from_json(const nlohmann::json& j);
nlohmann::ordered_json point_to_json(const UnfoldedPoint& m);
UnfoldedPoint point_from_json(const nlohmann::json& j);
nlohmann::ordered_json tangent_to_json(const TangentVectorM& x);
TangentVectorM tangent_from_json(const nlohmann::json& j);

}  // namespace qig
