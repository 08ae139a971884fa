#include "qig/states.hpp"

#include <cmath>
#include <utility>

#include "qig/errors.hpp"

namespace qig {

namespace {

constexpr double kSimplexFloor = 1e-6;

void check_finite_vector(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw BadValue(std::string(what) + ": non-finite entry");
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw BadDimension("probability vector must be non-empty");
    check_finite_vector(p_, "probability vector");
    double sum = 0.0;
    for (double x : p_) {
        if (x <= 0.0) throw BadValue("probability vector: entries must be strictly positive");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw BadValue("probability vector: entries must sum to 1");
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_square()) throw NotSquare("density matrix must be square");
    if (!mat_.all_finite()) throw BadValue("density matrix: non-finite entries");
    if (mat_.hermiticity_defect() > 1e-12)
        throw NotHermitian("density matrix: not Hermitian to 1e-12");
    if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > 1e-12)
        throw BadValue("density matrix: trace must be 1");
    spectrum_ = eig_hermitian(mat_, 1e-12);
    for (double lam : spectrum_.eigenvalues)
        if (lam <= 0.0) throw BadValue("density matrix: not faithful (eigenvalue <= 0)");
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_square()) throw NotSquare("unitary matrix must be square");
    if (!mat_.all_finite()) throw BadValue("unitary matrix: non-finite entries");
    const std::size_t n = mat_.rows();
    ComplexMatrix g = mat_.adjoint() * mat_;
    g -= ComplexMatrix::identity(n);
    if (g.max_abs() > 1e-11 * static_cast<double>(n))
        throw BadValue("unitary matrix: U†U deviates from identity");
}

UnfoldedPoint::UnfoldedPoint(UnitaryMatrix u_, ProbabilityVector p_)
    : u(std::move(u_)), p(std::move(p_)) {
    if (u.dim() != p.size())
        throw DimensionMismatch("unfolded point: unitary and simplex dimensions differ");
}

TangentVectorM::TangentVectorM(ComplexMatrix h_, std::vector<double> v_)
    : h(std::move(h_)), v(std::move(v_)) {
    if (!h.is_square()) throw NotSquare("tangent generator must be square");
    if (h.rows() != v.size())
        throw DimensionMismatch("tangent vector: generator and simplex parts differ");
    if (h.hermiticity_defect() > 1e-12)
        throw NotHermitian("tangent vector: generator not Hermitian to 1e-12");
    check_finite_vector(v, "tangent vector");
    double sum = 0.0;
    for (double x : v) sum += x;
    if (std::abs(sum) > 1e-12) throw BadValue("tangent vector: simplex part must sum to 0");
}

TangentVectorS::TangentVectorS(ComplexMatrix a_) : a(std::move(a_)) {
    if (!a.is_square()) throw NotSquare("state tangent must be square");
    if (!a.all_finite()) throw BadValue("state tangent: non-finite entries");
    if (a.hermiticity_defect() > 1e-12)
        throw NotHermitian("state tangent: not Hermitian to 1e-12");
    if (std::abs(a.trace()) > 1e-12) throw BadValue("state tangent: trace must be 0");
}

DensityMatrix embed_diagonal(const ProbabilityVector& p) {
    const std::size_t n = p.size();
    ComplexMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(j, j) = p[j];
    return DensityMatrix(std::move(m));
}

ProbabilityVector sample_simplex(std::size_t n, SplitMix64& rng) {
    if (n < 2) throw BadDimension("sample_simplex: need n >= 2");
    std::vector<double> p(n);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        p[j] = -std::log(rng.next_open());
        sum += p[j];
    }
    for (double& x : p) x /= sum;
    // floor, then renormalize
    sum = 0.0;
    for (double& x : p) {
        x = std::max(x, kSimplexFloor);
        sum += x;
    }
    for (double& x : p) x /= sum;
    return ProbabilityVector(std::move(p));
}

UnitaryMatrix haar_unitary(std::size_t n, SplitMix64& rng) {
    if (n < 1) throw BadDimension("haar_unitary: need n >= 1");
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto [re, im] = rng.next_gaussian_pair();
            g(i, j) = cplx(re, im);
        }
    // modified Gram-Schmidt on columns; the implicit triangular factor has a
    // real positive diagonal, which is the phase convention that makes the
    // result Haar
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj = 0.0;
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(g(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) g(i, j) /= norm;
    }
    return UnitaryMatrix(std::move(g));
}

TangentVectorM random_tangent_m(std::size_t n, SplitMix64& rng) {
    if (n < 2) throw BadDimension("random_tangent_m: need n >= 2");
    ComplexMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j) h(j, j) = rng.next_gaussian();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            auto [re, im] = rng.next_gaussian_pair();
            const cplx z(re / std::sqrt(2.0), im / std::sqrt(2.0));
            h(j, k) = z;
            h(k, j) = std::conj(z);
        }
    std::vector<double> v(n);
    double mean = 0.0;
    for (double& x : v) {
        x = rng.next_gaussian();
        mean += x;
    }
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;
    return TangentVectorM(std::move(h), std::move(v));
}

nlohmann::ordered_json probability_to_json(const ProbabilityVector& p) {
    return nlohmann::ordered_json(p.values());
}

ProbabilityVector probability_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw BadValue("probability JSON: expected an array");
    std::vector<double> p;
    p.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw BadValue("probability JSON: entries must be numbers");
        p.push_back(e.get<double>());
    }
    return ProbabilityVector(std::move(p));
}

nlohmann::ordered_json point_to_json(const UnfoldedPoint& m) {
    nlohmann::ordered_json j;
    j["u"] = matrix_to_json(m.u.mat());
    j["p"] = probability_to_json(m.p);
    return j;
}

UnfoldedPoint point_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("u") || !j.contains("p"))
        throw BadValue("point JSON: expected object with u and p");
    return UnfoldedPoint(UnitaryMatrix(matrix_from_json(j.at("u"))),
                         probability_from_json(j.at("p")));
}

nlohmann::ordered_json tangent_to_json(const TangentVectorM& x) {
    nlohmann::ordered_json j;
    j["h"] = matrix_to_json(x.h);
    j["v"] = nlohmann::ordered_json(x.v);
    return j;
}

TangentVectorM tangent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("v"))
        throw BadValue("tangent JSON: expected object with h and v");
    const auto& jv = j.at("v");
    if (!jv.is_array()) throw BadValue("tangent JSON: v must be an array");
    std::vector<double> v;
    v.reserve(jv.size());
    for (const auto& e : jv) {
        if (!e.is_number()) throw BadValue("tangent JSON: v entries must be numbers");
        v.push_back(e.get<double>());
    }
    return TangentVectorM(matrix_from_json(j.at("h")), std::move(v));
}

}  // namespace qig
