#pragma once

// Dense complex matrices, Hermitian eigendecomposition (cyclic Jacobi) and
// scalar-function calculus on Hermitian matrices. Everything downstream sits
// on this module; dimensions stay small (n <= 64) so all kernels are naive.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "json.hpp"

namespace qig {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;

    double max_abs() const;
    double frobenius_norm() const;
    // max |a_ij - conj(a_ji)| over all entries; requires square
    double hermiticity_defect() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// (a + a†)/2, killing round-off asymmetry
ComplexMatrix hermitian_part(const ComplexMatrix& a);

// Kronecker product, convention kron(a, b) * vec(x) = vec(b x aᵀ)
// with column-major vec (vec(x)[i + rows*j] = x(i,j)).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// column-major stacking into an (rows*cols) x 1 matrix
ComplexMatrix vec_column(const ComplexMatrix& a);

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Cyclic Jacobi for complex Hermitian matrices. `tol` bounds the accepted
// asymmetry of the input (max-norm); the iteration itself stops when the
// off-diagonal Frobenius norm falls below 1e-13 (scaled by the input norm),
// capped at 100 sweeps.
HermitianEig eig_hermitian(const ComplexMatrix& a, double tol = 1e-12);

// V diag(phi(lambda_j)) V† via the spectral decomposition of `a`.
ComplexMatrix matrix_function(const ComplexMatrix& a,
                              const std::function<double(double)>& phi,
                              double tol = 1e-12);

// exp(i t h) for Hermitian h; the unitary generated by h
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t, double tol = 1e-12);

// Tr(a† b)
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// JSON codec: {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
// Round-trips finite doubles exactly.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qig
