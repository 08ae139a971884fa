#include "qig/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qig/errors.hpp"

namespace qig {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0) throw BadDimension("matrix dimensions must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw NotSquare("trace requires a square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw NotSquare("hermiticity defect requires a square matrix");
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix addition: shapes differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix subtraction: shapes differ");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw NotSquare("hermitian_part requires a square matrix");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(k + b.rows() * i, l + b.cols() * j) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix vec_column(const ComplexMatrix& a) {
    ComplexMatrix out(a.rows() * a.cols(), 1);
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) out(i + a.rows() * j, 0) = a(i, j);
    return out;
}

namespace {

// One complex Jacobi rotation zeroing a(p,q), p < q. The 2x2 unitary is the
// phase-stripped small-angle Givens rotation, so cyclic sweeps keep the
// classical quadratic convergence. Accumulates into v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        a(q, p) = 0.0;
        return;
    }
    const cplx phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // 2x2 block of the full rotation: u_pp = c*phase, u_pq = s*phase,
    // u_qp = -s, u_qq = c
    const cplx upp = c * phase, upq = s * phase;
    const cplx uqp = -s, uqq = c;

    const std::size_t n = a.rows();
    // columns: a <- a * u
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = aip * upp + aiq * uqp;
        a(i, q) = aip * upq + aiq * uqq;
    }
    // rows: a <- u† * a
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = std::conj(upp) * apj + std::conj(uqp) * aqj;
        a(q, j) = std::conj(upq) * apj + std::conj(uqq) * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = vip * upp + viq * uqp;
        v(i, q) = vip * upq + viq * uqq;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEig eig_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw NotSquare("eig_hermitian: matrix is not square");
    if (!a.all_finite()) throw DomainError("eig_hermitian: non-finite entries");
    if (a.hermiticity_defect() > tol)
        throw NotHermitian("eig_hermitian: asymmetry exceeds tolerance");

    const std::size_t n = a.rows();
    ComplexMatrix m = hermitian_part(a);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = 1e-13 * std::max(1.0, m.frobenius_norm());
    constexpr int max_sweeps = 100;

    if (n > 1) {
        bool converged = false;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            if (off_diagonal_norm(m) <= threshold) {
                converged = true;
                break;
            }
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(m, v, p, q);
        }
        if (!converged && off_diagonal_norm(m) > threshold)
            throw NoConvergence("eig_hermitian: Jacobi sweep cap reached");
    }

    // ascending eigenvalue order, stable within ties
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&m](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = m(idx[k], idx[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, idx[k]);
    }
    return out;
}

ComplexMatrix matrix_function(const ComplexMatrix& a,
                              const std::function<double(double)>& phi, double tol) {
    const HermitianEig eig = eig_hermitian(a, tol);
    const std::size_t n = a.rows();
    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j] = phi(eig.eigenvalues[j]);
        if (!std::isfinite(w[j]))
            throw DomainError("matrix_function: function non-finite on the spectrum");
    }
    const ComplexMatrix& vm = eig.eigenvectors;
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += vm(i, k) * w[k] * std::conj(vm(j, k));
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t, double tol) {
    const HermitianEig eig = eig_hermitian(h, tol);
    const std::size_t n = h.rows();
    const ComplexMatrix& vm = eig.eigenvectors;
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double ang = t * eig.eigenvalues[k];
                s += vm(i, k) * cplx(std::cos(ang), std::sin(ang)) * std::conj(vm(j, k));
            }
            out(i, j) = s;
        }
    return out;
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("frobenius_inner: shapes differ");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
    return s;
}

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& a) {
    nlohmann::ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t jj = 0; jj < a.cols(); ++jj)
            data.push_back({a(i, jj).real(), a(i, jj).imag()});
    j["data"] = std::move(data);
    return j;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw BadValue("matrix JSON: expected object with rows, cols, data");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    if (rows < 1 || cols < 1) throw BadValue("matrix JSON: rows and cols must be >= 1");
    const auto& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols)
        throw BadValue("matrix JSON: data must hold rows*cols entries");
    ComplexMatrix out(rows, cols);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t jj = 0; jj < cols; ++jj, ++k) {
            const auto& e = data.at(k);
            if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
                throw BadValue("matrix JSON: each entry must be [re, im]");
            out(i, jj) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
        }
    if (!out.all_finite()) throw BadValue("matrix JSON: non-finite entry");
    return out;
}

}  // namespace qig
