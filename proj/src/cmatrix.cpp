#include "spincode/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace spincode {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::diag(const std::vector<cdouble>& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::dagger() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMatrix CMatrix::conjugate() const {
    CMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::conj(a_[i]);
    return m;
}

cdouble CMatrix::trace() const {
    if (!square()) throw std::invalid_argument("trace: matrix not square");
    cdouble t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double CMatrix::hermiticity_defect() const {
    if (!square()) return 0;
    double m = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    if (!square()) return false;
    double scale = std::max(max_abs(), 1.0);
    return hermiticity_defect() <= tol * scale;
}

void CMatrix::hermitize() {
    if (!square()) throw std::invalid_argument("hermitize: matrix not square");
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            cdouble v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = v;
            (*this)(j, i) = std::conj(v);
        }
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, i) = (*this)(i, i).real();
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator+=: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator-=: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cdouble s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("operator*: shape mismatch");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            cdouble aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<cdouble> CMatrix::apply(const std::vector<cdouble>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<cdouble> r(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        cdouble s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cdouble aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

double norm2(const std::vector<cdouble>& x) {
    double s = 0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

void normalize(std::vector<cdouble>& x) {
    double n = norm2(x);
    if (n == 0) throw std::invalid_argument("normalize: zero vector");
    for (auto& v : x) v /= n;
}

CMatrix outer(const std::vector<cdouble>& psi, const std::vector<cdouble>& phi) {
    CMatrix m(psi.size(), phi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) m(i, j) = psi[i] * std::conj(phi[j]);
    return m;
}

}  // namespace spincode
