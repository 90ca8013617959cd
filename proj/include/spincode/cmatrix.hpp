#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincode {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major storage. Carrier for all operators in the
/// toolkit: angular-momentum operators, group representatives, projectors,
/// Kraus operators, Choi matrices, Stratonovich-Weyl kernels.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix zeros(std::size_t rows, std::size_t cols);
    static CMatrix diag(const std::vector<cdouble>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cdouble>& data() const { return a_; }
    std::vector<cdouble>& data() { return a_; }

    CMatrix dagger() const;
    CMatrix transpose() const;
    CMatrix conjugate() const;

    cdouble trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    /// max |A - A^dag| over entries, 0 for non-square
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const;
    /// symmetrize in place: A <- (A + A^dag)/2
    void hermitize();

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cdouble s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cdouble s) { return a *= s; }
    friend CMatrix operator*(cdouble s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    /// A * v
    std::vector<cdouble> apply(const std::vector<cdouble>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> a_;
};

/// Kronecker product, row-major block convention:
/// (a (x) b)[i*rb + k, j*cb + l] = a[i,j] * b[k,l].
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// max |A - B| over entries
double max_abs_diff(const CMatrix& a, const CMatrix& b);

inline cdouble inner(const std::vector<cdouble>& x, const std::vector<cdouble>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: size mismatch");
    cdouble s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double norm2(const std::vector<cdouble>& x);
void normalize(std::vector<cdouble>& x);

/// |psi><phi|
CMatrix outer(const std::vector<cdouble>& psi, const std::vector<cdouble>& phi);

}  // namespace spincode
