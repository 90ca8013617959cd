#include "spincode/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spincode {

std::vector<cdouble> EigDecomposition::eigenvector(std::size_t k) const {
    std::vector<cdouble> v(eigenvectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
    return v;
}

namespace {

double offdiag_frobenius(const CMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigDecomposition herm_eig(const CMatrix& input) {
    if (!input.square()) throw std::invalid_argument("herm_eig: matrix not square");
    if (!input.is_hermitian(1e-12)) throw std::invalid_argument("herm_eig: matrix not Hermitian");

    const std::size_t n = input.rows();
    CMatrix a = input;
    a.hermitize();
    CMatrix v = CMatrix::identity(n);

    const double fro = a.frobenius_norm();
    const double target = 1e-14 * fro;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-300) continue;
                const cdouble phase = apq / r;
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                // zero the pivot: tan(2 theta) = 2r / (gamma - alpha)
                const double tau = (gamma - alpha) / (2.0 * r);
                double t;
                if (tau >= 0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble se = s * phase;

                // columns: A <- A U with U = [[c, se],[-conj(se), c]] on (p,q)
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(se) * aiq;
                    a(i, q) = se * aip + c * aiq;
                }
                // rows: A <- U^dag A
                for (std::size_t j = 0; j < n; ++j) {
                    const cdouble apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - se * aqj;
                    a(q, j) = std::conj(se) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(se) * viq;
                    v(i, q) = se * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

CMatrix expm_hermitian_generator(const CMatrix& h, double scale) {
    EigDecomposition eig = herm_eig(h);
    const std::size_t n = h.rows();
    CMatrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
        d(k, k) = std::polar(1.0, -scale * eig.eigenvalues[k]);
    return eig.eigenvectors * d * eig.eigenvectors.dagger();
}

CMatrix lu_solve(CMatrix a, const CMatrix& b) {
    if (!a.square() || a.rows() != b.rows()) throw std::invalid_argument("lu_solve: shape mismatch");
    const std::size_t n = a.rows();
    CMatrix x = b;
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pmax = k;
        double vmax = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > vmax) { vmax = std::abs(a(i, k)); pmax = i; }
        if (vmax == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (pmax != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pmax, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(pmax, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cdouble f = a(i, k) / a(k, k);
            a(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            cdouble s = x(k, j);
            for (std::size_t i = k + 1; i < n; ++i) s -= a(k, i) * x(i, j);
            x(k, j) = s / a(k, k);
        }
    }
    return x;
}

CMatrix expm_general(const CMatrix& input) {
    if (!input.square()) throw std::invalid_argument("expm_general: matrix not square");
    const std::size_t n = input.rows();

    // 1-norm based scaling for the degree-13 Pade approximant
    double norm1 = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(input(i, j));
        norm1 = std::max(norm1, col);
    }
    const double theta13 = 5.371920351148152;
    int s = 0;
    if (norm1 > theta13) s = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));

    CMatrix a = input;
    if (s > 0) a *= std::ldexp(1.0, -s);

    static const double b[14] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0, 129060195264000.0, 10559470521600.0,
        670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
        960960.0, 16380.0, 182.0, 1.0};

    const CMatrix id = CMatrix::identity(n);
    const CMatrix a2 = a * a;
    const CMatrix a4 = a2 * a2;
    const CMatrix a6 = a2 * a4;

    CMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                     b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    CMatrix r = lu_solve(v - u, v + u);
    for (int k = 0; k < s; ++k) r = r * r;
    return r;
}

}  // namespace spincode
