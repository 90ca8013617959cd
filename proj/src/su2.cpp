#include "spincode/su2.hpp"

#include <cmath>

#include "spincode/linalg.hpp"

namespace spincode {

SpinJ SpinJ::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        int num = std::stoi(text.substr(0, slash));
        int den = std::stoi(text.substr(slash + 1));
        if (den != 2 || num < 0) throw std::invalid_argument("SpinJ: expected n/2 with n >= 0");
        return SpinJ(num);
    }
    double v = std::stod(text);
    double tj = 2.0 * v;
    if (tj < 0 || std::abs(tj - std::round(tj)) > 1e-9)
        throw std::invalid_argument("SpinJ: not a half-integer: " + text);
    return SpinJ(static_cast<int>(std::round(tj)));
}

std::string SpinJ::to_string() const {
    if (twice_j % 2 == 0) return std::to_string(twice_j / 2);
    return std::to_string(twice_j) + "/2";
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

bool GroupElement::approx_equal(const GroupElement& o, double tol) const {
    return std::abs(w - o.w) < tol && std::abs(x - o.x) < tol &&
           std::abs(y - o.y) < tol && std::abs(z - o.z) < tol;
}

double GroupElement::theta() const {
    const double vn = std::sqrt(x * x + y * y + z * z);
    if (vn < 1e-12) return w >= 0 ? 0.0 : 2.0 * M_PI;
    return 2.0 * std::atan2(vn, w);
}

std::array<double, 3> GroupElement::axis() const {
    const double vn = std::sqrt(x * x + y * y + z * z);
    if (vn < 1e-12) return {0, 0, 1};
    return {x / vn, y / vn, z / vn};
}

std::array<std::array<double, 3>, 3> GroupElement::rotation_matrix() const {
    // for q = (w, v), R v' = v' + 2w (v x v') + 2 v x (v x v')
    const double xx = x * x, yy = y * y, zz = z * z;
    const double xy = x * y, xz = x * z, yz = y * z;
    const double wx = w * x, wy = w * y, wz = w * z;
    return {{{1 - 2 * (yy + zz), 2 * (xy - wz), 2 * (xz + wy)},
             {2 * (xy + wz), 1 - 2 * (xx + zz), 2 * (yz - wx)},
             {2 * (xz - wy), 2 * (yz + wx), 1 - 2 * (xx + yy)}}};
}

const CMatrix& AngularMomentumOps::axis_op(char w) const {
    switch (w) {
        case 'x': return jx;
        case 'y': return jy;
        case 'z': return jz;
    }
    throw std::invalid_argument("axis_op: axis must be x, y, or z");
}

AngularMomentumOps angular_momentum_ops(SpinJ spin) {
    const std::size_t d = spin.dim();
    const double j = spin.j();
    CMatrix jz(d, d), jp(d, d);
    for (std::size_t i = 0; i < d; ++i) jz(i, i) = spin.m_of_index(i);
    // <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1)); index i has m = j - i
    for (std::size_t i = 1; i < d; ++i) {
        const double m = spin.m_of_index(i);
        jp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
    CMatrix jm = jp.dagger();
    CMatrix jx = 0.5 * (jp + jm);
    CMatrix jy = cdouble(0, -0.5) * (jp - jm);
    return {spin, std::move(jx), std::move(jy), std::move(jz), std::move(jp), std::move(jm)};
}

GroupElement axis_angle(const std::array<double, 3>& n, double theta) {
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(nn - 1.0) > 1e-9) throw std::invalid_argument("axis_angle: axis must be a unit vector");
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {c, n[0] * s, n[1] * s, n[2] * s};
}

CMatrix represent(const GroupElement& g, SpinJ spin) {
    const double theta = g.theta();
    if (std::sqrt(g.x * g.x + g.y * g.y + g.z * g.z) < 1e-12) {
        // identity or -1: diag(exp(-i theta m)) is a global phase per parity
        CMatrix u = CMatrix::identity(spin.dim());
        if (g.w < 0 && spin.half_integer()) u *= -1.0;
        return u;
    }
    const auto n = g.axis();
    const AngularMomentumOps ops = angular_momentum_ops(spin);
    CMatrix h = n[0] * ops.jx + n[1] * ops.jy + n[2] * ops.jz;
    h.hermitize();
    return expm_hermitian_generator(h, theta);
}

double weyl_character(std::size_t dim, double theta) {
    const double d = static_cast<double>(dim);
    if (std::abs(theta) < 1e-9) return d;
    if (std::abs(theta - 2.0 * M_PI) < 1e-9) return (dim % 2 == 0) ? -d : d;
    return std::sin(d * theta / 2.0) / std::sin(theta / 2.0);
}

double character_value(const GroupElement& g, SpinJ spin) {
    return weyl_character(spin.dim(), g.theta());
}

}  // namespace spincode
