#pragma once

#include <array>
#include <string>

#include "spincode/cmatrix.hpp"

namespace spincode {

/// Half-integer spin stored as twice_j. Hilbert dimension is twice_j + 1.
struct SpinJ {
    int twice_j = 0;

    explicit SpinJ(int tj) : twice_j(tj) {
        if (tj < 0) throw std::invalid_argument("SpinJ: twice_j must be non-negative");
    }
    double j() const { return 0.5 * twice_j; }
    std::size_t dim() const { return static_cast<std::size_t>(twice_j) + 1; }
    bool half_integer() const { return twice_j % 2 == 1; }
    /// m value of basis index i, ordering m = j, j-1, ..., -j
    double m_of_index(std::size_t i) const { return j() - static_cast<double>(i); }

    static SpinJ from_dim(std::size_t d) { return SpinJ(static_cast<int>(d) - 1); }

    /// parses "5/2", "13/2", "3", or "2.5"
    static SpinJ parse(const std::string& text);
    std::string to_string() const;
};

/// SU(2) element as a unit quaternion (w, x, y, z), corresponding to the
/// 2x2 matrix w*1 - i(x sx + y sy + z sz). q and -q are distinct (double cover).
struct GroupElement {
    double w = 1, x = 0, y = 0, z = 0;

    GroupElement() = default;
    GroupElement(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const { return {w, -x, -y, -z}; }
    GroupElement operator-() const { return {-w, -x, -y, -z}; }
    bool approx_equal(const GroupElement& o, double tol = 1e-9) const;

    /// rotation angle in [0, 2pi]: theta = 2 atan2(|v|, w)
    double theta() const;
    /// rotation axis; z-hat for (near-)identity and -1
    std::array<double, 3> axis() const;
    /// 3x3 SO(3) rotation matrix acting on real vectors
    std::array<std::array<double, 3>, 3> rotation_matrix() const;

    static GroupElement one() { return {1, 0, 0, 0}; }
    static GroupElement minus_one() { return {-1, 0, 0, 0}; }
};

/// Spin-j angular-momentum operators in the m-descending basis.
struct AngularMomentumOps {
    SpinJ spin;
    CMatrix jx, jy, jz;
    CMatrix jplus, jminus;

    const CMatrix& axis_op(char w) const;
};

AngularMomentumOps angular_momentum_ops(SpinJ spin);

/// quaternion for exp(-i theta n.sigma/2); rejects non-unit axes
GroupElement axis_angle(const std::array<double, 3>& n_hat, double theta);

/// The representation map D: spin-j unitary for the SU(2) element g.
CMatrix represent(const GroupElement& g, SpinJ spin);

/// Weyl character sin(d theta/2)/sin(theta/2), with the limits d at
/// theta = 0 and (-1)^(d+1) d at theta = 2pi.
double character_value(const GroupElement& g, SpinJ spin);
double weyl_character(std::size_t dim, double theta);

}  // namespace spincode
