#include "spincode/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace spincode {

namespace {

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tj3, int tm3) {
    if (tj1 < 0 || tj2 < 0 || tj3 < 0 || std::abs(tm1) > tj1 || std::abs(tm2) > tj2 ||
        std::abs(tm3) > tj3 || (tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 ||
        (tj3 + tm3) % 2 != 0)
        throw std::invalid_argument("clebsch_gordan: invalid quantum numbers");
    if (tm1 + tm2 != tm3) return 0.0;
    if (tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2 || (tj1 + tj2 + tj3) % 2 != 0)
        return 0.0;

    const int a = (tj1 + tj2 - tj3) / 2;
    const int b = (tj1 - tj2 + tj3) / 2;
    const int c = (-tj1 + tj2 + tj3) / 2;
    const int j1p = (tj1 + tm1) / 2, j1m = (tj1 - tm1) / 2;
    const int j2p = (tj2 + tm2) / 2, j2m = (tj2 - tm2) / 2;
    const int j3p = (tj3 + tm3) / 2, j3m = (tj3 - tm3) / 2;

    const double log_pref =
        0.5 * (std::log(tj3 + 1.0) + log_factorial(a) + log_factorial(b) +
               log_factorial(c) - log_factorial((tj1 + tj2 + tj3) / 2 + 1) +
               log_factorial(j1p) + log_factorial(j1m) + log_factorial(j2p) +
               log_factorial(j2m) + log_factorial(j3p) + log_factorial(j3m));

    const int e = (tj3 - tj2 + tm1) / 2;  // j3 - j2 + m1
    const int f = (tj3 - tj1 - tm2) / 2;  // j3 - j1 - m2
    const int kmin = std::max({0, -e, -f});
    const int kmax = std::min({a, j1m, j2p});

    double sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        const double log_term = log_factorial(k) + log_factorial(a - k) +
                                log_factorial(j1m - k) + log_factorial(j2p - k) +
                                log_factorial(e + k) + log_factorial(f + k);
        const double term = std::exp(log_pref - log_term);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

double clebsch_gordan_j_l0(SpinJ spin, int l, int tm) {
    if (l < 0 || l > spin.twice_j)
        throw std::invalid_argument("clebsch_gordan_j_l0: l out of range");
    return clebsch_gordan(spin.twice_j, tm, 2 * l, 0, spin.twice_j, tm);
}

CGCache::CGCache(SpinJ s) : spin(s) {
    values.resize(s.twice_j + 1);
    for (int l = 0; l <= s.twice_j; ++l) {
        values[l].resize(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const int tm = s.twice_j - 2 * static_cast<int>(i);
            values[l][i] = clebsch_gordan_j_l0(s, l, tm);
        }
    }
}

namespace {

GroupElement rotation_z_to(const std::array<double, 3>& n) {
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(nn - 1.0) > 1e-9)
        throw std::invalid_argument("wigner_kernel: direction must be a unit vector");
    const double ct = std::clamp(n[2], -1.0, 1.0);
    const double s = std::hypot(n[0], n[1]);
    if (s < 1e-14) {
        if (ct > 0) return GroupElement::one();
        return axis_angle({1, 0, 0}, M_PI);  // n = -z: any equatorial axis works
    }
    return axis_angle({-n[1] / s, n[0] / s, 0}, std::acos(ct));
}

}  // namespace

CMatrix wigner_kernel(SpinJ spin, const std::array<double, 3>& n_hat,
                      const CGCache& cache) {
    const std::size_t d = spin.dim();
    const double dj = static_cast<double>(spin.twice_j) + 1.0;
    std::vector<cdouble> diag(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (int l = 0; l <= spin.twice_j; ++l)
            diag[i] += (2.0 * l + 1.0) / dj * cache.at(l, i);

    GroupElement g = rotation_z_to(n_hat);
    if (g.approx_equal(GroupElement::one())) return CMatrix::diag(diag);
    CMatrix u = represent(g, spin);
    CMatrix out = u * CMatrix::diag(diag) * u.dagger();
    out.hermitize();
    return out;
}

CMatrix wigner_kernel(SpinJ spin, const std::array<double, 3>& n_hat) {
    return wigner_kernel(spin, n_hat, CGCache(spin));
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_n(x) and derivative by the three-term recurrence
            double p0 = 1, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double WignerGrid::integrate() const {
    const double dphi = 2.0 * M_PI / n_phi;
    double acc = 0;
    for (std::size_t t = 0; t < n_theta; ++t) {
        double row = 0;
        for (std::size_t p = 0; p < n_phi; ++p) row += at(t, p);
        acc += theta_weights[t] * row;
    }
    return acc * dphi;
}

double WignerGrid::integrate_product(const WignerGrid& other) const {
    if (n_theta != other.n_theta || n_phi != other.n_phi)
        throw std::invalid_argument("integrate_product: grid mismatch");
    const double dphi = 2.0 * M_PI / n_phi;
    double acc = 0;
    for (std::size_t t = 0; t < n_theta; ++t) {
        double row = 0;
        for (std::size_t p = 0; p < n_phi; ++p) row += at(t, p) * other.at(t, p);
        acc += theta_weights[t] * row;
    }
    return acc * dphi;
}

namespace {

WignerGrid empty_grid(SpinJ spin, std::size_t n_theta, std::size_t n_phi) {
    WignerGrid grid;
    grid.n_theta = std::max<std::size_t>(n_theta, spin.dim());
    grid.n_phi = std::max<std::size_t>(n_phi, 2 * spin.dim() - 1);
    std::vector<double> x;
    gauss_legendre(grid.n_theta, x, grid.theta_weights);
    grid.thetas.resize(grid.n_theta);
    // descending cos theta so theta ascends from 0 to pi
    std::sort(x.rbegin(), x.rend());
    for (std::size_t t = 0; t < grid.n_theta; ++t) grid.thetas[t] = std::acos(x[t]);
    grid.phis.resize(grid.n_phi);
    for (std::size_t p = 0; p < grid.n_phi; ++p)
        grid.phis[p] = 2.0 * M_PI * p / grid.n_phi;
    grid.values.assign(grid.n_theta * grid.n_phi, 0.0);
    return grid;
}

std::array<double, 3> direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

cdouble kernel_trace(const CMatrix& delta, const CMatrix& op) {
    cdouble acc = 0;
    for (std::size_t i = 0; i < delta.rows(); ++i)
        for (std::size_t k = 0; k < delta.cols(); ++k) acc += delta(i, k) * op(k, i);
    return acc;
}

}  // namespace

WignerGrid wigner_function(const CMatrix& op, SpinJ spin, std::size_t n_theta,
                           std::size_t n_phi) {
    if (op.rows() != spin.dim() || op.cols() != spin.dim())
        throw std::invalid_argument("wigner_function: operator dimension mismatch");
    WignerGrid grid = empty_grid(spin, n_theta, n_phi);
    CGCache cache(spin);
    for (std::size_t t = 0; t < grid.n_theta; ++t)
        for (std::size_t p = 0; p < grid.n_phi; ++p) {
            CMatrix delta =
                wigner_kernel(spin, direction(grid.thetas[t], grid.phis[p]), cache);
            grid.values[t * grid.n_phi + p] = kernel_trace(delta, op).real();
        }
    return grid;
}

double PostulateReport::worst() const {
    return std::max({standardization, traciality, reality, covariance, self_duality});
}

PostulateReport verify_postulates(SpinJ spin, const std::vector<CMatrix>& sample_ops,
                                  unsigned seed) {
    const std::size_t d = spin.dim();
    PostulateReport rep;
    CGCache cache(spin);
    WignerGrid proto = empty_grid(spin, 0, 0);

    // kernels over the quadrature grid, reused for every operator
    std::vector<CMatrix> kernels(proto.n_theta * proto.n_phi);
    for (std::size_t t = 0; t < proto.n_theta; ++t)
        for (std::size_t p = 0; p < proto.n_phi; ++p)
            kernels[t * proto.n_phi + p] =
                wigner_kernel(spin, direction(proto.thetas[t], proto.phis[p]), cache);

    std::vector<WignerGrid> grids;
    grids.reserve(sample_ops.size());
    for (const auto& a : sample_ops) {
        WignerGrid g = proto;
        for (std::size_t n = 0; n < kernels.size(); ++n) {
            cdouble w = kernel_trace(kernels[n], a);
            rep.reality = std::max(rep.reality, std::abs(w.imag()));
            g.values[n] = w.real();
        }
        grids.push_back(std::move(g));

        const double lhs = 4.0 * M_PI * a.trace().real();
        const double rhs = d * grids.back().integrate();
        rep.standardization = std::max(rep.standardization, std::abs(lhs - rhs));

        // self-duality: A = (2j+1)/(4 pi) int W_A Delta
        CMatrix rec = CMatrix::zeros(d, d);
        const double dphi = 2.0 * M_PI / proto.n_phi;
        for (std::size_t t = 0; t < proto.n_theta; ++t)
            for (std::size_t p = 0; p < proto.n_phi; ++p) {
                CMatrix term = kernels[t * proto.n_phi + p];
                term *= grids.back().at(t, p) * proto.theta_weights[t] * dphi;
                rec += term;
            }
        rec *= d / (4.0 * M_PI);
        rep.self_duality = std::max(rep.self_duality, max_abs_diff(rec, a));
    }

    for (std::size_t i = 0; i < sample_ops.size(); ++i)
        for (std::size_t k = i; k < sample_ops.size(); ++k) {
            const double lhs =
                4.0 * M_PI * (sample_ops[i] * sample_ops[k]).trace().real();
            const double rhs = d * grids[i].integrate_product(grids[k]);
            rep.traciality = std::max(rep.traciality, std::abs(lhs - rhs));
        }

    // covariance at random rotations and directions
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    auto random_unit = [&] {
        std::array<double, 3> v{gauss(rng), gauss(rng), gauss(rng)};
        double nn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (auto& c : v) c /= nn;
        return v;
    };
    for (int trial = 0; trial < 5; ++trial) {
        auto axis = random_unit();
        std::uniform_real_distribution<double> ang(0, 2 * M_PI);
        GroupElement g = axis_angle(axis, ang(rng));
        CMatrix u = represent(g, spin);
        auto r = g.rotation_matrix();
        for (const auto& a : sample_ops) {
            CMatrix rotated = u * a * u.dagger();
            for (int pt = 0; pt < 4; ++pt) {
                auto n = random_unit();
                // R^-1 n
                std::array<double, 3> rn{};
                for (int row = 0; row < 3; ++row)
                    for (int col = 0; col < 3; ++col) rn[row] += r[col][row] * n[col];
                cdouble lhs = kernel_trace(wigner_kernel(spin, n, cache), rotated);
                cdouble rhs = kernel_trace(wigner_kernel(spin, rn, cache), a);
                rep.covariance = std::max(rep.covariance, std::abs(lhs - rhs));
            }
        }
    }
    return rep;
}

}  // namespace spincode
