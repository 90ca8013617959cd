#include "spincode/recovery.hpp"

#include <cmath>

#include "spincode/linalg.hpp"

namespace spincode {

namespace {

// column-stacking vec of a matrix: out[i + rows*j] = x(i, j)
std::vector<cdouble> vec_cs(const CMatrix& x) {
    std::vector<cdouble> v(x.rows() * x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j)
        for (std::size_t i = 0; i < x.rows(); ++i) v[i + x.rows() * j] = x(i, j);
    return v;
}

// fidelity observable: M = sum_k vec(A_k^dag) vec(A_k^dag)^dag, matching the
// recovery Choi index j*2+i so that tr(C M) = sum |tr(R A_k)|^2
CMatrix fidelity_observable(const RecoveryProblem& p) {
    const std::size_t d = p.effective.dim_out();
    CMatrix m = CMatrix::zeros(2 * d, 2 * d);
    for (const auto& a : p.effective.kraus) {
        auto v = vec_cs(a.dagger());
        m += outer(v, v);
    }
    m.hermitize();
    return m;
}

// partial trace over the output qubit (minor index): (2d x 2d) -> (d x d)
CMatrix trace_out_qubit(const CMatrix& c, std::size_t d) {
    CMatrix t(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l)
            t(j, l) = c(j * 2, l * 2) + c(j * 2 + 1, l * 2 + 1);
    return t;
}

// projection onto {C Hermitian : Tr_out C = 1}
CMatrix project_affine(CMatrix x, std::size_t d) {
    x.hermitize();
    CMatrix gap = CMatrix::identity(d) - trace_out_qubit(x, d);
    gap *= 0.5;
    return x + kron(gap, CMatrix::identity(2));
}

CMatrix project_psd(const CMatrix& x, double* min_eig = nullptr) {
    auto eig = herm_eig(x);
    if (min_eig) *min_eig = eig.eigenvalues.front();
    const std::size_t n = x.rows();
    CMatrix out = CMatrix::zeros(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (eig.eigenvalues[k] <= 0) continue;
        auto v = eig.eigenvector(k);
        CMatrix term = outer(v, v);
        term *= eig.eigenvalues[k];
        out += term;
    }
    return out;
}

// Hermitian pseudo-inverse square root, eigenvalue cutoff 1e-12
CMatrix pinv_sqrt(const CMatrix& n) {
    auto eig = herm_eig(n);
    const std::size_t dim = n.rows();
    CMatrix out = CMatrix::zeros(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (eig.eigenvalues[k] <= 1e-12) continue;
        auto v = eig.eigenvector(k);
        CMatrix term = outer(v, v);
        term *= 1.0 / std::sqrt(eig.eigenvalues[k]);
        out += term;
    }
    return out;
}

}  // namespace

RecoveryProblem make_recovery_problem(const SpinCode& code, const QuantumChannel& noise) {
    const std::size_t d = code.spin.dim();
    if (noise.dim_in() != d)
        throw std::invalid_argument("make_recovery_problem: noise dimension mismatch");
    RecoveryProblem p;
    p.encode = CMatrix(d, 2);
    for (std::size_t i = 0; i < d; ++i) {
        p.encode(i, 0) = code.ket0[i];
        p.encode(i, 1) = code.ket1[i];
    }
    p.noise = noise;
    p.effective.kraus.reserve(noise.kraus.size());
    for (const auto& k : noise.kraus) p.effective.kraus.push_back(k * p.encode);
    return p;
}

double entanglement_fidelity(const QuantumChannel& channel) {
    if (channel.dim_in() != 2 || channel.dim_out() != 2)
        throw std::invalid_argument("entanglement_fidelity: need a qubit channel");
    double f = 0;
    for (const auto& k : channel.kraus) f += std::norm(k.trace() / 2.0);
    return f;
}

TransposeRecovery transpose_recovery(const RecoveryProblem& p) {
    const std::size_t d = p.effective.dim_out();
    // N = effective(maximally mixed logical state)
    CMatrix n = CMatrix::zeros(d, d);
    for (const auto& a : p.effective.kraus) n += a * a.dagger();
    n *= 0.5;
    n.hermitize();
    CMatrix n_inv_sqrt = pinv_sqrt(n);

    TransposeRecovery out;
    const double w = 1.0 / std::sqrt(2.0);
    for (const auto& a : p.effective.kraus) {
        CMatrix r = a.dagger() * n_inv_sqrt;
        r *= w;
        out.recovery.kraus.push_back(std::move(r));
    }
    // completion onto the orthogonal complement of the channel's range
    CMatrix gap = CMatrix::identity(d);
    for (const auto& r : out.recovery.kraus) gap -= r.dagger() * r;
    gap.hermitize();
    auto eig = herm_eig(gap);
    for (std::size_t k = 0; k < d; ++k) {
        if (eig.eigenvalues[k] <= 1e-12) continue;
        auto v = eig.eigenvector(k);
        CMatrix kr(2, d);
        const double s = std::sqrt(eig.eigenvalues[k]);
        for (std::size_t j = 0; j < d; ++j) kr(0, j) = s * std::conj(v[j]);
        out.recovery.kraus.push_back(std::move(kr));
    }

    double f = 0;
    for (const auto& r : out.recovery.kraus)
        for (const auto& a : p.effective.kraus) f += std::norm((r * a).trace());
    out.fidelity = f / 4.0;
    return out;
}

SDPSolution optimal_recovery(const RecoveryProblem& p) {
    const std::size_t d = p.effective.dim_out();
    const std::size_t n = 2 * d;
    const CMatrix m = fidelity_observable(p);

    // warm start from the transpose-channel Choi (feasible, near-optimal)
    CMatrix z = transpose_recovery(p).recovery.choi();
    z.hermitize();
    CMatrix u = CMatrix::zeros(n, n);
    CMatrix x = z;

    double rho = 1.0;
    const double tol = 1e-8;
    const std::size_t max_iter = 50000;

    SDPSolution sol;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        CMatrix x_in = z - u + (1.0 / (4.0 * rho)) * m;
        x = project_affine(std::move(x_in), d);
        CMatrix z_prev = z;
        z = project_psd(x + u);
        u += x - z;

        const double r_primal = (x - z).frobenius_norm();
        const double s_dual = rho * (z - z_prev).frobenius_norm();
        sol.iterations = it;
        sol.primal_residual = r_primal;
        sol.dual_residual = s_dual;
        if (r_primal < tol && s_dual < tol) {
            sol.converged = true;
            break;
        }
        if (r_primal > 10 * s_dual) {
            rho *= 2;
            u *= 0.5;
        } else if (s_dual > 10 * r_primal) {
            rho *= 0.5;
            u *= 2.0;
        }
    }

    // report from the PSD iterate; verify feasibility independently
    sol.recovery_choi = z;
    auto eig = herm_eig(z);
    sol.choi_min_eigenvalue = eig.eigenvalues.front();
    sol.partial_trace_residual =
        max_abs_diff(trace_out_qubit(z, d), CMatrix::identity(d));
    sol.fidelity = ((z * m).trace().real()) / 4.0;
    return sol;
}

std::vector<SweepPoint> fidelity_sweep(const SpinCode& code,
                                       const std::vector<double>& gamma_t_grid,
                                       RecoveryMethod method) {
    std::vector<SweepPoint> curve;
    curve.reserve(gamma_t_grid.size());
    for (double gt : gamma_t_grid) {
        SweepPoint pt;
        pt.gamma_t = gt;
        try {
            auto noise = lindblad_channel(code.spin, gt);
            auto problem = make_recovery_problem(code, noise);
            if (method == RecoveryMethod::Transpose) {
                pt.fidelity = transpose_recovery(problem).fidelity;
                pt.converged = true;
            } else {
                auto sol = optimal_recovery(problem);
                pt.fidelity = sol.fidelity;
                pt.iterations = sol.iterations;
                pt.residual = std::max(sol.primal_residual, sol.dual_residual);
                pt.converged = sol.converged;
            }
        } catch (const std::exception&) {
            pt.converged = false;
        }
        curve.push_back(pt);
    }
    return curve;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || lo <= 0 || hi <= lo)
        throw std::invalid_argument("log_grid: need 0 < lo < hi, points >= 2");
    std::vector<double> g(points);
    const double step = (std::log(hi) - std::log(lo)) / double(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = std::exp(std::log(lo) + step * i);
    return g;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("log_log_slope: need matching arrays, size >= 2");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace spincode
