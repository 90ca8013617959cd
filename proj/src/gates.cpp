#include "spincode/gates.hpp"

#include <cmath>

#include "spincode/linalg.hpp"

namespace spincode {

namespace {

std::vector<cdouble> kron_vec(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    std::vector<cdouble> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
    return out;
}

LogicalAction project_action(const CMatrix& u,
                             const std::vector<std::vector<cdouble>>& basis) {
    const std::size_t n = basis.size();
    LogicalAction act;
    act.matrix = CMatrix(n, n);
    std::vector<std::vector<cdouble>> images;
    images.reserve(n);
    for (const auto& b : basis) images.push_back(u.apply(b));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) act.matrix(r, c) = inner(basis[r], images[c]);
    // leakage: portion of each image outside the codespace
    double leak2 = 0;
    for (std::size_t c = 0; c < n; ++c) {
        auto residual = images[c];
        for (std::size_t r = 0; r < n; ++r) {
            cdouble amp = act.matrix(r, c);
            for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= amp * basis[r][i];
        }
        leak2 += norm2(residual) * norm2(residual);
    }
    act.leakage = std::sqrt(leak2);
    return act;
}

}  // namespace

double phase_invariant_distance(const CMatrix& a, const CMatrix& t) {
    cdouble overlap = (t.dagger() * a).trace();
    cdouble phase = (std::abs(overlap) > 0) ? overlap / std::abs(overlap) : cdouble(1);
    CMatrix diff = a - phase * t;
    return diff.frobenius_norm();
}

LogicalAction logical_action(const CMatrix& u, const SpinCode& code) {
    return project_action(u, {code.ket0, code.ket1});
}

LogicalAction logical_action(const CMatrix& u, const SpinCode& code_a,
                             const SpinCode& code_b) {
    return project_action(u, {kron_vec(code_a.ket0, code_b.ket0),
                              kron_vec(code_a.ket0, code_b.ket1),
                              kron_vec(code_a.ket1, code_b.ket0),
                              kron_vec(code_a.ket1, code_b.ket1)});
}

double support_offset(const SpinCode& code) {
    auto ops = angular_momentum_ops(code.spin);
    auto supp = support_set(code.ket0, ops, 'z');
    if (supp.empty()) throw std::invalid_argument("support_offset: empty support");
    for (double m0 : {0.5, -1.5}) {
        bool all = true;
        for (double m : supp) {
            double r = std::remainder(m - m0, 4.0);
            if (std::abs(r) > 1e-9) { all = false; break; }
        }
        if (all) return m0 == 0.5 ? 0.5 : -1.5;
    }
    throw std::invalid_argument("support_offset: ket0 support not in a single residue class mod 4");
}

std::pair<CMatrix, GateReport> t_gate(const SpinCode& code) {
    const double m0 = support_offset(code);
    const double phi = (m0 == 0.5) ? M_PI / 4 : 5 * M_PI / 4;

    const std::size_t d = code.spin.dim();
    CMatrix u(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        double m = code.spin.m_of_index(i);
        u(i, i) = std::polar(1.0, -phi * m - (M_PI / 4) * m * m);
    }

    GateReport rep;
    rep.name = "T";
    rep.target = CMatrix::diag({1.0, std::polar(1.0, M_PI / 4)});
    auto act = logical_action(u, code);
    rep.achieved = act.matrix;
    rep.leakage = act.leakage;
    rep.distance = phase_invariant_distance(rep.achieved, rep.target);
    return {u, rep};
}

std::pair<CMatrix, GateReport> cz_gate(const SpinCode& code_a, const SpinCode& code_b) {
    const std::size_t da = code_a.spin.dim(), db = code_b.spin.dim();
    if (da * db > 4096) throw std::invalid_argument("cz_gate: product dimension > 4096");

    CMatrix u(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i) {
        double ma = code_a.spin.m_of_index(i);
        for (std::size_t k = 0; k < db; ++k) {
            double mb = code_b.spin.m_of_index(k);
            u(i * db + k, i * db + k) =
                std::polar(1.0, (M_PI / 2) * ma + (M_PI / 2) * mb - M_PI * ma * mb);
        }
    }

    GateReport rep;
    rep.name = "CZ";
    rep.target = CMatrix::diag({1.0, 1.0, 1.0, -1.0});
    auto act = logical_action(u, code_a, code_b);
    rep.achieved = act.matrix;
    rep.leakage = act.leakage;
    rep.distance = phase_invariant_distance(rep.achieved, rep.target);
    return {u, rep};
}

SupportReport measurement_support_check(const SpinCode& code) {
    auto ops = angular_momentum_ops(code.spin);
    SupportReport rep;
    rep.supp0 = support_set(code.ket0, ops, 'z');
    rep.supp1 = support_set(code.ket1, ops, 'z');

    auto disjoint = [](const std::set<double>& a, const std::set<double>& b) {
        for (double m : a)
            if (b.count(m)) return false;
        return true;
    };
    rep.disjoint_z = disjoint(rep.supp0, rep.supp1);

    // x and y readout: the sigma-bar_x / sigma-bar_y eigenstates must have
    // disjoint support in the matching angular-momentum operator
    const std::size_t d = code.spin.dim();
    const double r = std::sqrt(0.5);
    for (char axis : {'x', 'y'}) {
        std::vector<cdouble> plus(d), minus(d);
        cdouble ph = (axis == 'x') ? cdouble(1) : cdouble(0, 1);
        for (std::size_t i = 0; i < d; ++i) {
            plus[i] = r * (code.ket0[i] + ph * code.ket1[i]);
            minus[i] = r * (code.ket0[i] - ph * code.ket1[i]);
        }
        bool dis = disjoint(support_set(plus, ops, axis), support_set(minus, ops, axis));
        (axis == 'x' ? rep.disjoint_x : rep.disjoint_y) = dis;
    }
    return rep;
}

}  // namespace spincode
