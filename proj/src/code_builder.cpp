#include "spincode/code_builder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spincode/linalg.hpp"

namespace spincode {

CMatrix SpinCode::codespace_projector() const {
    CMatrix p = outer(ket0, ket0);
    p += outer(ket1, ket1);
    return p;
}

IrrepProjector irrep_projector(SpinJ spin, const FiniteSubgroup& group,
                               const std::string& irrep_label) {
    const std::size_t r = group.table.irrep_index(irrep_label);
    const double dim_rho = static_cast<double>(group.table.irrep_dims[r]);
    const std::size_t d = spin.dim();

    CMatrix p = CMatrix::zeros(d, d);
    for (std::size_t k = 0; k < group.order(); ++k) {
        const cdouble chi = group.table.values[r][group.class_of_element[k]];
        CMatrix dg = represent(group.elements[k], spin);
        dg *= std::conj(chi);
        p += dg;
    }
    p *= dim_rho / static_cast<double>(group.order());
    p.hermitize();

    IrrepProjector out;
    out.p = std::move(p);
    out.irrep_label = irrep_label;
    out.multiplicity = multiplicity(spin, group, irrep_label);

    const double expect_trace = out.multiplicity * dim_rho;
    if (std::abs(out.p.trace() - expect_trace) > 1e-9)
        throw std::runtime_error("irrep_projector: trace mismatch for " + irrep_label);
    return out;
}

CMatrix irrep_pauli(const IrrepProjector& projector, SpinJ spin, char axis) {
    const auto ops = angular_momentum_ops(spin);
    CMatrix rot = expm_hermitian_generator(ops.axis_op(axis), M_PI);
    rot *= cdouble(0, 1);
    CMatrix sigma = projector.p * rot * projector.p;
    if (spin.half_integer()) sigma.hermitize();
    return sigma;
}

void fix_global_phase(std::vector<cdouble>& state, double tol) {
    for (const auto& a : state) {
        if (std::abs(a) > tol) {
            cdouble phase = std::conj(a) / std::abs(a);
            for (auto& b : state) b *= phase;
            return;
        }
    }
    throw std::runtime_error("fix_global_phase: zero state");
}

namespace {

// columns of the +1 eigenspace of sigma-bar_z (eigenvalues within 1e-8 of 1)
std::vector<std::vector<cdouble>> plus_one_eigenspace(const CMatrix& sigma_z) {
    auto eig = herm_eig(sigma_z);
    std::vector<std::vector<cdouble>> vecs;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (std::abs(eig.eigenvalues[k] - 1.0) < 1e-8) vecs.push_back(eig.eigenvector(k));
    return vecs;
}

std::vector<cdouble> logical_one_from(const CMatrix& sigma_x,
                                      const std::vector<cdouble>& ket0) {
    // no phase fix here: ket1 is sigma-bar_x ket0 exactly, so that group
    // elements restrict to the tabulated 2x2 matrices in this basis
    auto ket1 = sigma_x.apply(ket0);
    normalize(ket1);
    return ket1;
}

}  // namespace

SpinCode extract_codewords(SpinJ spin, const FiniteSubgroup& group,
                           const std::string& irrep_label) {
    auto proj = irrep_projector(spin, group, irrep_label);
    if (proj.multiplicity != 1)
        throw std::invalid_argument("extract_codewords: multiplicity is " +
                                    std::to_string(proj.multiplicity) +
                                    ", need 1 (use the zero-expectation builder)");
    CMatrix sz = irrep_pauli(proj, spin, 'z');
    auto plus = plus_one_eigenspace(sz);
    if (plus.size() != 1)
        throw std::runtime_error("extract_codewords: +1 eigenspace dimension != 1");

    SpinCode code{spin, group.label, irrep_label, {}, {}, std::nullopt};
    code.ket0 = plus[0];
    fix_global_phase(code.ket0);
    code.ket1 = logical_one_from(irrep_pauli(proj, spin, 'x'), code.ket0);
    return code;
}

SpinCode extract_codewords_zero_jz(SpinJ spin, const FiniteSubgroup& group,
                                   const std::string& irrep_label, double phi) {
    auto proj = irrep_projector(spin, group, irrep_label);
    if (proj.multiplicity < 2)
        throw std::invalid_argument("extract_codewords_zero_jz: multiplicity is " +
                                    std::to_string(proj.multiplicity) + ", need >= 2");
    CMatrix sz = irrep_pauli(proj, spin, 'z');
    auto plus = plus_one_eigenspace(sz);
    const std::size_t m = plus.size();
    if (static_cast<int>(m) != proj.multiplicity)
        throw std::runtime_error("extract_codewords_zero_jz: unexpected +1 eigenspace size");

    const auto ops = angular_momentum_ops(spin);
    CMatrix small(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            small(i, j) = inner(plus[i], ops.jz.apply(plus[j]));
    small.hermitize();
    auto eig = herm_eig(small);

    // eigenvalue pair straddling zero: largest negative, smallest non-negative
    std::ptrdiff_t i1 = -1, i2 = -1;
    for (std::size_t k = 0; k < m; ++k) {
        if (eig.eigenvalues[k] < 0) i1 = static_cast<std::ptrdiff_t>(k);
        else if (i2 < 0) i2 = static_cast<std::ptrdiff_t>(k);
    }
    if (i1 < 0 || i2 < 0) {
        std::ostringstream msg;
        msg << "extract_codewords_zero_jz: projected J_z eigenvalues do not straddle zero:";
        for (double l : eig.eigenvalues) msg << ' ' << l;
        throw std::runtime_error(msg.str());
    }
    const double l1 = eig.eigenvalues[i1], l2 = eig.eigenvalues[i2];

    auto lift = [&](std::size_t k) {
        std::vector<cdouble> v(spin.dim(), 0.0);
        auto c = eig.eigenvector(k);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t n = 0; n < spin.dim(); ++n) v[n] += c[i] * plus[i][n];
        fix_global_phase(v);
        return v;
    };
    auto v1 = lift(static_cast<std::size_t>(i1));
    auto v2 = lift(static_cast<std::size_t>(i2));

    const double w1 = std::sqrt(l2 / (l2 - l1));
    const double w2 = std::sqrt(-l1 / (l2 - l1));
    const cdouble mix = std::polar(w2, phi);

    SpinCode code{spin, group.label, irrep_label, {}, {}, phi};
    code.ket0.resize(spin.dim());
    for (std::size_t n = 0; n < spin.dim(); ++n) code.ket0[n] = w1 * v1[n] + mix * v2[n];
    code.ket1 = logical_one_from(irrep_pauli(proj, spin, 'x'), code.ket0);
    return code;
}

SpinCode icosahedral_code_7half() {
    SpinCode code{SpinJ(7), GroupLabel::TwoI, "rho3", {}, {}, std::nullopt};
    code.ket0.assign(8, 0.0);
    code.ket1.assign(8, 0.0);
    // m order: 7/2, 5/2, 3/2, 1/2, -1/2, -3/2, -5/2, -7/2
    code.ket0[0] = std::sqrt(3.0 / 10.0);
    code.ket0[5] = std::sqrt(7.0 / 10.0);
    code.ket1[2] = std::sqrt(7.0 / 10.0);
    code.ket1[7] = -std::sqrt(3.0 / 10.0);
    return code;
}

std::set<double> support_set(const std::vector<cdouble>& state,
                             const AngularMomentumOps& ops, char axis) {
    std::set<double> supp;
    if (axis == 'z') {
        for (std::size_t i = 0; i < state.size(); ++i)
            if (std::abs(state[i]) > 1e-10) supp.insert(ops.spin.m_of_index(i));
        return supp;
    }
    auto eig = herm_eig(ops.axis_op(axis));
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        if (std::abs(inner(eig.eigenvector(k), state)) > 1e-10)
            supp.insert(std::round(2.0 * eig.eigenvalues[k]) / 2.0);
    }
    return supp;
}

}  // namespace spincode
