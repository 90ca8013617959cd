#include "spincode/noise.hpp"

#include <cmath>

#include "spincode/linalg.hpp"

namespace spincode {

CMatrix QuantumChannel::superoperator() const {
    const std::size_t di = dim_in(), dout = dim_out();
    CMatrix s = CMatrix::zeros(dout * dout, di * di);
    for (const auto& k : kraus) s += kron(k.conjugate(), k);
    return s;
}

CMatrix QuantumChannel::choi() const {
    const std::size_t di = dim_in(), dout = dim_out();
    CMatrix c = CMatrix::zeros(di * dout, di * dout);
    for (const auto& kr : kraus) {
        std::vector<cdouble> w(di * dout);
        for (std::size_t k = 0; k < di; ++k)
            for (std::size_t i = 0; i < dout; ++i) w[k * dout + i] = kr(i, k);
        c += outer(w, w);
    }
    return c;
}

CMatrix QuantumChannel::apply(const CMatrix& rho) const {
    CMatrix out = CMatrix::zeros(dim_out(), dim_out());
    for (const auto& k : kraus) out += k * rho * k.dagger();
    return out;
}

double QuantumChannel::trace_preservation_defect() const {
    CMatrix acc = CMatrix::zeros(dim_in(), dim_in());
    for (const auto& k : kraus) acc += k.dagger() * k;
    return max_abs_diff(acc, CMatrix::identity(dim_in()));
}

QuantumChannel QuantumChannel::identity(std::size_t d) {
    return {{CMatrix::identity(d)}};
}

QuantumChannel QuantumChannel::from_choi(const CMatrix& c, std::size_t d_in,
                                         std::size_t d_out, double cutoff) {
    if (c.rows() != d_in * d_out)
        throw std::invalid_argument("from_choi: dimension mismatch");
    CMatrix h = c;
    h.hermitize();
    auto eig = herm_eig(h);
    QuantumChannel ch;
    for (std::size_t n = 0; n < eig.eigenvalues.size(); ++n) {
        if (eig.eigenvalues[n] <= cutoff) continue;
        const double s = std::sqrt(eig.eigenvalues[n]);
        auto v = eig.eigenvector(n);
        CMatrix k(d_out, d_in);
        for (std::size_t col = 0; col < d_in; ++col)
            for (std::size_t i = 0; i < d_out; ++i) k(i, col) = s * v[col * d_out + i];
        ch.kraus.push_back(std::move(k));
    }
    if (ch.kraus.empty()) throw std::runtime_error("from_choi: no Kraus above cutoff");
    return ch;
}

QuantumChannel QuantumChannel::from_superoperator(const CMatrix& s, std::size_t d_in,
                                                  std::size_t d_out, double cutoff) {
    if (s.rows() != d_out * d_out || s.cols() != d_in * d_in)
        throw std::invalid_argument("from_superoperator: dimension mismatch");
    CMatrix c(d_in * d_out, d_in * d_out);
    for (std::size_t k = 0; k < d_in; ++k)
        for (std::size_t i = 0; i < d_out; ++i)
            for (std::size_t l = 0; l < d_in; ++l)
                for (std::size_t j = 0; j < d_out; ++j)
                    c(k * d_out + i, l * d_out + j) = s(i + d_out * j, k + d_in * l);
    return from_choi(c, d_in, d_out, cutoff);
}

QuantumChannel QuantumChannel::compose_after(const QuantumChannel& inner) const {
    if (dim_in() != inner.dim_out())
        throw std::invalid_argument("compose_after: dimension mismatch");
    CMatrix s = superoperator() * inner.superoperator();
    return from_superoperator(s, inner.dim_in(), dim_out());
}

QuantumChannel lindblad_channel(SpinJ spin, double gamma_t) {
    if (gamma_t < 0) throw std::invalid_argument("lindblad_channel: gamma_t < 0");
    const std::size_t d = spin.dim();
    if (gamma_t == 0) return QuantumChannel::identity(d);

    auto ops = angular_momentum_ops(spin);
    const CMatrix id = CMatrix::identity(d);
    CMatrix lv = CMatrix::zeros(d * d, d * d);
    for (char w : {'x', 'y', 'z'}) {
        const CMatrix& jw = ops.axis_op(w);
        CMatrix jw2 = jw * jw;
        lv += kron(jw.transpose(), jw);
        lv -= 0.5 * kron(id, jw2);
        lv -= 0.5 * kron(jw2.transpose(), id);
    }
    lv *= gamma_t;
    return QuantumChannel::from_superoperator(expm_general(lv), d, d);
}

KLMatrix kl_matrix(const SpinCode& code, const std::vector<CMatrix>& errors) {
    KLMatrix out;
    out.n_errors = errors.size();
    const auto& k0 = code.ket0;
    const auto& k1 = code.ket1;
    for (std::size_t j = 0; j < errors.size(); ++j) {
        auto e0 = errors[j].apply(k0);
        auto e1 = errors[j].apply(k1);
        for (std::size_t k = 0; k < errors.size(); ++k) {
            auto f0 = errors[k].apply(k0);
            auto f1 = errors[k].apply(k1);
            CMatrix b(2, 2);
            b(0, 0) = inner(e0, f0);
            b(0, 1) = inner(e0, f1);
            b(1, 0) = inner(e1, f0);
            b(1, 1) = inner(e1, f1);
            double v = std::sqrt(std::norm(b(0, 1)) + std::norm(b(1, 0))) +
                       std::abs(b(0, 0) - b(1, 1));
            out.violation = std::max(out.violation, v);
            out.blocks.push_back(std::move(b));
        }
    }
    return out;
}

ReducedConditions reduced_conditions(const SpinCode& code) {
    auto ops = angular_momentum_ops(code.spin);
    const auto& k0 = code.ket0;
    const auto& k1 = code.ket1;

    auto block = [&](const CMatrix& op) {
        CMatrix b(2, 2);
        auto o0 = op.apply(k0);
        auto o1 = op.apply(k1);
        b(0, 0) = inner(k0, o0);
        b(0, 1) = inner(k0, o1);
        b(1, 0) = inner(k1, o0);
        b(1, 1) = inner(k1, o1);
        return b;
    };
    auto defect = [](const CMatrix& b) {
        return std::sqrt(std::norm(b(0, 1)) + std::norm(b(1, 0))) +
               std::abs(b(0, 0) - b(1, 1));
    };

    ReducedConditions rc;
    rc.jz2_defect = defect(block(ops.jz * ops.jz));
    // diagonality only: the J_xJ_y diagonal difference is i<J_z> by the
    // commutator, already reported through jz_expectation below
    CMatrix bxy = block(ops.jx * ops.jy);
    rc.jxjy_defect = std::sqrt(std::norm(bxy(0, 1)) + std::norm(bxy(1, 0)));
    CMatrix bz = block(ops.jz);
    rc.jz_offdiag = std::abs(bz(0, 1));
    rc.jz_antisymmetry = std::abs(bz(1, 1) + bz(0, 0));
    rc.jz_expectation = bz(0, 0).real();
    return rc;
}

int error_subspace_rank(const SpinCode& code) {
    const auto ops = angular_momentum_ops(code.spin);
    const CMatrix id = CMatrix::identity(code.spin.dim());
    std::vector<std::vector<cdouble>> vecs;
    for (const CMatrix* e : {&id, &ops.jx, &ops.jy, &ops.jz}) {
        for (const auto* ket : {&code.ket0, &code.ket1}) {
            auto v = e->apply(*ket);
            normalize(v);
            vecs.push_back(std::move(v));
        }
    }
    CMatrix gram(vecs.size(), vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs.size(); ++j) gram(i, j) = inner(vecs[i], vecs[j]);
    gram.hermitize();
    auto eig = herm_eig(gram);
    int rank = 0;
    for (double l : eig.eigenvalues)
        if (l > 1e-9) ++rank;
    return rank;
}

}  // namespace spincode
