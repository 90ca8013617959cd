#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spincode/code_builder.hpp"
#include "spincode/linalg.hpp"
#include "spincode/wigner.hpp"

using namespace spincode;

namespace {

// independent Clebsch-Gordan oracle: diagonalize the total angular momentum
// on the product space, pick the J = j multiplet, and walk it down with the
// total lowering operator; signs follow the highest-weight convention
// <j j; l 0 | j j> > 0
std::vector<std::vector<cdouble>> coupled_multiplet(SpinJ spin, int l) {
    const auto ja = angular_momentum_ops(spin);
    const auto jb = angular_momentum_ops(SpinJ(2 * l));
    const std::size_t da = spin.dim(), db = jb.spin.dim();
    const CMatrix ia = CMatrix::identity(da), ib = CMatrix::identity(db);

    CMatrix jx = kron(ja.jx, ib) + kron(ia, jb.jx);
    CMatrix jy = kron(ja.jy, ib) + kron(ia, jb.jy);
    CMatrix jz = kron(ja.jz, ib) + kron(ia, jb.jz);
    CMatrix jtot2 = jx * jx + jy * jy + jz * jz;
    CMatrix jminus = kron(ja.jminus, ib) + kron(ia, jb.jminus);

    // top state: simultaneous eigenvector with J^2 = j(j+1), Jz = j; isolate
    // it inside the M = j eigenspace of Jz
    const double j = spin.j();
    auto eig = herm_eig(jtot2 + 100.0 * jz);
    const double target = j * (j + 1) + 100.0 * j;
    std::vector<cdouble> top;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (std::abs(eig.eigenvalues[k] - target) < 1e-8) {
            REQUIRE(top.empty());
            top = eig.eigenvector(k);
        }
    REQUIRE(!top.empty());
    // fix the highest-weight sign: component |m1 = j, m2 = 0>
    std::size_t idx_top = 0 * db + static_cast<std::size_t>(l);
    cdouble lead = top[idx_top];
    REQUIRE(std::abs(lead) > 1e-10);
    for (auto& a : top) a *= std::conj(lead) / std::abs(lead);

    std::vector<std::vector<cdouble>> states{top};
    for (int step = 0; step < spin.twice_j; ++step) {
        auto next = jminus.apply(states.back());
        normalize(next);
        states.push_back(std::move(next));
    }
    return states;  // index k corresponds to M = j - k
}

double cg_oracle(SpinJ spin, int l, int tm) {
    auto states = coupled_multiplet(spin, l);
    const std::size_t k = static_cast<std::size_t>((spin.twice_j - tm) / 2);
    const std::size_t db = 2 * l + 1;
    // component <m1 = m, m2 = 0| of |(j l) j, m>
    const std::size_t idx = k * db + static_cast<std::size_t>(l);
    cdouble c = states[k][idx];
    REQUIRE(std::abs(c.imag()) < 1e-10);
    return c.real();
}

CMatrix random_hermitian(std::size_t n, std::mt19937& rng) {
    std::normal_distribution<double> g;
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) a(i, k) = cdouble(g(rng), g(rng));
    a.hermitize();
    return a;
}

}  // namespace

TEST_CASE("Clebsch-Gordan basics") {
    for (int tm : {5, 1, -3}) CHECK(clebsch_gordan_j_l0(SpinJ(5), 0, tm) == doctest::Approx(1.0));
    CHECK(clebsch_gordan_j_l0(SpinJ(1), 1, 1) == doctest::Approx(1.0 / std::sqrt(3.0)));
    // m -> -m flips sign as (-1)^l
    for (int l : {1, 2, 3}) {
        double plus = clebsch_gordan_j_l0(SpinJ(7), l, 5);
        double minus = clebsch_gordan_j_l0(SpinJ(7), l, -5);
        CHECK(minus == doctest::Approx((l % 2 == 0 ? 1.0 : -1.0) * plus).epsilon(1e-12));
    }
    CHECK_THROWS(clebsch_gordan_j_l0(SpinJ(5), 6, 1));
    CHECK_THROWS(clebsch_gordan(2, 1, 2, 0, 2, 1));  // parity mismatch tj+tm odd
}

TEST_CASE("Racah formula agrees with the ladder-construction oracle") {
    for (int tj : {3, 7}) {
        SpinJ spin(tj);
        for (int l = 1; l <= tj; ++l)
            for (int tm = -tj; tm <= tj; tm += 2)
                CHECK(clebsch_gordan_j_l0(spin, l, tm) ==
                      doctest::Approx(cg_oracle(spin, l, tm)).epsilon(1e-10));
    }
}

TEST_CASE("CG cache magnitudes bounded by one") {
    CGCache cache(SpinJ(9));
    for (int l = 0; l <= 9; ++l)
        for (std::size_t i = 0; i < 10; ++i) CHECK(std::abs(cache.at(l, i)) <= 1.0 + 1e-12);
}

TEST_CASE("kernel structure") {
    SpinJ spin(5);
    CGCache cache(spin);
    CMatrix dz = wigner_kernel(spin, {0, 0, 1}, cache);
    CHECK(std::abs(dz.trace() - 1.0) < 1e-12);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t k = 0; k < 6; ++k)
            if (i != k) CHECK(std::abs(dz(i, k)) < 1e-14);

    const double r = std::sqrt(0.5);
    CMatrix dn = wigner_kernel(spin, {r, 0, r}, cache);
    CHECK(dn.is_hermitian(1e-12));
    CHECK(std::abs(dn.trace() - 1.0) < 1e-12);
    CHECK(std::abs((dn * dn).trace() - (dz * dz).trace()) < 1e-12);

    CMatrix dsouth = wigner_kernel(spin, {0, 0, -1}, cache);
    CHECK(std::abs(dsouth.trace() - 1.0) < 1e-12);
}

TEST_CASE("kernel covariance and gauge independence") {
    SpinJ spin(7);
    CGCache cache(spin);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 6; ++trial) {
        GroupElement g{u(rng), u(rng), u(rng), u(rng)};
        double n = g.norm();
        g = {g.w / n, g.x / n, g.y / n, g.z / n};
        auto r = g.rotation_matrix();
        std::array<double, 3> nhat{r[0][2], r[1][2], r[2][2]};  // R z-hat
        CMatrix lhs = wigner_kernel(spin, nhat, cache);
        CMatrix d = represent(g, spin);
        CMatrix rhs = d * wigner_kernel(spin, {0, 0, 1}, cache) * d.dagger();
        CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    std::vector<double> x, w;
    gauss_legendre(6, x, w);
    for (int power : {0, 2, 4, 10}) {
        double acc = 0;
        for (std::size_t i = 0; i < 6; ++i) acc += w[i] * std::pow(x[i], power);
        CHECK(acc == doctest::Approx(2.0 / (power + 1)).epsilon(1e-13));
    }
    double odd = 0;
    for (std::size_t i = 0; i < 6; ++i) odd += w[i] * std::pow(x[i], 7);
    CHECK(std::abs(odd) < 1e-14);
}

TEST_CASE("Wigner function of the identity is one") {
    auto grid = wigner_function(CMatrix::identity(6), SpinJ(5), 8, 16);
    for (double v : grid.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(grid.integrate() == doctest::Approx(4 * M_PI));
}

TEST_CASE("postulates on random Hermitian operators") {
    std::mt19937 rng(11);
    for (int tj : {5, 7}) {
        std::vector<CMatrix> ops;
        for (int k = 0; k < 5; ++k) ops.push_back(random_hermitian(tj + 1, rng));
        auto rep = verify_postulates(SpinJ(tj), ops, 2);
        CHECK(rep.standardization < 1e-8);
        CHECK(rep.traciality < 1e-8);
        CHECK(rep.reality < 1e-8);
        CHECK(rep.covariance < 1e-8);
        CHECK(rep.self_duality < 1e-8);
    }
}

TEST_CASE("quadrature is converged: doubling the grid changes nothing") {
    std::mt19937 rng(5);
    CMatrix a = random_hermitian(6, rng);
    auto g1 = wigner_function(a, SpinJ(5));
    auto g2 = wigner_function(a, SpinJ(5), 2 * g1.n_theta, 2 * g1.n_phi);
    CHECK(std::abs(g1.integrate() - g2.integrate()) < 1e-11);
}

TEST_CASE("ket1 grid is the upside-down ket0 grid") {
    auto code = extract_codewords(SpinJ(5), enumerate_group(GroupLabel::TwoO), "rho5");
    auto g0 = wigner_function(outer(code.ket0, code.ket0), SpinJ(5));
    auto g1 = wigner_function(outer(code.ket1, code.ket1), SpinJ(5));
    // theta -> pi - theta is node reversal; phi -> -phi is index negation
    for (std::size_t t = 0; t < g0.n_theta; ++t)
        for (std::size_t p = 0; p < g0.n_phi; ++p) {
            std::size_t tr = g0.n_theta - 1 - t;
            std::size_t pr = (g0.n_phi - p) % g0.n_phi;
            CHECK(std::abs(g1.at(t, p) - g0.at(tr, pr)) < 1e-9);
        }
}

TEST_CASE("code projector Wigner function has octahedral symmetry") {
    auto group = enumerate_group(GroupLabel::TwoO);
    auto code = extract_codewords(SpinJ(5), group, "rho5");
    CMatrix pc = code.codespace_projector();
    CGCache cache(SpinJ(5));

    std::mt19937 rng(9);
    std::normal_distribution<double> gauss;
    std::vector<std::array<double, 3>> dirs;
    for (int k = 0; k < 6; ++k) {
        std::array<double, 3> v{gauss(rng), gauss(rng), gauss(rng)};
        double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (auto& c : v) c /= n;
        dirs.push_back(v);
    }

    for (const auto& g : group.elements) {
        auto r = g.rotation_matrix();
        for (const auto& n : dirs) {
            std::array<double, 3> rn{};
            for (int row = 0; row < 3; ++row)
                for (int col = 0; col < 3; ++col) rn[row] += r[row][col] * n[col];
            double w1 = (wigner_kernel(SpinJ(5), n, cache) * pc).trace().real();
            double w2 = (wigner_kernel(SpinJ(5), rn, cache) * pc).trace().real();
            CHECK(std::abs(w1 - w2) < 1e-9);
        }
    }
}
