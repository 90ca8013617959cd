// End-to-end acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spincode/code_builder.hpp"
#include "spincode/gates.hpp"
#include "spincode/linalg.hpp"
#include "spincode/noise.hpp"
#include "spincode/recovery.hpp"
#include "spincode/wigner.hpp"

using namespace spincode;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// reference multiplicity patterns, periodic in the dimension

struct MultPattern {
    std::string irrep;
    int per_q;                 // multiplicity = (per_q * q + offset[p])
    std::vector<int> offsets;  // indexed by p, dim = period*q + step*p (+1 if odd)
};

int pattern_value(const MultPattern& pat, int q, int p) {
    return pat.per_q * q + pat.offsets[p];
}

bool check_group_multiplicities(GroupLabel label, int period, std::size_t max_dim,
                                const std::vector<MultPattern>& even_pats,
                                const std::vector<MultPattern>& odd_pats,
                                std::string& detail) {
    auto group = enumerate_group(label);
    for (std::size_t dim = 1; dim <= max_dim; ++dim) {
        const bool even = dim % 2 == 0;
        const int q = static_cast<int>(dim) / period;
        const int p = (static_cast<int>(dim) % period) / 2;
        const auto& pats = even ? even_pats : odd_pats;
        // irreps absent from the table for this parity must have multiplicity 0
        for (const auto& ir : group.table.irrep_labels) {
            int want = 0;
            for (const auto& pat : pats)
                if (pat.irrep == ir) want = pattern_value(pat, q, p);
            int got = multiplicity(SpinJ::from_dim(dim), group, ir);
            if (got != want) {
                detail = group_label_name(label) + " dim " + std::to_string(dim) + " " +
                         ir + ": got " + std::to_string(got) + ", table says " +
                         std::to_string(want);
                return false;
            }
        }
    }
    return true;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;

    ok = ok && check_group_multiplicities(
        GroupLabel::TwoO, 24, 48,
        {{"rho4", 2, {0, 1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 1}},
         {"rho5", 2, {0, 0, 0, 1, 1, 0, 1, 2, 1, 1, 2, 2}},
         {"rho8", 4, {0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4}}},
        {{"rho1", 1, {1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 0}},
         {"rho2", 1, {0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1}},
         {"rho3", 2, {0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2}},
         {"rho6", 3, {0, 1, 0, 1, 1, 2, 1, 2, 2, 3, 2, 3}},
         {"rho7", 3, {0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3}}},
        detail);

    ok = ok && check_group_multiplicities(
        GroupLabel::TwoT, 12, 24,
        {{"rho4", 2, {0, 1, 0, 1, 2, 1}},
         {"rho5", 2, {0, 0, 1, 1, 1, 2}},
         {"rho6", 2, {0, 0, 1, 1, 1, 2}}},
        {{"rho1", 1, {1, 0, 0, 1, 1, 0}},
         {"rho2", 1, {0, 0, 1, 0, 1, 1}},
         {"rho3", 1, {0, 0, 1, 0, 1, 1}},
         {"rho7", 3, {0, 1, 1, 2, 2, 3}}},
        detail);

    ok = ok && check_group_multiplicities(
        GroupLabel::TwoI, 60, 60,
        {{"rho2", 2, {0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1,
                      2, 1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 2, 2, 1}},
         {"rho3", 2, {0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1,
                      1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2}},
         {"rho7", 4, {0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 1, 2, 2,
                      2, 3, 2, 2, 3, 3, 3, 3, 3, 3, 4, 4, 3, 4}},
         {"rho9", 6, {0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3,
                      3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6}}},
        {{"rho1", 1, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1,
                      1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0}},
         {"rho4", 3, {0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 2,
                      2, 2, 1, 2, 2, 3, 2, 2, 2, 3, 3, 3, 2, 3}},
         {"rho5", 3, {0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 2, 1, 2,
                      1, 2, 2, 2, 2, 2, 2, 3, 2, 3, 2, 3, 3, 3}},
         {"rho6", 4, {0, 0, 0, 1, 1, 0, 1, 1, 1, 2, 1, 1, 2, 2, 2, 2,
                      2, 2, 3, 3, 2, 3, 3, 3, 4, 3, 3, 4, 4, 4}},
         {"rho8", 5, {0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2,
                      3, 3, 3, 3, 4, 3, 4, 4, 4, 4, 5, 4, 5, 5}}},
        detail);

    const double dt = seconds_since(t0);
    report(1, ok && dt < 10.0, "multiplicity tables match the published patterns",
           ok ? "runtime " + std::to_string(dt) + " s" : detail);
}

// ---------------------------------------------------------------------------

double phase_fixed_diff(std::vector<cdouble> a, std::vector<cdouble> b) {
    fix_global_phase(a);
    fix_global_phase(b);
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<cdouble> sparse_state(std::size_t dim,
                                  std::vector<std::pair<std::size_t, double>> amps) {
    std::vector<cdouble> v(dim, 0.0);
    for (auto [i, x] : amps) v[i] = x;
    return v;
}

void criterion2() {
    auto group = enumerate_group(GroupLabel::TwoO);
    const double s16 = std::sqrt(1.0 / 6.0), s56 = std::sqrt(5.0 / 6.0);
    const double s712 = std::sqrt(7.0 / 12.0), s512 = std::sqrt(5.0 / 12.0);
    const double s32 = std::sqrt(3.0) / 2.0;
    const double a = std::sqrt(6.0) / 4.0, b = std::sqrt(21.0) / 6.0,
                 c = std::sqrt(6.0) / 12.0;

    struct Case {
        int tj;
        const char* irrep;
        std::vector<std::pair<std::size_t, double>> ket0, ket1;
    };
    std::vector<Case> cases{
        {5, "rho5", {{0, s16}, {4, -s56}}, {{1, -s56}, {5, s16}}},
        {7, "rho5", {{1, s32}, {5, -0.5}}, {{2, 0.5}, {6, -s32}}},
        {7, "rho4", {{3, s712}, {7, s512}}, {{0, -s512}, {4, -s712}}},
        {9, "rho4", {{0, a}, {4, b}, {8, c}}, {{1, c}, {5, b}, {9, a}}},
    };

    double worst = 0;
    for (const auto& cs : cases) {
        auto code = extract_codewords(SpinJ(cs.tj), group, cs.irrep);
        worst = std::max(worst,
                         phase_fixed_diff(code.ket0, sparse_state(cs.tj + 1, cs.ket0)));
        worst = std::max(worst,
                         phase_fixed_diff(code.ket1, sparse_state(cs.tj + 1, cs.ket1)));
    }
    report(2, worst < 1e-10, "published codewords reproduced",
           "max amplitude deviation " + std::to_string(worst));
}

void criterion3() {
    auto group = enumerate_group(GroupLabel::TwoO);
    auto i4 = group.table.irrep_index("rho4");
    auto i5 = group.table.irrep_index("rho5");
    double worst_dist = 0, worst_leak = 0, worst_chi = 0;
    bool sign_structure = true;

    auto s = axis_angle({0, 0, 1}, M_PI / 2);
    for (auto [tj, irrep] : {std::pair{5, "rho5"}, {7, "rho5"}, {7, "rho4"}, {9, "rho4"}}) {
        auto code = extract_codewords(SpinJ(tj), group, irrep);
        const bool is5 = irrep == std::string("rho5");
        const auto& row = group.table.values[is5 ? i5 : i4];
        for (std::size_t k = 0; k < group.order(); ++k) {
            const auto& g = group.elements[k];
            auto act = logical_action(represent(g, SpinJ(tj)), code);
            worst_leak = std::max(worst_leak, act.leakage);
            worst_dist = std::max(worst_dist,
                                  phase_invariant_distance(act.matrix, represent(g, SpinJ(1))));
            worst_chi = std::max(worst_chi,
                                 std::abs(act.matrix.trace() - row[group.class_of_element[k]]));
        }
        // the character row fixes the sign; spot check on S explicitly
        auto act_s = logical_action(represent(s, SpinJ(tj)), code);
        double sign = is5 ? -1.0 : 1.0;
        if (max_abs_diff(act_s.matrix, sign * represent(s, SpinJ(1))) > 1e-9)
            sign_structure = false;
    }
    bool ok = worst_dist < 1e-9 && worst_leak < 1e-10 && worst_chi < 1e-9 && sign_structure;
    report(3, ok, "restricted 2O representatives are the 2x2 Cliffords",
           "distance " + std::to_string(worst_dist) + ", leakage " +
               std::to_string(worst_leak));
}

void criterion4() {
    auto group = enumerate_group(GroupLabel::TwoO);
    bool ok = true;
    std::string detail;
    int built = 0;
    for (int tj = 1; tj <= 31 && ok; tj += 2) {
        SpinJ spin(tj);
        auto ops = angular_momentum_ops(spin);
        for (const char* irrep : {"rho4", "rho5"}) {
            int mult = multiplicity(spin, group, irrep);
            std::vector<SpinCode> codes;
            if (mult == 1) {
                codes.push_back(extract_codewords(spin, group, irrep));
            } else if (mult >= 2) {
                try {
                    codes.push_back(extract_codewords_zero_jz(spin, group, irrep, 0.0));
                } catch (const std::exception&) {
                    continue;  // no sign-straddling pair at this spin
                }
            }
            for (const auto& code : codes) {
                ++built;
                try {
                    support_offset(code);  // throws unless one residue class mod 4
                } catch (const std::exception& e) {
                    ok = false;
                    detail = "spin " + spin.to_string() + " " + irrep + ": " + e.what();
                    break;
                }
                auto s0 = support_set(code.ket0, ops, 'z');
                auto s1 = support_set(code.ket1, ops, 'z');
                std::set<double> reflected;
                for (double m : s0) reflected.insert(-m);
                if (s1 != reflected) {
                    ok = false;
                    detail = "spin " + spin.to_string() + " " + irrep +
                             ": ket1 support is not the reflection of ket0";
                    break;
                }
            }
        }
    }
    report(4, ok && built >= 16, "support residue law holds up to spin 31/2",
           ok ? std::to_string(built) + " codes checked" : detail);
}

void criterion5() {
    auto group = enumerate_group(GroupLabel::TwoO);
    auto code5 = extract_codewords(SpinJ(5), group, "rho5");   // m0 = -3/2 branch
    auto code7 = extract_codewords(SpinJ(7), group, "rho4");   // m0 = +1/2 branch
    double worst = 0;
    bool ok = true;

    for (const auto* code : {&code5, &code7}) {
        auto [u, rep] = t_gate(*code);
        worst = std::max({worst, rep.distance, rep.leakage});
        CMatrix u8 = u * u;
        u8 = u8 * u8;
        u8 = u8 * u8;
        auto act8 = logical_action(u8, *code);
        ok = ok && phase_invariant_distance(act8.matrix, CMatrix::identity(2)) < 1e-9;
    }
    for (auto [a, b] : {std::pair{&code5, &code5}, {&code7, &code7}, {&code5, &code7}}) {
        auto [u, rep] = cz_gate(*a, *b);
        worst = std::max({worst, rep.distance, rep.leakage});
        auto act2 = logical_action(u * u, *a, *b);
        ok = ok && phase_invariant_distance(act2.matrix, CMatrix::identity(4)) < 1e-9;
    }
    report(5, ok && worst < 1e-9, "quadratic T and CZ gates verified",
           "worst distance/leakage " + std::to_string(worst));
}

void criterion6() {
    auto group = enumerate_group(GroupLabel::TwoO);
    bool ok = true;
    std::string detail;

    auto errors = [](SpinJ spin) {
        auto ops = angular_momentum_ops(spin);
        return std::vector<CMatrix>{CMatrix::identity(spin.dim()), ops.jx, ops.jy,
                                    ops.jz};
    };

    for (double phi : {0.0, M_PI / 2, M_PI, 3 * M_PI / 2}) {
        auto code = extract_codewords_zero_jz(SpinJ(13), group, "rho5", phi);
        double v = kl_matrix(code, errors(SpinJ(13))).violation;
        if (v >= 1e-10) {
            ok = false;
            detail = "spin-13/2 violation " + std::to_string(v);
        }
    }
    auto ico = icosahedral_code_7half();
    if (kl_matrix(ico, errors(SpinJ(7))).violation >= 1e-10) {
        ok = false;
        detail = "icosahedral code violates the exact conditions";
    }
    if (error_subspace_rank(ico) != 8) {
        ok = false;
        detail = "icosahedral Gram rank != 8";
    }
    auto code5 = extract_codewords(SpinJ(5), group, "rho5");
    double jz = reduced_conditions(code5).jz_expectation;
    if (std::abs(std::abs(jz) - 5.0 / 6.0) > 1e-12) {
        ok = false;
        detail = "spin-5/2 <Jz> = " + std::to_string(jz);
    }
    report(6, ok, "Knill-Laflamme conditions behave as published", detail);
}

// shared between criteria 7 and 8
struct SweepRecord {
    std::string code_name;
    std::vector<double> grid;
    std::vector<SDPSolution> solutions;
    std::vector<double> petz_fidelity;
};
std::vector<SweepRecord> sweep_records;

SweepRecord run_sdp_sweep(const std::string& name, const SpinCode& code,
                          const std::vector<double>& grid) {
    SweepRecord rec;
    rec.code_name = name;
    rec.grid = grid;
    for (double gt : grid) {
        auto problem = make_recovery_problem(code, lindblad_channel(code.spin, gt));
        rec.petz_fidelity.push_back(transpose_recovery(problem).fidelity);
        rec.solutions.push_back(optimal_recovery(problem));
    }
    return rec;
}

void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    auto group = enumerate_group(GroupLabel::TwoO);
    auto code5 = extract_codewords(SpinJ(5), group, "rho5");
    auto code13 = extract_codewords_zero_jz(SpinJ(13), group, "rho5", 0.0);
    auto ico = icosahedral_code_7half();

    auto slope_grid = log_grid(1e-4, 1e-3, 5);
    sweep_records.push_back(run_sdp_sweep("spin-5/2", code5, slope_grid));
    sweep_records.push_back(run_sdp_sweep("spin-13/2", code13, slope_grid));
    sweep_records.push_back(run_sdp_sweep("icosahedral", ico, slope_grid));

    auto slope_of = [&](const SweepRecord& rec) {
        std::vector<double> infid;
        for (const auto& s : rec.solutions) infid.push_back(1.0 - s.fidelity);
        return log_log_slope(rec.grid, infid);
    };
    const double s5 = slope_of(sweep_records[0]);
    const double s13 = slope_of(sweep_records[1]);
    const double sico = slope_of(sweep_records[2]);

    bool ordering = true;
    for (std::size_t i = 0; i < slope_grid.size(); ++i)
        ordering = ordering && sweep_records[1].solutions[i].fidelity >
                                   sweep_records[0].solutions[i].fidelity;

    // the full-length sweep the front end exposes, timed
    auto wide = fidelity_sweep(code13, log_grid(1e-4, 1e-1, 25), RecoveryMethod::SDP);
    bool wide_ok = true;
    for (const auto& pt : wide) wide_ok = wide_ok && pt.converged;
    const double dt = seconds_since(t0);

    bool ok = s5 > 0.8 && s5 < 1.2 && s13 > 1.8 && s13 < 2.2 && sico > 1.8 &&
              sico < 2.2 && ordering && wide_ok && dt < 600.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "slopes 5/2: %.3f, 13/2: %.3f, 2I: %.3f; runtime %.1f s", s5, s13,
                  sico, dt);
    report(7, ok, "infidelity scaling and code ordering", detail);
}

void criterion8() {
    bool ok = true;
    std::string detail;
    for (const auto& rec : sweep_records)
        for (std::size_t i = 0; i < rec.solutions.size(); ++i) {
            const auto& s = rec.solutions[i];
            if (s.choi_min_eigenvalue < -1e-8 || s.partial_trace_residual >= 1e-8 ||
                s.fidelity < rec.petz_fidelity[i] - 1e-7) {
                ok = false;
                detail = rec.code_name + " at gamma_t " + std::to_string(rec.grid[i]);
            }
        }
    report(8, ok, "every recovery is feasible and dominates the transpose channel",
           detail);
}

void criterion9() {
    std::mt19937 rng(2026);
    std::normal_distribution<double> gauss;
    double worst_postulate = 0;
    for (int tj : {5, 7, 9}) {
        std::vector<CMatrix> ops;
        for (int k = 0; k < 20; ++k) {
            CMatrix a(tj + 1, tj + 1);
            for (std::size_t i = 0; i <= std::size_t(tj); ++i)
                for (std::size_t j = 0; j <= std::size_t(tj); ++j)
                    a(i, j) = cdouble(gauss(rng), gauss(rng));
            a.hermitize();
            ops.push_back(std::move(a));
        }
        worst_postulate =
            std::max(worst_postulate, verify_postulates(SpinJ(tj), ops, 7).worst());
    }

    auto group = enumerate_group(GroupLabel::TwoO);
    auto code = extract_codewords(SpinJ(5), group, "rho5");
    auto g0 = wigner_function(outer(code.ket0, code.ket0), SpinJ(5));
    auto g1 = wigner_function(outer(code.ket1, code.ket1), SpinJ(5));
    double worst_flip = 0;
    for (std::size_t t = 0; t < g0.n_theta; ++t)
        for (std::size_t p = 0; p < g0.n_phi; ++p)
            worst_flip = std::max(
                worst_flip, std::abs(g1.at(t, p) - g0.at(g0.n_theta - 1 - t,
                                                         (g0.n_phi - p) % g0.n_phi)));

    // proper octahedral rotations: one per +-pair of group elements
    CMatrix pc = code.codespace_projector();
    CGCache cache(SpinJ(5));
    double worst_oct = 0;
    std::vector<GroupElement> seen;
    for (const auto& g : group.elements) {
        bool dup = false;
        for (const auto& h : seen) dup = dup || g.approx_equal(-h);
        if (dup) continue;
        seen.push_back(g);
        auto r = g.rotation_matrix();
        for (std::size_t t = 0; t < g0.n_theta; ++t)
            for (std::size_t p = 0; p < g0.n_phi; p += 3) {
                double th = g0.thetas[t], ph = g0.phis[p];
                std::array<double, 3> n{std::sin(th) * std::cos(ph),
                                        std::sin(th) * std::sin(ph), std::cos(th)};
                std::array<double, 3> rn{};
                for (int row = 0; row < 3; ++row)
                    for (int col = 0; col < 3; ++col) rn[row] += r[row][col] * n[col];
                double w1 = (wigner_kernel(SpinJ(5), n, cache) * pc).trace().real();
                double w2 = (wigner_kernel(SpinJ(5), rn, cache) * pc).trace().real();
                worst_oct = std::max(worst_oct, std::abs(w1 - w2));
            }
    }
    bool ok = worst_postulate < 1e-8 && worst_flip < 1e-9 && worst_oct < 1e-9 &&
              seen.size() == 24;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "postulates %.2e, flip %.2e, octahedral %.2e", worst_postulate,
                  worst_flip, worst_oct);
    report(9, ok, "Wigner postulates and code-state symmetries", detail);
}

void criterion10() {
    double worst = 0;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int tj = 1; tj <= 9; ++tj) {
        SpinJ spin(tj);
        auto a = lindblad_channel(spin, 0.02);
        auto b = lindblad_channel(spin, 0.05);
        auto c = lindblad_channel(spin, 0.07);
        worst = std::max(worst, max_abs_diff(a.compose_after(b).superoperator(),
                                             c.superoperator()));

        GroupElement g{u(rng), u(rng), u(rng), u(rng)};
        double n = g.norm();
        g = {g.w / n, g.x / n, g.y / n, g.z / n};
        CMatrix d = represent(g, spin);
        CMatrix conj_super = kron(d.conjugate(), d);
        CMatrix s = b.superoperator();
        worst = std::max(worst, max_abs_diff(s * conj_super, conj_super * s));
    }
    report(10, worst < 1e-8, "channel semigroup and rotational covariance",
           "worst deviation " + std::to_string(worst));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
