#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincode/code_file.hpp"
#include "spincode/gates.hpp"
#include "spincode/linalg.hpp"
#include "spincode/noise.hpp"
#include "spincode/recovery.hpp"
#include "spincode/wigner.hpp"

using namespace spincode;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SpinCode build_code(const std::string& group_name, const std::string& spin_text,
                    const std::string& irrep, double phi, bool phi_given) {
    GroupLabel label = parse_group_label(group_name);
    SpinJ spin = SpinJ::parse(spin_text);
    if (label == GroupLabel::TwoI) {
        if (spin.twice_j != 7)
            throw std::invalid_argument("2I codeword construction is available for spin 7/2");
        return icosahedral_code_7half();
    }
    auto group = enumerate_group(label);
    int mult = multiplicity(spin, group, irrep);
    if (mult >= 2 || phi_given)
        return extract_codewords_zero_jz(spin, group, irrep, phi);
    return extract_codewords(spin, group, irrep);
}

int run_multiplicities(const std::string& group_name, std::size_t max_dim,
                       const std::string& format) {
    auto group = enumerate_group(parse_group_label(group_name));
    auto table = multiplicity_table(group, max_dim);
    if (format == "json") {
        json doc;
        doc["group"] = group_name;
        doc["irreps"] = table.irrep_labels;
        doc["period"] = table.period;
        json rows = json::array();
        for (std::size_t d = 0; d < table.dims.size(); ++d)
            rows.push_back({{"dim", table.dims[d]}, {"multiplicities", table.mults[d]}});
        doc["rows"] = rows;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "dim";
        for (const auto& ir : table.irrep_labels) std::cout << ',' << ir;
        std::cout << '\n';
        for (std::size_t d = 0; d < table.dims.size(); ++d) {
            std::cout << table.dims[d];
            for (int m : table.mults[d]) std::cout << ',' << m;
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int run_codewords(const std::string& group_name, const std::string& spin_text,
                  const std::string& irrep, double phi, bool phi_given,
                  const std::string& out_path) {
    SpinCode code = build_code(group_name, spin_text, irrep, phi, phi_given);
    std::string text = code_to_json(code);
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        save_code(code, out_path);
        std::cout << "wrote " << out_path << '\n';
    }
    return kExitOk;
}

int run_kl_check(const std::string& code_path) {
    SpinCode code = load_code(code_path);
    auto ops = angular_momentum_ops(code.spin);
    std::vector<CMatrix> errors{CMatrix::identity(code.spin.dim()), ops.jx, ops.jy,
                                ops.jz};
    auto kl = kl_matrix(code, errors);
    auto rc = reduced_conditions(code);
    json doc;
    doc["violation"] = kl.violation;
    doc["jz_expectation"] = rc.jz_expectation;
    doc["exact_correction"] = rc.exact();
    doc["perfectness_rank"] = error_subspace_rank(code);
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

json gate_report_json(const GateReport& rep) {
    return {{"gate", rep.name},
            {"distance", rep.distance},
            {"leakage", rep.leakage},
            {"ok", rep.ok()}};
}

int run_gates_verify(const std::string& code_path, const std::string& code2_path) {
    SpinCode code = load_code(code_path);
    json reports = json::array();
    reports.push_back(gate_report_json(t_gate(code).second));
    SpinCode partner = code2_path.empty() ? code : load_code(code2_path);
    if (!code2_path.empty())
        reports.push_back(gate_report_json(t_gate(partner).second));
    reports.push_back(gate_report_json(cz_gate(code, partner).second));
    auto supp = measurement_support_check(code);
    json doc;
    doc["gates"] = reports;
    doc["measurement_disjoint"] = {{"z", supp.disjoint_z},
                                   {"x", supp.disjoint_x},
                                   {"y", supp.disjoint_y}};
    std::cout << doc.dump(2) << '\n';
    bool all_ok = true;
    for (const auto& r : doc["gates"]) all_ok = all_ok && r["ok"].get<bool>();
    return all_ok ? kExitOk : kExitNoConvergence;
}

int run_fidelity_sweep(const std::string& code_path, double lo, double hi,
                       std::size_t points, bool use_log_grid,
                       const std::string& method_name, const std::string& out_path,
                       unsigned jobs) {
    SpinCode code = load_code(code_path);
    RecoveryMethod method =
        (method_name == "transpose") ? RecoveryMethod::Transpose : RecoveryMethod::SDP;

    std::vector<double> grid;
    if (points == 1 || hi <= lo) {
        grid.push_back(lo);
    } else if (use_log_grid) {
        grid = log_grid(lo, hi, points);
    } else {
        for (std::size_t i = 0; i < points; ++i)
            grid.push_back(lo + (hi - lo) * double(i) / double(points - 1));
    }

    std::vector<SweepPoint> curve(grid.size());
    if (jobs <= 1) {
        curve = fidelity_sweep(code, grid, method);
    } else {
        std::vector<std::thread> pool;
        std::size_t stride = jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < grid.size(); i += stride)
                    curve[i] = fidelity_sweep(code, {grid[i]}, method)[0];
            });
        }
        for (auto& th : pool) th.join();
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        out = &file;
    }
    *out << "gamma_t,fidelity,infidelity,method,iterations,residual\n";
    bool all_converged = true;
    for (const auto& pt : curve) {
        all_converged = all_converged && pt.converged;
        *out << fmt17(pt.gamma_t) << ',' << fmt17(pt.fidelity) << ','
             << fmt17(1.0 - pt.fidelity) << ','
             << (method == RecoveryMethod::Transpose ? "transpose" : "sdp") << ','
             << pt.iterations << ',' << fmt17(pt.residual) << '\n';
    }
    return all_converged ? kExitOk : kExitNoConvergence;
}

int run_wigner_grid(const std::string& code_path, const std::string& state,
                    std::size_t n_theta, std::size_t n_phi,
                    const std::string& out_path) {
    SpinCode code = load_code(code_path);
    CMatrix op;
    if (state == "ket0") {
        op = outer(code.ket0, code.ket0);
    } else if (state == "ket1") {
        op = outer(code.ket1, code.ket1);
    } else if (state == "projector") {
        op = code.codespace_projector();
    } else {
        throw std::invalid_argument("state must be ket0, ket1, or projector");
    }
    WignerGrid grid = wigner_function(op, code.spin, n_theta, n_phi);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        out = &file;
    }
    *out << "theta,phi,value\n";
    for (std::size_t t = 0; t < grid.n_theta; ++t)
        for (std::size_t p = 0; p < grid.n_phi; ++p)
            *out << fmt17(grid.thetas[t]) << ',' << fmt17(grid.phis[p]) << ','
                 << fmt17(grid.at(t, p)) << '\n';
    if (!out_path.empty()) {
        json meta;
        meta["state"] = state;
        meta["spin"] = code.spin.to_string();
        meta["n_theta"] = grid.n_theta;
        meta["n_phi"] = grid.n_phi;
        std::cout << meta.dump(2) << '\n';
    }
    return kExitOk;
}

int run_selftest() {
    auto check = [](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
        if (!ok) throw std::runtime_error("selftest failed: " + what);
    };

    for (auto [label, order] : {std::pair{GroupLabel::TwoT, 24ul},
                                {GroupLabel::TwoO, 48ul},
                                {GroupLabel::TwoI, 120ul}}) {
        auto g = enumerate_group(label);
        check(g.order() == order, "group order " + group_label_name(label));
    }

    auto group = enumerate_group(GroupLabel::TwoO);
    auto code = extract_codewords(SpinJ(5), group, "rho5");
    check(std::abs(norm2(code.ket0) - 1.0) < 1e-12, "codeword normalization");
    auto rc = reduced_conditions(code);
    check(std::abs(std::abs(rc.jz_expectation) - 5.0 / 6.0) < 1e-12,
          "spin-5/2 Jz expectation 5/6");

    auto code13 = extract_codewords_zero_jz(SpinJ(13), group, "rho5", 0.0);
    auto ops13 = angular_momentum_ops(code13.spin);
    std::vector<CMatrix> errors{CMatrix::identity(14), ops13.jx, ops13.jy, ops13.jz};
    check(kl_matrix(code13, errors).violation < 1e-10, "spin-13/2 KL violation");

    check(error_subspace_rank(icosahedral_code_7half()) == 8, "2I perfectness rank");
    check(t_gate(code).second.ok(), "T gate on spin-5/2 code");

    auto rep = verify_postulates(SpinJ(5), {CMatrix::identity(6)}, 1);
    check(rep.worst() < 1e-8, "Wigner postulates on the identity");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-qubit code toolkit"};
    app.require_subcommand(1);

    std::string group_name = "2O", spin_text = "5/2", irrep = "rho5";
    std::string code_path, code2_path, out_path, format = "table", state = "ket0";
    std::string method = "sdp";
    std::size_t max_dim = 48, points = 25, n_theta = 0, n_phi = 0;
    double phi = 0.0, gt_min = 1e-4, gt_max = 1e-1;
    bool use_log_grid = false;
    unsigned jobs = 1;

    auto* mult_cmd = app.add_subcommand("multiplicities", "branching-rule table");
    mult_cmd->add_option("--group", group_name);
    mult_cmd->add_option("--max-dim", max_dim);
    mult_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* code_cmd = app.add_subcommand("codewords", "construct a code");
    code_cmd->add_option("--group", group_name);
    code_cmd->add_option("--spin", spin_text);
    code_cmd->add_option("--irrep", irrep);
    auto* phi_opt = code_cmd->add_option("--phi", phi, "mixing phase (radians)");
    code_cmd->add_option("--out", out_path);

    auto* kl_cmd = app.add_subcommand("kl-check", "error-correction conditions");
    kl_cmd->add_option("--code", code_path)->required();

    auto* gates_cmd = app.add_subcommand("gates-verify", "gate distance report");
    gates_cmd->add_option("--code", code_path)->required();
    gates_cmd->add_option("--code2", code2_path);

    auto* sweep_cmd = app.add_subcommand("fidelity-sweep", "recovery fidelity curve");
    sweep_cmd->add_option("--code", code_path)->required();
    sweep_cmd->add_option("--gamma-t-min", gt_min);
    sweep_cmd->add_option("--gamma-t-max", gt_max);
    sweep_cmd->add_option("--points", points);
    sweep_cmd->add_flag("--log-grid", use_log_grid);
    sweep_cmd->add_option("--method", method)->check(CLI::IsMember({"sdp", "transpose"}));
    sweep_cmd->add_option("--out", out_path);
    sweep_cmd->add_option("--jobs", jobs);

    auto* wigner_cmd = app.add_subcommand("wigner-grid", "spherical Wigner function");
    wigner_cmd->add_option("--code", code_path)->required();
    wigner_cmd->add_option("--state", state)
        ->check(CLI::IsMember({"ket0", "ket1", "projector"}));
    wigner_cmd->add_option("--n-theta", n_theta);
    wigner_cmd->add_option("--n-phi", n_phi);
    wigner_cmd->add_option("--out", out_path);

    app.add_subcommand("selftest", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (mult_cmd->parsed()) return run_multiplicities(group_name, max_dim, format);
        if (code_cmd->parsed())
            return run_codewords(group_name, spin_text, irrep, phi,
                                 phi_opt->count() > 0, out_path);
        if (kl_cmd->parsed()) return run_kl_check(code_path);
        if (gates_cmd->parsed()) return run_gates_verify(code_path, code2_path);
        if (sweep_cmd->parsed())
            return run_fidelity_sweep(code_path, gt_min, gt_max, points, use_log_grid,
                                      method, out_path, jobs);
        if (wigner_cmd->parsed())
            return run_wigner_grid(code_path, state, n_theta, n_phi, out_path);
        return run_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}
