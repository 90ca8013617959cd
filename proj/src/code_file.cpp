#include "spincode/code_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spincode {

namespace {

using nlohmann::json;

json amplitudes_to_json(const std::vector<cdouble>& v) {
    json arr = json::array();
    for (const auto& a : v) arr.push_back({a.real(), a.imag()});
    return arr;
}

std::vector<cdouble> amplitudes_from_json(const json& arr) {
    std::vector<cdouble> v;
    v.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("code file: amplitude must be [re, im]");
        v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return v;
}

}  // namespace

std::string code_to_json(const SpinCode& code) {
    json doc;
    doc["format_version"] = 1;
    doc["spin"] = code.spin.to_string();
    doc["group"] = group_label_name(code.group);
    doc["irrep"] = code.irrep_label;
    if (code.phi) doc["phi"] = *code.phi;
    doc["ket0"] = amplitudes_to_json(code.ket0);
    doc["ket1"] = amplitudes_to_json(code.ket1);
    doc["phase_convention"] = "highest-m-real-positive";
    return doc.dump(2);
}

SpinCode code_from_json(const std::string& text) {
    json doc = json::parse(text);
    if (doc.value("format_version", 0) != 1)
        throw std::invalid_argument("code file: unsupported format_version");

    SpinCode code{SpinJ::parse(doc.at("spin").get<std::string>()),
                  parse_group_label(doc.at("group").get<std::string>()),
                  doc.at("irrep").get<std::string>(),
                  amplitudes_from_json(doc.at("ket0")),
                  amplitudes_from_json(doc.at("ket1")),
                  std::nullopt};
    if (doc.contains("phi")) code.phi = doc["phi"].get<double>();

    const std::size_t d = code.spin.dim();
    if (code.ket0.size() != d || code.ket1.size() != d)
        throw std::invalid_argument("code file: amplitude count does not match spin");
    for (const auto* ket : {&code.ket0, &code.ket1})
        if (std::abs(norm2(*ket) - 1.0) > 1e-10)
            throw std::invalid_argument("code file: codeword not normalized");
    if (std::abs(inner(code.ket0, code.ket1)) > 1e-10)
        throw std::invalid_argument("code file: codewords not orthogonal");
    return code;
}

void save_code(const SpinCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_code: cannot open " + path);
    out << code_to_json(code) << '\n';
}

SpinCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_code: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return code_from_json(buf.str());
}

}  // namespace spincode
