#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "spincode/code_file.hpp"

using namespace spincode;

namespace {

bool same_amplitudes(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;  // exact: round trip must be bitwise
    return true;
}

}  // namespace

TEST_CASE("json round trip is exact") {
    auto group = enumerate_group(GroupLabel::TwoO);
    for (auto make : {+[](const FiniteSubgroup& g) {
                          return extract_codewords(SpinJ(5), g, "rho5");
                      },
                      +[](const FiniteSubgroup& g) {
                          return extract_codewords_zero_jz(SpinJ(13), g, "rho5", 0.75);
                      }}) {
        SpinCode code = make(group);
        SpinCode back = code_from_json(code_to_json(code));
        CHECK(back.spin.twice_j == code.spin.twice_j);
        CHECK(back.group == code.group);
        CHECK(back.irrep_label == code.irrep_label);
        CHECK(back.phi == code.phi);
        CHECK(same_amplitudes(back.ket0, code.ket0));
        CHECK(same_amplitudes(back.ket1, code.ket1));
    }
}

TEST_CASE("file round trip") {
    auto code = icosahedral_code_7half();
    const std::string path = "test_code_file_tmp.json";
    save_code(code, path);
    SpinCode back = load_code(path);
    std::remove(path.c_str());
    CHECK(same_amplitudes(back.ket0, code.ket0));
    CHECK(same_amplitudes(back.ket1, code.ket1));
    CHECK(!back.phi.has_value());
}

TEST_CASE("validation rejects malformed input") {
    auto code = icosahedral_code_7half();
    std::string good = code_to_json(code);

    CHECK_THROWS(code_from_json("{}"));
    CHECK_THROWS(code_from_json("not json"));

    // unnormalized amplitudes
    SpinCode bad = code;
    bad.ket0[0] *= 2.0;
    CHECK_THROWS(code_from_json(code_to_json(bad)));

    // non-orthogonal codewords
    SpinCode overlap = code;
    overlap.ket1 = overlap.ket0;
    CHECK_THROWS(code_from_json(code_to_json(overlap)));

    // amplitude count mismatched with the spin
    SpinCode wrong = code;
    wrong.ket0.push_back(0.0);
    wrong.ket1.push_back(0.0);
    CHECK_THROWS(code_from_json(code_to_json(wrong)));

    CHECK_THROWS(load_code("no_such_file_here.json"));
}

TEST_CASE("format version is enforced") {
    auto code = icosahedral_code_7half();
    std::string text = code_to_json(code);
    auto pos = text.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("\"format_version\": 1").size(), "\"format_version\": 2");
    CHECK_THROWS(code_from_json(text));
}
