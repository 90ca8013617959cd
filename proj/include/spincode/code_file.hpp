#pragma once

#include <iosfwd>

#include "spincode/code_builder.hpp"

namespace spincode {

/// JSON code-file layout:
/// {format_version: 1, spin: "13/2", group: "2O", irrep: "rho5", phi?: 0.0,
///  ket0: [[re,im],...], ket1: [[re,im],...],
///  phase_convention: "highest-m-real-positive"}
std::string code_to_json(const SpinCode& code);
SpinCode code_from_json(const std::string& text);

void save_code(const SpinCode& code, const std::string& path);
SpinCode load_code(const std::string& path);

}  // namespace spincode
