#pragma once

#include <string>
#include <string_view>

#include "barber/circuit.hpp"

namespace barber {

/// Parses the supported OpenQASM 2.0 subset: optional header and qelib include,
/// one `qreg`, one `creg` of the same width, gates from `GateKind` with literal
/// angles, `barrier q;` / `barrier q[i],...;` and a final `measure q -> c;`.
/// Angles may also be written with `pi` (e.g. `-pi/2`, `3*pi/4`).
/// Throws QasmError with line/column and the offending token.
Circuit parse_qasm(std::string_view text);

/// Emits the same subset; angles use round-trip precision.
std::string emit_qasm(const Circuit& c);

}  // namespace barber
