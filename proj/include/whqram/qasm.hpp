#pragma once

#include <string>

#include "whqram/circuit.hpp"

namespace whqram {

// OpenQASM 2.0 text over {h, x, cx, rz, cp, swap}. QFT blocks are emitted
// fully decomposed; angles print as exact pi-fraction expressions. Output is
// byte-deterministic for identical circuits.
std::string qasm_export(const Circuit& c);

}  // namespace whqram
