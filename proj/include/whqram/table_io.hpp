#pragma once

#include <cstdint>
#include <string>

#include "whqram/spectrum.hpp"

namespace whqram {

// Function-table file format:
//   {"n": int, "d": int, "mode": "binary"|"real", "values": [number|string ...]}
// String values may be integers, dyadic fractions "p/q" with q a power of two,
// or decimal literals with a power-of-two denominator ("0.25"). JSON numbers
// are converted exactly (every finite double is dyadic).
FunctionTable parse_table_json(const std::string& text);
std::string table_to_json(const FunctionTable& table);

// Deterministic random binary table: `nonzero` entries drawn uniformly from
// [1, 2^d), remaining entries zero. Reproducible across platforms for a fixed
// seed (no library distribution involved).
FunctionTable random_binary_table(int n, int d, int nonzero, std::uint64_t seed);

}  // namespace whqram
