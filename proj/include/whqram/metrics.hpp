#pragma once

#include <string>

#include "whqram/circuit.hpp"

namespace whqram {

// Resource metrics following the "on top of the QFT" convention: total_depth
// treats QFT blocks as zero-cost barriers on their operands, gate_count and
// connectivity ignore QFT internals, and the *_with_qft fields are recomputed
// on the textbook decomposition.
struct ResourceReport {
  long long total_depth = 0;
  long long total_depth_with_qft = 0;
  long long rz_depth = 0;  // scheduling depth of the spectrum rotations alone
  long long gate_count = 0;
  long long rz_count = 0;
  long long phase_correction_count = 0;
  long long connectivity = 0;           // max distinct CNOT partners per qubit
  long long connectivity_with_qft = 0;  // decomposed circuit, CNOT + CP + SWAP
  long long ancilla_count = 0;

  std::string to_json() const;  // {"schema": 1, ...}
};

ResourceReport depth_metrics(const Circuit& c);
long long connectivity(const Circuit& c);

}  // namespace whqram
