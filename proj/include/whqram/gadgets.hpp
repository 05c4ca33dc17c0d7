#pragma once

#include <cstdint>
#include <vector>

#include "whqram/circuit.hpp"

namespace whqram {

// Parity-fan-out: XORs the parity of the control set onto every target,
// |x>|y_1..y_d> -> |x> (x) |y_j + parity>. Controls are gathered pairwise onto
// a root wire, the root is injected through a pair-cancel tree conjugation on
// the targets, and both trees are undone. Works for arbitrary target states.
//
// Measured bounds, asserted in tests: CNOT count <= 2(h + d) + PFO_COUNT_SLACK,
// scheduled depth <= 2*log2(1 + max(h, d)) + PFO_DEPTH_SLACK.
inline constexpr int PFO_COUNT_SLACK = 0;  // actual count is 2(h + d) - 3 for h >= 1
inline constexpr int PFO_DEPTH_SLACK = 3;  // actual depth is 2*max(ceil_log2 h, ceil_log2 d) + 1

struct PfoSpec {
  std::vector<int> controls;  // qubit positions where the mask is 1
  std::vector<int> targets;   // disjoint from controls
};

std::vector<Gate> build_pfo(const PfoSpec& spec, GateTag tag = GateTag::wiring);

// A_{S,d}: copies the value block onto |S|-1 clean ancilla blocks and XORs the
// parity x . z onto block z, for every z in S. blocks[i] is the d-qubit block
// of the i-th element of S (block 0 is the value register itself).
struct AsetSpec {
  std::vector<std::uint32_t> elements;       // S, enumeration fixes block order
  int n = 0;                                 // mask width; controls are qubits mask_base..
  int mask_base = 0;                         // qubit holding mask bit 1
  std::vector<std::vector<int>> blocks;      // elements.size() blocks of equal size d
};

std::vector<Gate> build_aset(const AsetSpec& spec);

// d-qubit Fourier blocks on the given wires (MSB-first), as single IR gates.
Gate qft_block(const std::vector<int>& qubits);
Gate qft_dag_block(const std::vector<int>& qubits);

// Draper-style constant adder |y> -> |y + k mod 2^d> built from a QFT pair and
// d phase rotations. The z-rotation realization of the middle phases carries a
// constant global phase exp(-i*pi*k*(1 - 2^-d)) relative to the bare adder;
// the permutation itself is exact.
Circuit build_qft_adder(long long k, int d);

}  // namespace whqram
