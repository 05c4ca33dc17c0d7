#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whqram/dyadic.hpp"

namespace whqram {

enum class GateKind { H, X, CNOT, RZ, CP, SWAP, QFT, QFT_DAG };

enum class GateTag { wiring, spectrum_rotation, phase_correction, fourier };

enum class QubitRole { input, value, ancilla };

// Exact angle pi * num / 2^exp2, kept in lowest terms (num odd or zero).
// Every rotation the designs emit is of this form; floats appear only when the
// simulator or exporter evaluates it.
class Angle {
 public:
  Angle() : num_(0), exp2_(0) {}
  Angle(bigint num, int exp2) : num_(std::move(num)), exp2_(exp2) { normalize(); }

  static Angle zero() { return Angle(); }
  // 2*pi * w / 2^k  ==  pi * w / 2^(k-1)
  static Angle two_pi_over_pow2(const bigint& w, int k) { return Angle(w, k - 1); }

  const bigint& num() const { return num_; }
  int exp2() const { return exp2_; }
  bool is_zero() const { return num_ == 0; }

  Angle operator-() const { return Angle(-num_, exp2_); }

  double radians() const;       // exact reduction mod 4*pi, then one multiply
  double half_radians() const;  // theta/2 with the same reduction

  // In radians, safe for magnitude comparisons (|theta| may exceed 2*pi).
  double magnitude() const;

  std::string qasm_expr() const;  // "0", "pi/4", "-3*pi/8", "7*pi"

 private:
  void normalize() {
    if (num_ == 0) {
      exp2_ = 0;
      return;
    }
    while (exp2_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp2_;
    }
    if (exp2_ < 0) {
      num_ <<= -exp2_;
      exp2_ = 0;
    }
  }

  bigint num_;
  int exp2_;
};

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;  // distinct, 0-based; CNOT/CP/SWAP: {a, b} = {control, target}
  Angle angle;              // RZ / CP only
  GateTag tag = GateTag::wiring;
};

// Ordered gate list over a fixed register: the first n qubits are inputs, the
// next d the value register, the remainder ancillas.
struct Circuit {
  int num_qubits = 0;
  std::vector<QubitRole> roles;
  std::vector<Gate> gates;

  int count_role(QubitRole r) const {
    int c = 0;
    for (auto q : roles)
      if (q == r) ++c;
    return c;
  }

  void add(Gate g);  // validates operands
  void append(const Circuit& other);

  static Circuit with_layout(int n, int d, int ancillas);
};

// Inverse circuit: gates reversed, RZ/CP angles negated, QFT <-> QFT_DAG.
Circuit inverse(const Circuit& c);

// Textbook decomposition of QFT / QFT_DAG blocks into H + CP ladder + SWAP
// reversal (MSB-first); other gates pass through unchanged.
Circuit decompose_qft_blocks(const Circuit& c);

}  // namespace whqram
