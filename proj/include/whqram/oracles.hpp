#pragma once

#include <cstdint>
#include <optional>

#include "whqram/circuit.hpp"
#include "whqram/metrics.hpp"
#include "whqram/spectrum.hpp"

namespace whqram {

enum class OracleDesign { O1 = 1, O2 = 2, O3 = 3, O4 = 4 };

struct OracleRequest {
  Spectrum spectrum;
  OracleDesign design = OracleDesign::O3;
  int l = 0;                 // O1 only, 0 <= l <= n
  bool projective = false;   // drop the opening/closing phase corrections
  bool assume_y_zero = false;  // replace the opening QFT by H^(x)d, drop step 1
  // Optional small-angle refinement: spectrum rotations with |angle| below the
  // threshold (radians) are omitted from the circuit.
  std::optional<double> drop_angles_below;
};

struct OracleCircuit {
  Circuit circuit;
  ResourceReport report;
  int n = 0;
  int d = 0;
  long long dropped_rotations = 0;  // from the small-angle refinement
};

// The addition engine shared by all four designs writes Fourier-basis phases
// exp(2*pi*i * f(x) (y' - c_d) / 2^d) via one rotation batch per support
// element, with c_d = (2^d - 1)/2. Rotations use the symmetric convention
// RZ(t) = diag(e^{-it/2}, e^{+it/2}); under it the batch constants cancel and
// the opening/closing corrections cancel each other exactly.
//
// On basis input |x>|y> every design produces Dirichlet-kernel amplitudes
// Phi_d(y + f(x) - y'') on the value register. For integer tables that is the
// target |y + f(x) mod 2^d> with sign (-1)^floor((y + f(x)) / 2^d); the sign
// is +1 whenever the addition does not wrap (in particular for every y = 0
// input). No choice of the fixed correction angles removes it: the engine's
// centered phases force half-integer characters on the corrections, and those
// cannot commute exactly through the modular wrap.
OracleCircuit build_oracle(const OracleRequest& req);

OracleCircuit build_oracle1(const OracleRequest& req);
OracleCircuit build_oracle2(const OracleRequest& req);
OracleCircuit build_oracle3(const OracleRequest& req);
OracleCircuit build_oracle4(const OracleRequest& req);

bool oracle4_eligible(const Spectrum& spec);

}  // namespace whqram
