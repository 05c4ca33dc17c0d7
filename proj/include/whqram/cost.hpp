#pragma once

#include <boost/rational.hpp>
#include <string>

#include "whqram/dyadic.hpp"

namespace whqram {

using rational = boost::rational<bigint>;

// Parses a decimal/fraction literal ("0.03", "3/100", "1e-3") exactly.
rational parse_rational(const std::string& text);

enum class OracleDesign : int;  // from oracles.hpp

// Inputs to the Clifford+T cost model. The big-O expressions are evaluated
// with explicit constants (all defaulting to 1) and reported in model units.
struct CostInputs {
  int n = 0;
  int d = 0;
  long long w_f = 0;
  int l = 0;  // oracle 1 only
  rational epsilon{1, 100};
  double depth_constant = 1.0;      // scales every depth expression
  double synthesis_constant = 1.0;  // scales log2(1/eps) per rotation
  double qft_constant = 1.0;        // scales the QFT Clifford+T count
};

struct CostReport {
  rational epsilon_0;    // epsilon / (3 d W_f)
  rational epsilon_qft;  // epsilon / 3
  double rz_synthesis_depth_per_gate = 0.0;  // log2(1 / epsilon_0)
  double qft_t_count = 0.0;                  // d log2(d / epsilon_qft)
  double depth_before = 0.0;                 // design expression, exact gate set
  double depth_after = 0.0;                  // after Clifford+T approximation
  long long billed_rotations = 0;            // d * W_f
  bool l_equals_n_special_case = false;      // oracle 1 with l = n
  double special_case_depth = 0.0;           // n + log2(d / epsilon)

  std::string to_json() const;
};

// epsilon_0 = eps / (3 d W_f), epsilon_qft = eps / 3; exact.
std::pair<rational, rational> epsilon_budget(const CostInputs& in);

CostReport clifford_t_depth(const CostInputs& in, OracleDesign design);

// Error target for quadratically many oracle calls: 2^{-(1/2 + beta) n}.
double grover_epsilon(int n, double beta);

}  // namespace whqram
