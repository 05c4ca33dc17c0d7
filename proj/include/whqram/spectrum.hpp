#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "whqram/dyadic.hpp"

namespace whqram {

enum class TableMode { binary, real };

// Classical data f: F_2^n -> values, indexed MSB-first: idx(x) = sum_a x_a 2^(n-a).
// Binary mode restricts values to integers in [0, 2^d - 1]; real mode allows any
// dyadic rational.
struct FunctionTable {
  int n = 0;
  int d = 0;
  TableMode mode = TableMode::binary;
  std::vector<Dyadic> values;  // length 2^n

  void validate() const;  // throws std::invalid_argument on any broken invariant

  static FunctionTable binary(int n, int d, std::vector<long long> vals);
  static FunctionTable real(int n, int d, std::vector<Dyadic> vals);
};

// Walsh-Hadamard spectrum wh(f)(z) = sum_x (-1)^{x.z} f(x), same index convention.
struct Spectrum {
  int n = 0;
  int d = 0;
  TableMode mode = TableMode::binary;
  std::vector<Dyadic> coefficients;   // length 2^n
  std::vector<std::uint32_t> support;  // ascending indices of nonzero coefficients

  std::size_t sparsity() const { return support.size(); }  // W_f
};

struct DegreeProfile {
  std::set<int> degrees;             // Hamming weights occurring in the support
  std::optional<int> min_low_k;      // least k < n/2 splitting the support into
                                     // weights <= k and >= n-k; empty if none
};

Spectrum fwht(const FunctionTable& table);
FunctionTable ifwht(const Spectrum& spec);
DegreeProfile degree_profile(const Spectrum& spec);

// Output of the approximate-boolean truncation pipeline.
struct TruncationResult {
  FunctionTable g;      // real mode, d_0 fractional bits, fits 2 + d_0 signed bits
  int d0 = 0;           // fractional bit count, ceil(log2(12 * W))
  std::size_t wg = 0;   // sparsity of the truncated spectrum
};

// Takes a real-mode table approximating (-1)^f within 1/4 and produces the
// fixed-point table g whose sign bit recovers f. Truncation acts on the
// normalized coefficients wh(f~)(z) / 2^n; that is the only scaling under
// which g is exactly representable on 2 + d_0 bits.
TruncationResult truncate_approximation(const FunctionTable& approx);

// Sign bit of a truncated value in the two's-complement reading.
inline bool sign_bit(const Dyadic& v) { return v.is_negative(); }

}  // namespace whqram
