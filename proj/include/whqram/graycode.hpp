#pragma once

#include <cstdint>
#include <vector>

#include "whqram/dyadic.hpp"

namespace whqram {

// Ordered codeword sequence over n-bit words (MSB-first integers) together
// with the per-step change sets iota(k): 1-based bit indices (bit 1 = leftmost)
// differing between word k and word k+1, wrapping to word 1 when periodic.
struct GrayCode {
  int n = 0;
  bool periodic = false;
  std::vector<std::uint32_t> words;
  std::vector<std::vector<int>> change_sets;
};

// Binary reflected Gray code starting at 0_n; new bit prepended (word i = i ^ (i >> 1)).
GrayCode standard_gray(int n);

// Support elements ordered by first appearance in standard_gray(n).
std::vector<std::uint32_t> support_gray_order(const std::vector<std::uint32_t>& support, int n);

// Bounded Hamming weight code: traverses exactly the weight-<=k words with
// consecutive Hamming distance <= 2, first word 0_n, second delta_1, last delta_n.
GrayCode bounded_gray(int n, int k);

// B_{n,k} = sum_{i<=k} C(n,i).
bigint b_nk(int n, int k);

// Binary entropy H2(alpha) for alpha in (0,1).
double binary_entropy(double alpha);

}  // namespace whqram
