#include "whqram/graycode.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace whqram {

namespace {

std::vector<int> diff_bits(std::uint32_t a, std::uint32_t b, int n) {
  std::vector<int> out;
  std::uint32_t x = a ^ b;
  for (int i = 1; i <= n; ++i)
    if (x >> (n - i) & 1) out.push_back(i);  // bit 1 = leftmost
  return out;
}

void fill_change_sets(GrayCode& g) {
  std::size_t m = g.words.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    g.change_sets.push_back(diff_bits(g.words[i], g.words[i + 1], g.n));
  if (g.periodic && m > 1) g.change_sets.push_back(diff_bits(g.words[m - 1], g.words[0], g.n));
}

// Suffix-reflected full code: the new bit is appended on the right, which puts
// the second word at delta_1 and the last at delta_n as the bounded-weight
// recursion requires. The standard (prefix-reflected) code mirrors these.
std::vector<std::uint32_t> suffix_reflected(int n) {
  std::vector<std::uint32_t> code{0};
  for (int m = 0; m < n; ++m) {
    std::vector<std::uint32_t> next;
    next.reserve(code.size() * 2);
    for (std::uint32_t w : code) next.push_back(w << 1);
    for (auto it = code.rbegin(); it != code.rend(); ++it) next.push_back((*it << 1) | 1);
    code = std::move(next);
  }
  return code;
}

std::vector<std::uint32_t> bounded_words(int n, int k) {
  if (k == 0) return {0};
  if (k >= n) return suffix_reflected(n);
  std::vector<std::uint32_t> low = bounded_words(n - 1, k);      // suffix 0
  std::vector<std::uint32_t> high = bounded_words(n - 1, k - 1);  // suffix 1, reversed
  std::vector<std::uint32_t> out;
  out.reserve(low.size() + high.size());
  for (std::uint32_t w : low) out.push_back(w << 1);
  for (auto it = high.rbegin(); it != high.rend(); ++it) out.push_back((*it << 1) | 1);
  return out;
}

}  // namespace

GrayCode standard_gray(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("gray code width out of range");
  GrayCode g;
  g.n = n;
  g.periodic = true;
  g.words.reserve(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < (std::uint32_t{1} << n); ++i) g.words.push_back(i ^ (i >> 1));
  fill_change_sets(g);
  return g;
}

std::vector<std::uint32_t> support_gray_order(const std::vector<std::uint32_t>& support, int n) {
  if (support.empty()) throw std::invalid_argument("empty support");
  std::unordered_set<std::uint32_t> in(support.begin(), support.end());
  std::vector<std::uint32_t> out;
  out.reserve(support.size());
  for (std::uint32_t i = 0; i < (std::uint32_t{1} << n); ++i) {
    std::uint32_t w = i ^ (i >> 1);
    if (in.count(w)) out.push_back(w);
  }
  return out;
}

GrayCode bounded_gray(int n, int k) {
  if (n < 1 || n > 30) throw std::invalid_argument("gray code width out of range");
  if (k < 1 || k > n) throw std::invalid_argument("weight bound k outside [1, n]");
  GrayCode g;
  g.n = n;
  g.periodic = false;
  g.words = bounded_words(n, k);
  fill_change_sets(g);
  return g;
}

bigint b_nk(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("bad (n, k)");
  bigint sum = 0, c = 1;
  for (int i = 0; i <= k; ++i) {
    sum += c;
    c = c * (n - i) / (i + 1);
  }
  return sum;
}

double binary_entropy(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("entropy argument outside (0,1)");
  return -alpha * std::log2(alpha) - (1.0 - alpha) * std::log2(1.0 - alpha);
}

}  // namespace whqram
