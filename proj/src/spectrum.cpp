#include "whqram/spectrum.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace whqram {

namespace {

void check_shape(int n, int d, std::size_t len) {
  if (n < 1 || n > 30) throw std::invalid_argument("n out of range");
  if (d < 1 || d > 62) throw std::invalid_argument("d out of range");
  if (len != (std::size_t{1} << n)) throw std::invalid_argument("values length != 2^n");
}

// In-place butterfly; exact on dyadics.
void butterfly(std::vector<Dyadic>& a) {
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        Dyadic x = a[j], y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

}  // namespace

void FunctionTable::validate() const {
  check_shape(n, d, values.size());
  if (mode == TableMode::binary) {
    bigint hi = (bigint(1) << d) - 1;
    for (const auto& v : values) {
      if (!v.is_integer()) throw std::invalid_argument("binary table value not an integer");
      if (v.num() < 0 || v.num() > hi)
        throw std::invalid_argument("binary table value outside [0, 2^d - 1]");
    }
  }
}

FunctionTable FunctionTable::binary(int n, int d, std::vector<long long> vals) {
  FunctionTable t;
  t.n = n;
  t.d = d;
  t.mode = TableMode::binary;
  t.values.reserve(vals.size());
  for (long long v : vals) t.values.emplace_back(v);
  t.validate();
  return t;
}

FunctionTable FunctionTable::real(int n, int d, std::vector<Dyadic> vals) {
  FunctionTable t;
  t.n = n;
  t.d = d;
  t.mode = TableMode::real;
  t.values = std::move(vals);
  t.validate();
  return t;
}

Spectrum fwht(const FunctionTable& table) {
  table.validate();
  Spectrum s;
  s.n = table.n;
  s.d = table.d;
  s.mode = table.mode;
  s.coefficients = table.values;
  butterfly(s.coefficients);
  for (std::uint32_t z = 0; z < s.coefficients.size(); ++z)
    if (!s.coefficients[z].is_zero()) s.support.push_back(z);
  return s;
}

FunctionTable ifwht(const Spectrum& spec) {
  check_shape(spec.n, spec.d, spec.coefficients.size());
  FunctionTable t;
  t.n = spec.n;
  t.d = spec.d;
  t.mode = spec.mode;
  t.values = spec.coefficients;
  butterfly(t.values);
  for (auto& v : t.values) v = v.div_pow2(spec.n);
  return t;
}

DegreeProfile degree_profile(const Spectrum& spec) {
  DegreeProfile p;
  for (std::uint32_t z : spec.support) p.degrees.insert(std::popcount(z));
  // Least k with no support weight strictly inside (k, n-k). k = n/2 is excluded:
  // a middle-weight element would land in both halves of the split.
  for (int k = 0; 2 * k < spec.n; ++k) {
    bool blocked = false;
    for (int w : p.degrees)
      if (w > k && w < spec.n - k) blocked = true;
    if (!blocked) {
      p.min_low_k = k;
      break;
    }
  }
  return p;
}

TruncationResult truncate_approximation(const FunctionTable& approx) {
  approx.validate();
  if (approx.mode != TableMode::real)
    throw std::invalid_argument("truncation expects a real-mode table");
  Dyadic bound(5, 2);  // 5/4
  for (const auto& v : approx.values)
    if (v > bound || v < -bound)
      throw std::invalid_argument("approximation value outside [-5/4, 5/4]");

  Spectrum spec = fwht(approx);
  std::size_t w = spec.sparsity();
  if (w == 0) throw std::invalid_argument("zero approximation has no sign structure");
  int d0 = static_cast<int>(std::ceil(std::log2(12.0 * static_cast<double>(w))));
  while ((bigint(1) << d0) < 12 * bigint(static_cast<long long>(w))) ++d0;  // guard fp edge

  // Truncate the normalized coefficients wh/2^n to d0 fractional bits, then
  // resynthesize g(x) = sum_z t(z) (-1)^{x.z} (no further 1/2^n factor).
  Spectrum trunc = spec;
  trunc.support.clear();
  for (std::uint32_t z = 0; z < trunc.coefficients.size(); ++z) {
    trunc.coefficients[z] = trunc.coefficients[z].div_pow2(spec.n).truncate_fraction(d0);
    if (!trunc.coefficients[z].is_zero()) trunc.support.push_back(z);
  }

  TruncationResult r;
  r.d0 = d0;
  r.wg = trunc.support.size();
  r.g = approx;
  for (std::size_t x = 0; x < r.g.values.size(); ++x) {
    Dyadic acc(0);
    for (std::uint32_t z : trunc.support) {
      bool neg = std::popcount(static_cast<std::uint32_t>(x) & z) & 1;
      acc = neg ? acc - trunc.coefficients[z] : acc + trunc.coefficients[z];
    }
    r.g.values[x] = acc;
  }
  // Range check: fixed point on d_f = 2 + d0 bits covers [-2, 2).
  bigint lim = bigint(1) << (d0 + 1);
  for (const auto& v : r.g.values) {
    bigint scaled = v.num() << (d0 - v.exp2());
    if (scaled < -lim || scaled >= lim)
      throw std::out_of_range("truncated function exceeds the 2 + d_0 bit range");
  }
  return r;
}

}  // namespace whqram
