#include "whqram/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace whqram {

namespace {

inline std::uint64_t bit_mask(int num_qubits, int q) {
  return std::uint64_t{1} << (num_qubits - 1 - q);
}

cplx phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Dense single/two-qubit kernels ------------------------------------------

void dense_h(StateVector& s, int q) {
  const double inv = 1.0 / std::numbers::sqrt2;
  std::uint64_t m = bit_mask(s.num_qubits, q);
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
    if (i & m) continue;
    cplx a = s.amps[i], b = s.amps[i | m];
    s.amps[i] = (a + b) * inv;
    s.amps[i | m] = (a - b) * inv;
  }
}

void dense_x(StateVector& s, int q) {
  std::uint64_t m = bit_mask(s.num_qubits, q);
  for (std::uint64_t i = 0; i < s.amps.size(); ++i)
    if (!(i & m)) std::swap(s.amps[i], s.amps[i | m]);
}

void dense_rz(StateVector& s, int q, const Angle& a) {
  std::uint64_t m = bit_mask(s.num_qubits, q);
  cplx p0 = phase(-a.half_radians()), p1 = phase(a.half_radians());
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) s.amps[i] *= (i & m) ? p1 : p0;
}

void dense_cnot(StateVector& s, int c, int t) {
  std::uint64_t mc = bit_mask(s.num_qubits, c), mt = bit_mask(s.num_qubits, t);
  for (std::uint64_t i = 0; i < s.amps.size(); ++i)
    if ((i & mc) && !(i & mt)) std::swap(s.amps[i], s.amps[i | mt]);
}

void dense_cp(StateVector& s, int a, int b, const Angle& ang) {
  std::uint64_t ma = bit_mask(s.num_qubits, a), mb = bit_mask(s.num_qubits, b);
  cplx p = phase(ang.radians());
  for (std::uint64_t i = 0; i < s.amps.size(); ++i)
    if ((i & ma) && (i & mb)) s.amps[i] *= p;
}

void dense_swap(StateVector& s, int a, int b) {
  std::uint64_t ma = bit_mask(s.num_qubits, a), mb = bit_mask(s.num_qubits, b);
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
    bool ba = i & ma, bb = i & mb;
    if (ba && !bb) std::swap(s.amps[i], s.amps[(i ^ ma) | mb]);
  }
}

void dense_qft(StateVector& s, const std::vector<int>& qs, bool dagger) {
  int d = static_cast<int>(qs.size());
  std::uint64_t dim = std::uint64_t{1} << d;
  std::vector<std::uint64_t> masks(d);
  for (int i = 0; i < d; ++i) masks[i] = bit_mask(s.num_qubits, qs[i]);
  std::uint64_t block_bits = 0;
  for (auto m : masks) block_bits |= m;

  double sign = dagger ? -1.0 : 1.0;
  std::vector<cplx> twiddle(dim);
  for (std::uint64_t k = 0; k < dim; ++k)
    twiddle[k] = phase(sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim));
  double scale = 1.0 / std::sqrt(static_cast<double>(dim));

  std::vector<cplx> in(dim), out(dim);
  // Iterate over all assignments of the other qubits.
  std::uint64_t total = s.amps.size();
  for (std::uint64_t base = 0; base < total; ++base) {
    if (base & block_bits) continue;
    for (std::uint64_t y = 0; y < dim; ++y) {
      std::uint64_t idx = base;
      for (int i = 0; i < d; ++i)
        if (y >> (d - 1 - i) & 1) idx |= masks[i];
      in[y] = s.amps[idx];
    }
    for (std::uint64_t yp = 0; yp < dim; ++yp) {
      cplx acc = 0;
      for (std::uint64_t y = 0; y < dim; ++y) acc += in[y] * twiddle[(y * yp) % dim];
      out[yp] = acc * scale;
    }
    for (std::uint64_t yp = 0; yp < dim; ++yp) {
      std::uint64_t idx = base;
      for (int i = 0; i < d; ++i)
        if (yp >> (d - 1 - i) & 1) idx |= masks[i];
      s.amps[idx] = out[yp];
    }
  }
}

// Sparse kernels -----------------------------------------------------------

void sparse_normalize(SparseState& s) {
  std::sort(s.terms.begin(), s.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::uint64_t, cplx>> merged;
  merged.reserve(s.terms.size());
  for (const auto& t : s.terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const auto& t) { return std::abs(t.second) < 1e-14; });
  s.terms = std::move(merged);
}

}  // namespace

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::uint64_t{1} << num_qubits, cplx{});
  s.amps[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double n = 0;
  for (const auto& a : amps) n += std::norm(a);
  return std::sqrt(n);
}

StateVector apply(const Circuit& c, StateVector s, const ApplyOptions& opt) {
  if (c.num_qubits != s.num_qubits) throw std::invalid_argument("register size mismatch");
  if (c.num_qubits > opt.qubit_cap) throw std::invalid_argument("dense simulation cap exceeded");
  const Circuit* run = &c;
  Circuit flat;
  if (opt.decompose_qft) {
    flat = decompose_qft_blocks(c);
    run = &flat;
  }
  for (const auto& g : run->gates) {
    switch (g.kind) {
      case GateKind::H: dense_h(s, g.qubits[0]); break;
      case GateKind::X: dense_x(s, g.qubits[0]); break;
      case GateKind::RZ: dense_rz(s, g.qubits[0], g.angle); break;
      case GateKind::CNOT: dense_cnot(s, g.qubits[0], g.qubits[1]); break;
      case GateKind::CP: dense_cp(s, g.qubits[0], g.qubits[1], g.angle); break;
      case GateKind::SWAP: dense_swap(s, g.qubits[0], g.qubits[1]); break;
      case GateKind::QFT: dense_qft(s, g.qubits, false); break;
      case GateKind::QFT_DAG: dense_qft(s, g.qubits, true); break;
    }
  }
  return s;
}

SparseState SparseState::basis(int num_qubits, std::uint64_t index) {
  SparseState s;
  s.num_qubits = num_qubits;
  s.terms.emplace_back(index, 1.0);
  return s;
}

cplx SparseState::amplitude(std::uint64_t index) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), index,
                             [](const auto& t, std::uint64_t v) { return t.first < v; });
  if (it != terms.end() && it->first == index) return it->second;
  return {};
}

double SparseState::norm() const {
  double n = 0;
  for (const auto& [i, a] : terms) n += std::norm(a);
  return std::sqrt(n);
}

SparseState apply(const Circuit& c, SparseState s) {
  if (c.num_qubits != s.num_qubits) throw std::invalid_argument("register size mismatch");
  if (c.num_qubits > 62) throw std::invalid_argument("sparse index width exceeded");
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::X: {
        std::uint64_t m = bit_mask(s.num_qubits, g.qubits[0]);
        for (auto& [i, a] : s.terms) i ^= m;
        sparse_normalize(s);
        break;
      }
      case GateKind::CNOT: {
        std::uint64_t mc = bit_mask(s.num_qubits, g.qubits[0]);
        std::uint64_t mt = bit_mask(s.num_qubits, g.qubits[1]);
        for (auto& [i, a] : s.terms)
          if (i & mc) i ^= mt;
        sparse_normalize(s);
        break;
      }
      case GateKind::SWAP: {
        std::uint64_t ma = bit_mask(s.num_qubits, g.qubits[0]);
        std::uint64_t mb = bit_mask(s.num_qubits, g.qubits[1]);
        for (auto& [i, a] : s.terms) {
          bool ba = i & ma, bb = i & mb;
          if (ba != bb) i ^= (ma | mb);
        }
        sparse_normalize(s);
        break;
      }
      case GateKind::RZ: {
        std::uint64_t m = bit_mask(s.num_qubits, g.qubits[0]);
        cplx p0 = phase(-g.angle.half_radians()), p1 = phase(g.angle.half_radians());
        for (auto& [i, a] : s.terms) a *= (i & m) ? p1 : p0;
        break;
      }
      case GateKind::CP: {
        std::uint64_t ma = bit_mask(s.num_qubits, g.qubits[0]);
        std::uint64_t mb = bit_mask(s.num_qubits, g.qubits[1]);
        cplx p = phase(g.angle.radians());
        for (auto& [i, a] : s.terms)
          if ((i & ma) && (i & mb)) a *= p;
        break;
      }
      case GateKind::H: {
        std::uint64_t m = bit_mask(s.num_qubits, g.qubits[0]);
        std::vector<std::pair<std::uint64_t, cplx>> next;
        next.reserve(s.terms.size() * 2);
        for (const auto& [i, a] : s.terms) {
          if (i & m) {
            next.emplace_back(i ^ m, a * inv_sqrt2);
            next.emplace_back(i, -a * inv_sqrt2);
          } else {
            next.emplace_back(i, a * inv_sqrt2);
            next.emplace_back(i | m, a * inv_sqrt2);
          }
        }
        s.terms = std::move(next);
        sparse_normalize(s);
        break;
      }
      case GateKind::QFT:
      case GateKind::QFT_DAG: {
        int d = static_cast<int>(g.qubits.size());
        std::uint64_t dim = std::uint64_t{1} << d;
        std::vector<std::uint64_t> masks(d);
        std::uint64_t block_bits = 0;
        for (int i = 0; i < d; ++i) {
          masks[i] = bit_mask(s.num_qubits, g.qubits[i]);
          block_bits |= masks[i];
        }
        double sign = g.kind == GateKind::QFT ? 1.0 : -1.0;
        double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        std::vector<std::pair<std::uint64_t, cplx>> next;
        next.reserve(s.terms.size() * dim);
        for (const auto& [i, a] : s.terms) {
          std::uint64_t y = 0;
          for (int k = 0; k < d; ++k) y = (y << 1) | ((i & masks[k]) ? 1 : 0);
          std::uint64_t base = i & ~block_bits;
          for (std::uint64_t yp = 0; yp < dim; ++yp) {
            std::uint64_t idx = base;
            for (int k = 0; k < d; ++k)
              if (yp >> (d - 1 - k) & 1) idx |= masks[k];
            double th = sign * 2.0 * std::numbers::pi *
                        static_cast<double>((y * yp) % dim) / static_cast<double>(dim);
            next.emplace_back(idx, a * phase(th) * scale);
          }
        }
        s.terms = std::move(next);
        sparse_normalize(s);
        break;
      }
    }
  }
  return s;
}

namespace {

// Value of f at x reduced into [0, 2^d) plus the floor of (y + f(x)) / 2^d,
// which fixes the expected carry sign.
struct AddTarget {
  std::uint64_t w;  // (y + f) mod 2^d
  long long carry;
};

AddTarget add_target(const Dyadic& fx, std::uint64_t y, int d) {
  if (!fx.is_integer()) throw std::invalid_argument("integer table expected");
  bigint two_d = bigint(1) << d;
  bigint sum = fx.num() + y;
  bigint carry = sum >> d;  // floor division
  bigint w = sum - (carry << d);
  return {static_cast<std::uint64_t>(w), static_cast<long long>(carry)};
}

double wrap_phase(double p) {
  while (p > std::numbers::pi) p -= 2 * std::numbers::pi;
  while (p < -std::numbers::pi) p += 2 * std::numbers::pi;
  return std::abs(p);
}

}  // namespace

OracleVerdict verify_oracle(const OracleCircuit& oc, const FunctionTable& table, double amp_tol,
                            double phase_tol) {
  table.validate();
  if (oc.n != table.n || oc.d != table.d) throw std::invalid_argument("table/circuit mismatch");
  int n = oc.n, d = oc.d;
  int anc = oc.circuit.num_qubits - n - d;

  OracleVerdict v;
  v.amp_tol = amp_tol;
  v.phase_tol = phase_tol;
  bool dense_ok = oc.circuit.num_qubits <= 20;

  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << d); ++y) {
      std::uint64_t in_idx = ((x << d) | y) << anc;
      AddTarget t = add_target(table.values[x], y, d);
      std::uint64_t out_idx = ((x << d) | t.w) << anc;

      cplx amp;
      double total_norm;
      if (dense_ok) {
        StateVector out = apply(oc.circuit, StateVector::basis(oc.circuit.num_qubits, in_idx));
        amp = out.amps[out_idx];
        total_norm = out.norm();
        double off = 0;
        for (std::uint64_t i = 0; i < out.amps.size(); ++i)
          if (i != out_idx) off = std::max(off, std::abs(out.amps[i]));
        v.max_offtarget = std::max(v.max_offtarget, off);
      } else {
        SparseState out = apply(oc.circuit, SparseState::basis(oc.circuit.num_qubits, in_idx));
        amp = out.amplitude(out_idx);
        total_norm = out.norm();
        for (const auto& [i, a] : out.terms)
          if (i != out_idx) v.max_offtarget = std::max(v.max_offtarget, std::abs(a));
      }
      (void)total_norm;

      v.max_amp_dev = std::max(v.max_amp_dev, std::abs(1.0 - std::abs(amp)));
      double ph = wrap_phase(std::arg(amp));
      v.max_phase_dev = std::max(v.max_phase_dev, ph);
      if (ph > phase_tol) ++v.phase_failures;
      if (y == 0) v.max_phase_dev_y0 = std::max(v.max_phase_dev_y0, ph);
      // Phase residue against the (-1)^((2^d - 1) * carry) model.
      double model = (((static_cast<long long>((std::uint64_t{1} << d) - 1) * t.carry) % 2 + 2) % 2)
                         ? std::numbers::pi
                         : 0.0;
      v.max_carry_model_dev = std::max(v.max_carry_model_dev, wrap_phase(std::arg(amp) - model));
      ++v.inputs_checked;
    }
  }
  v.pass = v.max_amp_dev <= amp_tol && v.max_phase_dev <= phase_tol;
  return v;
}

VariantVerdict verify_variant(const OracleCircuit& oc, const FunctionTable& table,
                              bool projective, bool assume_y_zero, double amp_tol,
                              double phase_tol) {
  table.validate();
  int n = oc.n, d = oc.d;
  int anc = oc.circuit.num_qubits - n - d;
  VariantVerdict v;
  cplx global_gauge{};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    cplx x_gauge{};
    std::uint64_t y_limit = assume_y_zero ? 1 : (std::uint64_t{1} << d);
    for (std::uint64_t y = 0; y < y_limit; ++y) {
      std::uint64_t in_idx = ((x << d) | y) << anc;
      AddTarget t = add_target(table.values[x], y, d);
      std::uint64_t out_idx = ((x << d) | t.w) << anc;
      SparseState out = apply(oc.circuit, SparseState::basis(oc.circuit.num_qubits, in_idx));
      cplx amp = out.amplitude(out_idx);
      v.max_amp_dev = std::max(v.max_amp_dev, std::abs(1.0 - std::abs(amp)));
      cplx& gauge = projective ? x_gauge : global_gauge;
      if (gauge == cplx{}) gauge = amp / std::abs(amp);
      v.max_gauged_phase_dev =
          std::max(v.max_gauged_phase_dev, wrap_phase(std::arg(amp / gauge)));
      ++v.inputs_checked;
    }
  }
  v.pass = v.max_amp_dev <= amp_tol && v.max_gauged_phase_dev <= phase_tol;
  return v;
}

cplx fejer_amplitude(double t, long long y, int d) {
  if (d < 1) throw std::invalid_argument("kernel width");
  double dim = std::ldexp(1.0, d);
  t = std::fmod(t, dim);
  if (t < 0) t += dim;  // representative in [0, 2^d)
  double s = t - static_cast<double>(y);
  if (s == 0.0) return 1.0;
  double num = std::sin(std::numbers::pi * s);
  double den = dim * std::sin(std::numbers::pi * s / dim);
  if (std::abs(den) < 1e-300) return 1.0;
  return num / den;
}

FejerProfile fejer_profile(double t, int d) {
  FejerProfile p;
  p.t = t;
  std::uint64_t dim = std::uint64_t{1} << d;
  p.probabilities.resize(dim);
  for (std::uint64_t y = 0; y < dim; ++y)
    p.probabilities[y] = std::norm(fejer_amplitude(t, static_cast<long long>(y), d));
  double fl = std::floor(t), ce = std::ceil(t);
  auto reduce = [&](double v) {
    double r = std::fmod(v, static_cast<double>(dim));
    if (r < 0) r += static_cast<double>(dim);
    return static_cast<std::uint64_t>(r + 0.5) % dim;
  };
  std::uint64_t yf = reduce(fl), yc = reduce(ce);
  p.floor_ceil_mass = p.probabilities[yf];
  if (yc != yf) p.floor_ceil_mass += p.probabilities[yc];
  return p;
}

FejerVerdict fejer_check(const OracleCircuit& oc, const FunctionTable& table, double tol) {
  table.validate();
  if (table.mode != TableMode::real) throw std::invalid_argument("real-mode table expected");
  int n = oc.n, d = oc.d;
  int anc = oc.circuit.num_qubits - n - d;
  std::uint64_t dim = std::uint64_t{1} << d;

  FejerVerdict v;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    double fx = table.values[x].to_double();
    for (std::uint64_t y = 0; y < dim; ++y) {
      std::uint64_t in_idx = ((x << d) | y) << anc;
      SparseState out = apply(oc.circuit, SparseState::basis(oc.circuit.num_qubits, in_idx));
      double t = static_cast<double>(y) + fx;
      for (std::uint64_t yp = 0; yp < dim; ++yp) {
        // Mass on |x>|y'> with clean ancillas.
        std::uint64_t idx = ((x << d) | yp) << anc;
        double prob = std::norm(out.amplitude(idx));
        double want = std::norm(fejer_amplitude(t, static_cast<long long>(yp), d));
        v.max_prob_dev = std::max(v.max_prob_dev, std::abs(prob - want));
      }
      FejerProfile prof = fejer_profile(t, d);
      v.min_floor_ceil_mass = std::min(v.min_floor_ceil_mass, prof.floor_ceil_mass);
      ++v.inputs_checked;
    }
  }
  v.pass = v.max_prob_dev <= tol;
  return v;
}

}  // namespace whqram
