#include "whqram/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace whqram {

namespace {

// Reduce num mod 2^(exp2+2) so that pi * num / 2^exp2 keeps its value mod 4*pi.
// Keeps the trig argument tiny regardless of how large the raw coefficient is;
// mod 4*pi (not 2*pi) because half-angles must stay faithful too.
long long reduced_mod_4(const bigint& num, int exp2) {
  bigint period = bigint(1) << (exp2 + 2);
  bigint r = num % period;
  if (r < 0) r += period;
  if (r >= (period >> 1)) r -= period;  // center for smaller |argument|
  return static_cast<long long>(r);
}

}  // namespace

double Angle::radians() const {
  if (num_ == 0) return 0.0;
  return M_PI * static_cast<double>(reduced_mod_4(num_, exp2_)) * std::ldexp(1.0, -exp2_);
}

double Angle::half_radians() const {
  if (num_ == 0) return 0.0;
  return M_PI * static_cast<double>(reduced_mod_4(num_, exp2_)) * std::ldexp(1.0, -exp2_ - 1);
}

double Angle::magnitude() const {
  if (num_ == 0) return 0.0;
  double v = static_cast<double>(abs(num_)) * std::ldexp(1.0, -exp2_);
  return M_PI * v;
}

std::string Angle::qasm_expr() const {
  if (num_ == 0) return "0";
  bigint a = num_ < 0 ? bigint(-num_) : num_;
  std::string s = num_ < 0 ? "-" : "";
  if (a == 1)
    s += "pi";
  else
    s += a.str() + "*pi";
  if (exp2_ > 0) s += "/" + (bigint(1) << exp2_).str();
  return s;
}

void Circuit::add(Gate g) {
  std::unordered_set<int> seen;
  for (int q : g.qubits) {
    if (q < 0 || q >= num_qubits) throw std::out_of_range("gate operand outside register");
    if (!seen.insert(q).second) throw std::invalid_argument("duplicate gate operand");
  }
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
      if (g.qubits.size() != 1) throw std::invalid_argument("1-qubit gate arity");
      break;
    case GateKind::RZ:
      if (g.qubits.size() != 1) throw std::invalid_argument("rz arity");
      break;
    case GateKind::CNOT:
    case GateKind::CP:
    case GateKind::SWAP:
      if (g.qubits.size() != 2) throw std::invalid_argument("2-qubit gate arity");
      break;
    case GateKind::QFT:
    case GateKind::QFT_DAG:
      if (g.qubits.empty()) throw std::invalid_argument("empty qft block");
      break;
  }
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  for (const auto& g : other.gates) add(g);
}

Circuit Circuit::with_layout(int n, int d, int ancillas) {
  Circuit c;
  c.num_qubits = n + d + ancillas;
  c.roles.assign(c.num_qubits, QubitRole::ancilla);
  for (int i = 0; i < n; ++i) c.roles[i] = QubitRole::input;
  for (int i = 0; i < d; ++i) c.roles[n + i] = QubitRole::value;
  return c;
}

Circuit inverse(const Circuit& c) {
  Circuit inv;
  inv.num_qubits = c.num_qubits;
  inv.roles = c.roles;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::RZ || g.kind == GateKind::CP)
      g.angle = -g.angle;
    else if (g.kind == GateKind::QFT)
      g.kind = GateKind::QFT_DAG;
    else if (g.kind == GateKind::QFT_DAG)
      g.kind = GateKind::QFT;
    inv.add(std::move(g));
  }
  return inv;
}

Circuit decompose_qft_blocks(const Circuit& c) {
  Circuit out;
  out.num_qubits = c.num_qubits;
  out.roles = c.roles;
  for (const auto& g : c.gates) {
    if (g.kind != GateKind::QFT && g.kind != GateKind::QFT_DAG) {
      out.add(g);
      continue;
    }
    const auto& q = g.qubits;
    int d = static_cast<int>(q.size());
    std::vector<Gate> block;
    for (int i = 0; i < d; ++i) {
      block.push_back({GateKind::H, {q[i]}, Angle(), GateTag::fourier});
      for (int j = i + 1; j < d; ++j) {
        // controlled phase 2*pi / 2^(j-i+1)
        Angle a = Angle::two_pi_over_pow2(1, j - i + 1);
        block.push_back({GateKind::CP, {q[j], q[i]}, a, GateTag::fourier});
      }
    }
    for (int i = 0; i < d / 2; ++i)
      block.push_back({GateKind::SWAP, {q[i], q[d - 1 - i]}, Angle(), GateTag::fourier});
    if (g.kind == GateKind::QFT) {
      for (auto& b : block) out.add(std::move(b));
    } else {
      for (auto it = block.rbegin(); it != block.rend(); ++it) {
        Gate b = *it;
        if (b.kind == GateKind::CP) b.angle = -b.angle;
        out.add(std::move(b));
      }
    }
  }
  return out;
}

}  // namespace whqram
