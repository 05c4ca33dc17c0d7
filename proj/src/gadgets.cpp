#include "whqram/gadgets.hpp"

#include <stdexcept>
#include <unordered_set>

namespace whqram {

namespace {

Gate cnot(int control, int target, GateTag tag) {
  return {GateKind::CNOT, {control, target}, Angle(), tag};
}

// Pairwise gather: after the rounds, wires[0] holds the XOR of all wires.
// Returns the gate sequence; the inverse sequence restores the wires.
std::vector<Gate> gather_tree(const std::vector<int>& wires, GateTag tag) {
  std::vector<Gate> seq;
  std::vector<int> live = wires;
  while (live.size() > 1) {
    std::vector<int> next;
    for (std::size_t i = 0; i + 1 < live.size(); i += 2) {
      seq.push_back(cnot(live[i + 1], live[i], tag));
      next.push_back(live[i]);
    }
    if (live.size() % 2) next.push_back(live.back());
    live = std::move(next);
  }
  return seq;
}

// Pair-cancel tree W with W applied to the all-ones value pattern leaving a
// single one on wires[0]; conjugating a root injection by W fans a control
// out onto every wire even when the targets start in arbitrary states.
std::vector<Gate> pair_cancel_tree(const std::vector<int>& wires, GateTag tag) {
  std::vector<Gate> seq;
  std::vector<int> live = wires;
  while (live.size() > 1) {
    std::vector<int> next;
    for (std::size_t i = 0; i + 1 < live.size(); i += 2) {
      seq.push_back(cnot(live[i], live[i + 1], tag));
      next.push_back(live[i]);
    }
    if (live.size() % 2) next.push_back(live.back());
    live = std::move(next);
  }
  return seq;
}

void append_reversed(std::vector<Gate>& out, const std::vector<Gate>& seq) {
  out.insert(out.end(), seq.rbegin(), seq.rend());  // CNOTs are involutions
}

}  // namespace

std::vector<Gate> build_pfo(const PfoSpec& spec, GateTag tag) {
  std::unordered_set<int> cs(spec.controls.begin(), spec.controls.end());
  for (int t : spec.targets)
    if (cs.count(t)) throw std::invalid_argument("pfo control/target overlap");
  std::vector<Gate> out;
  if (spec.controls.empty() || spec.targets.empty()) return out;  // identity

  auto gather = gather_tree(spec.controls, tag);
  auto w = pair_cancel_tree(spec.targets, tag);
  out.insert(out.end(), gather.begin(), gather.end());
  out.insert(out.end(), w.begin(), w.end());
  out.push_back(cnot(spec.controls[0], spec.targets[0], tag));
  append_reversed(out, w);
  append_reversed(out, gather);
  return out;
}

std::vector<Gate> build_aset(const AsetSpec& spec) {
  if (spec.blocks.size() != spec.elements.size())
    throw std::invalid_argument("aset block/element count mismatch");
  if (spec.blocks.empty()) return {};
  std::size_t d = spec.blocks[0].size();
  for (const auto& b : spec.blocks)
    if (b.size() != d) throw std::invalid_argument("aset blocks of unequal size");

  std::vector<Gate> out;
  // Copy the value block onto the clean ancilla blocks, doubling each round.
  std::size_t done = 1;
  while (done < spec.blocks.size()) {
    std::size_t batch = std::min(done, spec.blocks.size() - done);
    for (std::size_t i = 0; i < batch; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out.push_back(cnot(spec.blocks[i][j], spec.blocks[done + i][j], GateTag::wiring));
    done += batch;
  }
  // Parity of each element's mask into its block.
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    PfoSpec p;
    for (int a = 0; a < spec.n; ++a)
      if (spec.elements[i] >> (spec.n - 1 - a) & 1) p.controls.push_back(spec.mask_base + a);
    p.targets = spec.blocks[i];
    auto frag = build_pfo(p);
    out.insert(out.end(), frag.begin(), frag.end());
  }
  return out;
}

Gate qft_block(const std::vector<int>& qubits) {
  if (qubits.empty()) throw std::invalid_argument("empty qft block");
  return {GateKind::QFT, qubits, Angle(), GateTag::fourier};
}

Gate qft_dag_block(const std::vector<int>& qubits) {
  if (qubits.empty()) throw std::invalid_argument("empty qft block");
  return {GateKind::QFT_DAG, qubits, Angle(), GateTag::fourier};
}

Circuit build_qft_adder(long long k, int d) {
  if (d < 1) throw std::invalid_argument("adder width");
  Circuit c = Circuit::with_layout(0, d, 0);
  std::vector<int> q(d);
  for (int i = 0; i < d; ++i) q[i] = i;
  c.add(qft_block(q));
  for (int j = 1; j <= d; ++j) {
    Angle a = Angle::two_pi_over_pow2(k, j);  // phase 2*pi*k / 2^j on bit j
    if (!a.is_zero()) c.add({GateKind::RZ, {q[j - 1]}, a, GateTag::fourier});
  }
  c.add(qft_dag_block(q));
  return c;
}

}  // namespace whqram
