#include "whqram/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "json.hpp"

namespace whqram {

namespace {

// ASAP layering. QFT blocks synchronize their operands without occupying a
// layer of their own (the paper's complexities sit on top of the QFT).
long long asap_depth(const Circuit& c, bool qft_as_barrier) {
  std::vector<long long> ready(c.num_qubits, 0);
  long long depth = 0;
  for (const auto& g : c.gates) {
    bool barrier = qft_as_barrier && (g.kind == GateKind::QFT || g.kind == GateKind::QFT_DAG);
    long long at = 0;
    for (int q : g.qubits) at = std::max(at, ready[q]);
    if (!barrier) ++at;
    for (int q : g.qubits) ready[q] = at;
    depth = std::max(depth, at);
  }
  return depth;
}

long long partner_connectivity(const Circuit& c, bool include_cp) {
  std::map<int, std::set<int>> partners;
  for (const auto& g : c.gates) {
    bool entangling = g.kind == GateKind::CNOT || g.kind == GateKind::SWAP ||
                      (include_cp && g.kind == GateKind::CP);
    if (!entangling) continue;
    partners[g.qubits[0]].insert(g.qubits[1]);
    partners[g.qubits[1]].insert(g.qubits[0]);
  }
  long long best = 0;
  for (const auto& [q, s] : partners) best = std::max(best, static_cast<long long>(s.size()));
  return best;
}

}  // namespace

long long connectivity(const Circuit& c) { return partner_connectivity(c, false); }

ResourceReport depth_metrics(const Circuit& c) {
  ResourceReport r;
  r.total_depth = asap_depth(c, true);
  r.total_depth_with_qft = asap_depth(decompose_qft_blocks(c), false);

  // Spectrum rotations all commute, so their scheduling depth is the largest
  // number of them stacked on a single qubit. This is the only reading under
  // which the shallow design's single rotation layer comes out as depth 1.
  std::map<int, long long> per_qubit;
  for (const auto& g : c.gates) {
    if (g.kind != GateKind::QFT && g.kind != GateKind::QFT_DAG) ++r.gate_count;
    if (g.kind == GateKind::RZ && g.tag == GateTag::spectrum_rotation) {
      ++r.rz_count;
      r.rz_depth = std::max(r.rz_depth, ++per_qubit[g.qubits[0]]);
    }
    if (g.kind == GateKind::RZ && g.tag == GateTag::phase_correction) ++r.phase_correction_count;
  }

  r.connectivity = partner_connectivity(c, false);
  r.connectivity_with_qft = partner_connectivity(decompose_qft_blocks(c), true);
  r.ancilla_count = c.count_role(QubitRole::ancilla);
  return r;
}

std::string ResourceReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["total_depth"] = total_depth;
  j["total_depth_with_qft"] = total_depth_with_qft;
  j["rz_depth"] = rz_depth;
  j["gate_count"] = gate_count;
  j["rz_count"] = rz_count;
  j["phase_correction_count"] = phase_correction_count;
  j["connectivity"] = connectivity;
  j["connectivity_with_qft"] = connectivity_with_qft;
  j["ancilla_count"] = ancilla_count;
  return j.dump(2);
}

}  // namespace whqram
