#include "whqram/qasm.hpp"

#include <sstream>

namespace whqram {

std::string qasm_export(const Circuit& c) {
  Circuit flat = decompose_qft_blocks(c);
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << flat.num_qubits << "];\n";
  for (const auto& g : flat.gates) {
    switch (g.kind) {
      case GateKind::H:
        out << "h q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::X:
        out << "x q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::RZ:
        out << "rz(" << g.angle.qasm_expr() << ") q[" << g.qubits[0] << "];\n";
        break;
      case GateKind::CNOT:
        out << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
        break;
      case GateKind::CP:
        out << "cp(" << g.angle.qasm_expr() << ") q[" << g.qubits[0] << "],q[" << g.qubits[1]
            << "];\n";
        break;
      case GateKind::SWAP:
        out << "swap q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
        break;
      case GateKind::QFT:
      case GateKind::QFT_DAG:
        break;  // unreachable after decomposition
    }
  }
  return out.str();
}

}  // namespace whqram
