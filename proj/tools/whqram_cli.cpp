// Command-line front end: ingest a function table, run the Walsh-Hadamard
// analysis, build the requested oracle circuit, optionally verify it by
// simulation, and emit OpenQASM plus resource/cost reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "whqram/cost.hpp"
#include "whqram/gadgets.hpp"
#include "whqram/oracles.hpp"
#include "whqram/qasm.hpp"
#include "whqram/simulator.hpp"
#include "whqram/table_io.hpp"

namespace {

constexpr int VERIFY_QUBIT_CAP = 18;

int fail(const std::string& code, const std::string& detail) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["detail"] = detail;
  std::cerr << j.dump() << "\n";
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walsh-Hadamard QRAM oracle compiler"};
  app.get_formatter()->column_width(38);

  std::string input_path, qasm_path, report_path, random_spec;
  int oracle = 0;
  std::optional<int> l;
  bool projective = false, assume_y_zero = false, verify = false, drop_small = false;
  std::string epsilon_text = "0.01";

  app.add_option("--input", input_path, "function table JSON file");
  app.add_option("--oracle", oracle, "design to build (1..4)")->required()->check(CLI::Range(1, 4));
  app.add_option("--l", l, "ancilla parameter for oracle 1 (0..n)");
  app.add_flag("--projective", projective, "drop the opening/closing phase corrections");
  app.add_flag("--assume-y-zero", assume_y_zero, "replace the opening QFT by plain Hadamards");
  app.add_option("--epsilon", epsilon_text, "total approximation budget for the cost model");
  app.add_flag("--verify", verify, "simulate every basis input against the table");
  app.add_flag("--drop-small-angles", drop_small,
               "omit spectrum rotations with |angle| below epsilon_0");
  app.add_option("--emit-qasm", qasm_path, "write OpenQASM 2.0 here");
  app.add_option("--report", report_path, "write the combined JSON report here");
  app.add_option("--random", random_spec, "generate a table: n,d,nonzero,seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (input_path.empty() == random_spec.empty())
      return fail("bad-flags", "exactly one of --input / --random is required");
    if (l && oracle != 1) return fail("bad-flags", "--l applies to oracle 1 only");

    whqram::FunctionTable table;
    if (!random_spec.empty()) {
      int n, d, nz;
      unsigned long long seed;
      char c1, c2, c3;
      std::istringstream ss(random_spec);
      if (!(ss >> n >> c1 >> d >> c2 >> nz >> c3 >> seed) || c1 != ',' || c2 != ',' || c3 != ',')
        return fail("bad-flags", "--random expects n,d,nonzero,seed");
      table = whqram::random_binary_table(n, d, nz, seed);
    } else {
      table = whqram::parse_table_json(read_file(input_path));
    }

    whqram::Spectrum spectrum = whqram::fwht(table);

    whqram::OracleRequest req;
    req.spectrum = spectrum;
    req.design = static_cast<whqram::OracleDesign>(oracle);
    req.l = l.value_or(0);
    req.projective = projective;
    req.assume_y_zero = assume_y_zero;

    whqram::CostInputs ci;
    ci.n = table.n;
    ci.d = table.d;
    ci.w_f = static_cast<long long>(spectrum.sparsity());
    ci.l = req.l;
    ci.epsilon = whqram::parse_rational(epsilon_text);
    if (drop_small) {
      auto [e0, eq] = whqram::epsilon_budget(ci);
      req.drop_angles_below = static_cast<double>(e0.numerator()) /
                              static_cast<double>(e0.denominator());
    }

    if (oracle == 4 && !whqram::oracle4_eligible(spectrum))
      return fail("oracle4-ineligible",
                  "spectrum support has Hamming weights in the middle band");
    if (oracle == 1 && (req.l < 0 || req.l > table.n))
      return fail("l-out-of-range", "--l must lie in [0, n]");

    whqram::OracleCircuit oc = whqram::build_oracle(req);

    nlohmann::ordered_json report;
    report["schema"] = 1;
    report["table"] = {{"n", table.n},
                       {"d", table.d},
                       {"mode", table.mode == whqram::TableMode::binary ? "binary" : "real"},
                       {"w_f", spectrum.sparsity()}};
    report["oracle"] = oracle;
    report["resource"] = nlohmann::ordered_json::parse(oc.report.to_json());
    if (oc.dropped_rotations > 0) report["dropped_rotations"] = oc.dropped_rotations;
    if (ci.w_f >= 1) {
      whqram::CostReport cost = whqram::clifford_t_depth(ci, req.design);
      report["cost"] = nlohmann::ordered_json::parse(cost.to_json());
    }

    bool verified_ok = true;
    if (verify) {
      if (oc.circuit.num_qubits > VERIFY_QUBIT_CAP) {
        report["verify"] = {{"skipped", true},
                            {"reason", "register exceeds the verification cap"},
                            {"qubits", oc.circuit.num_qubits},
                            {"cap", VERIFY_QUBIT_CAP}};
        std::cerr << "warning: " << oc.circuit.num_qubits
                  << " qubits exceed the verification cap (" << VERIFY_QUBIT_CAP
                  << "); circuit built but not simulated\n";
      } else if (projective || assume_y_zero) {
        auto v = whqram::verify_variant(oc, table, projective, assume_y_zero);
        report["verify"] = {{"mode", "variant"},
                            {"pass", v.pass},
                            {"max_amp_dev", v.max_amp_dev},
                            {"max_gauged_phase_dev", v.max_gauged_phase_dev},
                            {"inputs", v.inputs_checked}};
        verified_ok = v.pass;
      } else if (table.mode == whqram::TableMode::real) {
        auto v = whqram::fejer_check(oc, table);
        report["verify"] = {{"mode", "fejer"},
                            {"pass", v.pass},
                            {"max_prob_dev", v.max_prob_dev},
                            {"min_floor_ceil_mass", v.min_floor_ceil_mass},
                            {"inputs", v.inputs_checked}};
        verified_ok = v.pass;
      } else {
        auto v = whqram::verify_oracle(oc, table);
        report["verify"] = {{"mode", "exact"},
                            {"pass", v.pass},
                            {"max_amp_dev", v.max_amp_dev},
                            {"max_phase_dev", v.max_phase_dev},
                            {"max_phase_dev_y0", v.max_phase_dev_y0},
                            {"max_carry_model_dev", v.max_carry_model_dev},
                            {"phase_failures", v.phase_failures},
                            {"inputs", v.inputs_checked}};
        // The addition map itself is the shipping contract; the raw phase field
        // reports the wrap-around sign separately.
        verified_ok = v.max_amp_dev <= 1e-9 && v.max_carry_model_dev <= 1e-6;
      }
    }

    if (!qasm_path.empty()) write_file(qasm_path, whqram::qasm_export(oc.circuit));
    if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
    if (report_path.empty()) std::cout << report.dump(2) << "\n";

    if (verify && !verified_ok) return fail("verification-failed", "simulation disagrees with the table");
    return 0;
  } catch (const std::exception& e) {
    return fail("runtime-error", e.what());
  }
}
