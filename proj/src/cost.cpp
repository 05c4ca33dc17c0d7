#include "whqram/cost.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "whqram/oracles.hpp"

namespace whqram {

namespace {

double log2_rational(const rational& r) {
  if (r <= rational(0)) throw std::domain_error("log2 of nonpositive rational");
  // Split into mantissa-scale doubles to survive huge numerators/denominators.
  return std::log2(static_cast<double>(r.numerator())) -
         std::log2(static_cast<double>(r.denominator()));
}

}  // namespace

rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    bigint num(text.substr(0, slash));
    bigint den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return {num, den};
  }
  std::string t = text;
  int exp10 = 0;
  auto epos = t.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stoi(t.substr(epos + 1));
    t = t.substr(0, epos);
  }
  bigint num;
  bigint den = 1;
  auto dot = t.find('.');
  if (dot == std::string::npos) {
    num = bigint(t);
  } else {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed number");
    num = bigint(digits);
    for (std::size_t i = 0; i < t.size() - dot - 1; ++i) den *= 10;
  }
  rational r(num, den);
  for (int i = 0; i < exp10; ++i) r *= 10;
  for (int i = 0; i > exp10; --i) r /= 10;
  return r;
}

std::pair<rational, rational> epsilon_budget(const CostInputs& in) {
  if (in.epsilon <= rational(0)) throw std::domain_error("epsilon must be positive");
  if (in.w_f < 1 || in.d < 1) throw std::domain_error("budget needs d >= 1 and W_f >= 1");
  rational e0 = in.epsilon / (rational(3) * in.d * in.w_f);
  rational eq = in.epsilon / 3;
  return {e0, eq};
}

CostReport clifford_t_depth(const CostInputs& in, OracleDesign design) {
  CostReport r;
  auto [e0, eq] = epsilon_budget(in);
  r.epsilon_0 = e0;
  r.epsilon_qft = eq;
  r.rz_synthesis_depth_per_gate = in.synthesis_constant * log2_rational(1 / e0);
  r.qft_t_count = in.qft_constant * (in.d * (std::log2(in.d) + log2_rational(rational(1) / eq)));
  r.billed_rotations = static_cast<long long>(in.d) * in.w_f;

  double logw = std::log2(static_cast<double>(in.w_f));
  double log_d_eps = std::log2(in.d) + log2_rational(1 / in.epsilon);
  double c = in.depth_constant;
  switch (design) {
    case OracleDesign::O1: {
      double rounds = std::ldexp(1.0, in.n - in.l);
      r.depth_before = c * (in.l + std::log2(in.d)) * rounds;
      r.depth_after = c * (logw + in.l + log_d_eps) * rounds;
      if (in.l == in.n) {
        r.l_equals_n_special_case = true;
        r.special_case_depth = c * (in.n + log_d_eps);
      }
      break;
    }
    case OracleDesign::O2:
      r.depth_before = c * (logw + std::log2(in.d));
      r.depth_after = c * (logw + log_d_eps);
      break;
    case OracleDesign::O3: {
      double m = std::max(in.n, in.d);
      r.depth_before = c * std::log2(m) * static_cast<double>(in.w_f);
      r.depth_after =
          c * (logw + std::log2(m) + log2_rational(1 / in.epsilon)) * static_cast<double>(in.w_f);
      break;
    }
    case OracleDesign::O4:
      r.depth_before = c * std::log2(in.d) * static_cast<double>(in.w_f);
      r.depth_after = c * (logw + log_d_eps) * static_cast<double>(in.w_f);
      break;
  }
  return r;
}

double grover_epsilon(int n, double beta) {
  if (beta <= 0.0) throw std::domain_error("beta must be positive");
  return std::exp2(-(0.5 + beta) * n);
}

std::string CostReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["epsilon_0"] = epsilon_0.numerator().str() + "/" + epsilon_0.denominator().str();
  j["epsilon_qft"] = epsilon_qft.numerator().str() + "/" + epsilon_qft.denominator().str();
  j["rz_synthesis_depth_per_gate"] = rz_synthesis_depth_per_gate;
  j["qft_t_count"] = qft_t_count;
  j["depth_before"] = depth_before;
  j["depth_after"] = depth_after;
  j["billed_rotations"] = billed_rotations;
  if (l_equals_n_special_case) j["special_case_depth"] = special_case_depth;
  return j.dump(2);
}

}  // namespace whqram
