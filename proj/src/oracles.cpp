#include "whqram/oracles.hpp"

#include <bit>
#include <stdexcept>

#include "whqram/gadgets.hpp"
#include "whqram/graycode.hpp"

namespace whqram {

namespace {

struct Builder {
  const OracleRequest& req;
  int n, d;
  Circuit c;
  long long dropped = 0;

  Builder(const OracleRequest& r, int ancillas)
      : req(r), n(r.spectrum.n), d(r.spectrum.d), c(Circuit::with_layout(r.spectrum.n, r.spectrum.d, ancillas)) {}

  std::vector<int> value_qubits() const {
    std::vector<int> q(d);
    for (int j = 0; j < d; ++j) q[j] = n + j;
    return q;
  }

  // Step 1 / closing step: RZ(+-pi (1 - 2^d) / 2^j) on value qubit j.
  void corrections(int sign) {
    if (req.projective) return;
    bigint num = bigint(1) - (bigint(1) << d);
    for (int j = 1; j <= d; ++j)
      c.add({GateKind::RZ, {n + j - 1}, Angle(sign * num, j), GateTag::phase_correction});
  }

  void open_fourier() {
    if (req.assume_y_zero) {
      for (int q : value_qubits()) c.add({GateKind::H, {q}, Angle(), GateTag::fourier});
    } else {
      c.add(qft_block(value_qubits()));
    }
  }

  void close_fourier() { c.add(qft_dag_block(value_qubits())); }

  // One rotation batch: angle 2*pi * wh(z) / 2^(n+j) on block qubit j.
  void rotation_batch(const Dyadic& coeff, const std::vector<int>& block) {
    if (coeff.is_zero()) return;
    for (int j = 1; j <= d; ++j) {
      Angle a = Angle::two_pi_over_pow2(coeff.num(), n + j + coeff.exp2());
      if (req.drop_angles_below && a.magnitude() < *req.drop_angles_below) {
        ++dropped;
        continue;
      }
      c.add({GateKind::RZ, {block[j - 1]}, a, GateTag::spectrum_rotation});
    }
  }

  void pfo_mask(std::uint32_t mask, int mask_width, int mask_base, const std::vector<int>& targets,
                GateTag tag = GateTag::wiring) {
    PfoSpec p;
    for (int a = 0; a < mask_width; ++a)
      if (mask >> (mask_width - 1 - a) & 1) p.controls.push_back(mask_base + a);
    p.targets = targets;
    for (auto& g : build_pfo(p, tag)) c.add(std::move(g));
  }

  OracleCircuit finish() {
    OracleCircuit oc;
    oc.n = n;
    oc.d = d;
    oc.dropped_rotations = dropped;
    oc.report = depth_metrics(c);
    oc.circuit = std::move(c);
    return oc;
  }
};

const Dyadic& coeff_at(const Spectrum& s, std::uint32_t z) { return s.coefficients[z]; }

}  // namespace

bool oracle4_eligible(const Spectrum& spec) {
  return degree_profile(spec).min_low_k.has_value();
}

// Tuneable design: 2^l parity blocks walk a Gray code of the low n-l bits.
// The printed step list fires the u_1 = 0 batch before the loop, so the loop
// rounds run k = 2..2^(n-l) and the closing fan-out applies the wrap-around
// change set, returning every block to the plain-copy configuration.
OracleCircuit build_oracle1(const OracleRequest& req) {
  const Spectrum& s = req.spectrum;
  int n = s.n, d = s.d, l = req.l;
  if (l < 0 || l > n) throw std::out_of_range("oracle 1 ancilla parameter l outside [0, n]");
  int nl = n - l;
  int num_blocks = 1 << l;
  Builder b(req, d * (num_blocks - 1));

  std::vector<std::vector<int>> blocks(num_blocks);
  for (int i = 0; i < num_blocks; ++i) {
    blocks[i].resize(d);
    for (int j = 0; j < d; ++j) blocks[i][j] = n + i * d + j;
  }
  std::vector<int> all_targets;
  for (const auto& blk : blocks) all_targets.insert(all_targets.end(), blk.begin(), blk.end());

  b.corrections(+1);
  b.open_fourier();

  // A gate over F_2^l x {0}: ascending enumeration, block 0 is the value
  // register and carries mask 0.
  AsetSpec aset;
  aset.n = l;
  aset.mask_base = 0;
  aset.blocks = blocks;
  for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(num_blocks); ++z)
    aset.elements.push_back(z);
  auto a_gates = build_aset(aset);
  for (const auto& g : a_gates) b.c.add(g);

  auto fire_round = [&](std::uint32_t u) {
    for (int i = 0; i < num_blocks; ++i)
      b.rotation_batch(coeff_at(s, (static_cast<std::uint32_t>(i) << nl) | u), blocks[i]);
  };

  if (nl == 0) {
    fire_round(0);
  } else {
    GrayCode code = standard_gray(nl);
    fire_round(code.words[0]);
    for (std::size_t k = 1; k < code.words.size(); ++k) {
      b.pfo_mask(code.words[k - 1] ^ code.words[k], nl, l, all_targets);
      fire_round(code.words[k]);
    }
    // Closing fan-out per wrap-around change index (a single bit for the
    // reflected code).
    b.pfo_mask(code.words.back() ^ code.words.front(), nl, l, all_targets);
  }

  for (auto it = a_gates.rbegin(); it != a_gates.rend(); ++it) b.c.add(*it);
  b.close_fourier();
  b.corrections(-1);
  return b.finish();
}

// Maximal-ancilla design: one block per support element, all rotations in a
// single commuting layer.
OracleCircuit build_oracle2(const OracleRequest& req) {
  const Spectrum& s = req.spectrum;
  int n = s.n, d = s.d;
  int w = static_cast<int>(s.sparsity());
  int num_blocks = std::max(w, 1);  // the zero spectrum still owns its value block
  Builder b(req, d * (num_blocks - 1));

  std::vector<std::vector<int>> blocks(num_blocks);
  for (int i = 0; i < num_blocks; ++i) {
    blocks[i].resize(d);
    for (int j = 0; j < d; ++j) blocks[i][j] = n + i * d + j;
  }

  b.corrections(+1);
  b.open_fourier();

  std::vector<Gate> a_gates;
  if (w >= 1) {
    AsetSpec aset;
    aset.n = n;
    aset.mask_base = 0;
    aset.elements = s.support;  // ascending
    aset.blocks = blocks;
    a_gates = build_aset(aset);
  }
  for (const auto& g : a_gates) b.c.add(g);
  for (int i = 0; i < w; ++i) b.rotation_batch(coeff_at(s, s.support[i]), blocks[i]);
  for (auto it = a_gates.rbegin(); it != a_gates.rend(); ++it) b.c.add(*it);

  b.close_fourier();
  b.corrections(-1);
  return b.finish();
}

// Ancilla-free design: the value register itself walks the support in a
// Gray-compatible order; consecutive parity-fan-outs retarget it.
OracleCircuit build_oracle3(const OracleRequest& req) {
  const Spectrum& s = req.spectrum;
  int n = s.n;
  Builder b(req, 0);
  auto val = b.value_qubits();

  b.corrections(+1);
  b.open_fourier();

  std::uint32_t prev = 0;  // z_0 = 0
  if (!s.support.empty()) {
    for (std::uint32_t z : support_gray_order(s.support, n)) {
      b.pfo_mask(prev ^ z, n, 0, val);
      b.rotation_batch(coeff_at(s, z), val);
      prev = z;
    }
  }
  b.pfo_mask(prev, n, 0, val);  // closing PFO with mask z_{W_f}

  b.close_fourier();
  b.corrections(-1);
  return b.finish();
}

// Bounded-degree design: low-weight support is walked with a bounded Hamming
// weight code; each high-weight component ~z fires through the parity ancilla
// holding x . 1_n, sandwiched between two fan-outs.
OracleCircuit build_oracle4(const OracleRequest& req) {
  const Spectrum& s = req.spectrum;
  int n = s.n;
  auto profile = degree_profile(s);
  if (!profile.min_low_k)
    throw std::invalid_argument("oracle4-ineligible: support has middle-weight components");
  int k = *profile.min_low_k;

  Builder b(req, 1);
  auto val = b.value_qubits();
  int anc = n + s.d;
  std::uint32_t ones = (n == 32) ? ~0u : ((1u << n) - 1);

  b.pfo_mask(ones, n, 0, {anc});  // ancilla <- x . 1_n
  b.corrections(+1);
  b.open_fourier();

  std::vector<std::uint32_t> lows =
      (k == 0) ? std::vector<std::uint32_t>{0} : bounded_gray(n, k).words;

  std::uint32_t prev = 0;
  for (std::uint32_t z : lows) {
    b.pfo_mask(prev ^ z, n, 0, val);
    b.rotation_batch(coeff_at(s, z), val);
    std::uint32_t nz = ~z & ones;
    if (!coeff_at(s, nz).is_zero()) {
      b.pfo_mask(1, 1, anc, val);  // fan-out from the ancilla
      b.rotation_batch(coeff_at(s, nz), val);
      b.pfo_mask(1, 1, anc, val);
    }
    prev = z;
  }
  b.pfo_mask(prev, n, 0, val);

  b.close_fourier();
  b.corrections(-1);
  b.pfo_mask(ones, n, 0, {anc});  // restore the ancilla
  return b.finish();
}

OracleCircuit build_oracle(const OracleRequest& req) {
  switch (req.design) {
    case OracleDesign::O1:
      return build_oracle1(req);
    case OracleDesign::O2:
      return build_oracle2(req);
    case OracleDesign::O3:
      return build_oracle3(req);
    case OracleDesign::O4:
      return build_oracle4(req);
  }
  throw std::logic_error("unknown design");
}

}  // namespace whqram
