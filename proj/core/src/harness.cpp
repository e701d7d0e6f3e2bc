#include "holomatch/harness.hpp"

#include <chrono>
#include <sstream>

#include "holomatch/decompose.hpp"
#include "holomatch/errors.hpp"
#include "holomatch/generators.hpp"
#include "holomatch/holographic.hpp"
#include "holomatch/signature_algebra.hpp"

namespace holomatch {
namespace {

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string positions_text(Index mask, unsigned arity) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned p : positions_of(mask, arity)) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string mgi_text(const MgiVerdict& m, unsigned arity) {
  if (m.pass) return "pass (" + std::to_string(m.checked) + " identities)";
  std::ostringstream os;
  os << "fail alpha=" << format_bits(m.alpha, arity) << " P=" << positions_text(m.positions, arity)
     << " residual=" << m.residual;
  return os.str();
}

std::string parity_text(const ParityVerdict& p, unsigned arity) {
  switch (p.kind) {
    case ParityKind::kZero: return "zero";
    case ParityKind::kEven: return "even";
    case ParityKind::kOdd: return "odd";
    case ParityKind::kViolated: break;
  }
  return "violated even=" + format_bits(p.even_witness, arity) + " odd=" + format_bits(p.odd_witness, arity);
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
  }
  return os.str();
}

std::string det_text(const DetVerdict& d, const BlockView& v) {
  if (d.pass) return "pass (" + std::to_string(d.checked) + " determinants)";
  std::ostringstream os;
  os << "fail kind=" << d.kind << " alpha=" << format_bits(d.alpha, v.ell() * v.blocks()) << " i=" << d.i
     << " j=" << d.j << " s=" << d.s << " t=" << d.t << " det=" << d.det;
  return os.str();
}

struct GeneratedGate {
  Matchgate gate;
  BooleanSignature sig;
  unsigned n = 0;
  unsigned ell = 0;
};

// Trial k cycles through the six (n, ℓ) shapes; everything else comes from its
// seed. Gates with an all-zero signature are redrawn.
GeneratedGate generated_gate(std::uint64_t seed, std::uint64_t k) {
  static constexpr unsigned kShapes[6][2] = {{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}};
  const auto& shape = kShapes[k % 6];
  Rng rng(trial_seed(seed, k));
  for (;;) {
    Matchgate g = random_block_gate(rng, shape[0], shape[1]);
    BooleanSignature s = signature(g);
    if (!s.is_zero()) return {std::move(g), std::move(s), shape[0], shape[1]};
  }
}

std::string trial_label(std::uint64_t seed, std::uint64_t k) {
  return "trial " + std::to_string(k) + " (seed " + std::to_string(trial_seed(seed, k)) + ")";
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 step over seed and trial index
  std::uint64_t z = seed + (k + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string format_entries(const BooleanSignature& s) {
  std::ostringstream os;
  bool first = true;
  for (Index a : s.support()) {
    os << (first ? "" : ", ") << (s.arity() ? format_bits(a, s.arity()) : "-") << ' ' << s[a];
    first = false;
  }
  return first ? "all zero" : os.str();
}

std::string format_report(const HarnessReport& r, bool timing) {
  std::ostringstream os;
  os << r.check << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
  os << "  claim: " << r.claim << '\n';
  os << "  seed: " << r.seed << '\n';
  os << "  trials: " << r.trials << '\n';
  for (const auto& [k, v] : r.witness) os << "  " << k << ": " << v << '\n';
  if (timing) os << "  seconds: " << r.seconds << '\n';
  return os.str();
}

HarnessReport demo_gamma1() {
  Stopwatch clock;
  HarnessReport r;
  r.check = "demo-gamma1";
  r.claim = "the ladder gate with a -1 middle rung has signature 0000=1001=0110=1, 1111=-1, "
            "is blockwise symmetric for l=2, passes MGI and has matrix-form rank 4";
  r.trials = 1;
  BooleanSignature expected(4);
  expected[parse_bits("0000", 4)] = 1;
  expected[parse_bits("1001", 4)] = 1;
  expected[parse_bits("0110", 4)] = 1;
  expected[parse_bits("1111", 4)] = -1;
  r.add("expected", format_entries(expected));
  r.add("expected mgi", mgi_text(check_mgi(expected), 4));
  bool any = false;
  std::string reproducing = "none";
  for (const bool ccw : {true, false}) {
    const std::string name = ccw ? "counterclockwise" : "row-major";
    const BooleanSignature s = signature(gamma1(ccw));
    const BlockView v(s, 2);
    const bool matches = s == expected;
    const bool symmetric = is_blockwise_symmetric(v).symmetric;
    const MgiVerdict mgi = check_mgi(s);
    const std::size_t rank = exact_rank(matrix_form(v));
    r.add(name + " corners", ccw ? "TL BL BR TR" : "TL TR BL BR");
    r.add(name + " entries", format_entries(s));
    r.add(name + " matches expected", matches ? "yes" : "no");
    r.add(name + " blockwise symmetric", symmetric ? "yes" : "no");
    r.add(name + " parity", parity_text(check_parity(s), 4));
    r.add(name + " mgi", mgi_text(mgi, 4));
    r.add(name + " rank", std::to_string(rank));
    if (matches) reproducing = name;
    any = any || (matches && symmetric && mgi.pass && rank == 4);
  }
  r.add("order reproducing expected entries", reproducing);
  r.pass = any;
  r.seconds = clock.seconds();
  return r;
}

HarnessReport verify_equality_theorem(unsigned q, unsigned n, unsigned ell, std::uint64_t trials,
                                      std::uint64_t seed) {
  if (q < 3) throw PreconditionError("verify-eq-theorem needs q >= 3");
  if (n < 3) throw PreconditionError("verify-eq-theorem needs n >= 3");
  if (ell == 0 || ell > 4 || (1U << ell) < q) throw PreconditionError("verify-eq-theorem needs 2^l >= q (l <= 4)");
  Stopwatch clock;
  HarnessReport r;
  r.check = "verify-eq-theorem";
  r.claim = "for random rank-q matrices M, (=n)M^n has matrix-form rank q and is not a matchgate "
            "signature (parity or MGI fails)";
  r.seed = seed;
  r.trials = trials;
  r.add("shape", "q=" + std::to_string(q) + " n=" + std::to_string(n) + " l=" + std::to_string(ell));
  const DomainSignature eq = equality(q, n);
  std::uint64_t by_parity = 0, by_mgi = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    Rng rng(trial_seed(seed, k));
    const TransformMatrix m = random_full_rank(rng, q, 1U << ell);
    const BooleanSignature s = transform(eq, m);
    const unsigned arity = s.arity();
    const std::size_t rank = exact_rank(matrix_form(BlockView(s, ell)));
    const ParityVerdict p = check_parity(s);
    std::string certificate;
    bool certified = false;
    if (p.kind == ParityKind::kViolated) {
      ++by_parity;
      certified = true;
      certificate = "parity " + parity_text(p, arity);
    } else {
      const MgiVerdict mgi = check_mgi(s);
      certificate = "mgi " + mgi_text(mgi, arity);
      if (!mgi.pass) {
        ++by_mgi;
        certified = true;
      }
    }
    if (k == 0) {
      r.add("first matrix", matrix_text(m.matrix()));
      r.add("first rank", std::to_string(rank));
      r.add("first certificate", certificate);
    }
    if (rank != q || !certified) {
      r.pass = false;
      r.add("failing trial", trial_label(seed, k));
      r.add("failing matrix", matrix_text(m.matrix()));
      r.add("failing rank", std::to_string(rank));
      r.add("failing certificate", certified ? certificate : "none: " + certificate);
      break;
    }
  }
  r.add("certified by parity", std::to_string(by_parity));
  r.add("certified by mgi", std::to_string(by_mgi));
  r.seconds = clock.seconds();
  return r;
}

HarnessReport verify_equality_control(unsigned n) {
  Stopwatch clock;
  HarnessReport r;
  r.check = "verify-eq-control";
  r.claim = "(=n) under the unnormalized Hadamard matrix passes parity and MGI";
  r.trials = 1;
  const BooleanSignature s = transform(equality(2, n), hadamard(false));
  const ParityVerdict p = check_parity(s);
  const MgiVerdict mgi = check_mgi(s);
  r.add("entries", format_entries(s));
  r.add("parity", parity_text(p, n));
  r.add("mgi", mgi_text(mgi, n));
  r.pass = p.kind != ParityKind::kViolated && mgi.pass;
  r.seconds = clock.seconds();
  return r;
}

HarnessReport verify_rank_bound(std::uint64_t trials, std::uint64_t seed) {
  Stopwatch clock;
  HarnessReport r;
  r.check = "verify-rank-bound";
  r.claim = "blockwise symmetric matchgate signatures with n >= 3 blocks have matrix-form rank <= 2 "
            "and satisfy the determinant identities";
  r.seed = seed;
  r.trials = trials;
  std::uint64_t ranks[3] = {0, 0, 0};
  for (std::uint64_t k = 0; k < trials; ++k) {
    const GeneratedGate gg = generated_gate(seed, k);
    const BooleanSignature& s = gg.sig;
    const BlockView v(s, gg.ell);
    const std::size_t rank = exact_rank(matrix_form(v));
    const SymmetryVerdict sym = is_blockwise_symmetric(v);
    const DetVerdict det = check_det_identities(v);
    if (rank <= 2) ++ranks[rank];
    if (rank > 2 || !det.pass || !sym.symmetric) {
      r.pass = false;
      r.add("failing trial", trial_label(seed, k));
      r.add("shape", "n=" + std::to_string(gg.n) + " l=" + std::to_string(gg.ell));
      r.add("rank", std::to_string(rank));
      r.add("blockwise symmetric", sym.symmetric ? "yes" : "no");
      r.add("determinants", det_text(det, v));
      break;
    }
  }
  r.add("rank 0", std::to_string(ranks[0]));
  r.add("rank 1", std::to_string(ranks[1]));
  r.add("rank 2", std::to_string(ranks[2]));
  const BooleanSignature g1 = signature(gamma1(true));
  r.add("boundary case n=2", "ladder gate at l=2 has rank " +
                                 std::to_string(exact_rank(matrix_form(BlockView(g1, 2)))) +
                                 " (excluded: the bound needs n >= 3)");
  r.seconds = clock.seconds();
  return r;
}

HarnessReport verify_decomposition(std::uint64_t trials, std::uint64_t seed) {
  Stopwatch clock;
  HarnessReport r;
  r.check = "verify-decomposition";
  r.claim = "blockwise symmetric matchgate signatures factor through the condensed vector g and an "
            "n-ary core, and gadget surgery on the source gate realizes both exactly";
  r.seed = seed;
  r.trials = trials;
  std::uint64_t ranks[3] = {0, 0, 0};
  std::uint64_t entries = 0, witnesses = 0;
  auto fail = [&](std::uint64_t k, const GeneratedGate& gg, const std::string& what) {
    r.pass = false;
    r.add("failing trial", trial_label(seed, k));
    r.add("shape", "n=" + std::to_string(gg.n) + " l=" + std::to_string(gg.ell));
    r.add("failure", what);
  };
  for (std::uint64_t k = 0; k < trials && r.pass; ++k) {
    const GeneratedGate gg = generated_gate(seed, k);
    const BooleanSignature& s = gg.sig;
    const BlockView v(s, gg.ell);
    const Decomposition d = decompose(v);
    ++ranks[d.rank];
    const BooleanSignature back = reconstruct_all(d);
    entries += s.size();
    if (back != s) {
      for (Index a = 0; a < s.size(); ++a)
        if (back[a] != s[a]) {
          std::ostringstream os;
          os << "reconstruct differs at " << format_bits(a, s.arity()) << ": " << back[a] << " vs " << s[a];
          fail(k, gg, os.str());
          break;
        }
      continue;
    }
    if (d.rank == 0) continue;
    const Matchgate cw = condensed_witness(gg.gate, v, d, d.rank == 2 ? WitnessMode::kRankTwo : WitnessMode::kRankOne);
    if (condensed_signature(signature(cw)) != d.g) {
      fail(k, gg, "condensed witness does not realize g");
      continue;
    }
    ++witnesses;
    if (d.rank == 1) {
      if (!blocks_share_parity(v)) fail(k, gg, "rank 1 but blocks do not share parity");
      continue;
    }
    const BooleanSignature cs = signature(core_witness(gg.gate, d));
    if (cs != d.core) {
      fail(k, gg, "core witness realizes " + format_entries(cs) + ", expected " + format_entries(d.core));
      continue;
    }
    ++witnesses;
  }
  if (r.pass) {
    // a gate whose signature vanishes: rank 0, reconstructs to zero
    Rng rng(trial_seed(seed, trials));
    const Matchgate zero = scale_gate(random_block_gate(rng, 3, 2), 0);
    const BooleanSignature s = signature(zero);
    const Decomposition d = decompose(BlockView(s, 2));
    const bool ok = s.is_zero() && d.rank == 0 && reconstruct_all(d).is_zero();
    r.add("zero gate", ok ? "rank 0, reconstructs to zero" : "unexpected");
    r.pass = ok;
  }
  r.add("rank 0", std::to_string(ranks[0]));
  r.add("rank 1", std::to_string(ranks[1]));
  r.add("rank 2", std::to_string(ranks[2]));
  r.add("entries reconstructed", std::to_string(entries));
  r.add("witness gates checked", std::to_string(witnesses));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace holomatch
