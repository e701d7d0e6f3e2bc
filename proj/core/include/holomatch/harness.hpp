#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holomatch/signature.hpp"

namespace holomatch {

/// Outcome of one named harness check. Witness entries are ordered key/value
/// pairs; a failing report names the trial and its seed.
struct HarnessReport {
  std::string check;
  std::string claim;
  bool pass = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<std::pair<std::string, std::string>> witness;
  double seconds = 0;

  void add(std::string key, std::string value) { witness.emplace_back(std::move(key), std::move(value)); }
};

/// Human-readable report; the duration is included only when `timing` is set.
std::string format_report(const HarnessReport& r, bool timing = false);

/// Seed for trial k of a run seeded with `seed`; trial k can be replayed alone.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t k);

/// `0000 1, 1001 1, …` listing of the nonzero entries.
std::string format_entries(const BooleanSignature& s);

/// The four-corner ladder gate checked against the target entries
/// Γ^{0000}=Γ^{1001}=Γ^{0110}=1, Γ^{1111}=−1, blockwise symmetry at ℓ=2, MGI and
/// rank 4. Both the counterclockwise and the row-major corner orders are tried.
HarnessReport demo_gamma1();

/// Random rank-q matrices M: (=ₙ)M^{⊗n} has matrix-form rank q and fails parity
/// or MGI. Throws PreconditionError unless q ≥ 3, n ≥ 3 and 2^ℓ ≥ q.
HarnessReport verify_equality_theorem(unsigned q, unsigned n, unsigned ell, std::uint64_t trials,
                                      std::uint64_t seed);

/// Boolean control: (=ₙ) under the unnormalized Hadamard passes parity and MGI.
HarnessReport verify_equality_control(unsigned n);

/// Generated blockwise symmetric matchgates (n ∈ {3,4}, ℓ ∈ {1,2,3}) have
/// matrix-form rank at most 2 and satisfy the determinant identities.
HarnessReport verify_rank_bound(std::uint64_t trials, std::uint64_t seed);

/// The same generated gates decompose and reconstruct exactly, and the
/// witness gadgets realize g and Γ_S.
HarnessReport verify_decomposition(std::uint64_t trials, std::uint64_t seed);

}  // namespace holomatch
