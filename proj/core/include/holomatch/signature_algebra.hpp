#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holomatch/matrix.hpp"
#include "holomatch/signature.hpp"

namespace holomatch {

/// A signature of arity n·ℓ read as n blocks of ℓ bits.
class BlockView {
 public:
  BlockView(const BooleanSignature& sig, unsigned ell);

  [[nodiscard]] const BooleanSignature& signature() const { return *sig_; }
  [[nodiscard]] unsigned ell() const { return ell_; }
  [[nodiscard]] unsigned blocks() const { return n_; }
  /// Block j (0-based) of α.
  [[nodiscard]] Index block(Index a, unsigned j) const { return block_of(a, ell_, n_, j); }
  [[nodiscard]] Index with(Index a, unsigned j, Index value) const {
    return with_block(a, ell_, n_, j, value);
  }
  const Scalar& operator[](Index a) const { return (*sig_)[a]; }

 private:
  const BooleanSignature* sig_;
  unsigned ell_;
  unsigned n_;
};

enum class ParityKind { kZero, kEven, kOdd, kViolated };

struct ParityVerdict {
  ParityKind kind = ParityKind::kZero;
  Index even_witness = 0;  // first nonzero entry of even weight (kViolated only)
  Index odd_witness = 0;   // first nonzero entry of odd weight (kViolated only)
};

/// Whether all odd-weight entries vanish (even), all even-weight ones do (odd), both, or neither.
ParityVerdict check_parity(const BooleanSignature& s);

/// Σ_{i=1}^{|P|} (−1)^i Γ^{α⊕e_{p_i}} Γ^{α⊕P⊕e_{p_i}} for P = {p_1 < … < p_k}, 1-based.
/// Throws PreconditionError when P is empty, unsorted, repeated or out of range.
Scalar mgi_residual(const BooleanSignature& s, Index alpha, const std::vector<unsigned>& positions);

struct MgiOptions {
  unsigned exhaustive_cap = 12;   // largest arity swept exhaustively
  bool allow_sampling = false;    // above the cap: sample instead of refusing
  std::uint64_t samples = 200000; // (α, P) pairs drawn in sampling mode
  std::uint64_t seed = 1;
};

struct MgiVerdict {
  bool pass = true;
  bool exhaustive = true;
  Index alpha = 0;      // witness pattern (failures only)
  Index positions = 0;  // witness position set as a mask (failures only)
  Scalar residual;      // exact residual at the witness
  std::uint64_t checked = 0;
};

/// Checks every matchgate identity. In exhaustive mode the reported witness is
/// the least failing (α, P), ordered by α's sorted 1-positions and then by P,
/// each compared lexicographically. Throws CapExceeded above the cap unless
/// sampling is allowed.
MgiVerdict check_mgi(const BooleanSignature& s, const MgiOptions& options = {});

struct SymmetryVerdict {
  bool symmetric = true;
  unsigned swap_block = 0;  // counterexample swaps blocks swap_block and swap_block+1 (0-based)
  Index index = 0;          // Γ^{index} differs from the entry with those blocks swapped
};

/// Invariance under adjacent block transpositions.
SymmetryVerdict is_blockwise_symmetric(const BlockView& v);

/// 2^ℓ × 2^{(n−1)ℓ} matrix with rows indexed by the first block and columns by the rest.
Matrix matrix_form(const BlockView& v);

struct DetVerdict {
  bool pass = true;
  char kind = 'A';  // 'A': blocks 2 and 3 each get one flip; 'B': block 2 gets two
  Index alpha = 0;
  unsigned i = 0, j = 0, s = 0, t = 0;  // 1-based in-block positions
  Scalar det;
  std::uint64_t checked = 0;
};

/// Evaluates the 2×2 determinants
///   A: Γ^{α}Γ^{(α₁+e_i+e_j)(α₂+e_s)(α₃+e_t)…} − Γ^{(α₁+e_i+e_j)α₂α₃…}Γ^{α₁(α₂+e_s)(α₃+e_t)…}, i<j
///   B: Γ^{α}Γ^{(α₁+e_i+e_j)(α₂+e_s+e_t)α₃…} − Γ^{(α₁+e_i+e_j)α₂α₃…}Γ^{α₁(α₂+e_s+e_t)α₃…}, i<j, s<t
/// over all α and reports the first nonzero one. Throws PreconditionError for n < 3.
DetVerdict check_det_identities(const BlockView& v);

struct MinPair {
  Index sigma = 0;
  Index tau = 0;
  unsigned weight = 0;
};

/// Among linearly independent row pairs of the matrix form (optionally only
/// pairs whose weights share parity), one minimizing wt(σ⊕τ); ties go to the
/// lexicographically least (σ, τ) with σ < τ.
std::optional<MinPair> find_min_weight_pair(const BlockView& v, bool same_parity);

/// Whether two equal-length scalar rows are linearly independent.
bool rows_independent(const Matrix& m, std::size_t r1, std::size_t r2);

}  // namespace holomatch
