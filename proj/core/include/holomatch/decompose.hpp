#pragma once

#include <vector>

#include "holomatch/matchgate.hpp"
#include "holomatch/random.hpp"
#include "holomatch/signature_algebra.hpp"

namespace holomatch {

/// Γ^{α₁…αₙ} = scale · g_{α₁}⋯g_{αₙ} · Γ_S^{p(α₁)…p(αₙ)} for a blockwise
/// symmetric matchgate signature with n ≥ 3 blocks.
struct Decomposition {
  unsigned rank = 0;  // rank of M(Γ): 0, 1 or 2
  unsigned ell = 0;
  unsigned n = 0;
  Scalar scale;             // entry of Γ normalized to 1
  std::vector<Scalar> g;    // condensed vector, 2^ℓ entries
  BooleanSignature core;    // Γ_S, arity n; rank 1: base at p(β)…p(β), zero elsewhere

  // rank 1
  Index anchor = 0;  // β₁β₂⋯βₙ, the first nonzero entry
  Index beta = 0;    // β₁
  Scalar base;       // normalized Γ^{ββ⋯β}

  // rank 2
  Index theta = 0;
  Index eta = 0;      // θ + η = e_s
  Index columns = 0;  // γ₂⋯γₙ as a column of M(Γ)
  unsigned s = 0;     // 1-based bit where θ and η differ
  unsigned t = 0;     // 1-based bit of γ₂ shifted for the η pivot
  Scalar r;           // normalized Γ^{η(γ₂+e_t)⋯γₙ}
};

struct DecomposeOptions {
  bool validate = true;  // require parity, MGI and blockwise symmetry first
  MgiOptions mgi;
};

/// Throws PreconditionError when n < 3, a validation verdict fails, rank ≥ 3,
/// or no rank-2 pivot pair exists.
Decomposition decompose(const BlockView& v, const DecomposeOptions& options = {});

/// Evaluates the product formula at the given blocks (rank 1 uses Γ^{β⋯β}).
Scalar reconstruct(const Decomposition& d, const std::vector<Index>& blocks);

/// reconstruct at every index, as a signature of arity nℓ.
BooleanSignature reconstruct_all(const Decomposition& d);

/// g_α = Γ^{α p(α)} for even Γ, Γ^{α p̄(α)} for odd Γ; arity ≥ 1.
std::vector<Scalar> condensed_signature(const BooleanSignature& s);

/// True when every block of every nonzero entry has the same parity.
bool blocks_share_parity(const BlockView& v);

enum class WitnessMode {
  kRankTwo,  // path surgery at position ℓ+t plus pendants at θγ₂⋯γₙ
  kRankOne,  // pendants at β₂⋯βₙ, keeping block 1 and the first node of block 2
};

/// Arity-(ℓ+1) gate whose condensed signature is d.g. `source` must realize v.
Matchgate condensed_witness(const Matchgate& source, const BlockView& v, const Decomposition& d,
                            WitnessMode mode = WitnessMode::kRankTwo);

/// Arity-n gate realizing d.core, for rank-2 decompositions of source's signature.
Matchgate core_witness(const Matchgate& source, const Decomposition& d);

/// Multiplies every entry of g's signature by c through a disjoint internal edge.
Matchgate scale_gate(const Matchgate& g, const Scalar& c);

/// One copy of gadget per external of core, joined at the gadget's last
/// external. Block j of the result is copy j's remaining ℓ externals.
Matchgate block_expand(const Matchgate& core, const Matchgate& gadget);

enum class CoreFamily {
  kStar,         // internal center joined to every external: exactly one external kept
  kWheel3,       // triangle of externals around an internal center (n = 3)
  kTriangle,     // triangle of externals (n = 3)
  kPendants,     // (λ, 0)^{⊗n}
  kPaths,        // (0, λ)^{⊗n}
};

/// Bitwise symmetric plane gate of arity n from a family; weights a and b
/// where the family has two kinds of edge.
Matchgate symmetric_core(CoreFamily family, unsigned n, const Scalar& a, const Scalar& b = 1);

Matchgate random_symmetric_core(Rng& rng, unsigned n);

/// Random plane gate of arity ℓ+1 on at most max_vertices vertices.
Matchgate random_gadget(Rng& rng, unsigned ell, unsigned max_vertices = 7);

/// block_expand of a random symmetric core and a random gadget.
Matchgate random_block_gate(Rng& rng, unsigned n, unsigned ell);

}  // namespace holomatch
