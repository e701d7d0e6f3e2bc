#include "holomatch/decompose.hpp"

#include <string>

#include "holomatch/errors.hpp"
#include "holomatch/generators.hpp"

namespace holomatch {
namespace {

constexpr Index block_bit(unsigned ell, unsigned pos) { return Index{1} << (ell - pos); }

Index parity_index(const std::vector<Index>& blocks) {
  Index j = 0;
  for (Index b : blocks) j = (j << 1) | parity(b);
  return j;
}

std::vector<Index> split_blocks(Index a, unsigned ell, unsigned n) {
  std::vector<Index> out(n);
  for (unsigned j = 0; j < n; ++j) out[j] = block_of(a, ell, n, j);
  return out;
}

void require_rank(const Decomposition& d, unsigned rank, const char* what) {
  if (d.rank != rank)
    throw PreconditionError(std::string(what) + " needs a rank-" + std::to_string(rank) +
                            " decomposition, got rank " + std::to_string(d.rank));
}

void require_source(const Matchgate& source, const Decomposition& d) {
  if (source.arity() != d.n * d.ell) throw PreconditionError("gate arity does not match the decomposition");
  if (!(signature(source) == reconstruct_all(d)))
    throw PreconditionError("gate does not realize the decomposed signature");
}

}  // namespace

Decomposition decompose(const BlockView& v, const DecomposeOptions& options) {
  const unsigned ell = v.ell(), n = v.blocks();
  if (n < 3) throw PreconditionError("decomposition needs at least 3 blocks");
  const BooleanSignature& sig = v.signature();
  if (options.validate) {
    if (check_parity(sig).kind == ParityKind::kViolated)
      throw PreconditionError("signature violates the parity condition");
    if (!check_mgi(sig, options.mgi).pass)
      throw PreconditionError("signature violates a matchgate identity");
    if (!is_blockwise_symmetric(v).symmetric)
      throw PreconditionError("signature is not blockwise symmetric");
  }
  const Matrix m = matrix_form(v);
  const std::size_t rank = exact_rank(m);
  if (rank > 2)
    throw PreconditionError("rank " + std::to_string(rank) + " matrix form is not admissible");

  Decomposition d;
  d.rank = static_cast<unsigned>(rank);
  d.ell = ell;
  d.n = n;
  d.g.assign(std::size_t{1} << ell, Scalar());
  d.core = BooleanSignature(n);
  const unsigned colbits = (n - 1) * ell;
  if (rank == 0) return d;

  if (rank == 1) {
    d.anchor = sig.support().front();
    d.scale = sig[d.anchor];
    const Scalar inv = d.scale.inverse();
    d.beta = block_of(d.anchor, ell, n, 0);
    const Index cols = d.anchor & ((Index{1} << colbits) - 1);
    for (Index a = 0; a < d.g.size(); ++a) d.g[a] = sig[(a << colbits) | cols] * inv;
    d.base = sig[repeat_block(d.beta, ell, n)] * inv;
    d.core[parity(d.beta) ? d.core.size() - 1 : 0] = d.base;
    return d;
  }

  // Rank 2: first (θ, η) with θ < η differing in one bit, then the first
  // column γ₂⋯γₙ and shift e_t with both pivots nonzero.
  const Index rows = Index{1} << ell;
  bool found = false;
  for (Index theta = 0; theta < rows && !found; ++theta)
    for (unsigned s = ell; s >= 1 && !found; --s) {
      const Index eta = theta ^ block_bit(ell, s);
      if (eta < theta) continue;
      for (Index c = 0; c < m.cols() && !found; ++c) {
        if (m(theta, c).is_zero()) continue;
        for (unsigned t = 1; t <= ell; ++t) {
          const Index c2 = c ^ (Index{1} << (colbits - t));
          if (m(eta, c2).is_zero()) continue;
          d.theta = theta;
          d.eta = eta;
          d.columns = c;
          d.s = s;
          d.t = t;
          found = true;
          break;
        }
      }
    }
  if (!found) throw PreconditionError("no rank-2 pivot pair differing in one bit");

  const Index c2 = d.columns ^ (Index{1} << (colbits - d.t));
  d.scale = m(d.theta, d.columns);
  const Scalar inv = d.scale.inverse();
  d.r = m(d.eta, c2) * inv;
  const Scalar inv_r = (d.scale * d.r).inverse();
  for (Index a = 0; a < rows; ++a)
    d.g[a] = parity(a) == parity(d.theta) ? m(a, d.columns) * inv : m(a, c2) * inv_r;
  for (Index j = 0; j < d.core.size(); ++j) {
    Index a = 0;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned ji = static_cast<unsigned>((j >> (n - 1 - i)) & 1U);
      a = (a << ell) | (ji == parity(d.theta) ? d.theta : d.eta);
    }
    d.core[j] = sig[a] * inv;
  }
  return d;
}

Scalar reconstruct(const Decomposition& d, const std::vector<Index>& blocks) {
  if (blocks.size() != d.n) throw PreconditionError("block count does not match the decomposition");
  for (Index b : blocks)
    if (b >= d.g.size()) throw PreconditionError("block wider than the decomposition");
  if (d.rank == 0) return Scalar();
  Scalar p = d.scale;
  for (Index b : blocks) {
    if (d.g[b].is_zero()) return Scalar();
    p *= d.g[b];
  }
  return p * (d.rank == 1 ? d.base : d.core[parity_index(blocks)]);
}

BooleanSignature reconstruct_all(const Decomposition& d) {
  BooleanSignature out(d.n * d.ell);
  for (Index a = 0; a < out.size(); ++a) out[a] = reconstruct(d, split_blocks(a, d.ell, d.n));
  return out;
}

std::vector<Scalar> condensed_signature(const BooleanSignature& s) {
  if (s.arity() == 0) throw PreconditionError("condensed signature needs arity >= 1");
  const ParityVerdict pv = check_parity(s);
  if (pv.kind == ParityKind::kViolated) throw PreconditionError("signature violates the parity condition");
  const unsigned flip = pv.kind == ParityKind::kOdd ? 1U : 0U;
  std::vector<Scalar> g(s.size() / 2);
  for (Index a = 0; a < g.size(); ++a) g[a] = s[(a << 1) | (parity(a) ^ flip)];
  return g;
}

bool blocks_share_parity(const BlockView& v) {
  int seen = -1;
  for (Index a : v.signature().support())
    for (unsigned j = 0; j < v.blocks(); ++j) {
      const int p = static_cast<int>(parity(v.block(a, j)));
      if (seen < 0) seen = p;
      else if (seen != p) return false;
    }
  return true;
}

Matchgate scale_gate(const Matchgate& g, const Scalar& c) {
  const bool rotated = g.has_rotation();
  Matchgate h = g;
  const unsigned x = h.add_vertex(), y = h.add_vertex();
  h.add_edge(x, y, c);
  if (rotated) {
    auto rot = g.rotation_system();
    rot.push_back({y});
    rot.push_back({x});
    h.set_rotation_system(std::move(rot));
  }
  return h;
}

Matchgate condensed_witness(const Matchgate& source, const BlockView& v, const Decomposition& d,
                            WitnessMode mode) {
  const unsigned ell = d.ell, n = d.n, width = n * ell;
  if (mode == WitnessMode::kRankTwo) require_rank(d, 2, "rank-two condensed witness");
  else require_rank(d, 1, "rank-one condensed witness");
  if (v.ell() != ell || v.blocks() != n)
    throw PreconditionError("signature shape does not match the decomposition");
  if (!(signature(source) == v.signature()))
    throw PreconditionError("gate does not realize the signature");

  Matchgate h = source;
  const std::vector<unsigned> ext = source.externals();
  if (mode == WitnessMode::kRankOne) {
    for (unsigned pos = ell + 1; pos <= width; ++pos)
      if (bit_at(d.anchor, width, pos))
        h = attach_pendant(h, h.externals()[pos - 1], Scalar(1), PendantMode::kTransfer);
    std::vector<unsigned> keep(h.externals().begin(), h.externals().begin() + ell + 1);
    h = with_externals(h, std::move(keep));
    return scale_gate(h, d.scale.inverse());
  }

  const unsigned cols = (n - 1) * ell;
  const Index full = (d.theta << cols) | d.columns;
  const unsigned port = ell + d.t;
  for (unsigned pos = ell + 1; pos <= width; ++pos)
    if (pos != port && bit_at(full, width, pos))
      h = attach_pendant(h, ext[pos - 1], Scalar(1), PendantMode::kKeep);
  const Scalar rinv = d.r.inverse();
  const bool one = bit_at(full, width, port);
  h = attach_path2(h, ext[port - 1], one ? Scalar(1) : rinv, one ? rinv : Scalar(1),
                   PathMode::kEndExternal);
  std::vector<unsigned> keep(ext.begin(), ext.begin() + ell);
  keep.push_back(h.externals()[port - 1]);
  h = with_externals(h, std::move(keep));
  return scale_gate(h, d.scale.inverse());
}

Matchgate core_witness(const Matchgate& source, const Decomposition& d) {
  require_rank(d, 2, "core witness");
  require_source(source, d);
  const unsigned ell = d.ell, n = d.n;
  const unsigned pt = parity(d.theta);
  Matchgate h = source;
  for (unsigned b = 0; b < n; ++b)
    for (unsigned i = 1; i <= ell; ++i) {
      const unsigned pos = b * ell + i;
      const bool bit = bit_at(d.theta, ell, i);
      if (i != d.s && bit)
        h = attach_pendant(h, h.externals()[pos - 1], Scalar(1), PendantMode::kKeep);
      else if (i == d.s && static_cast<unsigned>(bit) != pt)
        h = attach_pendant(h, h.externals()[pos - 1], Scalar(1), PendantMode::kTransfer);
    }
  std::vector<unsigned> keep;
  for (unsigned b = 0; b < n; ++b) keep.push_back(h.externals()[b * ell + d.s - 1]);
  h = with_externals(h, std::move(keep));
  return scale_gate(h, d.scale.inverse());
}

Matchgate block_expand(const Matchgate& core, const Matchgate& gadget) {
  if (core.arity() == 0) throw PreconditionError("core gate has no externals");
  if (gadget.arity() < 2) throw PreconditionError("gadget needs arity >= 2");
  if (!is_blockwise_symmetric(BlockView(signature(core), 1)).symmetric)
    throw PreconditionError("core signature is not bitwise symmetric");
  Matchgate cur = core;
  for (unsigned k = 0; k < core.arity(); ++k)
    cur = compose(cur, gadget, {{cur.externals().front(), gadget.externals().back()}});
  return cur;
}

Matchgate symmetric_core(CoreFamily family, unsigned n, const Scalar& a, const Scalar& b) {
  if (n == 0) throw PreconditionError("core arity must be positive");
  std::vector<Point> pts;
  Matchgate g;
  std::vector<unsigned> ext;
  switch (family) {
    case CoreFamily::kStar: {
      g = Matchgate(n + 1);
      // externals on a convex curve in counterclockwise order around the center
      static const Point ring[] = {{2, 0}, {1, 2}, {0, 3}, {-1, 2}, {-2, 0}, {-1, -2}, {0, -3}, {1, -2}};
      if (n > 8) throw PreconditionError("star core supports at most 8 externals");
      const unsigned step = 8 / n;
      for (unsigned k = 0; k < n; ++k) {
        pts.push_back(ring[k * step]);
        g.add_edge(n, k, a);
        ext.push_back(k);
      }
      pts.push_back({0, 0});
      break;
    }
    case CoreFamily::kWheel3:
    case CoreFamily::kTriangle: {
      if (n != 3) throw PreconditionError("triangle cores have arity 3");
      const bool wheel = family == CoreFamily::kWheel3;
      g = Matchgate(wheel ? 4 : 3);
      pts = {{2, 0}, {-1, 2}, {-1, -2}};
      const Scalar rim = wheel ? b : a;
      g.add_edge(0, 1, rim);
      g.add_edge(1, 2, rim);
      g.add_edge(2, 0, rim);
      if (wheel) {
        pts.push_back({0, 0});
        for (unsigned k = 0; k < 3; ++k) g.add_edge(3, k, a);
      }
      ext = {0, 1, 2};
      break;
    }
    case CoreFamily::kPendants:
    case CoreFamily::kPaths: {
      const unsigned len = family == CoreFamily::kPendants ? 2 : 3;
      g = Matchgate(n * len);
      for (unsigned k = 0; k < n; ++k) {
        for (unsigned j = 0; j < len; ++j) pts.push_back({static_cast<std::int64_t>(3 * k), static_cast<std::int64_t>(j)});
        if (len == 2) {
          g.add_edge(k * len, k * len + 1, a);
        } else {
          g.add_edge(k * len, k * len + 1, 1);
          g.add_edge(k * len + 1, k * len + 2, a);
        }
        ext.push_back(k * len);
      }
      break;
    }
  }
  set_rotation_from_points(g, pts);
  g.set_externals(std::move(ext));
  return g;
}

Matchgate random_symmetric_core(Rng& rng, unsigned n) {
  const Scalar a = random_weight(rng), b = random_weight(rng);
  // Mostly rank-2 families, with tensor cores for rank 1.
  const std::uint64_t pick = rng.below(10);
  if (n == 3 && pick < 3) return symmetric_core(pick == 0 ? CoreFamily::kTriangle : CoreFamily::kWheel3, 3, a, b);
  if (pick < 7) return symmetric_core(CoreFamily::kStar, n, a, b);
  return symmetric_core(pick < 9 ? CoreFamily::kPendants : CoreFamily::kPaths, n, a, b);
}

Matchgate random_gadget(Rng& rng, unsigned ell, unsigned max_vertices) {
  return random_plane_gate(rng, std::max(max_vertices, ell + 1), ell + 1, ell + 1);
}

Matchgate random_block_gate(Rng& rng, unsigned n, unsigned ell) {
  const Matchgate core = random_symmetric_core(rng, n);
  return block_expand(core, random_gadget(rng, ell));
}

}  // namespace holomatch
