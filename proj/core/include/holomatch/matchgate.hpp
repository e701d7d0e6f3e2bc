#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "holomatch/scalar.hpp"
#include "holomatch/signature.hpp"

namespace holomatch {

struct Edge {
  unsigned u = 0;
  unsigned v = 0;
  Scalar w;
};

/// Weighted plane graph with an ordered list of external nodes.
///
/// Vertices are 0-based here (files use 1-based ids). The rotation system lists
/// each vertex's neighbours counterclockwise. It is optional for brute-force
/// work and required for the FKT path and for surgery that must stay planar.
/// A gate whose vertices all have degree ≤ 2 has a unique rotation system and
/// reports one without it being set.
class Matchgate {
 public:
  Matchgate() = default;
  explicit Matchgate(unsigned vertex_count);

  /// Appends an isolated vertex and returns its id.
  unsigned add_vertex();

  [[nodiscard]] unsigned vertex_count() const { return static_cast<unsigned>(adj_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] unsigned degree(unsigned v) const { return static_cast<unsigned>(adj_[v].size()); }

  /// Adds an undirected edge; rejects self-loops, parallel edges and bad ids.
  std::size_t add_edge(unsigned u, unsigned v, Scalar w);
  [[nodiscard]] std::optional<std::size_t> edge_between(unsigned u, unsigned v) const;
  /// (neighbour, edge id) pairs in insertion order.
  [[nodiscard]] const std::vector<std::pair<unsigned, std::size_t>>& incident(unsigned v) const {
    return adj_[v];
  }

  [[nodiscard]] bool has_rotation() const;
  [[nodiscard]] const std::vector<unsigned>& rotation(unsigned v) const { return rot_[v]; }
  [[nodiscard]] const std::vector<std::vector<unsigned>>& rotation_system() const { return rot_; }
  /// Installs a full rotation system after checking that each list is a
  /// permutation of the vertex's neighbours.
  void set_rotation_system(std::vector<std::vector<unsigned>> rot);

  [[nodiscard]] const std::vector<unsigned>& externals() const { return externals_; }
  [[nodiscard]] unsigned arity() const { return static_cast<unsigned>(externals_.size()); }
  [[nodiscard]] bool is_external(unsigned v) const;
  /// 0-based position of v in the external list, or -1.
  [[nodiscard]] int external_position(unsigned v) const;
  void set_externals(std::vector<unsigned> externals);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<unsigned, std::size_t>>> adj_;
  std::vector<std::vector<unsigned>> rot_;
  std::vector<unsigned> externals_;
  bool rotation_set_ = true;
};

/// Largest vertex count accepted by the bitmask backtracking routines.
inline constexpr unsigned kMaxBacktrackVertices = 64;

/// Σ over perfect matchings of the product of edge weights; 1 for the empty graph.
Scalar perfmatch_bruteforce(const Matchgate& g);

/// Γ^α = PerfMatch(G − Z) where Z is the set of external nodes whose bit in α is 1.
/// Every (Z, matching) pair is enumerated once by backtracking.
BooleanSignature signature(const Matchgate& g);

/// Finds one perfect matching (as edge ids) by backtracking on the lowest unmatched vertex.
std::optional<std::vector<std::size_t>> find_perfect_matching(const Matchgate& g);

/// Deletes the listed vertices and their edges; survivors keep their relative order.
Matchgate remove_vertices(const Matchgate& g, const std::vector<unsigned>& vertices);

/// Re-selects the external nodes (any vertices, in the given order).
Matchgate with_externals(const Matchgate& g, std::vector<unsigned> externals);

/// What happens to external status when a pendant edge is attached at v.
enum class PendantMode {
  kTransfer,  // the new vertex takes v's place in the external list
  kRevoke,    // v leaves the external list, the new vertex is internal
  kKeep,      // v stays external, the new vertex is internal
};

/// Joins a new vertex to external node v with weight w. The new edge goes into
/// v's rotation at its corner on the external face. The new vertex is the last one.
Matchgate attach_pendant(const Matchgate& g, unsigned v, const Scalar& w, PendantMode mode);

enum class PathMode {
  kEndExternal,  // v₃ takes v's place in the external list
  kAllInternal,  // v leaves the external list; v₂ and v₃ are internal
  kKeep,         // v stays external
};

/// Attaches a path v – v₂ – v₃ with weights w1 on (v, v₂) and w2 on (v₂, v₃).
Matchgate attach_path2(const Matchgate& g, unsigned v, const Scalar& w1, const Scalar& w2,
                       PathMode mode);

/// Disjoint union of a and b plus a weight-1 edge per (external of a, external of b)
/// pair. Paired nodes become internal; the remaining externals are a's then b's.
/// b's vertices are renumbered after a's. If both gates carry rotation systems,
/// each new edge is inserted at the external-face corners and the result must
/// pass the Euler check.
Matchgate compose(const Matchgate& a, const Matchgate& b,
                  const std::vector<std::pair<unsigned, unsigned>>& pairs);

}  // namespace holomatch
