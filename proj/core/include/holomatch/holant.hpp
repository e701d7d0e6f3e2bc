#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "holomatch/holographic.hpp"
#include "holomatch/matchgate.hpp"

namespace holomatch {

/// Default limit on q^{|E|} assignments for brute-force Holant sums.
inline constexpr std::uint64_t kDefaultHolantCap = std::uint64_t{1} << 24;

struct GridVertex {
  std::string id;
  bool u_side = true;               // row side F (true) or column side G
  DomainSignature sig;
  std::vector<std::size_t> order;   // incident edge ids, counterclockwise; argument k ↔ order[k]
};

struct GridEdge {
  std::size_t u = 0;  // vertex on the U side
  std::size_t v = 0;  // vertex on the V side
};

/// Bipartite signature grid Ω over domain [q].
class SignatureGrid {
 public:
  explicit SignatureGrid(unsigned q = 2) : q_(q) {}

  [[nodiscard]] unsigned domain() const { return q_; }
  [[nodiscard]] const std::vector<GridVertex>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<GridEdge>& edges() const { return edges_; }
  [[nodiscard]] const GridVertex& vertex(std::size_t k) const { return vertices_[k]; }

  std::size_t add_vertex(std::string id, bool u_side, DomainSignature sig);
  /// Appends the edge to both endpoints' orders.
  std::size_t add_edge(std::size_t u, std::size_t v);
  void set_order(std::size_t vertex, std::vector<std::size_t> edges);
  void set_signature(std::size_t vertex, DomainSignature sig);
  /// Index of the vertex with this id, or vertex_count() when absent.
  [[nodiscard]] std::size_t find(const std::string& id) const;

  /// Throws PreconditionError unless every signature is over [q] with arity
  /// equal to the degree and every order lists exactly the incident edges.
  void validate() const;

 private:
  unsigned q_;
  std::vector<GridVertex> vertices_;
  std::vector<GridEdge> edges_;
};

/// Σ_{σ: E → [q]} Π_v f_v(σ|E(v)); throws CapExceeded when q^{|E|} > cap.
Scalar holant_bruteforce(const SignatureGrid& grid, std::uint64_t cap = kDefaultHolantCap);

/// Disjoint union of the gates with one weight-1 edge per grid edge between the
/// matching external nodes, inserted at external-face corners and Euler-checked.
Matchgate close_grid(const SignatureGrid& grid, const std::vector<Matchgate>& gates);

/// PerfMatch of close_grid by FKT. Boolean grids only; every gate's signature
/// must equal its vertex's signature.
Scalar holant_fkt(const SignatureGrid& grid, const std::vector<Matchgate>& gates);

/// Both sides of Holant(F|G) = Holant(FM | M̌G).
struct HolantTheoremVerdict {
  bool pass = false;
  Scalar lhs;
  Scalar rhs;        // right side after dividing by scale^{|E|}
  Scalar scale = 1;  // c with M·M̌ = c·I
};

/// Uses M̌ = right_inverse(m).
HolantTheoremVerdict verify_holant_theorem(const SignatureGrid& grid, const TransformMatrix& m,
                                           std::uint64_t cap = kDefaultHolantCap);
/// Uses a given 2^ℓ × q matrix with M·inverse = c·I_q, c ≠ 0.
HolantTheoremVerdict verify_holant_theorem(const SignatureGrid& grid, const TransformMatrix& m,
                                           const Matrix& inverse,
                                           std::uint64_t cap = kDefaultHolantCap);

/// U side replaced by fM^{⊗n}, V side by M̌^{⊗n}g; domain becomes 2^ℓ.
SignatureGrid transform_grid(const SignatureGrid& grid, const TransformMatrix& m, const Matrix& inverse);

struct CspConstraint {
  DomainSignature f;
  std::vector<unsigned> vars;  // argument k is variable vars[k] (0-based)
};

struct CspInstance {
  unsigned q = 2;
  unsigned variables = 0;
  std::vector<CspConstraint> constraints;
};

/// Σ over assignments of Π constraints.
Scalar csp_bruteforce(const CspInstance& csp, std::uint64_t cap = kDefaultHolantCap);

/// One U vertex (=_deg) per variable and one V vertex per constraint, an edge
/// per occurrence. A variable with no occurrence becomes an arity-0 vertex of
/// value q.
SignatureGrid csp_to_holant(const CspInstance& csp);

/// Exactly one argument equal to 1, over the Boolean domain.
DomainSignature exact_one(unsigned k);

/// Star with subdivided arms: realizes exact_one(k) for k ≥ 1.
Matchgate exact_one_gate(unsigned k);

/// Four-cycle grid with Exact-One at every vertex; Holant value 2.
SignatureGrid c4_exact_one_grid();

struct MatchgateGrid {
  SignatureGrid grid;
  std::vector<Matchgate> gates;
};

/// Random plane graph with every edge subdivided; original vertices on the U
/// side, subdivision vertices on the V side, each carrying a random plane gate
/// of matching arity and its signature.
MatchgateGrid random_matchgate_grid(Rng& rng, unsigned max_vertices, unsigned max_gate_vertices = 6);

/// Random bipartite grid over [q]: `edges` edges between small vertex sets with
/// random integer signatures.
SignatureGrid random_grid(Rng& rng, unsigned q, unsigned edges);

}  // namespace holomatch
