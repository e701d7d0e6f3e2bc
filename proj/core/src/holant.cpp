#include "holomatch/holant.hpp"

#include <algorithm>
#include <functional>

#include "holomatch/embedding.hpp"
#include "holomatch/errors.hpp"
#include "holomatch/fkt.hpp"
#include "holomatch/generators.hpp"

namespace holomatch {
namespace {

// q^k, or cap + 1 once it passes cap.
std::uint64_t bounded_power(std::uint64_t q, std::size_t k, std::uint64_t cap) {
  std::uint64_t x = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (q != 0 && x > cap / q) return cap + 1;
    x *= q;
  }
  return x;
}

}  // namespace

std::size_t SignatureGrid::add_vertex(std::string id, bool u_side, DomainSignature sig) {
  vertices_.push_back({std::move(id), u_side, std::move(sig), {}});
  return vertices_.size() - 1;
}

std::size_t SignatureGrid::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw PreconditionError("edge endpoint out of range");
  if (!vertices_[u].u_side || vertices_[v].u_side)
    throw PreconditionError("grid edges join a U vertex to a V vertex");
  edges_.push_back({u, v});
  vertices_[u].order.push_back(edges_.size() - 1);
  vertices_[v].order.push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

void SignatureGrid::set_order(std::size_t vertex, std::vector<std::size_t> edges) {
  if (vertex >= vertices_.size()) throw PreconditionError("vertex out of range");
  std::vector<std::size_t> a = edges, b;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].u == vertex || edges_[e].v == vertex) b.push_back(e);
  std::sort(a.begin(), a.end());
  if (a != b)
    throw PreconditionError("order of vertex " + vertices_[vertex].id + " must list its incident edges");
  vertices_[vertex].order = std::move(edges);
}

void SignatureGrid::set_signature(std::size_t vertex, DomainSignature sig) {
  if (vertex >= vertices_.size()) throw PreconditionError("vertex out of range");
  vertices_[vertex].sig = std::move(sig);
}

std::size_t SignatureGrid::find(const std::string& id) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    if (vertices_[k].id == id) return k;
  return vertices_.size();
}

void SignatureGrid::validate() const {
  std::vector<std::size_t> degree(vertices_.size(), 0);
  for (const GridEdge& e : edges_) {
    if (!vertices_[e.u].u_side || vertices_[e.v].u_side)
      throw PreconditionError("grid edges join a U vertex to a V vertex");
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    const GridVertex& x = vertices_[k];
    if (x.sig.domain() != q_) throw PreconditionError("signature of " + x.id + " has the wrong domain");
    if (x.sig.arity() != degree[k])
      throw PreconditionError("signature of " + x.id + " has arity " + std::to_string(x.sig.arity()) +
                              " but degree " + std::to_string(degree[k]));
    if (x.order.size() != degree[k]) throw PreconditionError("order of " + x.id + " has the wrong length");
    for (std::size_t e : x.order)
      if (e >= edges_.size() || (edges_[e].u != k && edges_[e].v != k))
        throw PreconditionError("order of " + x.id + " lists a foreign edge");
  }
}

Scalar holant_bruteforce(const SignatureGrid& grid, std::uint64_t cap) {
  grid.validate();
  const std::size_t m = grid.edges().size();
  const unsigned q = grid.domain();
  if (bounded_power(q, m, cap) > cap)
    throw CapExceeded(std::to_string(q) + "^" + std::to_string(m) + " assignments exceed the cap");

  // Each vertex is evaluated once its last edge (in edge order) is assigned.
  std::vector<std::vector<std::size_t>> ready(m + 1);
  for (std::size_t k = 0; k < grid.vertices().size(); ++k) {
    const auto& ord = grid.vertex(k).order;
    const std::size_t last = ord.empty() ? 0 : *std::max_element(ord.begin(), ord.end()) + 1;
    ready[last].push_back(k);
  }
  std::vector<unsigned> sigma(m, 0);
  auto value = [&](std::size_t k) -> const Scalar& {
    const GridVertex& x = grid.vertex(k);
    std::size_t idx = 0;
    for (std::size_t e : x.order) idx = idx * q + sigma[e];
    return x.sig[idx];
  };
  Scalar start = 1;
  for (std::size_t k : ready[0]) start *= value(k);
  if (start.is_zero()) return start;

  Scalar total;
  std::function<void(std::size_t, const Scalar&)> walk = [&](std::size_t e, const Scalar& acc) {
    if (e == m) {
      total += acc;
      return;
    }
    for (unsigned x = 0; x < q; ++x) {
      sigma[e] = x;
      Scalar next = acc;
      for (std::size_t k : ready[e + 1]) {
        const Scalar& f = value(k);
        if (f.is_zero()) {
          next = Scalar();
          break;
        }
        next *= f;
      }
      if (!next.is_zero()) walk(e + 1, next);
    }
  };
  walk(0, start);
  return total;
}

Matchgate close_grid(const SignatureGrid& grid, const std::vector<Matchgate>& gates) {
  grid.validate();
  const auto& vs = grid.vertices();
  if (gates.size() != vs.size()) throw PreconditionError("one gate per grid vertex required");
  std::vector<unsigned> offset(vs.size() + 1, 0);
  std::vector<std::vector<Corner>> corners(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (gates[k].arity() != vs[k].order.size())
      throw PreconditionError("gate for " + vs[k].id + " has the wrong arity");
    if (!gates[k].has_rotation()) throw PlanarityError("gate for " + vs[k].id + " has no rotation system");
    auto c = external_corners(gates[k]);
    if (!c) throw PlanarityError("external nodes of the gate for " + vs[k].id + " are not on a common face");
    corners[k] = std::move(*c);
    offset[k + 1] = offset[k] + gates[k].vertex_count();
  }
  Matchgate h(offset.back());
  std::vector<std::vector<unsigned>> rot(offset.back());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const unsigned o = offset[k];
    for (const Edge& e : gates[k].edges()) h.add_edge(e.u + o, e.v + o, e.w);
    for (unsigned x = 0; x < gates[k].vertex_count(); ++x)
      for (unsigned y : gates[k].rotation(x)) rot[x + o].push_back(y + o);
  }
  // Endpoint of edge e at vertex k: the external node at e's place in k's order.
  auto endpoint = [&](std::size_t k, std::size_t e, Corner* c) {
    const auto& ord = vs[k].order;
    const std::size_t pos = static_cast<std::size_t>(std::find(ord.begin(), ord.end(), e) - ord.begin());
    *c = corners[k][pos];
    c->vertex += offset[k];
    c->after += offset[k];
    return gates[k].externals()[pos] + offset[k];
  };
  for (std::size_t e = 0; e < grid.edges().size(); ++e) {
    Corner cu, cv;
    const unsigned x = endpoint(grid.edges()[e].u, e, &cu);
    const unsigned y = endpoint(grid.edges()[e].v, e, &cv);
    h.add_edge(x, y, Scalar(1));
    insert_at_corner(rot[x], cu, y);
    insert_at_corner(rot[y], cv, x);
  }
  h.set_rotation_system(std::move(rot));
  if (!euler_check(h)) throw PlanarityError("closed grid is not planar with the given orders");
  return h;
}

Scalar holant_fkt(const SignatureGrid& grid, const std::vector<Matchgate>& gates) {
  if (grid.domain() != 2) throw PreconditionError("matchgate grids are Boolean");
  grid.validate();
  if (gates.size() != grid.vertices().size()) throw PreconditionError("one gate per grid vertex required");
  for (std::size_t k = 0; k < gates.size(); ++k)
    if (!(signature(gates[k]) == grid.vertex(k).sig.to_boolean()))
      throw PreconditionError("gate for " + grid.vertex(k).id + " does not realize its signature");
  return perfmatch_fkt(close_grid(grid, gates));
}

SignatureGrid transform_grid(const SignatureGrid& grid, const TransformMatrix& m, const Matrix& inverse) {
  if (grid.domain() != m.q()) throw PreconditionError("transform matrix has the wrong number of rows");
  if (inverse.rows() != m.matrix().cols() || inverse.cols() != m.q())
    throw PreconditionError("inverse has the wrong shape");
  const Matrix back = inverse.transpose();
  SignatureGrid out(static_cast<unsigned>(m.matrix().cols()));
  for (const GridVertex& x : grid.vertices())
    out.add_vertex(x.id, x.u_side, apply_each(x.sig, x.u_side ? m.matrix() : back));
  for (const GridEdge& e : grid.edges()) out.add_edge(e.u, e.v);
  for (std::size_t k = 0; k < grid.vertices().size(); ++k) out.set_order(k, grid.vertex(k).order);
  return out;
}

HolantTheoremVerdict verify_holant_theorem(const SignatureGrid& grid, const TransformMatrix& m,
                                           std::uint64_t cap) {
  if (!m.full_rank()) throw PreconditionError("transform matrix is rank deficient");
  return verify_holant_theorem(grid, m, right_inverse(m), cap);
}

HolantTheoremVerdict verify_holant_theorem(const SignatureGrid& grid, const TransformMatrix& m,
                                           const Matrix& inverse, std::uint64_t cap) {
  if (!m.full_rank()) throw PreconditionError("transform matrix is rank deficient");
  if (inverse.rows() != m.matrix().cols() || inverse.cols() != m.q())
    throw PreconditionError("inverse has the wrong shape");
  const Matrix p = m.matrix() * inverse;
  HolantTheoremVerdict v;
  v.scale = p(0, 0);
  bool scalar_identity = !v.scale.is_zero();
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (!(p(r, c) == (r == c ? v.scale : Scalar()))) scalar_identity = false;
  if (!scalar_identity)
    throw PreconditionError("M times the inverse is not a nonzero multiple of the identity");
  v.lhs = holant_bruteforce(grid, cap);
  Scalar raw = holant_bruteforce(transform_grid(grid, m, inverse), cap);
  Scalar power = 1;
  for (std::size_t e = 0; e < grid.edges().size(); ++e) power *= v.scale;
  v.rhs = raw / power;
  v.pass = v.lhs == v.rhs;
  return v;
}

Scalar csp_bruteforce(const CspInstance& csp, std::uint64_t cap) {
  if (bounded_power(csp.q, csp.variables, cap) > cap) throw CapExceeded("too many #CSP assignments");
  for (const CspConstraint& c : csp.constraints) {
    if (c.f.domain() != csp.q || c.f.arity() != c.vars.size())
      throw PreconditionError("constraint arity does not match its variable list");
    for (unsigned x : c.vars)
      if (x >= csp.variables) throw PreconditionError("constraint names an unknown variable");
  }
  std::vector<unsigned> val(csp.variables, 0);
  Scalar total;
  for (;;) {
    Scalar p = 1;
    for (const CspConstraint& c : csp.constraints) {
      std::size_t idx = 0;
      for (unsigned x : c.vars) idx = idx * csp.q + val[x];
      p *= c.f[idx];
      if (p.is_zero()) break;
    }
    total += p;
    std::size_t k = 0;
    while (k < val.size() && ++val[k] == csp.q) val[k++] = 0;
    if (k == val.size()) break;
  }
  return total;
}

SignatureGrid csp_to_holant(const CspInstance& csp) {
  std::vector<unsigned> deg(csp.variables, 0);
  for (const CspConstraint& c : csp.constraints) {
    if (c.f.domain() != csp.q || c.f.arity() != c.vars.size())
      throw PreconditionError("constraint arity does not match its variable list");
    for (unsigned x : c.vars) {
      if (x >= csp.variables) throw PreconditionError("constraint names an unknown variable");
      ++deg[x];
    }
  }
  SignatureGrid g(csp.q);
  for (unsigned x = 0; x < csp.variables; ++x)
    g.add_vertex("x" + std::to_string(x + 1), true,
                 deg[x] == 0 ? DomainSignature(csp.q, 0, {Scalar(static_cast<long>(csp.q))})
                             : equality(csp.q, deg[x]));
  for (std::size_t k = 0; k < csp.constraints.size(); ++k) {
    const std::size_t v = g.add_vertex("c" + std::to_string(k + 1), false, csp.constraints[k].f);
    for (unsigned x : csp.constraints[k].vars) g.add_edge(x, v);
  }
  return g;
}

DomainSignature exact_one(unsigned k) {
  DomainSignature f(2, k);
  for (unsigned j = 0; j < k; ++j) f[std::size_t{1} << j] = 1;
  return f;
}

Matchgate exact_one_gate(unsigned k) {
  static const Point dirs[] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  if (k == 0 || k > 8) throw PreconditionError("exact-one gates have arity 1..8");
  Matchgate g(2 * k + 1);
  std::vector<Point> pts(2 * k + 1);
  std::vector<unsigned> ext;
  for (unsigned i = 0; i < k; ++i) {
    g.add_edge(0, 1 + i, 1);
    g.add_edge(1 + i, 1 + k + i, 1);
    pts[1 + i] = dirs[i];
    pts[1 + k + i] = {2 * dirs[i].x, 2 * dirs[i].y};
    ext.push_back(1 + k + i);
  }
  set_rotation_from_points(g, pts);
  g.set_externals(std::move(ext));
  return g;
}

SignatureGrid c4_exact_one_grid() {
  SignatureGrid g(2);
  const std::size_t u1 = g.add_vertex("u1", true, exact_one(2));
  const std::size_t u2 = g.add_vertex("u2", true, exact_one(2));
  const std::size_t v1 = g.add_vertex("v1", false, exact_one(2));
  const std::size_t v2 = g.add_vertex("v2", false, exact_one(2));
  g.add_edge(u1, v1);
  g.add_edge(u2, v1);
  g.add_edge(u2, v2);
  g.add_edge(u1, v2);
  return g;
}

MatchgateGrid random_matchgate_grid(Rng& rng, unsigned max_vertices, unsigned max_gate_vertices) {
  const Matchgate base = random_plane_graph(rng, max_vertices);
  MatchgateGrid out;
  const unsigned nv = base.vertex_count();
  // Signatures are filled in once the orders are known.
  for (unsigned x = 0; x < nv; ++x) {
    const unsigned arity = base.degree(x);
    out.grid.add_vertex("u" + std::to_string(x + 1), true, DomainSignature());
    out.gates.push_back(random_plane_gate(rng, std::max(max_gate_vertices, arity + 2), arity, arity));
  }
  std::vector<std::size_t> sub(base.edges().size());
  for (std::size_t e = 0; e < base.edges().size(); ++e) {
    out.grid.add_vertex("s" + std::to_string(e + 1), false, DomainSignature());
    out.gates.push_back(random_plane_gate(rng, std::max(max_gate_vertices, 4U), 2, 2));
    sub[e] = nv + e;
  }
  // Each base edge {a, b} becomes a – s – b; grid edge ids 2e (a side) and 2e+1 (b side).
  for (std::size_t e = 0; e < base.edges().size(); ++e) {
    out.grid.add_edge(base.edges()[e].u, sub[e]);
    out.grid.add_edge(base.edges()[e].v, sub[e]);
  }
  for (unsigned x = 0; x < nv; ++x) {
    std::vector<std::size_t> ord;
    for (unsigned y : base.rotation(x)) {
      const std::size_t e = *base.edge_between(x, y);
      ord.push_back(2 * e + (base.edges()[e].u == x ? 0 : 1));
    }
    out.grid.set_order(x, std::move(ord));
  }
  for (std::size_t k = 0; k < out.gates.size(); ++k)
    out.grid.set_signature(k, DomainSignature::from_boolean(signature(out.gates[k]), 1));
  return out;
}

SignatureGrid random_grid(Rng& rng, unsigned q, unsigned edges) {
  SignatureGrid g(q);
  const unsigned nu = static_cast<unsigned>(rng.range(1, 3)), nv = static_cast<unsigned>(rng.range(1, 3));
  for (unsigned k = 0; k < nu; ++k) g.add_vertex("u" + std::to_string(k + 1), true, DomainSignature(q, 0));
  for (unsigned k = 0; k < nv; ++k) g.add_vertex("v" + std::to_string(k + 1), false, DomainSignature(q, 0));
  for (unsigned e = 0; e < edges; ++e) g.add_edge(rng.below(nu), nu + rng.below(nv));
  for (std::size_t k = 0; k < nu + nv; ++k) {
    DomainSignature f(q, static_cast<unsigned>(g.vertex(k).order.size()));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Scalar(rng.range(-2, 2));
    g.set_signature(k, std::move(f));
  }
  return g;
}

}  // namespace holomatch
