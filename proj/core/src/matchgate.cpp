#include "holomatch/matchgate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "holomatch/embedding.hpp"
#include "holomatch/errors.hpp"

namespace holomatch {

Matchgate::Matchgate(unsigned vertex_count) : adj_(vertex_count), rot_(vertex_count) {}

unsigned Matchgate::add_vertex() {
  adj_.emplace_back();
  rot_.emplace_back();
  return vertex_count() - 1;
}

std::size_t Matchgate::add_edge(unsigned u, unsigned v, Scalar w) {
  if (u >= vertex_count() || v >= vertex_count())
    throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u + 1));
  if (edge_between(u, v))
    throw PreconditionError("parallel edge " + std::to_string(u + 1) + "-" +
                            std::to_string(v + 1) + " (merge by summing weights)");
  const std::size_t id = edges_.size();
  edges_.push_back({u, v, std::move(w)});
  adj_[u].emplace_back(v, id);
  adj_[v].emplace_back(u, id);
  rot_[u].push_back(v);
  rot_[v].push_back(u);
  rotation_set_ = false;
  return id;
}

std::optional<std::size_t> Matchgate::edge_between(unsigned u, unsigned v) const {
  for (const auto& [x, id] : adj_[u])
    if (x == v) return id;
  return std::nullopt;
}

bool Matchgate::has_rotation() const {
  if (rotation_set_) return true;
  return std::all_of(adj_.begin(), adj_.end(), [](const auto& a) { return a.size() <= 2; });
}

void Matchgate::set_rotation_system(std::vector<std::vector<unsigned>> rot) {
  if (rot.size() != vertex_count())
    throw PreconditionError("rotation system must list every vertex");
  for (unsigned v = 0; v < vertex_count(); ++v) {
    std::vector<unsigned> want;
    for (const auto& [x, id] : adj_[v]) want.push_back(x);
    std::vector<unsigned> got = rot[v];
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got)
      throw PreconditionError("rotation at vertex " + std::to_string(v + 1) +
                              " is not a permutation of its neighbours");
  }
  rot_ = std::move(rot);
  rotation_set_ = true;
}

bool Matchgate::is_external(unsigned v) const { return external_position(v) >= 0; }

int Matchgate::external_position(unsigned v) const {
  for (std::size_t k = 0; k < externals_.size(); ++k)
    if (externals_[k] == v) return static_cast<int>(k);
  return -1;
}

void Matchgate::set_externals(std::vector<unsigned> externals) {
  std::vector<bool> seen(vertex_count(), false);
  for (unsigned v : externals) {
    if (v >= vertex_count()) throw PreconditionError("external node out of range");
    if (seen[v]) throw PreconditionError("external node " + std::to_string(v + 1) + " repeated");
    seen[v] = true;
  }
  if (externals.size() > kMaxDenseArity)
    throw CapExceeded("too many external nodes for a dense signature");
  externals_ = std::move(externals);
}

namespace {

using Mask = std::uint64_t;

struct Neighbor {
  unsigned v;
  const Scalar* w;
};

std::vector<std::vector<Neighbor>> neighbor_table(const Matchgate& g) {
  if (g.vertex_count() > kMaxBacktrackVertices)
    throw CapExceeded("backtracking limited to " + std::to_string(kMaxBacktrackVertices) +
                      " vertices");
  std::vector<std::vector<Neighbor>> t(g.vertex_count());
  for (const Edge& e : g.edges()) {
    t[e.u].push_back({e.v, &e.w});
    t[e.v].push_back({e.u, &e.w});
  }
  return t;
}

Mask full_mask(unsigned k) { return k == 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

Scalar perfmatch_rec(const std::vector<std::vector<Neighbor>>& t, Mask used, Mask full) {
  if (used == full) return 1;
  const unsigned u = static_cast<unsigned>(std::countr_one(used));
  Scalar sum;
  for (const Neighbor& n : t[u]) {
    if (used >> n.v & 1U) continue;
    Scalar rest = perfmatch_rec(t, used | (Mask{1} << u) | (Mask{1} << n.v), full);
    if (!rest.is_zero()) sum += *n.w * rest;
  }
  return sum;
}

struct SignatureWalk {
  const std::vector<std::vector<Neighbor>>& t;
  const std::vector<Index>& ext_bit;  // 0 for internal vertices
  Mask full;
  BooleanSignature& out;

  void run(Mask used, Index alpha, const Scalar& prod) {
    if (used == full) {
      out[alpha] += prod;
      return;
    }
    const unsigned u = static_cast<unsigned>(std::countr_one(used));
    const Mask uu = used | (Mask{1} << u);
    if (ext_bit[u] != 0) run(uu, alpha | ext_bit[u], prod);
    for (const Neighbor& n : t[u]) {
      if (used >> n.v & 1U) continue;
      run(uu | (Mask{1} << n.v), alpha, prod * *n.w);
    }
  }
};

}  // namespace

Scalar perfmatch_bruteforce(const Matchgate& g) {
  const unsigned k = g.vertex_count();
  if (k % 2 == 1) return 0;
  auto t = neighbor_table(g);
  return perfmatch_rec(t, 0, full_mask(k));
}

BooleanSignature signature(const Matchgate& g) {
  const unsigned n = g.arity();
  auto t = neighbor_table(g);
  std::vector<Index> ext_bit(g.vertex_count(), 0);
  for (unsigned p = 0; p < n; ++p) ext_bit[g.externals()[p]] = position_mask(n, p + 1);
  BooleanSignature out(n);
  SignatureWalk walk{t, ext_bit, full_mask(g.vertex_count()), out};
  walk.run(0, 0, Scalar(1));
  return out;
}

std::optional<std::vector<std::size_t>> find_perfect_matching(const Matchgate& g) {
  const unsigned k = g.vertex_count();
  if (k % 2 == 1) return std::nullopt;
  if (k > kMaxBacktrackVertices) throw CapExceeded("backtracking vertex limit exceeded");
  std::vector<std::size_t> chosen;
  const Mask full = full_mask(k);
  auto rec = [&](auto&& self, Mask used) -> bool {
    if (used == full) return true;
    const unsigned u = static_cast<unsigned>(std::countr_one(used));
    for (const auto& [v, id] : g.incident(u)) {
      if (used >> v & 1U) continue;
      chosen.push_back(id);
      if (self(self, used | (Mask{1} << u) | (Mask{1} << v))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return chosen;
}

Matchgate remove_vertices(const Matchgate& g, const std::vector<unsigned>& vertices) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (unsigned v : vertices) {
    if (v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    gone[v] = true;
  }
  std::vector<unsigned> id(g.vertex_count(), 0);
  unsigned next = 0;
  for (unsigned v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) id[v] = next++;
  Matchgate h(next);
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) h.add_edge(id[e.u], id[e.v], e.w);
  if (g.has_rotation()) {
    std::vector<std::vector<unsigned>> rot(next);
    for (unsigned v = 0; v < g.vertex_count(); ++v) {
      if (gone[v]) continue;
      for (unsigned x : g.rotation(v))
        if (!gone[x]) rot[id[v]].push_back(id[x]);
    }
    h.set_rotation_system(std::move(rot));
  }
  std::vector<unsigned> ext;
  for (unsigned v : g.externals())
    if (!gone[v]) ext.push_back(id[v]);
  h.set_externals(std::move(ext));
  return h;
}

Matchgate with_externals(const Matchgate& g, std::vector<unsigned> externals) {
  Matchgate h = g;
  h.set_externals(std::move(externals));
  return h;
}

namespace {

std::vector<Corner> corners_or_throw(const Matchgate& g) {
  auto corners = external_corners(g);
  if (!corners) throw PlanarityError("external nodes do not lie counterclockwise on a common face");
  return *corners;
}

void require_external(const Matchgate& g, unsigned v) {
  if (v >= g.vertex_count() || !g.is_external(v))
    throw PreconditionError("vertex " + std::to_string(v + 1) + " is not an external node");
}

}  // namespace

Matchgate attach_pendant(const Matchgate& g, unsigned v, const Scalar& w, PendantMode mode) {
  require_external(g, v);
  const int pos = g.external_position(v);
  Matchgate h = g;
  const unsigned x = h.add_vertex();
  h.add_edge(v, x, w);
  if (g.has_rotation()) {
    auto rot = g.rotation_system();
    rot.emplace_back();
    insert_at_corner(rot[v], corners_or_throw(g)[pos], x);
    rot[x] = {v};
    h.set_rotation_system(std::move(rot));
  }
  std::vector<unsigned> ext = g.externals();
  switch (mode) {
    case PendantMode::kTransfer: ext[pos] = x; break;
    case PendantMode::kRevoke: ext.erase(ext.begin() + pos); break;
    case PendantMode::kKeep: break;
  }
  h.set_externals(std::move(ext));
  return h;
}

Matchgate attach_path2(const Matchgate& g, unsigned v, const Scalar& w1, const Scalar& w2,
                       PathMode mode) {
  require_external(g, v);
  const int pos = g.external_position(v);
  Matchgate h = g;
  const unsigned x2 = h.add_vertex();
  const unsigned x3 = h.add_vertex();
  h.add_edge(v, x2, w1);
  h.add_edge(x2, x3, w2);
  if (g.has_rotation()) {
    auto rot = g.rotation_system();
    rot.resize(h.vertex_count());
    insert_at_corner(rot[v], corners_or_throw(g)[pos], x2);
    rot[x2] = {v, x3};
    rot[x3] = {x2};
    h.set_rotation_system(std::move(rot));
  }
  std::vector<unsigned> ext = g.externals();
  switch (mode) {
    case PathMode::kEndExternal: ext[pos] = x3; break;
    case PathMode::kAllInternal: ext.erase(ext.begin() + pos); break;
    case PathMode::kKeep: break;
  }
  h.set_externals(std::move(ext));
  return h;
}

Matchgate compose(const Matchgate& a, const Matchgate& b,
                  const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  std::vector<bool> used_a(a.vertex_count(), false), used_b(b.vertex_count(), false);
  for (const auto& [x, y] : pairs) {
    require_external(a, x);
    require_external(b, y);
    if (used_a[x] || used_b[y]) throw PreconditionError("external node paired twice");
    used_a[x] = used_b[y] = true;
  }
  const unsigned ka = a.vertex_count();
  Matchgate h(ka + b.vertex_count());
  for (const Edge& e : a.edges()) h.add_edge(e.u, e.v, e.w);
  for (const Edge& e : b.edges()) h.add_edge(e.u + ka, e.v + ka, e.w);
  for (const auto& [x, y] : pairs) h.add_edge(x, y + ka, Scalar(1));

  if (a.has_rotation() && b.has_rotation()) {
    std::vector<std::vector<unsigned>> rot = a.rotation_system();
    for (unsigned v = 0; v < b.vertex_count(); ++v) {
      rot.emplace_back();
      for (unsigned x : b.rotation(v)) rot.back().push_back(x + ka);
    }
    if (!pairs.empty()) {
      const auto ca = corners_or_throw(a);
      const auto cb = corners_or_throw(b);
      for (const auto& [x, y] : pairs) {
        insert_at_corner(rot[x], ca[a.external_position(x)], y + ka);
        Corner c = cb[b.external_position(y)];
        c.vertex += ka;
        c.after += ka;
        insert_at_corner(rot[y + ka], c, x);
      }
    }
    h.set_rotation_system(std::move(rot));
    if (!euler_check(h)) throw PlanarityError("composition is not planar: pairing crosses");
  }

  std::vector<unsigned> ext;
  for (unsigned v : a.externals())
    if (!used_a[v]) ext.push_back(v);
  for (unsigned v : b.externals())
    if (!used_b[v]) ext.push_back(v + ka);
  h.set_externals(std::move(ext));
  return h;
}

}  // namespace holomatch
