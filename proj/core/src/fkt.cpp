#include "holomatch/fkt.hpp"

#include <algorithm>
#include <deque>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "holomatch/embedding.hpp"
#include "holomatch/errors.hpp"

namespace holomatch {
namespace {

std::size_t edge_of(const Matchgate& g, const Dart& d) { return *g.edge_between(d.from, d.to); }

bool against(const Matchgate& g, const KasteleynOrientation& o, const Dart& d, std::size_t e) {
  const bool dart_forward = g.edges()[e].u == d.from;
  return o.forward[e] != dart_forward;
}

// One perfect matching as edge ids, by Edmonds' algorithm.
std::optional<std::vector<std::size_t>> any_perfect_matching(const Matchgate& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const unsigned n = g.vertex_count();
  Graph bg(n);
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, mate.data());
  std::vector<std::size_t> out;
  for (unsigned v = 0; v < n; ++v) {
    if (mate[v] == boost::graph_traits<Graph>::null_vertex()) return std::nullopt;
    if (v < mate[v]) out.push_back(*g.edge_between(v, static_cast<unsigned>(mate[v])));
  }
  return out;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) sign = -sign;
  return sign;
}

}  // namespace

KasteleynOrientation orient(const Matchgate& g) {
  require_planar(g);
  const FaceSet fs = trace_faces(g);
  const std::size_t m = g.edges().size();
  KasteleynOrientation o{std::vector<bool>(m, true)};

  // Spanning forest by BFS; its edges keep the default orientation.
  std::vector<bool> tree(m, false);
  std::vector<bool> reached(g.vertex_count(), false);
  for (unsigned s = 0; s < g.vertex_count(); ++s) {
    if (reached[s]) continue;
    reached[s] = true;
    std::deque<unsigned> queue{s};
    while (!queue.empty()) {
      unsigned v = queue.front();
      queue.pop_front();
      for (const auto& [x, e] : g.incident(v))
        if (!reached[x]) {
          reached[x] = true;
          tree[e] = true;
          queue.push_back(x);
        }
    }
  }

  // Dual forest on the non-tree edges.
  const std::size_t nf = fs.faces.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> dual(nf);  // (face, edge)
  std::vector<std::vector<std::size_t>> face_edges(nf);
  {
    std::vector<std::size_t> first_face(m, nf);
    for (std::size_t f = 0; f < nf; ++f)
      for (const Dart& d : fs.faces[f]) {
        const std::size_t e = edge_of(g, d);
        face_edges[f].push_back(e);
        if (tree[e]) continue;
        if (first_face[e] == nf) {
          first_face[e] = f;
        } else {
          dual[f].emplace_back(first_face[e], e);
          dual[first_face[e]].emplace_back(f, e);
        }
      }
  }

  std::vector<std::size_t> parent_edge(nf, m);
  std::vector<bool> visited(nf, false);
  std::vector<std::size_t> order;
  for (std::size_t root = 0; root < nf; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      order.push_back(f);
      for (const auto& [h, e] : dual[f])
        if (!visited[h]) {
          visited[h] = true;
          parent_edge[h] = e;
          queue.push_back(h);
        }
    }
  }

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t f = *it;
    const std::size_t pe = parent_edge[f];
    if (pe == m) continue;  // root of its dual tree
    std::size_t count = 0;
    const Dart* parent_dart = nullptr;
    for (std::size_t k = 0; k < fs.faces[f].size(); ++k) {
      const std::size_t e = face_edges[f][k];
      if (e == pe) {
        parent_dart = &fs.faces[f][k];
        continue;
      }
      if (against(g, o, fs.faces[f][k], e)) ++count;
    }
    const bool dart_forward = g.edges()[pe].u == parent_dart->from;
    // Odd total: the parent edge must run against the walk exactly when count is even.
    o.forward[pe] = (count % 2 == 0) ? !dart_forward : dart_forward;
  }
  return o;
}

bool is_kasteleyn(const Matchgate& g, const KasteleynOrientation& o) {
  if (o.forward.size() != g.edges().size()) return false;
  const FaceSet fs = trace_faces(g);
  std::vector<unsigned> bad(fs.components, 0);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    std::size_t count = 0;
    for (const Dart& d : fs.faces[f])
      if (against(g, o, d, edge_of(g, d))) ++count;
    if (count % 2 == 0) ++bad[fs.face_component[f]];
  }
  return std::all_of(bad.begin(), bad.end(), [](unsigned b) { return b <= 1; });
}

Scalar pfaffian(Matrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw PreconditionError("pfaffian of a non-square matrix");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (!(a(r, c) == -a(c, r))) throw PreconditionError("pfaffian of a non-skew matrix");
  if (n % 2 == 1) return 0;

  Scalar pf = 1;
  for (std::size_t i = 0; i < n; i += 2) {
    std::size_t j = i + 1;
    while (j < n && a(i, j).is_zero()) ++j;
    if (j == n) return 0;
    if (j != i + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(j, k), a(i + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(a(k, j), a(k, i + 1));
      pf = -pf;
    }
    const Scalar pivot = a(i, i + 1);
    pf *= pivot;
    const Scalar inv = pivot.inverse();
    std::vector<Scalar> c(n);
    for (std::size_t k = i + 2; k < n; ++k)
      if (!a(i, k).is_zero()) c[k] = a(i, k) * inv;
    // Congruence: row_k -= c_k·row_{i+1} and col_k -= c_k·col_{i+1} on the trailing block.
    for (std::size_t r = i + 2; r < n; ++r)
      for (std::size_t s = r + 1; s < n; ++s) {
        Scalar delta;
        if (!c[r].is_zero() && !a(i + 1, s).is_zero()) delta += c[r] * a(i + 1, s);
        if (!c[s].is_zero() && !a(r, i + 1).is_zero()) delta += c[s] * a(r, i + 1);
        if (delta.is_zero()) continue;
        a(r, s) -= delta;
        a(s, r) = -a(r, s);
      }
  }
  return pf;
}

Matrix kasteleyn_matrix(const Matchgate& g, const KasteleynOrientation& o) {
  Matrix a(g.vertex_count(), g.vertex_count());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edges()[e];
    const unsigned from = o.forward[e] ? ed.u : ed.v;
    const unsigned to = o.forward[e] ? ed.v : ed.u;
    a(from, to) = ed.w;
    a(to, from) = -ed.w;
  }
  return a;
}

Scalar perfmatch_fkt(const Matchgate& g) {
  const KasteleynOrientation o = orient(g);
  const FaceSet fs = trace_faces(g);
  std::vector<std::vector<unsigned>> members(fs.components);
  for (unsigned v = 0; v < g.vertex_count(); ++v) members[fs.vertex_component[v]].push_back(v);

  Scalar result = 1;
  for (const auto& vs : members) {
    if (vs.size() % 2 == 1) return 0;
    std::vector<unsigned> local(g.vertex_count(), 0);
    for (unsigned q = 0; q < vs.size(); ++q) local[vs[q]] = q;

    Matchgate sub(static_cast<unsigned>(vs.size()));
    Matrix a(vs.size(), vs.size());
    std::vector<bool> sub_forward;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& ed = g.edges()[e];
      if (fs.vertex_component[ed.u] != fs.vertex_component[vs[0]]) continue;
      const unsigned u = local[ed.u], v = local[ed.v];
      sub.add_edge(u, v, ed.w);
      sub_forward.push_back(o.forward[e]);
      const unsigned from = o.forward[e] ? u : v;
      const unsigned to = o.forward[e] ? v : u;
      a(from, to) = ed.w;
      a(to, from) = -ed.w;
    }

    Scalar pf = pfaffian(std::move(a));
    if (pf.is_zero()) return 0;
    auto matching = any_perfect_matching(sub);
    if (!matching) return 0;
    std::vector<std::size_t> perm;
    int sign = 1;
    for (std::size_t e : *matching) {
      const Edge& ed = sub.edges()[e];
      const unsigned lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
      perm.push_back(lo);
      perm.push_back(hi);
      const unsigned from = sub_forward[e] ? ed.u : ed.v;
      if (from != lo) sign = -sign;
    }
    sign *= permutation_sign(perm);
    result *= sign > 0 ? pf : -pf;
  }
  return result;
}

}  // namespace holomatch
