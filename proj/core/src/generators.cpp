#include "holomatch/generators.hpp"

#include <algorithm>
#include <numeric>

#include "holomatch/embedding.hpp"
#include "holomatch/errors.hpp"

namespace holomatch {
namespace {

// Counterclockwise angle order starting at the positive x-axis.
bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

bool connected(const Matchgate& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<unsigned> stack{0};
  seen[0] = true;
  unsigned count = 1;
  while (!stack.empty()) {
    unsigned v = stack.back();
    stack.pop_back();
    for (const auto& [x, e] : g.incident(v))
      if (!seen[x]) {
        seen[x] = true;
        ++count;
        stack.push_back(x);
      }
  }
  return count == g.vertex_count();
}

struct Drawing {
  std::vector<Point> pts;
  std::vector<std::pair<unsigned, unsigned>> edges;
};

Drawing thinned_grid(Rng& rng, unsigned max_vertices) {
  unsigned rows = 0, cols = 0;
  do {
    rows = static_cast<unsigned>(rng.range(1, 4));
    cols = static_cast<unsigned>(rng.range(2, 6));
  } while (rows * cols > max_vertices);
  Drawing d;
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) d.pts.push_back({c, -static_cast<std::int64_t>(r)});
  auto id = [cols](unsigned r, unsigned c) { return r * cols + c; };
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) {
      if (c + 1 < cols && rng.chance(3, 4)) d.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows && rng.chance(3, 4)) d.edges.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c + 1 < cols && rng.chance(1, 3)) {
        if (rng.coin())
          d.edges.emplace_back(id(r, c), id(r + 1, c + 1));
        else
          d.edges.emplace_back(id(r, c + 1), id(r + 1, c));
      }
    }
  return d;
}

void triangulate(Rng& rng, unsigned lo, unsigned hi, std::vector<std::pair<unsigned, unsigned>>& out) {
  if (hi - lo < 2) return;
  const unsigned m = lo + 1 + static_cast<unsigned>(rng.below(hi - lo - 1));
  if (m - lo >= 2) out.emplace_back(lo, m);
  if (hi - m >= 2) out.emplace_back(m, hi);
  triangulate(rng, lo, m, out);
  triangulate(rng, m, hi, out);
}

Drawing convex_polygon(Rng& rng, unsigned max_vertices) {
  const unsigned k = static_cast<unsigned>(rng.range(2, std::max<std::int64_t>(2, max_vertices)));
  Drawing d;
  for (unsigned i = 0; i < k; ++i) d.pts.push_back({i, static_cast<std::int64_t>(i) * i});
  for (unsigned i = 0; i + 1 < k; ++i) d.edges.emplace_back(i, i + 1);
  if (k >= 3 && rng.chance(2, 3)) d.edges.emplace_back(0, k - 1);
  std::vector<std::pair<unsigned, unsigned>> chords;
  if (k >= 4) triangulate(rng, 0, k - 1, chords);
  for (const auto& c : chords)
    if (rng.chance(1, 2)) d.edges.push_back(c);
  return d;
}

Drawing partial_wheel(Rng& rng, unsigned max_vertices) {
  // Strictly convex rim around the hub at the origin.
  static const Point dirs[8] = {{3, 0}, {2, 2}, {0, 3}, {-2, 2}, {-3, 0}, {-2, -2}, {0, -3}, {2, -2}};
  const unsigned rim = static_cast<unsigned>(rng.range(3, std::min(8U, max_vertices - 1)));
  std::vector<unsigned> pick;
  for (;;) {
    pick.resize(8);
    std::iota(pick.begin(), pick.end(), 0U);
    for (unsigned i = 7; i > 0; --i) std::swap(pick[i], pick[rng.below(i + 1)]);
    pick.resize(rim);
    std::sort(pick.begin(), pick.end());
    // Every angular gap below a half turn keeps rim chords away from the hub.
    bool ok = true;
    for (unsigned i = 0; i < rim; ++i) {
      const unsigned gap = (pick[(i + 1) % rim] + 8 - pick[i]) % 8;
      if (gap >= 4) ok = false;
    }
    if (ok) break;
  }
  Drawing d;
  d.pts.push_back({0, 0});
  for (unsigned q : pick) d.pts.push_back(dirs[q]);
  for (unsigned i = 0; i < rim; ++i) {
    if (rng.chance(4, 5)) d.edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    if (rng.chance(1, 2)) d.edges.emplace_back(0, 1 + i);
  }
  return d;
}

}  // namespace

void set_rotation_from_points(Matchgate& g, const std::vector<Point>& pts) {
  if (pts.size() != g.vertex_count()) throw PreconditionError("one point per vertex required");
  std::vector<std::vector<unsigned>> rot(g.vertex_count());
  for (unsigned v = 0; v < g.vertex_count(); ++v) {
    for (const auto& [x, e] : g.incident(v)) rot[v].push_back(x);
    std::sort(rot[v].begin(), rot[v].end(), [&](unsigned a, unsigned b) {
      return angle_less({pts[a].x - pts[v].x, pts[a].y - pts[v].y},
                        {pts[b].x - pts[v].x, pts[b].y - pts[v].y});
    });
  }
  g.set_rotation_system(std::move(rot));
}

Matchgate grid_gate(unsigned rows, unsigned cols, const Scalar& w) {
  Matchgate g(rows * cols);
  std::vector<Point> pts;
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) pts.push_back({c, -static_cast<std::int64_t>(r)});
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1, w);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c, w);
    }
  set_rotation_from_points(g, pts);
  return g;
}

Matchgate gamma1(bool counterclockwise) {
  enum : unsigned { TL, TR, ML, MR, BL, BR };
  Matchgate g(6);
  g.add_edge(TL, TR, 1);
  g.add_edge(ML, MR, -1);
  g.add_edge(BL, BR, 1);
  g.add_edge(TL, ML, 1);
  g.add_edge(ML, BL, 1);
  g.add_edge(TR, MR, 1);
  g.add_edge(MR, BR, 1);
  set_rotation_from_points(g, {{0, 2}, {1, 2}, {0, 1}, {1, 1}, {0, 0}, {1, 0}});
  g.set_externals(counterclockwise ? std::vector<unsigned>{TL, BL, BR, TR}
                                   : std::vector<unsigned>{TL, TR, BL, BR});
  return g;
}

Scalar random_weight(Rng& rng) {
  std::int64_t a = 0;
  while (a == 0) a = rng.range(-3, 3);
  return Rational(a, rng.range(1, 3));
}

Matchgate random_plane_graph(Rng& rng, unsigned max_vertices) {
  if (max_vertices < 2) throw PreconditionError("need at least two vertices");
  for (;;) {
    Drawing d;
    switch (rng.below(max_vertices >= 4 ? 3 : 2)) {
      case 0: d = thinned_grid(rng, max_vertices); break;
      case 1: d = convex_polygon(rng, max_vertices); break;
      default: d = partial_wheel(rng, max_vertices); break;
    }
    const unsigned k = static_cast<unsigned>(d.pts.size());
    std::vector<unsigned> label(k);
    std::iota(label.begin(), label.end(), 0U);
    for (unsigned i = k - 1; i > 0; --i) std::swap(label[i], label[rng.below(i + 1)]);
    for (unsigned i = static_cast<unsigned>(d.edges.size()); i > 1; --i)
      std::swap(d.edges[i - 1], d.edges[rng.below(i)]);

    Matchgate g(k);
    std::vector<Point> pts(k);
    for (unsigned v = 0; v < k; ++v) pts[label[v]] = d.pts[v];
    for (const auto& [u, v] : d.edges) g.add_edge(label[u], label[v], random_weight(rng));
    if (!connected(g)) continue;
    set_rotation_from_points(g, pts);
    return g;
  }
}

Matchgate random_plane_gate(Rng& rng, unsigned max_vertices, unsigned max_arity) {
  return random_plane_gate(rng, max_vertices, 1, max_arity);
}

Matchgate random_plane_gate(Rng& rng, unsigned max_vertices, unsigned min_arity,
                            unsigned max_arity) {
  if (min_arity == 0 || min_arity > max_arity || min_arity > max_vertices)
    throw PreconditionError("bad arity range for a random gate");
  for (;;) {
    Matchgate g = random_plane_graph(rng, max_vertices);
    FaceSet fs = trace_faces(g);
    std::vector<Dart> face = fs.faces[rng.below(fs.faces.size())];
    // Distinct vertices of the face in counterclockwise order (reverse walk order).
    std::vector<unsigned> order;
    for (auto it = face.rbegin(); it != face.rend(); ++it)
      if (std::find(order.begin(), order.end(), it->to) == order.end()) order.push_back(it->to);
    if (order.empty()) order.push_back(0);
    if (order.size() < min_arity) continue;
    const unsigned arity = static_cast<unsigned>(rng.range(
        min_arity, std::min<std::int64_t>(max_arity, static_cast<std::int64_t>(order.size()))));
    std::vector<bool> keep(order.size(), false);
    std::vector<unsigned> idx(order.size());
    std::iota(idx.begin(), idx.end(), 0U);
    for (unsigned i = static_cast<unsigned>(idx.size()) - 1; i > 0; --i)
      std::swap(idx[i], idx[rng.below(i + 1)]);
    for (unsigned q = 0; q < arity; ++q) keep[idx[q]] = true;
    std::vector<unsigned> ext;
    for (std::size_t q = 0; q < order.size(); ++q)
      if (keep[q]) ext.push_back(order[q]);
    const std::size_t shift = rng.below(ext.size());
    std::rotate(ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(shift), ext.end());
    g.set_externals(std::move(ext));
    return g;
  }
}

}  // namespace holomatch
