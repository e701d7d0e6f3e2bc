#include "holomatch/embedding.hpp"

#include <algorithm>
#include <set>

#include "holomatch/errors.hpp"

namespace holomatch {
namespace {

std::size_t index_in(const std::vector<unsigned>& rot, unsigned x) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), x) - rot.begin());
}

std::vector<unsigned> label_components(const Matchgate& g, unsigned* count) {
  const unsigned k = g.vertex_count();
  std::vector<unsigned> comp(k, k);
  unsigned c = 0;
  for (unsigned s = 0; s < k; ++s) {
    if (comp[s] != k) continue;
    std::vector<unsigned> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      unsigned v = stack.back();
      stack.pop_back();
      for (const auto& [x, id] : g.incident(v))
        if (comp[x] == k) {
          comp[x] = c;
          stack.push_back(x);
        }
    }
    ++c;
  }
  *count = c;
  return comp;
}

}  // namespace

FaceSet trace_faces(const Matchgate& g) {
  if (!g.has_rotation()) throw PlanarityError("matchgate has no rotation system");
  const unsigned k = g.vertex_count();
  FaceSet fs;
  fs.vertex_component = label_components(g, &fs.components);

  std::vector<std::size_t> offset(k + 1, 0);
  for (unsigned v = 0; v < k; ++v) offset[v + 1] = offset[v] + g.rotation(v).size();
  std::vector<bool> seen(offset[k], false);

  for (unsigned v = 0; v < k; ++v) {
    for (std::size_t i = 0; i < g.rotation(v).size(); ++i) {
      if (seen[offset[v] + i]) continue;
      std::vector<Dart> face;
      unsigned from = v;
      std::size_t slot = i;
      while (!seen[offset[from] + slot]) {
        seen[offset[from] + slot] = true;
        const unsigned to = g.rotation(from)[slot];
        face.push_back({from, to});
        const auto& r = g.rotation(to);
        const std::size_t j = index_in(r, from);
        slot = (j + r.size() - 1) % r.size();
        from = to;
      }
      fs.face_component.push_back(fs.vertex_component[v]);
      fs.faces.push_back(std::move(face));
    }
  }
  return fs;
}

bool euler_check(const Matchgate& g) {
  FaceSet fs = trace_faces(g);
  std::vector<long> v(fs.components, 0), e(fs.components, 0), f(fs.components, 0);
  for (unsigned x = 0; x < g.vertex_count(); ++x) ++v[fs.vertex_component[x]];
  for (const Edge& ed : g.edges()) ++e[fs.vertex_component[ed.u]];
  for (unsigned c : fs.face_component) ++f[c];
  for (unsigned c = 0; c < fs.components; ++c) {
    const long faces = e[c] == 0 ? 1 : f[c];
    if (v[c] - e[c] + faces != 2) return false;
  }
  return true;
}

void require_planar(const Matchgate& g) {
  if (!g.has_rotation()) throw PlanarityError("matchgate has no rotation system");
  if (!euler_check(g)) throw PlanarityError("rotation system is not planar (Euler check failed)");
}

std::optional<std::vector<Corner>> external_corners(const Matchgate& g) {
  const auto& ext = g.externals();
  const std::size_t n = ext.size();
  std::vector<Corner> out(n);
  if (n == 0) return out;
  FaceSet fs = trace_faces(g);

  std::vector<unsigned> comp(n);
  for (std::size_t q = 0; q < n; ++q) comp[q] = fs.vertex_component[ext[q]];
  const std::set<unsigned> distinct(comp.begin(), comp.end());
  if (distinct.size() > 1) {
    std::size_t runs = 0;
    for (std::size_t q = 0; q < n; ++q)
      if (comp[q] != comp[(q + 1) % n]) ++runs;
    if (runs != distinct.size()) return std::nullopt;
  }

  for (unsigned c : distinct) {
    std::vector<std::size_t> members;
    for (std::size_t q = 0; q < n; ++q)
      if (comp[q] == c) members.push_back(q);
    if (g.degree(ext[members[0]]) == 0) {
      out[members[0]] = {ext[members[0]], 0, true};
      continue;
    }
    bool found = false;
    for (std::size_t fi = 0; fi < fs.faces.size() && !found; ++fi) {
      if (fs.face_component[fi] != c) continue;
      const auto& face = fs.faces[fi];
      const std::size_t m = face.size();
      // Corners in counterclockwise order around the face seen as the outer face.
      std::vector<Corner> seq(m);
      for (std::size_t j = 0; j < m; ++j)
        seq[m - 1 - j] = {face[j].to, face[(j + 1) % m].to, false};
      for (std::size_t s = 0; s < m && !found; ++s) {
        if (seq[s].vertex != ext[members[0]]) continue;
        std::vector<Corner> picked{seq[s]};
        std::size_t step = 1;
        for (std::size_t q = 1; q < members.size(); ++q) {
          while (step < m && seq[(s + step) % m].vertex != ext[members[q]]) ++step;
          if (step == m) break;
          picked.push_back(seq[(s + step) % m]);
          ++step;
        }
        if (picked.size() == members.size()) {
          for (std::size_t q = 0; q < members.size(); ++q) out[members[q]] = picked[q];
          found = true;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

void insert_at_corner(std::vector<unsigned>& rotation, const Corner& c, unsigned neighbor) {
  if (c.isolated || rotation.empty()) {
    rotation.push_back(neighbor);
    return;
  }
  auto it = std::find(rotation.begin(), rotation.end(), c.after);
  rotation.insert(it + 1, neighbor);
}

}  // namespace holomatch
