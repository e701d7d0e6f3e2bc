#include "oracles.hpp"

#include <functional>

#include "holomatch/errors.hpp"

namespace holomatch::oracle {

Scalar perfmatch_edge_subsets(const Matchgate& g) {
  const unsigned k = g.vertex_count();
  if (k % 2 == 1) return 0;
  const auto& edges = g.edges();
  const std::size_t want = k / 2;
  Scalar total;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == want) {
      std::vector<bool> hit(k, false);
      Scalar prod = 1;
      for (std::size_t e : pick) {
        if (hit[edges[e].u] || hit[edges[e].v]) return;
        hit[edges[e].u] = hit[edges[e].v] = true;
        prod *= edges[e].w;
      }
      total += prod;
      return;
    }
    for (std::size_t e = start; e + (want - pick.size()) <= edges.size(); ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return total;
}

BooleanSignature signature_by_deletion(const Matchgate& g) {
  const unsigned n = g.arity();
  BooleanSignature out(n);
  for (Index a = 0; a < out.size(); ++a) {
    std::vector<unsigned> gone;
    for (unsigned p = 1; p <= n; ++p)
      if (bit_at(a, n, p)) gone.push_back(g.externals()[p - 1]);
    Matchgate h = remove_vertices(g, gone);
    out[a] = perfmatch_edge_subsets(h);
  }
  return out;
}

Scalar determinant_bareiss(Matrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Scalar sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BooleanSignature contract(const BooleanSignature& x, const BooleanSignature& y,
                          const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  const unsigned nx = x.arity(), ny = y.arity();
  std::vector<bool> px(nx + 1, false), py(ny + 1, false);
  for (const auto& [a, b] : pairs) px[a] = py[b] = true;
  std::vector<unsigned> fx, fy;
  for (unsigned p = 1; p <= nx; ++p)
    if (!px[p]) fx.push_back(p);
  for (unsigned p = 1; p <= ny; ++p)
    if (!py[p]) fy.push_back(p);
  const unsigned n = static_cast<unsigned>(fx.size() + fy.size());
  BooleanSignature out(n);
  for (Index a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (Index b = 0; b < y.size(); ++b) {
      bool agree = true;
      for (const auto& [i, j] : pairs)
        if (bit_at(a, nx, i) != bit_at(b, ny, j)) agree = false;
      if (!agree) continue;
      Index o = 0;
      for (unsigned p : fx) o = (o << 1) | static_cast<Index>(bit_at(a, nx, p));
      for (unsigned p : fy) o = (o << 1) | static_cast<Index>(bit_at(b, ny, p));
      out[o] += x[a] * y[b];
    }
  }
  return out;
}

}  // namespace holomatch::oracle
