#include "holomatch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "holomatch/errors.hpp"

namespace holomatch::io {
namespace {

struct Line {
  std::size_t number = 0;
  std::string_view key;
  std::string_view rest;
};

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  const std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const std::size_t sp = line.find_first_of(" \t");
    Line l{number, line.substr(0, sp), {}};
    if (sp != std::string_view::npos) l.rest = trim(line.substr(sp));
    out.push_back(l);
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw ParseError("line " + std::to_string(l.number) + ": " + msg);
}

std::vector<std::string_view> split(std::string_view s, const char* seps = " \t") {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t b = s.find_first_not_of(seps);
    if (b == std::string_view::npos) break;
    s = s.substr(b);
    const std::size_t e = s.find_first_of(seps);
    out.push_back(s.substr(0, e));
    if (e == std::string_view::npos) break;
    s = s.substr(e);
  }
  return out;
}

unsigned to_uint(std::string_view s, const Line& l) {
  unsigned v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(l, "expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

Scalar to_scalar(std::string_view s, const Line& l) {
  try {
    return Scalar::parse(s);
  } catch (const ParseError& e) {
    fail(l, e.what());
  }
}

// Splits "<head> <scalar…>" at the first whitespace.
std::pair<std::string_view, std::string_view> head_and_rest(const Line& l) {
  const std::size_t sp = l.rest.find_first_of(" \t");
  if (sp == std::string_view::npos) fail(l, "expected an index and a scalar");
  return {l.rest.substr(0, sp), trim(l.rest.substr(sp))};
}

std::string str(std::string_view s) { return std::string(s); }

Index to_bits(std::string_view s, unsigned arity, const Line& l) {
  if (s == "-") {
    if (arity != 0) fail(l, "empty index for a nonzero arity");
    return 0;
  }
  try {
    return parse_bits(s, arity);
  } catch (const ParseError& e) {
    fail(l, e.what());
  }
}

std::string bits_or_dash(Index a, unsigned arity) { return arity == 0 ? "-" : format_bits(a, arity); }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Matchgate parse_matchgate(std::string_view text) {
  std::optional<unsigned> nodes;
  std::vector<std::pair<Line, std::vector<std::string_view>>> edges;
  std::vector<unsigned> externals;
  std::map<unsigned, std::vector<unsigned>> rot;
  for (const Line& l : lines_of(text)) {
    if (l.key == "nodes") {
      if (nodes) fail(l, "duplicate nodes line");
      nodes = to_uint(l.rest, l);
      continue;
    }
    if (!nodes) fail(l, "nodes line must come first");
    auto vertex = [&](std::string_view s) {
      const unsigned v = to_uint(s, l);
      if (v < 1 || v > *nodes) fail(l, "vertex " + str(s) + " out of range");
      return v - 1;
    };
    if (l.key == "edge") {
      const auto parts = split(l.rest);
      if (parts.size() < 3) fail(l, "edge needs two endpoints and a weight");
      edges.push_back({l, parts});
    } else if (l.key == "external") {
      for (std::string_view s : split(l.rest)) externals.push_back(vertex(s));
    } else if (l.key == "rot") {
      const std::size_t colon = l.rest.find(':');
      if (colon == std::string_view::npos) fail(l, "rot line needs '<v>: <neighbours>'");
      const unsigned v = vertex(trim(l.rest.substr(0, colon)));
      if (rot.count(v)) fail(l, "duplicate rot line");
      std::vector<unsigned> nb;
      for (std::string_view s : split(l.rest.substr(colon + 1))) nb.push_back(vertex(s));
      rot[v] = nb;
    } else {
      fail(l, "unknown keyword '" + str(l.key) + "'");
    }
  }
  if (!nodes) throw ParseError("missing nodes line");
  Matchgate g(*nodes);
  for (const auto& [l, parts] : edges) {
    auto vertex = [&](std::string_view s) {
      const unsigned v = to_uint(s, l);
      if (v < 1 || v > *nodes) fail(l, "vertex " + str(s) + " out of range");
      return v - 1;
    };
    const unsigned u = vertex(parts[0]), v = vertex(parts[1]);
    const std::string_view weight = trim(l.rest.substr(static_cast<std::size_t>(parts[2].data() - l.rest.data())));
    try {
      g.add_edge(u, v, to_scalar(weight, l));
    } catch (const PreconditionError& e) {
      fail(l, e.what());
    }
  }
  try {
    g.set_externals(externals);
    if (!rot.empty()) {
      auto full = g.rotation_system();
      for (auto& [v, nb] : rot) full[v] = nb;
      g.set_rotation_system(std::move(full));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string format_matchgate(const Matchgate& g) {
  std::ostringstream os;
  os << "nodes " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << "edge " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  os << "external";
  for (unsigned v : g.externals()) os << ' ' << v + 1;
  os << '\n';
  if (g.has_rotation())
    for (unsigned v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) < 2) continue;
      os << "rot " << v + 1 << ':';
      for (unsigned x : g.rotation(v)) os << ' ' << x + 1;
      os << '\n';
    }
  return os.str();
}

BooleanSignature parse_signature(std::string_view text) {
  std::optional<BooleanSignature> s;
  for (const Line& l : lines_of(text)) {
    if (l.key == "arity") {
      if (s) fail(l, "duplicate arity line");
      const unsigned n = to_uint(l.rest, l);
      if (n > kMaxDenseArity) fail(l, "arity exceeds the dense limit");
      s.emplace(n);
      continue;
    }
    if (!s) fail(l, "arity line must come first");
    if (l.rest.empty()) fail(l, "expected '<bitstring> <scalar>'");
    const Index a = to_bits(l.key, s->arity(), l);
    (*s)[a] += to_scalar(l.rest, l);
  }
  if (!s) throw ParseError("missing arity line");
  return *s;
}

std::string format_signature(const BooleanSignature& s) {
  std::ostringstream os;
  os << "arity " << s.arity() << '\n';
  for (Index a : s.support()) os << bits_or_dash(a, s.arity()) << ' ' << s[a] << '\n';
  return os.str();
}

DomainSignature parse_domain_signature(std::string_view text) {
  std::optional<unsigned> q, arity;
  std::optional<DomainSignature> f;
  for (const Line& l : lines_of(text)) {
    if (l.key == "q") {
      if (q) fail(l, "duplicate q line");
      q = to_uint(l.rest, l);
      if (*q == 0) fail(l, "domain size must be positive");
      continue;
    }
    if (l.key == "arity") {
      if (arity) fail(l, "duplicate arity line");
      arity = to_uint(l.rest, l);
      continue;
    }
    if (!q || !arity) fail(l, "q and arity lines must come first");
    if (!f) {
      try {
        f.emplace(*q, *arity);
      } catch (const std::exception& e) {
        fail(l, e.what());
      }
    }
    if (l.rest.empty()) fail(l, "expected '<tuple> <scalar>'");
    std::vector<unsigned> t;
    if (l.key != "-") {
      if (l.key.find(',') != std::string_view::npos || *q > 10) {
        for (std::string_view s : split(l.key, ",")) t.push_back(to_uint(s, l));
      } else {
        for (char c : l.key) {
          if (c < '0' || c > '9') fail(l, "bad tuple '" + str(l.key) + "'");
          t.push_back(static_cast<unsigned>(c - '0'));
        }
      }
    }
    try {
      (*f)[f->index_of(t)] += to_scalar(l.rest, l);
    } catch (const PreconditionError& e) {
      fail(l, e.what());
    }
  }
  if (!q || !arity) throw ParseError("missing q or arity line");
  if (!f) f.emplace(*q, *arity);
  return *f;
}

std::string format_domain_signature(const DomainSignature& f) {
  std::ostringstream os;
  os << "q " << f.domain() << "\narity " << f.arity() << '\n';
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    const auto t = f.tuple_of(k);
    if (t.empty()) os << '-';
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (f.domain() > 10 && j > 0) os << ',';
      os << t[j];
    }
    os << ' ' << f[k] << '\n';
  }
  return os.str();
}

Matrix parse_matrix(std::string_view text) {
  std::optional<unsigned> rows, cols;
  std::vector<Scalar> data;
  for (const Line& l : lines_of(text)) {
    if (l.key == "rows" || l.key == "cols") {
      auto& slot = l.key == "rows" ? rows : cols;
      if (slot) fail(l, "duplicate " + str(l.key) + " line");
      slot = to_uint(l.rest, l);
      continue;
    }
    if (!rows || !cols) fail(l, "rows and cols lines must come first");
    const std::string_view whole = trim(std::string_view(l.key.data(), l.rest.empty() ? l.key.size() : static_cast<std::size_t>(l.rest.data() + l.rest.size() - l.key.data())));
    for (std::string_view s : split(whole, ",")) data.push_back(to_scalar(trim(s), l));
  }
  if (!rows || !cols) throw ParseError("missing rows or cols line");
  if (data.size() != static_cast<std::size_t>(*rows) * *cols)
    throw ParseError("matrix needs " + std::to_string(*rows * *cols) + " entries, got " + std::to_string(data.size()));
  Matrix m(*rows, *cols);
  for (std::size_t k = 0; k < data.size(); ++k) m(k / *cols, k % *cols) = data[k];
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << "rows " << m.rows() << "\ncols " << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

std::string format_decomposition(const Decomposition& d) {
  std::ostringstream os;
  os << "rank " << d.rank << "\nblock " << d.ell << "\nblocks " << d.n << '\n';
  if (d.rank == 0) return os.str();
  os << "scale " << d.scale << '\n';
  for (Index a = 0; a < d.g.size(); ++a)
    if (!d.g[a].is_zero()) os << "g " << format_bits(a, d.ell) << ' ' << d.g[a] << '\n';
  if (d.rank == 1) {
    os << "anchor " << format_bits(d.anchor, d.n * d.ell) << '\n';
    os << "beta " << format_bits(d.beta, d.ell) << '\n';
    os << "base " << d.base << '\n';
  } else {
    os << "pivot " << format_bits(d.theta, d.ell) << ' ' << format_bits(d.eta, d.ell) << '\n';
    os << "columns " << format_bits(d.columns, (d.n - 1) * d.ell) << '\n';
    os << "shift " << d.s << ' ' << d.t << '\n';
    os << "r " << d.r << '\n';
  }
  for (Index j : d.core.support()) os << "core " << format_bits(j, d.n) << ' ' << d.core[j] << '\n';
  return os.str();
}

Decomposition parse_decomposition(std::string_view text) {
  Decomposition d;
  bool have_rank = false, have_block = false, have_blocks = false;
  auto ready = [&](const Line& l) {
    if (!have_rank || !have_block || !have_blocks) fail(l, "rank, block and blocks lines must come first");
    if (d.g.empty()) {
      d.g.assign(std::size_t{1} << d.ell, Scalar());
      d.core = BooleanSignature(d.n);
    }
  };
  for (const Line& l : lines_of(text)) {
    if (l.key == "rank") {
      d.rank = to_uint(l.rest, l);
      if (d.rank > 2) fail(l, "rank must be 0, 1 or 2");
      have_rank = true;
    } else if (l.key == "block") {
      d.ell = to_uint(l.rest, l);
      if (d.ell == 0) fail(l, "block size must be positive");
      have_block = true;
    } else if (l.key == "blocks") {
      d.n = to_uint(l.rest, l);
      if (d.n < 3) fail(l, "decompositions have at least 3 blocks");
      have_blocks = true;
    } else {
      ready(l);
      if (l.key == "scale") {
        d.scale = to_scalar(l.rest, l);
      } else if (l.key == "g") {
        auto [h, r] = head_and_rest(l);
        d.g[to_bits(h, d.ell, l)] = to_scalar(r, l);
      } else if (l.key == "core") {
        auto [h, r] = head_and_rest(l);
        d.core[to_bits(h, d.n, l)] = to_scalar(r, l);
      } else if (l.key == "anchor") {
        d.anchor = to_bits(l.rest, d.n * d.ell, l);
      } else if (l.key == "beta") {
        d.beta = to_bits(l.rest, d.ell, l);
      } else if (l.key == "base") {
        d.base = to_scalar(l.rest, l);
      } else if (l.key == "pivot") {
        const auto parts = split(l.rest);
        if (parts.size() != 2) fail(l, "pivot needs two blocks");
        d.theta = to_bits(parts[0], d.ell, l);
        d.eta = to_bits(parts[1], d.ell, l);
      } else if (l.key == "columns") {
        d.columns = to_bits(l.rest, (d.n - 1) * d.ell, l);
      } else if (l.key == "shift") {
        const auto parts = split(l.rest);
        if (parts.size() != 2) fail(l, "shift needs s and t");
        d.s = to_uint(parts[0], l);
        d.t = to_uint(parts[1], l);
      } else if (l.key == "r") {
        d.r = to_scalar(l.rest, l);
      } else {
        fail(l, "unknown keyword '" + str(l.key) + "'");
      }
    }
  }
  if (!have_rank || !have_block || !have_blocks) throw ParseError("missing rank, block or blocks line");
  if (d.g.empty()) {
    d.g.assign(std::size_t{1} << d.ell, Scalar());
    d.core = BooleanSignature(d.n);
  }
  return d;
}

LoadedGrid parse_grid(std::string_view text, const std::filesystem::path& base_dir) {
  const std::vector<Line> lines = lines_of(text);
  std::optional<unsigned> q;
  struct VertexRef {
    Line line;
    bool u_side;
    std::string id, ref;
  };
  std::vector<VertexRef> refs;
  std::vector<std::pair<Line, std::pair<std::string, std::string>>> edges;
  std::vector<std::pair<Line, std::string>> orders;
  std::map<std::string, std::pair<Line, std::string>> gate_refs;
  for (const Line& l : lines) {
    if (l.key == "q") {
      if (q) fail(l, "duplicate q line");
      q = to_uint(l.rest, l);
      if (*q == 0) fail(l, "domain size must be positive");
    } else if (l.key == "uvertex" || l.key == "vvertex") {
      const auto parts = split(l.rest);
      if (parts.size() != 2) fail(l, "vertex line needs an id and a signature reference");
      refs.push_back({l, l.key == "uvertex", str(parts[0]), str(parts[1])});
    } else if (l.key == "edge") {
      const auto parts = split(l.rest);
      if (parts.size() != 2) fail(l, "edge needs two vertex ids");
      edges.push_back({l, {str(parts[0]), str(parts[1])}});
    } else if (l.key == "order") {
      orders.push_back({l, str(l.rest)});
    } else if (l.key == "gate") {
      const auto parts = split(l.rest);
      if (parts.size() != 2) fail(l, "gate line needs an id and a gate reference");
      gate_refs[str(parts[0])] = {l, str(parts[1])};
    } else {
      fail(l, "unknown keyword '" + str(l.key) + "'");
    }
  }
  if (!q) throw ParseError("missing q line");
  LoadedGrid out{SignatureGrid(*q), {}};
  SignatureGrid& g = out.grid;
  for (const VertexRef& r : refs) {
    if (g.find(r.id) != g.vertices().size()) fail(r.line, "duplicate vertex id " + r.id);
    g.add_vertex(r.id, r.u_side, DomainSignature(*q, 0));
  }
  for (const auto& [l, ends] : edges) {
    const std::size_t a = g.find(ends.first), b = g.find(ends.second);
    if (a == g.vertices().size() || b == g.vertices().size()) fail(l, "edge names an unknown vertex");
    try {
      if (g.vertex(a).u_side) g.add_edge(a, b);
      else g.add_edge(b, a);
    } catch (const PreconditionError& e) {
      fail(l, e.what());
    }
  }
  for (const auto& [l, rest] : orders) {
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos) fail(l, "order line needs '<id>: <edges>'");
    const std::string id = str(trim(std::string_view(rest).substr(0, colon)));
    const std::size_t k = g.find(id);
    if (k == g.vertices().size()) fail(l, "order names an unknown vertex");
    std::vector<std::size_t> ord;
    for (std::string_view s : split(std::string_view(rest).substr(colon + 1))) {
      const unsigned e = to_uint(s, l);
      if (e < 1 || e > g.edges().size()) fail(l, "edge " + str(s) + " out of range");
      ord.push_back(e - 1);
    }
    try {
      g.set_order(k, std::move(ord));
    } catch (const PreconditionError& e) {
      fail(l, e.what());
    }
  }
  for (std::size_t k = 0; k < refs.size(); ++k) {
    const VertexRef& r = refs[k];
    const unsigned deg = static_cast<unsigned>(g.vertex(k).order.size());
    try {
      if (r.ref == "eq") {
        g.set_signature(k, deg == 0 ? DomainSignature(*q, 0, {Scalar(1)}) : equality(*q, deg));
      } else if (r.ref == "exact-one") {
        if (*q != 2) fail(r.line, "exact-one is Boolean");
        g.set_signature(k, exact_one(deg));
      } else {
        const std::string body = read_file(base_dir / r.ref);
        const std::vector<Line> parsed = lines_of(body);
        const bool domain =
            std::any_of(parsed.begin(), parsed.end(), [](const Line& x) { return x.key == "q"; });
        g.set_signature(k, domain ? parse_domain_signature(body)
                                  : DomainSignature::from_boolean(parse_signature(body), 1));
      }
    } catch (const ParseError& e) {
      fail(r.line, std::string(r.ref) + ": " + e.what());
    }
  }
  out.gates.resize(refs.size());
  for (const auto& [id, ref] : gate_refs) {
    const std::size_t k = g.find(id);
    if (k == g.vertices().size()) fail(ref.first, "gate names an unknown vertex");
    if (ref.second == "exact-one")
      out.gates[k] = exact_one_gate(static_cast<unsigned>(g.vertex(k).order.size()));
    else
      out.gates[k] = parse_matchgate(read_file(base_dir / ref.second));
  }
  try {
    g.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return out;
}

LoadedGrid load_grid(const std::filesystem::path& path) {
  return parse_grid(read_file(path), path.parent_path());
}

}  // namespace holomatch::io
