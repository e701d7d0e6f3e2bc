#include "holomatch/signature_algebra.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "holomatch/errors.hpp"
#include "holomatch/random.hpp"

namespace holomatch {

BlockView::BlockView(const BooleanSignature& sig, unsigned ell) : sig_(&sig), ell_(ell), n_(0) {
  if (ell == 0 || sig.arity() == 0 || sig.arity() % ell != 0)
    throw PreconditionError("arity " + std::to_string(sig.arity()) +
                            " is not a positive multiple of block size " + std::to_string(ell));
  n_ = sig.arity() / ell;
}

ParityVerdict check_parity(const BooleanSignature& s) {
  bool have_even = false, have_odd = false;
  ParityVerdict v;
  for (Index a = 0; a < s.size(); ++a) {
    if (s[a].is_zero()) continue;
    if (parity(a) == 0 && !have_even) {
      have_even = true;
      v.even_witness = a;
    } else if (parity(a) == 1 && !have_odd) {
      have_odd = true;
      v.odd_witness = a;
    }
  }
  if (have_even && have_odd) v.kind = ParityKind::kViolated;
  else if (have_even) v.kind = ParityKind::kEven;
  else if (have_odd) v.kind = ParityKind::kOdd;
  else v.kind = ParityKind::kZero;
  if (v.kind != ParityKind::kViolated) v.even_witness = v.odd_witness = 0;
  return v;
}

Scalar mgi_residual(const BooleanSignature& s, Index alpha,
                    const std::vector<unsigned>& positions) {
  const unsigned n = s.arity();
  if (positions.empty()) throw PreconditionError("position set must be nonempty");
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] < 1 || positions[k] > n) throw PreconditionError("position out of range");
    if (k > 0 && positions[k] <= positions[k - 1])
      throw PreconditionError("positions must be strictly increasing");
  }
  if (alpha >= s.size()) throw PreconditionError("pattern longer than the arity");
  const Index pmask = mask_of(positions, n);
  Scalar sum;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const Index e = position_mask(n, positions[k]);
    const Scalar& x = s[alpha ^ e];
    const Scalar& y = s[alpha ^ pmask ^ e];
    if (x.is_zero() || y.is_zero()) continue;
    if (k % 2 == 0) sum -= x * y;
    else sum += x * y;
  }
  return sum;
}

namespace {

using i128 = __int128;

// Entries scaled by a common denominator into Z[i, √2] with small coefficients.
struct IntegerForm {
  std::vector<std::int64_t> c;  // 4 coefficients per entry
  bool real_only = true;
};

std::optional<IntegerForm> integer_form(const BooleanSignature& s) {
  mpz_class den = 1;
  auto parts = [](const Scalar& x) {
    return std::array<const Rational*, 4>{&x.re(), &x.im(), &x.r2(), &x.ir2()};
  };
  for (const Scalar& x : s.entries())
    for (const Rational* r : parts(x))
      if (!r->is_integer()) {
        mpz_class d = r->denominator();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      }
  IntegerForm f;
  f.c.resize(4 * s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto ps = parts(s[k]);
    for (int q = 0; q < 4; ++q) {
      if (ps[q]->is_zero()) continue;
      mpz_class v = ps[q]->numerator() * (den / ps[q]->denominator());
      if (mpz_sizeinbase(v.get_mpz_t(), 2) > 55) return std::nullopt;
      f.c[4 * k + q] = v.get_si();
      if (q > 0) f.real_only = false;
    }
  }
  return f;
}

bool positions_less(Index a, Index b, unsigned n) {
  auto pa = positions_of(a, n), pb = positions_of(b, n);
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

bool witness_less(Index a1, Index p1, Index a2, Index p2, unsigned n) {
  if (a1 != a2) return positions_less(a1, a2, n);
  return positions_less(p1, p2, n);
}

// Evaluates whether the residual at (α, P) is nonzero. `bits` lists P's masks in position order.
class ResidualTest {
 public:
  explicit ResidualTest(const BooleanSignature& s) : s_(s), nz_(s.size()) {
    for (Index a = 0; a < s.size(); ++a) nz_[a] = !s[a].is_zero();
    form_ = integer_form(s);
  }

  bool nonzero(Index alpha, Index pmask, const std::vector<Index>& bits) const {
    if (form_) return form_->real_only ? int_real(alpha, pmask, bits) : int_full(alpha, pmask, bits);
    Scalar sum;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const Index x = alpha ^ bits[k], y = alpha ^ pmask ^ bits[k];
      if (!nz_[x] || !nz_[y]) continue;
      if (k % 2 == 0) sum -= s_[x] * s_[y];
      else sum += s_[x] * s_[y];
    }
    return !sum.is_zero();
  }

 private:
  bool int_real(Index alpha, Index pmask, const std::vector<Index>& bits) const {
    i128 sum = 0;
    const auto& c = form_->c;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const Index x = alpha ^ bits[k], y = alpha ^ pmask ^ bits[k];
      if (!nz_[x] || !nz_[y]) continue;
      const i128 p = static_cast<i128>(c[4 * x]) * c[4 * y];
      sum += (k % 2 == 0) ? -p : p;
    }
    return sum != 0;
  }

  bool int_full(Index alpha, Index pmask, const std::vector<Index>& bits) const {
    i128 acc[4] = {0, 0, 0, 0};
    const auto& c = form_->c;
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const Index x = alpha ^ bits[k], y = alpha ^ pmask ^ bits[k];
      if (!nz_[x] || !nz_[y]) continue;
      const i128 a1 = c[4 * x], b1 = c[4 * x + 1], c1 = c[4 * x + 2], d1 = c[4 * x + 3];
      const i128 a2 = c[4 * y], b2 = c[4 * y + 1], c2 = c[4 * y + 2], d2 = c[4 * y + 3];
      i128 t[4] = {a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
                   a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
                   a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
                   a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2};
      for (int q = 0; q < 4; ++q) acc[q] += (k % 2 == 0) ? -t[q] : t[q];
    }
    return acc[0] != 0 || acc[1] != 0 || acc[2] != 0 || acc[3] != 0;
  }

  const BooleanSignature& s_;
  std::vector<char> nz_;
  std::optional<IntegerForm> form_;
};

std::vector<Index> mask_bits(Index pmask, unsigned n) {
  std::vector<Index> bits;
  for (unsigned p = 1; p <= n; ++p)
    if (bit_at(pmask, n, p)) bits.push_back(position_mask(n, p));
  return bits;
}

}  // namespace

MgiVerdict check_mgi(const BooleanSignature& s, const MgiOptions& options) {
  const unsigned n = s.arity();
  MgiVerdict v;
  const ParityVerdict par = check_parity(s);
  if (par.kind == ParityKind::kZero || n == 0) return v;
  const ResidualTest test(s);
  const Index size = s.size();

  if (n > options.exhaustive_cap) {
    if (!options.allow_sampling)
      throw CapExceeded("exhaustive MGI check limited to arity " +
                        std::to_string(options.exhaustive_cap) + "; enable sampling");
    v.exhaustive = false;
    Rng rng(options.seed);
    for (std::uint64_t k = 0; k < options.samples; ++k) {
      const Index alpha = rng.below(size);
      const Index pmask = 1 + rng.below(size - 1);
      ++v.checked;
      if (test.nonzero(alpha, pmask, mask_bits(pmask, n))) {
        v.pass = false;
        v.alpha = alpha;
        v.positions = pmask;
        v.residual = mgi_residual(s, alpha, positions_of(pmask, n));
        return v;
      }
    }
    return v;
  }

  // With the parity condition, every nonzero term needs wt(P) even and a fixed parity of α.
  const bool prune = par.kind != ParityKind::kViolated;
  const unsigned alpha_parity = par.kind == ParityKind::kEven ? 1U : 0U;
  for (Index pmask = 1; pmask < size; ++pmask) {
    if (prune && parity(pmask) == 1) continue;
    const std::vector<Index> bits = mask_bits(pmask, n);
    for (Index alpha = 0; alpha < size; ++alpha) {
      if (prune && parity(alpha) != alpha_parity) continue;
      ++v.checked;
      if (!test.nonzero(alpha, pmask, bits)) continue;
      if (v.pass || witness_less(alpha, pmask, v.alpha, v.positions, n)) {
        v.pass = false;
        v.alpha = alpha;
        v.positions = pmask;
      }
    }
  }
  if (!v.pass) v.residual = mgi_residual(s, v.alpha, positions_of(v.positions, n));
  return v;
}

SymmetryVerdict is_blockwise_symmetric(const BlockView& v) {
  const BooleanSignature& s = v.signature();
  for (unsigned j = 0; j + 1 < v.blocks(); ++j)
    for (Index a = 0; a < s.size(); ++a) {
      const Index x = v.block(a, j), y = v.block(a, j + 1);
      if (x >= y) continue;
      const Index b = v.with(v.with(a, j, y), j + 1, x);
      if (!(s[a] == s[b])) return {false, j, a};
    }
  return {};
}

Matrix matrix_form(const BlockView& v) {
  const unsigned rest = (v.blocks() - 1) * v.ell();
  const std::size_t rows = std::size_t{1} << v.ell(), cols = std::size_t{1} << rest;
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[(static_cast<Index>(r) << rest) | c];
  return m;
}

DetVerdict check_det_identities(const BlockView& v) {
  if (v.blocks() < 3) throw PreconditionError("determinant identities need at least 3 blocks");
  const unsigned ell = v.ell();
  const BooleanSignature& s = v.signature();
  auto e = [ell](unsigned pos) { return Index{1} << (ell - pos); };
  auto shift = [&](Index a, Index d1, Index d2, Index d3) {
    return v.with(v.with(v.with(a, 0, v.block(a, 0) ^ d1), 1, v.block(a, 1) ^ d2), 2,
                  v.block(a, 2) ^ d3);
  };
  DetVerdict out;
  auto test = [&](char kind, Index a, unsigned i, unsigned j, unsigned p, unsigned q,
                  Index d2, Index d3) {
    ++out.checked;
    const Index dij = e(i) ^ e(j);
    const Scalar& g00 = s[a];
    const Scalar& g11 = s[shift(a, dij, d2, d3)];
    const Scalar& g10 = s[shift(a, dij, 0, 0)];
    const Scalar& g01 = s[shift(a, 0, d2, d3)];
    Scalar det;
    if (!g00.is_zero() && !g11.is_zero()) det += g00 * g11;
    if (!g10.is_zero() && !g01.is_zero()) det -= g10 * g01;
    if (det.is_zero()) return false;
    out = {false, kind, a, i, j, p, q, det, out.checked};
    return true;
  };
  for (Index a = 0; a < s.size(); ++a) {
    for (unsigned i = 1; i <= ell; ++i)
      for (unsigned j = i + 1; j <= ell; ++j) {
        for (unsigned p = 1; p <= ell; ++p)
          for (unsigned q = 1; q <= ell; ++q)
            if (test('A', a, i, j, p, q, e(p), e(q))) return out;
        for (unsigned p = 1; p <= ell; ++p)
          for (unsigned q = p + 1; q <= ell; ++q)
            if (test('B', a, i, j, p, q, e(p) ^ e(q), 0)) return out;
      }
  }
  return out;
}

bool rows_independent(const Matrix& m, std::size_t r1, std::size_t r2) {
  std::size_t c0 = 0;
  while (c0 < m.cols() && m(r1, c0).is_zero()) ++c0;
  if (c0 == m.cols()) return false;
  const Scalar& u0 = m(r1, c0);
  const Scalar& v0 = m(r2, c0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Scalar& u = m(r1, c);
    const Scalar& w = m(r2, c);
    if (u.is_zero() && w.is_zero()) continue;
    if (!(u0 * w == v0 * u)) return true;
  }
  return false;
}

std::optional<MinPair> find_min_weight_pair(const BlockView& v, bool same_parity) {
  const Matrix m = matrix_form(v);
  std::optional<MinPair> best;
  for (Index a = 0; a < m.rows(); ++a)
    for (Index b = a + 1; b < m.rows(); ++b) {
      if (same_parity && parity(a) != parity(b)) continue;
      const unsigned w = weight(a ^ b);
      if (best && w >= best->weight) continue;
      if (rows_independent(m, a, b)) best = MinPair{a, b, w};
    }
  return best;
}

}  // namespace holomatch
