#include "holomatch/holographic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "holomatch/errors.hpp"

namespace holomatch {
namespace {

std::size_t checked_power(unsigned q, unsigned n) {
  std::size_t size = 1;
  for (unsigned k = 0; k < n; ++k) {
    if (q != 0 && size > kMaxDomainEntries / q)
      throw CapExceeded(std::to_string(q) + "^" + std::to_string(n) + " entries exceed dense limit");
    size *= q;
  }
  if (size > kMaxDomainEntries)
    throw CapExceeded(std::to_string(q) + "^" + std::to_string(n) + " entries exceed dense limit");
  return size;
}

}  // namespace

DomainSignature::DomainSignature(unsigned q, unsigned arity) : q_(q), arity_(arity) {
  if (q == 0) throw PreconditionError("domain size must be positive");
  entries_.assign(checked_power(q, arity), Scalar());
}

DomainSignature::DomainSignature(unsigned q, unsigned arity, std::vector<Scalar> entries)
    : q_(q), arity_(arity), entries_(std::move(entries)) {
  if (q == 0) throw PreconditionError("domain size must be positive");
  if (entries_.size() != checked_power(q, arity))
    throw PreconditionError("domain signature needs q^n entries");
}

std::size_t DomainSignature::index_of(const std::vector<unsigned>& tuple) const {
  if (tuple.size() != arity_) throw PreconditionError("argument count does not match arity");
  std::size_t k = 0;
  for (unsigned x : tuple) {
    if (x >= q_) throw PreconditionError("argument outside the domain");
    k = k * q_ + x;
  }
  return k;
}

std::vector<unsigned> DomainSignature::tuple_of(std::size_t k) const {
  std::vector<unsigned> t(arity_);
  for (unsigned j = arity_; j-- > 0;) {
    t[j] = static_cast<unsigned>(k % q_);
    k /= q_;
  }
  return t;
}

const Scalar& DomainSignature::at(const std::vector<unsigned>& tuple) const {
  return entries_[index_of(tuple)];
}

bool DomainSignature::is_symmetric() const {
  // swapping arguments j and j+1 of index k
  std::size_t low = 1;
  for (unsigned j = arity_; j-- > 1;) {
    const std::size_t high = low * q_;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      const std::size_t a = (k / low) % q_;       // argument j
      const std::size_t b = (k / high) % q_;      // argument j−1
      if (a >= b) continue;
      const std::size_t swapped = k + (b - a) * low - (b - a) * high;
      if (!(entries_[k] == entries_[swapped])) return false;
    }
    low = high;
  }
  return true;
}

bool DomainSignature::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

DomainSignature DomainSignature::from_boolean(const BooleanSignature& s, unsigned ell) {
  if (ell == 0 || s.arity() % ell != 0)
    throw PreconditionError("arity is not a multiple of the block size");
  return DomainSignature(1U << ell, s.arity() / ell, s.entries());
}

BooleanSignature DomainSignature::to_boolean() const {
  if (!std::has_single_bit(q_)) throw PreconditionError("domain size is not a power of two");
  const unsigned ell = static_cast<unsigned>(std::countr_zero(q_));
  return BooleanSignature(ell * arity_, entries_);
}

DomainSignature operator+(const DomainSignature& x, const DomainSignature& y) {
  if (x.q_ != y.q_ || x.arity_ != y.arity_) throw PreconditionError("domain signature shape mismatch");
  DomainSignature out(x.q_, x.arity_);
  for (std::size_t k = 0; k < x.size(); ++k) out.entries_[k] = x.entries_[k] + y.entries_[k];
  return out;
}

DomainSignature operator*(const Scalar& c, const DomainSignature& x) {
  DomainSignature out(x.q_, x.arity_);
  for (std::size_t k = 0; k < x.size(); ++k) out.entries_[k] = c * x.entries_[k];
  return out;
}

TransformMatrix::TransformMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw PreconditionError("transform matrix is empty");
  if (!std::has_single_bit(m_.cols()) || m_.cols() < 2)
    throw PreconditionError("transform matrix needs 2^l columns with l >= 1");
  ell_ = static_cast<unsigned>(std::countr_zero(m_.cols()));
  rank_ = exact_rank(m_);
}

DomainSignature equality(unsigned q, unsigned n) {
  if (q == 0 || n == 0) throw PreconditionError("equality needs q >= 1 and n >= 1");
  DomainSignature f(q, n);
  std::size_t step = 0;  // index of (1, 1, …, 1)
  for (unsigned k = 0; k < n; ++k) step = step * q + 1;
  for (unsigned i = 0; i < q; ++i) f[i * step] = 1;
  return f;
}

DomainSignature apply_each(const DomainSignature& f, const Matrix& a) {
  const unsigned q = f.domain(), n = f.arity();
  if (a.rows() != q) throw PreconditionError("matrix rows do not match the domain size");
  const unsigned d = static_cast<unsigned>(a.cols());
  checked_power(d, n);
  std::vector<Scalar> cur = f.entries();
  std::size_t outer = 1;
  for (unsigned k = 0; k < n; ++k) {
    std::size_t inner = 1;
    for (unsigned j = k + 1; j < n; ++j) inner *= q;
    std::vector<Scalar> next(outer * d * inner);
    for (std::size_t o = 0; o < outer; ++o)
      for (unsigned r = 0; r < q; ++r)
        for (std::size_t in = 0; in < inner; ++in) {
          const Scalar& x = cur[(o * q + r) * inner + in];
          if (x.is_zero()) continue;
          for (unsigned c = 0; c < d; ++c) {
            if (a(r, c).is_zero()) continue;
            next[(o * d + c) * inner + in] += x * a(r, c);
          }
        }
    cur = std::move(next);
    outer *= d;
  }
  return DomainSignature(d, n, std::move(cur));
}

BooleanSignature transform(const DomainSignature& f, const TransformMatrix& m) {
  if (f.domain() != m.q()) throw PreconditionError("transform matrix has the wrong number of rows");
  return apply_each(f, m.matrix()).to_boolean();
}

Matrix domain_matrix_form(const DomainSignature& f) {
  if (f.arity() == 0) throw PreconditionError("matrix form needs arity >= 1");
  const std::size_t cols = f.size() / f.domain();
  Matrix out(f.domain(), cols);
  for (std::size_t r = 0; r < f.domain(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = f[r * cols + c];
  return out;
}

Matrix matrix_form_factored(const DomainSignature& f, const TransformMatrix& m) {
  if (f.domain() != m.q()) throw PreconditionError("transform matrix has the wrong number of rows");
  if (!f.is_symmetric()) throw PreconditionError("factored matrix form needs a symmetric signature");
  const Matrix& mm = m.matrix();
  return mm.transpose() * domain_matrix_form(f) * kron_power(mm, f.arity() - 1);
}

Matrix right_inverse(const TransformMatrix& m) {
  if (!m.full_rank()) throw PreconditionError("transform matrix is rank deficient");
  const Matrix& mm = m.matrix();
  const std::size_t q = mm.rows();
  const std::vector<std::size_t> pivots = row_reduce(mm).pivot_cols;
  Matrix basis(q, q);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t k = 0; k < q; ++k) basis(r, k) = mm(r, pivots[k]);
  const Matrix inv = inverse(basis);
  Matrix out(mm.cols(), q);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t c = 0; c < q; ++c) out(pivots[k], c) = inv(k, c);
  return out;
}

TransformMatrix hadamard(bool normalized) {
  const Scalar h = normalized ? Scalar(0, 0, Rational(1, 2), 0) : Scalar(1);
  Matrix m(2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = h;
  m(1, 1) = -h;
  return TransformMatrix(std::move(m));
}

TransformMatrix random_full_rank(Rng& rng, unsigned q, unsigned cols, int bound) {
  if (q > cols) throw PreconditionError("rank q needs at least q columns");
  for (;;) {
    Matrix m(q, cols);
    for (unsigned r = 0; r < q; ++r)
      for (unsigned c = 0; c < cols; ++c) m(r, c) = Scalar(rng.range(-bound, bound));
    TransformMatrix t(std::move(m));
    if (t.full_rank()) return t;
  }
}

DomainSignature random_symmetric(Rng& rng, unsigned q, unsigned n, int bound) {
  DomainSignature f(q, n);
  std::map<std::vector<unsigned>, Scalar> values;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::vector<unsigned> t = f.tuple_of(k);
    std::sort(t.begin(), t.end());
    auto it = values.find(t);
    if (it == values.end()) it = values.emplace(t, Scalar(rng.range(-bound, bound))).first;
    f[k] = it->second;
  }
  return f;
}

}  // namespace holomatch
