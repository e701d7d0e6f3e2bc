#include "holomatch/signature.hpp"

#include <string>

#include "holomatch/errors.hpp"

namespace holomatch {

BooleanSignature::BooleanSignature(unsigned arity) : arity_(arity) {
  if (arity > kMaxDenseArity)
    throw CapExceeded("signature arity " + std::to_string(arity) + " exceeds dense limit");
  entries_.assign(std::size_t{1} << arity, Scalar());
}

BooleanSignature::BooleanSignature(unsigned arity, std::vector<Scalar> entries)
    : arity_(arity), entries_(std::move(entries)) {
  if (arity > kMaxDenseArity)
    throw CapExceeded("signature arity " + std::to_string(arity) + " exceeds dense limit");
  if (entries_.size() != (std::size_t{1} << arity))
    throw PreconditionError("signature of arity " + std::to_string(arity) + " needs " +
                            std::to_string(std::size_t{1} << arity) + " entries");
}

bool BooleanSignature::is_zero() const {
  for (const Scalar& s : entries_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Index> BooleanSignature::support() const {
  std::vector<Index> out;
  for (Index a = 0; a < entries_.size(); ++a)
    if (!entries_[a].is_zero()) out.push_back(a);
  return out;
}

BooleanSignature operator+(const BooleanSignature& x, const BooleanSignature& y) {
  if (x.arity_ != y.arity_) throw PreconditionError("signature arity mismatch");
  BooleanSignature out(x.arity_);
  for (std::size_t k = 0; k < x.size(); ++k) out.entries_[k] = x.entries_[k] + y.entries_[k];
  return out;
}

BooleanSignature operator*(const Scalar& c, const BooleanSignature& x) {
  BooleanSignature out(x.arity_);
  for (std::size_t k = 0; k < x.size(); ++k) out.entries_[k] = c * x.entries_[k];
  return out;
}

BooleanSignature tensor(const BooleanSignature& x, const BooleanSignature& y) {
  BooleanSignature out(x.arity() + y.arity());
  for (Index a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (Index b = 0; b < y.size(); ++b) out[(a << y.arity()) | b] = x[a] * y[b];
  }
  return out;
}

}  // namespace holomatch
