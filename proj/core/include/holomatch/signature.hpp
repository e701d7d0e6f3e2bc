#pragma once

#include <cstddef>
#include <vector>

#include "holomatch/bits.hpp"
#include "holomatch/scalar.hpp"

namespace holomatch {

/// Largest arity for which dense 2^n storage is allowed.
inline constexpr unsigned kMaxDenseArity = 24;

/// Dense vector of 2^n scalars indexed by bitstrings (i₁ most significant).
class BooleanSignature {
 public:
  BooleanSignature() : entries_(1) {}
  explicit BooleanSignature(unsigned arity);
  BooleanSignature(unsigned arity, std::vector<Scalar> entries);

  [[nodiscard]] unsigned arity() const { return arity_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Scalar>& entries() const { return entries_; }

  const Scalar& operator[](Index a) const { return entries_[a]; }
  Scalar& operator[](Index a) { return entries_[a]; }

  [[nodiscard]] bool is_zero() const;
  /// Indices of nonzero entries in increasing order.
  [[nodiscard]] std::vector<Index> support() const;

  friend bool operator==(const BooleanSignature& x, const BooleanSignature& y) = default;
  friend BooleanSignature operator+(const BooleanSignature& x, const BooleanSignature& y);
  friend BooleanSignature operator*(const Scalar& c, const BooleanSignature& x);

 private:
  unsigned arity_ = 0;
  std::vector<Scalar> entries_;
};

/// (x ⊗ y)^{ab} = x^a · y^b, x's positions first.
BooleanSignature tensor(const BooleanSignature& x, const BooleanSignature& y);

}  // namespace holomatch
