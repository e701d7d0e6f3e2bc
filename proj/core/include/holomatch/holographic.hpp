#pragma once

#include <cstddef>
#include <vector>

#include "holomatch/matrix.hpp"
#include "holomatch/random.hpp"
#include "holomatch/signature.hpp"

namespace holomatch {

/// Largest q^n stored densely.
inline constexpr std::size_t kMaxDomainEntries = std::size_t{1} << 24;

/// Dense function [q]^n → ℚ(i, √2), indexed by (i₁, …, iₙ) in base q with i₁
/// most significant.
class DomainSignature {
 public:
  DomainSignature() : q_(2), entries_(1) {}
  DomainSignature(unsigned q, unsigned arity);
  DomainSignature(unsigned q, unsigned arity, std::vector<Scalar> entries);

  [[nodiscard]] unsigned domain() const { return q_; }
  [[nodiscard]] unsigned arity() const { return arity_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Scalar>& entries() const { return entries_; }

  const Scalar& operator[](std::size_t k) const { return entries_[k]; }
  Scalar& operator[](std::size_t k) { return entries_[k]; }
  [[nodiscard]] const Scalar& at(const std::vector<unsigned>& tuple) const;

  [[nodiscard]] std::size_t index_of(const std::vector<unsigned>& tuple) const;
  [[nodiscard]] std::vector<unsigned> tuple_of(std::size_t k) const;

  /// Invariance under every adjacent transposition of arguments.
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_zero() const;

  /// Domain 2^ℓ reading of a Boolean signature; block j is argument j.
  static DomainSignature from_boolean(const BooleanSignature& s, unsigned ell);
  /// Inverse of from_boolean; q must be a power of two.
  [[nodiscard]] BooleanSignature to_boolean() const;

  friend bool operator==(const DomainSignature& x, const DomainSignature& y) = default;
  friend DomainSignature operator+(const DomainSignature& x, const DomainSignature& y);
  friend DomainSignature operator*(const Scalar& c, const DomainSignature& x);

 private:
  unsigned q_ = 2;
  unsigned arity_ = 0;
  std::vector<Scalar> entries_;
};

/// q × 2^ℓ basis-change matrix with its exact rank.
class TransformMatrix {
 public:
  explicit TransformMatrix(Matrix m);

  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] unsigned q() const { return static_cast<unsigned>(m_.rows()); }
  [[nodiscard]] unsigned block() const { return ell_; }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] bool full_rank() const { return rank_ == m_.rows(); }

 private:
  Matrix m_;
  unsigned ell_ = 0;
  std::size_t rank_ = 0;
};

/// (=ₙ) over [q].
DomainSignature equality(unsigned q, unsigned n);

/// g^{j₁…jₙ} = Σ_i f^{i₁…iₙ} A[i₁][j₁] ⋯ A[iₙ][jₙ], for A of shape q × d.
DomainSignature apply_each(const DomainSignature& f, const Matrix& a);

/// fM^{⊗n} as a Boolean signature of arity nℓ.
BooleanSignature transform(const DomainSignature& f, const TransformMatrix& m);

/// q × q^{n−1} matrix with rows indexed by the first argument.
Matrix domain_matrix_form(const DomainSignature& f);

/// Mᵀ M(f) M^{⊗(n−1)}; f must be symmetric with n ≥ 1.
Matrix matrix_form_factored(const DomainSignature& f, const TransformMatrix& m);

/// 2^ℓ × q matrix M̌ with M M̌ = I_q, supported on the pivot columns of M.
Matrix right_inverse(const TransformMatrix& m);

/// [1 1; 1 −1], divided by √2 when normalized.
TransformMatrix hadamard(bool normalized);

/// q × cols matrix with entries in [−bound, bound], redrawn until its rank is q.
TransformMatrix random_full_rank(Rng& rng, unsigned q, unsigned cols, int bound = 3);

/// Symmetric f over [q] with small integer values chosen per multiset of arguments.
DomainSignature random_symmetric(Rng& rng, unsigned q, unsigned n, int bound = 3);

}  // namespace holomatch
