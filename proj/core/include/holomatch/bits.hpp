#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace holomatch {

/// A bitstring i₁i₂…iₙ stored with i₁ as the most significant of the low n bits.
using Index = std::uint64_t;

/// Mask of 1-based position `pos` in an arity-`arity` bitstring.
constexpr Index position_mask(unsigned arity, unsigned pos) {
  return Index{1} << (arity - pos);
}

constexpr bool bit_at(Index a, unsigned arity, unsigned pos) {
  return (a & position_mask(arity, pos)) != 0;
}

constexpr unsigned weight(Index a) { return static_cast<unsigned>(std::popcount(a)); }
constexpr unsigned parity(Index a) { return weight(a) & 1U; }

std::string format_bits(Index a, unsigned arity);
/// Parses a string of exactly `arity` characters from {0,1}.
Index parse_bits(std::string_view text, unsigned arity);
/// Parses a 0/1 string and reports its length as the arity.
Index parse_bits(std::string_view text, unsigned* arity);

/// Sorted 1-based positions of the set bits.
std::vector<unsigned> positions_of(Index mask, unsigned arity);
Index mask_of(const std::vector<unsigned>& positions, unsigned arity);

/// Block j (0-based) of size ell in an arity n·ell bitstring; block 0 is the leftmost.
constexpr Index block_of(Index a, unsigned ell, unsigned n, unsigned j) {
  return (a >> ((n - 1 - j) * ell)) & ((Index{1} << ell) - 1);
}

constexpr Index with_block(Index a, unsigned ell, unsigned n, unsigned j, Index value) {
  const unsigned shift = (n - 1 - j) * ell;
  const Index mask = ((Index{1} << ell) - 1) << shift;
  return (a & ~mask) | (value << shift);
}

/// n copies of the ell-bit block b concatenated.
constexpr Index repeat_block(Index b, unsigned ell, unsigned n) {
  Index out = 0;
  for (unsigned j = 0; j < n; ++j) out = (out << ell) | b;
  return out;
}

}  // namespace holomatch
