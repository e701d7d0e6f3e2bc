#include "holomatch/bits.hpp"

#include "holomatch/errors.hpp"

namespace holomatch {

std::string format_bits(Index a, unsigned arity) {
  std::string s(arity, '0');
  for (unsigned p = 1; p <= arity; ++p)
    if (bit_at(a, arity, p)) s[p - 1] = '1';
  return s;
}

Index parse_bits(std::string_view text, unsigned* arity) {
  if (text.size() > 63) throw ParseError("bitstring too long");
  Index a = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw ParseError("malformed bitstring '" + std::string(text) + "'");
    a = (a << 1) | static_cast<Index>(ch == '1');
  }
  *arity = static_cast<unsigned>(text.size());
  return a;
}

Index parse_bits(std::string_view text, unsigned arity) {
  unsigned got = 0;
  Index a = parse_bits(text, &got);
  if (got != arity)
    throw ParseError("bitstring '" + std::string(text) + "' does not have length " +
                     std::to_string(arity));
  return a;
}

std::vector<unsigned> positions_of(Index mask, unsigned arity) {
  std::vector<unsigned> out;
  for (unsigned p = 1; p <= arity; ++p)
    if (bit_at(mask, arity, p)) out.push_back(p);
  return out;
}

Index mask_of(const std::vector<unsigned>& positions, unsigned arity) {
  Index m = 0;
  for (unsigned p : positions) {
    if (p < 1 || p > arity) throw PreconditionError("position out of range");
    m |= position_mask(arity, p);
  }
  return m;
}

}  // namespace holomatch
