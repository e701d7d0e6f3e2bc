#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holomatch/decompose.hpp"
#include "holomatch/holant.hpp"
#include "holomatch/holographic.hpp"
#include "holomatch/matchgate.hpp"

// Line-based text formats. Blank lines and text after '#' are ignored. Parse
// failures throw ParseError naming the line.
namespace holomatch::io {

/// `nodes <k>`, `edge <u> <v> <scalar>`, `external <v…>`, `rot <v>: <nbrs ccw>`; ids 1-based.
/// Vertices without a rot line keep their edge order, which is only a choice
/// when the degree is at least 3.
Matchgate parse_matchgate(std::string_view text);
std::string format_matchgate(const Matchgate& g);

/// `arity <n>` then `<bitstring> <scalar>` per nonzero entry; `-` is the empty bitstring.
BooleanSignature parse_signature(std::string_view text);
std::string format_signature(const BooleanSignature& s);

/// `q <q>`, `arity <n>`, then `<tuple> <scalar>` per nonzero entry. A tuple is a
/// digit string when q ≤ 10, or comma-separated values.
DomainSignature parse_domain_signature(std::string_view text);
std::string format_domain_signature(const DomainSignature& f);

/// `rows <r>`, `cols <c>`, then r·c scalars in row-major order, separated by
/// commas or line breaks.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

std::string format_decomposition(const Decomposition& d);
Decomposition parse_decomposition(std::string_view text);

struct LoadedGrid {
  SignatureGrid grid;
  std::vector<std::optional<Matchgate>> gates;  // from `gate <id> <ref>` lines
};

/// Grid file: `q <q>`, `uvertex <id> <sigref>`, `vvertex <id> <sigref>`,
/// `edge <u> <v>` (edges numbered from 1 in file order), `order <id>: <edges ccw>`,
/// `gate <id> <gateref>`. A sigref is `eq`, `exact-one`, or a path to a domain or
/// Boolean signature file; a gateref is `exact-one` or a matchgate file. Paths are
/// relative to the grid file.
LoadedGrid parse_grid(std::string_view text, const std::filesystem::path& base_dir = {});
LoadedGrid load_grid(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace holomatch::io
