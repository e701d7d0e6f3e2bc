#pragma once

#include <cstdint>
#include <vector>

#include "holomatch/matchgate.hpp"
#include "holomatch/random.hpp"

namespace holomatch {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Sets the rotation system from a straight-line drawing: neighbours of each
/// vertex sorted counterclockwise by exact integer angle comparison.
void set_rotation_from_points(Matchgate& g, const std::vector<Point>& pts);

/// rows × cols grid graph, vertices row-major from the top-left, all weights w.
Matchgate grid_gate(unsigned rows, unsigned cols, const Scalar& w = 1);

/// The 3-row ladder with a weight −1 middle rung and the four corners external.
/// Counterclockwise order is top-left, bottom-left, bottom-right, top-right;
/// row-major order is top-left, top-right, bottom-left, bottom-right (the
/// latter is not a counterclockwise order of the outer face).
Matchgate gamma1(bool counterclockwise = true);

/// Random nonzero rational edge weight a/b with |a| ≤ 3, 1 ≤ b ≤ 3.
Scalar random_weight(Rng& rng);

/// Random connected plane graph on 2..max_vertices vertices with a valid
/// rotation system: a thinned grid with diagonals, a convex polygon with
/// non-crossing chords, or a partial wheel. Labels are shuffled.
Matchgate random_plane_graph(Rng& rng, unsigned max_vertices);

/// Random plane gate: a random plane graph with `arity` external nodes taken
/// counterclockwise along one face (arity ≤ face length).
Matchgate random_plane_gate(Rng& rng, unsigned max_vertices, unsigned max_arity);
/// As above with arity drawn from [min_arity, max_arity]; graphs whose chosen
/// face is too short are redrawn.
Matchgate random_plane_gate(Rng& rng, unsigned max_vertices, unsigned min_arity,
                            unsigned max_arity);

}  // namespace holomatch
