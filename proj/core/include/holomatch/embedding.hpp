#pragma once

#include <optional>
#include <vector>

#include "holomatch/matchgate.hpp"

namespace holomatch {

struct Dart {
  unsigned from = 0;
  unsigned to = 0;
};

/// Faces of a rotation system. Each face is the dart cycle obtained by
/// following next(u→v) = (v→w) with w the counterclockwise predecessor of u
/// around v, so bounded faces are walked counterclockwise.
struct FaceSet {
  std::vector<std::vector<Dart>> faces;
  std::vector<unsigned> face_component;    // component id of each face
  std::vector<unsigned> vertex_component;  // component id of each vertex
  unsigned components = 0;
};

FaceSet trace_faces(const Matchgate& g);

/// V − E + F = 2 for every connected component (an isolated vertex counts one face).
bool euler_check(const Matchgate& g);

/// Throws PlanarityError when the gate has no rotation system or fails the Euler check.
void require_planar(const Matchgate& g);

/// A place in a vertex's rotation: a new neighbour goes directly after `after`
/// in counterclockwise order (or becomes the only entry when `isolated`).
struct Corner {
  unsigned vertex = 0;
  unsigned after = 0;
  bool isolated = false;
};

/// Locates, for every external node in order, a corner on a common face of its
/// component such that the externals appear counterclockwise in list order.
/// Externals of different components must form contiguous cyclic runs.
/// Returns nullopt when no such face exists.
std::optional<std::vector<Corner>> external_corners(const Matchgate& g);

/// Inserts `neighbor` into `rotation` at corner c.
void insert_at_corner(std::vector<unsigned>& rotation, const Corner& c, unsigned neighbor);

}  // namespace holomatch
