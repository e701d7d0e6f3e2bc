#pragma once

#include <vector>

#include "holomatch/matchgate.hpp"
#include "holomatch/matrix.hpp"

namespace holomatch {

/// Per-edge direction: forward[e] means edge e = (u, v) is oriented u → v.
struct KasteleynOrientation {
  std::vector<bool> forward;
};

/// Builds a Pfaffian orientation of a plane graph: spanning-forest edges are
/// oriented arbitrarily, then each remaining edge is fixed while pruning
/// leaves of the dual tree so that every face except one per component has an
/// odd number of edges against its walk. Throws PlanarityError.
KasteleynOrientation orient(const Matchgate& g);

/// True when every component has at most one face with an even number of edges
/// oriented against the face walk.
bool is_kasteleyn(const Matchgate& g, const KasteleynOrientation& o);

/// Pfaffian of a skew-symmetric matrix by congruence elimination with pivoting.
/// Odd dimension gives 0, dimension 0 gives 1. Throws PreconditionError if not skew.
Scalar pfaffian(Matrix m);

/// Skew matrix with entry w at (u, v) when the edge is oriented u → v.
Matrix kasteleyn_matrix(const Matchgate& g, const KasteleynOrientation& o);

/// PerfMatch via the Pfaffian of a Kasteleyn matrix, per connected component.
/// The sign is fixed by locating one perfect matching and matching the sign
/// of its term in the Pfaffian expansion. Throws PlanarityError.
Scalar perfmatch_fkt(const Matchgate& g);

}  // namespace holomatch
