#pragma once

#include <vector>

#include "nervemorse/gluing.hpp"
#include "nervemorse/poset.hpp"

namespace nervemorse {

// Chessboard complex on an m x n board: vertices are squares "r<i>c<j>",
// faces are non-attacking rook placements, facets use min(m, n) rooks.
SimplicialComplex chessboard(int m, int n);

// Cover of the m x m chessboard complex by the stars of the column-1 vertices
// (i, 1), one per row; members are named "X1".."Xm". Every maximal placement
// meets column 1 exactly once, so the stars cover.
Cover star_cover(int m);

// Cycle graph complex on k vertices v0..v{k-1}; k >= 3.
SimplicialComplex cycle(int k);

// Full simplex on the given vertex set (empty set gives the empty complex).
SimplicialComplex simplex(const std::vector<Vertex>& vertices);

// Boundary complex of the (d+1)-simplex, a d-sphere; d >= 0.
SimplicialComplex sphere_boundary(int d);

// Cover of cycle(k) by `arcs` contiguous arcs, consecutive arcs overlapping in
// one vertex; members named "A1".."A<arcs>". Requires 2 <= arcs <= k.
Cover arc_cover(int k, int arcs = 3);

// Cover of a complex by its facets, each taken as a full simplex; members
// named "F1".."Fn".
Cover facet_cover(const SimplicialComplex& k);

// The worked matchings for star_cover(4): cone matchings on the four stars,
// the deterministic cycle matching on each hexagonal pairwise intersection,
// the empty matching on each vertex-triple intersection and on the empty total
// intersection. Passes check_hypothesis.
MorseAssignment canonical_chessboard_assignment(const Cover& cover);

}  // namespace nervemorse
