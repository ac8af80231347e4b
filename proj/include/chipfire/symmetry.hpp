#pragma once

#include "chipfire/multigraph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace chipfire {

/// Vertex permutation as an image vector: sigma[v] is where v goes.
using VertexPermutation = std::vector<VertexId>;

inline constexpr int kDefaultAutBound = 64;

/// True iff sigma is a bijection preserving the edge multiset with
/// multiplicity (loops map to loops). Parallel edges are not individually
/// tracked; automorphisms act on vertices only.
bool is_automorphism(const Multigraph& g, const VertexPermutation& sigma);

Int aut_order(const Multigraph& g, int max_vertices = kDefaultAutBound);

/// All automorphisms in a deterministic order (backtracking with degree and
/// neighborhood-profile refinement).
std::vector<VertexPermutation> automorphisms(const Multigraph& g,
                                             int max_vertices = kDefaultAutBound);
/// The automorphisms of order at most 2, identity included.
std::vector<VertexPermutation> involutions(const Multigraph& g,
                                           int max_vertices = kDefaultAutBound);

/// Quotient of a loop-free graph by an involution: vertices become orbits.
/// Each orbit of edge types contributes its multiplicity between the image
/// vertices, except that an edge whose endpoints are swapped collapses to
/// nothing, and parallel copies of an endpoint-fixed type fold in pairs
/// (ceil(m/2) survive). With those rules the doubled-edge flips the
/// constructions rely on quotient to trees.
Multigraph quotient(const Multigraph& g, const VertexPermutation& sigma);

/// First involution (in stream order) whose quotient is a tree, when one
/// exists. Requires a loop-free connected graph of genus >= 2.
std::optional<VertexPermutation> find_tree_quotient_involution(
    const Multigraph& g, int max_vertices = kDefaultAutBound);

bool are_isomorphic(const Multigraph& a, const Multigraph& b);
/// Isomorphism test with a pinned vertex pair (root-preserving).
bool are_isomorphic_rooted(const Multigraph& a, VertexId root_a,
                           const Multigraph& b, VertexId root_b);

}  // namespace chipfire
