#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace chipfire {

using Int = std::int64_t;
using VertexId = int;

using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Undirected multigraph on dense vertex indices [0, n). Loops and parallel
/// edges are allowed; the edge multiset is stored as a sorted list of
/// normalized pairs (u <= v), so two graphs compare equal exactly when their
/// vertex counts and edge multisets agree. Instances are immutable after
/// construction and safe to share across threads.
class Multigraph {
 public:
  using Edge = std::pair<VertexId, VertexId>;

  Multigraph() = default;
  Multigraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Number of edge endpoints at v; a loop contributes 2.
  Int degree(VertexId v) const { return degree_[v]; }
  /// Degree ignoring loops entirely (the Laplacian diagonal).
  Int nonloop_degree(VertexId v) const { return degree_[v] - 2 * loops_[v]; }
  Int loops_at(VertexId v) const { return loops_[v]; }
  Int multiplicity(VertexId u, VertexId v) const;

  /// Non-loop neighbors of v with multiplicities, sorted by neighbor id.
  const std::vector<std::pair<VertexId, Int>>& neighbors(VertexId v) const {
    return nbrs_[v];
  }

  IntVector degrees() const;
  /// Loop-inert graph Laplacian: diag(nonloop degree) minus adjacency.
  IntMatrix laplacian() const;

  bool has_loops() const { return total_loops_ > 0; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Int> degree_;
  std::vector<Int> loops_;
  std::vector<std::vector<std::pair<VertexId, Int>>> nbrs_;
  Int total_loops_ = 0;
};

Multigraph new_graph(int num_vertices, const std::vector<Multigraph::Edge>& edges);

bool is_connected(const Multigraph& g);
bool is_simple(const Multigraph& g);
/// True iff every vertex has degree 3 or a degree in `allowed_exceptions`.
bool is_trivalent(const Multigraph& g, const std::set<Int>& allowed_exceptions = {});

/// First Betti number |E| - |V| + 1. Requires a connected graph.
Int genus(const Multigraph& g);

/// Replaces every loop (v,v) by a fresh vertex w and a doubled edge (v,w).
/// New vertices are appended after [0, n) in the order the loops appear in
/// edges(). Preserves genus.
Multigraph subdivide_loops(const Multigraph& g);
Multigraph strip_loops(const Multigraph& g);

/// Result of gluing two graphs; the maps send old vertex ids into the result.
struct Attachment {
  Multigraph graph;
  std::vector<VertexId> from_first;
  std::vector<VertexId> from_second;
};

/// Fuses v1 of g1 with v2 of g2 into a single vertex.
Attachment attach_identify(const Multigraph& g1, VertexId v1,
                           const Multigraph& g2, VertexId v2);
/// Disjoint union plus a bridge edge v1 -- v2. Genus is additive.
Attachment attach_edge(const Multigraph& g1, VertexId v1,
                       const Multigraph& g2, VertexId v2);

struct JoinResult {
  Multigraph graph;
  std::vector<VertexId> hub;  // cycle vertices, or the single star center
  std::vector<std::vector<VertexId>> piece_maps;
};

/// Builds a cycle of length `cycle_length` (must equal pieces.size(), >= 3)
/// and bridges piece i's marked vertex to cycle vertex i.
JoinResult cycle_join(const std::vector<std::pair<Multigraph, VertexId>>& pieces,
                      int cycle_length);
/// Builds one central vertex with a bridge to each piece's marked vertex.
JoinResult star_join(const std::vector<std::pair<Multigraph, VertexId>>& pieces);

}  // namespace chipfire
