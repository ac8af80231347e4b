#include "chipfire/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chipfire {

Multigraph::Multigraph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") with n=" + std::to_string(n_));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());

  degree_.assign(n_, 0);
  loops_.assign(n_, 0);
  nbrs_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    if (u == v) {
      degree_[u] += 2;
      loops_[u] += 1;
      total_loops_ += 1;
    } else {
      degree_[u] += 1;
      degree_[v] += 1;
      if (!nbrs_[u].empty() && nbrs_[u].back().first == v) {
        nbrs_[u].back().second += 1;
      } else {
        nbrs_[u].emplace_back(v, 1);
      }
    }
  }
  // edges_ is sorted by (u, v), so each nbrs_[u] above is already sorted;
  // mirror the entries to the higher endpoint.
  for (VertexId u = 0; u < n_; ++u)
    for (const auto& [v, m] : nbrs_[u])
      if (v > u) nbrs_[v].emplace_back(u, m);
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

Int Multigraph::multiplicity(VertexId u, VertexId v) const {
  if (u == v) return loops_[u];
  const auto& list = nbrs_[u];
  auto it = std::lower_bound(list.begin(), list.end(),
                             std::make_pair(v, Int{0}));
  if (it != list.end() && it->first == v) return it->second;
  return 0;
}

IntVector Multigraph::degrees() const {
  IntVector d(n_);
  for (VertexId v = 0; v < n_; ++v) d(v) = degree_[v];
  return d;
}

IntMatrix Multigraph::laplacian() const {
  IntMatrix lap = IntMatrix::Zero(n_, n_);
  for (VertexId v = 0; v < n_; ++v) {
    lap(v, v) = nonloop_degree(v);
    for (const auto& [u, m] : nbrs_[v]) lap(v, u) = -m;
  }
  return lap;
}

Multigraph new_graph(int num_vertices,
                     const std::vector<Multigraph::Edge>& edges) {
  return Multigraph(num_vertices, edges);
}

bool is_connected(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (const auto& [v, m] : g.neighbors(u)) {
      (void)m;
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

bool is_simple(const Multigraph& g) {
  const auto& e = g.edges();
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i].first == e[i].second) return false;
    if (i > 0 && e[i] == e[i - 1]) return false;
  }
  return true;
}

bool is_trivalent(const Multigraph& g, const std::set<Int>& allowed_exceptions) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Int d = g.degree(v);
    if (d != 3 && allowed_exceptions.count(d) == 0) return false;
  }
  return true;
}

Int genus(const Multigraph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("genus of empty graph");
  if (!is_connected(g)) throw std::invalid_argument("genus requires a connected graph");
  return Int{g.num_edges()} - g.num_vertices() + 1;
}

Multigraph subdivide_loops(const Multigraph& g) {
  std::vector<Multigraph::Edge> edges;
  edges.reserve(g.edges().size() + 4);
  int next = g.num_vertices();
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      edges.emplace_back(u, next);
      edges.emplace_back(u, next);
      ++next;
    } else {
      edges.emplace_back(u, v);
    }
  }
  return Multigraph(next, std::move(edges));
}

Multigraph strip_loops(const Multigraph& g) {
  std::vector<Multigraph::Edge> edges;
  for (const auto& e : g.edges())
    if (e.first != e.second) edges.push_back(e);
  return Multigraph(g.num_vertices(), std::move(edges));
}

namespace {

void check_mark(const Multigraph& g, VertexId v, const char* what) {
  if (v < 0 || v >= g.num_vertices())
    throw std::invalid_argument(std::string("invalid marked vertex for ") + what);
}

}  // namespace

Attachment attach_identify(const Multigraph& g1, VertexId v1,
                           const Multigraph& g2, VertexId v2) {
  check_mark(g1, v1, "attach_identify");
  check_mark(g2, v2, "attach_identify");
  const int n1 = g1.num_vertices();
  std::vector<VertexId> map1(n1), map2(g2.num_vertices());
  for (int v = 0; v < n1; ++v) map1[v] = v;
  int next = n1;
  for (int v = 0; v < g2.num_vertices(); ++v)
    map2[v] = (v == v2) ? v1 : next++;
  std::vector<Multigraph::Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(map2[u], map2[v]);
  return {Multigraph(next, std::move(edges)), std::move(map1), std::move(map2)};
}

Attachment attach_edge(const Multigraph& g1, VertexId v1,
                       const Multigraph& g2, VertexId v2) {
  check_mark(g1, v1, "attach_edge");
  check_mark(g2, v2, "attach_edge");
  const int n1 = g1.num_vertices();
  std::vector<VertexId> map1(n1), map2(g2.num_vertices());
  for (int v = 0; v < n1; ++v) map1[v] = v;
  for (int v = 0; v < g2.num_vertices(); ++v) map2[v] = n1 + v;
  std::vector<Multigraph::Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(map2[u], map2[v]);
  edges.emplace_back(v1, map2[v2]);
  return {Multigraph(n1 + g2.num_vertices(), std::move(edges)),
          std::move(map1), std::move(map2)};
}

JoinResult cycle_join(const std::vector<std::pair<Multigraph, VertexId>>& pieces,
                      int cycle_length) {
  if (cycle_length < 3) throw std::invalid_argument("cycle_join: cycle length < 3");
  if (cycle_length != static_cast<int>(pieces.size()))
    throw std::invalid_argument("cycle_join: cycle length must equal piece count");
  std::vector<Multigraph::Edge> edges;
  for (int i = 0; i < cycle_length; ++i)
    edges.emplace_back(i, (i + 1) % cycle_length);
  int next = cycle_length;
  JoinResult out;
  for (int i = 0; i < cycle_length; ++i) out.hub.push_back(i);
  for (int i = 0; i < cycle_length; ++i) {
    const auto& [piece, mark] = pieces[i];
    check_mark(piece, mark, "cycle_join");
    std::vector<VertexId> map(piece.num_vertices());
    for (int v = 0; v < piece.num_vertices(); ++v) map[v] = next + v;
    for (const auto& [u, v] : piece.edges()) edges.emplace_back(map[u], map[v]);
    edges.emplace_back(i, map[mark]);
    next += piece.num_vertices();
    out.piece_maps.push_back(std::move(map));
  }
  out.graph = Multigraph(next, std::move(edges));
  return out;
}

JoinResult star_join(const std::vector<std::pair<Multigraph, VertexId>>& pieces) {
  if (pieces.empty()) throw std::invalid_argument("star_join: no pieces");
  std::vector<Multigraph::Edge> edges;
  int next = 1;
  JoinResult out;
  out.hub.push_back(0);
  for (const auto& [piece, mark] : pieces) {
    check_mark(piece, mark, "star_join");
    std::vector<VertexId> map(piece.num_vertices());
    for (int v = 0; v < piece.num_vertices(); ++v) map[v] = next + v;
    for (const auto& [u, v] : piece.edges()) edges.emplace_back(map[u], map[v]);
    edges.emplace_back(0, map[mark]);
    next += piece.num_vertices();
    out.piece_maps.push_back(std::move(map));
  }
  out.graph = Multigraph(next, std::move(edges));
  return out;
}

}  // namespace chipfire
