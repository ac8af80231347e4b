#include "chipfire/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace chipfire {

namespace {

// Degree, loop count and the sorted (multiplicity, neighbor degree) profile.
// Invariant under automorphisms; prunes the image candidates.
using VertexKey = std::tuple<Int, Int, std::vector<std::pair<Int, Int>>>;

VertexKey key_of(const Multigraph& g, VertexId v) {
  std::vector<std::pair<Int, Int>> profile;
  for (const auto& [u, m] : g.neighbors(v)) profile.emplace_back(m, g.degree(u));
  std::sort(profile.begin(), profile.end());
  return {g.degree(v), g.loops_at(v), std::move(profile)};
}

std::vector<VertexId> bfs_order(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<VertexId> order;
  std::vector<char> seen(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    order.push_back(start);
    for (size_t head = order.size() - 1; head < order.size(); ++head) {
      for (const auto& [v, m] : g.neighbors(order[head])) {
        (void)m;
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
        }
      }
    }
  }
  return order;
}

// Backtracking enumeration of multiplicity-preserving bijections a -> b.
// The emit callback returns false to stop the search.
struct MappingSearch {
  const Multigraph& a;
  const Multigraph& b;
  std::vector<VertexKey> keys_a, keys_b;
  std::vector<VertexId> order;
  std::vector<VertexId> image;
  std::vector<char> used;
  VertexId pin_a = -1, pin_b = -1;

  MappingSearch(const Multigraph& ga, const Multigraph& gb) : a(ga), b(gb) {
    const int n = a.num_vertices();
    keys_a.reserve(n);
    keys_b.reserve(n);
    for (VertexId v = 0; v < n; ++v) keys_a.push_back(key_of(a, v));
    for (VertexId v = 0; v < n; ++v) keys_b.push_back(key_of(b, v));
    order = bfs_order(a);
    image.assign(n, -1);
    used.assign(n, 0);
  }

  bool feasible() const {
    if (a.num_vertices() != b.num_vertices()) return false;
    if (a.num_edges() != b.num_edges()) return false;
    auto sa = keys_a, sb = keys_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool run(const std::function<bool(const VertexPermutation&)>& emit) {
    return dfs(0, emit);
  }

 private:
  bool dfs(size_t idx, const std::function<bool(const VertexPermutation&)>& emit) {
    if (idx == order.size()) return emit(image);
    const VertexId v = order[idx];
    for (VertexId w = 0; w < b.num_vertices(); ++w) {
      if (used[w] || keys_a[v] != keys_b[w]) continue;
      if (v == pin_a && w != pin_b) continue;
      bool ok = true;
      for (size_t j = 0; j < idx; ++j) {
        const VertexId u = order[j];
        if (a.multiplicity(v, u) != b.multiplicity(w, image[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (!dfs(idx + 1, emit)) return false;
      image[v] = -1;
      used[w] = 0;
    }
    return true;
  }
};

void check_bound(const Multigraph& g, int max_vertices) {
  if (g.num_vertices() > max_vertices)
    throw std::invalid_argument("graph exceeds the automorphism size bound");
}

bool is_involution(const VertexPermutation& sigma) {
  for (VertexId v = 0; v < static_cast<VertexId>(sigma.size()); ++v)
    if (sigma[sigma[v]] != v) return false;
  return true;
}

}  // namespace

bool is_automorphism(const Multigraph& g, const VertexPermutation& sigma) {
  const int n = g.num_vertices();
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (sigma[v] < 0 || sigma[v] >= n || hit[sigma[v]]) return false;
    hit[sigma[v]] = 1;
  }
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size();) {
    size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    const Int mult = static_cast<Int>(j - i);
    if (g.multiplicity(sigma[edges[i].first], sigma[edges[i].second]) != mult)
      return false;
    i = j;
  }
  return true;
}

Int aut_order(const Multigraph& g, int max_vertices) {
  check_bound(g, max_vertices);
  if (g.num_vertices() == 0) return 1;
  MappingSearch search(g, g);
  Int count = 0;
  search.run([&](const VertexPermutation&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<VertexPermutation> automorphisms(const Multigraph& g,
                                             int max_vertices) {
  check_bound(g, max_vertices);
  std::vector<VertexPermutation> out;
  if (g.num_vertices() == 0) return out;
  MappingSearch search(g, g);
  search.run([&](const VertexPermutation& sigma) {
    out.push_back(sigma);
    return true;
  });
  return out;
}

std::vector<VertexPermutation> involutions(const Multigraph& g,
                                           int max_vertices) {
  std::vector<VertexPermutation> out;
  for (auto& sigma : automorphisms(g, max_vertices))
    if (is_involution(sigma)) out.push_back(std::move(sigma));
  return out;
}

Multigraph quotient(const Multigraph& g, const VertexPermutation& sigma) {
  if (g.has_loops())
    throw std::invalid_argument("quotient needs a loop-free graph");
  if (!is_automorphism(g, sigma) || !is_involution(sigma))
    throw std::invalid_argument("quotient needs an involutive automorphism");

  const int n = g.num_vertices();
  std::vector<VertexId> rep(n), newid(n, -1);
  for (VertexId v = 0; v < n; ++v) rep[v] = std::min(v, sigma[v]);
  int next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (rep[v] == v) newid[v] = next++;

  std::vector<Multigraph::Edge> out;
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size();) {
    size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    const Int mult = static_cast<Int>(j - i);
    const auto [u, v] = edges[i];
    i = j;

    Multigraph::Edge img{std::min(sigma[u], sigma[v]), std::max(sigma[u], sigma[v])};
    const Multigraph::Edge self{u, v};
    const Multigraph::Edge quot{std::min(newid[rep[u]], newid[rep[v]]),
                                std::max(newid[rep[u]], newid[rep[v]])};
    if (img == self) {
      if (sigma[u] == u && sigma[v] == v) {
        // endpoint-fixed type: parallel copies fold in pairs
        for (Int k = 0; k < (mult + 1) / 2; ++k) out.push_back(quot);
      }
      // endpoints swapped: the whole type collapses
    } else if (self < img) {
      for (Int k = 0; k < mult; ++k) out.push_back(quot);
    }
  }
  return Multigraph(next, std::move(out));
}

std::optional<VertexPermutation> find_tree_quotient_involution(
    const Multigraph& g, int max_vertices) {
  if (g.has_loops())
    throw std::invalid_argument("tree-quotient search needs a loop-free graph");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (genus(g) < 2)
    throw std::invalid_argument("tree-quotient search needs genus >= 2");
  for (const auto& sigma : involutions(g, max_vertices)) {
    Multigraph q = quotient(g, sigma);
    if (is_connected(q) && genus(q) == 0) return sigma;
  }
  return std::nullopt;
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  MappingSearch search(a, b);
  if (!search.feasible()) return false;
  bool found = false;
  search.run([&](const VertexPermutation&) {
    found = true;
    return false;
  });
  return found;
}

bool are_isomorphic_rooted(const Multigraph& a, VertexId root_a,
                           const Multigraph& b, VertexId root_b) {
  MappingSearch search(a, b);
  if (!search.feasible()) return false;
  if (search.keys_a[root_a] != search.keys_b[root_b]) return false;
  search.pin_a = root_a;
  search.pin_b = root_b;
  bool found = false;
  search.run([&](const VertexPermutation&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace chipfire
