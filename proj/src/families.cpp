#include "chipfire/families.hpp"

#include "chipfire/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace chipfire {

const std::vector<VertexId>& LabeledGraph::mark(const std::string& name) const {
  auto it = marks.find(name);
  if (it == marks.end())
    throw std::invalid_argument("graph has no mark named '" + name + "'");
  return it->second;
}

VertexId LabeledGraph::mark_one(const std::string& name) const {
  const auto& m = mark(name);
  if (m.size() != 1)
    throw std::invalid_argument("mark '" + name + "' is not a single vertex");
  return m[0];
}

namespace {

bool is_power_of_two(Int x) {
  return x >= 1 && std::has_single_bit(static_cast<std::uint64_t>(x));
}

Int log2_exact(Int x) { return std::countr_zero(static_cast<std::uint64_t>(x)); }

std::vector<VertexId> remap(const std::vector<VertexId>& verts,
                            const std::vector<VertexId>& map) {
  std::vector<VertexId> out;
  out.reserve(verts.size());
  for (VertexId v : verts) out.push_back(map[v]);
  return out;
}

void remap_marks_inplace(std::map<std::string, std::vector<VertexId>>& marks,
                         const std::vector<VertexId>& map) {
  for (auto& [name, verts] : marks) verts = remap(verts, map);
}

void append_mark(LabeledGraph& lg, const std::string& name,
                 const std::vector<VertexId>& verts) {
  auto& dest = lg.marks[name];
  dest.insert(dest.end(), verts.begin(), verts.end());
}

// ---------------------------------------------------------------------------
// Pairing trees

struct TreeState {
  std::vector<Multigraph::Edge> edges;
  int next_id;
  // one bucket of still-unpaired vertices per level
  std::vector<std::vector<VertexId>> unpaired;
};

LabeledGraph rooted_tree(Int n) {
  if (!is_power_of_two(n))
    throw std::invalid_argument("rooted tree_T needs a power-of-two leaf count");
  const int leaves = static_cast<int>(n);
  std::vector<Multigraph::Edge> edges;
  std::vector<VertexId> level(leaves);
  for (int i = 0; i < leaves; ++i) level[i] = i;
  int next = leaves;
  while (level.size() > 1) {
    std::vector<VertexId> up;
    for (size_t i = 0; i + 1 < level.size(); i += 2) {
      VertexId p = next++;
      edges.emplace_back(level[i], p);
      edges.emplace_back(level[i + 1], p);
      up.push_back(p);
    }
    level = std::move(up);
  }
  LabeledGraph out;
  out.graph = Multigraph(next, std::move(edges));
  for (int i = 0; i < leaves; ++i) out.marks["leaves"].push_back(i);
  out.marks["root"] = {level[0]};
  return out;
}

LabeledGraph unrooted_tree(Int n) {
  if (n < 3) throw std::invalid_argument("unrooted tree_T needs n >= 3");
  const int leaves = static_cast<int>(n);
  TreeState st;
  st.next_id = leaves;
  st.unpaired.emplace_back();
  for (int i = 0; i < leaves; ++i) st.unpaired[0].push_back(i);

  LabeledGraph out;
  for (;;) {
    int total = 0;
    for (const auto& bucket : st.unpaired) total += static_cast<int>(bucket.size());
    if (total == 2) {
      // R4: connect the last two tops directly
      std::vector<VertexId> pair;
      for (const auto& bucket : st.unpaired)
        for (VertexId v : bucket) pair.push_back(v);
      st.edges.emplace_back(pair[0], pair[1]);
      out.marks["last-r4"] = pair;
      break;
    }
    if (total == 3) {
      // R5: a fresh hub under the last three
      VertexId hub = st.next_id++;
      for (const auto& bucket : st.unpaired)
        for (VertexId v : bucket) st.edges.emplace_back(v, hub);
      out.marks["last-r5-hub"] = {hub};
      break;
    }
    auto& top = st.unpaired.back();
    if (top.size() >= 2) {
      // R2: pair consecutive vertices of the newest level
      std::vector<VertexId> up;
      size_t i = 0;
      for (; i + 1 < top.size(); i += 2) {
        VertexId p = st.next_id++;
        st.edges.emplace_back(top[i], p);
        st.edges.emplace_back(top[i + 1], p);
        up.push_back(p);
      }
      std::vector<VertexId> leftover;
      if (i < top.size()) leftover.push_back(top[i]);
      top = std::move(leftover);
      st.unpaired.push_back(std::move(up));
    } else {
      // R6: merge the lone top with the deepest lower unpaired vertex
      VertexId a = top[0];
      top.clear();
      int lvl = static_cast<int>(st.unpaired.size()) - 2;
      while (lvl >= 0 && st.unpaired[lvl].empty()) --lvl;
      VertexId b = st.unpaired[lvl].back();
      st.unpaired[lvl].pop_back();
      VertexId p = st.next_id++;
      st.edges.emplace_back(a, p);
      st.edges.emplace_back(b, p);
      st.unpaired.push_back({p});
    }
  }
  out.graph = Multigraph(st.next_id, std::move(st.edges));
  for (int i = 0; i < leaves; ++i) out.marks["leaves"].push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Appendages and surgery

enum class Appendage { Loop, Cone };

LabeledGraph cone_graph() {
  LabeledGraph out;
  out.graph = Multigraph(3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}});
  out.marks["cone-apex"] = {0};
  out.marks["base"] = {1, 2};
  return out;
}

// Decorates every "leaves" vertex with a loop, or fuses a cone apex onto it.
LabeledGraph with_appendages(const LabeledGraph& base, Appendage kind) {
  LabeledGraph out = base;
  const auto leaf_list = base.mark("leaves");
  if (kind == Appendage::Loop) {
    auto edges = out.graph.edges();
    for (VertexId leaf : leaf_list) edges.emplace_back(leaf, leaf);
    out.graph = Multigraph(out.graph.num_vertices(), std::move(edges));
    return out;
  }
  const LabeledGraph c = cone_graph();
  std::vector<VertexId> apexes, bases;
  for (VertexId leaf : leaf_list) {
    Attachment at = attach_identify(out.graph, leaf, c.graph, 0);
    out.graph = std::move(at.graph);
    apexes.push_back(leaf);
    bases.push_back(at.from_second[1]);
    bases.push_back(at.from_second[2]);
  }
  out.marks.erase("leaves");
  out.marks["cone-apex"] = apexes;
  out.marks["cone-base"] = bases;
  return out;
}

// Replaces the single edge (u,w) by u-a, a=b doubled, b-w. Adds genus 1.
void double_mid_edge(LabeledGraph& lg, VertexId u, VertexId w) {
  auto edges = lg.graph.edges();
  Multigraph::Edge target{std::min(u, w), std::max(u, w)};
  auto it = std::find(edges.begin(), edges.end(), target);
  if (it == edges.end())
    throw std::invalid_argument("double_mid_edge: no such edge");
  edges.erase(it);
  VertexId a = lg.graph.num_vertices();
  VertexId b = a + 1;
  edges.emplace_back(u, a);
  edges.emplace_back(a, b);
  edges.emplace_back(a, b);
  edges.emplace_back(b, w);
  lg.graph = Multigraph(b + 1, std::move(edges));
  append_mark(lg, "doubled-pairs", {a, b});
}

// Replaces a trivalent vertex by a triangle (or a K_{2,3}), re-attaching its
// three former edges to distinct new vertices.
LabeledGraph expand_center(const LabeledGraph& lg, VertexId center, bool to_k23) {
  const Multigraph& g = lg.graph;
  if (g.degree(center) != 3 || g.loops_at(center) != 0)
    throw std::invalid_argument("expand_center needs a trivalent loop-free vertex");
  const int n = g.num_vertices();
  std::vector<VertexId> map(n);
  int next = 0;
  for (int v = 0; v < n; ++v) map[v] = (v == center) ? -1 : next++;

  std::vector<VertexId> attach_points;  // one per former incident edge
  std::vector<Multigraph::Edge> edges;
  const int base = n - 1;
  if (to_k23) {
    // s0, s1 trivalent; b0, b1, b2 carry the former edges
    for (int s = 0; s < 2; ++s)
      for (int b = 0; b < 3; ++b) edges.emplace_back(base + s, base + 2 + b);
    attach_points = {base + 2, base + 3, base + 4};
  } else {
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base, base + 2);
    edges.emplace_back(base + 1, base + 2);
    attach_points = {base, base + 1, base + 2};
  }
  size_t slot = 0;
  for (const auto& [u, v] : g.edges()) {
    if (u != center && v != center) {
      edges.emplace_back(map[u], map[v]);
    } else {
      VertexId other = (u == center) ? v : u;
      edges.emplace_back(attach_points[slot++], map[other]);
    }
  }

  LabeledGraph out;
  out.graph = Multigraph(base + (to_k23 ? 5 : 3), std::move(edges));
  for (const auto& [name, verts] : lg.marks) {
    if (name == "center") continue;
    std::vector<VertexId> mapped;
    for (VertexId v : verts)
      if (v != center) mapped.push_back(map[v]);
    out.marks[name] = std::move(mapped);
  }
  if (to_k23)
    out.marks["k23"] = {base, base + 1, base + 2, base + 3, base + 4};
  else
    out.marks["central-triangle"] = {base, base + 1, base + 2};
  return out;
}

// ---------------------------------------------------------------------------
// The C_g trunk, shared between the loop and cone decorations.

// Base of C_g before appendages: marks "leaves", plus "central-triangle",
// "center", "gap-case" and the tree's last-step marks where applicable.
LabeledGraph c_base(Int g) {
  if (g < 3) throw std::invalid_argument("graph_C needs genus >= 3");

  if ((g - 1) % 3 == 0 && is_power_of_two((g - 1) / 3) && (g - 1) / 3 >= 2) {
    // g = 3*2^m + 1: central triangle, a rooted tree bridged to each corner
    const Int half = (g - 1) / 3;
    LabeledGraph out;
    out.graph = Multigraph(3, {{0, 1}, {0, 2}, {1, 2}});
    out.marks["central-triangle"] = {0, 1, 2};
    for (VertexId corner = 0; corner < 3; ++corner) {
      LabeledGraph t = rooted_tree(half);
      Attachment at = attach_edge(out.graph, corner, t.graph, t.mark_one("root"));
      out.graph = std::move(at.graph);
      append_mark(out, "leaves", remap(t.mark("leaves"), at.from_second));
    }
    return out;
  }

  bool gap_case = false;
  if (g % 3 == 0) {
    const std::uint64_t s = static_cast<std::uint64_t>(g / 3);
    if (std::popcount(s) == 2) {
      const Int p = std::countr_zero(s);
      const Int m = 63 - std::countl_zero(s);
      if (m > p + 1) {
        // g = 3(2^m + 2^p): star of three fused line-graph pieces
        LabeledGraph piece;
        piece.graph = Multigraph(3, {{0, 1}, {1, 2}});
        LabeledGraph big = rooted_tree(Int{1} << m);
        Attachment at = attach_identify(piece.graph, 0, big.graph, big.mark_one("root"));
        piece.graph = std::move(at.graph);
        piece.marks["leaves"] = remap(big.mark("leaves"), at.from_second);
        LabeledGraph small = rooted_tree(Int{1} << p);
        at = attach_identify(piece.graph, 2, small.graph, small.mark_one("root"));
        piece.graph = std::move(at.graph);
        append_mark(piece, "leaves", remap(small.mark("leaves"), at.from_second));

        JoinResult join = star_join({{piece.graph, 1}, {piece.graph, 1}, {piece.graph, 1}});
        LabeledGraph out;
        out.graph = std::move(join.graph);
        out.marks["center"] = {join.hub[0]};
        for (const auto& piece_map : join.piece_maps)
          append_mark(out, "leaves", remap(piece.mark("leaves"), piece_map));
        return out;
      }
      // m == p + 1 is the gap the case split leaves open; fall back to the
      // plain tree recipe and flag the output.
      gap_case = (m == p + 1);
    }
  }

  LabeledGraph out = unrooted_tree(g);
  if (out.has_mark("last-r5-hub")) out.marks["center"] = out.mark("last-r5-hub");
  if (gap_case) out.marks["gap-case"] = {};
  return out;
}

void drop_internal_marks(LabeledGraph& lg) {
  for (const char* name : {"last-r4", "last-r5-hub", "center"}) lg.marks.erase(name);
}

// Components of tree minus `hub`, one per hub neighbor, as (graph, root).
struct Branch {
  Multigraph graph;
  VertexId root;
  VertexId hub_neighbor;  // id in the original tree
};

std::vector<Branch> hub_branches(const Multigraph& tree, VertexId hub) {
  std::vector<Branch> out;
  for (const auto& [nbr, mult] : tree.neighbors(hub)) {
    (void)mult;
    std::vector<VertexId> comp;
    std::vector<char> seen(tree.num_vertices(), 0);
    seen[hub] = 1;
    seen[nbr] = 1;
    comp.push_back(nbr);
    for (size_t head = 0; head < comp.size(); ++head)
      for (const auto& [v, m] : tree.neighbors(comp[head])) {
        (void)m;
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    std::vector<VertexId> map(tree.num_vertices(), -1);
    for (size_t i = 0; i < comp.size(); ++i) map[comp[i]] = static_cast<int>(i);
    std::vector<Multigraph::Edge> edges;
    for (const auto& [u, v] : tree.edges())
      if (map[u] >= 0 && map[v] >= 0) edges.emplace_back(map[u], map[v]);
    out.push_back({Multigraph(static_cast<int>(comp.size()), std::move(edges)),
                   map[nbr], nbr});
  }
  return out;
}

// The odd C'_g rule: one of the hub's three branches is not isomorphic to the
// other two; the doubled edge goes on that branch's edge at the hub.
VertexId odd_branch_neighbor(const Multigraph& tree, VertexId hub) {
  std::vector<Branch> branches = hub_branches(tree, hub);
  if (branches.size() != 3)
    throw std::logic_error("odd-branch vote expects a trivalent hub");
  bool iso01 = are_isomorphic_rooted(branches[0].graph, branches[0].root,
                                     branches[1].graph, branches[1].root);
  bool iso02 = are_isomorphic_rooted(branches[0].graph, branches[0].root,
                                     branches[2].graph, branches[2].root);
  bool iso12 = are_isomorphic_rooted(branches[1].graph, branches[1].root,
                                     branches[2].graph, branches[2].root);
  if (iso01 && !iso02 && !iso12) return branches[2].hub_neighbor;
  if (iso02 && !iso01 && !iso12) return branches[1].hub_neighbor;
  if (iso12 && !iso01 && !iso02) return branches[0].hub_neighbor;
  throw std::logic_error("odd-branch vote found no unique branch");
}

}  // namespace

LabeledGraph tree_T(Int n, bool rooted) {
  return rooted ? rooted_tree(n) : unrooted_tree(n);
}

LabeledGraph graph_C(Int g) {
  LabeledGraph base = c_base(g);
  LabeledGraph out = with_appendages(base, Appendage::Loop);
  drop_internal_marks(out);
  return out;
}

LabeledGraph graph_C_prime(Int g) {
  if (g < 6)
    throw std::invalid_argument(
        "graph_C_prime is defined for genus >= 6 (below that the maximally "
        "symmetric loop-free graphs are the named small graphs)");

  if (g % 2 == 0 && (g - 2) % 3 == 0 && is_power_of_two((g - 2) / 3) &&
      (g - 2) / 3 >= 2) {
    // g = 3*2^m + 2: expand the previous star center to a K_{2,3}
    LabeledGraph prev = graph_C_prime(g - 2);
    return expand_center(prev, prev.mark_one("center"), /*to_k23=*/true);
  }

  if (g % 2 == 0) {
    LabeledGraph base = c_base(g / 2);
    LabeledGraph out = with_appendages(base, Appendage::Cone);
    out.marks.erase("last-r4");
    out.marks.erase("last-r5-hub");
    return out;  // keeps "center" for the expansion rules above
  }

  if ((g - 1) % 3 == 0 && is_power_of_two((g - 1) / 3) && (g - 1) / 3 >= 2) {
    // g = 3*2^m + 1: expand the previous star center to a triangle
    LabeledGraph prev = graph_C_prime(g - 1);
    return expand_center(prev, prev.mark_one("center"), /*to_k23=*/false);
  }

  if (g % 3 == 0) {
    const std::uint64_t s = static_cast<std::uint64_t>(g / 3 - 1);
    const Int p = std::countr_zero(s);
    const Int m = 63 - std::countl_zero(s);
    bool star_double = (std::popcount(s) == 1 && m > 1) ||
                       (std::popcount(s) == 2 && p > 0 && m > p + 1);
    if (star_double) {
      // g = 3(2^m + 1) or 3(2^m + 2^p + 1): double the three star edges
      LabeledGraph out = graph_C_prime(g - 3);
      VertexId center = out.mark_one("center");
      std::vector<VertexId> around;
      for (const auto& [nbr, mult] : out.graph.neighbors(center)) {
        (void)mult;
        around.push_back(nbr);
      }
      if (around.size() != 3)
        throw std::logic_error("star doubling expects a trivalent center");
      for (VertexId nbr : around) double_mid_edge(out, center, nbr);
      drop_internal_marks(out);
      return out;
    }
  }

  // remaining odd genera: cone-decorated tree plus one doubled edge at the
  // tree's closing step; bases without a closing step have no published rule
  LabeledGraph base = c_base((g - 1) / 2);
  if (!base.has_mark("last-r4") && !base.has_mark("last-r5-hub"))
    throw std::invalid_argument("graph_C_prime: no construction for this genus");
  LabeledGraph out = with_appendages(base, Appendage::Cone);
  if (out.has_mark("last-r4")) {
    const auto& pair = out.mark("last-r4");
    double_mid_edge(out, pair[0], pair[1]);
  } else if (out.has_mark("last-r5-hub")) {
    VertexId hub = out.mark_one("last-r5-hub");
    VertexId nbr = odd_branch_neighbor(base.graph, hub);
    double_mid_edge(out, hub, nbr);
  } else {
    throw std::logic_error("graph_C_prime: tree base lost its closing mark");
  }
  drop_internal_marks(out);
  return out;
}

LabeledGraph loop_of_loops(Int g) {
  if (g < 3) throw std::invalid_argument("loop_of_loops needs genus >= 3");
  const int n = static_cast<int>(2 * (g - 1));
  std::vector<Multigraph::Edge> edges;
  LabeledGraph out;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    if (i % 2 == 0) {
      edges.emplace_back(i, i + 1);
      out.marks["doubled-pairs"].push_back(i);
      out.marks["doubled-pairs"].push_back(i + 1);
    }
  }
  out.graph = Multigraph(n, std::move(edges));
  return out;
}

namespace {

LabeledGraph pinched_onto_tree(Int leaf_count, const LabeledGraph& pinched) {
  LabeledGraph t = rooted_tree(leaf_count);
  LabeledGraph out;
  out.graph = t.graph;
  out.marks["root"] = t.mark("root");
  std::vector<VertexId> tree_vertices(t.graph.num_vertices());
  for (int v = 0; v < t.graph.num_vertices(); ++v) tree_vertices[v] = v;
  out.marks["tree"] = tree_vertices;
  for (VertexId leaf : t.mark("leaves")) {
    Attachment at = attach_identify(out.graph, leaf,
                                    pinched.graph, pinched.mark_one("pinch"));
    out.graph = std::move(at.graph);
    out.marks["pinches"].push_back(leaf);
  }
  return out;
}

}  // namespace

LabeledGraph a_graph(Int m) {
  if (m < 0) throw std::invalid_argument("a_graph needs m >= 0");
  return pinched_onto_tree(Int{1} << m, pinched_tetrahedron());
}

LabeledGraph b_graph(Int m) {
  if (m < 2) throw std::invalid_argument("b_graph needs m >= 2");
  return pinched_onto_tree(Int{1} << (m - 2), pinched_k33());
}

LabeledGraph cone() { return cone_graph(); }

LabeledGraph k23() {
  LabeledGraph out;
  out.graph = Multigraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  out.marks["trivalent"] = {0, 1};
  out.marks["bivalent"] = {2, 3, 4};
  return out;
}

LabeledGraph pinched_tetrahedron() {
  LabeledGraph out;
  out.graph = Multigraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  out.marks["pinch"] = {4};
  return out;
}

LabeledGraph pinched_k33() {
  LabeledGraph out;
  out.graph = Multigraph(7, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                             {2, 3}, {2, 4}, {2, 6}, {5, 6}});
  out.marks["pinch"] = {6};
  return out;
}

LabeledGraph tetrahedron() {
  LabeledGraph out;
  out.graph = Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return out;
}

LabeledGraph complete_bipartite_33() {
  std::vector<Multigraph::Edge> edges;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
  LabeledGraph out;
  out.graph = Multigraph(6, std::move(edges));
  return out;
}

LabeledGraph cube() {
  std::vector<Multigraph::Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(i, (i + 1) % 4);
    edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    edges.emplace_back(i, 4 + i);
  }
  LabeledGraph out;
  out.graph = Multigraph(8, std::move(edges));
  return out;
}

LabeledGraph petersen() {
  std::vector<Multigraph::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  LabeledGraph out;
  out.graph = Multigraph(10, std::move(edges));
  return out;
}

LabeledGraph heawood() {
  // LCF [5, -5]^7 on a 14-cycle
  std::vector<Multigraph::Edge> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  LabeledGraph out;
  out.graph = Multigraph(14, std::move(edges));
  return out;
}

LabeledGraph genus7_max() {
  LabeledGraph out;
  std::vector<Multigraph::Edge> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  edges.insert(edges.end(), {{1, 8}, {8, 9}, {9, 4}, {2, 9}, {3, 8},
                             {5, 10}, {10, 11}, {11, 0}, {7, 10}, {6, 11}});
  out.graph = Multigraph(12, std::move(edges));
  out.marks["outer-cycle"] = {0, 1, 2, 3, 4, 5, 6, 7};
  return out;
}

LabeledGraph c12_double_prime() {
  LabeledGraph out;
  out.graph = Multigraph(2, {{0, 1}});
  out.marks["junctions"] = {0, 1};
  const LabeledGraph piece = pinched_tetrahedron();
  for (int i = 0; i < 4; ++i) {
    VertexId junction = (i < 2) ? 0 : 1;
    Attachment at = attach_edge(out.graph, junction,
                                piece.graph, piece.mark_one("pinch"));
    out.graph = std::move(at.graph);
    out.marks["pinches"].push_back(at.from_second[piece.mark_one("pinch")]);
  }
  out.marks["tree"] = {0, 1};
  append_mark(out, "tree", out.marks["pinches"]);
  return out;
}

LabeledGraph case_join(JoinShape shape, Int path_length,
                       const LabeledGraph& piece, Int count) {
  VertexId root = piece.mark_one("root");
  const auto expect = [&](Int want) {
    if (count != want)
      throw std::invalid_argument("case_join: shape " + to_string(shape) +
                                  " takes " + std::to_string(want) + " pieces");
  };

  LabeledGraph out;
  std::vector<std::vector<VertexId>> piece_maps;
  std::vector<VertexId> skeleton;
  bool skeleton_is_tree = false;

  switch (shape) {
    case JoinShape::CommonRoot: {
      expect(3);
      JoinResult join = star_join({{piece.graph, root}, {piece.graph, root},
                                   {piece.graph, root}});
      out.graph = std::move(join.graph);
      piece_maps = std::move(join.piece_maps);
      skeleton = join.hub;
      skeleton_is_tree = true;
      break;
    }
    case JoinShape::Edge: {
      expect(2);
      Attachment at = attach_edge(piece.graph, root, piece.graph, root);
      out.graph = std::move(at.graph);
      piece_maps = {std::move(at.from_first), std::move(at.from_second)};
      break;
    }
    case JoinShape::Path: {
      if (path_length < 2)
        throw std::invalid_argument("case_join: path needs length >= 2");
      expect(path_length + 2);
      std::vector<Multigraph::Edge> edges;
      for (int i = 0; i + 1 < path_length; ++i) edges.emplace_back(i, i + 1);
      out.graph = Multigraph(static_cast<int>(path_length), std::move(edges));
      for (int i = 0; i < path_length; ++i) skeleton.push_back(i);
      skeleton_is_tree = true;
      for (Int j = 0; j < count; ++j) {
        VertexId junction;
        if (j < 2)
          junction = 0;
        else if (j >= count - 2)
          junction = static_cast<VertexId>(path_length - 1);
        else
          junction = static_cast<VertexId>(j - 1);
        Attachment at = attach_edge(out.graph, junction, piece.graph, root);
        out.graph = std::move(at.graph);
        piece_maps.push_back(std::move(at.from_second));
      }
      break;
    }
    case JoinShape::K23Shape: {
      expect(3);
      out.graph = k23().graph;
      skeleton = {0, 1, 2, 3, 4};
      for (VertexId at_vertex : {2, 3, 4}) {
        Attachment at = attach_edge(out.graph, at_vertex, piece.graph, root);
        out.graph = std::move(at.graph);
        piece_maps.push_back(std::move(at.from_second));
      }
      out.marks["k23-bivalent"] = {2, 3, 4};
      break;
    }
    case JoinShape::TwoTriangles: {
      expect(2);
      out.graph = Multigraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
      skeleton = {0, 1, 2, 3};
      for (VertexId at_vertex : {2, 3}) {
        Attachment at = attach_edge(out.graph, at_vertex, piece.graph, root);
        out.graph = std::move(at.graph);
        piece_maps.push_back(std::move(at.from_second));
      }
      out.marks["triangle-tips"] = {2, 3};
      break;
    }
    case JoinShape::Triangle:
    case JoinShape::Square:
    case JoinShape::Pentagon: {
      Int want = shape == JoinShape::Triangle ? 3 : shape == JoinShape::Square ? 4 : 5;
      expect(want);
      std::vector<std::pair<Multigraph, VertexId>> pieces(
          static_cast<size_t>(count), {piece.graph, root});
      JoinResult join = cycle_join(pieces, static_cast<int>(count));
      out.graph = std::move(join.graph);
      piece_maps = std::move(join.piece_maps);
      skeleton = join.hub;
      out.marks["cycle"] = skeleton;
      break;
    }
  }

  out.marks["shape"] = skeleton;
  if (skeleton_is_tree) append_mark(out, "tree", skeleton);
  for (const auto& map : piece_maps) {
    out.marks["roots"].push_back(map[root]);
    if (piece.has_mark("tree")) append_mark(out, "tree", remap(piece.mark("tree"), map));
    if (piece.has_mark("pinches"))
      append_mark(out, "pinches", remap(piece.mark("pinches"), map));
  }
  return out;
}

LabeledGraph build(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::TreeT: return tree_T(spec.param, spec.rooted);
    case Kind::GraphC: return graph_C(spec.param);
    case Kind::GraphCPrime: return graph_C_prime(spec.param);
    case Kind::LoopOfLoops: return loop_of_loops(spec.param);
    case Kind::AGraph: return a_graph(spec.param);
    case Kind::BGraph: return b_graph(spec.param);
    case Kind::PinchedTetrahedron: return pinched_tetrahedron();
    case Kind::PinchedK33: return pinched_k33();
    case Kind::Cone: return cone();
    case Kind::K23: return k23();
    case Kind::Tetrahedron: return tetrahedron();
    case Kind::K33: return complete_bipartite_33();
    case Kind::Cube: return cube();
    case Kind::Petersen: return petersen();
    case Kind::Heawood: return heawood();
    case Kind::Genus7Max: return genus7_max();
    case Kind::C12DoublePrime: return c12_double_prime();
    case Kind::CaseJoin:
      if (!spec.piece) throw std::invalid_argument("case_join spec needs a piece");
      return case_join(spec.shape, spec.path_length, build(*spec.piece), spec.count);
  }
  throw std::logic_error("unknown family spec");
}

// ---------------------------------------------------------------------------
// Spec grammar: name | name(arg, ...); e.g. "graph_c(7)", "tree_t(4, rooted)",
// "case_join(pentagon, a_graph(0), 5)", "case_join(path(2), a_graph(0), 4)".

namespace {

struct SpecParser {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) throw std::invalid_argument("family spec: name expected");
    std::string s = text.substr(start, pos - start);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw std::invalid_argument(std::string("family spec: expected '") + c + "'");
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("family spec: integer expected");
    return std::stoll(text.substr(start, pos - start));
  }

  FamilySpec spec();
};

const std::map<std::string, FamilySpec::Kind> kNamedKinds = {
    {"pinched_tetrahedron", FamilySpec::Kind::PinchedTetrahedron},
    {"pinched_k33", FamilySpec::Kind::PinchedK33},
    {"cone", FamilySpec::Kind::Cone},
    {"k23", FamilySpec::Kind::K23},
    {"tetrahedron", FamilySpec::Kind::Tetrahedron},
    {"k33", FamilySpec::Kind::K33},
    {"cube", FamilySpec::Kind::Cube},
    {"petersen", FamilySpec::Kind::Petersen},
    {"heawood", FamilySpec::Kind::Heawood},
    {"genus7_max", FamilySpec::Kind::Genus7Max},
    {"c12_double_prime", FamilySpec::Kind::C12DoublePrime},
};

const std::map<std::string, JoinShape> kShapeNames = {
    {"common_root", JoinShape::CommonRoot}, {"edge", JoinShape::Edge},
    {"path", JoinShape::Path},              {"k23", JoinShape::K23Shape},
    {"square", JoinShape::Square},          {"two_triangles", JoinShape::TwoTriangles},
    {"triangle", JoinShape::Triangle},      {"pentagon", JoinShape::Pentagon},
};

FamilySpec SpecParser::spec() {
  FamilySpec out;
  std::string name = ident();
  if (auto it = kNamedKinds.find(name); it != kNamedKinds.end()) {
    out.kind = it->second;
    if (accept('(')) expect(')');
    return out;
  }
  if (name == "tree_t") {
    out.kind = FamilySpec::Kind::TreeT;
    expect('(');
    out.param = integer();
    if (accept(',')) {
      if (ident() != "rooted")
        throw std::invalid_argument("family spec: expected 'rooted'");
      out.rooted = true;
    }
    expect(')');
    return out;
  }
  const std::map<std::string, FamilySpec::Kind> parametric = {
      {"graph_c", FamilySpec::Kind::GraphC},
      {"graph_c_prime", FamilySpec::Kind::GraphCPrime},
      {"loop_of_loops", FamilySpec::Kind::LoopOfLoops},
      {"a_graph", FamilySpec::Kind::AGraph},
      {"b_graph", FamilySpec::Kind::BGraph},
  };
  if (auto it = parametric.find(name); it != parametric.end()) {
    out.kind = it->second;
    expect('(');
    out.param = integer();
    expect(')');
    return out;
  }
  if (name == "case_join") {
    out.kind = FamilySpec::Kind::CaseJoin;
    expect('(');
    std::string shape_name = ident();
    auto sh = kShapeNames.find(shape_name);
    if (sh == kShapeNames.end())
      throw std::invalid_argument("family spec: unknown shape '" + shape_name + "'");
    out.shape = sh->second;
    if (out.shape == JoinShape::Path) {
      expect('(');
      out.path_length = integer();
      expect(')');
    }
    expect(',');
    out.piece = std::make_shared<FamilySpec>(spec());
    expect(',');
    out.count = integer();
    expect(')');
    return out;
  }
  throw std::invalid_argument("family spec: unknown family '" + name + "'");
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  SpecParser parser{text};
  FamilySpec out = parser.spec();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw std::invalid_argument("family spec: trailing input");
  return out;
}

std::string to_string(JoinShape shape) {
  switch (shape) {
    case JoinShape::CommonRoot: return "common_root";
    case JoinShape::Edge: return "edge";
    case JoinShape::Path: return "path";
    case JoinShape::K23Shape: return "k23";
    case JoinShape::Square: return "square";
    case JoinShape::TwoTriangles: return "two_triangles";
    case JoinShape::Triangle: return "triangle";
    case JoinShape::Pentagon: return "pentagon";
  }
  return "?";
}

std::string to_string(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::TreeT:
      return "tree_t(" + std::to_string(spec.param) +
             (spec.rooted ? ", rooted)" : ")");
    case Kind::GraphC: return "graph_c(" + std::to_string(spec.param) + ")";
    case Kind::GraphCPrime:
      return "graph_c_prime(" + std::to_string(spec.param) + ")";
    case Kind::LoopOfLoops:
      return "loop_of_loops(" + std::to_string(spec.param) + ")";
    case Kind::AGraph: return "a_graph(" + std::to_string(spec.param) + ")";
    case Kind::BGraph: return "b_graph(" + std::to_string(spec.param) + ")";
    case Kind::PinchedTetrahedron: return "pinched_tetrahedron";
    case Kind::PinchedK33: return "pinched_k33";
    case Kind::Cone: return "cone";
    case Kind::K23: return "k23";
    case Kind::Tetrahedron: return "tetrahedron";
    case Kind::K33: return "k33";
    case Kind::Cube: return "cube";
    case Kind::Petersen: return "petersen";
    case Kind::Heawood: return "heawood";
    case Kind::Genus7Max: return "genus7_max";
    case Kind::C12DoublePrime: return "c12_double_prime";
    case Kind::CaseJoin: {
      std::string shape = to_string(spec.shape);
      if (spec.shape == JoinShape::Path)
        shape += "(" + std::to_string(spec.path_length) + ")";
      return "case_join(" + shape + ", " +
             (spec.piece ? to_string(*spec.piece) : std::string("?")) + ", " +
             std::to_string(spec.count) + ")";
    }
  }
  return "?";
}

}  // namespace chipfire
