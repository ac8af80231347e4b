#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chipfire/brillnoether.hpp"
#include "chipfire/families.hpp"
#include "chipfire/symmetry.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <numeric>

using namespace chipfire;
using namespace chipfire::testing;

namespace {

Multigraph relabel(const Multigraph& g, const std::vector<VertexId>& perm) {
  std::vector<Multigraph::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Multigraph(g.num_vertices(), std::move(edges));
}

}  // namespace

TEST_CASE("aut_order on the named graphs") {
  Multigraph path3(3, {{0, 1}, {1, 2}});
  CHECK(aut_order(path3) == 2);
  CHECK(aut_order(tetrahedron().graph) == 24);
  CHECK(aut_order(cube().graph) == 48);
  CHECK(aut_order(complete_bipartite_33().graph) == 72);
  CHECK(aut_order(petersen().graph) == 120);
  CHECK(aut_order(heawood().graph) == 336);
}

TEST_CASE("aut_order matches brute force on small graphs") {
  std::vector<Multigraph> suite = {
      tetrahedron().graph,
      cone().graph,
      k23().graph,
      pinched_tetrahedron().graph,
      pinched_k33().graph,
      cube().graph,
      complete_bipartite_33().graph,
      loop_of_loops(4).graph,
      graph_C(3).graph,
      graph_C(4).graph,
      tree_T(5).graph,
      Multigraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}),
      Multigraph(2, {{0, 1}, {0, 1}}),
      Multigraph(1, {{0, 0}}),
  };
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial)
    suite.push_back(random_connected_multigraph(rng, 2 + int(rng() % 6), int(rng() % 6)));
  for (const auto& g : suite) {
    if (g.num_vertices() > 8) continue;
    CHECK(aut_order(g) == brute_aut_order(g));
  }
  // one larger brute-force confirmation
  CHECK(brute_aut_order(petersen().graph) == 120);
}

TEST_CASE("aut_order is isomorphism-invariant") {
  std::mt19937_64 rng(47);
  for (const auto& g : {petersen().graph, graph_C(5).graph, cone().graph,
                        loop_of_loops(5).graph}) {
    Int expected = aut_order(g);
    std::vector<VertexId> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(aut_order(relabel(g, perm)) == expected);
    }
  }
}

TEST_CASE("automorphism streams preserve structure") {
  for (const auto& g : {graph_C(4).graph, cone().graph, petersen().graph}) {
    auto autos = automorphisms(g);
    CHECK(Int(autos.size()) == aut_order(g));
    for (const auto& sigma : autos) {
      CHECK(is_automorphism(g, sigma));
      for (int v = 0; v < g.num_vertices(); ++v) {
        CHECK(g.degree(sigma[v]) == g.degree(v));
        CHECK(g.loops_at(sigma[v]) == g.loops_at(v));
      }
    }
    // identity always present
    std::vector<VertexId> id(g.num_vertices());
    std::iota(id.begin(), id.end(), 0);
    CHECK(std::find(autos.begin(), autos.end(), id) != autos.end());
    for (const auto& sigma : involutions(g)) {
      for (int v = 0; v < g.num_vertices(); ++v) CHECK(sigma[sigma[v]] == v);
    }
  }
  CHECK_THROWS_AS(aut_order(petersen().graph, 8), std::invalid_argument);
}

TEST_CASE("quotients of the small hyperelliptic shapes") {
  // cone: swapping the doubled pair leaves a path
  LabeledGraph c = cone();
  VertexPermutation swap_base{0, 2, 1};
  REQUIRE(is_automorphism(c.graph, swap_base));
  Multigraph q = quotient(c.graph, swap_base);
  CHECK(q == Multigraph(2, {{0, 1}}));

  // K_{2,3}: swapping the trivalent pair leaves a star
  LabeledGraph k = k23();
  VertexPermutation swap_sides{1, 0, 2, 3, 4};
  REQUIRE(is_automorphism(k.graph, swap_sides));
  CHECK(genus(quotient(k.graph, swap_sides)) == 0);

  // identity on a simple graph returns the graph
  Multigraph pete = petersen().graph;
  std::vector<VertexId> id(10);
  std::iota(id.begin(), id.end(), 0);
  CHECK(quotient(pete, id) == pete);

  // identity on a subdivided loop graph folds the doubled pairs to a tree
  Multigraph c4sub = subdivide_loops(graph_C(4).graph);
  std::vector<VertexId> id10(c4sub.num_vertices());
  std::iota(id10.begin(), id10.end(), 0);
  Multigraph folded = quotient(c4sub, id10);
  CHECK(is_connected(folded));
  CHECK(genus(folded) == 0);

  CHECK_THROWS_AS(quotient(graph_C(4).graph, id10), std::invalid_argument);
  // swapping a trivalent corner with the subdivided edge's endpoint is no
  // automorphism, so the quotient must refuse it
  VertexPermutation not_auto{2, 1, 0, 3, 4};
  REQUIRE_FALSE(is_automorphism(pinched_tetrahedron().graph, not_auto));
  CHECK_THROWS_AS(quotient(pinched_tetrahedron().graph, not_auto),
                  std::invalid_argument);
}

TEST_CASE("tree-quotient involutions") {
  CHECK(find_tree_quotient_involution(graph_C_prime(6).graph).has_value());
  CHECK(find_tree_quotient_involution(subdivide_loops(graph_C(4).graph)).has_value());
  CHECK_FALSE(find_tree_quotient_involution(petersen().graph).has_value());
  CHECK_FALSE(find_tree_quotient_involution(subdivide_loops(graph_C(7).graph)).has_value());
  CHECK_THROWS_AS(find_tree_quotient_involution(graph_C(4).graph),
                  std::invalid_argument);
}

TEST_CASE("tree-quotient presence matches the rank-based verdict") {
  std::vector<Multigraph> suite = {
      tetrahedron().graph,
      complete_bipartite_33().graph,
      cube().graph,
      genus7_max().graph,
      cone().graph,
      k23().graph,
      pinched_tetrahedron().graph,
      pinched_k33().graph,
      loop_of_loops(4).graph,
      loop_of_loops(5).graph,
      loop_of_loops(7).graph,
      graph_C_prime(6).graph,
      graph_C_prime(7).graph,
      graph_C_prime(9).graph,
      subdivide_loops(graph_C(5).graph),
      subdivide_loops(graph_C(7).graph),
  };
  for (const auto& g : suite) {
    bool by_quotient = find_tree_quotient_involution(g).has_value();
    bool by_rank = is_hyperelliptic(g).has_value();
    CHECK(by_quotient == by_rank);
  }
}

TEST_CASE("isomorphism testing") {
  CHECK(are_isomorphic(petersen().graph, petersen().graph));
  CHECK_FALSE(are_isomorphic(petersen().graph, heawood().graph));
  // relabeled copies are isomorphic
  std::mt19937_64 rng(53);
  std::vector<VertexId> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(are_isomorphic(genus7_max().graph, relabel(genus7_max().graph, perm)));
  // same degree sequence, different graphs
  Multigraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  Multigraph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(are_isomorphic(c6, two_triangles));

  // rooted isomorphism distinguishes the pinch from other vertices
  LabeledGraph pt = pinched_tetrahedron();
  CHECK(are_isomorphic_rooted(pt.graph, 4, pt.graph, 4));
  CHECK_FALSE(are_isomorphic_rooted(pt.graph, 4, pt.graph, 0));
}
