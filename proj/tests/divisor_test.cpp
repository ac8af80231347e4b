#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chipfire/divisor.hpp"
#include "chipfire/families.hpp"
#include "test_support.hpp"

#include <map>
#include <set>

using namespace chipfire;
using namespace chipfire::testing;

namespace {

Multigraph figure1() {
  return new_graph(4, {{0, 1}, {1, 3}, {0, 3}, {2, 3}, {1, 2}});
}

std::vector<Int> key(const Divisor& d) {
  return std::vector<Int>(d.data(), d.data() + d.size());
}

}  // namespace

TEST_CASE("degree and effectiveness") {
  Divisor left = make_divisor({4, -1, 0, 5});
  CHECK(deg(left) == 8);
  CHECK_FALSE(is_effective(left));
  Divisor zero = Divisor::Zero(4);
  CHECK(deg(zero) == 0);
  CHECK(is_effective(zero));
  Divisor right = make_divisor({5, 0, 1, 2});
  CHECK(deg(right) == 8);
  CHECK(is_effective(right));
}

TEST_CASE("chip firing") {
  Multigraph g = figure1();
  CHECK(chip_fire(g, make_divisor({4, -1, 0, 5}), 3) == make_divisor({5, 0, 1, 2}));

  // firing the complement inverts a firing
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph h = random_connected_multigraph(rng, 2 + int(rng() % 6), int(rng() % 6));
    Divisor d = random_divisor(rng, h.num_vertices(), -5, 5);
    VertexId v = int(rng() % h.num_vertices());
    std::vector<VertexId> complement;
    for (int u = 0; u < h.num_vertices(); ++u)
      if (u != v) complement.push_back(u);
    CHECK(fire_set(h, chip_fire(h, d, v), complement) == d);
    CHECK(deg(chip_fire(h, d, v)) == deg(d));
    // firing everything is the identity
    std::vector<VertexId> everyone = complement;
    everyone.push_back(v);
    CHECK(fire_set(h, d, everyone) == d);
  }

  // loops are inert
  Multigraph loop(1, {{0, 0}});
  CHECK(chip_fire(loop, make_divisor({7}), 0) == make_divisor({7}));
}

TEST_CASE("fire_set moves a chip across a bridge") {
  // path 0-1 with a pendant triangle on 1; component of 0 is {0}
  Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  Divisor d = make_divisor({1, 0, 0, 0});
  CHECK(fire_set(g, d, {0}) == make_divisor({0, 1, 0, 0}));
}

TEST_CASE("cycle firing schedule is exact on a bare cycle") {
  for (Int n : {Int{3}, Int{4}, Int{5}}) {
    std::vector<Multigraph::Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, int((i + 1) % n));
    Multigraph cycle(int(n), std::move(edges));
    FiringScript s = FiringScript::Zero(n);
    for (Int i = 0; i < n; ++i) s(i) = 2 * n - i;  // v_l fires 2n-l+1 times
    Divisor start = unit_chips(int(n), 0, n);
    Divisor want = unit_chips(int(n), int(n - 1), n);
    CHECK(apply_script(cycle, start, s) == want);
  }
}

TEST_CASE("dhar burning") {
  Multigraph g = figure1();

  // a q-reduced divisor has an empty unburnt set
  CHECK(dhar_unburnt(g, make_divisor({0, 0, 0, 0}), 0).empty());

  Multigraph path2(2, {{0, 1}});
  CHECK(dhar_unburnt(path2, make_divisor({0, 1}), 0) == std::vector<VertexId>{1});

  // cross-check against the exhaustive subset oracle
  CHECK(dhar_unburnt(g, make_divisor({0, 0, 0, 3}), 0) ==
        brute_dhar_unburnt(g, make_divisor({0, 0, 0, 3}), 0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Multigraph h = random_connected_multigraph(rng, 2 + int(rng() % 6), int(rng() % 7));
    Divisor d = random_divisor(rng, h.num_vertices(), 0, 4);
    VertexId q = int(rng() % h.num_vertices());
    d(q) = Int(rng() % 9) - 4;
    CHECK(dhar_unburnt(h, d, q) == brute_dhar_unburnt(h, d, q));
  }

  CHECK_THROWS_AS(dhar_unburnt(g, make_divisor({0, -1, 0, 0}), 0),
                  std::invalid_argument);
}

TEST_CASE("q_reduce on trees moves chips to the base") {
  LabeledGraph t = tree_T(5);
  const int n = t.graph.num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    ReductionResult r = q_reduce(t.graph, unit_chips(n, v, 1), 3);
    CHECK(r.reduced == unit_chips(n, 3, 1));
  }
}

TEST_CASE("q_reduce is idempotent and certified by its script") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Multigraph g = random_connected_multigraph(rng, 2 + int(rng() % 6), int(rng() % 7));
    Divisor d = random_divisor(rng, g.num_vertices(), -8, 8);
    VertexId q = int(rng() % g.num_vertices());
    ReductionResult r = q_reduce(g, d, q);
    CHECK(apply_script(g, d, r.script) == r.reduced);
    CHECK(is_q_reduced(g, r.reduced, q));
    ReductionResult again = q_reduce(g, r.reduced, q);
    CHECK(again.reduced == r.reduced);
    CHECK(again.script == FiringScript::Zero(g.num_vertices()));
  }
}

TEST_CASE("figure-1 reduction matches the lattice oracle fixed point") {
  Multigraph g = figure1();
  Divisor d = make_divisor({4, -1, 0, 5});
  ReductionResult r = q_reduce(g, d, 0);

  // independent route: enumerate candidate reduced forms of the same degree,
  // keep the ones that are q-reduced and lattice-equivalent to d
  std::vector<Divisor> candidates;
  for (Int a = 0; a <= 2; ++a)        // entries off the base stay below degree
    for (Int b = 0; b <= 1; ++b)
      for (Int c = 0; c <= 2; ++c) {
        Divisor e = make_divisor({8 - a - b - c, a, b, c});
        if (is_q_reduced(g, e, 0) && lattice_equivalent(g, d, e))
          candidates.push_back(e);
      }
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0] == r.reduced);
}

TEST_CASE("class invariance under random firing scripts") {
  std::mt19937_64 rng(19);
  Multigraph g = figure1();
  Divisor d = make_divisor({2, -1, 3, 0});
  Divisor reduced = q_reduce(g, d, 0).reduced;
  for (int trial = 0; trial < 300; ++trial) {
    FiringScript s = random_divisor(rng, 4, -10, 10);
    CHECK(q_reduce(g, apply_script(g, d, s), 0).reduced == reduced);
  }
}

TEST_CASE("equivalence agrees with the lattice oracle and is base-independent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    Multigraph g = random_connected_multigraph(rng, 2 + int(rng() % 4), int(rng() % 6));
    const int n = g.num_vertices();
    Divisor d1 = random_divisor(rng, n, -4, 4);
    Divisor d2;
    if (trial % 2 == 0) {
      d2 = apply_script(g, d1, random_divisor(rng, n, -3, 3));  // equivalent
    } else {
      d2 = random_divisor(rng, n, -4, 4);
      d2(0) += deg(d1) - deg(d2);
    }
    bool expected = lattice_equivalent(g, d1, d2);
    CHECK(is_equivalent(g, d1, d2) == expected);
    for (VertexId q = 0; q < n; ++q) {
      bool verdict = deg(d1) == deg(d2) &&
                     q_reduce(g, d1, q).reduced == q_reduce(g, d2, q).reduced;
      CHECK(verdict == expected);
    }
  }

  // degree is a class invariant
  Multigraph g = figure1();
  CHECK_FALSE(is_equivalent(g, make_divisor({1, 0, 0, 0}), make_divisor({0, 0, 0, 0})));
  Divisor d = make_divisor({0, 2, -1, 1});
  CHECK(is_equivalent(g, d, chip_fire(g, d, 2)));
}

TEST_CASE("equivalences from the constructions") {
  // two bivalent K_{2,3} vertices carry equivalent doubled chips
  LabeledGraph k = k23();
  const auto& bivalent = k.mark("bivalent");
  Divisor a = unit_chips(5, bivalent[0], 2);
  Divisor b = unit_chips(5, bivalent[1], 2);
  CHECK(is_equivalent(k.graph, a, b));

  // two triangles sharing an edge: (2n)v1 ~ (2n)v2
  Multigraph bowtie(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  for (Int n = 1; n <= 3; ++n)
    CHECK(is_equivalent(bowtie, unit_chips(4, 2, 2 * n), unit_chips(4, 3, 2 * n)));

  // tree vertices of a_graph(1) are interchangeable
  LabeledGraph a1 = a_graph(1);
  const auto& tree = a1.mark("tree");
  for (Int n = 1; n <= 3; ++n)
    for (size_t i = 1; i < tree.size(); ++i)
      CHECK(is_equivalent(a1.graph,
                          unit_chips(a1.graph.num_vertices(), tree[0], n),
                          unit_chips(a1.graph.num_vertices(), tree[i], n)));
}

TEST_CASE("effective representatives") {
  Multigraph g = figure1();
  CHECK(has_effective_representative(g, make_divisor({1, 1, 0, 0})));
  CHECK_FALSE(has_effective_representative(g, make_divisor({-1, 0, 0, 0})));

  auto witness = effective_witness(g, make_divisor({4, -1, 0, 5}));
  REQUIRE(witness.has_value());
  CHECK(is_effective(apply_script(g, make_divisor({4, -1, 0, 5}), *witness)));

  // the lemma-2 configuration: 4v - w on the pinched K33, v the pinch
  LabeledGraph b2 = b_graph(2);
  VertexId pinch = b2.mark_one("root");
  for (VertexId w = 0; w < b2.graph.num_vertices(); ++w) {
    Divisor d = unit_chips(b2.graph.num_vertices(), pinch, 4);
    d(w) -= 1;
    CHECK(has_effective_representative(b2.graph, d));
  }
}

TEST_CASE("rank examples") {
  // zero divisor: effective, but removing any chip fails
  Multigraph dot(1, {});
  CHECK(rank(dot, Divisor::Zero(1)) == 0);
  Multigraph g = figure1();
  CHECK(rank(g, Divisor::Zero(4)) == 0);

  LabeledGraph c7 = graph_C(7);
  Divisor d = unit_chips(12, c7.mark("central-triangle")[0], 3);
  CHECK(rank(c7.graph, d) == 1);

  LabeledGraph hw = heawood();
  CHECK(rank(hw.graph, unit_chips(14, 0, 7)) == 2);
}

TEST_CASE("rank agrees with the lattice-oracle brute force") {
  std::mt19937_64 rng(29);
  int compared = 0;
  while (compared < 60) {
    Multigraph g = random_connected_multigraph(rng, 2 + int(rng() % 3), 1 + int(rng() % 4));
    Divisor d = random_divisor(rng, g.num_vertices(), -2, 4);
    if (deg(d) > 6) continue;
    CHECK(rank(g, d, LoopPolicy::Inert) == brute_rank(g, d));
    ++compared;
  }
}

TEST_CASE("rank monotonicity in added chips") {
  std::mt19937_64 rng(31);
  Multigraph g = figure1();
  for (int trial = 0; trial < 40; ++trial) {
    Divisor d = random_divisor(rng, 4, -2, 3);
    Int r = rank(g, d);
    for (VertexId v = 0; v < 4; ++v) {
      Divisor more = d;
      more(v) += 1;
      Int r2 = rank(g, more);
      CHECK(r2 >= r);
      CHECK(r2 <= r + 1);
    }
  }
}

TEST_CASE("loops never move chips") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Multigraph g = random_connected_multigraph(rng, 2 + int(rng() % 4), 2 + int(rng() % 4));
    if (!g.has_loops()) continue;
    Divisor d = random_divisor(rng, g.num_vertices(), -2, 4);
    CHECK(rank(g, d, LoopPolicy::Inert) == rank(strip_loops(g), d, LoopPolicy::Inert));
  }
}

TEST_CASE("canonical divisor") {
  Multigraph g = figure1();
  Divisor k = canonical_divisor(g);
  CHECK(k == make_divisor({0, 1, 0, 1}));
  CHECK(deg(k) == 2 * genus(g) - 2);

  Multigraph pete = petersen().graph;
  CHECK(canonical_divisor(pete) == Divisor::Ones(10));

  CHECK_THROWS_AS(canonical_divisor(graph_C(4).graph), std::invalid_argument);

  // rank(K) on the figure graph, against the independent brute force
  CHECK(brute_rank(g, k) == 1);
  CHECK(rank(g, k) == 1);
}

TEST_CASE("Riemann-Roch identity on the figure graph") {
  std::mt19937_64 rng(41);
  Multigraph g = figure1();
  Divisor k = canonical_divisor(g);
  const Int gg = genus(g);
  for (int trial = 0; trial < 60; ++trial) {
    Divisor d = random_divisor(rng, 4, -2, 3);
    if (std::abs(deg(d)) > 2 * gg) continue;
    CHECK(rank(g, d) - rank(g, k - d) == deg(d) - gg + 1);
  }
}

TEST_CASE("effective enumeration is complete, colex-first, and class-exact") {
  // counts: C(n+d-1, d)
  EffectiveEnumerator en(3, 4);
  Divisor e(3);
  int count = 0;
  Divisor first(3), last(3);
  while (en.next(e)) {
    if (count == 0) first = e;
    last = e;
    ++count;
  }
  CHECK(count == 15);
  CHECK(first == make_divisor({4, 0, 0}));
  CHECK(last == make_divisor({0, 0, 4}));

  // d = 0 yields exactly the zero divisor
  EffectiveEnumerator zero(4, 0);
  count = 0;
  Divisor z(4);
  while (zero.next(z)) {
    CHECK(z == Divisor::Zero(4));
    ++count;
  }
  CHECK(count == 1);

  // the banana graph has exactly two degree-1 classes
  Multigraph banana(2, {{0, 1}, {0, 1}});
  ReducedClassEnumerator classes(banana, 1, 0);
  Divisor c(2);
  std::vector<Divisor> reps;
  while (classes.next(c)) reps.push_back(c);
  CHECK(reps.size() == 2);
  CHECK_FALSE(lattice_equivalent(banana, reps[0], reps[1]));
}

TEST_CASE("the q-reduced form is the unique such representative of its class") {
  // no two distinct q-reduced divisors of a degree may share a class, and at
  // degree >= genus the stream must exhaust the whole Jacobian
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph g = random_connected_multigraph(rng, 2 + int(rng() % 4), 1 + int(rng() % 4));
    const Int gg = genus(g);
    for (Int d : {Int{1}, gg}) {
      if (d < 0) continue;
      std::vector<Divisor> reps;
      ReducedClassEnumerator classes(g, d, 0);
      Divisor c(g.num_vertices());
      while (classes.next(c)) reps.push_back(c);
      for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
          CHECK_FALSE(lattice_equivalent(g, reps[i], reps[j]));
      if (d >= gg) CHECK(Int(reps.size()) == spanning_tree_count(g));
    }
  }
}

TEST_CASE("class streams match pairwise lattice dedup and the tree count") {
  Multigraph g = figure1();
  // all degree-2 effective divisors, partitioned by the lattice oracle
  std::vector<Divisor> all;
  EffectiveEnumerator en(4, 2);
  Divisor e(4);
  while (en.next(e)) all.push_back(e);
  CHECK(all.size() == 10);
  std::vector<Divisor> reps;
  for (const auto& d : all) {
    bool fresh = true;
    for (const auto& r : reps)
      if (lattice_equivalent(g, d, r)) fresh = false;
    if (fresh) reps.push_back(d);
  }

  ReducedClassEnumerator classes(g, 2, 0);
  Divisor c(4);
  int streamed = 0;
  while (classes.next(c)) ++streamed;
  CHECK(streamed == Int(reps.size()));

  // degree = genus, so every class carries an effective divisor: the stream
  // size equals the Jacobian order, i.e. the spanning tree count
  CHECK(streamed == spanning_tree_count(g));

  // same consistency on the Petersen graph at degree g = 6
  Multigraph pete = petersen().graph;
  ReducedClassEnumerator pclasses(pete, 6, 0);
  Divisor pc(10);
  Int pcount = 0;
  while (pclasses.next(pc)) ++pcount;
  CHECK(pcount == spanning_tree_count(pete));
}
