#pragma once

#include "chipfire/multigraph.hpp"

#include <optional>
#include <vector>

namespace chipfire {

/// Integer chip assignment on the vertices of a graph.
using Divisor = IntVector;
/// Net number of times each vertex fires (negative = reverse-fired).
using FiringScript = IntVector;

Divisor make_divisor(std::initializer_list<Int> values);

inline Int deg(const Divisor& d) { return d.sum(); }
inline bool is_effective(const Divisor& d) { return (d.array() >= 0).all(); }

/// One chip-firing move at v: v loses its degree, every neighbor gains the
/// edge multiplicity. Loops return both endpoints to v, so they are inert.
Divisor chip_fire(const Multigraph& g, const Divisor& d, VertexId v);

/// Fires every vertex of `set` once; order-independent.
Divisor fire_set(const Multigraph& g, const Divisor& d,
                 const std::vector<VertexId>& set);

/// D minus Laplacian times script.
Divisor apply_script(const Multigraph& g, const Divisor& d,
                     const FiringScript& script);

/// Dhar's burning algorithm. Requires d(v) >= 0 for all v != q; returns the
/// maximal vertex set S avoiding q in which every v keeps at least as many
/// chips as it has edges leaving S. Empty exactly when d is q-reduced.
std::vector<VertexId> dhar_unburnt(const Multigraph& g, const Divisor& d,
                                   VertexId q);
bool is_q_reduced(const Multigraph& g, const Divisor& d, VertexId q);

struct ReductionResult {
  Divisor reduced;
  FiringScript script;  // normalized so the minimum entry is 0
  VertexId base = 0;
};

/// Unique q-reduced representative of d's linear-equivalence class, with the
/// firing script that realizes it. Requires a connected graph; terminates for
/// every integer divisor.
ReductionResult q_reduce(const Multigraph& g, const Divisor& d, VertexId q);

/// Linear equivalence: reachability by chip-firing moves. Base-independent.
bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b);

/// Script mapping d to an effective divisor, when the class has one.
std::optional<FiringScript> effective_witness(const Multigraph& g,
                                              const Divisor& d);
bool has_effective_representative(const Multigraph& g, const Divisor& d);

/// Rank computations on a loopful graph run on subdivide_loops(g) by default,
/// with the divisor extended by zeros; Inert computes on g as given (where
/// loops never move chips).
enum class LoopPolicy { Subdivide, Inert };

/// Baker-Norine rank: -1 with no effective representative, else the largest r
/// such that d minus ANY effective divisor of degree r still has one.
Int rank(const Multigraph& g, const Divisor& d,
         LoopPolicy policy = LoopPolicy::Subdivide);
bool rank_at_least(const Multigraph& g, const Divisor& d, Int r,
                   LoopPolicy policy = LoopPolicy::Subdivide);
/// min(rank(d), cap); saves the unbounded sweep when only a threshold matters.
Int rank_capped(const Multigraph& g, const Divisor& d, Int cap,
                LoopPolicy policy = LoopPolicy::Subdivide);

/// K = sum (deg(v) - 2) v. Demands a loop-free graph; callers pick a loop
/// convention (subdivide or strip) explicitly.
Divisor canonical_divisor(const Multigraph& g);

/// Streams all C(n+d-1, d) effective divisors of degree d, each exactly once,
/// in colexicographic order on the multiset of vertex indices.
class EffectiveEnumerator {
 public:
  EffectiveEnumerator(int num_vertices, Int degree);
  bool next(Divisor& out);

 private:
  int n_;
  Int d_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> multiset_;
};

/// Streams each linear-equivalence class with an effective representative of
/// degree d exactly once, as its q-reduced form, in enumeration order.
class ReducedClassEnumerator {
 public:
  ReducedClassEnumerator(const Multigraph& g, Int degree, VertexId base);
  bool next(Divisor& out);

 private:
  const Multigraph& g_;
  VertexId base_;
  EffectiveEnumerator inner_;
  // scratch for the burn test
  std::vector<Int> burned_;
  std::vector<char> burnt_;
  std::vector<VertexId> queue_;
};

}  // namespace chipfire
