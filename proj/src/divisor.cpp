#include "chipfire/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace chipfire {

namespace {

void check_vertex(const Multigraph& g, VertexId v) {
  if (v < 0 || v >= g.num_vertices())
    throw std::invalid_argument("vertex id out of range");
}

void check_sizes(const Multigraph& g, const Divisor& d) {
  if (d.size() != g.num_vertices())
    throw std::invalid_argument("divisor length does not match vertex count");
}

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

// Breadth-first distances from q; throws when the graph is disconnected.
std::vector<int> bfs_distances(const Multigraph& g, VertexId q) {
  const int n = g.num_vertices();
  std::vector<int> dist(n, -1);
  std::vector<VertexId> queue{q};
  dist[q] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (const auto& [v, m] : g.neighbors(u)) {
      (void)m;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (dist[v] < 0) throw std::invalid_argument("graph is not connected");
  return dist;
}

// Shared burning kernel. Fills `burnt`; returns the number of burnt vertices.
int burn(const Multigraph& g, const Divisor& d, VertexId q,
         std::vector<Int>& burned, std::vector<char>& burnt,
         std::vector<VertexId>& queue) {
  const int n = g.num_vertices();
  burned.assign(n, 0);
  burnt.assign(n, 0);
  queue.clear();
  queue.push_back(q);
  burnt[q] = 1;
  int count = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (const auto& [v, m] : g.neighbors(u)) {
      if (burnt[v]) continue;
      burned[v] += m;
      if (burned[v] > d(v)) {
        burnt[v] = 1;
        ++count;
        queue.push_back(v);
      }
    }
  }
  return count;
}

void check_burn_preconditions(const Multigraph& g, const Divisor& d, VertexId q) {
  check_vertex(g, q);
  check_sizes(g, d);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != q && d(v) < 0)
      throw std::invalid_argument("dhar burning needs d(v) >= 0 away from the base");
}

}  // namespace

Divisor make_divisor(std::initializer_list<Int> values) {
  Divisor d(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Int x : values) d(i++) = x;
  return d;
}

Divisor chip_fire(const Multigraph& g, const Divisor& d, VertexId v) {
  check_vertex(g, v);
  check_sizes(g, d);
  Divisor out = d;
  out(v) -= g.nonloop_degree(v);
  for (const auto& [u, m] : g.neighbors(v)) out(u) += m;
  return out;
}

Divisor fire_set(const Multigraph& g, const Divisor& d,
                 const std::vector<VertexId>& set) {
  check_sizes(g, d);
  std::vector<char> in_set(g.num_vertices(), 0);
  for (VertexId v : set) {
    check_vertex(g, v);
    in_set[v] = 1;
  }
  Divisor out = d;
  for (VertexId v : set) {
    for (const auto& [u, m] : g.neighbors(v)) {
      if (!in_set[u]) {
        out(v) -= m;
        out(u) += m;
      }
    }
  }
  return out;
}

Divisor apply_script(const Multigraph& g, const Divisor& d,
                     const FiringScript& script) {
  check_sizes(g, d);
  check_sizes(g, script);
  return d - g.laplacian() * script;
}

std::vector<VertexId> dhar_unburnt(const Multigraph& g, const Divisor& d,
                                   VertexId q) {
  check_burn_preconditions(g, d, q);
  std::vector<Int> burned;
  std::vector<char> burnt;
  std::vector<VertexId> queue;
  burn(g, d, q, burned, burnt, queue);
  std::vector<VertexId> unburnt;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!burnt[v]) unburnt.push_back(v);
  return unburnt;
}

bool is_q_reduced(const Multigraph& g, const Divisor& d, VertexId q) {
  check_vertex(g, q);
  check_sizes(g, d);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != q && d(v) < 0) return false;
  std::vector<Int> burned;
  std::vector<char> burnt;
  std::vector<VertexId> queue;
  return burn(g, d, q, burned, burnt, queue) == g.num_vertices();
}

ReductionResult q_reduce(const Multigraph& g, const Divisor& d, VertexId q) {
  check_vertex(g, q);
  check_sizes(g, d);
  const int n = g.num_vertices();
  const std::vector<int> dist = bfs_distances(g, q);
  const int max_dist = *std::max_element(dist.begin(), dist.end());

  Divisor cur = d;
  FiringScript script = FiringScript::Zero(n);

  // Benevolence phase: working from the outermost BFS ring inward, fire the
  // base-side set {dist < k} often enough to push ring k nonnegative. Rings
  // beyond k are untouched, so each ring is fixed exactly once; only the base
  // can end up negative.
  std::vector<std::vector<VertexId>> rings(max_dist + 1);
  for (int v = 0; v < n; ++v) rings[dist[v]].push_back(v);
  for (int k = max_dist; k >= 1; --k) {
    Int fires = 0;
    for (VertexId v : rings[k]) {
      if (cur(v) >= 0) continue;
      Int inward = 0;
      for (const auto& [u, m] : g.neighbors(v))
        if (dist[u] == k - 1) inward += m;
      fires = std::max(fires, ceil_div(-cur(v), inward));
    }
    if (fires == 0) continue;
    for (VertexId v : rings[k]) {
      for (const auto& [u, m] : g.neighbors(v)) {
        if (dist[u] == k - 1) {
          cur(v) += fires * m;
          cur(u) -= fires * m;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (dist[v] < k) script(v) += fires;
  }

  // Dhar phase: fire the maximal unburnt set as many times as its slack
  // allows, until the burn consumes everything.
  std::vector<Int> burned;
  std::vector<char> burnt;
  std::vector<VertexId> queue;
  for (;;) {
    if (burn(g, cur, q, burned, burnt, queue) == n) break;
    Int fires = -1;
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      Int outward = 0;
      for (const auto& [u, m] : g.neighbors(v))
        if (burnt[u]) outward += m;
      if (outward > 0) {
        Int slack = cur(v) / outward;
        fires = (fires < 0) ? slack : std::min(fires, slack);
      }
    }
    if (fires < 1) fires = 1;
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      script(v) += fires;
      for (const auto& [u, m] : g.neighbors(v)) {
        if (burnt[u]) {
          cur(v) -= fires * m;
          cur(u) += fires * m;
        }
      }
    }
  }

  script.array() -= script.minCoeff();
  return {std::move(cur), std::move(script), q};
}

bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
  check_sizes(g, a);
  check_sizes(g, b);
  if (deg(a) != deg(b)) return false;
  return q_reduce(g, a, 0).reduced == q_reduce(g, b, 0).reduced;
}

std::optional<FiringScript> effective_witness(const Multigraph& g,
                                              const Divisor& d) {
  ReductionResult r = q_reduce(g, d, 0);
  if (r.reduced(0) < 0) return std::nullopt;
  return r.script;
}

bool has_effective_representative(const Multigraph& g, const Divisor& d) {
  return q_reduce(g, d, 0).reduced(0) >= 0;
}

Divisor canonical_divisor(const Multigraph& g) {
  if (g.has_loops())
    throw std::invalid_argument(
        "canonical divisor needs a loop-free graph; subdivide or strip first");
  Divisor k(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) k(v) = g.degree(v) - 2;
  return k;
}

EffectiveEnumerator::EffectiveEnumerator(int num_vertices, Int degree)
    : n_(num_vertices), d_(degree) {
  if (n_ <= 0) throw std::invalid_argument("enumerator needs vertices");
  if (d_ < 0) throw std::invalid_argument("enumerator needs degree >= 0");
  multiset_.assign(static_cast<size_t>(d_), 0);
}

bool EffectiveEnumerator::next(Divisor& out) {
  if (done_) return false;
  if (!first_) {
    // colex successor on the sorted index multiset
    size_t i = 0;
    const size_t d = multiset_.size();
    for (; i < d; ++i) {
      int limit = (i + 1 < d) ? multiset_[i + 1] : n_ - 1;
      if (multiset_[i] < limit) break;
    }
    if (i == d) {
      done_ = true;
      return false;
    }
    multiset_[i] += 1;
    std::fill(multiset_.begin(), multiset_.begin() + i, 0);
  }
  first_ = false;
  out.setZero(n_);
  for (int idx : multiset_) out(idx) += 1;
  if (d_ == 0) done_ = true;
  return true;
}

ReducedClassEnumerator::ReducedClassEnumerator(const Multigraph& g, Int degree,
                                               VertexId base)
    : g_(g), base_(base), inner_(g.num_vertices(), degree) {
  check_vertex(g, base);
  if (!is_connected(g))
    throw std::invalid_argument("class enumeration requires a connected graph");
}

bool ReducedClassEnumerator::next(Divisor& out) {
  while (inner_.next(out)) {
    if (burn(g_, out, base_, burned_, burnt_, queue_) == g_.num_vertices())
      return true;
  }
  return false;
}

namespace {

// True iff |reduced - E| is nonempty for every effective E of degree r.
// Concentrated candidates r*v are tried first; they fail soonest.
bool all_effective_pass(const Multigraph& g, const Divisor& reduced, Int r) {
  const int n = g.num_vertices();
  Divisor candidate(n);
  for (int v = 0; v < n; ++v) {
    candidate = reduced;
    candidate(v) -= r;
    if (!is_effective(candidate) && !has_effective_representative(g, candidate))
      return false;
  }
  EffectiveEnumerator en(n, r);
  Divisor e(n);
  while (en.next(e)) {
    candidate = reduced - e;
    if (is_effective(candidate)) continue;
    if (!has_effective_representative(g, candidate)) return false;
  }
  return true;
}

Int rank_inert_capped(const Multigraph& g, const Divisor& d, Int cap) {
  ReductionResult red = q_reduce(g, d, 0);
  if (red.reduced(0) < 0) return -1;
  Int r = 0;
  while (r < cap && all_effective_pass(g, red.reduced, r + 1)) ++r;
  return r;
}

// Threshold test: a single sweep at level r decides rank >= r, since
// passing every degree-r subtraction already forces |d| nonempty.
bool rank_at_least_inert(const Multigraph& g, const Divisor& d, Int r) {
  if (r < 0) return true;
  ReductionResult red = q_reduce(g, d, 0);
  if (red.reduced(0) < 0) return false;
  if (r == 0) return true;
  return all_effective_pass(g, red.reduced, r);
}

}  // namespace

Int rank_capped(const Multigraph& g, const Divisor& d, Int cap,
                LoopPolicy policy) {
  check_sizes(g, d);
  if (policy == LoopPolicy::Subdivide && g.has_loops()) {
    Multigraph sub = subdivide_loops(g);
    Divisor ext = Divisor::Zero(sub.num_vertices());
    ext.head(d.size()) = d;
    return rank_inert_capped(sub, ext, cap);
  }
  return rank_inert_capped(g, d, cap);
}

Int rank(const Multigraph& g, const Divisor& d, LoopPolicy policy) {
  // rank never exceeds the degree, so the cap makes the sweep finite
  Int bound = std::max<Int>(deg(d), 0);
  return rank_capped(g, d, bound, policy);
}

bool rank_at_least(const Multigraph& g, const Divisor& d, Int r,
                   LoopPolicy policy) {
  check_sizes(g, d);
  if (policy == LoopPolicy::Subdivide && g.has_loops()) {
    Multigraph sub = subdivide_loops(g);
    Divisor ext = Divisor::Zero(sub.num_vertices());
    ext.head(d.size()) = d;
    return rank_at_least_inert(sub, ext, r);
  }
  return rank_at_least_inert(g, d, r);
}

}  // namespace chipfire
