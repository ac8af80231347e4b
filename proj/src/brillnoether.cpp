#include "chipfire/brillnoether.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace chipfire {

std::vector<RhoPair> violating_pairs(Int g) {
  if (g < 2) throw std::invalid_argument("violating_pairs needs genus >= 2");
  std::vector<RhoPair> out;
  for (Int r = 1; r <= g - 1; ++r) {
    for (Int d = g - 1; d >= r; --d) {
      if (rho(g, r, d) < 0) {
        out.push_back({r, d});
        break;
      }
    }
  }
  return out;
}

namespace {

struct CheckedGraph {
  Multigraph graph;
  bool subdivided;
};

CheckedGraph checked_form(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (g.has_loops()) return {subdivide_loops(g), true};
  return {g, false};
}

void budget_check(const SearchOptions& opts, Int scanned) {
  if (opts.max_classes > 0 && scanned > opts.max_classes)
    throw BudgetExceeded("class budget exceeded after " +
                         std::to_string(opts.max_classes) +
                         " classes; rerun with a larger --max-classes");
}

}  // namespace

std::optional<Divisor> exists_rank_at_least(const Multigraph& g, Int d, Int r,
                                            const SearchOptions& opts) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  CheckedGraph cg = checked_form(g);
  ReducedClassEnumerator classes(cg.graph, d, 0);
  Divisor cls(cg.graph.num_vertices());
  Int scanned = 0;
  while (classes.next(cls)) {
    budget_check(opts, ++scanned);
    if (rank_at_least(cg.graph, cls, r, LoopPolicy::Inert)) return cls;
  }
  return std::nullopt;
}

BNReport is_bn_general(const Multigraph& g, const SearchOptions& opts) {
  CheckedGraph cg = checked_form(g);
  const Int gg = genus(g);
  if (gg < 2) throw std::invalid_argument("bn check needs genus >= 2");

  std::vector<RhoPair> pairs;
  if (opts.exhaustive) {
    for (Int r = 1; r <= 2 * gg - 2; ++r)
      for (Int d = r; d <= 2 * gg - 2; ++d)
        if (rho(gg, r, d) < 0) pairs.push_back({r, d});
  } else {
    pairs = violating_pairs(gg);
  }

  BNReport report;
  report.genus_value = gg;
  report.used_subdivision = cg.subdivided;
  report.checked = cg.graph;

  // one scan per degree answers every r at that degree
  std::map<Int, std::vector<Int>> by_degree;
  for (const auto& [r, d] : pairs) by_degree[d].push_back(r);

  struct Found {
    Divisor witness;
    Int rank;
  };
  std::map<std::pair<Int, Int>, Found> found;
  std::map<Int, Int> scanned_by_degree;

  for (auto& [d, rs] : by_degree) {
    std::sort(rs.begin(), rs.end());
    ReducedClassEnumerator classes(cg.graph, d, 0);
    Divisor cls(cg.graph.num_vertices());
    Int scanned = 0;
    size_t satisfied = 0;
    while (classes.next(cls)) {
      budget_check(opts, ++scanned);
      if (satisfied == rs.size()) break;  // every pair at this degree witnessed
      // ascending thresholds; the first failing level settles all higher ones
      for (Int r : rs) {
        if (!rank_at_least(cg.graph, cls, r, LoopPolicy::Inert)) break;
        if (!found.count({r, d})) {
          found.emplace(std::make_pair(r, d), Found{cls, r});
          ++satisfied;
        }
      }
    }
    scanned_by_degree[d] = scanned;
  }

  for (const auto& [r, d] : pairs) {
    PairVerdict v;
    v.r = r;
    v.d = d;
    v.rho_value = rho(gg, r, d);
    v.classes_scanned = scanned_by_degree[d];
    if (auto it = found.find({r, d}); it != found.end()) {
      v.violated = true;
      v.witness = it->second.witness;
      v.witness_rank = it->second.rank;
      // witnesses must re-verify independently of the scan that produced them
      if (!rank_at_least(cg.graph, *v.witness, r, LoopPolicy::Inert))
        throw std::logic_error("bn witness failed re-verification");
      report.general = false;
    }
    report.pairs.push_back(std::move(v));
  }
  return report;
}

std::optional<Divisor> is_hyperelliptic(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  if (genus(g) < 2)
    throw std::invalid_argument("hyperellipticity needs genus >= 2");
  return exists_rank_at_least(g, 2, 1);
}

Int gonality(const Multigraph& g) {
  const Int gg = genus(g);
  for (Int d = 1; d <= gg + 1; ++d)
    if (exists_rank_at_least(g, d, 1)) return d;
  throw std::logic_error("gonality exceeded the Riemann-Roch bound");
}

bool verify_certificate(const Multigraph& g, const Divisor& d, Int r) {
  return rank_at_least(g, d, r, LoopPolicy::Subdivide);
}

}  // namespace chipfire
