#pragma once

#include "chipfire/divisor.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace chipfire {

/// Brill-Noether number g - (r+1)(g - d + r).
inline Int rho(Int g, Int r, Int d) { return g - (r + 1) * (g - d + r); }

struct RhoPair {
  Int r;
  Int d;
};

/// Minimal sufficient check set for Brill-Noether generality at genus g: for
/// each r >= 1 the largest d with r <= d <= g-1 and rho(g, r, d) < 0. Degrees
/// beyond g-1 mirror back through Riemann-Roch and lower degrees follow by
/// chip monotonicity; both reductions are property-tested, not assumed.
std::vector<RhoPair> violating_pairs(Int g);

/// Thrown when a class scan exceeds the configured budget, so "general"
/// verdicts are never budget artifacts.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  Int max_classes = 0;      // per-degree class budget; 0 = unlimited
  bool exhaustive = false;  // scan every rho<0 pair with r <= d <= 2g-2
};

/// First q-reduced effective divisor class (base 0, enumeration order) of
/// degree d with rank >= r, searched on subdivide_loops(g) when g has loops.
std::optional<Divisor> exists_rank_at_least(const Multigraph& g, Int d, Int r,
                                            const SearchOptions& opts = {});

struct PairVerdict {
  Int r = 0;
  Int d = 0;
  Int rho_value = 0;
  bool violated = false;
  std::optional<Divisor> witness;  // on the checked graph, q-reduced at 0
  Int witness_rank = -1;
  Int classes_scanned = 0;
};

struct BNReport {
  Int genus_value = 0;       // genus of the input graph
  bool used_subdivision = false;
  Multigraph checked;        // the graph all verdicts and witnesses refer to
  std::vector<PairVerdict> pairs;
  bool general = true;
};

/// Runs the (r, d) searches over violating_pairs(genus) -- or the full rho<0
/// sweep with opts.exhaustive -- and reports verdict plus witnesses.
/// Requires a connected graph of genus >= 2.
BNReport is_bn_general(const Multigraph& g, const SearchOptions& opts = {});

/// Witness divisor of degree 2 and rank >= 1 on subdivide_loops(g), if any.
std::optional<Divisor> is_hyperelliptic(const Multigraph& g);

/// Smallest d >= 1 carrying a divisor of rank >= 1. At most genus + 1.
Int gonality(const Multigraph& g);

/// Re-checks a shipped witness independently of any search: rank(g, d) >= r.
bool verify_certificate(const Multigraph& g, const Divisor& d, Int r);

}  // namespace chipfire
