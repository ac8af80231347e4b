#pragma once

#include "chipfire/multigraph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chipfire {

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

/// One re-checkable statement from the verification catalog. Claims always
/// regenerate their graphs from a family spec; nothing is cached between runs.
struct PaperClaim {
  std::string id;
  std::string summary;
  Int genus_value = 0;  // 0 when the claim is not tied to one genus
  std::function<ClaimResult()> run;
};

/// The full catalog, sorted by id.
const std::vector<PaperClaim>& paper_claims();

}  // namespace chipfire
