#ifndef HLPARSE_TESTS_BRUTE_FORCE_H_
#define HLPARSE_TESTS_BRUTE_FORCE_H_

#include <vector>

#include "hlparse/ensemble.h"

namespace hlparse::testing {

struct BruteForceResult {
  double best_weight = -1;
  int optimal_trees = 0;  // how many head vectors reach best_weight
};

// Enumerates every head assignment (n+1)^n and keeps the valid trees.
// With single_root only trees with exactly one root dependent count.
BruteForceResult BruteForceMaxArborescence(const VoteGraph& votes, bool single_root);

// Independent reachability check: every token reaches 0 by following heads
// within n steps, and no token is its own head.
bool ReachesRoot(const std::vector<int>& heads);

}  // namespace hlparse::testing

#endif  // HLPARSE_TESTS_BRUTE_FORCE_H_
