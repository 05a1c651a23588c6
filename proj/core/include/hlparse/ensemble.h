#ifndef HLPARSE_ENSEMBLE_H_
#define HLPARSE_ENSEMBLE_H_

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse {

// Arc votes from k parallel parses of one sentence.
struct VoteGraph {
  int n = 0;       // tokens
  int voters = 0;  // k
  // weights[h * (n + 1) + d]: summed voter weight of arc h -> d.
  std::vector<double> weights;
  // Labels proposed for each voted arc, in voter order, with their weights.
  std::map<std::pair<int, int>, std::vector<std::pair<std::string, double>>> labels;

  double weight(int head, int dep) const { return weights[head * (n + 1) + dep]; }
};

// Counts arcs over k trees. voter_weights, if given, must have k entries;
// the default is one vote per tree. Throws ContractError when the trees do
// not share one token sequence or k is 0.
VoteGraph BuildVotes(std::span<const DepTree> trees,
                     std::span<const double> voter_weights = {});

// Maximum spanning arborescence rooted at node 0 over a dense arc score
// function (Chu-Liu/Edmonds). score(h, d) is consulted for h in 0..n,
// d in 1..n, h != d; allowed(h, d) masks arcs out. Ties prefer the smaller
// head index, then the shorter arc. Returns heads[d-1] for d in 1..n, or an
// empty vector when no arborescence exists under the mask.
std::vector<int> MaxArborescence(int n, const std::function<double(int, int)>& score,
                                 const std::function<bool(int, int)>& allowed = {});

struct ReparseOptions {
  // Constrain the root to exactly one dependent, keeping the best tree over
  // all candidate root children.
  bool force_single_root = false;
};

struct Reparse {
  std::vector<int> heads;           // heads[d-1]
  std::vector<std::string> labels;  // labels[d-1]
  double total_weight = 0;
};

Reparse ReparseVotes(const VoteGraph& votes, const ReparseOptions& options = {});

// Sum of vote weights over the arcs of a head vector.
double TreeWeight(const VoteGraph& votes, std::span<const int> heads);

// Reparses one sentence; tokens and comments come from the first tree.
// A DepTree must have one root, so an unconstrained result with several
// root dependents is reparsed with force_single_root.
DepTree EnsembleTrees(std::span<const DepTree> trees, const ReparseOptions& options = {},
                      std::span<const double> voter_weights = {});

// Sentence-by-sentence ensemble of k parallel treebanks.
Treebank EnsembleTreebanks(std::span<const Treebank> treebanks,
                           const ReparseOptions& options = {},
                           std::span<const double> voter_weights = {}, int jobs = 1);

}  // namespace hlparse

#endif  // HLPARSE_ENSEMBLE_H_
