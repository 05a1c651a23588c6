#ifndef HLPARSE_PROJECT_H_
#define HLPARSE_PROJECT_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlparse/align.h"
#include "hlparse/conllu.h"

namespace hlparse {

// Nodes on the root paths of the requested sentence nodes, and the
// sentence edges among them. Node 0 (virtual root) is always present.
struct Subtree {
  std::vector<int> nodes;                   // ascending
  std::vector<std::pair<int, int>> edges;   // (head, dependent), by dependent
};

Subtree ExtractSubtree(const DepTree& sentence, std::span<const int> headline_nodes);

// Which extra node is collapsed next.
enum class CollapseOrder {
  // Depth-first from the virtual root; children are pushed in ascending
  // order and popped last-in-first-out, so the rightmost branch is
  // searched first. This is the order of the reference implementation.
  kReferenceDfs,
  // Smallest depth first, then smallest index.
  kClosestToRoot,
};

struct CollapseStep {
  int collapsed;    // sentence id removed
  int promoted;     // its leftmost remaining child, now attached to parent
  int parent;       // head of the collapsed node at the time (0 = root)
  std::string label;
  std::vector<int> reattached;  // other children moved under promoted
};

struct ProjectionResult {
  DepTree tree;                   // over headline tokens, ids 1..|alignment|
  int collapsed_count = 0;
  std::vector<int> promoted_ids;  // sentence ids that took a new label
  std::vector<CollapseStep> steps;
};

// Prunes the sentence tree to the aligned tokens, promoting the leftmost
// child of each removed node into its place. Throws ContractError when the
// sentence is not validated or the alignment does not fit it.
ProjectionResult ProjectTree(const DepTree& sentence, const Alignment& alignment,
                             CollapseOrder order = CollapseOrder::kReferenceDfs);

enum class PairStatus { kProjected, kNoAlignment, kError };

struct PairOutcome {
  int index = 0;  // input position
  PairStatus status = PairStatus::kProjected;
  std::string message;
  int headline_length = 0;
  int collapsed_count = 0;
  std::vector<int> promoted_ids;
  bool projective = true;
};

struct SilverReport {
  int total = 0;
  int kept = 0;
  int dropped = 0;
  int errors = 0;
  int trees_with_collapse = 0;
  int total_collapsed = 0;
  int non_projective = 0;
  std::vector<PairOutcome> outcomes;
};

struct SilverCorpus {
  Treebank treebank;
  SilverReport report;
};

struct SilverOptions {
  bool case_sensitive = false;
  int jobs = 1;
  CollapseOrder order = CollapseOrder::kReferenceDfs;
};

// Aligns and projects every pair. Failures are recorded, never thrown;
// output order follows input order.
SilverCorpus BuildSilverCorpus(std::span<const HeadlinePair> pairs,
                               const SilverOptions& options = {});

std::string_view PairStatusName(PairStatus status);

}  // namespace hlparse

#endif  // HLPARSE_PROJECT_H_
