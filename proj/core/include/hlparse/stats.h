#ifndef HLPARSE_STATS_H_
#define HLPARSE_STATS_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse {

struct RelationDistribution {
  std::string corpus_name;
  std::map<std::string, double> proportions;
  std::map<std::string, int> counts;
  int counted_tokens = 0;
  std::set<std::string> excluded;
};

struct DistributionOptions {
  std::set<std::string> exclude = {"punct", "root"};
  // Fold "nsubj:pass" into "nsubj" before counting and excluding.
  bool coarse_labels = true;
};

RelationDistribution ComputeRelationDistribution(const Treebank& tb,
                                                 const DistributionOptions& options = {});

struct CorpusSummary {
  int sentences = 0;
  int tokens = 0;
  std::optional<double> mean_length;  // empty for an empty treebank
  // Nearest-rank percentiles of sentence length, keyed by percent.
  std::map<int, int> length_percentiles;
  int min_length = 0;
  int max_length = 0;
};

// Percentiles reported by CorpusSummary.
inline constexpr int kSummaryPercentiles[] = {5, 25, 50, 75, 95};

CorpusSummary SummarizeCorpus(const Treebank& tb);

// Nearest-rank percentile of an unsorted sample; p in (0, 100].
int NearestRankPercentile(std::vector<int> values, int p);

struct DistributionRow {
  std::string label;
  std::vector<double> shares;  // one per input distribution
  double max_share = 0;
};

struct DistributionTable {
  std::vector<std::string> corpora;
  std::vector<DistributionRow> rows;
};

// Labels whose share reaches min_share in at least one corpus, sorted by
// their largest share (descending, then label). Needs two or more inputs.
DistributionTable CompareDistributions(std::span<const RelationDistribution> dists,
                                       double min_share = 0.02);

}  // namespace hlparse

#endif  // HLPARSE_STATS_H_
