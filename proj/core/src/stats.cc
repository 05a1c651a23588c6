#include "hlparse/stats.h"

#include <algorithm>
#include <cmath>

#include "hlparse/errors.h"

namespace hlparse {

RelationDistribution ComputeRelationDistribution(const Treebank& tb,
                                                 const DistributionOptions& options) {
  RelationDistribution d;
  d.corpus_name = tb.source_name;
  d.excluded = options.exclude;
  for (const auto& tree : tb.trees) {
    for (const auto& t : tree.tokens()) {
      std::string label(options.coarse_labels ? CoarseLabel(t.deprel) : t.deprel);
      if (options.exclude.contains(label)) continue;
      ++d.counts[label];
      ++d.counted_tokens;
    }
  }
  for (const auto& [label, c] : d.counts)
    d.proportions[label] = static_cast<double>(c) / d.counted_tokens;
  return d;
}

int NearestRankPercentile(std::vector<int> values, int p) {
  if (values.empty() || p <= 0 || p > 100)
    throw ContractError("percentile: empty sample or p outside (0, 100]");
  std::sort(values.begin(), values.end());
  // Smallest value with at least p% of the sample at or below it.
  const auto n = static_cast<long long>(values.size());
  long long rank = (static_cast<long long>(p) * n + 99) / 100;
  rank = std::clamp(rank, 1LL, n);
  return values[rank - 1];
}

CorpusSummary SummarizeCorpus(const Treebank& tb) {
  CorpusSummary s;
  s.sentences = tb.size();
  std::vector<int> lengths;
  lengths.reserve(tb.trees.size());
  for (const auto& t : tb.trees) {
    lengths.push_back(t.size());
    s.tokens += t.size();
  }
  if (lengths.empty()) return s;
  s.mean_length = static_cast<double>(s.tokens) / s.sentences;
  s.min_length = *std::min_element(lengths.begin(), lengths.end());
  s.max_length = *std::max_element(lengths.begin(), lengths.end());
  for (int p : kSummaryPercentiles) s.length_percentiles[p] = NearestRankPercentile(lengths, p);
  return s;
}

DistributionTable CompareDistributions(std::span<const RelationDistribution> dists,
                                       double min_share) {
  if (dists.size() < 2) throw ContractError("compare_distributions: need at least two corpora");
  DistributionTable table;
  std::set<std::string> labels;
  for (const auto& d : dists) {
    table.corpora.push_back(d.corpus_name);
    for (const auto& [label, _] : d.proportions) labels.insert(label);
  }
  for (const auto& label : labels) {
    DistributionRow row;
    row.label = label;
    for (const auto& d : dists) {
      auto it = d.proportions.find(label);
      row.shares.push_back(it == d.proportions.end() ? 0.0 : it->second);
    }
    row.max_share = *std::max_element(row.shares.begin(), row.shares.end());
    if (row.max_share >= min_share) table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const DistributionRow& a, const DistributionRow& b) {
                     if (a.max_share != b.max_share) return a.max_share > b.max_share;
                     return a.label < b.label;
                   });
  return table;
}

}  // namespace hlparse
