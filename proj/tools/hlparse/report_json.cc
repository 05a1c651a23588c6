#include "report_json.h"

namespace hlparse::cli {

using nlohmann::json;

json ToJson(const Alignment& a) {
  json pairs = json::array();
  for (const auto& p : a.pairs) pairs.push_back({p.headline_index, p.sentence_index});
  return pairs;
}

json ToJson(const EvalReport& r) {
  json rel = json::object();
  for (const auto& [label, s] : r.per_relation) {
    rel[label] = {{"precision", s.precision},     {"recall", s.recall},
                  {"f1", s.f1},                   {"gold_support", s.gold_support},
                  {"predicted_count", s.predicted_count}, {"correct", s.correct}};
  }
  return {{"uas", r.uas},
          {"las", r.las},
          {"uem", r.uem},
          {"lem", r.lem},
          {"token_count", r.token_count},
          {"sentence_count", r.sentence_count},
          {"head_correct", r.head_correct},
          {"labeled_correct", r.labeled_correct},
          {"punct_excluded", r.punct_excluded},
          {"coarse_labels", r.coarse_labels},
          {"per_relation", rel}};
}

json ToJson(const std::map<std::string, ErrorReduction>& rer) {
  json out = json::object();
  for (const auto& [label, e] : rer) {
    out[label] = {{"base_f1", e.base_f1},
                  {"improved_f1", e.improved_f1},
                  {"percent", e.defined ? json(e.percent) : json(nullptr)}};
  }
  return out;
}

json ToJson(const SilverReport& r) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) {
    json j = {{"index", o.index}, {"status", PairStatusName(o.status)}};
    if (!o.message.empty()) j["message"] = o.message;
    if (o.status == PairStatus::kProjected) {
      j["headline_length"] = o.headline_length;
      j["collapsed"] = o.collapsed_count;
      j["promoted"] = o.promoted_ids;
      j["projective"] = o.projective;
    }
    outcomes.push_back(std::move(j));
  }
  return {{"total", r.total},
          {"kept", r.kept},
          {"dropped", r.dropped},
          {"errors", r.errors},
          {"trees_with_collapse", r.trees_with_collapse},
          {"total_collapsed", r.total_collapsed},
          {"non_projective", r.non_projective},
          {"outcomes", outcomes}};
}

json ToJson(const ExtractionTuple& t) {
  json args = json::array();
  for (const auto& a : t.arguments)
    args.push_back({{"rel", a.rel}, {"indices", a.indices}, {"text", a.text}});
  return {{"sent_id", t.sent_id},
          {"head", t.head},
          {"predicate", t.predicate},
          {"predicate_text", t.predicate_text},
          {"arguments", args}};
}

json ToJson(const ExtractionDiff& d) {
  json a = json::array(), b = json::array();
  for (const auto& t : d.only_a) a.push_back(ToJson(t));
  for (const auto& t : d.only_b) b.push_back(ToJson(t));
  return {{"sentence_index", d.sentence_index}, {"sent_id", d.sent_id}, {"only_a", a},
          {"only_b", b}};
}

json ToJson(const RelationDistribution& d) {
  return {{"corpus", d.corpus_name},
          {"counted_tokens", d.counted_tokens},
          {"excluded", d.excluded},
          {"counts", d.counts},
          {"proportions", d.proportions}};
}

json ToJson(const CorpusSummary& s) {
  json pct = json::object();
  for (const auto& [p, v] : s.length_percentiles) pct[std::to_string(p)] = v;
  return {{"sentences", s.sentences},
          {"tokens", s.tokens},
          {"mean_length", s.mean_length ? json(*s.mean_length) : json(nullptr)},
          {"min_length", s.min_length},
          {"max_length", s.max_length},
          {"length_percentiles", pct}};
}

json ToJson(const DistributionTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back({{"label", r.label}, {"shares", r.shares}});
  return {{"corpora", t.corpora}, {"rows", rows}};
}

}  // namespace hlparse::cli
