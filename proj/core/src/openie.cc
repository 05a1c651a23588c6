#include "hlparse/openie.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "hlparse/errors.h"

namespace hlparse {

namespace {

bool IsSubjectRel(std::string_view rel) {
  return rel == "nsubj" || rel == "nsubj:pass" || rel == "csubj";
}

bool IsPredicateModifier(const Token& t) {
  const std::string& rel = t.deprel;
  if (rel == "aux" || rel == "aux:pass" || rel == "cop" || rel == "mark" ||
      rel == "compound:prt")
    return true;
  if (CoarseLabel(rel) == "advmod") {
    const std::string w = AsciiLower(t.form);
    return w == "not" || w == "n't" || w == "never" || w == "no";
  }
  return false;
}

bool IsArgumentRel(std::string_view rel) {
  std::string_view coarse = CoarseLabel(rel);
  return coarse == "nsubj" || coarse == "obl" || rel == "obj" || rel == "iobj" ||
         rel == "ccomp" || rel == "xcomp";
}

std::string TextOf(const DepTree& tree, const std::vector<int>& ids) {
  std::string s;
  for (int id : ids) {
    if (!s.empty()) s += ' ';
    s += tree.token(id).form;
  }
  return s;
}

void CollectYield(const std::vector<std::vector<int>>& children, int node, std::vector<int>& out) {
  out.push_back(node);
  for (int c : children[node]) CollectYield(children, c, out);
}

}  // namespace

std::vector<ExtractionTuple> Extract(const DepTree& tree, const std::string& sent_id) {
  const auto children = tree.children();
  const std::string sid = sent_id.empty() ? tree.sent_id().value_or("") : sent_id;
  std::vector<ExtractionTuple> out;
  for (int h = 1; h <= tree.size(); ++h) {
    bool is_pred = tree.token(h).upos == "VERB";
    for (int c : children[h]) is_pred |= IsSubjectRel(tree.token(c).deprel);
    if (!is_pred) continue;

    ExtractionTuple t;
    t.sent_id = sid;
    t.head = h;
    t.predicate.push_back(h);
    for (int c : children[h]) {
      const Token& ct = tree.token(c);
      if (IsPredicateModifier(ct)) {
        t.predicate.push_back(c);
      } else if (IsArgumentRel(ct.deprel)) {
        Argument a;
        a.rel = ct.deprel;
        CollectYield(children, c, a.indices);
        std::sort(a.indices.begin(), a.indices.end());
        a.text = TextOf(tree, a.indices);
        t.arguments.push_back(std::move(a));
      }
    }
    std::sort(t.predicate.begin(), t.predicate.end());
    t.predicate_text = TextOf(tree, t.predicate);
    std::sort(t.arguments.begin(), t.arguments.end(),
              [](const Argument& x, const Argument& y) { return x.indices < y.indices; });
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<ExtractionTuple>> ExtractAll(const Treebank& tb) {
  std::vector<std::vector<ExtractionTuple>> out;
  out.reserve(tb.trees.size());
  for (const auto& t : tb.trees) out.push_back(Extract(t));
  return out;
}

namespace {

using ArgKey = std::pair<std::string, std::vector<int>>;
using TupleKey = std::pair<std::vector<int>, std::vector<ArgKey>>;

TupleKey KeyOf(const ExtractionTuple& t) {
  TupleKey k;
  k.first = t.predicate;
  for (const auto& a : t.arguments) k.second.emplace_back(a.rel, a.indices);
  std::sort(k.second.begin(), k.second.end());
  return k;
}

std::vector<ExtractionTuple> Missing(const std::vector<ExtractionTuple>& from,
                                     const std::set<TupleKey>& in) {
  std::vector<ExtractionTuple> out;
  for (const auto& t : from)
    if (!in.contains(KeyOf(t))) out.push_back(t);
  return out;
}

}  // namespace

std::vector<ExtractionDiff> DiffExtractions(std::span<const std::vector<ExtractionTuple>> a,
                                            std::span<const std::vector<ExtractionTuple>> b) {
  if (a.size() != b.size())
    throw ContractError("diff_extractions: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + " sentences");
  std::vector<ExtractionDiff> out;
  for (size_t i = 0; i < a.size(); ++i) {
    std::set<TupleKey> ka, kb;
    for (const auto& t : a[i]) ka.insert(KeyOf(t));
    for (const auto& t : b[i]) kb.insert(KeyOf(t));
    if (ka == kb) continue;
    ExtractionDiff d;
    d.sentence_index = static_cast<int>(i);
    if (!a[i].empty()) d.sent_id = a[i].front().sent_id;
    else if (!b[i].empty()) d.sent_id = b[i].front().sent_id;
    d.only_a = Missing(a[i], kb);
    d.only_b = Missing(b[i], ka);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace hlparse
