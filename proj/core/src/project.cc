#include "hlparse/project.h"

#include <algorithm>
#include <deque>

#include "hlparse/errors.h"
#include "hlparse/parallel.h"

namespace hlparse {

Subtree ExtractSubtree(const DepTree& sentence, std::span<const int> headline_nodes) {
  const int n = sentence.size();
  std::vector<char> in(n + 1, 0);
  in[0] = 1;
  for (int node : headline_nodes) {
    if (node < 1 || node > n)
      throw ContractError("extract_subtree: node " + std::to_string(node) +
                          " outside 1.." + std::to_string(n));
    for (int cur = node; cur != 0 && !in[cur]; cur = sentence.head(cur)) in[cur] = 1;
  }
  Subtree s;
  for (int v = 0; v <= n; ++v)
    if (in[v]) s.nodes.push_back(v);
  for (int d = 1; d <= n; ++d)
    if (in[d] && in[sentence.head(d)]) s.edges.emplace_back(sentence.head(d), d);
  return s;
}

namespace {

// Working state of one projection: heads and labels over sentence ids,
// restricted to the nodes still present.
class Collapser {
 public:
  Collapser(const DepTree& sentence, const std::vector<int>& keep)
      : n_(sentence.size()),
        heads_(sentence.heads()),
        labels_(n_),
        present_(n_ + 1, 0),
        keep_(n_ + 1, 0) {
    heads_.insert(heads_.begin(), -1);  // slot 0 is the virtual root
    for (int id = 1; id <= n_; ++id) labels_[id - 1] = sentence.token(id).deprel;
    labels_.insert(labels_.begin(), std::string());
    for (int v : keep) keep_[v] = 1;
    Subtree sub = ExtractSubtree(sentence, keep);
    for (int v : sub.nodes) present_[v] = 1;
    present_count_ = static_cast<int>(sub.nodes.size()) - 1;
    keep_count_ = static_cast<int>(keep.size());
  }

  bool Done() const { return present_count_ == keep_count_; }

  CollapseStep CollapseNext(CollapseOrder order) {
    auto children = Children();
    int victim = order == CollapseOrder::kReferenceDfs ? PickDfs(children)
                                                       : PickShallowest(children);
    const auto& kids = children[victim];
    if (kids.empty())
      throw std::logic_error("projection: collapsed node has no child");
    CollapseStep step;
    step.collapsed = victim;
    step.promoted = kids.front();
    step.parent = heads_[victim];
    step.label = labels_[victim];
    for (int c : kids) {
      if (c == step.promoted) continue;
      heads_[c] = step.promoted;
      step.reattached.push_back(c);
    }
    heads_[step.promoted] = step.parent;
    labels_[step.promoted] = step.label;
    present_[victim] = 0;
    --present_count_;
    return step;
  }

  int head(int id) const { return heads_[id]; }
  const std::string& label(int id) const { return labels_[id]; }

 private:
  // Dependents of each present node (0 included), ascending.
  std::vector<std::vector<int>> Children() const {
    std::vector<std::vector<int>> ch(n_ + 1);
    for (int v = 1; v <= n_; ++v)
      if (present_[v]) ch[heads_[v]].push_back(v);
    return ch;
  }

  int PickDfs(const std::vector<std::vector<int>>& children) const {
    std::vector<int> stack(children[0].begin(), children[0].end());
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (!keep_[cur]) return cur;
      stack.insert(stack.end(), children[cur].begin(), children[cur].end());
    }
    throw std::logic_error("projection: no node left to collapse");
  }

  int PickShallowest(const std::vector<std::vector<int>>& children) const {
    std::deque<int> queue(children[0].begin(), children[0].end());
    while (!queue.empty()) {
      // Each level is visited in ascending order, so the first extra node
      // found is the shallowest with the smallest index.
      int cur = queue.front();
      queue.pop_front();
      if (!keep_[cur]) return cur;
      queue.insert(queue.end(), children[cur].begin(), children[cur].end());
    }
    throw std::logic_error("projection: no node left to collapse");
  }

  int n_;
  std::vector<int> heads_;
  std::vector<std::string> labels_;
  std::vector<char> present_;
  std::vector<char> keep_;
  int present_count_ = 0;
  int keep_count_ = 0;
};

}  // namespace

ProjectionResult ProjectTree(const DepTree& sentence, const Alignment& alignment,
                             CollapseOrder order) {
  if (!sentence.validated())
    throw ContractError("project_tree: sentence tree is not validated");
  if (alignment.size() == 0 || !alignment.IsValidFor(sentence.size()))
    throw ContractError("project_tree: alignment does not fit a sentence of " +
                        std::to_string(sentence.size()) + " tokens");

  const std::vector<int> keep = alignment.sentence_indices();
  Collapser state(sentence, keep);
  ProjectionResult result;
  while (!state.Done()) {
    CollapseStep step = state.CollapseNext(order);
    if (std::find(result.promoted_ids.begin(), result.promoted_ids.end(),
                  step.promoted) == result.promoted_ids.end())
      result.promoted_ids.push_back(step.promoted);
    result.steps.push_back(std::move(step));
  }
  result.collapsed_count = static_cast<int>(result.steps.size());

  std::vector<int> new_id(sentence.size() + 1, 0);
  for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i) + 1;
  std::vector<Token> tokens;
  tokens.reserve(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    Token t = sentence.token(keep[i]);
    t.id = static_cast<int>(i) + 1;
    int h = state.head(keep[i]);
    t.head = h == 0 ? 0 : new_id[h];
    t.deprel = state.label(keep[i]);
    t.deps = "_";
    t.misc = "_";
    tokens.push_back(std::move(t));
  }
  result.tree = DepTree::Validated(std::move(tokens));
  return result;
}

std::string_view PairStatusName(PairStatus status) {
  switch (status) {
    case PairStatus::kProjected: return "projected";
    case PairStatus::kNoAlignment: return "no-alignment";
    case PairStatus::kError: return "error";
  }
  return "unknown";
}

namespace {

std::string JoinSpace(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s;
}

}  // namespace

SilverCorpus BuildSilverCorpus(std::span<const HeadlinePair> pairs,
                               const SilverOptions& options) {
  const int n = static_cast<int>(pairs.size());
  std::vector<PairOutcome> outcomes(n);
  std::vector<std::optional<DepTree>> trees(n);

  ParallelFor(n, options.jobs, [&](int i) {
    PairOutcome& out = outcomes[i];
    out.index = i;
    out.headline_length = static_cast<int>(pairs[i].headline.size());
    const DepTree& sentence = pairs[i].sentence;
    try {
      auto forms = sentence.forms();
      auto alignment = AlignSubsequence(pairs[i].headline, forms, options.case_sensitive);
      if (!alignment) {
        out.status = PairStatus::kNoAlignment;
        out.message = "headline is not a subsequence of the lead sentence";
        return;
      }
      ProjectionResult pr = ProjectTree(sentence, *alignment, options.order);
      out.collapsed_count = pr.collapsed_count;
      out.promoted_ids = pr.promoted_ids;
      out.projective = IsProjective(pr.tree);

      std::vector<std::string> comments;
      std::string id = "silver-" + std::to_string(i + 1);
      comments.push_back("# sent_id = " + id);
      if (auto src = sentence.sent_id()) comments.push_back("# source_sent_id = " + *src);
      comments.push_back("# text = " + JoinSpace(pairs[i].headline));
      trees[i] = DepTree::Validated(pr.tree.tokens(), std::move(comments));
    } catch (const std::exception& e) {
      out.status = PairStatus::kError;
      out.message = e.what();
    }
  });

  SilverCorpus corpus;
  SilverReport& report = corpus.report;
  report.total = n;
  for (int i = 0; i < n; ++i) {
    const PairOutcome& out = outcomes[i];
    switch (out.status) {
      case PairStatus::kProjected:
        ++report.kept;
        if (out.collapsed_count > 0) ++report.trees_with_collapse;
        report.total_collapsed += out.collapsed_count;
        if (!out.projective) ++report.non_projective;
        corpus.treebank.trees.push_back(std::move(*trees[i]));
        break;
      case PairStatus::kNoAlignment:
        ++report.dropped;
        break;
      case PairStatus::kError:
        ++report.errors;
        break;
    }
  }
  report.outcomes = std::move(outcomes);
  corpus.treebank.source_name = "silver";
  return corpus;
}

}  // namespace hlparse
