#include "hlparse/ensemble.h"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "hlparse/errors.h"
#include "hlparse/parallel.h"

namespace hlparse {

VoteGraph BuildVotes(std::span<const DepTree> trees, std::span<const double> voter_weights) {
  if (trees.empty()) throw ContractError("build_votes: need at least one tree");
  if (!voter_weights.empty() && voter_weights.size() != trees.size())
    throw ContractError("build_votes: " + std::to_string(voter_weights.size()) +
                        " weights for " + std::to_string(trees.size()) + " voters");
  VoteGraph g;
  g.n = trees.front().size();
  g.voters = static_cast<int>(trees.size());
  g.weights.assign((g.n + 1) * (g.n + 1), 0.0);
  const auto forms = trees.front().forms();
  for (size_t k = 0; k < trees.size(); ++k) {
    const DepTree& t = trees[k];
    if (t.forms() != forms)
      throw ContractError("build_votes: voter " + std::to_string(k + 1) +
                          " has a different token sequence");
    const double w = voter_weights.empty() ? 1.0 : voter_weights[k];
    if (w < 0) throw ContractError("build_votes: negative voter weight");
    for (int d = 1; d <= g.n; ++d) {
      const int h = t.head(d);
      if (h < 0 || h > g.n || h == d)
        throw ContractError("build_votes: voter " + std::to_string(k + 1) + " has a bad head");
      g.weights[h * (g.n + 1) + d] += w;
      g.labels[{h, d}].emplace_back(t.token(d).deprel, w);
    }
  }
  return g;
}

namespace {

// Arc score with a deterministic secondary key; compared lexicographically.
struct Score {
  double w = 0;
  long long tie = 0;

  Score operator+(const Score& o) const { return {w + o.w, tie + o.tie}; }
  Score operator-(const Score& o) const { return {w - o.w, tie - o.tie}; }
  bool operator<(const Score& o) const { return w != o.w ? w < o.w : tie < o.tie; }
};

using Matrix = std::vector<std::vector<std::optional<Score>>>;

// Chu-Liu/Edmonds on nodes 0..N-1 rooted at 0. Returns best-head vector
// indexed by node (entry 0 unused) or empty when a node has no incoming arc.
std::vector<int> ChuLiuEdmonds(const Matrix& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> best(n, -1);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v || !s[u][v]) continue;
      if (best[v] < 0 || *s[best[v]][v] < *s[u][v]) best[v] = u;
    }
    if (best[v] < 0) return {};
  }

  // Look for a cycle among the greedy choices.
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 finished
  color[0] = 2;
  std::vector<int> cycle;
  for (int start = 1; start < n && cycle.empty(); ++start) {
    std::vector<int> path;
    int v = start;
    while (color[v] == 0) {
      color[v] = 1;
      path.push_back(v);
      v = best[v];
    }
    if (color[v] == 1) {
      for (int u = v;; u = best[u]) {
        cycle.push_back(u);
        if (best[u] == v) break;
      }
    }
    for (int u : path) color[u] = 2;
  }
  if (cycle.empty()) return best;

  std::vector<char> in_cycle(n, 0);
  for (int v : cycle) in_cycle[v] = 1;
  std::vector<int> to_new(n, -1), to_old;
  for (int v = 0; v < n; ++v) {
    if (in_cycle[v]) continue;
    to_new[v] = static_cast<int>(to_old.size());
    to_old.push_back(v);
  }
  const int c = static_cast<int>(to_old.size());
  const int m = c + 1;
  Matrix t(m, std::vector<std::optional<Score>>(m));
  std::vector<int> enter_at(m, -1);  // cycle node entered from outside node
  std::vector<int> leave_from(m, -1);  // cycle node an outgoing arc starts at
  for (int u = 0; u < n; ++u) {
    for (int v = 1; v < n; ++v) {
      if (u == v || !s[u][v]) continue;
      if (!in_cycle[u] && !in_cycle[v]) {
        t[to_new[u]][to_new[v]] = s[u][v];
      } else if (!in_cycle[u] && in_cycle[v]) {
        Score cand = *s[u][v] - *s[best[v]][v];
        auto& cell = t[to_new[u]][c];
        if (!cell || *cell < cand) {
          cell = cand;
          enter_at[to_new[u]] = v;
        }
      } else if (in_cycle[u] && !in_cycle[v]) {
        auto& cell = t[c][to_new[v]];
        if (!cell || *cell < *s[u][v]) {
          cell = s[u][v];
          leave_from[to_new[v]] = u;
        }
      }
    }
  }

  std::vector<int> sub = ChuLiuEdmonds(t);
  if (sub.empty()) return {};
  std::vector<int> heads(n, -1);
  for (int v = 1; v < n; ++v) {
    if (in_cycle[v]) {
      heads[v] = best[v];
      continue;
    }
    const int h = sub[to_new[v]];
    heads[v] = h == c ? leave_from[to_new[v]] : to_old[h];
  }
  const int entry_src = sub[c];
  heads[enter_at[entry_src]] = to_old[entry_src];
  return heads;
}

}  // namespace

std::vector<int> MaxArborescence(int n, const std::function<double(int, int)>& score,
                                 const std::function<bool(int, int)>& allowed) {
  if (n == 0) return {};
  Matrix s(n + 1, std::vector<std::optional<Score>>(n + 1));
  for (int h = 0; h <= n; ++h) {
    for (int d = 1; d <= n; ++d) {
      if (h == d || (allowed && !allowed(h, d))) continue;
      const long long key = static_cast<long long>(h) * (n + 1) + std::abs(h - d);
      s[h][d] = Score{score(h, d), -key};
    }
  }
  auto heads = ChuLiuEdmonds(s);
  if (heads.empty()) return {};
  heads.erase(heads.begin());
  return heads;
}

double TreeWeight(const VoteGraph& votes, std::span<const int> heads) {
  double total = 0;
  for (int d = 1; d <= static_cast<int>(heads.size()); ++d) total += votes.weight(heads[d - 1], d);
  return total;
}

namespace {

std::string Plurality(const std::vector<std::pair<std::string, double>>& proposals) {
  std::map<std::string, double> tally;
  for (const auto& [label, w] : proposals) tally[label] += w;
  std::string best;
  double best_w = -1;
  for (const auto& [label, w] : tally) {  // map order: smallest label wins ties
    if (w > best_w) {
      best = label;
      best_w = w;
    }
  }
  return best;
}

// Arc-level tie key of a whole tree, lower is preferred.
long long TieKey(std::span<const int> heads) {
  const long long n = static_cast<long long>(heads.size());
  long long key = 0;
  for (int d = 1; d <= n; ++d) key += heads[d - 1] * (n + 1) + std::abs(heads[d - 1] - d);
  return key;
}

}  // namespace

Reparse ReparseVotes(const VoteGraph& votes, const ReparseOptions& options) {
  Reparse r;
  const int n = votes.n;
  if (n == 0) return r;
  auto score = [&votes](int h, int d) { return votes.weight(h, d); };
  if (!options.force_single_root) {
    r.heads = MaxArborescence(n, score);
  } else {
    double best_w = 0;
    long long best_key = 0;
    for (int root = 1; root <= n; ++root) {
      auto heads = MaxArborescence(n, score, [root](int h, int d) { return h != 0 || d == root; });
      if (heads.empty()) continue;
      const double w = TreeWeight(votes, heads);
      const long long key = TieKey(heads);
      if (r.heads.empty() || w > best_w || (w == best_w && key < best_key)) {
        r.heads = std::move(heads);
        best_w = w;
        best_key = key;
      }
    }
  }
  r.total_weight = TreeWeight(votes, r.heads);
  r.labels.resize(n);
  for (int d = 1; d <= n; ++d) {
    auto it = votes.labels.find({r.heads[d - 1], d});
    if (it != votes.labels.end()) {
      r.labels[d - 1] = Plurality(it->second);
      continue;
    }
    // Unvoted arc: fall back to what the voters said about this dependent.
    std::vector<std::pair<std::string, double>> all;
    for (int h = 0; h <= n; ++h) {
      auto jt = votes.labels.find({h, d});
      if (jt != votes.labels.end()) all.insert(all.end(), jt->second.begin(), jt->second.end());
    }
    r.labels[d - 1] = Plurality(all);
  }
  return r;
}

DepTree EnsembleTrees(std::span<const DepTree> trees, const ReparseOptions& options,
                      std::span<const double> voter_weights) {
  VoteGraph votes = BuildVotes(trees, voter_weights);
  Reparse r = ReparseVotes(votes, options);
  if (std::count(r.heads.begin(), r.heads.end(), 0) > 1)
    r = ReparseVotes(votes, {.force_single_root = true});
  std::vector<Token> tokens = trees.front().tokens();
  for (int d = 1; d <= votes.n; ++d) {
    tokens[d - 1].head = r.heads[d - 1];
    tokens[d - 1].deprel = r.labels[d - 1];
  }
  return DepTree::Validated(std::move(tokens), trees.front().comments());
}

Treebank EnsembleTreebanks(std::span<const Treebank> treebanks, const ReparseOptions& options,
                           std::span<const double> voter_weights, int jobs) {
  if (treebanks.empty()) throw ContractError("ensemble: need at least one treebank");
  const int sentences = treebanks.front().size();
  for (const auto& tb : treebanks)
    if (tb.size() != sentences)
      throw ContractError("ensemble: treebanks differ in sentence count (" +
                          std::to_string(tb.size()) + " vs " + std::to_string(sentences) + ")");
  std::vector<DepTree> out(sentences);
  ParallelFor(sentences, jobs, [&](int s) {
    std::vector<DepTree> voters;
    voters.reserve(treebanks.size());
    for (const auto& tb : treebanks) voters.push_back(tb.trees[s]);
    try {
      out[s] = EnsembleTrees(voters, options, voter_weights);
    } catch (const ContractError& e) {
      throw ContractError("sentence " + std::to_string(s + 1) + ": " + e.what());
    }
  });
  Treebank tb;
  tb.trees = std::move(out);
  tb.source_name = "ensemble";
  return tb;
}

}  // namespace hlparse
