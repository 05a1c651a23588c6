#include "hlparse/eval.h"

#include <cmath>

#include "hlparse/errors.h"

namespace hlparse {

namespace {

double Percent(int num, int den) { return den == 0 ? 0.0 : 100.0 * num / den; }

double HarmonicMean(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

}  // namespace

EvalReport Score(const Treebank& pred, const Treebank& gold, const ScoreOptions& options) {
  if (pred.size() != gold.size())
    throw MismatchError("sentence count differs: predicted " + std::to_string(pred.size()) +
                            ", gold " + std::to_string(gold.size()),
                        std::min(pred.size(), gold.size()) + 1);
  EvalReport r;
  r.punct_excluded = options.exclude_punct;
  r.coarse_labels = options.coarse_labels;
  r.sentence_count = gold.size();
  int uem = 0, lem = 0;

  for (int s = 0; s < gold.size(); ++s) {
    const DepTree& g = gold.trees[s];
    const DepTree& p = pred.trees[s];
    bool same = g.size() == p.size();
    for (int i = 1; same && i <= g.size(); ++i) same = g.token(i).form == p.token(i).form;
    if (!same) {
      std::string id = g.sent_id().value_or("#" + std::to_string(s + 1));
      throw MismatchError("tokens differ in sentence " + std::to_string(s + 1) + " (" + id + ")",
                          s + 1);
    }
    bool all_head = true, all_labeled = true;
    for (int i = 1; i <= g.size(); ++i) {
      const Token& gt = g.token(i);
      const Token& pt = p.token(i);
      if (options.exclude_punct && gt.upos == "PUNCT") continue;
      std::string gl(options.coarse_labels ? CoarseLabel(gt.deprel) : gt.deprel);
      std::string pl(options.coarse_labels ? CoarseLabel(pt.deprel) : pt.deprel);
      bool head_ok = gt.head == pt.head;
      bool labeled_ok = head_ok && gl == pl;
      ++r.token_count;
      r.head_correct += head_ok;
      r.labeled_correct += labeled_ok;
      all_head &= head_ok;
      all_labeled &= labeled_ok;
      ++r.per_relation[gl].gold_support;
      ++r.per_relation[pl].predicted_count;
      if (labeled_ok) ++r.per_relation[gl].correct;
    }
    uem += all_head;
    lem += all_labeled;
  }

  r.uas = Percent(r.head_correct, r.token_count);
  r.las = Percent(r.labeled_correct, r.token_count);
  r.uem = Percent(uem, r.sentence_count);
  r.lem = Percent(lem, r.sentence_count);
  for (auto& [label, rs] : r.per_relation) {
    rs.precision = Percent(rs.correct, rs.predicted_count);
    rs.recall = Percent(rs.correct, rs.gold_support);
    rs.f1 = HarmonicMean(rs.precision, rs.recall);
  }
  return r;
}

ErrorReduction RelativeErrorReduction(double base_f1, double improved_f1) {
  ErrorReduction e;
  e.base_f1 = base_f1;
  e.improved_f1 = improved_f1;
  double base_err = 1.0 - base_f1;
  double improved_err = 1.0 - improved_f1;
  if (base_err <= 0) {
    e.defined = improved_err <= 0;
    e.percent = 0;
    return e;
  }
  e.percent = 100.0 * (base_err - improved_err) / base_err;
  return e;
}

std::map<std::string, ErrorReduction> RelativeErrorReduction(const EvalReport& base,
                                                             const EvalReport& improved) {
  std::map<std::string, ErrorReduction> out;
  auto f1_of = [](const EvalReport& r, const std::string& label) {
    auto it = r.per_relation.find(label);
    return it == r.per_relation.end() ? 0.0 : it->second.f1 / 100.0;
  };
  for (const auto& [label, _] : base.per_relation)
    out[label] = RelativeErrorReduction(f1_of(base, label), f1_of(improved, label));
  for (const auto& [label, _] : improved.per_relation)
    if (!out.contains(label))
      out[label] = RelativeErrorReduction(f1_of(base, label), f1_of(improved, label));
  return out;
}

double NormalSurvival(double x) {
  if (x < 0) return 1.0 - NormalSurvival(-x);
  constexpr double kP = 0.2316419;
  constexpr double kB[] = {0.319381530, -0.356563782, 1.781477937, -1.821255978,
                           1.330274429};
  constexpr double kInvSqrt2Pi = 0.39894228040143267794;
  const double t = 1.0 / (1.0 + kP * x);
  double poly = 0;
  for (int i = 4; i >= 0; --i) poly = (poly + kB[i]) * t;
  return kInvSqrt2Pi * std::exp(-0.5 * x * x) * poly;
}

ProportionTest TwoProportionTest(int successes_a, int n_a, int successes_b, int n_b) {
  if (n_a < 1 || n_b < 1 || successes_a < 0 || successes_b < 0 || successes_a > n_a ||
      successes_b > n_b)
    throw ContractError("two_proportion_test: counts out of range");
  ProportionTest t;
  const double pa = static_cast<double>(successes_a) / n_a;
  const double pb = static_cast<double>(successes_b) / n_b;
  const double pooled = static_cast<double>(successes_a + successes_b) / (n_a + n_b);
  if (pooled <= 0 || pooled >= 1) {
    t.degenerate = true;
    return t;
  }
  const double se = std::sqrt(pooled * (1 - pooled) * (1.0 / n_a + 1.0 / n_b));
  t.z = (pa - pb) / se;
  t.p_value = std::min(1.0, 2.0 * NormalSurvival(std::fabs(t.z)));
  return t;
}

Kappa CohenKappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b) {
  if (labels_a.empty() || labels_a.size() != labels_b.size())
    throw ContractError("cohen_kappa: label sequences must be non-empty and equal length");
  const double n = static_cast<double>(labels_a.size());
  std::map<std::string, int> ma, mb;
  int agree = 0;
  for (size_t i = 0; i < labels_a.size(); ++i) {
    ++ma[labels_a[i]];
    ++mb[labels_b[i]];
    agree += labels_a[i] == labels_b[i];
  }
  Kappa k;
  k.observed = agree / n;
  for (const auto& [label, ca] : ma) {
    auto it = mb.find(label);
    if (it != mb.end()) k.expected += (ca / n) * (it->second / n);
  }
  if (k.expected >= 1.0) {
    k.defined = k.observed >= 1.0;
    k.kappa = k.defined ? 1.0 : 0.0;
    return k;
  }
  k.kappa = (k.observed - k.expected) / (1.0 - k.expected);
  return k;
}

}  // namespace hlparse
