#ifndef HLPARSE_EVAL_H_
#define HLPARSE_EVAL_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse {

struct RelationScore {
  double precision = 0;  // percent
  double recall = 0;     // percent
  double f1 = 0;         // percent
  int gold_support = 0;
  int predicted_count = 0;
  int correct = 0;       // head and label both right
};

struct EvalReport {
  double uas = 0;  // all four in percent
  double las = 0;
  double uem = 0;
  double lem = 0;
  std::map<std::string, RelationScore> per_relation;
  int token_count = 0;     // tokens counted (after punctuation filtering)
  int sentence_count = 0;
  int head_correct = 0;
  int labeled_correct = 0;
  bool punct_excluded = false;
  bool coarse_labels = false;
};

struct ScoreOptions {
  // Drop tokens whose gold UPOS is PUNCT from every token-level count and
  // from the exact-match check.
  bool exclude_punct = false;
  // Compare labels with ":subtype" stripped.
  bool coarse_labels = false;
};

// Attachment and exact-match scores of pred against gold. Throws
// MismatchError naming the first sentence whose tokens differ.
EvalReport Score(const Treebank& pred, const Treebank& gold,
                 const ScoreOptions& options = {});

struct ErrorReduction {
  double percent = 0;
  bool defined = true;
  double base_f1 = 0;      // 0..1
  double improved_f1 = 0;  // 0..1
};

// Per-relation relative reduction of (1 - F1) going from base to improved.
// A relation perfect in base is 0 when still perfect, otherwise undefined.
std::map<std::string, ErrorReduction> RelativeErrorReduction(const EvalReport& base,
                                                             const EvalReport& improved);
// Same formula for one relation, F1 on a 0..1 scale.
ErrorReduction RelativeErrorReduction(double base_f1, double improved_f1);

// Upper tail of the standard normal, Q(x) = 1 - Phi(x). Rational
// approximation with absolute error below 7.5e-8 (Hastings, as tabulated
// in Abramowitz & Stegun 26.2.17).
double NormalSurvival(double x);

struct ProportionTest {
  double z = 0;
  double p_value = 1;  // two-sided
  bool degenerate = false;  // pooled proportion was 0 or 1
};

// Pooled two-population proportion z-test.
ProportionTest TwoProportionTest(int successes_a, int n_a, int successes_b, int n_b);

struct Kappa {
  double kappa = 0;
  bool defined = true;
  double observed = 0;  // p_o
  double expected = 0;  // p_e
};

// Cohen's kappa with empirical marginals. Throws ContractError on empty or
// unequal-length inputs.
Kappa CohenKappa(std::span<const std::string> labels_a,
                 std::span<const std::string> labels_b);

}  // namespace hlparse

#endif  // HLPARSE_EVAL_H_
