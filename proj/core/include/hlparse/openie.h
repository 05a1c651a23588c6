#ifndef HLPARSE_OPENIE_H_
#define HLPARSE_OPENIE_H_

#include <span>
#include <string>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse {

// Lightweight predicate-argument extraction over UD trees.
//
// Predicate heads are VERB tokens and any token that governs an nsubj,
// nsubj:pass or csubj dependent. The predicate phrase is the head plus its
// aux, aux:pass, cop, mark, compound:prt and negating advmod dependents.
// Arguments are the full subtree yields of nsubj*, obj, iobj, ccomp, xcomp
// and obl* dependents. Conjunction expansion, relative-clause argument
// borrowing and sub-predicates are not attempted.

struct Argument {
  std::string rel;
  std::vector<int> indices;  // 1-based, ascending
  std::string text;

  friend bool operator==(const Argument&, const Argument&) = default;
};

struct ExtractionTuple {
  std::string sent_id;
  int head = 0;
  std::vector<int> predicate;  // ascending, includes head
  std::string predicate_text;
  std::vector<Argument> arguments;  // ordered by first index

  friend bool operator==(const ExtractionTuple&, const ExtractionTuple&) = default;
};

// sent_id defaults to the tree's sent_id comment.
std::vector<ExtractionTuple> Extract(const DepTree& tree, const std::string& sent_id = "");

std::vector<std::vector<ExtractionTuple>> ExtractAll(const Treebank& tb);

struct ExtractionDiff {
  int sentence_index;  // 0-based
  std::string sent_id;
  std::vector<ExtractionTuple> only_a;
  std::vector<ExtractionTuple> only_b;
};

// Sentences whose tuple sets differ (compared on predicate indices and
// (rel, indices) arguments). Throws ContractError on length mismatch.
std::vector<ExtractionDiff> DiffExtractions(
    std::span<const std::vector<ExtractionTuple>> a,
    std::span<const std::vector<ExtractionTuple>> b);

}  // namespace hlparse

#endif  // HLPARSE_OPENIE_H_
