#ifndef HLPARSE_ALIGN_H_
#define HLPARSE_ALIGN_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse {

// Injective, order-preserving embedding of headline positions into
// sentence positions. Both indices are 1-based.
struct AlignedPair {
  int headline_index;
  int sentence_index;
  friend bool operator==(const AlignedPair&, const AlignedPair&) = default;
};

struct Alignment {
  std::vector<AlignedPair> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  // Sentence indices in headline order (ascending by construction).
  std::vector<int> sentence_indices() const;
  // True when headline indices are 1..n and sentence indices strictly
  // increase and stay within [1, sentence_length].
  bool IsValidFor(int sentence_length) const;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

// Greedy leftmost embedding: each headline token takes the earliest
// unconsumed sentence token with the same form. Forms compare ASCII
// case-folded unless case_sensitive. nullopt when the headline is not a
// subsequence of the sentence.
std::optional<Alignment> AlignSubsequence(std::span<const std::string> headline,
                                          std::span<const std::string> sentence,
                                          bool case_sensitive = false);

// A headline paired with the dependency tree of its lead sentence.
struct HeadlinePair {
  std::vector<std::string> headline;
  DepTree sentence;
};

struct AlignedHeadlinePair {
  Alignment alignment;
  DepTree sentence;
  int source_index;  // position in the input sequence
};

struct FilterResult {
  std::vector<AlignedHeadlinePair> kept;
  int kept_count = 0;
  int dropped_count = 0;
};

FilterResult FilterPairs(std::span<const HeadlinePair> pairs,
                         bool case_sensitive = false);

}  // namespace hlparse

#endif  // HLPARSE_ALIGN_H_
