#ifndef HLPARSE_SYNTH_SYNTH_H_
#define HLPARSE_SYNTH_SYNTH_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse::synth {

// Seeded toy grammar for desk-scale experiments when no treebanks are at
// hand. Full sentences follow web-text conventions (determiners, auxiliaries,
// copulas, final punctuation). Headlines drop those and use headline forms:
// "Man arrested in Boston", "Police to arrest man", "Economy weak".

// One news item: a lead sentence, its headline tokens, and a gold tree for
// the headline. aligned is true when the headline is a subsequence of the
// lead (some headlines change the verb's tense and cannot align).
struct NewsItem {
  DepTree lead;
  std::vector<std::string> headline;
  DepTree headline_gold;
  bool aligned = false;
};

// Full-sentence treebank in the style of a general-domain gold corpus.
Treebank GoldCorpus(int size, std::uint64_t seed);

NewsItem NewsPair(std::mt19937_64& rng);
std::vector<NewsItem> NewsCorpus(int size, std::uint64_t seed);

// News items until `aligned` of them are alignable; the unaligned items
// generated along the way are kept so the pair file has realistic drops.
std::vector<NewsItem> NewsCorpusWithAligned(int aligned, std::uint64_t seed);

}  // namespace hlparse::synth

#endif  // HLPARSE_SYNTH_SYNTH_H_
