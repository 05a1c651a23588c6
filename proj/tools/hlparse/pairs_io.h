#ifndef HLPARSE_TOOLS_PAIRS_IO_H_
#define HLPARSE_TOOLS_PAIRS_IO_H_

#include <string>
#include <vector>

#include "hlparse/align.h"
#include "hlparse/conllu.h"

namespace hlparse::cli {

// One line of a pairs file: headline and lead sentence, tokens separated
// by single spaces, the two separated by a tab.
struct TsvPair {
  std::vector<std::string> headline;
  std::vector<std::string> lead;
  int line = 0;
};

// Skips blank lines and lines starting with '#'. Throws ParseError with
// the line number on a malformed line.
std::vector<TsvPair> ReadPairsTsv(const std::string& path);
void WritePairsTsv(const std::vector<TsvPair>& pairs, const std::string& path);

// Joins pair i with lead tree i. Throws MismatchError when the counts
// differ or a lead's tokens differ from the tree's forms.
std::vector<HeadlinePair> JoinPairs(const std::vector<TsvPair>& pairs, const Treebank& leads);

// CoNLL-U-backed pairs: the forms of headline tree i against lead tree i.
std::vector<HeadlinePair> JoinPairs(const Treebank& headlines, const Treebank& leads);

}  // namespace hlparse::cli

#endif  // HLPARSE_TOOLS_PAIRS_IO_H_
