#include "hlparse/align.h"

namespace hlparse {

std::vector<int> Alignment::sentence_indices() const {
  std::vector<int> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.sentence_index);
  return out;
}

bool Alignment::IsValidFor(int sentence_length) const {
  int prev = 0;
  for (int i = 0; i < size(); ++i) {
    const auto& p = pairs[i];
    if (p.headline_index != i + 1) return false;
    if (p.sentence_index <= prev || p.sentence_index > sentence_length) return false;
    prev = p.sentence_index;
  }
  return true;
}

std::optional<Alignment> AlignSubsequence(std::span<const std::string> headline,
                                          std::span<const std::string> sentence,
                                          bool case_sensitive) {
  if (headline.empty() || sentence.empty()) return std::nullopt;
  auto norm = [case_sensitive](const std::string& s) {
    return case_sensitive ? s : AsciiLower(s);
  };
  Alignment a;
  a.pairs.reserve(headline.size());
  size_t j = 0;
  for (size_t i = 0; i < headline.size(); ++i) {
    const std::string want = norm(headline[i]);
    while (j < sentence.size() && norm(sentence[j]) != want) ++j;
    if (j == sentence.size()) return std::nullopt;
    a.pairs.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    ++j;
  }
  return a;
}

FilterResult FilterPairs(std::span<const HeadlinePair> pairs, bool case_sensitive) {
  FilterResult r;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto forms = pairs[i].sentence.forms();
    auto a = AlignSubsequence(pairs[i].headline, forms, case_sensitive);
    if (!a) {
      ++r.dropped_count;
      continue;
    }
    ++r.kept_count;
    r.kept.push_back({std::move(*a), pairs[i].sentence, static_cast<int>(i)});
  }
  return r;
}

}  // namespace hlparse
