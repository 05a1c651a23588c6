#include "pairs_io.h"

#include <fstream>
#include <sstream>

#include "hlparse/errors.h"

namespace hlparse::cli {

namespace {

std::vector<std::string> SplitSpaces(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string Join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

}  // namespace

std::vector<TsvPair> ReadPairsTsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<TsvPair> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw ParseError(path + ": expected two tab-separated columns", no);
    TsvPair p{SplitSpaces(line.substr(0, tab)), SplitSpaces(line.substr(tab + 1)), no};
    if (p.headline.empty() || p.lead.empty()) throw ParseError(path + ": empty column", no);
    out.push_back(std::move(p));
  }
  return out;
}

void WritePairsTsv(const std::vector<TsvPair>& pairs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& p : pairs) out << Join(p.headline) << '\t' << Join(p.lead) << '\n';
}

std::vector<HeadlinePair> JoinPairs(const std::vector<TsvPair>& pairs, const Treebank& leads) {
  if (static_cast<int>(pairs.size()) != leads.size())
    throw MismatchError(std::to_string(pairs.size()) + " pairs but " +
                            std::to_string(leads.size()) + " lead trees",
                        static_cast<int>(std::min<size_t>(pairs.size(), leads.size())) + 1);
  std::vector<HeadlinePair> out;
  out.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].lead != leads.trees[i].forms())
      throw MismatchError("pair on line " + std::to_string(pairs[i].line) +
                              " does not match lead tree " + std::to_string(i + 1),
                          static_cast<int>(i) + 1);
    out.push_back({pairs[i].headline, leads.trees[i]});
  }
  return out;
}

std::vector<HeadlinePair> JoinPairs(const Treebank& headlines, const Treebank& leads) {
  if (headlines.size() != leads.size())
    throw MismatchError(std::to_string(headlines.size()) + " headlines but " +
                            std::to_string(leads.size()) + " lead trees",
                        std::min(headlines.size(), leads.size()) + 1);
  std::vector<HeadlinePair> out;
  for (int i = 0; i < leads.size(); ++i) out.push_back({headlines.trees[i].forms(), leads.trees[i]});
  return out;
}

}  // namespace hlparse::cli
