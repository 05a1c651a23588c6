#include "hlparse/conllu.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hlparse/errors.h"

namespace hlparse {

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadId: return "bad-id";
    case ViolationKind::kHeadOutOfRange: return "head-out-of-range";
    case ViolationKind::kSelfLoop: return "self-loop";
    case ViolationKind::kEmptyField: return "empty-field";
    case ViolationKind::kNoRoot: return "no-root";
    case ViolationKind::kMultipleRoots: return "multiple-roots";
    case ViolationKind::kCycle: return "cycle";
  }
  return "unknown";
}

std::vector<Violation> ValidateHeads(std::span<const int> heads) {
  std::vector<Violation> out;
  const int n = static_cast<int>(heads.size());
  bool structural_ok = true;
  int roots = 0;
  for (int id = 1; id <= n; ++id) {
    int h = heads[id - 1];
    if (h < 0 || h > n) {
      out.push_back({ViolationKind::kHeadOutOfRange, id});
      structural_ok = false;
    } else if (h == id) {
      out.push_back({ViolationKind::kSelfLoop, id});
      structural_ok = false;
    } else if (h == 0) {
      if (++roots > 1) out.push_back({ViolationKind::kMultipleRoots, id});
    }
  }
  if (n > 0 && roots == 0) out.push_back({ViolationKind::kNoRoot, 0});
  if (!structural_ok) return out;

  // Walk up from every node; states: 0 unseen, 1 on current path, 2 done.
  std::vector<int> state(n + 1, 0);
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = heads[cur - 1];
    }
    if (state[cur] == 1) {
      // cur closes a new cycle; report its smallest member.
      int smallest = cur;
      for (int v = heads[cur - 1]; v != cur; v = heads[v - 1])
        smallest = std::min(smallest, v);
      out.push_back({ViolationKind::kCycle, smallest});
    }
    for (int v : path) state[v] = 2;
  }
  return out;
}

std::vector<Violation> Validate(const DepTree& tree) {
  std::vector<Violation> out;
  const auto& toks = tree.tokens();
  for (int i = 0; i < static_cast<int>(toks.size()); ++i) {
    if (toks[i].id != i + 1) out.push_back({ViolationKind::kBadId, toks[i].id});
    if (toks[i].upos.empty() || toks[i].deprel.empty())
      out.push_back({ViolationKind::kEmptyField, i + 1});
  }
  auto hv = ValidateHeads(tree.heads());
  out.insert(out.end(), hv.begin(), hv.end());
  return out;
}

bool IsProjective(std::span<const int> heads) {
  const int n = static_cast<int>(heads.size());
  // Arc (h,d) is projective iff every token strictly between them is
  // dominated by h. Walking up is enough for short sentences.
  for (int d = 1; d <= n; ++d) {
    int h = heads[d - 1];
    int lo = std::min(h, d), hi = std::max(h, d);
    for (int k = lo + 1; k < hi; ++k) {
      int cur = k;
      while (cur != 0 && cur != h) cur = heads[cur - 1];
      if (cur != h) return false;
    }
  }
  return true;
}

namespace {

std::string DescribeViolations(const std::vector<Violation>& vs) {
  std::string s;
  for (const auto& v : vs) {
    if (!s.empty()) s += ", ";
    s += ViolationName(v.kind);
    s += "@" + std::to_string(v.token_id);
  }
  return s;
}

std::optional<std::string> SentIdOf(const std::vector<std::string>& comments) {
  for (const auto& c : comments) {
    std::string_view v(c);
    if (!v.starts_with("#")) continue;
    v.remove_prefix(1);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    if (!v.starts_with("sent_id")) continue;
    v.remove_prefix(7);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    if (!v.starts_with("=")) continue;
    v.remove_prefix(1);
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    return std::string(v);
  }
  return std::nullopt;
}

}  // namespace

DepTree DepTree::Validated(std::vector<Token> tokens,
                           std::vector<std::string> comments) {
  DepTree t(std::move(tokens), std::move(comments), false);
  auto vs = Validate(t);
  if (t.empty()) vs.push_back({ViolationKind::kNoRoot, 0});
  if (!vs.empty()) {
    throw ValidationError("invalid tree" +
                          (t.sent_id() ? " " + *t.sent_id() : std::string()) +
                          ": " + DescribeViolations(vs));
  }
  t.validated_ = true;
  return t;
}

DepTree DepTree::Unchecked(std::vector<Token> tokens,
                           std::vector<std::string> comments) {
  return DepTree(std::move(tokens), std::move(comments), false);
}

std::optional<std::string> DepTree::sent_id() const {
  return SentIdOf(comments_);
}

std::vector<int> DepTree::heads() const {
  std::vector<int> h;
  h.reserve(tokens_.size());
  for (const auto& t : tokens_) h.push_back(t.head);
  return h;
}

std::vector<std::string> DepTree::forms() const {
  std::vector<std::string> f;
  f.reserve(tokens_.size());
  for (const auto& t : tokens_) f.push_back(t.form);
  return f;
}

std::vector<std::vector<int>> DepTree::children() const {
  std::vector<std::vector<int>> ch(tokens_.size() + 1);
  for (int id = 1; id <= size(); ++id) {
    int h = tokens_[id - 1].head;
    if (h >= 0 && h <= size()) ch[h].push_back(id);
  }
  return ch;
}

int Treebank::token_count() const {
  int n = 0;
  for (const auto& t : trees) n += t.size();
  return n;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string_view CoarseLabel(std::string_view label) {
  auto colon = label.find(':');
  return colon == std::string_view::npos ? label : label.substr(0, colon);
}

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> ParseInt(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class SentenceBuilder {
 public:
  SentenceBuilder(const ReadOptions& options, ReadResult& result)
      : options_(options), result_(result) {}

  void Comment(std::string line) { comments_.push_back(std::move(line)); }

  void TokenLine(std::string_view line, int line_no) {
    if (bad_) return;
    auto cols = SplitTabs(line);
    if (cols.size() != 10) {
      Fail("expected 10 tab-separated columns, found " +
               std::to_string(cols.size()),
           line_no);
      return;
    }
    if (cols[0].find('-') != std::string_view::npos) {
      ++result_.skipped_multiword;
      return;
    }
    if (cols[0].find('.') != std::string_view::npos) {
      ++result_.skipped_empty_nodes;
      return;
    }
    auto id = ParseInt(cols[0]);
    if (!id) {
      Fail("non-integer id '" + std::string(cols[0]) + "'", line_no);
      return;
    }
    auto head = ParseInt(cols[6]);
    if (!head) {
      Fail("non-integer head '" + std::string(cols[6]) + "'", line_no);
      return;
    }
    Token t;
    t.id = *id;
    t.form = cols[1];
    t.lemma = cols[2];
    t.upos = cols[3];
    t.xpos = cols[4];
    t.feats = cols[5];
    t.head = *head;
    t.deprel = cols[7];
    t.deps = cols[8];
    t.misc = cols[9];
    tokens_.push_back(std::move(t));
  }

  void Finish() {
    if (!bad_ && !tokens_.empty()) {
      try {
        result_.treebank.trees.push_back(
            DepTree::Validated(std::move(tokens_), std::move(comments_)));
      } catch (const ValidationError& e) {
        if (options_.strict) throw;
        ++result_.skipped_sentences;
        result_.diagnostics.push_back(e.what());
      }
    } else if (bad_) {
      ++result_.skipped_sentences;
    }
    tokens_.clear();
    comments_.clear();
    bad_ = false;
  }

 private:
  void Fail(const std::string& what, int line_no) {
    if (options_.strict) throw ParseError(what, line_no);
    result_.diagnostics.push_back("line " + std::to_string(line_no) + ": " + what);
    bad_ = true;
  }

  const ReadOptions& options_;
  ReadResult& result_;
  std::vector<Token> tokens_;
  std::vector<std::string> comments_;
  bool bad_ = false;
};

}  // namespace

ReadResult ReadConllu(std::istream& in, const ReadOptions& options) {
  ReadResult result;
  SentenceBuilder builder(options, result);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      builder.Finish();
    } else if (line[0] == '#') {
      builder.Comment(line);
    } else {
      builder.TokenLine(line, line_no);
    }
  }
  builder.Finish();
  return result;
}

ReadResult ReadConlluString(std::string_view text, const ReadOptions& options) {
  std::istringstream in{std::string(text)};
  return ReadConllu(in, options);
}

ReadResult ReadConlluFile(const std::string& path, const ReadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto r = ReadConllu(in, options);
  r.treebank.source_name = path;
  return r;
}

void WriteConllu(const Treebank& treebank, std::ostream& out) {
  for (size_t i = 0; i < treebank.trees.size(); ++i) {
    const DepTree& tree = treebank.trees[i];
    if (!tree.validated())
      throw ContractError("write_conllu: tree " + std::to_string(i + 1) +
                          " is not validated");
    for (const auto& c : tree.comments()) out << c << '\n';
    for (const auto& t : tree.tokens()) {
      auto col = [](const std::string& s) -> const std::string& {
        static const std::string kEmpty = "_";
        return s.empty() ? kEmpty : s;
      };
      out << t.id << '\t' << col(t.form) << '\t' << col(t.lemma) << '\t'
          << col(t.upos) << '\t' << col(t.xpos) << '\t' << col(t.feats) << '\t'
          << t.head << '\t' << col(t.deprel) << '\t' << col(t.deps) << '\t'
          << col(t.misc) << '\n';
    }
    out << '\n';
  }
}

std::string WriteConlluString(const Treebank& treebank) {
  std::ostringstream out;
  WriteConllu(treebank, out);
  return out.str();
}

void WriteConlluFile(const Treebank& treebank, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WriteConllu(treebank, out);
}

}  // namespace hlparse
