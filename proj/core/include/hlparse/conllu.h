#ifndef HLPARSE_CONLLU_H_
#define HLPARSE_CONLLU_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hlparse {

// One word line of a CoNLL-U sentence. head is 0 for the virtual root.
// lemma, xpos, feats, deps and misc are carried through untouched.
struct Token {
  int id = 0;
  std::string form;
  std::string lemma = "_";
  std::string upos;
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";

  friend bool operator==(const Token&, const Token&) = default;
};

enum class ViolationKind {
  kBadId,          // ids are not 1..n in order
  kHeadOutOfRange,
  kSelfLoop,
  kEmptyField,     // empty upos or deprel
  kNoRoot,
  kMultipleRoots,
  kCycle,
};

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int token_id;  // 0 when the violation concerns the sentence as a whole

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks a head vector (heads[i] is the head of token i+1, 0 = root) for
// single-rootedness and acyclicity. One kCycle violation is reported per
// cycle, carrying the smallest id on it.
std::vector<Violation> ValidateHeads(std::span<const int> heads);

// A sentence: tokens plus its comment lines. Immutable once built.
class DepTree {
 public:
  DepTree() = default;

  // Builds a tree and checks it; throws ValidationError listing the
  // violations when the head structure is not an arborescence.
  static DepTree Validated(std::vector<Token> tokens,
                           std::vector<std::string> comments = {});
  // Builds a tree without checking. validated() reports false.
  static DepTree Unchecked(std::vector<Token> tokens,
                           std::vector<std::string> comments = {});

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<std::string>& comments() const { return comments_; }
  bool validated() const { return validated_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  bool empty() const { return tokens_.empty(); }

  // 1-based access.
  const Token& token(int id) const { return tokens_.at(id - 1); }
  int head(int id) const { return token(id).head; }

  // Value of a "# sent_id = ..." comment, if any.
  std::optional<std::string> sent_id() const;

  std::vector<int> heads() const;
  std::vector<std::string> forms() const;
  // children()[h] lists dependents of h (0 = virtual root) in ascending order.
  std::vector<std::vector<int>> children() const;

  friend bool operator==(const DepTree&, const DepTree&) = default;

 private:
  DepTree(std::vector<Token> tokens, std::vector<std::string> comments,
          bool validated)
      : tokens_(std::move(tokens)),
        comments_(std::move(comments)),
        validated_(validated) {}

  std::vector<Token> tokens_;
  std::vector<std::string> comments_;
  bool validated_ = false;
};

std::vector<Violation> Validate(const DepTree& tree);

// No two arcs cross and no arc spans over the root attachment.
// heads[i] is the head of token i+1; the input must already be a tree.
bool IsProjective(std::span<const int> heads);
inline bool IsProjective(const DepTree& tree) { return IsProjective(tree.heads()); }

struct Treebank {
  std::vector<DepTree> trees;
  std::string source_name;

  int size() const { return static_cast<int>(trees.size()); }
  int token_count() const;
};

struct ReadOptions {
  // Fatal on the first malformed line or invalid tree; otherwise the
  // offending sentence is skipped and a diagnostic recorded.
  bool strict = false;
};

struct ReadResult {
  Treebank treebank;
  int skipped_multiword = 0;   // "1-2" range lines
  int skipped_empty_nodes = 0; // "3.1" decimal ids
  int skipped_sentences = 0;
  std::vector<std::string> diagnostics;

  int warnings() const { return skipped_multiword + skipped_empty_nodes; }
};

ReadResult ReadConllu(std::istream& in, const ReadOptions& options = {});
ReadResult ReadConlluString(std::string_view text, const ReadOptions& options = {});
// Throws std::runtime_error when the file cannot be opened.
ReadResult ReadConlluFile(const std::string& path, const ReadOptions& options = {});

// Every tree must be validated; throws ContractError otherwise.
void WriteConllu(const Treebank& treebank, std::ostream& out);
std::string WriteConlluString(const Treebank& treebank);
void WriteConlluFile(const Treebank& treebank, const std::string& path);

// Lowercases ASCII letters; other bytes are left alone.
std::string AsciiLower(std::string_view s);
// Label with any ":subtype" suffix removed.
std::string_view CoarseLabel(std::string_view label);

}  // namespace hlparse

#endif  // HLPARSE_CONLLU_H_
