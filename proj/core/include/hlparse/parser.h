#ifndef HLPARSE_PARSER_H_
#define HLPARSE_PARSER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hlparse/conllu.h"

namespace hlparse {

// Greedy arc-standard transition parser with an averaged perceptron.
//
// Transition ids: 0 is SHIFT, 1 + 2l is LEFT-ARC(label l), 2 + 2l is
// RIGHT-ARC(label l), with l indexing ParserModel::labels(). Equal scores
// resolve to the smaller id.

enum class Move : std::uint8_t { kShift, kLeftArc, kRightArc };

struct Transition {
  Move move = Move::kShift;
  std::string label;  // empty for SHIFT

  friend bool operator==(const Transition&, const Transition&) = default;
};

std::string ToString(const Transition& t);

// Parser state. Node 0 is the virtual root and starts on the stack.
class Configuration {
 public:
  explicit Configuration(int n);

  int n() const { return n_; }
  const std::vector<int>& stack() const { return stack_; }
  int buffer_front() const { return next_ <= n_ ? next_ : -1; }
  int buffer_size() const { return n_ - next_ + 1; }
  bool terminal() const { return next_ > n_ && stack_.size() == 1; }

  // Stack item counted from the top (0 = top); -1 when absent.
  int stack_at(int depth) const;
  // Buffer item counted from the front; -1 when absent.
  int buffer_at(int offset) const;

  int head(int id) const { return heads_[id]; }
  const std::string& label(int id) const { return labels_[id]; }
  int leftmost_child(int id) const { return left_[id]; }
  int rightmost_child(int id) const { return right_[id]; }
  int attached_children(int id) const { return child_count_[id]; }

  bool CanShift() const { return next_ <= n_; }
  bool CanLeftArc() const { return stack_.size() >= 2 && stack_at(1) != 0; }
  // Attaching to the virtual root is only allowed as the last move, which
  // keeps the result single-rooted.
  bool CanRightArc() const {
    return stack_.size() >= 2 && (stack_at(1) != 0 || next_ > n_);
  }
  bool CanApply(const Transition& t) const;

  // Throws ContractError when t is not applicable.
  void Apply(const Transition& t);

  std::vector<int> heads() const { return {heads_.begin() + 1, heads_.end()}; }
  std::vector<std::string> labels() const { return {labels_.begin() + 1, labels_.end()}; }

 private:
  void AddArc(int head, int dep, const std::string& label);

  int n_;
  std::vector<int> stack_;
  int next_ = 1;
  std::vector<int> heads_;
  std::vector<std::string> labels_;
  std::vector<int> left_, right_, child_count_;
};

// Canonical SHIFT / LEFT-ARC / RIGHT-ARC sequence that rebuilds the tree;
// nullopt when the tree is non-projective.
std::optional<std::vector<Transition>> StaticOracle(const DepTree& tree);

inline constexpr std::string_view kFeatureTemplatesVersion = "arcstd-v1";

// Feature strings for a state. words and tags are 1-based via index - 1.
void ExtractFeatures(const Configuration& c, std::span<const std::string> words,
                     std::span<const std::string> tags, std::vector<std::string>& out);

struct StageInfo {
  std::string name;
  std::string fingerprint;  // FNV-1a 64 of the stage's CoNLL-U text, hex
  int trees = 0;
  int skipped_nonprojective = 0;
  int epochs = 0;

  friend bool operator==(const StageInfo&, const StageInfo&) = default;
};

struct TrainingMeta {
  std::uint64_t seed = 0;
  int iterations = 0;       // total epochs over all stages
  std::int64_t updates = 0; // perceptron mistakes corrected
  std::vector<StageInfo> stages;

  friend bool operator==(const TrainingMeta&, const TrainingMeta&) = default;
};

class ParserModel {
 public:
  struct Entry {
    int transition;
    double weight;
    double averaged;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ParserModel() = default;
  explicit ParserModel(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  int num_transitions() const { return 1 + 2 * static_cast<int>(labels_.size()); }
  Transition TransitionOf(int id) const;
  int IdOf(const Transition& t) const;  // -1 for unknown labels
  const std::string& templates_version() const { return templates_version_; }
  const TrainingMeta& meta() const { return meta_; }
  TrainingMeta& mutable_meta() { return meta_; }
  size_t feature_count() const { return weights_.size(); }

  // Adds weight (raw or averaged) of each feature to scores[transition].
  void AddScores(std::span<const std::string> features, bool averaged,
                 std::vector<double>& scores) const;

  std::unordered_map<std::string, std::vector<Entry>>& mutable_weights() { return weights_; }
  const std::unordered_map<std::string, std::vector<Entry>>& weights() const { return weights_; }

  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  // Throws FormatError on a bad magic line, template version mismatch,
  // or a truncated/corrupt body.
  static ParserModel Load(std::istream& in);
  static ParserModel LoadFile(const std::string& path);

  bool operator==(const ParserModel& o) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_ids_;
  std::string templates_version_{kFeatureTemplatesVersion};
  TrainingMeta meta_;
  std::unordered_map<std::string, std::vector<Entry>> weights_;
};

struct TrainingStage {
  Treebank treebank;
  int epochs = 1;
};

struct TrainOptions {
  std::uint64_t seed = 1;
};

// Concat is a single stage over the concatenated corpora; Finetune is a
// gold stage followed by a silver stage, continuing the same weights and
// the same running average. Throws ContractError when no stage has a
// projective tree to learn from.
ParserModel Train(std::span<const TrainingStage> stages, const TrainOptions& options = {});

// Greedy decoding with averaged weights. forms and upos must have equal
// length; the result is projective and validated.
DepTree Parse(const ParserModel& model, std::span<const std::string> forms,
              std::span<const std::string> upos);
// Re-parses a tree's forms and UPOS, keeping its other columns.
DepTree Parse(const ParserModel& model, const DepTree& sentence);
Treebank ParseTreebank(const ParserModel& model, const Treebank& input, int jobs = 1);

// Deterministically removes `size` trees (seeded sample) into the second
// result; the rest keep their order in the first.
std::pair<Treebank, Treebank> HoldOut(const Treebank& tb, int size, std::uint64_t seed);

std::string Fingerprint(const Treebank& tb);

}  // namespace hlparse

#endif  // HLPARSE_PARSER_H_
