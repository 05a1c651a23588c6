#include "hlparse/parser.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "hlparse/errors.h"
#include "hlparse/parallel.h"

namespace hlparse {

std::string ToString(const Transition& t) {
  switch (t.move) {
    case Move::kShift: return "SHIFT";
    case Move::kLeftArc: return "LEFT-ARC(" + t.label + ")";
    case Move::kRightArc: return "RIGHT-ARC(" + t.label + ")";
  }
  return "?";
}

// --- Configuration --------------------------------------------------------

Configuration::Configuration(int n)
    : n_(n),
      stack_{0},
      heads_(n + 1, -1),
      labels_(n + 1),
      left_(n + 1, -1),
      right_(n + 1, -1),
      child_count_(n + 1, 0) {}

int Configuration::stack_at(int depth) const {
  const int size = static_cast<int>(stack_.size());
  return depth < size ? stack_[size - 1 - depth] : -1;
}

int Configuration::buffer_at(int offset) const {
  const int id = next_ + offset;
  return id <= n_ ? id : -1;
}

bool Configuration::CanApply(const Transition& t) const {
  switch (t.move) {
    case Move::kShift: return CanShift();
    case Move::kLeftArc: return CanLeftArc();
    case Move::kRightArc: return CanRightArc();
  }
  return false;
}

void Configuration::AddArc(int head, int dep, const std::string& label) {
  heads_[dep] = head;
  labels_[dep] = label;
  ++child_count_[head];
  if (dep < head && (left_[head] < 0 || dep < left_[head])) left_[head] = dep;
  if (dep > head && (right_[head] < 0 || dep > right_[head])) right_[head] = dep;
}

void Configuration::Apply(const Transition& t) {
  if (!CanApply(t)) throw ContractError("transition " + ToString(t) + " not applicable");
  switch (t.move) {
    case Move::kShift:
      stack_.push_back(next_++);
      break;
    case Move::kLeftArc: {
      const int s0 = stack_at(0), s1 = stack_at(1);
      stack_.pop_back();
      stack_.back() = s0;
      AddArc(s0, s1, t.label);
      break;
    }
    case Move::kRightArc: {
      const int s0 = stack_at(0), s1 = stack_at(1);
      stack_.pop_back();
      AddArc(s1, s0, t.label);
      break;
    }
  }
}

std::optional<std::vector<Transition>> StaticOracle(const DepTree& tree) {
  const int n = tree.size();
  const auto heads = tree.heads();
  std::vector<int> gold_children(n + 1, 0);
  for (int h : heads) ++gold_children[h];

  Configuration c(n);
  std::vector<Transition> seq;
  while (!c.terminal()) {
    const int s0 = c.stack_at(0), s1 = c.stack_at(1);
    Transition t;
    if (c.CanLeftArc() && heads[s1 - 1] == s0) {
      t = {Move::kLeftArc, tree.token(s1).deprel};
    } else if (c.CanRightArc() && s0 > 0 && heads[s0 - 1] == s1 &&
               c.attached_children(s0) == gold_children[s0]) {
      t = {Move::kRightArc, tree.token(s0).deprel};
    } else if (c.CanShift()) {
      t = {Move::kShift, ""};
    } else {
      return std::nullopt;
    }
    c.Apply(t);
    seq.push_back(std::move(t));
  }
  return seq;
}

// --- Features ---------------------------------------------------------------

namespace {

const std::string kNone = "<none>";
const std::string kRoot = "<root>";

std::string DistanceBucket(int a, int b) {
  if (a <= 0 || b <= 0) return "0";
  const int d = std::abs(a - b);
  return d >= 5 ? "5+" : std::to_string(d);
}

std::string Suffix(const std::string& w) {
  return w.size() <= 3 ? w : w.substr(w.size() - 3);
}

}  // namespace

void ExtractFeatures(const Configuration& c, std::span<const std::string> words,
                     std::span<const std::string> tags, std::vector<std::string>& out) {
  auto word = [&](int i) -> const std::string& {
    return i < 0 ? kNone : i == 0 ? kRoot : words[i - 1];
  };
  auto tag = [&](int i) -> const std::string& {
    return i < 0 ? kNone : i == 0 ? kRoot : tags[i - 1];
  };
  auto label = [&](int i) -> const std::string& {
    return i <= 0 ? kNone : c.label(i);
  };

  const int s0 = c.stack_at(0), s1 = c.stack_at(1), s2 = c.stack_at(2);
  const int b0 = c.buffer_at(0), b1 = c.buffer_at(1), b2 = c.buffer_at(2);
  const std::string& s0w = word(s0);
  const std::string& s0p = tag(s0);
  const std::string& s1w = word(s1);
  const std::string& s1p = tag(s1);
  const std::string& b0w = word(b0);
  const std::string& b0p = tag(b0);
  const std::string& b1p = tag(b1);
  const std::string s0l = s0 > 0 ? label(c.leftmost_child(s0)) : kNone;
  const std::string s0r = s0 > 0 ? label(c.rightmost_child(s0)) : kNone;
  const std::string s1l = s1 > 0 ? label(c.leftmost_child(s1)) : kNone;
  const std::string s1r = s1 > 0 ? label(c.rightmost_child(s1)) : kNone;
  const std::string dist = DistanceBucket(s0, s1);

  out.clear();
  out.push_back("bias");
  out.push_back("1=" + s0w);
  out.push_back("2=" + s0p);
  out.push_back("3=" + s0w + "|" + s0p);
  out.push_back("4=" + s1w);
  out.push_back("5=" + s1p);
  out.push_back("6=" + s1w + "|" + s1p);
  out.push_back("7=" + b0w);
  out.push_back("8=" + b0p);
  out.push_back("9=" + b0w + "|" + b0p);
  out.push_back("10=" + word(b1));
  out.push_back("11=" + b1p);
  out.push_back("12=" + word(b1) + "|" + b1p);
  out.push_back("13=" + tag(s2));
  out.push_back("14=" + tag(b2));
  out.push_back("15=" + s0w + "|" + s1w);
  out.push_back("16=" + s0p + "|" + s1p);
  out.push_back("17=" + s0w + "|" + s1p);
  out.push_back("18=" + s0p + "|" + s1w);
  out.push_back("19=" + s0p + "|" + b0p);
  out.push_back("20=" + s0w + "|" + b0w);
  out.push_back("21=" + s1p + "|" + s0p + "|" + b0p);
  out.push_back("22=" + s0p + "|" + b0p + "|" + b1p);
  out.push_back("23=" + tag(s2) + "|" + s1p + "|" + s0p);
  out.push_back("24=" + s0l);
  out.push_back("25=" + s0r);
  out.push_back("26=" + s1l);
  out.push_back("27=" + s1r);
  out.push_back("28=" + s0p + "|" + s0l);
  out.push_back("29=" + s1p + "|" + s1r);
  out.push_back("30=" + s1p + "|" + s0p + "|" + s0l);
  out.push_back("31=" + s1p + "|" + s0p + "|" + s1r);
  out.push_back("32=" + dist);
  out.push_back("33=" + dist + "|" + s0p + "|" + s1p);
  out.push_back("34=" + Suffix(s0w));
  out.push_back("35=" + Suffix(b0w));
  out.push_back("36=" + Suffix(s1w));
  out.push_back("37=" + s0p + "|" + std::to_string(s0 > 0 ? c.attached_children(s0) : 0));
}

// --- Model ------------------------------------------------------------------

ParserModel::ParserModel(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (size_t i = 0; i < labels_.size(); ++i) label_ids_[labels_[i]] = static_cast<int>(i);
}

Transition ParserModel::TransitionOf(int id) const {
  if (id == 0) return {Move::kShift, ""};
  const int l = (id - 1) / 2;
  return {(id - 1) % 2 == 0 ? Move::kLeftArc : Move::kRightArc, labels_.at(l)};
}

int ParserModel::IdOf(const Transition& t) const {
  if (t.move == Move::kShift) return 0;
  auto it = label_ids_.find(t.label);
  if (it == label_ids_.end()) return -1;
  return 1 + 2 * it->second + (t.move == Move::kRightArc ? 1 : 0);
}

void ParserModel::AddScores(std::span<const std::string> features, bool averaged,
                            std::vector<double>& scores) const {
  for (const auto& f : features) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (const Entry& e : it->second) scores[e.transition] += averaged ? e.averaged : e.weight;
  }
}

bool ParserModel::operator==(const ParserModel& o) const {
  if (labels_ != o.labels_ || templates_version_ != o.templates_version_ || !(meta_ == o.meta_) ||
      weights_.size() != o.weights_.size())
    return false;
  for (const auto& [f, entries] : weights_) {
    auto it = o.weights_.find(f);
    if (it == o.weights_.end()) return false;
    auto a = entries, b = it->second;
    auto by_t = [](const Entry& x, const Entry& y) { return x.transition < y.transition; };
    std::sort(a.begin(), a.end(), by_t);
    std::sort(b.begin(), b.end(), by_t);
    if (a != b) return false;
  }
  return true;
}

namespace {

constexpr std::string_view kMagic = "hlparse-model";
constexpr int kFormatVersion = 1;

std::string HexDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double ParseDouble(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw FormatError("bad number '" + s + "'");
  return v;
}

std::vector<std::string> SplitTab(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, '\t')) out.push_back(cur);
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string Next() {
    std::string line;
    if (!std::getline(in_, line)) throw FormatError("model file truncated at line " +
                                                    std::to_string(line_no_ + 1));
    ++line_no_;
    return line;
  }

  // Reads "key value" and returns value.
  std::string Field(std::string_view key) {
    std::string line = Next();
    if (!line.starts_with(key) || line.size() <= key.size() || line[key.size()] != ' ')
      throw FormatError("expected '" + std::string(key) + "' at line " + std::to_string(line_no_));
    return line.substr(key.size() + 1);
  }

  long long IntField(std::string_view key) {
    std::string v = Field(key);
    char* end = nullptr;
    long long x = std::strtoll(v.c_str(), &end, 10);
    if (v.empty() || *end != '\0')
      throw FormatError("bad integer for '" + std::string(key) + "' at line " +
                        std::to_string(line_no_));
    return x;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace

void ParserModel::Save(std::ostream& out) const {
  out << kMagic << '\n';
  out << "version " << kFormatVersion << '\n';
  out << "templates " << templates_version_ << '\n';
  out << "seed " << meta_.seed << '\n';
  out << "iterations " << meta_.iterations << '\n';
  out << "updates " << meta_.updates << '\n';
  out << "stages " << meta_.stages.size() << '\n';
  for (const auto& s : meta_.stages)
    out << s.name << '\t' << s.fingerprint << '\t' << s.trees << '\t' << s.skipped_nonprojective
        << '\t' << s.epochs << '\n';
  out << "labels " << labels_.size() << '\n';
  for (const auto& l : labels_) out << l << '\n';

  std::vector<const std::string*> keys;
  keys.reserve(weights_.size());
  for (const auto& [f, _] : weights_) keys.push_back(&f);
  std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });
  size_t count = 0;
  for (const auto& [_, entries] : weights_) count += entries.size();
  out << "weights " << count << '\n';
  for (const std::string* f : keys) {
    auto entries = weights_.at(*f);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.transition < b.transition; });
    for (const Entry& e : entries)
      out << *f << '\t' << e.transition << '\t' << HexDouble(e.weight) << '\t'
          << HexDouble(e.averaged) << '\n';
  }
  out << "end\n";
}

void ParserModel::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  Save(out);
}

ParserModel ParserModel::Load(std::istream& in) {
  LineReader r(in);
  std::string magic;
  if (!std::getline(in, magic) || magic != kMagic) throw FormatError("not an hlparse model file");
  if (r.IntField("version") != kFormatVersion) throw FormatError("unsupported model version");
  std::string templates = r.Field("templates");
  if (templates != kFeatureTemplatesVersion)
    throw FormatError("model uses feature templates '" + templates + "', this build has '" +
                      std::string(kFeatureTemplatesVersion) + "'");
  TrainingMeta meta;
  meta.seed = static_cast<std::uint64_t>(std::stoull(r.Field("seed")));
  meta.iterations = static_cast<int>(r.IntField("iterations"));
  meta.updates = r.IntField("updates");
  const long long stages = r.IntField("stages");
  for (long long i = 0; i < stages; ++i) {
    auto cols = SplitTab(r.Next());
    if (cols.size() != 5) throw FormatError("bad stage line");
    meta.stages.push_back({cols[0], cols[1], std::stoi(cols[2]), std::stoi(cols[3]),
                           std::stoi(cols[4])});
  }
  const long long nlabels = r.IntField("labels");
  if (nlabels < 0) throw FormatError("bad label count");
  std::vector<std::string> labels;
  for (long long i = 0; i < nlabels; ++i) labels.push_back(r.Next());
  ParserModel m(std::move(labels));
  m.meta_ = std::move(meta);
  const long long count = r.IntField("weights");
  for (long long i = 0; i < count; ++i) {
    auto cols = SplitTab(r.Next());
    if (cols.size() != 4) throw FormatError("bad weight line " + std::to_string(r.line_no()));
    char* end = nullptr;
    long t = std::strtol(cols[1].c_str(), &end, 10);
    if (*end != '\0' || t < 0 || t >= m.num_transitions())
      throw FormatError("bad transition id at line " + std::to_string(r.line_no()));
    m.weights_[cols[0]].push_back(
        {static_cast<int>(t), ParseDouble(cols[2]), ParseDouble(cols[3])});
  }
  if (r.Next() != "end") throw FormatError("missing end marker");
  return m;
}

ParserModel ParserModel::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Load(in);
}

// --- Training ---------------------------------------------------------------

namespace {

// Root attachments carry "root" and nothing else does, when the model knows
// that label.
class TransitionMask {
 public:
  explicit TransitionMask(const ParserModel& m) : model_(m) {
    const auto& labels = m.labels();
    auto it = std::find(labels.begin(), labels.end(), "root");
    root_label_ = it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
  }

  bool Allowed(const Configuration& c, int id) const {
    if (id == 0) return c.CanShift();
    const int l = (id - 1) / 2;
    if ((id - 1) % 2 == 0) return c.CanLeftArc() && l != root_label_;
    if (!c.CanRightArc()) return false;
    if (root_label_ < 0) return true;
    return (c.stack_at(1) == 0) == (l == root_label_);
  }

  // Highest-scoring allowed transition. Falls back to any structurally
  // legal one when the label rule leaves nothing (e.g. only "root" known).
  int Best(const Configuration& c, const std::vector<double>& scores) const {
    int best = -1;
    for (int id = 0; id < model_.num_transitions(); ++id) {
      if (!Allowed(c, id)) continue;
      if (best < 0 || scores[id] > scores[best]) best = id;
    }
    if (best >= 0) return best;
    for (int id = 0; id < model_.num_transitions(); ++id) {
      if (!c.CanApply(model_.TransitionOf(id))) continue;
      if (best < 0 || scores[id] > scores[best]) best = id;
    }
    return best;
  }

 private:
  const ParserModel& model_;
  int root_label_;
};

struct AvgEntry {
  int transition;
  double weight = 0;
  double total = 0;
  std::int64_t stamp = 0;
};

class Trainer {
 public:
  explicit Trainer(int transitions) : transitions_(transitions) {}

  void Score(std::span<const std::string> features, std::vector<double>& scores) const {
    std::fill(scores.begin(), scores.end(), 0.0);
    for (const auto& f : features) {
      auto it = weights_.find(f);
      if (it == weights_.end()) continue;
      for (const AvgEntry& e : it->second) scores[e.transition] += e.weight;
    }
  }

  void Update(std::span<const std::string> features, int gold, int predicted) {
    ++updates_;
    for (const auto& f : features) {
      auto& entries = weights_[f];
      Bump(entries, gold, 1.0);
      Bump(entries, predicted, -1.0);
    }
  }

  void Tick() { ++now_; }
  std::int64_t updates() const { return updates_; }

  void Export(ParserModel& m) const {
    auto& out = m.mutable_weights();
    out.clear();
    const double now = static_cast<double>(std::max<std::int64_t>(now_, 1));
    for (const auto& [f, entries] : weights_) {
      std::vector<ParserModel::Entry> kept;
      for (const AvgEntry& e : entries) {
        const double total = e.total + static_cast<double>(now_ - e.stamp) * e.weight;
        const double avg = total / now;
        if (e.weight != 0 || avg != 0) kept.push_back({e.transition, e.weight, avg});
      }
      if (!kept.empty()) out.emplace(f, std::move(kept));
    }
  }

 private:
  void Bump(std::vector<AvgEntry>& entries, int transition, double delta) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const AvgEntry& e) { return e.transition == transition; });
    if (it == entries.end()) {
      entries.push_back({transition, 0, 0, now_});
      it = entries.end() - 1;
    }
    it->total += static_cast<double>(now_ - it->stamp) * it->weight;
    it->stamp = now_;
    it->weight += delta;
  }

  int transitions_;
  std::int64_t now_ = 0;
  std::int64_t updates_ = 0;
  std::unordered_map<std::string, std::vector<AvgEntry>> weights_;
};

std::vector<std::string> LowerForms(const DepTree& t) {
  std::vector<std::string> w;
  w.reserve(t.size());
  for (const auto& tok : t.tokens()) w.push_back(AsciiLower(tok.form));
  return w;
}

std::vector<std::string> Upos(const DepTree& t) {
  std::vector<std::string> p;
  p.reserve(t.size());
  for (const auto& tok : t.tokens()) p.push_back(tok.upos);
  return p;
}

// Fisher-Yates with explicit modulo draws so the order does not depend on
// the standard library's distribution implementation.
void Shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

std::string Fingerprint(const Treebank& tb) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : WriteConlluString(tb)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return Hex64(h);
}

ParserModel Train(std::span<const TrainingStage> stages, const TrainOptions& options) {
  if (stages.empty()) throw ContractError("train: no training stages");

  std::vector<std::string> labels;
  for (const auto& stage : stages)
    for (const auto& tree : stage.treebank.trees)
      for (const auto& tok : tree.tokens()) labels.push_back(tok.deprel);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  ParserModel model(labels);
  TransitionMask mask(model);
  Trainer trainer(model.num_transitions());

  struct Example {
    std::vector<std::string> words, tags;
    std::vector<int> gold;  // transition ids
  };

  TrainingMeta meta;
  meta.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  int usable = 0;
  std::vector<std::string> features;
  std::vector<double> scores(model.num_transitions());

  for (const auto& stage : stages) {
    StageInfo info;
    info.name = stage.treebank.source_name;
    info.fingerprint = Fingerprint(stage.treebank);
    info.epochs = stage.epochs;
    std::vector<Example> examples;
    for (const auto& tree : stage.treebank.trees) {
      auto oracle = StaticOracle(tree);
      if (!oracle) {
        ++info.skipped_nonprojective;
        continue;
      }
      Example ex{LowerForms(tree), Upos(tree), {}};
      for (const auto& t : *oracle) ex.gold.push_back(model.IdOf(t));
      examples.push_back(std::move(ex));
    }
    info.trees = static_cast<int>(examples.size());
    usable += info.trees;

    std::vector<int> order(examples.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (int epoch = 0; epoch < stage.epochs; ++epoch) {
      Shuffle(order, rng);
      for (int idx : order) {
        const Example& ex = examples[idx];
        Configuration c(static_cast<int>(ex.words.size()));
        for (int gold : ex.gold) {
          ExtractFeatures(c, ex.words, ex.tags, features);
          trainer.Score(features, scores);
          const int predicted = mask.Best(c, scores);
          if (predicted != gold) trainer.Update(features, gold, predicted);
          trainer.Tick();
          c.Apply(model.TransitionOf(gold));
        }
      }
    }
    meta.iterations += stage.epochs;
    meta.stages.push_back(std::move(info));
  }
  if (usable == 0) throw ContractError("train: no projective training trees");
  meta.updates = trainer.updates();
  trainer.Export(model);
  model.mutable_meta() = std::move(meta);
  return model;
}

// --- Decoding ---------------------------------------------------------------

DepTree Parse(const ParserModel& model, std::span<const std::string> forms,
              std::span<const std::string> upos) {
  if (forms.size() != upos.size()) throw ContractError("parse: forms and upos differ in length");
  std::vector<Token> tokens(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    tokens[i].id = static_cast<int>(i) + 1;
    tokens[i].form = forms[i];
    tokens[i].upos = upos[i];
  }
  return Parse(model, DepTree::Unchecked(std::move(tokens)));
}

DepTree Parse(const ParserModel& model, const DepTree& sentence) {
  const int n = sentence.size();
  if (n == 0) throw ContractError("parse: empty sentence");
  if (model.labels().empty()) throw ContractError("parse: model has no labels");
  std::vector<std::string> words = LowerForms(sentence), tags = Upos(sentence);
  for (const auto& t : tags)
    if (t.empty()) throw ContractError("parse: missing UPOS");
  TransitionMask mask(model);
  Configuration c(n);
  std::vector<std::string> features;
  std::vector<double> scores(model.num_transitions());
  while (!c.terminal()) {
    ExtractFeatures(c, words, tags, features);
    std::fill(scores.begin(), scores.end(), 0.0);
    model.AddScores(features, true, scores);
    c.Apply(model.TransitionOf(mask.Best(c, scores)));
  }
  std::vector<Token> tokens = sentence.tokens();
  const auto heads = c.heads();
  const auto labels = c.labels();
  for (int i = 0; i < n; ++i) {
    tokens[i].head = heads[i];
    tokens[i].deprel = labels[i];
  }
  return DepTree::Validated(std::move(tokens), sentence.comments());
}

Treebank ParseTreebank(const ParserModel& model, const Treebank& input, int jobs) {
  Treebank out;
  out.source_name = input.source_name;
  out.trees.resize(input.trees.size());
  ParallelFor(input.size(), jobs, [&](int i) { out.trees[i] = Parse(model, input.trees[i]); });
  return out;
}

std::pair<Treebank, Treebank> HoldOut(const Treebank& tb, int size, std::uint64_t seed) {
  if (size < 0 || size > tb.size())
    throw ContractError("hold_out: size " + std::to_string(size) + " outside 0.." +
                        std::to_string(tb.size()));
  std::vector<int> idx(tb.size());
  for (int i = 0; i < tb.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  Shuffle(idx, rng);
  std::vector<char> held(tb.size(), 0);
  for (int i = 0; i < size; ++i) held[idx[i]] = 1;
  std::pair<Treebank, Treebank> out;
  out.first.source_name = tb.source_name;
  out.second.source_name = tb.source_name + ":dev";
  for (int i = 0; i < tb.size(); ++i)
    (held[i] ? out.second : out.first).trees.push_back(tb.trees[i]);
  return out;
}

}  // namespace hlparse
