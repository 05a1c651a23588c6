// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--eht-dir DIR] [--ewt-sample FILE] [--jobs N]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "brute_force.h"
#include "hlparse/ensemble.h"
#include "hlparse/eval.h"
#include "hlparse/openie.h"
#include "hlparse/parser.h"
#include "hlparse/project.h"
#include "hlparse/stats.h"
#include "random_trees.h"
#include "reference_projection.h"
#include "synth/synth.h"

namespace hlparse {
namespace {

struct Settings {
  std::string eht_dir;
  std::string ewt_sample;
  int jobs = 4;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

DepTree Tree(const std::vector<std::string>& forms, const std::vector<std::string>& upos,
             const std::vector<int>& heads, const std::vector<std::string>& rels) {
  std::vector<Token> toks;
  for (size_t i = 0; i < heads.size(); ++i) {
    Token t;
    t.id = static_cast<int>(i) + 1;
    t.form = forms.empty() ? "w" + std::to_string(i + 1) : forms[i];
    t.upos = upos.empty() ? "X" : upos[i];
    t.head = heads[i];
    t.deprel = rels[i];
    toks.push_back(t);
  }
  return DepTree::Validated(toks);
}

Alignment AlignTo(const std::vector<int>& ids) {
  Alignment a;
  for (size_t i = 0; i < ids.size(); ++i) a.pairs.push_back({static_cast<int>(i) + 1, ids[i]});
  return a;
}

struct FuzzCase {
  DepTree sentence;
  Alignment alignment;
};

std::vector<FuzzCase> ProjectionFuzz(int count) {
  std::mt19937_64 rng(20240601);
  std::vector<FuzzCase> cases;
  for (int i = 0; i < count; ++i) {
    int n = 1 + static_cast<int>(rng() % 10);
    DepTree t = testing::RandomTree(n, rng, testing::DefaultLabels());
    cases.push_back({t, AlignTo(testing::RandomSubset(n, rng))});
  }
  return cases;
}

Outcome ProjectionOracle(const Settings&) {
  auto start = Clock::now();
  auto cases = ProjectionFuzz(2000);
  int mismatches = 0;
  for (const auto& c : cases) {
    auto r = ProjectTree(c.sentence, c.alignment);
    auto [heads, rels] = testing::ReferenceProjectTree(c.sentence, c.alignment);
    std::vector<std::string> labels;
    for (const auto& t : r.tree.tokens()) labels.push_back(t.deprel);
    mismatches += r.tree.heads() != heads || labels != rels;
  }
  double secs = Seconds(start);
  return {mismatches == 0 && secs < 10.0,
          Fmt("%d mismatches over %zu cases, %.2f s (limit 10 s)", mismatches, cases.size(), secs)};
}

Outcome ProjectionExample(const Settings&) {
  // Researchers promised to release data; headline drops "promised".
  DepTree s = Tree({"Researchers", "promised", "to", "release", "data"}, {}, {2, 0, 4, 2, 4},
                   {"nsubj", "root", "mark", "xcomp", "obj"});
  DepTree t = ProjectTree(s, AlignTo({1, 3, 4, 5})).tree;
  // Headline positions: 1 Researchers, 2 to, 3 release, 4 data.
  bool ok = t.head(3) == 0 && t.head(1) == 3 && t.token(1).deprel == "nsubj" && t.head(4) == 3 &&
            t.token(4).deprel == "obj";
  std::string got;
  for (const auto& tok : t.tokens())
    got += Fmt("%s%s(%d,%s)", got.empty() ? "" : " ", tok.form.c_str(), tok.head,
               tok.deprel.c_str());
  return {ok, "expected root=release nsubj(release<-Researchers) obj(release<-data); got " + got};
}

Outcome ProjectionInvariants(const Settings&) {
  auto cases = ProjectionFuzz(2000);
  int violations = 0;
  for (const auto& c : cases) {
    auto r = ProjectTree(c.sentence, c.alignment);
    const auto keep = c.alignment.sentence_indices();
    const int n = c.sentence.size();
    if (r.tree.size() != static_cast<int>(keep.size())) {
      ++violations;
      continue;
    }
    violations += !Validate(r.tree).empty();
    std::vector<int> pos(n + 1, 0);
    for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i) + 1;
    std::vector<std::string> label(n + 1);
    for (int i = 1; i <= n; ++i) label[i] = c.sentence.token(i).deprel;
    for (const auto& step : r.steps) {
      label[step.promoted] = label[step.collapsed];
      violations += label[step.promoted] != step.label;
    }
    for (int d : keep) {
      const Token& out = r.tree.token(pos[d]);
      violations += out.deprel != label[d];
      int h = c.sentence.head(d);
      if (h == 0 || pos[h] != 0)
        violations += out.head != (h == 0 ? 0 : pos[h]) || out.deprel != c.sentence.token(d).deprel;
    }
  }
  return {violations == 0, Fmt("%d violations over %zu cases", violations, cases.size())};
}

Outcome Evaluation(const Settings&) {
  Treebank gold{{Tree({}, {}, {2, 0, 2, 5, 2}, {"nsubj", "root", "obj", "case", "obl"}),
                 Tree({}, {}, {2, 0, 4, 2, 2}, {"nsubj", "root", "det", "obj", "punct"})},
                ""};
  // Hand count: 10 tokens; sentence 1 has one head error (token 4),
  // sentence 2 one head error (token 3) and one label error (token 1).
  // UAS 8/10, LAS 7/10, no sentence fully right.
  Treebank pred{{Tree({}, {}, {2, 0, 2, 2, 2}, {"nsubj", "root", "obj", "case", "obl"}),
                 Tree({}, {}, {2, 0, 2, 2, 2}, {"obj", "root", "det", "obj", "punct"})},
                ""};
  EvalReport r = Score(pred, gold);
  bool fixture = r.uas == 80.0 && r.las == 70.0 && r.uem == 0.0 && r.lem == 0.0;

  EvalReport id = Score(gold, gold);
  bool identity = id.uas == 100.0 && id.las == 100.0 && id.uem == 100.0 && id.lem == 100.0;

  std::mt19937_64 rng(77);
  int order_violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Treebank g, p;
    int k = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < k; ++s) {
      int n = 1 + static_cast<int>(rng() % 8);
      g.trees.push_back(testing::RandomTree(n, rng, testing::DefaultLabels()));
      p.trees.push_back(testing::RandomTree(n, rng, testing::DefaultLabels()));
    }
    EvalReport e = Score(p, g);
    order_violations += e.las > e.uas || e.lem > e.uem;
  }
  return {fixture && identity && order_violations == 0,
          Fmt("fixture UAS %.1f LAS %.1f UEM %.1f LEM %.1f (want 80/70/0/0); identity %s; "
              "%d ordering violations in 1000 fuzz pairs",
              r.uas, r.las, r.uem, r.lem, identity ? "100" : "not 100", order_violations)};
}

Outcome EnsembleOptimality(const Settings&) {
  std::mt19937_64 rng(31337);
  int wrong = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % 5);
    std::vector<DepTree> trees;
    for (int i = 0; i < k; ++i) trees.push_back(testing::RandomTree(n, rng, testing::DefaultLabels()));
    VoteGraph v = BuildVotes(trees);
    Reparse r = ReparseVotes(v);
    auto oracle = testing::BruteForceMaxArborescence(v, false);
    wrong += std::abs(TreeWeight(v, r.heads) - oracle.best_weight) > 1e-9 ||
             !testing::ReachesRoot(r.heads);
  }
  int unanimity_wrong = 0;
  for (int trial = 0; trial < 100; ++trial) {
    DepTree t = testing::RandomTree(1 + static_cast<int>(rng() % 8), rng, testing::DefaultLabels());
    std::vector<DepTree> copies(5, t);
    unanimity_wrong += !(EnsembleTrees(copies).tokens() == t.tokens());
  }
  return {wrong == 0 && unanimity_wrong == 0,
          Fmt("%d of 500 fuzz instances below brute-force optimum; %d of 100 unanimous "
              "cases changed",
              wrong, unanimity_wrong)};
}

// Concatenates every *.conllu file in dir whose name contains key.
std::optional<Treebank> LoadCorpus(const std::string& dir, const std::string& key) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) return std::nullopt;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::string name = AsciiLower(e.path().filename().string());
    if (e.path().extension() == ".conllu" && name.find(key) != std::string::npos)
      files.push_back(e.path());
  }
  if (files.empty()) return std::nullopt;
  std::sort(files.begin(), files.end());
  Treebank tb;
  tb.source_name = key;
  for (const auto& f : files)
    for (auto& t : ReadConlluFile(f.string()).treebank.trees) tb.trees.push_back(std::move(t));
  return tb;
}

Outcome StatisticsFidelity(const Settings& s) {
  auto gsc = LoadCorpus(s.eht_dir, "gsc");
  auto nyt = LoadCorpus(s.eht_dir, "nyt");
  if (!gsc || !nyt)
    return {false, "EHT files not found under " + s.eht_dir +
                       " (need *gsc*.conllu and *nyt*.conllu); cannot check the corpus table"};
  CorpusSummary g = SummarizeCorpus(*gsc), n = SummarizeCorpus(*nyt);
  bool table = g.sentences == 600 && g.tokens == 5017 && n.sentences == 455 && n.tokens == 3986;
  std::string detail = Fmt("GSC %d/%d (want 600/5017), NYT %d/%d (want 455/3986)", g.sentences,
                           g.tokens, n.sentences, n.tokens);
  if (!std::filesystem::exists(s.ewt_sample))
    return {false, detail + "; EWT sample " + s.ewt_sample + " not found"};
  Treebank ewt = ReadConlluFile(s.ewt_sample).treebank;
  auto dg = ComputeRelationDistribution(*gsc), de = ComputeRelationDistribution(ewt);
  auto share = [](const RelationDistribution& d, const char* l) {
    auto it = d.proportions.find(l);
    return it == d.proportions.end() ? 0.0 : it->second;
  };
  bool shares = share(dg, "compound") > share(de, "compound") && share(dg, "flat") > share(de, "flat");
  detail += Fmt("; compound %.3f vs %.3f, flat %.3f vs %.3f (GSC vs EWT)", share(dg, "compound"),
                share(de, "compound"), share(dg, "flat"), share(de, "flat"));
  return {table && shares, detail};
}

Outcome SilverEffect(const Settings& s) {
  auto start = Clock::now();
  Treebank gold = synth::GoldCorpus(2000, 101);
  auto news = synth::NewsCorpusWithAligned(5200, 202);
  std::vector<HeadlinePair> pairs;
  for (auto& n : news) pairs.push_back({n.headline, n.lead});
  SilverCorpus silver = BuildSilverCorpus(pairs, {.jobs = s.jobs});
  Treebank test;
  for (auto& n : synth::NewsCorpus(600, 303)) test.trees.push_back(n.headline_gold);
  Treebank concat = gold;
  for (const auto& t : silver.treebank.trees) concat.trees.push_back(t);

  double las[3] = {0, 0, 0};  // gold-only, finetune, concat
  const int seeds = 3;
  for (int seed = 1; seed <= seeds; ++seed) {
    std::vector<std::vector<TrainingStage>> regimes = {
        {{gold, 10}}, {{gold, 10}, {silver.treebank, 10}}, {{concat, 10}}};
    for (int r = 0; r < 3; ++r) {
      ParserModel m = Train(regimes[r], {.seed = static_cast<std::uint64_t>(seed)});
      las[r] += Score(ParseTreebank(m, test, s.jobs), test).las / seeds;
    }
  }
  double secs = Seconds(start);
  bool sizes = gold.size() >= 2000 && silver.treebank.size() >= 5000;
  bool ok = sizes && las[1] - las[0] >= 1.0 && las[2] - las[0] >= 1.0 && secs < 1800;
  return {ok, Fmt("synthetic data: %d gold, %d silver, %d held-out headlines; mean LAS over %d "
                  "seeds gold-only %.2f, finetune %.2f (%+.2f), concat %.2f (%+.2f); %.0f s",
                  gold.size(), silver.treebank.size(), test.size(), seeds, las[0], las[1],
                  las[1] - las[0], las[2], las[2] - las[0], secs)};
}

Outcome PerceptronSanity(const Settings&) {
  std::mt19937_64 rng(8);
  static const std::vector<std::string> labels = {"nsubj", "obj", "det", "amod", "obl", "case"};
  static const std::vector<std::string> tags = {"NOUN", "VERB", "DET", "ADJ", "ADP"};
  Treebank toy;
  for (int i = 0; i < 10; ++i) {
    DepTree t = testing::RandomProjectiveTree(2 + static_cast<int>(rng() % 7), rng, labels);
    std::vector<Token> toks = t.tokens();
    for (auto& tok : toks) {
      tok.form = "tok" + std::to_string(rng() % 1000);
      tok.upos = tags[rng() % tags.size()];
    }
    toy.trees.push_back(DepTree::Validated(toks));
  }
  std::vector<TrainingStage> stages = {{toy, 10}};
  ParserModel a = Train(stages, {.seed = 5});
  double las = Score(ParseTreebank(a, toy), toy).las;
  std::ostringstream sa, sb;
  a.Save(sa);
  Train(stages, {.seed = 5}).Save(sb);
  bool same = sa.str() == sb.str();
  return {las == 100.0 && same,
          Fmt("memorization LAS %.2f after 10 epochs; model files %s", las,
              same ? "bitwise identical" : "differ")};
}

Outcome StatisticalTests(const Settings&) {
  ProportionTest t = TwoProportionTest(41, 50, 28, 50);
  std::vector<std::string> labels = {"correct", "incorrect", "correct", "correct"};
  Kappa k = CohenKappa(labels, labels);
  return {t.p_value < 0.01 && k.defined && k.kappa == 1.0,
          Fmt("41/50 vs 28/50: z %.3f, p %.5f (need < 0.01); kappa identity %.3f", t.z, t.p_value,
              k.kappa)};
}

Outcome OpenIe(const Settings&) {
  const std::vector<std::string> forms = {"JPMorgan", "to",         "Cut",    "9,200",
                                          "Jobs",     "at",         "Washington", "Mutual"};
  const std::vector<std::string> upos = {"PROPN", "PART", "VERB", "NUM",
                                         "NOUN",  "ADP",  "PROPN", "PROPN"};
  DepTree fig = Tree(forms, upos, {3, 3, 0, 5, 3, 8, 8, 3},
                     {"nsubj", "mark", "root", "nummod", "obj", "case", "compound", "obl"});
  auto tuples = Extract(fig);
  bool fig_ok = tuples.size() == 1 && tuples[0].predicate_text == "to Cut" &&
                tuples[0].arguments.size() == 3 && tuples[0].arguments[0].text == "JPMorgan" &&
                tuples[0].arguments[1].text == "9,200 Jobs" &&
                tuples[0].arguments[2].text == "at Washington Mutual";

  // Ten sentences; the second parse differs in sentences 2, 5 and 9.
  Treebank a, b;
  auto news = synth::NewsCorpus(10, 404);
  for (auto& n : news) a.trees.push_back(n.headline_gold);
  b = a;
  std::vector<int> changed = {1, 4, 8};
  for (int s : changed) {
    std::vector<Token> toks = b.trees[s].tokens();
    int root = 0;
    for (const auto& t : toks)
      if (t.head == 0) root = t.id;
    // Relabel the subject so it is no longer an argument.
    for (auto& t : toks)
      if (t.head == root && t.deprel.starts_with("nsubj")) t.deprel = "dep";
    b.trees[s] = DepTree::Validated(toks, b.trees[s].comments());
  }
  auto diffs = DiffExtractions(ExtractAll(a), ExtractAll(b));
  std::vector<int> flagged;
  for (const auto& d : diffs) flagged.push_back(d.sentence_index);
  bool diff_ok = flagged == changed;
  std::string got;
  for (int f : flagged) got += (got.empty() ? "" : ",") + std::to_string(f + 1);
  return {fig_ok && diff_ok,
          std::string("headline tuple ") + (fig_ok ? "matches" : "differs") +
              " (to Cut; JPMorgan; 9,200 Jobs; at Washington Mutual); diff flags sentences {" +
              got + "} (want {2,5,9})"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(const Settings&)> run;
};

}  // namespace
}  // namespace hlparse

int main(int argc, char** argv) {
  using namespace hlparse;
  Settings settings;
  int only = 0;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--criterion", only, "Run one criterion")->check(CLI::Range(1, 10));
  app.add_option("--eht-dir", settings.eht_dir, "Directory with the EHT CoNLL-U files")
      ->default_val("data/eht");
  app.add_option("--ewt-sample", settings.ewt_sample, "EWT sample CoNLL-U")
      ->default_val("data/ewt-sample.conllu");
  app.add_option("--jobs", settings.jobs, "Worker threads")->check(CLI::Range(1, 256));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "projection-oracle-equivalence", ProjectionOracle},
      {2, "projection-worked-example", ProjectionExample},
      {3, "projection-invariants", ProjectionInvariants},
      {4, "evaluation-correctness", Evaluation},
      {5, "ensemble-optimality", EnsembleOptimality},
      {6, "statistics-fidelity", StatisticsFidelity},
      {7, "silver-data-effect", SilverEffect},
      {8, "perceptron-sanity", PerceptronSanity},
      {9, "statistical-tests", StatisticalTests},
      {10, "openie-extraction", OpenIe},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run(settings);
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
