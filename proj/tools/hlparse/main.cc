#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hlparse/align.h"
#include "hlparse/conllu.h"
#include "hlparse/ensemble.h"
#include "hlparse/errors.h"
#include "hlparse/eval.h"
#include "hlparse/openie.h"
#include "hlparse/parser.h"
#include "hlparse/project.h"
#include "hlparse/stats.h"
#include "pairs_io.h"
#include "report_json.h"
#include "run_manifest.h"
#include "synth/synth.h"

namespace hlparse::cli {
namespace {

using nlohmann::json;

// Bad flag values discovered after CLI11 parsing; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Common flags carried by every subcommand.
struct Common {
  std::string manifest_path;
  int jobs = 1;
  bool skip_invalid = false;
};

Treebank ReadTreebank(const std::string& path, RunManifest& manifest, const Common& common) {
  manifest.AddInput(path);
  ReadResult r;
  try {
    r = ReadConlluFile(path, {.strict = !common.skip_invalid});
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
  if (r.warnings() > 0)
    std::cerr << path << ": skipped " << r.skipped_multiword << " multiword and "
              << r.skipped_empty_nodes << " empty-node lines\n";
  for (const auto& d : r.diagnostics) std::cerr << path << ": " << d << '\n';
  if (r.skipped_sentences > 0)
    std::cerr << path << ": skipped " << r.skipped_sentences << " invalid sentences\n";
  return std::move(r.treebank);
}

void WriteTreebank(const Treebank& tb, const std::string& path, RunManifest& manifest) {
  WriteConlluFile(tb, path);
  manifest.AddOutput(path);
}

void WriteJson(const json& j, const std::string& path, RunManifest& manifest) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  manifest.AddOutput(path);
}

void WriteJsonLines(const std::vector<json>& rows, const std::string& path,
                    RunManifest& manifest) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& r : rows) out << r.dump() << '\n';
  manifest.AddOutput(path);
}

json Versioned(json body) {
  json j = {{"schema_version", kSchemaVersion}};
  j.update(body);
  return j;
}

void AddCommon(CLI::App* cmd, Common& c, bool with_jobs) {
  cmd->add_option("--manifest", c.manifest_path,
                  "Run manifest path (default: <output>.manifest.json)");
  cmd->add_flag("--skip-invalid", c.skip_invalid,
                "Skip malformed or invalid CoNLL-U sentences instead of failing");
  if (with_jobs)
    cmd->add_option("--jobs", c.jobs, "Worker threads for per-sentence work")
        ->check(CLI::Range(1, 256));
}

std::string ManifestPath(const Common& c, const std::string& primary_output) {
  if (!c.manifest_path.empty()) return c.manifest_path;
  return primary_output.empty() ? "" : primary_output + ".manifest.json";
}

// align -------------------------------------------------------------------

struct AlignArgs {
  Common common;
  std::string pairs, out;
  bool case_sensitive = false;
};

void RunAlign(const AlignArgs& a) {
  RunManifest m("align");
  m.SetFlag("case_sensitive", a.case_sensitive);
  m.AddInput(a.pairs);
  auto pairs = ReadPairsTsv(a.pairs);
  std::vector<json> rows;
  int aligned = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto al = AlignSubsequence(pairs[i].headline, pairs[i].lead, a.case_sensitive);
    json row = {{"index", i}, {"line", pairs[i].line}, {"aligned", al.has_value()}};
    if (al) {
      row["pairs"] = ToJson(*al);
      ++aligned;
    }
    rows.push_back(std::move(row));
  }
  WriteJsonLines(rows, a.out, m);
  std::cerr << "align: " << aligned << " of " << pairs.size() << " headlines are subsequences\n";
  m.Write(ManifestPath(a.common, a.out));
}

// project -----------------------------------------------------------------

struct ProjectArgs {
  Common common;
  std::string pairs, headlines, sentences, out, report, order = "reference";
  bool case_sensitive = false;
  int dev_size = 0;
  std::string dev_out;
  std::uint64_t seed = 1;
};

void RunProject(const ProjectArgs& a) {
  RunManifest m("project");
  m.SetFlag("case_sensitive", a.case_sensitive);
  m.SetFlag("order", a.order);
  m.SetFlag("jobs", a.common.jobs);
  m.SetFlag("dev_size", a.dev_size);
  if (a.pairs.empty() == a.headlines.empty())
    throw UsageError("project: give exactly one of --pairs or --headlines");
  if (a.dev_size > 0 && a.dev_out.empty()) throw UsageError("project: --dev-size needs --dev-out");
  Treebank leads = ReadTreebank(a.sentences, m, a.common);
  std::vector<HeadlinePair> pairs;
  if (!a.pairs.empty()) {
    m.AddInput(a.pairs);
    pairs = JoinPairs(ReadPairsTsv(a.pairs), leads);
  } else {
    pairs = JoinPairs(ReadTreebank(a.headlines, m, a.common), leads);
  }
  SilverOptions opts;
  opts.case_sensitive = a.case_sensitive;
  opts.jobs = a.common.jobs;
  opts.order = a.order == "closest" ? CollapseOrder::kClosestToRoot : CollapseOrder::kReferenceDfs;
  SilverCorpus silver = BuildSilverCorpus(pairs, opts);

  Treebank train = std::move(silver.treebank);
  if (a.dev_size > 0) {
    m.SetSeed(a.seed);
    auto [rest, dev] = HoldOut(train, a.dev_size, a.seed);
    train = std::move(rest);
    WriteTreebank(dev, a.dev_out, m);
  }
  WriteTreebank(train, a.out, m);
  const std::string report = a.report.empty() ? a.out + ".report.json" : a.report;
  WriteJson(Versioned(ToJson(silver.report)), report, m);

  const SilverReport& r = silver.report;
  std::cerr << "project: " << r.total << " pairs, " << r.kept << " projected, " << r.dropped
            << " not alignable, " << r.errors << " errors\n"
            << "project: " << r.trees_with_collapse << " trees needed collapsing ("
            << r.total_collapsed << " nodes), " << r.non_projective << " non-projective\n";
  if (a.dev_size > 0)
    std::cerr << "project: held out " << a.dev_size << " trees to " << a.dev_out << '\n';
  m.Write(ManifestPath(a.common, a.out));
}

// train -------------------------------------------------------------------

struct TrainArgs {
  Common common;
  std::vector<std::string> stages;
  std::string out;
  std::uint64_t seed = 1;
};

void RunTrain(const TrainArgs& a) {
  RunManifest m("train");
  m.SetSeed(a.seed);
  m.SetFlag("stages", a.stages);
  std::vector<TrainingStage> stages;
  for (const auto& spec : a.stages) {
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos || colon == 0)
      throw UsageError("train: --stage expects path[+path]:epochs, got '" + spec + "'");
    int epochs = 0;
    try {
      size_t used = 0;
      epochs = std::stoi(spec.substr(colon + 1), &used);
      if (used != spec.size() - colon - 1) epochs = 0;
    } catch (const std::exception&) {
      epochs = 0;
    }
    if (epochs < 1) throw UsageError("train: bad epoch count in '" + spec + "'");
    TrainingStage stage;
    stage.epochs = epochs;
    std::stringstream paths(spec.substr(0, colon));
    for (std::string path; std::getline(paths, path, '+');) {
      Treebank tb = ReadTreebank(path, m, a.common);
      for (auto& t : tb.trees) stage.treebank.trees.push_back(std::move(t));
    }
    stage.treebank.source_name = spec.substr(0, colon);
    stages.push_back(std::move(stage));
  }
  ParserModel model = Train(stages, {.seed = a.seed});
  model.SaveFile(a.out);
  m.AddOutput(a.out);
  for (const auto& s : model.meta().stages)
    std::cerr << "train: stage " << s.name << ": " << s.trees << " trees x " << s.epochs
              << " epochs, " << s.skipped_nonprojective << " non-projective skipped\n";
  std::cerr << "train: " << model.meta().updates << " updates, " << model.feature_count()
            << " features, " << model.labels().size() << " labels\n";
  m.Write(ManifestPath(a.common, a.out));
}

// parse -------------------------------------------------------------------

struct ParseArgs {
  Common common;
  std::string model, input, out;
};

void RunParse(const ParseArgs& a) {
  RunManifest m("parse");
  m.SetFlag("jobs", a.common.jobs);
  m.AddInput(a.model);
  ParserModel model = ParserModel::LoadFile(a.model);
  m.SetSeed(model.meta().seed);
  Treebank input = ReadTreebank(a.input, m, a.common);
  Treebank out = ParseTreebank(model, input, a.common.jobs);
  WriteTreebank(out, a.out, m);
  std::cerr << "parse: " << out.size() << " sentences, " << out.token_count() << " tokens\n";
  m.Write(ManifestPath(a.common, a.out));
}

// ensemble ----------------------------------------------------------------

struct EnsembleArgs {
  Common common;
  std::vector<std::string> inputs;
  std::vector<double> weights;
  std::string out;
  bool force_single_root = false;
};

void RunEnsemble(const EnsembleArgs& a) {
  RunManifest m("ensemble");
  m.SetFlag("force_single_root", a.force_single_root);
  m.SetFlag("weights", a.weights);
  m.SetFlag("jobs", a.common.jobs);
  if (!a.weights.empty() && a.weights.size() != a.inputs.size())
    throw UsageError("ensemble: --weights needs one value per --input");
  std::vector<Treebank> banks;
  for (const auto& p : a.inputs) banks.push_back(ReadTreebank(p, m, a.common));
  ReparseOptions opts{.force_single_root = a.force_single_root};
  Treebank out = EnsembleTreebanks(banks, opts, a.weights, a.common.jobs);
  WriteTreebank(out, a.out, m);

  int multi_root = 0;
  if (!a.force_single_root) {
    for (int s = 0; s < out.size(); ++s) {
      std::vector<DepTree> voters;
      for (const auto& b : banks) voters.push_back(b.trees[s]);
      auto heads = ReparseVotes(BuildVotes(voters, a.weights)).heads;
      multi_root += std::count(heads.begin(), heads.end(), 0) > 1;
    }
  }
  std::cerr << "ensemble: " << banks.size() << " voters, " << out.size() << " sentences";
  if (multi_root > 0)
    std::cerr << ", " << multi_root << " reparsed with a single root";
  std::cerr << '\n';
  m.Write(ManifestPath(a.common, a.out));
}

// eval --------------------------------------------------------------------

struct EvalArgs {
  Common common;
  std::string pred, gold, json_out, rer_against;
  bool exclude_punct = false, coarse_labels = false;
};

void RunEval(const EvalArgs& a) {
  RunManifest m("eval");
  m.SetFlag("exclude_punct", a.exclude_punct);
  m.SetFlag("coarse_labels", a.coarse_labels);
  Treebank pred = ReadTreebank(a.pred, m, a.common);
  Treebank gold = ReadTreebank(a.gold, m, a.common);
  ScoreOptions opts{.exclude_punct = a.exclude_punct, .coarse_labels = a.coarse_labels};
  EvalReport r = Score(pred, gold, opts);
  json j = ToJson(r);
  if (!a.rer_against.empty()) {
    EvalReport base = Score(ReadTreebank(a.rer_against, m, a.common), gold, opts);
    j["baseline"] = ToJson(base);
    j["relative_error_reduction"] = ToJson(RelativeErrorReduction(base, r));
    std::cerr << std::fixed << std::setprecision(2) << "eval: baseline LAS " << base.las << '\n';
  }
  if (!a.json_out.empty()) WriteJson(Versioned(j), a.json_out, m);
  std::cerr << std::fixed << std::setprecision(2) << "eval: " << r.sentence_count
            << " sentences, " << r.token_count << " tokens\n"
            << "UAS " << r.uas << "  LAS " << r.las << "  UEM " << r.uem << "  LEM " << r.lem
            << '\n';
  m.Write(ManifestPath(a.common, a.json_out));
}

// stats -------------------------------------------------------------------

struct StatsArgs {
  Common common;
  std::vector<std::string> inputs;
  std::vector<std::string> exclude = {"punct", "root"};
  std::string json_out, tsv_out;
  bool fine_labels = false;
  double min_share = 0.02;
};

void RunStats(const StatsArgs& a) {
  RunManifest m("stats");
  m.SetFlag("exclude", a.exclude);
  m.SetFlag("fine_labels", a.fine_labels);
  m.SetFlag("min_share", a.min_share);
  DistributionOptions dopts;
  dopts.exclude = {a.exclude.begin(), a.exclude.end()};
  dopts.coarse_labels = !a.fine_labels;
  json corpora = json::array();
  std::vector<RelationDistribution> dists;
  for (const auto& p : a.inputs) {
    Treebank tb = ReadTreebank(p, m, a.common);
    CorpusSummary s = SummarizeCorpus(tb);
    dists.push_back(ComputeRelationDistribution(tb, dopts));
    corpora.push_back({{"path", p}, {"summary", ToJson(s)}, {"distribution", ToJson(dists.back())}});
    std::cerr << p << ": " << s.sentences << " sentences, " << s.tokens << " tokens";
    if (s.mean_length) std::cerr << ", mean length " << std::fixed << std::setprecision(2) << *s.mean_length;
    std::cerr << '\n';
  }
  json j = {{"corpora", corpora}};
  if (dists.size() >= 2) {
    DistributionTable t = CompareDistributions(dists, a.min_share);
    j["comparison"] = ToJson(t);
    if (!a.tsv_out.empty()) {
      std::ofstream out(a.tsv_out);
      if (!out) throw std::runtime_error("cannot write " + a.tsv_out);
      out << "label";
      for (const auto& c : t.corpora) out << '\t' << c;
      out << '\n';
      for (const auto& row : t.rows) {
        out << row.label;
        for (double s : row.shares) out << '\t' << std::setprecision(6) << s;
        out << '\n';
      }
      m.AddOutput(a.tsv_out);
    }
  } else if (!a.tsv_out.empty()) {
    throw UsageError("stats: --tsv compares corpora and needs two or more --input");
  }
  if (!a.json_out.empty()) WriteJson(Versioned(j), a.json_out, m);
  m.Write(ManifestPath(a.common, a.json_out));
}

// extract / diff-extract --------------------------------------------------

struct ExtractArgs {
  Common common;
  std::string input, out;
};

void RunExtract(const ExtractArgs& a) {
  RunManifest m("extract");
  Treebank tb = ReadTreebank(a.input, m, a.common);
  std::vector<json> rows;
  for (const auto& tuples : ExtractAll(tb))
    for (const auto& t : tuples) rows.push_back(ToJson(t));
  WriteJsonLines(rows, a.out, m);
  std::cerr << "extract: " << rows.size() << " tuples from " << tb.size() << " sentences\n";
  m.Write(ManifestPath(a.common, a.out));
}

struct DiffArgs {
  Common common;
  std::string a, b, out;
};

void RunDiff(const DiffArgs& a) {
  RunManifest m("diff-extract");
  auto ta = ExtractAll(ReadTreebank(a.a, m, a.common));
  auto tb = ExtractAll(ReadTreebank(a.b, m, a.common));
  auto diffs = DiffExtractions(ta, tb);
  std::vector<json> rows;
  for (const auto& d : diffs) rows.push_back(ToJson(d));
  WriteJsonLines(rows, a.out, m);
  std::cerr << "diff-extract: " << diffs.size() << " of " << ta.size()
            << " sentences have different tuples\n";
  m.Write(ManifestPath(a.common, a.out));
}

// ztest / kappa -----------------------------------------------------------

struct ZTestArgs {
  Common common;
  std::vector<int> a, b;
};

void RunZTest(const ZTestArgs& a) {
  RunManifest m("ztest");
  m.SetFlag("a", a.a);
  m.SetFlag("b", a.b);
  for (const auto* v : {&a.a, &a.b})
    if ((*v)[1] <= 0 || (*v)[0] < 0 || (*v)[0] > (*v)[1])
      throw UsageError("ztest: expected SUCCESSES TOTAL with 0 <= successes <= total, total > 0");
  ProportionTest t = TwoProportionTest(a.a[0], a.a[1], a.b[0], a.b[1]);
  json j = Versioned({{"z", t.z}, {"p_value", t.p_value}, {"degenerate", t.degenerate}});
  std::cout << j.dump() << '\n';
  m.Write(a.common.manifest_path);
}

struct KappaArgs {
  Common common;
  std::string a, b;
};

std::vector<std::string> ReadLabels(const std::string& path, RunManifest& m) {
  m.AddInput(path);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

void RunKappa(const KappaArgs& a) {
  RunManifest m("kappa");
  auto la = ReadLabels(a.a, m), lb = ReadLabels(a.b, m);
  Kappa k = CohenKappa(la, lb);
  json j = Versioned({{"kappa", k.defined ? json(k.kappa) : json(nullptr)},
                      {"observed", k.observed},
                      {"expected", k.expected},
                      {"items", la.size()}});
  std::cout << j.dump() << '\n';
  m.Write(a.common.manifest_path);
}

// gen-synthetic -----------------------------------------------------------

struct SynthArgs {
  Common common;
  std::string out_dir;
  int gold = 2000, aligned = 5000, test = 600;
  std::uint64_t seed = 1;
};

void RunSynth(const SynthArgs& a) {
  RunManifest m("gen-synthetic");
  m.SetSeed(a.seed);
  m.SetFlag("gold", a.gold);
  m.SetFlag("aligned", a.aligned);
  m.SetFlag("test", a.test);
  std::filesystem::create_directories(a.out_dir);
  const std::string dir = a.out_dir + "/";
  WriteTreebank(synth::GoldCorpus(a.gold, a.seed), dir + "gold.conllu", m);

  auto news = synth::NewsCorpusWithAligned(a.aligned, a.seed + 1);
  Treebank leads;
  std::vector<TsvPair> pairs;
  for (auto& n : news) {
    pairs.push_back({n.headline, n.lead.forms(), 0});
    leads.trees.push_back(std::move(n.lead));
  }
  WriteTreebank(leads, dir + "leads.conllu", m);
  WritePairsTsv(pairs, dir + "pairs.tsv");
  m.AddOutput(dir + "pairs.tsv");

  Treebank test;
  for (auto& n : synth::NewsCorpus(a.test, a.seed + 2)) test.trees.push_back(std::move(n.headline_gold));
  WriteTreebank(test, dir + "headlines-gold.conllu", m);
  std::cerr << "gen-synthetic: " << a.gold << " gold sentences, " << pairs.size()
            << " headline pairs, " << a.test << " gold headlines in " << a.out_dir << '\n';
  m.Write(a.common.manifest_path.empty() ? dir + "manifest.json" : a.common.manifest_path);
}

int Main(int argc, char** argv) {
  CLI::App app{"Headline treebank toolkit: projection, parsing, ensembling and evaluation"};
  app.set_version_flag("--version", std::string(HLPARSE_VERSION));
  app.require_subcommand(1);
  std::function<void()> run;

  AlignArgs align;
  auto* c = app.add_subcommand("align", "Align headlines to lead sentences as subsequences");
  c->add_option("--pairs", align.pairs, "Pairs TSV (headline<TAB>lead)")->required()->check(CLI::ExistingFile);
  c->add_option("--out", align.out, "Alignments, one JSON object per line")->required();
  c->add_flag("--case-sensitive", align.case_sensitive, "Match tokens exactly");
  AddCommon(c, align.common, false);
  c->callback([&] { run = [&] { RunAlign(align); }; });

  ProjectArgs project;
  c = app.add_subcommand("project", "Project lead-sentence trees onto headlines");
  c->add_option("--pairs", project.pairs, "Pairs TSV, line i matching lead tree i")->check(CLI::ExistingFile);
  c->add_option("--headlines", project.headlines, "Headlines as CoNLL-U, tree i matching lead tree i")
      ->check(CLI::ExistingFile);
  c->add_option("--sentences", project.sentences, "Parsed lead sentences (CoNLL-U)")
      ->required()->check(CLI::ExistingFile);
  c->add_option("--out", project.out, "Silver treebank")->required();
  c->add_option("--report", project.report, "JSON report (default: <out>.report.json)");
  c->add_option("--order", project.order, "Collapse order")
      ->check(CLI::IsMember({"reference", "closest"}));
  c->add_flag("--case-sensitive", project.case_sensitive, "Match tokens exactly");
  c->add_option("--dev-size", project.dev_size, "Trees to hold out as a development set")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--dev-out", project.dev_out, "Where to write the held-out trees");
  c->add_option("--seed", project.seed, "Seed for the held-out sample");
  AddCommon(c, project.common, true);
  c->callback([&] { run = [&] { RunProject(project); }; });

  TrainArgs train;
  c = app.add_subcommand("train", "Train the transition parser");
  c->add_option("--stage", train.stages, "Training stage path[+path]:epochs, in order")->required();
  c->add_option("--seed", train.seed, "Shuffle seed");
  c->add_option("-o,--out", train.out, "Model file")->required();
  AddCommon(c, train.common, false);
  c->callback([&] { run = [&] { RunTrain(train); }; });

  ParseArgs parse;
  c = app.add_subcommand("parse", "Parse CoNLL-U input (forms and UPOS are read)");
  c->add_option("--model", parse.model, "Model file")->required()->check(CLI::ExistingFile);
  c->add_option("--input", parse.input, "Input CoNLL-U")->required()->check(CLI::ExistingFile);
  c->add_option("--out", parse.out, "Parsed CoNLL-U")->required();
  AddCommon(c, parse.common, true);
  c->callback([&] { run = [&] { RunParse(parse); }; });

  EnsembleArgs ens;
  c = app.add_subcommand("ensemble", "Reparse k parallel parses by arc voting");
  c->add_option("--input", ens.inputs, "Parallel CoNLL-U file (repeat)")->required()->check(CLI::ExistingFile);
  c->add_option("--weights", ens.weights, "Per-input vote weights")->delimiter(',');
  c->add_flag("--force-single-root", ens.force_single_root, "Allow one root dependent only");
  c->add_option("--out", ens.out, "Ensembled CoNLL-U")->required();
  AddCommon(c, ens.common, true);
  c->callback([&] { run = [&] { RunEnsemble(ens); }; });

  EvalArgs ev;
  c = app.add_subcommand("eval", "Score predictions against gold");
  c->add_option("--pred", ev.pred, "Predicted CoNLL-U")->required()->check(CLI::ExistingFile);
  c->add_option("--gold", ev.gold, "Gold CoNLL-U")->required()->check(CLI::ExistingFile);
  c->add_flag("--exclude-punct", ev.exclude_punct, "Skip tokens whose gold UPOS is PUNCT");
  c->add_flag("--coarse-labels", ev.coarse_labels, "Strip label subtypes before comparing");
  c->add_option("--rer-against", ev.rer_against,
                "Baseline predictions; adds per-relation relative error reduction")
      ->check(CLI::ExistingFile);
  c->add_option("--json", ev.json_out, "JSON report");
  AddCommon(c, ev.common, false);
  c->callback([&] { run = [&] { RunEval(ev); }; });

  StatsArgs st;
  c = app.add_subcommand("stats", "Corpus summaries and relation distributions");
  c->add_option("--input", st.inputs, "CoNLL-U file (repeat)")->required()->check(CLI::ExistingFile);
  c->add_option("--exclude", st.exclude, "Labels left out of distributions")->delimiter(',');
  c->add_flag("--fine-labels", st.fine_labels, "Keep label subtypes");
  c->add_option("--min-share", st.min_share, "Comparison rows need this share somewhere")
      ->check(CLI::Range(0.0, 1.0));
  c->add_option("--json", st.json_out, "JSON report");
  c->add_option("--tsv", st.tsv_out, "Comparison table as TSV");
  AddCommon(c, st.common, false);
  c->callback([&] { run = [&] { RunStats(st); }; });

  ExtractArgs ex;
  c = app.add_subcommand("extract", "Predicate-argument tuples from UD trees");
  c->add_option("--input", ex.input, "CoNLL-U")->required()->check(CLI::ExistingFile);
  c->add_option("--out", ex.out, "Tuples, one JSON object per line")->required();
  AddCommon(c, ex.common, false);
  c->callback([&] { run = [&] { RunExtract(ex); }; });

  DiffArgs df;
  c = app.add_subcommand("diff-extract", "Sentences whose tuples differ between two parses");
  c->add_option("--a", df.a, "First CoNLL-U")->required()->check(CLI::ExistingFile);
  c->add_option("--b", df.b, "Second CoNLL-U")->required()->check(CLI::ExistingFile);
  c->add_option("--out", df.out, "Differences, one JSON object per line")->required();
  AddCommon(c, df.common, false);
  c->callback([&] { run = [&] { RunDiff(df); }; });

  ZTestArgs zt;
  c = app.add_subcommand("ztest", "Two-proportion z-test");
  c->add_option("--a", zt.a, "SUCCESSES TOTAL of system A")->required()->expected(2);
  c->add_option("--b", zt.b, "SUCCESSES TOTAL of system B")->required()->expected(2);
  AddCommon(c, zt.common, false);
  c->callback([&] { run = [&] { RunZTest(zt); }; });

  KappaArgs kp;
  c = app.add_subcommand("kappa", "Cohen's kappa over two label files (one label per line)");
  c->add_option("--a", kp.a, "Annotator A labels")->required()->check(CLI::ExistingFile);
  c->add_option("--b", kp.b, "Annotator B labels")->required()->check(CLI::ExistingFile);
  AddCommon(c, kp.common, false);
  c->callback([&] { run = [&] { RunKappa(kp); }; });

  SynthArgs sy;
  c = app.add_subcommand("gen-synthetic", "Write a seeded synthetic gold/lead/headline corpus");
  c->add_option("--out-dir", sy.out_dir, "Output directory")->required();
  c->add_option("--gold", sy.gold, "Full-sentence gold trees")->check(CLI::PositiveNumber);
  c->add_option("--aligned", sy.aligned, "Generate pairs until this many are alignable by construction")->check(CLI::PositiveNumber);
  c->add_option("--test", sy.test, "Gold headline trees")->check(CLI::PositiveNumber);
  c->add_option("--seed", sy.seed, "Generator seed");
  AddCommon(c, sy.common, false);
  c->callback([&] { run = [&] { RunSynth(sy); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    run();
  } catch (const UsageError& e) {
    std::cerr << "hlparse: usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hlparse: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace
}  // namespace hlparse::cli

int main(int argc, char** argv) { return hlparse::cli::Main(argc, argv); }
