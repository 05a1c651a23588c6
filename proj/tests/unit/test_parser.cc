#include <random>
#include <sstream>

#include "doctest.h"
#include "hlparse/errors.h"
#include "hlparse/eval.h"
#include "hlparse/parser.h"
#include "random_trees.h"

namespace hlparse {
namespace {

DepTree Tree(const std::vector<int>& heads, const std::vector<std::string>& rels) {
  std::vector<Token> toks;
  for (size_t i = 0; i < heads.size(); ++i) {
    Token t;
    t.id = static_cast<int>(i) + 1;
    t.form = "w" + std::to_string(i + 1);
    t.upos = "X";
    t.head = heads[i];
    t.deprel = rels[i];
    toks.push_back(t);
  }
  return DepTree::Validated(toks);
}

// Random projective tree with word-like forms and tags so that a model can
// tell the tokens apart.
DepTree ToyTree(int n, std::mt19937_64& rng) {
  static const std::vector<std::string> labels = {"nsubj", "obj", "det", "amod", "obl", "case"};
  static const std::vector<std::string> tags = {"NOUN", "VERB", "DET", "ADJ", "ADP"};
  DepTree t = testing::RandomProjectiveTree(n, rng, labels);
  std::vector<Token> toks = t.tokens();
  for (auto& tok : toks) {
    tok.form = "tok" + std::to_string(rng() % 1000);
    tok.upos = tags[rng() % tags.size()];
  }
  return DepTree::Validated(toks);
}

Treebank ToyBank(int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Treebank tb;
  for (int i = 0; i < size; ++i) tb.trees.push_back(ToyTree(2 + static_cast<int>(rng() % 7), rng));
  return tb;
}

TEST_CASE("static oracle") {
  SUBCASE("two tokens") {
    auto seq = StaticOracle(Tree({2, 0}, {"nsubj", "root"}));
    REQUIRE(seq.has_value());
    CHECK(*seq == std::vector<Transition>{{Move::kShift, ""},
                                          {Move::kShift, ""},
                                          {Move::kLeftArc, "nsubj"},
                                          {Move::kRightArc, "root"}});
  }
  SUBCASE("crossing arcs") {
    // 1 -> 3 and 2 -> 4 cross.
    CHECK_FALSE(StaticOracle(Tree({0, 1, 1, 2}, {"root", "a", "b", "c"})).has_value());
    CHECK_FALSE(StaticOracle(Tree({0, 4, 1, 1}, {"root", "a", "b", "c"})).has_value());
  }
  SUBCASE("replay reconstructs random projective trees") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
      int n = 1 + static_cast<int>(rng() % 8);
      DepTree t = testing::RandomProjectiveTree(n, rng, testing::DefaultLabels());
      REQUIRE(IsProjective(t));
      auto seq = StaticOracle(t);
      REQUIRE(seq.has_value());
      CHECK(seq->size() == static_cast<size_t>(2 * n));
      Configuration c(n);
      for (const auto& tr : *seq) {
        REQUIRE(c.CanApply(tr));
        c.Apply(tr);
      }
      CHECK(c.terminal());
      CHECK(c.heads() == t.heads());
      std::vector<std::string> labels;
      for (const auto& tok : t.tokens()) labels.push_back(tok.deprel);
      CHECK(c.labels() == labels);
    }
  }
  SUBCASE("oracle exists exactly for projective trees") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
      DepTree t = testing::RandomTree(1 + static_cast<int>(rng() % 8), rng, testing::DefaultLabels());
      CHECK(StaticOracle(t).has_value() == IsProjective(t));
    }
  }
}

TEST_CASE("configuration rules") {
  Configuration c(2);
  CHECK_FALSE(c.CanLeftArc());
  CHECK_FALSE(c.CanRightArc());
  c.Apply({Move::kShift, ""});
  // The root may only take a dependent once the buffer is empty.
  CHECK_FALSE(c.CanRightArc());
  CHECK_THROWS_AS(c.Apply({Move::kRightArc, "root"}), ContractError);
  c.Apply({Move::kShift, ""});
  CHECK(c.CanLeftArc());
  CHECK(c.CanRightArc());
}

TEST_CASE("training memorizes a small treebank") {
  Treebank tb = ToyBank(10, 5);
  std::vector<TrainingStage> stages = {{tb, 10}};
  ParserModel m = Train(stages, {.seed = 3});
  Treebank parsed = ParseTreebank(m, tb);
  EvalReport r = Score(parsed, tb);
  CHECK(r.las == 100.0);
  CHECK(m.meta().iterations == 10);
  REQUIRE(m.meta().stages.size() == 1);
  CHECK(m.meta().stages[0].trees == 10);
  CHECK(m.meta().stages[0].fingerprint == Fingerprint(tb));
}

TEST_CASE("training skips non-projective trees") {
  Treebank tb = ToyBank(5, 6);
  tb.trees.push_back(Tree({0, 1, 1, 2}, {"root", "a", "b", "c"}));
  std::vector<TrainingStage> stages = {{tb, 2}};
  ParserModel m = Train(stages);
  CHECK(m.meta().stages[0].skipped_nonprojective == 1);
  CHECK(m.meta().stages[0].trees == 5);

  Treebank bad;
  bad.trees.push_back(Tree({0, 1, 1, 2}, {"root", "a", "b", "c"}));
  std::vector<TrainingStage> only_bad = {{bad, 2}};
  CHECK_THROWS_AS(Train(only_bad), ContractError);
  CHECK_THROWS_AS(Train(std::span<const TrainingStage>{}), ContractError);
}

TEST_CASE("training is deterministic") {
  Treebank gold = ToyBank(40, 8), silver = ToyBank(40, 9);
  std::vector<TrainingStage> stages = {{gold, 3}, {silver, 2}};
  ParserModel a = Train(stages, {.seed = 11});
  ParserModel b = Train(stages, {.seed = 11});
  std::ostringstream sa, sb;
  a.Save(sa);
  b.Save(sb);
  CHECK(sa.str() == sb.str());
  ParserModel c = Train(stages, {.seed = 12});
  std::ostringstream sc;
  c.Save(sc);
  CHECK(sa.str() != sc.str());
  CHECK(a.meta().stages.size() == 2);
  CHECK(a.meta().iterations == 5);
}

TEST_CASE("model files") {
  Treebank tb = ToyBank(20, 10);
  std::vector<TrainingStage> stages = {{tb, 3}};
  ParserModel m = Train(stages, {.seed = 4});
  std::ostringstream out;
  m.Save(out);
  const std::string text = out.str();

  SUBCASE("round trip") {
    std::istringstream in(text);
    ParserModel back = ParserModel::Load(in);
    CHECK(back == m);
    std::ostringstream again;
    back.Save(again);
    CHECK(again.str() == text);
    CHECK(ParseTreebank(back, tb).trees[0].tokens() == ParseTreebank(m, tb).trees[0].tokens());
  }
  SUBCASE("template version mismatch") {
    std::string other = text;
    other.replace(other.find("arcstd-v1"), 9, "arcstd-v0");
    std::istringstream in(other);
    CHECK_THROWS_AS(ParserModel::Load(in), FormatError);
  }
  SUBCASE("bad magic") {
    std::istringstream in("not-a-model\n" + text);
    CHECK_THROWS_AS(ParserModel::Load(in), FormatError);
  }
  SUBCASE("truncated") {
    for (double frac : {0.1, 0.5, 0.9}) {
      std::istringstream in(text.substr(0, static_cast<size_t>(text.size() * frac)));
      CHECK_THROWS_AS(ParserModel::Load(in), FormatError);
    }
  }
}

TEST_CASE("parse output") {
  Treebank tb = ToyBank(30, 12);
  std::vector<TrainingStage> stages = {{tb, 2}};
  ParserModel m = Train(stages);
  SUBCASE("single token is the root") {
    std::vector<std::string> f = {"Hello"}, u = {"INTJ"};
    DepTree t = Parse(m, f, u);
    CHECK(t.head(1) == 0);
    CHECK(t.token(1).deprel == "root");
  }
  SUBCASE("always valid, projective, known labels, repeatable") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      DepTree s = testing::RandomTree(1 + static_cast<int>(rng() % 15), rng, testing::DefaultLabels());
      DepTree a = Parse(m, s);
      CHECK(Validate(a).empty());
      CHECK(IsProjective(a));
      for (const auto& tok : a.tokens())
        CHECK(std::find(m.labels().begin(), m.labels().end(), tok.deprel) != m.labels().end());
      CHECK(Parse(m, s).tokens() == a.tokens());
    }
  }
  SUBCASE("parallel parsing matches serial") {
    Treebank one = ParseTreebank(m, tb, 1), four = ParseTreebank(m, tb, 4);
    for (int i = 0; i < tb.size(); ++i) CHECK(one.trees[i].tokens() == four.trees[i].tokens());
  }
}

TEST_CASE("hold out") {
  Treebank tb = ToyBank(50, 14);
  auto [rest, held] = HoldOut(tb, 10, 7);
  CHECK(rest.size() == 40);
  CHECK(held.size() == 10);
  auto [rest2, held2] = HoldOut(tb, 10, 7);
  for (int i = 0; i < 10; ++i) CHECK(held.trees[i].tokens() == held2.trees[i].tokens());
  CHECK_THROWS_AS(HoldOut(tb, 51, 7), ContractError);
}

}  // namespace
}  // namespace hlparse
