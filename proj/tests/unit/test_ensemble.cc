#include <algorithm>
#include <random>

#include "brute_force.h"
#include "doctest.h"
#include "hlparse/ensemble.h"
#include "hlparse/errors.h"
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

// Random tree over forms w1..wn so that independent draws share tokens.
DepTree RandomOver(int n, std::mt19937_64& rng) {
  static const std::vector<std::string> labels = {"a", "b", "c"};
  return testing::RandomTree(n, rng, labels);
}

TEST_CASE("ensemble of identical trees returns the tree") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    DepTree t = RandomOver(1 + static_cast<int>(rng() % 9), rng);
    for (int k : {1, 2, 5}) {
      std::vector<DepTree> copies(k, t);
      DepTree e = EnsembleTrees(copies);
      CHECK(e.heads() == t.heads());
      for (int i = 1; i <= t.size(); ++i) CHECK(e.token(i).deprel == t.token(i).deprel);
    }
  }
}

TEST_CASE("majority arcs win") {
  DepTree a = Tree({2, 0, 2}, {"nsubj", "root", "obj"});
  DepTree b = Tree({3, 3, 0}, {"nsubj", "dep", "root"});
  std::vector<DepTree> trees = {a, a, b};
  Reparse r = ReparseVotes(BuildVotes(trees));
  CHECK(r.heads == a.heads());
  CHECK(r.total_weight == doctest::Approx(6.0));
}

TEST_CASE("labels: plurality, ties to the smallest label") {
  DepTree a = Tree({2, 0}, {"obj", "root"});
  DepTree b = Tree({2, 0}, {"nsubj", "root"});
  DepTree c = Tree({2, 0}, {"obj", "root"});
  std::vector<DepTree> three = {a, b, c};
  CHECK(EnsembleTrees(three).token(1).deprel == "obj");
  std::vector<DepTree> two = {a, b};
  CHECK(EnsembleTrees(two).token(1).deprel == "nsubj");
}

TEST_CASE("vote weights") {
  DepTree a = Tree({2, 0}, {"x", "root"});
  DepTree b = Tree({0, 1}, {"root", "x"});
  std::vector<DepTree> trees = {a, b, b};
  CHECK(EnsembleTrees(trees).heads() == b.heads());
  std::vector<double> w = {3.0, 1.0, 1.0};
  CHECK(EnsembleTrees(trees, {}, w).heads() == a.heads());
  std::vector<double> bad = {1.0};
  CHECK_THROWS_AS(BuildVotes(trees, bad), ContractError);
}

TEST_CASE("reparse is optimal against brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int k = 1 + static_cast<int>(rng() % 5);
    std::vector<DepTree> trees;
    for (int i = 0; i < k; ++i) trees.push_back(RandomOver(n, rng));
    VoteGraph votes = BuildVotes(trees);
    for (bool single : {false, true}) {
      Reparse r = ReparseVotes(votes, {.force_single_root = single});
      auto oracle = testing::BruteForceMaxArborescence(votes, single);
      CHECK(testing::ReachesRoot(r.heads));
      CHECK(r.total_weight == doctest::Approx(oracle.best_weight));
      CHECK(TreeWeight(votes, r.heads) == doctest::Approx(oracle.best_weight));
      if (single) CHECK(std::count(r.heads.begin(), r.heads.end(), 0) == 1);
    }
  }
}

TEST_CASE("reparse does not depend on voter order") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<DepTree> trees;
    for (int i = 0; i < 4; ++i) trees.push_back(RandomOver(n, rng));
    DepTree first = EnsembleTrees(trees);
    std::shuffle(trees.begin(), trees.end(), rng);
    DepTree second = EnsembleTrees(trees);
    CHECK(first.heads() == second.heads());
    CHECK(first.tokens() == second.tokens());
  }
}

TEST_CASE("forced single root") {
  VoteGraph v;
  v.n = 2;
  v.voters = 2;
  v.weights.assign(9, 0.0);
  v.weights[0 * 3 + 1] = 2;
  v.weights[0 * 3 + 2] = 2;
  v.weights[1 * 3 + 2] = 1;
  Reparse free = ReparseVotes(v);
  CHECK(free.heads == std::vector<int>{0, 0});
  CHECK(free.total_weight == 4.0);
  Reparse forced = ReparseVotes(v, {.force_single_root = true});
  CHECK(forced.heads == std::vector<int>{0, 1});
  CHECK(forced.total_weight == 3.0);
}

TEST_CASE("ensembled trees always have one root") {
  // Each voter roots a different word; both two-root and chain trees weigh
  // 2 and the tie favours the root as head.
  DepTree a = Tree({0, 1}, {"root", "x"});
  DepTree b = Tree({2, 0}, {"x", "root"});
  std::vector<DepTree> trees = {a, b};
  CHECK(ReparseVotes(BuildVotes(trees)).heads == std::vector<int>{0, 0});
  DepTree e = EnsembleTrees(trees);
  auto heads = e.heads();
  CHECK(std::count(heads.begin(), heads.end(), 0) == 1);
  CHECK(Validate(e).empty());
}

TEST_CASE("mismatched voters") {
  DepTree a = Tree({0}, {"root"});
  DepTree b = Tree({2, 0}, {"x", "root"});
  std::vector<DepTree> trees = {a, b};
  CHECK_THROWS_AS(BuildVotes(trees), ContractError);
  CHECK_THROWS_AS(BuildVotes(std::span<const DepTree>{}), ContractError);
}

TEST_CASE("treebank ensemble") {
  std::mt19937_64 rng(29);
  std::vector<Treebank> banks(3);
  std::vector<int> lengths = {3, 5, 1, 7};
  for (auto& b : banks)
    for (int n : lengths) b.trees.push_back(RandomOver(n, rng));
  Treebank out = EnsembleTreebanks(banks, {}, {}, 2);
  REQUIRE(out.size() == 4);
  for (int s = 0; s < 4; ++s) {
    std::vector<DepTree> trees = {banks[0].trees[s], banks[1].trees[s], banks[2].trees[s]};
    CHECK(out.trees[s].tokens() == EnsembleTrees(trees).tokens());
  }
}

}  // namespace
}  // namespace hlparse
