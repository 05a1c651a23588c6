#include "doctest.h"
#include "hlparse/errors.h"
#include "hlparse/openie.h"

namespace hlparse {
namespace {

DepTree Tree(const std::vector<std::string>& forms, const std::vector<std::string>& upos,
             const std::vector<int>& heads, const std::vector<std::string>& rels) {
  std::vector<Token> toks;
  for (size_t i = 0; i < forms.size(); ++i) {
    Token t;
    t.id = static_cast<int>(i) + 1;
    t.form = forms[i];
    t.upos = upos[i];
    t.head = heads[i];
    t.deprel = rels[i];
    toks.push_back(t);
  }
  return DepTree::Validated(toks, {"# sent_id = h1"});
}

// JPMorgan to Cut 9,200 Jobs at Washington Mutual
DepTree JobsHeadline() {
  return Tree({"JPMorgan", "to", "Cut", "9,200", "Jobs", "at", "Washington", "Mutual"},
              {"PROPN", "PART", "VERB", "NUM", "NOUN", "ADP", "PROPN", "PROPN"},
              {3, 3, 0, 5, 3, 8, 8, 3},
              {"nsubj", "mark", "root", "nummod", "obj", "case", "compound", "obl"});
}

TEST_CASE("extract: to-VERB headline") {
  auto tuples = Extract(JobsHeadline());
  REQUIRE(tuples.size() == 1);
  const auto& t = tuples[0];
  CHECK(t.sent_id == "h1");
  CHECK(t.head == 3);
  CHECK(t.predicate_text == "to Cut");
  REQUIRE(t.arguments.size() == 3);
  CHECK(t.arguments[0].text == "JPMorgan");
  CHECK(t.arguments[0].rel == "nsubj");
  CHECK(t.arguments[1].text == "9,200 Jobs");
  CHECK(t.arguments[1].indices == std::vector<int>{4, 5});
  CHECK(t.arguments[2].text == "at Washington Mutual");
  CHECK(t.arguments[2].rel == "obl");
}

TEST_CASE("extract: copular clause") {
  // Economy is not strong
  DepTree t = Tree({"Economy", "is", "not", "strong"}, {"NOUN", "AUX", "PART", "ADJ"},
                   {4, 4, 4, 0}, {"nsubj", "cop", "advmod", "root"});
  auto tuples = Extract(t);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0].head == 4);
  CHECK(tuples[0].predicate_text == "is not strong");
  REQUIRE(tuples[0].arguments.size() == 1);
  CHECK(tuples[0].arguments[0].text == "Economy");
}

TEST_CASE("extract: no predicate") {
  DepTree t = Tree({"Obituaries"}, {"NOUN"}, {0}, {"root"});
  CHECK(Extract(t).empty());
  CHECK(Extract(t, "x").empty());
}

TEST_CASE("extract: explicit sent_id wins") {
  CHECK(Extract(JobsHeadline(), "other")[0].sent_id == "other");
}

TEST_CASE("diff extractions") {
  // Same words, but the parse attaches "at Washington Mutual" to Jobs.
  DepTree alt = Tree({"JPMorgan", "to", "Cut", "9,200", "Jobs", "at", "Washington", "Mutual"},
                     {"PROPN", "PART", "VERB", "NUM", "NOUN", "ADP", "PROPN", "PROPN"},
                     {3, 3, 0, 5, 3, 8, 8, 5},
                     {"nsubj", "mark", "root", "nummod", "obj", "case", "compound", "nmod"});
  std::vector<std::vector<ExtractionTuple>> a = {Extract(JobsHeadline()), Extract(JobsHeadline())};
  std::vector<std::vector<ExtractionTuple>> b = {Extract(JobsHeadline()), Extract(alt)};
  auto d = DiffExtractions(a, b);
  REQUIRE(d.size() == 1);
  CHECK(d[0].sentence_index == 1);
  CHECK(d[0].sent_id == "h1");
  REQUIRE(d[0].only_a.size() == 1);
  REQUIRE(d[0].only_b.size() == 1);
  CHECK(d[0].only_b[0].arguments[1].text == "9,200 Jobs at Washington Mutual");

  auto rev = DiffExtractions(b, a);
  REQUIRE(rev.size() == 1);
  CHECK(rev[0].only_a == d[0].only_b);
  CHECK(rev[0].only_b == d[0].only_a);
  CHECK(DiffExtractions(a, a).empty());

  std::vector<std::vector<ExtractionTuple>> shorter = {Extract(alt)};
  CHECK_THROWS_AS(DiffExtractions(a, shorter), ContractError);
}

}  // namespace
}  // namespace hlparse
