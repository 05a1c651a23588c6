#include "synth/synth.h"

#include <array>

namespace hlparse::synth {

namespace {

using Rng = std::mt19937_64;

template <typename T, size_t N>
const T& Pick(const std::array<T, N>& items, Rng& rng) {
  return items[rng() % N];
}

bool Chance(Rng& rng, int percent) { return static_cast<int>(rng() % 100) < percent; }

struct Noun {
  const char* singular;
  const char* plural;
};

constexpr std::array<Noun, 24> kAgents = {{
    {"man", "men"},          {"woman", "women"},     {"company", "companies"},
    {"court", "courts"},     {"council", "councils"}, {"bank", "banks"},
    {"school", "schools"},   {"teacher", "teachers"}, {"officer", "officers"},
    {"judge", "judges"},     {"city", "cities"},      {"mayor", "mayors"},
    {"senator", "senators"}, {"driver", "drivers"},   {"student", "students"},
    {"worker", "workers"},   {"union", "unions"},     {"team", "teams"},
    {"hospital", "hospitals"}, {"firm", "firms"},     {"minister", "ministers"},
    {"board", "boards"},     {"jury", "juries"},      {"suspect", "suspects"},
}};

constexpr std::array<Noun, 24> kThings = {{
    {"plan", "plans"},       {"deal", "deals"},         {"law", "laws"},
    {"tax", "taxes"},        {"budget", "budgets"},     {"job", "jobs"},
    {"bill", "bills"},       {"ban", "bans"},           {"fine", "fines"},
    {"contract", "contracts"}, {"report", "reports"},   {"proposal", "proposals"},
    {"lawsuit", "lawsuits"}, {"strike", "strikes"},     {"loan", "loans"},
    {"merger", "mergers"},   {"bonus", "bonuses"},      {"stake", "stakes"},
    {"site", "sites"},       {"rule", "rules"},         {"fee", "fees"},
    {"program", "programs"}, {"project", "projects"},   {"policy", "policies"},
}};

constexpr std::array<const char*, 10> kCompounds = {
    "state", "police", "health", "school", "city", "oil", "tax", "court", "union", "water"};

constexpr std::array<const char*, 12> kAdjectives = {
    "new", "local", "former", "big", "top", "federal", "major", "small", "rare", "old", "young",
    "private"};

constexpr std::array<const char*, 12> kPredicates = {
    "weak", "strong", "safe", "ready", "guilty", "optimistic", "unclear", "likely",
    "confident", "wary", "open", "stable"};

constexpr std::array<const char*, 10> kNumbers = {"two", "three", "five", "10", "300",
                                                  "9,200", "1,500", "40", "dozens", "100"};

constexpr std::array<const char*, 16> kFirst = {"John", "Mary", "David", "Sarah", "James", "Linda",
                                                "Robert", "Ana", "Michael", "Grace", "Peter",
                                                "Helen", "Omar", "Lucy", "Carlos", "Emma"};
constexpr std::array<const char*, 16> kLast = {"Smith", "Jones", "Brown", "Garcia", "Miller",
                                               "Davis", "Wilson", "Moore", "Taylor", "Clark",
                                               "Lewis", "Walker", "Hall", "Young", "King",
                                               "Lopez"};
constexpr std::array<std::pair<const char*, const char*>, 8> kOrgs = {{
    {"Washington", "Mutual"}, {"General", "Motors"}, {"Apex", "Bank"}, {"Delta", "Airlines"},
    {"Metro", "Transit"},     {"Union", "Pacific"},  {"Acme", "Corp"}, {"Harbor", "Health"},
}};
constexpr std::array<const char*, 10> kPlaces = {"Boston", "Texas", "Paris", "Ohio", "Chicago",
                                                 "Iraq", "London", "Denver", "Florida", "Tokyo"};
constexpr std::array<const char*, 4> kTwoWordPlaces = {"York", "Jersey", "Orleans", "Mexico"};

constexpr std::array<const char*, 7> kDays = {"Monday", "Tuesday", "Wednesday", "Thursday",
                                              "Friday", "Saturday", "Sunday"};

constexpr std::array<const char*, 6> kPreps = {"in", "at", "over", "after", "for", "near"};

struct Verb {
  const char* base;
  const char* s3;
  const char* past;
  const char* participle;
};

constexpr std::array<Verb, 24> kTransitive = {{
    {"arrest", "arrests", "arrested", "arrested"}, {"approve", "approves", "approved", "approved"},
    {"reject", "rejects", "rejected", "rejected"}, {"sign", "signs", "signed", "signed"},
    {"cut", "cuts", "cut", "cut"},                 {"hit", "hits", "hit", "hit"},
    {"sue", "sues", "sued", "sued"},               {"fire", "fires", "fired", "fired"},
    {"buy", "buys", "bought", "bought"},           {"sell", "sells", "sold", "sold"},
    {"win", "wins", "won", "won"},                 {"take", "takes", "took", "taken"},
    {"close", "closes", "closed", "closed"},       {"ban", "bans", "banned", "banned"},
    {"raise", "raises", "raised", "raised"},       {"charge", "charges", "charged", "charged"},
    {"name", "names", "named", "named"},           {"hire", "hires", "hired", "hired"},
    {"block", "blocks", "blocked", "blocked"},     {"seize", "seizes", "seized", "seized"},
    {"back", "backs", "backed", "backed"},         {"drop", "drops", "dropped", "dropped"},
    {"find", "finds", "found", "found"},           {"hold", "holds", "held", "held"},
}};

constexpr std::array<Verb, 8> kIntransitive = {{
    {"resign", "resigns", "resigned", "resigned"}, {"die", "dies", "died", "died"},
    {"rise", "rises", "rose", "risen"},            {"fall", "falls", "fell", "fallen"},
    {"quit", "quits", "quit", "quit"},             {"collapse", "collapses", "collapsed", "collapsed"},
    {"strike", "strikes", "struck", "struck"},     {"return", "returns", "returned", "returned"},
}};

enum class NpKind { kCommon, kPerson, kOrg, kPlace, kPronoun };

struct NounPhrase {
  NpKind kind = NpKind::kCommon;
  std::string det;       // "the" / "a" / "" (full sentences only)
  std::string number;    // nummod
  std::string adjective; // amod
  std::string compound;
  std::string noun;
  std::string first;     // person first name, org first word, place modifier
  bool plural = false;
};

NounPhrase CommonNp(Rng& rng, bool agent) {
  NounPhrase np;
  const Noun& n = agent ? Pick(kAgents, rng) : Pick(kThings, rng);
  np.plural = Chance(rng, agent ? 30 : 40);
  if (np.plural && !agent && Chance(rng, 40)) np.number = Pick(kNumbers, rng);
  np.noun = np.plural ? n.plural : n.singular;
  if (Chance(rng, 25)) np.adjective = Pick(kAdjectives, rng);
  if (Chance(rng, 20)) np.compound = Pick(kCompounds, rng);
  np.det = np.plural ? (Chance(rng, 50) ? "the" : "") : (Chance(rng, 65) ? "the" : "a");
  return np;
}

NounPhrase NamedNp(Rng& rng) {
  NounPhrase np;
  switch (rng() % 3) {
    case 0:
      np.kind = NpKind::kPerson;
      np.first = Pick(kFirst, rng);
      np.noun = Pick(kLast, rng);
      break;
    case 1: {
      np.kind = NpKind::kOrg;
      const auto& org = Pick(kOrgs, rng);
      np.first = org.first;
      np.noun = org.second;
      break;
    }
    default:
      np.kind = NpKind::kPlace;
      if (Chance(rng, 30)) {
        np.first = "New";
        np.noun = Pick(kTwoWordPlaces, rng);
      } else {
        np.noun = Pick(kPlaces, rng);
      }
  }
  return np;
}

NounPhrase SubjectNp(Rng& rng) { return Chance(rng, 35) ? NamedNp(rng) : CommonNp(rng, true); }
NounPhrase ObjectNp(Rng& rng) { return Chance(rng, 20) ? NamedNp(rng) : CommonNp(rng, false); }

NounPhrase PlaceNp(Rng& rng) {
  NounPhrase np = NamedNp(rng);
  if (np.kind == NpKind::kPerson) return CommonNp(rng, false);
  return np;
}

class Builder {
 public:
  int Add(std::string form, std::string upos) {
    Token t;
    t.id = static_cast<int>(tokens_.size()) + 1;
    t.form = std::move(form);
    t.upos = std::move(upos);
    t.head = -1;
    tokens_.push_back(std::move(t));
    return static_cast<int>(tokens_.size()) - 1;
  }
  // head -1 attaches to the virtual root.
  void Attach(int dep, int head, std::string rel) {
    tokens_[dep].head = head + 1;
    tokens_[dep].deprel = std::move(rel);
  }
  std::vector<std::string> Forms() const {
    std::vector<std::string> f;
    for (const auto& t : tokens_) f.push_back(t.form);
    return f;
  }
  DepTree Finish(const std::string& sent_id) {
    std::string text;
    for (const auto& t : tokens_) text += (text.empty() ? "" : " ") + t.form;
    return DepTree::Validated(tokens_, {"# sent_id = " + sent_id, "# text = " + text});
  }

 private:
  std::vector<Token> tokens_;
};

// Appends the phrase and returns its head; `full` keeps the determiner.
int AddNp(Builder& b, const NounPhrase& np, bool full) {
  switch (np.kind) {
    case NpKind::kPronoun:
      return b.Add(np.noun, "PRON");
    case NpKind::kPerson: {
      int first = b.Add(np.first, "PROPN");
      int last = b.Add(np.noun, "PROPN");
      b.Attach(last, first, "flat");
      return first;
    }
    case NpKind::kOrg:
    case NpKind::kPlace: {
      int mod = np.first.empty() ? -1 : b.Add(np.first, np.kind == NpKind::kOrg ? "PROPN" : "ADJ");
      int head = b.Add(np.noun, "PROPN");
      if (mod >= 0) b.Attach(mod, head, "compound");
      return head;
    }
    case NpKind::kCommon:
      break;
  }
  std::vector<std::pair<int, const char*>> deps;
  if (full && !np.det.empty()) deps.emplace_back(b.Add(np.det, "DET"), "det");
  if (!np.number.empty()) deps.emplace_back(b.Add(np.number, "NUM"), "nummod");
  if (!np.adjective.empty()) deps.emplace_back(b.Add(np.adjective, "ADJ"), "amod");
  if (!np.compound.empty()) deps.emplace_back(b.Add(np.compound, "NOUN"), "compound");
  int head = b.Add(np.noun, "NOUN");
  for (auto [d, rel] : deps) b.Attach(d, head, rel);
  return head;
}

void AddPp(Builder& b, const std::string& prep, const NounPhrase& np, bool full, int governor) {
  int c = b.Add(prep, "ADP");
  int h = AddNp(b, np, full);
  b.Attach(c, h, "case");
  b.Attach(h, governor, "obl");
}

enum class EventKind { kActive, kPassive, kFuture, kCopular, kIntransitive };

struct Event {
  EventKind kind = EventKind::kActive;
  NounPhrase subject;
  Verb verb{};
  NounPhrase object;
  std::string predicate;  // copular adjective
  bool has_agent = false;
  NounPhrase agent;
  bool has_pp = false;
  std::string prep;
  NounPhrase pp;
  int time = 0;          // 0 none, 1 "yesterday", 2 "on <day>"
  std::string day;
  bool present = false;  // lead sentence in present tense
  int future = 0;        // 0 "will", 1 "plans to", 2 "agreed to"
  bool headline_agent = false;
};

Event RandomEvent(Rng& rng) {
  Event e;
  int r = static_cast<int>(rng() % 100);
  e.kind = r < 32   ? EventKind::kActive
           : r < 60 ? EventKind::kPassive
           : r < 72 ? EventKind::kFuture
           : r < 86 ? EventKind::kCopular
                    : EventKind::kIntransitive;
  e.subject = e.kind == EventKind::kPassive ? ObjectNp(rng) : SubjectNp(rng);
  if (e.kind == EventKind::kPassive && Chance(rng, 50)) e.subject = CommonNp(rng, true);
  e.verb = e.kind == EventKind::kIntransitive ? Pick(kIntransitive, rng) : Pick(kTransitive, rng);
  e.object = ObjectNp(rng);
  e.predicate = Pick(kPredicates, rng);
  e.has_agent = e.kind == EventKind::kPassive && Chance(rng, 35);
  e.agent = SubjectNp(rng);
  e.headline_agent = Chance(rng, 50);
  e.has_pp = Chance(rng, e.kind == EventKind::kCopular ? 25 : 50);
  e.prep = Pick(kPreps, rng);
  e.pp = Chance(rng, 60) ? PlaceNp(rng) : ObjectNp(rng);
  e.time = static_cast<int>(rng() % 3);
  e.day = Pick(kDays, rng);
  e.present = Chance(rng, 30);
  e.future = static_cast<int>(rng() % 3);
  return e;
}

const char* Agree(const NounPhrase& s, const char* singular, const char* plural) {
  return s.plural ? plural : singular;
}

void AddTime(Builder& b, const Event& e, int governor) {
  if (e.time == 1) {
    b.Attach(b.Add("yesterday", "NOUN"), governor, "obl:tmod");
  } else if (e.time == 2) {
    int c = b.Add("on", "ADP");
    int d = b.Add(e.day, "PROPN");
    b.Attach(c, d, "case");
    b.Attach(d, governor, "obl");
  }
}

// Lead sentence in full-sentence style.
DepTree Lead(const Event& e, const std::string& sent_id) {
  Builder b;
  int subj = AddNp(b, e.subject, true);
  int root = -1;
  switch (e.kind) {
    case EventKind::kActive:
    case EventKind::kIntransitive: {
      const char* form = e.present ? Agree(e.subject, e.verb.s3, e.verb.base) : e.verb.past;
      root = b.Add(form, "VERB");
      b.Attach(subj, root, "nsubj");
      if (e.kind == EventKind::kActive) b.Attach(AddNp(b, e.object, true), root, "obj");
      break;
    }
    case EventKind::kPassive: {
      int aux = b.Add(Agree(e.subject, "was", "were"), "AUX");
      root = b.Add(e.verb.participle, "VERB");
      b.Attach(aux, root, "aux:pass");
      b.Attach(subj, root, "nsubj:pass");
      if (e.has_agent) AddPp(b, "by", e.agent, true, root);
      break;
    }
    case EventKind::kFuture: {
      if (e.future == 0) {
        int aux = b.Add("will", "AUX");
        root = b.Add(e.verb.base, "VERB");
        b.Attach(aux, root, "aux");
        b.Attach(subj, root, "nsubj");
        b.Attach(AddNp(b, e.object, true), root, "obj");
        break;
      }
      root = b.Add(e.future == 1 ? Agree(e.subject, "plans", "plan") : "agreed", "VERB");
      b.Attach(subj, root, "nsubj");
      int to = b.Add("to", "PART");
      int v = b.Add(e.verb.base, "VERB");
      b.Attach(to, v, "mark");
      b.Attach(v, root, "xcomp");
      b.Attach(AddNp(b, e.object, true), v, "obj");
      if (e.has_pp) AddPp(b, e.prep, e.pp, true, v);
      AddTime(b, e, root);
      b.Attach(root, -1, "root");
      b.Attach(b.Add(".", "PUNCT"), root, "punct");
      return b.Finish(sent_id);
    }
    case EventKind::kCopular: {
      int cop = b.Add(Agree(e.subject, "is", "are"), "AUX");
      root = b.Add(e.predicate, "ADJ");
      b.Attach(cop, root, "cop");
      b.Attach(subj, root, "nsubj");
      break;
    }
  }
  if (e.has_pp) AddPp(b, e.prep, e.pp, true, root);
  if (e.kind != EventKind::kCopular) AddTime(b, e, root);
  b.Attach(root, -1, "root");
  b.Attach(b.Add(".", "PUNCT"), root, "punct");
  return b.Finish(sent_id);
}

// Headline with its gold annotation.
DepTree Headline(const Event& e, const std::string& sent_id) {
  Builder b;
  int subj = AddNp(b, e.subject, false);
  int root = -1;
  switch (e.kind) {
    case EventKind::kActive:
    case EventKind::kIntransitive:
      root = b.Add(Agree(e.subject, e.verb.s3, e.verb.base), "VERB");
      b.Attach(subj, root, "nsubj");
      if (e.kind == EventKind::kActive) b.Attach(AddNp(b, e.object, false), root, "obj");
      break;
    case EventKind::kPassive:
      root = b.Add(e.verb.participle, "VERB");
      b.Attach(subj, root, "nsubj:pass");
      if (e.has_agent && e.headline_agent) AddPp(b, "by", e.agent, false, root);
      break;
    case EventKind::kFuture: {
      int to = b.Add("to", "PART");
      root = b.Add(e.verb.base, "VERB");
      b.Attach(to, root, "mark");
      b.Attach(subj, root, "nsubj");
      b.Attach(AddNp(b, e.object, false), root, "obj");
      break;
    }
    case EventKind::kCopular:
      root = b.Add(e.predicate, "ADJ");
      b.Attach(subj, root, "nsubj");
      break;
  }
  if (e.has_pp) AddPp(b, e.prep, e.pp, false, root);
  b.Attach(root, -1, "root");
  return b.Finish(sent_id);
}

bool Alignable(const Event& e) {
  switch (e.kind) {
    case EventKind::kActive:
    case EventKind::kIntransitive:
      return e.present;
    case EventKind::kFuture:
      return e.future != 0;
    default:
      return true;
  }
}

// Reduced relative: "the man arrested in Boston denied the charge ."
DepTree ReducedRelative(Rng& rng, const std::string& sent_id) {
  Builder b;
  NounPhrase s = CommonNp(rng, Chance(rng, 50));
  if (s.det.empty()) s.det = "the";
  int subj = AddNp(b, s, true);
  int part = b.Add(Pick(kTransitive, rng).participle, "VERB");
  b.Attach(part, subj, "acl");
  if (Chance(rng, 60)) AddPp(b, Pick(kPreps, rng), PlaceNp(rng), true, part);
  else AddPp(b, "by", SubjectNp(rng), true, part);
  int root = b.Add(Pick(kTransitive, rng).past, "VERB");
  b.Attach(subj, root, "nsubj");
  b.Attach(AddNp(b, ObjectNp(rng), true), root, "obj");
  b.Attach(root, -1, "root");
  b.Attach(b.Add(".", "PUNCT"), root, "punct");
  return b.Finish(sent_id);
}

}  // namespace

Treebank GoldCorpus(int size, std::uint64_t seed) {
  Rng rng(seed);
  Treebank tb;
  tb.source_name = "synthetic-gold";
  for (int i = 0; i < size; ++i) {
    const std::string id = "gold-" + std::to_string(i + 1);
    if (Chance(rng, 12)) {
      tb.trees.push_back(ReducedRelative(rng, id));
      continue;
    }
    Event e = RandomEvent(rng);
    if (e.kind != EventKind::kPassive && Chance(rng, 25)) {
      static constexpr std::array<std::pair<const char*, bool>, 4> kPronouns = {
          {{"he", false}, {"she", false}, {"they", true}, {"it", false}}};
      const auto& p = Pick(kPronouns, rng);
      e.subject = NounPhrase{};
      e.subject.kind = NpKind::kPronoun;
      e.subject.noun = p.first;
      e.subject.plural = p.second;
    }
    tb.trees.push_back(Lead(e, id));
  }
  return tb;
}

NewsItem NewsPair(Rng& rng) {
  Event e = RandomEvent(rng);
  NewsItem item;
  item.lead = Lead(e, "lead");
  item.headline_gold = Headline(e, "headline");
  item.headline = item.headline_gold.forms();
  item.aligned = Alignable(e);
  return item;
}

namespace {

void Renumber(NewsItem& item, int index) {
  const std::string n = std::to_string(index + 1);
  auto retag = [&n](const DepTree& t, const std::string& prefix) {
    std::vector<std::string> comments = t.comments();
    comments[0] = "# sent_id = " + prefix + n;
    return DepTree::Validated(t.tokens(), comments);
  };
  item.lead = retag(item.lead, "lead-");
  item.headline_gold = retag(item.headline_gold, "headline-");
}

}  // namespace

std::vector<NewsItem> NewsCorpus(int size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NewsItem> out;
  for (int i = 0; i < size; ++i) {
    out.push_back(NewsPair(rng));
    Renumber(out.back(), i);
  }
  return out;
}

std::vector<NewsItem> NewsCorpusWithAligned(int aligned, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NewsItem> out;
  int have = 0;
  while (have < aligned) {
    out.push_back(NewsPair(rng));
    Renumber(out.back(), static_cast<int>(out.size()) - 1);
    have += out.back().aligned;
  }
  return out;
}

}  // namespace hlparse::synth
