#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "specmine/automata.hpp"
#include "specmine/error.hpp"
#include "specmine/model_io.hpp"
#include "specmine/models.hpp"

using namespace specmine;
using fixtures::path;
using fixtures::seq;

namespace {

const Fsa& retailer() { return builtin_model("retailer").model; }

}  // namespace

TEST_CASE("fsa: states and invariants") {
  Fsa m;
  CHECK(m.add_state() == 0);
  CHECK(m.name(0) == "q0");
  CHECK(m.add_state("x") == 1);
  CHECK_THROWS_AS(m.add_state("x"), InvariantError);
  m.add_transition(0, "a", 1);
  m.add_transition(0, "a", 1);
  CHECK(m.num_transitions() == 1);
  CHECK(m.alphabet() == std::set<std::string>{"a"});
  CHECK(m.initial() == 0);
  CHECK(m.deterministic());
  m.add_transition(0, kEmptyLabel, 1);
  CHECK_FALSE(m.deterministic());
  CHECK(m.has_empty_transitions());
  CHECK_NOTHROW(m.validate());
}

TEST_CASE("accepts") {
  CHECK(accepts(retailer(), fixtures::kReg));
  CHECK(accepts(retailer(), fixtures::kPremCat));
  CHECK_FALSE(accepts(retailer(), seq({"regLogin", "order", "ship", "inv", "pay"})));
  CHECK_FALSE(accepts(retailer(), seq({"regLogin", "bogus"})));

  Fsa single;
  single.set_accepting(single.add_state());
  CHECK(accepts(single, OpSeq{}));

  const Fsa flower = flower_model(retailer().alphabet());
  CHECK(accepts(flower, seq({"ship", "ship", "pay"})));
  CHECK_FALSE(accepts(flower, seq({"ship", "unknown"})));
}

TEST_CASE("epsilon_union") {
  CHECK_THROWS_AS(epsilon_union(std::vector<Fsa>{}), ConfigError);

  const std::vector<Fsa> one{retailer()};
  const Fsa u1 = epsilon_union(one);
  CHECK(oracle::language_mismatches(u1, retailer(), 7) == 0);

  const std::vector<Fsa> two{path(fixtures::kReg.ops()), path(fixtures::kPrem.ops())};
  const Fsa u2 = epsilon_union(two);
  CHECK(u2.has_empty_transitions());
  CHECK(oracle::bounded_words(u2, 2) ==
        std::set<OpSeq>{fixtures::kReg.ops(), fixtures::kPrem.ops()});
  CHECK(u2.alphabet().size() == 6);
  // inputs untouched
  CHECK(two[0].num_states() == 6);

  const std::vector<Fsa> same{retailer(), retailer()};
  CHECK(oracle::language_mismatches(determinize(epsilon_union(same)), retailer(), 8) == 0);
}

TEST_CASE("determinize") {
  const std::vector<Fsa> two{path(fixtures::kReg.ops()), path(fixtures::kPrem.ops())};
  const Fsa d = determinize(epsilon_union(two));
  CHECK(d.deterministic());
  CHECK_FALSE(d.has_empty_transitions());
  CHECK(enumerate_behaviors(d, 3).traces ==
        std::set<OpSeq>{fixtures::kReg.ops(), fixtures::kPrem.ops()});

  CHECK(oracle::language_mismatches(determinize(retailer()), retailer(), 8) == 0);

  std::mt19937 rng(7);
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    const Fsa n = oracle::random_nfa(rng, 6, 2, true);
    const Fsa dn = determinize(n);
    CHECK(dn.deterministic());
    bad += oracle::language_mismatches(dn, n, 6);
  }
  CHECK(bad == 0);
}

TEST_CASE("minimize") {
  Fsa nfa = path(seq({"a"}));
  nfa.add_transition(0, "a", 0);
  CHECK_THROWS_AS(minimize(nfa), ConfigError);

  CHECK(minimize(retailer()) == renumber_bfs(retailer()));

  // two states with identical outgoing transitions and acceptance
  Fsa twin;
  for (int i = 0; i < 4; ++i) twin.add_state();
  twin.add_transition(0, "a", 1);
  twin.add_transition(0, "b", 2);
  twin.add_transition(1, "c", 3);
  twin.add_transition(2, "c", 3);
  twin.set_accepting(3);
  const Fsa m = minimize(twin);
  CHECK(m.num_states() == 3);
  CHECK(oracle::language_mismatches(m, twin, 4) == 0);

  // dead and unreachable states disappear
  Fsa junk = path(seq({"a"}));
  const auto dead = junk.add_state();
  const auto lost = junk.add_state();
  junk.add_transition(0, "b", dead);
  junk.add_transition(lost, "a", 0);
  CHECK(minimize(junk).num_states() == 2);

  // empty language keeps the initial state
  Fsa none;
  none.add_state();
  none.add_transition(0, "a", 0);
  CHECK(minimize(none).num_states() == 1);

  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Fsa d = oracle::random_dfa(rng, 5, 2);
    const Fsa md = minimize(d);
    CHECK(md.num_states() == oracle::nerode_classes(d, static_cast<int>(d.num_states()) + 1));
    CHECK(oracle::language_mismatches(md, d, 6) == 0);
    CHECK(minimize(md) == md);
  }
}

TEST_CASE("renumber_bfs names states in breadth-first order") {
  Fsa m;
  m.add_state("start");
  m.add_state("far");
  m.add_state("near");
  m.add_transition(0, "b", 1);
  m.add_transition(0, "a", 2);
  m.add_transition(2, "c", 1);
  m.set_accepting(1);
  const Fsa r = renumber_bfs(m);
  CHECK(r.name(0) == "q0");
  CHECK(*r.step(0, "a") == 1);
  CHECK(*r.step(0, "b") == 2);
}

TEST_CASE("enumerate_behaviors") {
  CHECK(enumerate_behaviors(path(fixtures::kReg.ops()), 1).traces ==
        std::set<OpSeq>{fixtures::kReg.ops()});
  CHECK_THROWS_AS(enumerate_behaviors(retailer(), 0), ConfigError);

  const auto b = enumerate_behaviors(retailer(), 2);
  CHECK(b.visit_limit == 2);
  CHECK(b.contains(fixtures::kPremCat.ops()));
  for (const auto& w : b.traces) {
    CHECK(std::search_n(w.begin(), w.end(), 3, std::string("cat")) == w.end());
    CHECK(accepts(retailer(), w));
  }
  CHECK(b.size() == 6);

  Fsa loop;
  loop.add_state();
  loop.add_state();
  loop.set_accepting(0);
  loop.add_transition(0, "a", 0);
  CHECK(enumerate_behaviors(loop, 2).traces == std::set<OpSeq>{{}, {"a"}, {"a", "a"}});

  // accepting state out of reach contributes nothing
  Fsa island = path(seq({"a"}));
  island.set_accepting(island.add_state());
  CHECK(enumerate_behaviors(island, 2).size() == 1);

  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Fsa n = oracle::random_nfa(rng, 4, 2, true);
    for (int limit = 1; limit <= 2; ++limit) {
      const auto got = enumerate_behaviors(n, limit);
      CHECK(got.traces == oracle::bounded_words(n, limit));
      const auto more = enumerate_behaviors(n, limit + 1);
      CHECK(std::includes(more.traces.begin(), more.traces.end(), got.traces.begin(),
                          got.traces.end()));
      for (const auto& w : got.traces) CHECK(accepts_within(n, w, limit));
    }
  }
}

TEST_CASE("count_bounded_behaviors") {
  std::mt19937 rng(5);
  for (int i = 0; i < 80; ++i) {
    const Fsa a = oracle::random_dfa(rng, 4, 2);
    const Fsa b = oracle::random_dfa(rng, 4, 2);
    const auto ba = oracle::bounded_words(a, 2);
    const auto bb = oracle::bounded_words(b, 2);
    std::size_t common = 0;
    for (const auto& w : ba) common += bb.contains(w);
    const Fsa* one[] = {&a};
    const Fsa* both[] = {&a, &b};
    CHECK(count_bounded_behaviors(one, 2) == ba.size());
    CHECK(count_bounded_behaviors(both, 2) == common);
  }

  const Fsa flower = flower_model(retailer().alphabet());
  const Fsa* f[] = {&flower};
  CHECK(count_bounded_behaviors(f, 2) == oracle::flower_count(7, 2));
  CHECK(count_bounded_behaviors(f, 2) == 1924223799u);

  Fsa nfa = path(seq({"a"}));
  nfa.add_transition(0, "a", 0);
  const Fsa* n[] = {&nfa};
  CHECK_THROWS_AS(count_bounded_behaviors(n, 2), ConfigError);
}

TEST_CASE("model JSON and DOT") {
  Fsa m = path(seq({"a", "b"}));
  m.add_transition(0, kEmptyLabel, 2);
  const std::string json = to_json(m);
  CHECK(json.find("\"ε\"") != std::string::npos);
  const Fsa back = from_json(json);
  CHECK(back == m);
  CHECK(to_json(back) == json);

  CHECK_THROWS_AS(from_json("{"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"states":["a"],"alphabet":[],"initial":"b","accepting":[],"transitions":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      from_json(R"({"states":["a"],"alphabet":["x"],"initial":"a","accepting":[],"transitions":[{"from":"a","label":"x","to":"zz"}]})"),
      ParseError);
  CHECK_THROWS_AS(
      from_json(R"({"states":["a"],"alphabet":["ε"],"initial":"a","accepting":[],"transitions":[]})"),
      ParseError);

  const std::string dot = to_dot(m);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("shape=point") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
