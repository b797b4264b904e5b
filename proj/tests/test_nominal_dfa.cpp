#include <random>

#include "doctest.h"
#include "qbounds/error.hpp"
#include "qbounds/nominal_dfa.hpp"

using namespace qbounds;

namespace {

Word W(const NominalDFA& m, const char* text) { return parse_word(m.alphabet(), text); }

// Reference predicates for the fixture languages on concrete words.
bool aa_reference(const Word& w) { return w.size() == 2 && w[0] == w[1]; }
bool fel_reference(const Word& w) { return !w.empty() && w.front() == w.back(); }
bool abab_reference(const Word& w) {
  return w.size() == 4 && w[0] == w[2] && w[1] == w[3] && w[0] != w[1];
}

NominalDFA with_accepting(const NominalDFA& m, std::vector<std::size_t> accepting) {
  return build_automaton(m.alphabet(), m.states(), m.initial_orbit(), std::move(accepting), m.transition_specs());
}

AtomPermutation random_perm(std::mt19937_64& rng, Atom pool) {
  std::vector<Atom> to(pool);
  std::iota(to.begin(), to.end(), Atom{0});
  std::shuffle(to.begin(), to.end(), rng);
  std::map<Atom, Atom> m;
  for (Atom i = 0; i < pool; ++i) m[i] = to[i];
  return AtomPermutation::from_map(m);
}

Word random_word(std::mt19937_64& rng, std::size_t max_len, Atom pool) {
  Word w;
  auto len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) w.push_back(Element{0, {static_cast<Atom>(rng() % pool)}});
  return w;
}

}  // namespace

TEST_CASE("word text format") {
  auto m = builtin_fixture("aa");
  CHECK(format_word(m.alphabet(), W(m, "7 8")) == "7 8");
  CHECK(format_word(m.alphabet(), {}) == "ε");
  CHECK(W(m, "ε").empty());
  CHECK(W(m, "").empty());
  CHECK_THROWS_AS(W(m, "1,2"), Error);
  CHECK_THROWS_AS(W(m, "x"), Error);
  OrbitFiniteSet two{{SupportRepresentation::free(0), SupportRepresentation(2, Subgroup::symmetric(2))}};
  auto w = parse_word(two, "0:() 1:5,3");
  CHECK(w[1].atoms == AtomTuple{3, 5});
  CHECK(format_word(two, w) == "0:() 1:3,5");
  CHECK_THROWS_AS(parse_word(two, "5,3"), Error);
}

TEST_CASE("canonical words") {
  auto a = atoms_set();
  CHECK(canonical_word(a, parse_word(a, "7 3 7")) == parse_word(a, "0 1 0"));
  // Bell numbers 1, 1, 2, 5.
  CHECK(canonical_words(a, 3).size() == 9);
  auto words = canonical_words(a, 4);
  CHECK(words.size() == 24);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(word_less(words[i - 1], words[i]));
  for (const auto& w : words) CHECK(canonical_word(a, w) == w);
}

TEST_CASE("aa automaton runs") {
  auto m = builtin_fixture("aa");
  CHECK(accepts(m, W(m, "7 7")).accepted);
  CHECK_FALSE(accepts(m, W(m, "7 8")).accepted);
  CHECK_FALSE(accepts(m, {}).accepted);
  auto run = accepts(m, W(m, "4 4 4"));
  CHECK_FALSE(run.accepted);
  REQUIRE(run.trace.states.size() == 4);
  CHECK(run.trace.states[0] == m.initial());
  CHECK(run.trace.states[1] == Element{1, {4}});
  CHECK_THROWS_AS(accepts(m, Word{Element{1, {0}}}), Error);
  CHECK_THROWS_AS(accepts(m, Word{Element{0, {0, 1}}}), Error);
}

TEST_CASE("fixtures agree with reference predicates and are equivariant") {
  std::mt19937_64 rng(29);
  struct Case {
    const char* name;
    bool (*ref)(const Word&);
  };
  std::vector<Case> cases{{"aa", aa_reference}, {"first_equals_last", fel_reference}, {"abab", abab_reference},
                          {"aa_dup_sink", aa_reference}};
  for (const auto& c : cases) {
    auto m = builtin_fixture(c.name);
    for (const auto& w : canonical_words(m.alphabet(), 5)) CHECK(accepts(m, w).accepted == c.ref(w));
    for (int trial = 0; trial < 200; ++trial) {
      auto w = random_word(rng, 6, 5);
      auto pi = random_perm(rng, 8);
      CHECK(accepts(m, w).accepted == c.ref(w));
      CHECK(accepts(m, w).accepted == accepts(m, act_word(m.alphabet(), pi, w)).accepted);
    }
  }
  for (const auto& w : canonical_words(atoms_set(), 4)) {
    CHECK_FALSE(accepts(builtin_fixture("empty"), w).accepted);
    CHECK(accepts(builtin_fixture("full"), w).accepted);
    CHECK_FALSE(accepts(builtin_fixture("empty_redundant"), w).accepted);
  }
}

TEST_CASE("transitions are equivariant") {
  std::mt19937_64 rng(31);
  for (const auto& name : builtin_fixture_names()) {
    auto m = builtin_fixture(name);
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_word(rng, 4, 4);
      auto q = m.run_from(m.initial(), w);
      Element a{0, {static_cast<Atom>(rng() % 5)}};
      auto pi = random_perm(rng, 6);
      CHECK(m.step(act(m.states(), pi, q), act(m.alphabet(), pi, a)) == act(m.states(), pi, m.step(q, a)));
    }
  }
}

TEST_CASE("malformed automata are rejected") {
  auto a = atoms_set();
  OrbitFiniteSet states{{SupportRepresentation::free(0)}};
  CHECK_THROWS_AS(build_automaton(a, states, 0, {}, {}), Error);
  std::vector<TransitionSpec> dup{{0, 0, {0}, 0, {}}, {0, 0, {0}, 0, {}}};
  CHECK_THROWS_AS(build_automaton(a, states, 0, {}, dup), Error);
  std::vector<TransitionSpec> bad_u{{0, 0, {0}, 0, {1}}};
  CHECK_THROWS_AS(build_automaton(a, states, 0, {}, bad_u), Error);
  OrbitFiniteSet one{{SupportRepresentation::free(1)}};
  CHECK_THROWS_AS(build_automaton(a, one, 0, {}, {{0, 0, {0, 0}, 0, {1}}, {0, 0, {0, 1}, 0, {1}}}), Error);
}

TEST_CASE("reachable orbits") {
  auto m = builtin_fixture("aa");
  auto r = reachable_orbits(m);
  CHECK(r.orbits == std::vector<std::size_t>{0, 1, 2, 3});
  std::vector<std::string> texts;
  for (const auto& w : r.witnesses) texts.push_back(format_word(m.alphabet(), w));
  CHECK(texts == std::vector<std::string>{"ε", "0", "0 0", "0 1"});
  CHECK(reachable_orbits(builtin_fixture("aa_dup_sink")).orbits.size() == 4);
  auto e = reachable_orbits(builtin_fixture("empty"));
  CHECK(e.orbits.size() == 1);
  CHECK(e.witnesses.front().empty());
}

TEST_CASE("equivalence check") {
  auto aa = builtin_fixture("aa");
  CHECK_FALSE(equivalence_check(aa, aa));
  CHECK_FALSE(equivalence_check(aa, builtin_fixture("aa_dup_sink")));
  CHECK_FALSE(equivalence_check(builtin_fixture("empty"), builtin_fixture("empty_redundant")));
  auto rejecting = with_accepting(aa, {});
  auto cex = equivalence_check(aa, rejecting);
  REQUIRE(cex);
  CHECK(format_word(aa.alphabet(), *cex) == "0 0");
  auto cex2 = equivalence_check(aa, builtin_fixture("empty"));
  REQUIRE(cex2);
  CHECK(format_word(aa.alphabet(), *cex2) == "0 0");
  auto cex3 = equivalence_check(builtin_fixture("full"), builtin_fixture("empty"));
  REQUIRE(cex3);
  CHECK(cex3->empty());
  auto names = builtin_fixture_names();
  for (const auto& x : names) {
    for (const auto& y : names) {
      auto mx = builtin_fixture(x);
      auto my = builtin_fixture(y);
      auto c = equivalence_check(mx, my);
      if (c) {
        CHECK(accepts(mx, *c).accepted != accepts(my, *c).accepted);
        CHECK(canonical_word(mx.alphabet(), *c) == *c);
      } else {
        for (const auto& w : canonical_words(mx.alphabet(), 5)) {
          CHECK(accepts(mx, w).accepted == accepts(my, w).accepted);
        }
      }
    }
  }
}

TEST_CASE("distinguishing suffixes respect context atoms") {
  auto m = builtin_fixture("first_equals_last");
  Element q1{1, {3}};
  Element q2{1, {5}};
  auto z = distinguishing_suffix(m, q1, m, q2);
  REQUIRE(z);
  CHECK(m.is_accepting(m.run_from(q1, *z).orbit) != m.is_accepting(m.run_from(q2, *z).orbit));
  CHECK(z->size() == 1);
  CHECK_FALSE(distinguishing_suffix(m, q1, m, q1));
}

TEST_CASE("minimization") {
  SUBCASE("aa") {
    auto m = builtin_fixture("aa");
    auto min = minimize(m);
    CHECK(min.automaton.states().orbit_count() == 4);
    CHECK(min.automaton.states().dimension() == 1);
    CHECK_FALSE(equivalence_check(m, min.automaton));
  }
  SUBCASE("duplicate sink merges") {
    auto min = minimize(builtin_fixture("aa_dup_sink"));
    CHECK(min.automaton.states().orbit_count() == 4);
    CHECK(min.reachable.size() == 4);
  }
  SUBCASE("redundant empty language") {
    auto min = minimize(builtin_fixture("empty_redundant"));
    CHECK(min.automaton.states().orbit_count() == 1);
    CHECK(min.automaton.states().dimension() == 0);
  }
  SUBCASE("orbits that forget an atom") {
    // Accept once the first letter comes back. The second remembered atom of
    // orbit 2 is irrelevant, so orbit 2 folds into orbit 1.
    std::vector<TransitionSpec> t{
        {0, 0, {0}, 1, {1}},
        {1, 0, {0, 0}, 3, {}},
        {1, 0, {0, 1}, 2, {1, 2}},
        {2, 0, {0, 1, 0}, 3, {}},
        {2, 0, {0, 1, 1}, 2, {1, 2}},
        {2, 0, {0, 1, 2}, 2, {1, 3}},
        {3, 0, {0}, 3, {}},
    };
    OrbitFiniteSet states{{SupportRepresentation::free(0), SupportRepresentation::free(1),
                           SupportRepresentation::free(2), SupportRepresentation::free(0)}};
    auto m = build_automaton(atoms_set(), states, 0, {3}, t);
    auto min = minimize(m);
    CHECK(min.automaton.states().orbit_count() == 3);
    CHECK(min.automaton.states().dimension() == 1);
    CHECK_FALSE(equivalence_check(m, min.automaton));
    CHECK(min.homomorphism.apply(Element{2, {4, 9}}) == min.homomorphism.apply(Element{1, {4}}));
  }
  SUBCASE("every fixture") {
    for (const auto& name : builtin_fixture_names()) {
      auto m = builtin_fixture(name);
      auto min = minimize(m);
      const auto& mm = min.automaton;
      CHECK_FALSE(equivalence_check(m, mm));
      CHECK(mm.states().orbit_count() <= m.states().orbit_count());
      CHECK(mm.states().dimension() <= m.states().dimension());
      auto again = minimize(mm);
      CHECK(again.automaton.states().orbit_count() == mm.states().orbit_count());
      CHECK(is_isomorphism(again.homomorphism));
      auto report = dimension_bound_check(mm);
      CHECK(report.ok);
      auto reps = short_witnesses(mm);
      CHECK(reps.size() == mm.states().orbit_count());
      for (const auto& w : reps) CHECK(w.size() < mm.states().orbit_count());

      // The homomorphism preserves the initial state, acceptance and steps.
      const auto& h = min.homomorphism;
      CHECK(h.apply(Element{0, {}}).orbit == mm.initial_orbit());
      std::mt19937_64 rng(37);
      auto reach = reachable_orbits(m);
      for (int trial = 0; trial < 60; ++trial) {
        auto w = random_word(rng, 5, 4);
        auto q = m.run_from(m.initial(), w);
        auto local = std::find(min.reachable.begin(), min.reachable.end(), q.orbit) - min.reachable.begin();
        Element ql{static_cast<std::size_t>(local), q.atoms};
        Element a{0, {static_cast<Atom>(rng() % 6)}};
        auto hq = h.apply(ql);
        CHECK(mm.is_accepting(hq.orbit) == m.is_accepting(q.orbit));
        auto next = m.step(q, a);
        auto next_local = std::find(min.reachable.begin(), min.reachable.end(), next.orbit) - min.reachable.begin();
        CHECK(h.apply(Element{static_cast<std::size_t>(next_local), next.atoms}) == mm.step(hq, a));
      }
    }
  }
}

TEST_CASE("short witnesses and dimension bound values") {
  auto aa = minimize(builtin_fixture("aa")).automaton;
  std::vector<std::size_t> lengths;
  for (const auto& w : short_witnesses(aa)) lengths.push_back(w.size());
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{0, 1, 2, 2});
  auto r = dimension_bound_check(aa);
  CHECK(r.dimension == 1);
  CHECK(r.bound == 3);
  auto e = minimize(builtin_fixture("empty")).automaton;
  CHECK(short_witnesses(e) == std::vector<Word>{Word{}});
  auto re = dimension_bound_check(e);
  CHECK(re.dimension == 0);
  CHECK(re.bound == 0);
  CHECK(re.ok);
  auto abab = minimize(builtin_fixture("abab")).automaton;
  CHECK(abab.states().orbit_count() == 6);
  CHECK(abab.states().dimension() == 2);
  auto fel = minimize(builtin_fixture("first_equals_last")).automaton;
  CHECK(fel.states().orbit_count() == 3);
  CHECK(fel.states().dimension() == 1);
}
