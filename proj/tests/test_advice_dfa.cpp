#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qbounds/advice_dfa.hpp"
#include "qbounds/error.hpp"

using namespace qbounds;

namespace {

bool tightness_formula(std::size_t k, const std::string& w) {
  auto zeros = static_cast<std::size_t>(std::count(w.begin(), w.end(), '0'));
  return (zeros % k == 0 && w.size() != 2) || w.size() == 3;
}

LanguageTable random_table(std::mt19937_64& rng, std::size_t k, std::size_t m) {
  LanguageTable t{digit_alphabet(k), m, {}};
  t.bits.resize(strings_up_to(t.sigma, m).size());
  for (auto& b : t.bits) b = static_cast<std::uint8_t>(rng() & 1);
  return t;
}

// Random table with few Myhill-Nerode classes: run a random small machine.
LanguageTable random_small_table(std::mt19937_64& rng, std::size_t k, std::size_t n, std::size_t m) {
  AdviceDFA a{digit_alphabet(k), m, n, 0, {}, {}};
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() & 1) a.accepting.push_back(q);
  }
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<std::size_t> t(n * k);
    for (auto& x : t) x = rng() % n;
    a.steps.push_back(t);
  }
  return language_table(a);
}

}  // namespace

TEST_CASE("domain order is length then lexicographic") {
  auto d = strings_up_to("01", 2);
  CHECK(d == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(string_index("01", d[i]) == i);
  CHECK(strings_up_to("ab", 4).size() == 31);
}

TEST_CASE("accepts follows the step tables") {
  AdviceDFA a{"01", 2, 2, 0, {1}, {{1, 0, 1, 0}, {0, 0, 1, 1}}};
  CHECK_FALSE(accepts(a, ""));
  CHECK(accepts(a, "0"));
  CHECK_FALSE(accepts(a, "1"));
  CHECK(accepts(a, "01"));  // 0 -> 1 at step 1, then row of 1 at step 2
  CHECK_FALSE(accepts(a, "11"));
  CHECK_THROWS_AS(accepts(a, "010"), Error);
  CHECK_THROWS_AS(accepts(a, "2"), Error);

  AdviceDFA bad = a;
  bad.steps.pop_back();
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = a;
  bad.steps[0][0] = 7;
  CHECK_THROWS_AS(language_table(bad), Error);
}

TEST_CASE("language tables of trivial machines") {
  AdviceDFA yes{"01", 1, 1, 0, {0}, {{0, 0}}};
  AdviceDFA no{"01", 1, 1, 0, {}, {{0, 0}}};
  CHECK(language_table(yes).bits == std::vector<std::uint8_t>{1, 1, 1});
  CHECK(language_table(no).bits == std::vector<std::uint8_t>{0, 0, 0});
  AdviceDFA huge{"0123456789", 7, 1, 0, {}, std::vector<std::vector<std::size_t>>(7, std::vector<std::size_t>(10, 0))};
  CHECK_THROWS_AS(language_table(huge), Error);
}

TEST_CASE("tightness automaton matches the defining formula") {
  auto a = tightness_automaton(2, 4);
  CHECK(a.n == 4);
  CHECK(accepts(a, "000"));
  CHECK_FALSE(accepts(a, "00"));
  CHECK(accepts(a, ""));
  auto t = language_table(a);
  CHECK(t.size() == 31);
  for (const auto& w : strings_up_to("01", 4)) CHECK(t.at(w) == tightness_formula(2, w));
}

TEST_CASE("mn partitions") {
  auto l = tightness_language(2, 4);
  auto p = mn_partition(l, 2);
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.blocks[0] == std::vector<std::string>{"00", "11"});
  CHECK(p.blocks[1] == std::vector<std::string>{"01", "10"});
  for (std::size_t len = 0; len <= 4; ++len) CHECK(mn_partition(l, len).blocks.size() <= 2);

  LanguageTable empty{"01", 3, std::vector<std::uint8_t>(15, 0)};
  for (std::size_t len = 0; len <= 3; ++len) CHECK(mn_partition(empty, len).blocks.size() == 1);

  auto single = table_from_predicate("01", 2, [](std::string_view w) { return w == "0"; });
  CHECK(mn_partition(single, 1).blocks.size() == 2);
  CHECK_THROWS_AS(mn_partition(single, 3), Error);
}

TEST_CASE("mn partition agrees with pairwise brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = 2 + rng() % 2;
    auto m = 1 + rng() % 3;
    auto l = random_table(rng, k, m);
    for (std::size_t len = 0; len <= m; ++len) {
      auto p = mn_partition(l, len);
      std::map<std::string, std::size_t> block;
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        for (const auto& x : p.blocks[b]) block[x] = b;
      }
      auto suffixes = strings_up_to(l.sigma, m - len);
      for (const auto& [x, bx] : block) {
        for (const auto& [y, by] : block) {
          bool same = std::all_of(suffixes.begin(), suffixes.end(),
                                  [&](const std::string& z) { return l.at(x + z) == l.at(y + z); });
          CHECK(same == (bx == by));
        }
      }
    }
  }
}

TEST_CASE("synthesize round trips within 2n states") {
  LanguageTable empty{"01", 2, std::vector<std::uint8_t>(7, 0)};
  CHECK(synthesize(empty).n <= 2);
  CHECK(language_table(synthesize(empty)) == empty);

  auto l = tightness_language(2, 4);
  auto s = synthesize(l);
  CHECK(s.n <= 4);
  CHECK(language_table(s) == l);

  std::mt19937_64 rng(11);
  int tried = 0;
  while (tried < 50) {
    auto t = random_small_table(rng, 2, 3, 1 + rng() % 4);
    auto n = max_class_count(t);
    if (n > 3) continue;
    ++tried;
    auto a = synthesize(t);
    CHECK(a.n <= 2 * n);
    CHECK(language_table(a) == t);
  }
}

TEST_CASE("minimal states") {
  CHECK(minimal_states(tightness_language(2, 4)).states == 4);
  CHECK(minimal_states(tightness_language(3, 5)).states == 6);
  LanguageTable empty{"01", 3, std::vector<std::uint8_t>(15, 0)};
  CHECK(minimal_states(empty).states == 1);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto t = random_table(rng, 2, 1 + rng() % 3);
    auto ms = minimal_states(t);
    auto n = max_class_count(t);
    CHECK(ms.states >= n);
    CHECK(ms.states <= 2 * n);
    CHECK(ms.realization.n == ms.states);
    CHECK(language_table(ms.realization) == t);
  }
}

TEST_CASE("minimal states agree with the layered feasibility oracle") {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto l = tightness_language(2, m);
    auto member = [](const std::string& w) { return tightness_formula(2, w); };
    CHECK(oracle::advice_min_states("01", m, member) == minimal_states(l).states);
  }
  auto member = [](const std::string& w) { return tightness_formula(2, w); };
  // At m = 3 the length-3 clause makes the last step trivial; 2 states do.
  CHECK(minimal_states(tightness_language(2, 3)).states == 2);
  CHECK(oracle::advice_feasible("01", 3, 3, member));
  CHECK_FALSE(oracle::advice_feasible("01", 4, 3, member));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = 1 + rng() % 3;
    auto t = random_table(rng, 2, m);
    auto member_t = [&](const std::string& w) { return t.at(w); };
    CHECK(oracle::advice_min_states("01", m, member_t) == minimal_states(t).states);
  }
}

TEST_CASE("enumerate class") {
  CHECK(enumerate_class(2, 1, 2).size() == 2);
  auto all = enumerate_class(2, 2, 1);
  CHECK(all.size() == 8);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS_AS(enumerate_class(2, 4, 4), Error);
  CHECK(machine_count(2, 2, 2) == 1024);

  for (auto [k, n, m] : {std::tuple{2, 2, 2}, {2, 3, 1}, {3, 2, 1}, {2, 2, 3}}) {
    auto cls = enumerate_class(k, n, m);
    CHECK(cls.size() <= machine_count(k, n, m));
    for (const auto& l : cls) {
      for (std::size_t len = 0; len <= l.m; ++len) CHECK(mn_partition(l, len).blocks.size() <= std::size_t(n));
      CHECK(minimal_states(l).states <= std::size_t(n));
      CHECK(language_table(synthesize(l)) == l);
    }
    // Exact class by the state-count filter when the domain is small enough.
    if (strings_up_to(digit_alphabet(k), m).size() <= 20) CHECK(cls == class_by_minimal_states(k, n, m));
  }
}
