#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qbounds/dimensions.hpp"
#include "qbounds/error.hpp"
#include "qbounds/witnesses.hpp"

using namespace qbounds;

namespace {

DomainPtr points(std::size_t n) {
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) keys.push_back("p" + std::to_string(i));
  return make_domain(keys);
}

ConceptClass singletons(const DomainPtr& d) {
  std::vector<Bits> m;
  for (std::size_t i = 0; i < d->size(); ++i) {
    Bits b(d->size(), 0);
    b[i] = 1;
    m.push_back(b);
  }
  return ConceptClass(d, m);
}

ConceptClass random_subclass(std::mt19937_64& rng, const ConceptClass& c) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (rng() % 3 == 0) keep.push_back(i);
  }
  if (keep.empty()) keep.push_back(rng() % c.size());
  return c.subclass(keep);
}

}  // namespace

TEST_CASE("ldim examples") {
  auto d3 = points(3);
  auto all = all_concepts(d3);
  auto r = ldim_exact(all);
  CHECK(r.value == 3);
  CHECK_FALSE(check_shattered_tree(r.tree, all).has_value());
  CHECK(ldim_log_bound(all) == 3);

  auto s = singletons(points(4));
  CHECK(ldim_exact(s).value == 1);
  CHECK(oracle::ldim_naive(s.members(), 4) == 1);

  ConceptClass one(d3, {{1, 0, 1}});
  CHECK(ldim_exact(one).value == 0);
  CHECK(ldim_log_bound(one) == 0);
  CHECK_FALSE(check_shattered_tree(ldim_exact(one).tree, one).has_value());

  CHECK(ldim_log_bound(advice_concept_class(enumerate_class(2, 2, 1))) == 3);
}

TEST_CASE("tree checker rejects broken trees") {
  auto all = all_concepts(points(2));
  auto r = ldim_exact(all);
  auto bad = r.tree;
  auto leaf_one = bad.nodes[bad.nodes[0].one].one;
  auto leaf_zero = bad.nodes[bad.nodes[0].zero].one;
  REQUIRE(bad.nodes[leaf_one].leaf);
  bad.nodes[leaf_one].member = bad.nodes[leaf_zero].member;
  CHECK(check_shattered_tree(bad, all).has_value());
  auto shallow = r.tree;
  shallow.height = 3;
  CHECK(check_shattered_tree(shallow, all).has_value());
}

TEST_CASE("ldim matches the naive recursion on random subclasses") {
  std::mt19937_64 rng(21);
  auto all = all_concepts(points(4));
  for (int trial = 0; trial < 60; ++trial) {
    auto c = random_subclass(rng, all);
    auto r = ldim_exact(c);
    CHECK(r.value == oracle::ldim_naive(c.members(), 4));
    CHECK(r.value <= ldim_log_bound(c));
    CHECK_FALSE(check_shattered_tree(r.tree, c).has_value());
    // removing members never raises the dimension
    if (c.size() > 1) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 1; i < c.size(); ++i) rest.push_back(i);
      CHECK(ldim_exact(c.subclass(rest)).value <= r.value);
    }
  }
}

TEST_CASE("cdim examples") {
  auto s = singletons(points(3));
  auto r = cdim_exact(s, s);
  CHECK(r.value == 3);
  REQUIRE(r.extremal.has_value());
  CHECK(*r.extremal == Bits{0, 0, 0});

  auto d2 = points(2);
  ConceptClass constants(d2, {{0, 0}, {1, 1}});
  CHECK(cdim_exact(constants, constants).value == 2);
  CHECK(cdim_exact(constants, all_concepts(d2)).value == 0);

  ConceptClass not_sub(d2, {{0, 1}});
  CHECK_THROWS_AS(cdim_exact(not_sub, constants), Error);
  CHECK_THROWS_AS(cdim_exact(all_concepts(points(1)), constants), Error);
}

TEST_CASE("cdim matches the definition on random pairs") {
  std::mt19937_64 rng(4);
  auto all = all_concepts(points(4));
  for (int trial = 0; trial < 40; ++trial) {
    auto c = random_subclass(rng, all);
    // H = C plus some random extra concepts
    std::vector<Bits> hm = c.members();
    for (const auto& m : all.members()) {
      if (rng() % 4 == 0) hm.push_back(m);
    }
    ConceptClass h(c.domain(), hm);
    CHECK(cdim_exact(c, h).value == oracle::cdim_naive(c.members(), h.members(), 4));
  }
}

TEST_CASE("advice witnesses bound cdim from above") {
  // For every concept outside L^adv(2n,m), the n(n+1) witness is a set on
  // which it has no extension in L^adv(n,m).
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {1, 3}}) {
    auto c = advice_class(2, n, m);
    auto h = advice_class(2, 2 * n, m);
    auto cd = cdim_exact(c, h);
    std::size_t widest = 0;
    auto every = all_concepts(c.domain());
    for (const auto& a : every.members()) {
      if (h.contains(a)) continue;
      LanguageTable t{"01", m, a};
      auto w = advice_witness(t, n);
      CHECK(w.points.size() <= n * (n + 1));
      std::vector<std::size_t> idx;
      for (const auto& x : w.points) idx.push_back(c.domain()->index(x));
      auto part = restrict(Concept{c.domain(), a}, idx);
      for (const auto& mem : c.members()) CHECK_FALSE(is_extension(Concept{c.domain(), mem}, part));
      CHECK(smallest_inconsistent_set(a, c)->size() <= w.points.size());
      widest = std::max(widest, w.points.size());
    }
    CHECK(cd.value <= widest);
    CHECK(cd.value <= n * (n + 1));
  }
}

TEST_CASE("advice bound report") {
  auto r = advice_bound_report({1, 2, 2});
  CHECK(r.ok());
  bool saw_ldim = false;
  for (const auto& row : r.rows) {
    if (row.quantity == "ldim") {
      saw_ldim = true;
      CHECK(row.exact == "1");
      CHECK(row.paper_bound == "1.0000");
    }
  }
  CHECK(saw_ldim);
  auto r2 = advice_bound_report({2, 2, 2});
  CHECK(r2.ok());
  for (const auto& row : r2.rows) {
    if (row.quantity == "cdim") CHECK(row.paper_bound == "6");
  }
  auto csv = bound_csv_header() + bound_csv_rows(r2);
  CHECK(csv.rfind("setting,params,quantity,exact,paper_bound,pass\n", 0) == 0);
}

TEST_CASE("advice class by filter equals enumeration") {
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
    auto filtered = advice_class(2, n, m);
    auto enumerated = advice_concept_class(enumerate_class(2, n, m));
    CHECK(filtered.members() == enumerated.members());
  }
}

TEST_CASE("nominal formula and reports") {
  CHECK(nominal_cdim_bound(4, 1, 1) == 960);
  CHECK(nominal_cdim_bound(3, 1, 1) == 324);
  for (const auto& name : builtin_fixture_names()) {
    auto r = nominal_bound_report({name, 0, 1, 3});
    CHECK_MESSAGE(r.ok(), name);
  }
}

TEST_CASE("state set counts") {
  // Dimension <= 1 gives the types {point, atoms}.
  auto c11 = nominal_state_set_counts(1, 1);
  CHECK(c11.state_sets == 2);
  auto c12 = nominal_state_set_counts(1, 2);
  CHECK(c12.state_sets == 4);
  CHECK(nominal_state_set_counts(2, 2).state_sets == 10);
  // one point state: the single map to it
  CHECK(nominal_state_set_counts(1, 0).transition_functions == 1);
  // {point}: one map. {atoms}: (a,a) -> a one way, (a,b) -> a or b.
  CHECK(c11.transition_functions == 1 + 2);
  CHECK(counting_report(2, 2).ok());
}
