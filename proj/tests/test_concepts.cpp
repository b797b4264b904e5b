#include <random>

#include "doctest.h"
#include "qbounds/concepts.hpp"
#include "qbounds/error.hpp"

using namespace qbounds;

namespace {

ConceptClass singletons(const DomainPtr& d) {
  std::vector<Bits> m;
  for (std::size_t i = 0; i < d->size(); ++i) {
    Bits b(d->size(), 0);
    b[i] = 1;
    m.push_back(b);
  }
  return ConceptClass(d, m);
}

// Reference: every size-n subset checked directly.
bool consistent_by_subsets(const Bits& a, const ConceptClass& c, std::size_t n) {
  const auto size = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) continue;
    bool extended = false;
    for (const auto& m : c.members()) {
      bool agree = true;
      for (std::size_t i = 0; i < size; ++i) {
        if ((mask >> i & 1) && m[i] != a[i]) agree = false;
      }
      extended = extended || agree;
    }
    if (!extended) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("domains reject duplicates and foreign keys") {
  CHECK_THROWS_AS(make_domain({"a", "a"}), Error);
  auto d = make_domain({"a", "b"});
  CHECK(d->index("b") == 1);
  CHECK_THROWS_AS(d->index("c"), Error);
}

TEST_CASE("extension") {
  auto d = make_domain({"x", "y", "z"});
  Concept c{d, {1, 0, 1}};
  CHECK(is_extension(c, PartialConcept{d, {}}));
  CHECK(is_extension(c, restrict(c, {0, 2})));
  CHECK(is_extension(as_partial(c), restrict(c, {1})));
  Concept one{d, {1, 0, 0}};
  CHECK_FALSE(is_extension(one, PartialConcept{d, {{0, 0}}}));
  auto other = make_domain({"p"});
  CHECK_THROWS_AS(is_extension(c, PartialConcept{other, {}}), Error);
}

TEST_CASE("classes deduplicate") {
  auto d = make_domain({"x", "y"});
  ConceptClass c(d, {{0, 1}, {1, 1}, {0, 1}}, {"a", "b", "c"});
  CHECK(c.size() == 2);
  CHECK(c.provenance() == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(ConceptClass(d, {}), Error);
  CHECK_THROWS_AS(ConceptClass(d, {{0}}), Error);
  CHECK(all_concepts(d).size() == 4);
}

TEST_CASE("n-consistency") {
  auto d = make_domain({"x", "y", "z"});
  auto c = singletons(d);
  Concept zero{d, {0, 0, 0}};
  CHECK(is_n_consistent(zero, c, 2).consistent);
  auto r = is_n_consistent(zero, c, 3);
  CHECK_FALSE(r.consistent);
  CHECK(r.witness == std::vector<std::size_t>{0, 1, 2});
  for (std::size_t n = 0; n <= 3; ++n) CHECK(is_n_consistent(c.concept_at(1), c, n).consistent);

  // Witness padding: 110 fails on {x, y}; at n = 3 the set is padded.
  Concept two{d, {1, 1, 0}};
  auto w = is_n_consistent(two, c, 3);
  CHECK_FALSE(w.consistent);
  CHECK(w.witness.size() == 3);
}

TEST_CASE("n-consistency matches subset enumeration and is monotone") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t size = 2 + rng() % 5;
    std::vector<std::string> keys;
    for (std::size_t i = 0; i < size; ++i) keys.push_back("p" + std::to_string(i));
    auto d = make_domain(keys);
    std::vector<Bits> members;
    auto count = 1 + rng() % 6;
    for (std::size_t t = 0; t < count; ++t) {
      Bits b(size);
      for (auto& x : b) x = rng() & 1;
      members.push_back(b);
    }
    ConceptClass c(d, members);
    Bits a(size);
    for (auto& x : a) x = rng() & 1;
    Concept ca{d, a};
    bool prev = true;
    for (std::size_t n = 0; n <= size; ++n) {
      auto r = is_n_consistent(ca, c, n);
      CHECK(r.consistent == consistent_by_subsets(a, c, n));
      if (!prev) CHECK_FALSE(r.consistent);  // n-inconsistent stays inconsistent
      prev = r.consistent;
      if (!r.consistent) {
        PartialConcept part = restrict(ca, r.witness);
        for (const auto& m : c.members()) CHECK_FALSE(is_extension(Concept{d, m}, part));
      }
    }
    // members are |domain|-consistent with their class
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(is_n_consistent(c.concept_at(i), c, size).consistent);
  }
}

TEST_CASE("classes from automata") {
  auto adv = advice_concept_class(enumerate_class(2, 1, 2));
  CHECK(adv.size() == 2);
  CHECK(adv.domain()->size() == 7);

  std::vector<std::pair<std::string, NominalDFA>> nom;
  for (const auto* name : {"empty", "full", "aa"}) nom.emplace_back(name, builtin_fixture(name));
  auto cls = nominal_concept_class(nom, 3);
  CHECK(cls.size() == 3);
  CHECK(cls.domain()->keys().front() == "ε");
  auto aa = cls.member(2);
  CHECK(aa[cls.domain()->index("0 0")] == 1);
  CHECK(aa[cls.domain()->index("0 1")] == 0);

  nom.emplace_back("aa again", builtin_fixture("aa"));
  CHECK(nominal_concept_class(nom, 3).size() == 3);
}
