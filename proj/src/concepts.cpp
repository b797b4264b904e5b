#include "qbounds/concepts.hpp"

#include <algorithm>

#include "qbounds/error.hpp"

namespace qbounds {

Domain::Domain(std::vector<std::string> keys) : keys_(std::move(keys)) {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (!index_.emplace(keys_[i], i).second) throw Error(Errc::invalid_argument, "duplicate domain key '" + keys_[i] + "'");
  }
}

std::optional<std::size_t> Domain::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Domain::index(const std::string& key) const {
  auto i = find(key);
  if (!i) throw Error(Errc::domain_mismatch, "instance '" + key + "' is not in the domain");
  return *i;
}

DomainPtr make_domain(std::vector<std::string> keys) { return std::make_shared<const Domain>(std::move(keys)); }

bool same_domain(const DomainPtr& a, const DomainPtr& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

PartialConcept restrict(const Concept& c, const std::vector<std::size_t>& indices) {
  PartialConcept out{c.domain, {}};
  for (auto i : indices) out.values[i] = c.bits.at(i);
  return out;
}

PartialConcept as_partial(const Concept& c) {
  PartialConcept out{c.domain, {}};
  for (std::size_t i = 0; i < c.bits.size(); ++i) out.values[i] = c.bits[i];
  return out;
}

bool is_extension(const PartialConcept& b, const PartialConcept& a) {
  if (!same_domain(a.domain, b.domain)) throw Error(Errc::domain_mismatch, "concepts live on different domains");
  for (const auto& [i, v] : a.values) {
    auto it = b.values.find(i);
    if (it == b.values.end() || it->second != v) return false;
  }
  return true;
}

bool is_extension(const Concept& b, const PartialConcept& a) {
  if (!same_domain(a.domain, b.domain)) throw Error(Errc::domain_mismatch, "concepts live on different domains");
  for (const auto& [i, v] : a.values) {
    if (b.bits.at(i) != v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ConceptClass::ConceptClass(DomainPtr domain, std::vector<Bits> members, std::vector<std::string> provenance)
    : domain_(std::move(domain)) {
  if (!domain_) throw Error(Errc::invalid_argument, "concept class needs a domain");
  if (members.empty()) throw Error(Errc::invalid_argument, "concept class must be nonempty");
  if (!provenance.empty() && provenance.size() != members.size()) {
    throw Error(Errc::invalid_argument, "one provenance entry per member");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != domain_->size()) throw Error(Errc::domain_mismatch, "member length differs from the domain");
    for (auto b : members[i]) {
      if (b > 1) throw Error(Errc::invalid_argument, "concept bits must be 0 or 1");
    }
    if (!lookup_.emplace(members[i], members_.size()).second) continue;
    members_.push_back(std::move(members[i]));
    if (!provenance.empty()) provenance_.push_back(std::move(provenance[i]));
  }
}

bool ConceptClass::contains(const Bits& bits) const { return lookup_.count(bits) != 0; }

std::optional<std::size_t> ConceptClass::find(const Bits& bits) const {
  auto it = lookup_.find(bits);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ConceptClass ConceptClass::subclass(const std::vector<std::size_t>& indices) const {
  std::vector<Bits> members;
  std::vector<std::string> prov;
  for (auto i : indices) {
    members.push_back(members_.at(i));
    if (!provenance_.empty()) prov.push_back(provenance_[i]);
  }
  return ConceptClass(domain_, std::move(members), std::move(prov));
}

ConceptClass all_concepts(const DomainPtr& domain) {
  const auto n = domain->size();
  if (n > kMaxExhaustiveDomain) throw Error(Errc::budget_exceeded, "all-concepts class needs a domain of at most 20");
  std::vector<Bits> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>(mask >> i & 1);
    members.push_back(std::move(b));
  }
  return ConceptClass(domain, std::move(members));
}

// ---------------------------------------------------------------------------

namespace {

// A restriction A|Y has no extension in C iff Y meets every disagreement set
// {x : c(x) != A(x)}. Smallest such Y by iterative deepening, branching on
// the unmet set with the fewest elements.
struct HittingSearch {
  const std::vector<std::vector<std::size_t>>& sets;
  std::vector<char> chosen;
  std::vector<std::size_t> picked;

  bool search(std::size_t budget) {
    const std::vector<std::size_t>* worst = nullptr;
    for (const auto& s : sets) {
      bool hit = std::any_of(s.begin(), s.end(), [&](std::size_t i) { return chosen[i] != 0; });
      if (!hit && (worst == nullptr || s.size() < worst->size())) worst = &s;
    }
    if (worst == nullptr) return true;
    if (budget == 0) return false;
    for (auto i : *worst) {
      chosen[i] = 1;
      picked.push_back(i);
      if (search(budget - 1)) return true;
      picked.pop_back();
      chosen[i] = 0;
    }
    return false;
  }
};

std::vector<std::vector<std::size_t>> disagreement_sets(const Bits& a, const ConceptClass& c) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(c.size());
  for (const auto& m : c.members()) {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (m[i] != a[i]) d.push_back(i);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> smallest_inconsistent_set(const Bits& a, const ConceptClass& c) {
  if (a.size() != c.domain()->size()) throw Error(Errc::domain_mismatch, "concept length differs from the domain");
  if (c.contains(a)) return std::nullopt;
  auto sets = disagreement_sets(a, c);
  HittingSearch h{sets, std::vector<char>(a.size(), 0), {}};
  for (std::size_t t = 0;; ++t) {
    if (h.search(t)) {
      std::sort(h.picked.begin(), h.picked.end());
      return h.picked;
    }
  }
}

ConsistencyResult is_n_consistent(const Concept& a, const ConceptClass& c, std::size_t n) {
  if (!same_domain(a.domain, c.domain())) throw Error(Errc::domain_mismatch, "concept and class on different domains");
  if (n > a.bits.size()) throw Error(Errc::invalid_argument, "restriction size exceeds the domain");
  auto y = smallest_inconsistent_set(a.bits, c);
  if (!y || y->size() > n) return {true, {}};
  // Any superset of an unextendable restriction is unextendable.
  std::vector<char> in(a.bits.size(), 0);
  for (auto i : *y) in[i] = 1;
  for (std::size_t i = 0; i < a.bits.size() && y->size() < n; ++i) {
    if (!in[i]) y->push_back(i);
  }
  std::sort(y->begin(), y->end());
  return {false, *y};
}

// ---------------------------------------------------------------------------

ConceptClass class_from_automata(const std::vector<Evaluator>& source, const DomainPtr& domain) {
  std::vector<Bits> members;
  std::vector<std::string> prov;
  for (const auto& e : source) {
    Bits b;
    b.reserve(domain->size());
    for (const auto& key : domain->keys()) b.push_back(e.member(key) ? 1 : 0);
    members.push_back(std::move(b));
    prov.push_back(e.name);
  }
  return ConceptClass(domain, std::move(members), std::move(prov));
}

DomainPtr advice_domain(std::string_view sigma, std::size_t m) { return make_domain(strings_up_to(sigma, m)); }

ConceptClass advice_concept_class(const std::vector<LanguageTable>& languages) {
  if (languages.empty()) throw Error(Errc::invalid_argument, "concept class must be nonempty");
  auto domain = advice_domain(languages.front().sigma, languages.front().m);
  std::vector<Bits> members;
  std::vector<std::string> prov;
  for (std::size_t i = 0; i < languages.size(); ++i) {
    const auto& l = languages[i];
    if (l.sigma != languages.front().sigma || l.m != languages.front().m) {
      throw Error(Errc::domain_mismatch, "languages over different domains");
    }
    members.push_back(l.bits);
    prov.push_back("L" + std::to_string(i));
  }
  return ConceptClass(domain, std::move(members), std::move(prov));
}

DomainPtr nominal_domain(const OrbitFiniteSet& alphabet, std::size_t max_length) {
  std::vector<std::string> keys;
  for (const auto& w : canonical_words(alphabet, max_length)) keys.push_back(format_word(alphabet, w));
  return make_domain(std::move(keys));
}

Evaluator nominal_evaluator(std::string name, const NominalDFA& m) {
  return {std::move(name), [m](const std::string& key) { return accepts(m, parse_word(m.alphabet(), key)).accepted; }};
}

ConceptClass nominal_concept_class(const std::vector<std::pair<std::string, NominalDFA>>& automata,
                                   std::size_t max_length) {
  if (automata.empty()) throw Error(Errc::invalid_argument, "concept class must be nonempty");
  auto domain = nominal_domain(automata.front().second.alphabet(), max_length);
  std::vector<Evaluator> source;
  for (const auto& [name, m] : automata) source.push_back(nominal_evaluator(name, m));
  return class_from_automata(source, domain);
}

}  // namespace qbounds
