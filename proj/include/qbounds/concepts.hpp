#pragma once

// Finite instance spaces, concepts as bit-vectors over them, and classes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbounds/advice_dfa.hpp"
#include "qbounds/nominal_dfa.hpp"

namespace qbounds {

class Domain {
 public:
  /// Throws Errc::invalid_argument on duplicate keys.
  explicit Domain(std::vector<std::string> keys);

  std::size_t size() const noexcept { return keys_.size(); }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const std::string& key(std::size_t i) const { return keys_.at(i); }
  std::optional<std::size_t> find(const std::string& key) const;
  /// Throws Errc::domain_mismatch for a foreign key.
  std::size_t index(const std::string& key) const;

  friend bool operator==(const Domain& a, const Domain& b) { return a.keys_ == b.keys_; }

 private:
  std::vector<std::string> keys_;
  std::map<std::string, std::size_t> index_;
};

using DomainPtr = std::shared_ptr<const Domain>;
DomainPtr make_domain(std::vector<std::string> keys);

using Bits = std::vector<std::uint8_t>;

struct Concept {
  DomainPtr domain;
  Bits bits;
};

struct PartialConcept {
  DomainPtr domain;
  std::map<std::size_t, std::uint8_t> values;  // domain index -> bit

  std::size_t size() const noexcept { return values.size(); }
};

PartialConcept restrict(const Concept& c, const std::vector<std::size_t>& indices);
PartialConcept as_partial(const Concept& c);

/// Same domain object or equal key lists.
bool same_domain(const DomainPtr& a, const DomainPtr& b);

bool is_extension(const PartialConcept& b, const PartialConcept& a);
bool is_extension(const Concept& b, const PartialConcept& a);

class ConceptClass {
 public:
  /// Drops repeated bit-vectors, keeping the first occurrence and its
  /// provenance. Throws on an empty list or a wrong-length member.
  ConceptClass(DomainPtr domain, std::vector<Bits> members, std::vector<std::string> provenance = {});

  const DomainPtr& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Bits>& members() const noexcept { return members_; }
  const Bits& member(std::size_t i) const { return members_.at(i); }
  Concept concept_at(std::size_t i) const { return {domain_, members_.at(i)}; }
  const std::vector<std::string>& provenance() const noexcept { return provenance_; }
  bool contains(const Bits& bits) const;
  std::optional<std::size_t> find(const Bits& bits) const;
  /// Members with the given indices, in that order.
  ConceptClass subclass(const std::vector<std::size_t>& indices) const;

 private:
  DomainPtr domain_;
  std::vector<Bits> members_;
  std::vector<std::string> provenance_;
  std::map<Bits, std::size_t> lookup_;
};

inline constexpr std::size_t kMaxExhaustiveDomain = 20;

/// Every total concept on the domain; needs |domain| <= 20.
ConceptClass all_concepts(const DomainPtr& domain);

struct ConsistencyResult {
  bool consistent = true;
  /// On failure, a size-n set of domain indices whose restriction of A has
  /// no extension in the class.
  std::vector<std::size_t> witness;
};

ConsistencyResult is_n_consistent(const Concept& a, const ConceptClass& c, std::size_t n);

/// Size of the smallest index set on which A has no extension in C, or
/// nullopt when A is a member of C.
std::optional<std::vector<std::size_t>> smallest_inconsistent_set(const Bits& a, const ConceptClass& c);

struct Evaluator {
  std::string name;
  std::function<bool(const std::string&)> member;
};

/// Restricts each evaluator's language to the domain.
ConceptClass class_from_automata(const std::vector<Evaluator>& source, const DomainPtr& domain);

/// Domain Σ^{<=m} in length-then-lexicographic order.
DomainPtr advice_domain(std::string_view sigma, std::size_t m);
ConceptClass advice_concept_class(const std::vector<LanguageTable>& languages);

/// Canonical words of length <= max_length, formatted.
DomainPtr nominal_domain(const OrbitFiniteSet& alphabet, std::size_t max_length);
Evaluator nominal_evaluator(std::string name, const NominalDFA& m);
ConceptClass nominal_concept_class(const std::vector<std::pair<std::string, NominalDFA>>& automata,
                                   std::size_t max_length);

}  // namespace qbounds
