#pragma once

// Finite witness sets B: restrictions L|B that no member of a class extends.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qbounds/advice_dfa.hpp"
#include "qbounds/concepts.hpp"
#include "qbounds/nominal_dfa.hpp"

namespace qbounds {

enum class WitnessKind { advice_classes, nominal_dimension, nominal_orbits, non_equivariance };

const char* to_string(WitnessKind kind) noexcept;
WitnessKind witness_kind_from_string(const std::string& s);

struct AdviceProvenance {
  std::string sigma;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t length = 0;          // the l with more than n classes
  std::vector<std::string> reps;   // x_0 .. x_n, pairwise inequivalent
  struct Suffix {
    std::size_t i = 0;
    std::size_t j = 0;
    std::string z;
  };
  std::vector<Suffix> suffixes;    // one per pair i < j
};

struct DimensionProvenance {
  std::size_t k = 0;
  Word x0;
  std::vector<Atom> support;       // least support of the state reached by x0
  std::vector<Atom> chosen;        // D_0, the first k+1 support atoms
  Atom shift = 0;                  // j; tau_i swaps i and i + j
  std::vector<Word> suffixes;      // z_i, aligned with `chosen`
};

struct OrbitProvenance {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  std::vector<Word> reps;                  // x_0 .. x_n
  std::vector<std::vector<Atom>> supports; // D_i
  std::vector<Atom> fresh;                 // D
  struct Entry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::pair<Atom, Atom>> injection;  // sigma' as (source, image)
    Word z;
  };
  std::vector<Entry> entries;
};

struct NonEquivarianceProvenance {
  Word x0;
  Word moved;                       // pi . x0
  std::vector<std::pair<Atom, Atom>> pi;
};

using WitnessProvenance =
    std::variant<AdviceProvenance, DimensionProvenance, OrbitProvenance, NonEquivarianceProvenance>;

struct WitnessSet {
  WitnessKind kind = WitnessKind::advice_classes;
  std::vector<std::string> points;  // instance keys, deduplicated, in domain order
  std::size_t claimed_bound = 0;
  /// Points as built, one per (pair, suffix) slot before merging repeats.
  std::size_t constructed = 0;
  OrbitFiniteSet alphabet;          // word alphabet; unused for advice
  WitnessProvenance provenance;
  std::vector<std::string> notes;
};

/// Precondition: some length has more than n classes.
WitnessSet advice_witness(const LanguageTable& l, std::size_t n);
/// Precondition: the minimal automaton has a state with least support > k.
WitnessSet nominal_dimension_witness(const NominalDFA& m, std::size_t k);
/// Precondition: the minimal automaton has more than n orbits and k <= pn.
WitnessSet nominal_orbit_witness(const NominalDFA& m, std::size_t n, std::size_t k);

struct WordTable {
  OrbitFiniteSet alphabet;
  std::vector<std::pair<Word, bool>> entries;
};

/// Precondition: two entries in one orbit carry different labels.
WitnessSet non_equivariance_witness(const WordTable& table);

/// sigma' extended to a permutation: leftover images go back to leftover
/// sources, both in increasing order.
AtomPermutation extend_injection(const std::vector<std::pair<Atom, Atom>>& injection);

/// Recomputes the point set from the provenance alone.
std::vector<std::string> replay_points(const WitnessSet& w);

struct Fixture {
  std::string name;
  std::function<bool(const std::string&)> member;
};

struct WitnessValidation {
  bool ok = false;
  std::string mode;                         // "fixture-relative" or "full-extension"
  std::vector<std::string> agreeing;        // fixtures extending L|B
  std::uint64_t extensions_checked = 0;
  std::vector<std::string> problems;
};

/// L|B must not be extended by any fixture. For advice witnesses on at most
/// 20 strings every total extension is also checked to need more than n
/// classes at the witnessed length.
WitnessValidation validate_witness(const WitnessSet& w, const std::function<bool(const std::string&)>& language,
                                   const std::vector<Fixture>& in_class);

/// Throwing form: Errc::validation_failure naming the agreeing fixtures.
void require_valid_witness(const WitnessSet& w, const std::function<bool(const std::string&)>& language,
                           const std::vector<Fixture>& in_class);

}  // namespace qbounds
