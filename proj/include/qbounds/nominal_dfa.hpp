#pragma once

// Deterministic automata whose states form an orbit-finite nominal set.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qbounds/nominal.hpp"

namespace qbounds {

using Word = std::vector<Element>;

/// Length first, then lexicographic on (orbit, atoms) letter by letter.
bool word_less(const Word& a, const Word& b);
/// Sorted distinct atoms occurring in w.
std::vector<Atom> word_atoms(const Word& w);
Word act_word(const OrbitFiniteSet& alphabet, const AtomPermutation& pi, const Word& w);
/// Atoms renamed by first use (the orbit invariant of w).
Word canonical_word(const OrbitFiniteSet& alphabet, const Word& w);
/// Every canonical word of length <= max_length, in word_less order.
std::vector<Word> canonical_words(const OrbitFiniteSet& alphabet, std::size_t max_length);

/// Letters are separated by spaces, atoms in a letter by commas. With more
/// than one alphabet orbit a letter is written "o:a,b"; an arity-0 letter is
/// "()". The empty word is "ε".
std::string format_word(const OrbitFiniteSet& alphabet, const Word& w);
Word parse_word(const OrbitFiniteSet& alphabet, std::string_view text);

/// One transition entry keyed by the product orbit's first-use pattern.
struct TransitionSpec {
  std::size_t state_orbit = 0;
  std::size_t letter_orbit = 0;
  std::vector<Atom> product_orbit_case;
  std::size_t target_orbit = 0;
  std::vector<std::size_t> injection;  // 1-based positions into the product orbit
};

class NominalDFA {
 public:
  /// `transitions[i]` handles orbit i of states x alphabet.
  NominalDFA(OrbitFiniteSet alphabet, OrbitFiniteSet states, std::vector<OrbitMapping> transitions,
             std::size_t initial_orbit, std::vector<std::size_t> accepting);

  const OrbitFiniteSet& alphabet() const noexcept { return alphabet_; }
  const OrbitFiniteSet& states() const noexcept { return product_.left(); }
  const ProductSet& product() const noexcept { return product_; }
  const EquivariantMap& transition() const noexcept { return transition_; }
  Element initial() const { return Element{initial_orbit_, {}}; }
  std::size_t initial_orbit() const noexcept { return initial_orbit_; }
  const std::vector<std::size_t>& accepting() const noexcept { return accepting_; }
  bool is_accepting(std::size_t orbit) const;

  Element step(const Element& q, const Element& a) const;
  Element run_from(const Element& q, const Word& w) const;
  /// Throws Errc::alphabet_mismatch unless `a` is a letter of the alphabet.
  void check_letter(const Element& a) const;
  std::vector<TransitionSpec> transition_specs() const;

 private:
  OrbitFiniteSet alphabet_;
  ProductSet product_;
  EquivariantMap transition_;
  std::size_t initial_orbit_ = 0;
  std::vector<std::size_t> accepting_;
};

/// Builds an automaton from per-orbit-case entries; every product orbit must
/// be covered exactly once.
NominalDFA build_automaton(OrbitFiniteSet alphabet, OrbitFiniteSet states, std::size_t initial_orbit,
                           std::vector<std::size_t> accepting, const std::vector<TransitionSpec>& specs);

struct RunTrace {
  std::vector<Element> states;
};

struct RunResult {
  bool accepted = false;
  RunTrace trace;
};

RunResult accepts(const NominalDFA& m, const Word& w);

struct ReachableOrbits {
  std::vector<std::size_t> orbits;  // indices into M's states, in discovery order
  std::vector<Word> witnesses;      // shortest canonical lexicographically least
  OrbitFiniteSet set;               // the reachable orbits as a set
};

ReachableOrbits reachable_orbits(const NominalDFA& m);

/// Shortest canonical lexicographically least word on which acceptance
/// differs, or nullopt when the languages are equal.
std::optional<Word> equivalence_check(const NominalDFA& m1, const NominalDFA& m2);

/// Shortest lexicographically least z with acceptance of q1.z and q2.z
/// differing. The atoms of q1 and q2 keep their identity in z.
std::optional<Word> distinguishing_suffix(const NominalDFA& m1, const Element& q1, const NominalDFA& m2,
                                          const Element& q2);

/// Letters up to renaming that fixes `relevant`: each position holds an atom
/// of `relevant` or the next fresh atom.
std::vector<Element> candidate_letters(const OrbitFiniteSet& alphabet, const std::vector<Atom>& relevant);

struct Minimized {
  NominalDFA automaton;
  /// From the reachable part of the input (`reachable` lists its orbits) to
  /// the states of `automaton`.
  EquivariantMap homomorphism;
  std::vector<std::size_t> reachable;
};

Minimized minimize(const NominalDFA& m);

/// True when `f` is a bijection: orbit targets form a permutation and every
/// orbit maps onto a same-size orbit by a full-length injection.
bool is_isomorphism(const EquivariantMap& f);

/// One representative per state orbit of a minimized automaton.
std::vector<Word> short_witnesses(const NominalDFA& minimized);

struct DimensionBoundReport {
  std::size_t orbit_count = 0;
  std::size_t dimension = 0;
  std::size_t alphabet_dimension = 0;
  std::size_t bound = 0;  // (orbit_count - 1) * alphabet_dimension
  bool ok = false;
};

DimensionBoundReport dimension_bound_check(const NominalDFA& minimized);

std::vector<std::string> builtin_fixture_names();
/// Throws Errc::invalid_argument for an unknown name.
NominalDFA builtin_fixture(std::string_view name);

/// Orbit 0 is a point and the initial state; other orbits are free of
/// arity <= max_arity. Alphabet N, random transitions and accepting set.
NominalDFA random_automaton(std::mt19937_64& rng, std::size_t orbits, std::size_t max_arity);

}  // namespace qbounds
