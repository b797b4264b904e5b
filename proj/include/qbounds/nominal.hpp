#pragma once

// Orbit-finite nominal sets over the equality symmetry.
//
// A single orbit is presented as a support representation [k, S]: k-tuples of
// pairwise distinct atoms modulo a subgroup S of Sym([k]), where
//   a ==_S b  iff  there is tau in S with a[tau(i)] = b[i] for all i.
// Elements store the lexicographically least tuple of their class. Atoms are
// 0-based naturals; positions into tuples in injections are 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "qbounds/permgroup.hpp"

namespace qbounds {

using Atom = std::uint32_t;
using AtomTuple = std::vector<Atom>;

/// A finitely supported permutation of the atoms; identity off `moved()`.
class AtomPermutation {
 public:
  AtomPermutation() = default;
  static AtomPermutation transposition(Atom a, Atom b);
  /// Throws unless `mapping` is a bijection of its key set onto itself.
  static AtomPermutation from_map(const std::map<Atom, Atom>& mapping);

  Atom operator()(Atom a) const;
  AtomPermutation inverse() const;
  bool is_identity() const noexcept { return moved_.empty(); }
  const std::map<Atom, Atom>& moved() const noexcept { return moved_; }
  std::string to_string() const;

  /// (a * b)(x) = a(b(x)).
  friend AtomPermutation operator*(const AtomPermutation& a, const AtomPermutation& b);
  friend bool operator==(const AtomPermutation&, const AtomPermutation&) = default;

 private:
  std::map<Atom, Atom> moved_;
};

AtomTuple apply(const AtomPermutation& pi, std::span<const Atom> tuple);
bool pairwise_distinct(std::span<const Atom> tuple);

struct SupportRepresentation {
  std::size_t arity = 0;
  Subgroup symmetry;

  SupportRepresentation() = default;
  SupportRepresentation(std::size_t arity, Subgroup symmetry);
  /// [k, trivial], i.e. N^(k).
  static SupportRepresentation free(std::size_t arity);

  friend bool operator==(const SupportRepresentation&, const SupportRepresentation&) = default;
};

struct OrbitFiniteSet {
  std::vector<SupportRepresentation> orbits;

  std::size_t orbit_count() const noexcept { return orbits.size(); }
  /// Largest arity, i.e. the nominal dimension.
  std::size_t dimension() const noexcept;

  friend bool operator==(const OrbitFiniteSet&, const OrbitFiniteSet&) = default;
};

/// The atoms N as a one-orbit set.
OrbitFiniteSet atoms_set();

struct Element {
  std::size_t orbit = 0;
  AtomTuple atoms;  // canonical modulo the orbit's symmetry

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Lexicographically least tuple in the ==_S class of `tuple`.
AtomTuple canonicalize(std::span<const Atom> tuple, const Subgroup& symmetry);

/// Validates arity and distinctness, then canonicalizes.
Element make_element(const OrbitFiniteSet& set, std::size_t orbit, AtomTuple atoms);
Element act(const OrbitFiniteSet& set, const AtomPermutation& pi, const Element& x);

/// Least support of x, sorted. Computed by checking, for each tuple atom a,
/// whether swapping a with a fresh atom moves x.
std::vector<Atom> least_support(const OrbitFiniteSet& set, const Element& x);

/// Every element of one orbit whose atoms are drawn from {0, ..., pool-1}.
std::vector<Element> elements_over(const OrbitFiniteSet& set, std::size_t orbit, std::size_t pool);

/// Number of orbits of N^(k1) x N^(k2): sum_r C(k1,r) C(k2,r) r!.
std::uint64_t fN_pair(long long k1, long long k2);

// ---------------------------------------------------------------------------
// Orbit patterns of tuples of elements.

struct PatternItem {
  const Subgroup* symmetry;
  std::span<const Atom> atoms;
};

/// Orbit invariant of a list of (class) tuples: the lexicographically least
/// first-use renaming over all choices of class representatives. `atoms[i]`
/// is the concrete atom that the winning renaming sent to i.
struct Pattern {
  std::vector<Atom> renamed;
  AtomTuple atoms;
};

Pattern min_pattern(std::span<const PatternItem> items);

struct ProductOrbit {
  std::size_t left_orbit = 0;
  std::size_t right_orbit = 0;
  /// Left representative followed by right representative, renamed by first use.
  std::vector<Atom> pattern;
  /// The orbit as [r, U]; tuple position i holds atom i of the pattern.
  SupportRepresentation shape;
  Element left;
  Element right;
};

/// Orbits of the single-orbit product [k1,S] x [k2,T], sorted by pattern.
std::vector<ProductOrbit> pair_orbits(const SupportRepresentation& left,
                                      const SupportRepresentation& right);

class ProductSet {
 public:
  ProductSet() = default;
  ProductSet(OrbitFiniteSet left, OrbitFiniteSet right);

  const OrbitFiniteSet& left() const noexcept { return left_; }
  const OrbitFiniteSet& right() const noexcept { return right_; }
  /// One support representation per product orbit.
  const OrbitFiniteSet& set() const noexcept { return set_; }
  const std::vector<ProductOrbit>& orbits() const noexcept { return orbits_; }

  struct Located {
    std::size_t orbit;
    AtomTuple atoms;  // concrete atoms in the orbit's tuple order
  };
  Located locate(const Element& x, const Element& y) const;
  Element pair(const Element& x, const Element& y) const;
  std::pair<Element, Element> split(const Element& p) const;
  /// Index of the orbit with the given sides and pattern; throws if absent.
  std::size_t find(std::size_t left_orbit, std::size_t right_orbit,
                   const std::vector<Atom>& pattern) const;

 private:
  OrbitFiniteSet left_;
  OrbitFiniteSet right_;
  OrbitFiniteSet set_;
  std::vector<ProductOrbit> orbits_;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<Atom>>, std::size_t> index_;
};

ProductSet orbits_of_product(const OrbitFiniteSet& x, const OrbitFiniteSet& y);

// ---------------------------------------------------------------------------
// Equivariant maps.

struct OrbitMapping {
  std::size_t target_orbit = 0;
  /// u : [l] -> [k], 1-based; output tuple is (x[u(1)], ..., x[u(l)]).
  std::vector<std::size_t> injection;

  friend bool operator==(const OrbitMapping&, const OrbitMapping&) = default;
};

/// For all sigma in S there is tau in T with sigma o u = u o tau.
bool injection_condition(const Subgroup& source, const Subgroup& target,
                         std::span<const std::size_t> injection);

struct EquivariantMap {
  OrbitFiniteSet source;
  OrbitFiniteSet target;
  std::vector<OrbitMapping> per_orbit;

  Element apply(const Element& x) const;
  /// Throws Errc::invalid_argument on a malformed or non-equivariant entry.
  void validate() const;
};

/// One map per ==_T class of admissible injections.
std::vector<EquivariantMap> equivariant_maps_between(const SupportRepresentation& src,
                                                     const SupportRepresentation& dst);

/// Same arity and conjugate symmetries.
bool iso_single_orbit(const SupportRepresentation& a, const SupportRepresentation& b);

/// Single-orbit nominal sets of dimension exactly k, up to isomorphism.
std::size_t count_single_orbit_sets(std::size_t k);

// ---------------------------------------------------------------------------
// Quotients by equivariant equivalence relations.

using RelationOracle = std::function<bool(const Element&, const Element&)>;

struct QuotientOptions {
  bool validate = true;
  std::uint64_t seed = 1;
  std::size_t max_pairs = 20000;
  std::size_t max_triples = 20000;
};

struct QuotientOrbitInfo {
  std::size_t source_orbit = 0;               // orbit of X holding the representative
  std::vector<std::size_t> support_positions;  // 0-based positions in (0, ..., k-1)
};

struct Quotient {
  OrbitFiniteSet set;
  EquivariantMap projection;
  std::vector<QuotientOrbitInfo> lifts;

  /// An element of X projecting to q whose non-support atoms avoid `avoid`.
  Element lift(const OrbitFiniteSet& x, const Element& q, std::span<const Atom> avoid) const;
};

/// X / R. Throws Errc::invalid_relation when R fails the sampled checks
/// (reflexivity, symmetry, transitivity, equivariance, support containment).
Quotient quotient(const OrbitFiniteSet& x, const RelationOracle& relation,
                  const QuotientOptions& options = {});

}  // namespace qbounds
