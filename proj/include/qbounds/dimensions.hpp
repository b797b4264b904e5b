#pragma once

// Exact Littlestone and consistency dimensions of finite classes, and the
// side-by-side report against closed-form bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbounds/concepts.hpp"

namespace qbounds {

/// Complete binary tree stored as a node array, root at 0. Internal nodes
/// carry a domain index; the child on answer 1 is `one`, on 0 is `zero`.
/// Leaves carry the index of a class member realizing their path.
struct ShatteredTree {
  struct Node {
    bool leaf = true;
    std::size_t instance = 0;  // internal
    std::size_t one = 0;       // internal
    std::size_t zero = 0;      // internal
    std::size_t member = 0;    // leaf
  };
  std::size_t height = 0;
  std::vector<Node> nodes;
};

struct LdimResult {
  std::size_t value = 0;
  ShatteredTree tree;
};

inline constexpr std::size_t kMaxLdimClass = 4096;

LdimResult ldim_exact(const ConceptClass& c);
/// floor(log2 |C|).
std::size_t ldim_log_bound(const ConceptClass& c);
/// Every leaf sits at depth `height` and its member takes the value of each
/// edge on its path; returns a description of the first violation.
std::optional<std::string> check_shattered_tree(const ShatteredTree& t, const ConceptClass& c);

struct CdimResult {
  std::size_t value = 0;
  /// A concept outside H attaining the value, with a smallest set on which
  /// it has no extension in C. Empty when H holds every concept.
  std::optional<Bits> extremal;
  std::vector<std::size_t> witness;
};

/// Least n such that every concept n-consistent with C lies in H. Needs
/// C a subset of H and a domain of at most 20 instances.
CdimResult cdim_exact(const ConceptClass& c, const ConceptClass& h);

// ---------------------------------------------------------------------------

struct BoundRow {
  std::string setting;
  std::string params;
  std::string quantity;
  std::string exact;
  std::string paper_bound;
  std::string pass;  // "true", "false", or "ref" for asymptotic rows
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool ok() const;
};

struct AdviceSetting {
  std::size_t n = 1;
  std::size_t m = 1;
  std::size_t k = 2;
};

struct NominalSetting {
  std::string fixture;
  std::size_t witness_orbits = 0;  // n used for the orbit witness; 0 means orbits - 1
  std::size_t witness_k = 1;
  std::size_t word_length = 3;     // domain cap for the desk-scale class
};

/// nmk log2(n) + n.
double advice_ldim_bound(std::size_t n, std::size_t m, std::size_t k);
/// 2 binom(n+1,2) binom(pn,k) (3pn)^k.
std::uint64_t nominal_cdim_bound(std::size_t n, std::size_t k, std::size_t p);

/// The class L^adv_k(n,m) as concepts, by enumeration when within budget and
/// by the state-count filter otherwise.
ConceptClass advice_class(std::size_t k, std::size_t n, std::size_t m);

BoundReport advice_bound_report(const AdviceSetting& s);
BoundReport nominal_bound_report(const NominalSetting& s);
/// Same, for an automaton not among the builtins; `s.fixture` only labels rows.
BoundReport nominal_bound_report(const NominalSetting& s, const NominalDFA& fixture);

struct StateSetCounts {
  std::uint64_t state_sets = 0;
  std::uint64_t transition_functions = 0;  // summed over the state sets, alphabet N
};

/// Nominal sets with exactly n orbits of dimension at most k, up to
/// isomorphism, and the equivariant maps Q x N -> Q over all of them.
StateSetCounts nominal_state_set_counts(std::size_t n, std::size_t k);
BoundReport counting_report(std::size_t n, std::size_t k);

std::string bound_csv_header();
std::string bound_csv_rows(const BoundReport& r);

}  // namespace qbounds
