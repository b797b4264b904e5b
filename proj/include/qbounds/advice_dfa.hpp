#pragma once

// Advice automata on strings of length at most m. The advice letter read at
// step l is identified with the transition table used at that step.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qbounds {

/// Strings of Σ^{<=m} in length-then-lexicographic order, where the order of
/// symbols is their order in `sigma`.
std::vector<std::string> strings_up_to(std::string_view sigma, std::size_t m);
/// Position of x in strings_up_to(sigma, |x|) and any longer horizon.
std::size_t string_index(std::string_view sigma, std::string_view x);

struct AdviceDFA {
  std::string sigma;
  std::size_t m = 0;
  std::size_t n = 1;
  std::size_t q0 = 0;
  std::vector<std::size_t> accepting;
  /// steps[l][q * |sigma| + s] is the successor of q on symbol s at step l+1.
  std::vector<std::vector<std::size_t>> steps;

  /// Throws Errc::invalid_automaton on shape or range errors.
  void validate() const;
  bool is_accepting(std::size_t q) const;
};

/// Throws Errc::invalid_argument for strings longer than m or foreign symbols.
bool accepts(const AdviceDFA& m, std::string_view x);

struct LanguageTable {
  std::string sigma;
  std::size_t m = 0;
  std::vector<std::uint8_t> bits;  // indexed like strings_up_to(sigma, m)

  bool at(std::string_view x) const;
  std::size_t size() const noexcept { return bits.size(); }
  friend bool operator==(const LanguageTable&, const LanguageTable&) = default;
  friend auto operator<=>(const LanguageTable&, const LanguageTable&) = default;
};

inline constexpr std::size_t kMaxTableEntries = 1'000'000;

LanguageTable language_table(const AdviceDFA& m);
LanguageTable table_from_predicate(std::string_view sigma, std::size_t m,
                                   const std::function<bool(std::string_view)>& member);

struct MNPartition {
  std::size_t length = 0;
  /// Blocks in order of their least string; strings inside a block sorted.
  std::vector<std::vector<std::string>> blocks;
};

/// Classes of Σ^l under x ~ y iff L(xz) = L(yz) for all z in Σ^{<=m-l}.
MNPartition mn_partition(const LanguageTable& l, std::size_t length);
/// max over l <= m of the number of classes.
std::size_t max_class_count(const LanguageTable& l);

/// Automaton on at most 2 * max_class_count states recognizing L.
AdviceDFA synthesize(const LanguageTable& l);

struct MinimalStates {
  std::size_t states = 0;
  AdviceDFA realization;
};

/// Exact least state count of an advice automaton recognizing L on Σ^{<=m}:
/// the most accepting classes at any length plus the most rejecting classes.
MinimalStates minimal_states(const LanguageTable& l);

/// The first k digits "01..." as an alphabet.
std::string digit_alphabet(std::size_t k);

/// Every language recognized by some n-state automaton over digit_alphabet(k)
/// with horizon m, deduplicated and sorted. Requires n^{nmk} 2^n <= budget.
std::vector<LanguageTable> enumerate_class(std::size_t k, std::size_t n, std::size_t m,
                                           std::uint64_t budget = 10'000'000);

/// Number of machines enumerate_class would visit; throws on overflow.
std::uint64_t machine_count(std::size_t k, std::size_t n, std::size_t m);

/// All languages on Σ^{<=m} with minimal_states <= n, sorted.
std::vector<LanguageTable> class_by_minimal_states(std::size_t k, std::size_t n, std::size_t m);

/// Over {0,1}: w is in L_k iff (#0(w) divisible by k and |w| != 2) or |w| = 3.
LanguageTable tightness_language(std::size_t k, std::size_t m);
/// The minimal realization of tightness_language(k, m).
AdviceDFA tightness_automaton(std::size_t k, std::size_t m);

}  // namespace qbounds
