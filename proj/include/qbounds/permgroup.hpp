#pragma once

// Permutations of [k], subgroups of Sym([k]), and conjugacy of subgroups.
//
// Points are stored 0-based internally; the cycle notation used for text
// and JSON is 1-based, so "(1 2)" swaps the first two points.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbounds {

inline constexpr std::size_t kMaxClosureDegree = 8;
inline constexpr std::size_t kMaxEnumerationDegree = 5;

class Permutation {
 public:
  Permutation() = default;
  /// `images[i]` is the 0-based image of point i. Throws unless bijective.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t degree);
  /// Parses 1-based cycle notation such as "(1 2)(3 4)" or "id".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t point) const { return images_[point]; }
  std::span<const std::uint8_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::string to_string() const;

  /// Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// All permutations of degree k in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t degree);

class Subgroup {
 public:
  /// Trivial subgroup of Sym([0]).
  Subgroup() : Subgroup(trivial(0)) {}

  static Subgroup trivial(std::size_t degree);
  static Subgroup symmetric(std::size_t degree);
  /// Builds from a full element list; throws unless closed under composition.
  static Subgroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Sorted, identity first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;

  /// A small generating set, picked greedily in element order.
  std::vector<Permutation> generators() const;
  /// rho S rho^-1.
  Subgroup conjugate(const Permutation& rho) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }
  /// Canonical order: size first, then the sorted element lists.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(std::size_t degree, std::vector<Permutation> sorted_elements)
      : degree_(degree), elements_(std::move(sorted_elements)) {}
  friend Subgroup subgroup_closure(std::span<const Permutation>, std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Smallest subgroup of Sym([degree]) containing `generators`.
Subgroup subgroup_closure(std::span<const Permutation> generators, std::size_t degree);

/// Every subgroup of Sym([k]) once, in canonical order. 1 <= k <= 5.
std::vector<Subgroup> enumerate_subgroups(std::size_t k);

struct ConjugacyClassTable {
  std::size_t degree = 0;
  /// Each inner list is one class, its canonical representative first.
  std::vector<std::vector<Subgroup>> classes;
};

ConjugacyClassTable subgroup_conjugacy_classes(std::size_t k);

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Permutation> witness;  // rho with rho S rho^-1 = T
};

ConjugacyResult are_conjugate_subgroups(const Subgroup& s, const Subgroup& t);

}  // namespace qbounds
