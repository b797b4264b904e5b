#include "qbounds/permgroup.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qbounds/error.hpp"

namespace qbounds {

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(Errc::invalid_argument, "permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  auto images = identity(degree).images_;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "id" || pos == text.size()) return Permutation(std::move(images));

  // Cycles compose right to left, so read them all first.
  std::vector<std::vector<std::size_t>> cycles;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw Error(Errc::parse_error, "expected '(' in cycle string");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0) throw Error(Errc::parse_error, "malformed cycle string");
      if (value < 1 || value > degree) throw Error(Errc::parse_error, "cycle point out of range");
      cycle.push_back(value - 1);
    }
    cycles.push_back(std::move(cycle));
  }
  auto result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<std::uint8_t> step = identity(degree).images_;
    std::set<std::size_t> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) throw Error(Errc::parse_error, "repeated point in cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      step[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    }
    result = Permutation(std::move(step)) * result;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    std::size_t p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (p + 1);
      done[p] = true;
      first = false;
      p = images_[p];
    } while (p != start);
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "id" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(Errc::degree_mismatch, "composing permutations");
  std::vector<std::uint8_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation> out;
  std::vector<std::uint8_t> cur(degree);
  std::iota(cur.begin(), cur.end(), std::uint8_t{0});
  do {
    out.emplace_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

// ---------------------------------------------------------------------------

Subgroup Subgroup::trivial(std::size_t degree) {
  return Subgroup(degree, {Permutation::identity(degree)});
}

Subgroup Subgroup::symmetric(std::size_t degree) {
  if (degree > kMaxClosureDegree) throw Error(Errc::unsupported_degree, "Sym(k) for k > 8");
  return Subgroup(degree, all_permutations(degree));
}

Subgroup Subgroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  for (const auto& p : elements) {
    if (p.degree() != degree) throw Error(Errc::degree_mismatch, "subgroup element degree");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) {
    throw Error(Errc::invalid_argument, "subgroup must contain the identity");
  }
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), a * b)) {
        throw Error(Errc::invalid_argument, "element list is not closed under composition");
      }
    }
  }
  return Subgroup(degree, std::move(elements));
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<Permutation> Subgroup::generators() const {
  std::vector<Permutation> gens;
  std::size_t generated = 1;
  for (const auto& p : elements_) {
    if (generated == elements_.size()) break;
    auto current = subgroup_closure(gens, degree_);
    if (current.contains(p)) continue;
    gens.push_back(p);
    generated = subgroup_closure(gens, degree_).size();
  }
  return gens;
}

Subgroup Subgroup::conjugate(const Permutation& rho) const {
  if (rho.degree() != degree_) throw Error(Errc::degree_mismatch, "conjugating permutation");
  auto inv = rho.inverse();
  std::vector<Permutation> out;
  out.reserve(elements_.size());
  for (const auto& s : elements_) out.push_back(rho * s * inv);
  std::sort(out.begin(), out.end());
  return Subgroup(degree_, std::move(out));
}

std::vector<std::string> Subgroup::to_strings() const {
  std::vector<std::string> out;
  for (const auto& p : elements_) out.push_back(p.to_string());
  return out;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
  return a.elements_ <=> b.elements_;
}

Subgroup subgroup_closure(std::span<const Permutation> generators, std::size_t degree) {
  if (degree > kMaxClosureDegree) throw Error(Errc::unsupported_degree, "closure degree above 8");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(Errc::degree_mismatch, "generators of mixed degree");
  }
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      auto q = g * p;
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return Subgroup(degree, {seen.begin(), seen.end()});
}

// ---------------------------------------------------------------------------
// Enumeration works on Sym(k) as an indexed table with bitset membership.

namespace {

constexpr std::size_t kMaxOrder = 120;  // 5!
using Members = std::bitset<kMaxOrder>;

struct SymTable {
  std::vector<Permutation> perms;
  std::vector<std::vector<std::uint8_t>> mult;   // mult[a][b] = index of a*b
  std::vector<std::vector<std::uint8_t>> conj;   // conj[r][s] = index of r s r^-1

  explicit SymTable(std::size_t k) : perms(all_permutations(k)) {
    const auto n = perms.size();
    std::map<Permutation, std::uint8_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<std::uint8_t>(i));
    mult.assign(n, std::vector<std::uint8_t>(n));
    conj.assign(n, std::vector<std::uint8_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      auto inv = perms[a].inverse();
      for (std::size_t b = 0; b < n; ++b) {
        mult[a][b] = index.at(perms[a] * perms[b]);
        conj[a][b] = index.at(perms[a] * perms[b] * inv);
      }
    }
  }

  Members closure(const std::vector<std::uint8_t>& gens) const {
    Members m;
    m.set(0);  // identity is the lexicographically first permutation
    std::vector<std::uint8_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto g : gens) {
        auto q = mult[g][queue[head]];
        if (!m.test(q)) {
          m.set(q);
          queue.push_back(q);
        }
      }
    }
    return m;
  }

  Subgroup to_subgroup(std::size_t k, const Members& m) const {
    std::vector<Permutation> elems;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (m.test(i)) elems.push_back(perms[i]);
    }
    return Subgroup::from_elements(k, std::move(elems));
  }
};

struct MembersLess {
  bool operator()(const Members& a, const Members& b) const {
    for (std::size_t i = 0; i < kMaxOrder; ++i) {
      if (a.test(i) != b.test(i)) return b.test(i);
    }
    return false;
  }
};

void check_enumeration_degree(std::size_t k) {
  if (k < 1 || k > kMaxEnumerationDegree) {
    throw Error(Errc::unsupported_degree, "subgroup enumeration needs 1 <= k <= 5");
  }
}

std::vector<Members> enumerate_member_sets(const SymTable& table) {
  std::map<Members, std::vector<std::uint8_t>, MembersLess> found;
  std::vector<Members> order;
  Members trivial;
  trivial.set(0);
  found.emplace(trivial, std::vector<std::uint8_t>{});
  order.push_back(trivial);
  // Every subgroup is finitely generated, so adjoining one element at a time
  // from the trivial group reaches all of them.
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto current = order[head];
    const auto gens = found.at(current);
    for (std::size_t g = 0; g < table.perms.size(); ++g) {
      if (current.test(g)) continue;
      auto next_gens = gens;
      next_gens.push_back(static_cast<std::uint8_t>(g));
      auto next = table.closure(next_gens);
      if (found.emplace(next, next_gens).second) order.push_back(next);
    }
  }
  return order;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(std::size_t k) {
  check_enumeration_degree(k);
  SymTable table(k);
  std::vector<Subgroup> out;
  for (const auto& m : enumerate_member_sets(table)) out.push_back(table.to_subgroup(k, m));
  std::sort(out.begin(), out.end());
  return out;
}

ConjugacyClassTable subgroup_conjugacy_classes(std::size_t k) {
  check_enumeration_degree(k);
  SymTable table(k);
  auto sets = enumerate_member_sets(table);
  std::map<Members, std::size_t, MembersLess> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i], i);

  std::vector<std::size_t> class_of(sets.size(), sets.size());
  std::vector<std::vector<std::size_t>> raw_classes;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (class_of[i] != sets.size()) continue;
    std::set<std::size_t> members;
    for (std::size_t r = 0; r < table.perms.size(); ++r) {
      Members image;
      for (std::size_t s = 0; s < table.perms.size(); ++s) {
        if (sets[i].test(s)) image.set(table.conj[r][s]);
      }
      members.insert(index.at(image));
    }
    for (auto m : members) class_of[m] = raw_classes.size();
    raw_classes.emplace_back(members.begin(), members.end());
  }

  ConjugacyClassTable result;
  result.degree = k;
  for (const auto& cls : raw_classes) {
    std::vector<Subgroup> members;
    for (auto m : cls) members.push_back(table.to_subgroup(k, sets[m]));
    std::sort(members.begin(), members.end());
    result.classes.push_back(std::move(members));
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

ConjugacyResult are_conjugate_subgroups(const Subgroup& s, const Subgroup& t) {
  if (s.degree() != t.degree()) throw Error(Errc::degree_mismatch, "conjugacy test");
  if (s.size() != t.size()) return {};
  if (s.degree() > kMaxClosureDegree) throw Error(Errc::unsupported_degree, "conjugacy above degree 8");
  for (const auto& rho : all_permutations(s.degree())) {
    if (s.conjugate(rho) == t) return {true, rho};
  }
  return {};
}

}  // namespace qbounds
