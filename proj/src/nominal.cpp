#include "qbounds/nominal.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "qbounds/combinatorics.hpp"
#include "qbounds/error.hpp"

namespace qbounds {

// ---------------------------------------------------------------------------
// AtomPermutation

AtomPermutation AtomPermutation::transposition(Atom a, Atom b) {
  AtomPermutation p;
  if (a != b) {
    p.moved_.emplace(a, b);
    p.moved_.emplace(b, a);
  }
  return p;
}

AtomPermutation AtomPermutation::from_map(const std::map<Atom, Atom>& mapping) {
  std::set<Atom> keys;
  std::set<Atom> values;
  for (const auto& [k, v] : mapping) {
    keys.insert(k);
    values.insert(v);
  }
  if (keys != values) throw Error(Errc::invalid_argument, "atom map is not a bijection of its domain");
  AtomPermutation p;
  for (const auto& [k, v] : mapping) {
    if (k != v) p.moved_.emplace(k, v);
  }
  return p;
}

Atom AtomPermutation::operator()(Atom a) const {
  auto it = moved_.find(a);
  return it == moved_.end() ? a : it->second;
}

AtomPermutation AtomPermutation::inverse() const {
  AtomPermutation p;
  for (const auto& [k, v] : moved_) p.moved_.emplace(v, k);
  return p;
}

AtomPermutation operator*(const AtomPermutation& a, const AtomPermutation& b) {
  std::set<Atom> domain;
  for (const auto& kv : a.moved_) domain.insert(kv.first);
  for (const auto& kv : b.moved_) domain.insert(kv.first);
  AtomPermutation out;
  for (auto x : domain) {
    auto y = a(b(x));
    if (y != x) out.moved_.emplace(x, y);
  }
  return out;
}

std::string AtomPermutation::to_string() const {
  if (moved_.empty()) return "id";
  std::ostringstream out;
  std::set<Atom> done;
  for (const auto& [start, unused] : moved_) {
    if (done.count(start)) continue;
    out << '(';
    Atom p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << p;
      done.insert(p);
      first = false;
      p = (*this)(p);
    } while (p != start);
    out << ')';
  }
  return out.str();
}

AtomTuple apply(const AtomPermutation& pi, std::span<const Atom> tuple) {
  AtomTuple out;
  out.reserve(tuple.size());
  for (auto a : tuple) out.push_back(pi(a));
  return out;
}

bool pairwise_distinct(std::span<const Atom> tuple) {
  std::set<Atom> seen(tuple.begin(), tuple.end());
  return seen.size() == tuple.size();
}

// ---------------------------------------------------------------------------
// Sets and elements

SupportRepresentation::SupportRepresentation(std::size_t arity_, Subgroup symmetry_)
    : arity(arity_), symmetry(std::move(symmetry_)) {
  if (symmetry.degree() != arity) {
    throw Error(Errc::degree_mismatch, "support representation symmetry degree != arity");
  }
}

SupportRepresentation SupportRepresentation::free(std::size_t arity) {
  return {arity, Subgroup::trivial(arity)};
}

std::size_t OrbitFiniteSet::dimension() const noexcept {
  std::size_t d = 0;
  for (const auto& o : orbits) d = std::max(d, o.arity);
  return d;
}

OrbitFiniteSet atoms_set() { return OrbitFiniteSet{{SupportRepresentation::free(1)}}; }

AtomTuple canonicalize(std::span<const Atom> tuple, const Subgroup& symmetry) {
  if (tuple.size() != symmetry.degree()) {
    throw Error(Errc::arity_mismatch, "tuple arity differs from symmetry degree");
  }
  if (!pairwise_distinct(tuple)) throw Error(Errc::invalid_argument, "tuple atoms are not distinct");
  AtomTuple best(tuple.begin(), tuple.end());
  AtomTuple candidate(tuple.size());
  for (const auto& tau : symmetry.elements()) {
    for (std::size_t i = 0; i < tuple.size(); ++i) candidate[i] = tuple[tau(i)];
    if (candidate < best) best = candidate;
  }
  return best;
}

Element make_element(const OrbitFiniteSet& set, std::size_t orbit, AtomTuple atoms) {
  if (orbit >= set.orbit_count()) throw Error(Errc::invalid_argument, "orbit index out of range");
  return Element{orbit, canonicalize(atoms, set.orbits[orbit].symmetry)};
}

Element act(const OrbitFiniteSet& set, const AtomPermutation& pi, const Element& x) {
  return make_element(set, x.orbit, qbounds::apply(pi, x.atoms));
}

std::vector<Atom> least_support(const OrbitFiniteSet& set, const Element& x) {
  std::vector<Atom> out;
  if (x.atoms.empty()) return out;
  const Atom fresh = *std::max_element(x.atoms.begin(), x.atoms.end()) + 1;
  for (auto a : x.atoms) {
    if (act(set, AtomPermutation::transposition(a, fresh), x) != x) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void injective_tuples(std::size_t length, std::size_t pool, AtomTuple& current,
                      std::vector<bool>& used, const std::function<void(const AtomTuple&)>& visit) {
  if (current.size() == length) {
    visit(current);
    return;
  }
  for (Atom a = 0; a < pool; ++a) {
    if (used[a]) continue;
    used[a] = true;
    current.push_back(a);
    injective_tuples(length, pool, current, used, visit);
    current.pop_back();
    used[a] = false;
  }
}

}  // namespace

std::vector<Element> elements_over(const OrbitFiniteSet& set, std::size_t orbit, std::size_t pool) {
  const auto& rep = set.orbits.at(orbit);
  std::set<Element> out;
  AtomTuple current;
  std::vector<bool> used(pool, false);
  injective_tuples(rep.arity, pool, current, used, [&](const AtomTuple& t) {
    out.insert(Element{orbit, canonicalize(t, rep.symmetry)});
  });
  return {out.begin(), out.end()};
}

std::uint64_t fN_pair(long long k1, long long k2) {
  if (k1 < 0 || k2 < 0) throw Error(Errc::invalid_argument, "fN_pair of a negative arity");
  if (k1 < k2) std::swap(k1, k2);
  std::uint64_t total = 0;
  for (long long r = 0; r <= k2; ++r) {
    auto term = checked_mul(checked_mul(binomial(k1, r), binomial(k2, r)), factorial(r));
    total = checked_add(total, term);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Patterns

namespace {

struct Candidate {
  std::map<Atom, Atom> renaming;
  Atom next = 0;
  friend bool operator<(const Candidate& a, const Candidate& b) { return a.renaming < b.renaming; }
};

}  // namespace

Pattern min_pattern(std::span<const PatternItem> items) {
  std::vector<Candidate> candidates{Candidate{}};
  Pattern out;
  for (const auto& item : items) {
    if (item.atoms.size() != item.symmetry->degree()) {
      throw Error(Errc::arity_mismatch, "pattern item arity differs from its symmetry");
    }
    std::vector<Atom> best;
    bool have_best = false;
    std::set<Candidate> survivors;
    std::vector<Atom> renamed(item.atoms.size());
    for (const auto& cand : candidates) {
      for (const auto& tau : item.symmetry->elements()) {
        Candidate next = cand;
        for (std::size_t i = 0; i < item.atoms.size(); ++i) {
          Atom a = item.atoms[tau(i)];
          auto it = next.renaming.find(a);
          if (it == next.renaming.end()) it = next.renaming.emplace(a, next.next++).first;
          renamed[i] = it->second;
        }
        if (!have_best || renamed < best) {
          best = renamed;
          have_best = true;
          survivors.clear();
        }
        if (renamed == best) survivors.insert(std::move(next));
      }
    }
    out.renamed.insert(out.renamed.end(), best.begin(), best.end());
    candidates.assign(survivors.begin(), survivors.end());
  }
  const auto& winner = candidates.front();
  out.atoms.assign(winner.next, 0);
  for (const auto& [actual, id] : winner.renaming) out.atoms[id] = actual;
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

const std::vector<Permutation>& symmetric_elements(std::size_t degree) {
  if (degree > kMaxClosureDegree) {
    throw Error(Errc::unsupported_degree, "product orbit of arity above 8");
  }
  static std::array<std::vector<Permutation>, kMaxClosureDegree + 1> cache;
  static std::array<std::once_flag, kMaxClosureDegree + 1> flags;
  std::call_once(flags[degree], [degree] { cache[degree] = all_permutations(degree); });
  return cache[degree];
}

void overlap_tuples(std::size_t k1, std::size_t k2, AtomTuple& current, std::vector<bool>& used,
                    Atom next_fresh, std::vector<AtomTuple>& out) {
  if (current.size() == k2) {
    out.push_back(current);
    return;
  }
  for (Atom a = 0; a < k1; ++a) {
    if (used[a]) continue;
    used[a] = true;
    current.push_back(a);
    overlap_tuples(k1, k2, current, used, next_fresh, out);
    current.pop_back();
    used[a] = false;
  }
  current.push_back(next_fresh);
  overlap_tuples(k1, k2, current, used, next_fresh + 1, out);
  current.pop_back();
}

}  // namespace

std::vector<ProductOrbit> pair_orbits(const SupportRepresentation& left,
                                      const SupportRepresentation& right) {
  const auto k1 = left.arity;
  const auto k2 = right.arity;
  AtomTuple x(k1);
  std::iota(x.begin(), x.end(), Atom{0});
  std::vector<AtomTuple> ys;
  AtomTuple current;
  std::vector<bool> used(k1, false);
  overlap_tuples(k1, k2, current, used, static_cast<Atom>(k1), ys);

  std::set<std::vector<Atom>> patterns;
  for (const auto& y : ys) {
    std::array<PatternItem, 2> items{PatternItem{&left.symmetry, x}, PatternItem{&right.symmetry, y}};
    patterns.insert(min_pattern(items).renamed);
  }

  std::vector<ProductOrbit> out;
  for (const auto& pattern : patterns) {
    ProductOrbit orbit;
    orbit.pattern = pattern;
    AtomTuple lx(pattern.begin(), pattern.begin() + static_cast<std::ptrdiff_t>(k1));
    AtomTuple ry(pattern.begin() + static_cast<std::ptrdiff_t>(k1), pattern.end());
    orbit.left = Element{0, canonicalize(lx, left.symmetry)};
    orbit.right = Element{0, canonicalize(ry, right.symmetry)};
    const std::size_t r =
        pattern.empty() ? 0 : static_cast<std::size_t>(*std::max_element(pattern.begin(), pattern.end())) + 1;
    std::vector<Permutation> stabilizer;
    AtomTuple xs(k1);
    AtomTuple ys2(k2);
    for (const auto& tau : symmetric_elements(r)) {
      for (std::size_t t = 0; t < k1; ++t) xs[t] = tau(pattern[t]);
      for (std::size_t t = 0; t < k2; ++t) ys2[t] = tau(pattern[k1 + t]);
      if (canonicalize(xs, left.symmetry) == orbit.left.atoms &&
          canonicalize(ys2, right.symmetry) == orbit.right.atoms) {
        stabilizer.push_back(tau);
      }
    }
    orbit.shape = SupportRepresentation(r, Subgroup::from_elements(r, std::move(stabilizer)));
    out.push_back(std::move(orbit));
  }
  return out;
}

ProductSet::ProductSet(OrbitFiniteSet left, OrbitFiniteSet right)
    : left_(std::move(left)), right_(std::move(right)) {
  for (std::size_t i = 0; i < left_.orbit_count(); ++i) {
    for (std::size_t j = 0; j < right_.orbit_count(); ++j) {
      for (auto& orbit : pair_orbits(left_.orbits[i], right_.orbits[j])) {
        orbit.left_orbit = i;
        orbit.right_orbit = j;
        orbit.left.orbit = i;
        orbit.right.orbit = j;
        index_.emplace(std::make_tuple(i, j, orbit.pattern), orbits_.size());
        set_.orbits.push_back(orbit.shape);
        orbits_.push_back(std::move(orbit));
      }
    }
  }
}

std::size_t ProductSet::find(std::size_t left_orbit, std::size_t right_orbit,
                             const std::vector<Atom>& pattern) const {
  auto it = index_.find(std::make_tuple(left_orbit, right_orbit, pattern));
  if (it == index_.end()) throw Error(Errc::invalid_argument, "no product orbit with that pattern");
  return it->second;
}

ProductSet::Located ProductSet::locate(const Element& x, const Element& y) const {
  if (x.orbit >= left_.orbit_count() || y.orbit >= right_.orbit_count()) {
    throw Error(Errc::invalid_argument, "element outside the product factors");
  }
  std::array<PatternItem, 2> items{PatternItem{&left_.orbits[x.orbit].symmetry, x.atoms},
                                   PatternItem{&right_.orbits[y.orbit].symmetry, y.atoms}};
  auto pattern = min_pattern(items);
  return {find(x.orbit, y.orbit, pattern.renamed), std::move(pattern.atoms)};
}

Element ProductSet::pair(const Element& x, const Element& y) const {
  auto loc = locate(x, y);
  return make_element(set_, loc.orbit, std::move(loc.atoms));
}

std::pair<Element, Element> ProductSet::split(const Element& p) const {
  const auto& orbit = orbits_.at(p.orbit);
  const auto k1 = left_.orbits[orbit.left_orbit].arity;
  AtomTuple xs;
  AtomTuple ys;
  for (std::size_t t = 0; t < orbit.pattern.size(); ++t) {
    (t < k1 ? xs : ys).push_back(p.atoms.at(orbit.pattern[t]));
  }
  return {make_element(left_, orbit.left_orbit, std::move(xs)),
          make_element(right_, orbit.right_orbit, std::move(ys))};
}

ProductSet orbits_of_product(const OrbitFiniteSet& x, const OrbitFiniteSet& y) { return {x, y}; }

// ---------------------------------------------------------------------------
// Equivariant maps

bool injection_condition(const Subgroup& source, const Subgroup& target,
                         std::span<const std::size_t> injection) {
  const auto l = injection.size();
  std::vector<std::size_t> lhs(l);
  for (const auto& sigma : source.elements()) {
    for (std::size_t i = 0; i < l; ++i) lhs[i] = sigma(injection[i] - 1) + 1;
    bool found = false;
    for (const auto& tau : target.elements()) {
      bool equal = true;
      for (std::size_t i = 0; i < l && equal; ++i) equal = lhs[i] == injection[tau(i)];
      if (equal) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Element EquivariantMap::apply(const Element& x) const {
  if (x.orbit >= per_orbit.size()) throw Error(Errc::invalid_argument, "element outside map source");
  const auto& m = per_orbit[x.orbit];
  AtomTuple out;
  out.reserve(m.injection.size());
  for (auto pos : m.injection) out.push_back(x.atoms.at(pos - 1));
  return make_element(target, m.target_orbit, std::move(out));
}

void EquivariantMap::validate() const {
  if (per_orbit.size() != source.orbit_count()) {
    throw Error(Errc::invalid_argument, "map must cover every source orbit exactly once");
  }
  for (std::size_t i = 0; i < per_orbit.size(); ++i) {
    const auto& m = per_orbit[i];
    if (m.target_orbit >= target.orbit_count()) {
      throw Error(Errc::invalid_argument, "map target orbit out of range");
    }
    const auto& src = source.orbits[i];
    const auto& dst = target.orbits[m.target_orbit];
    if (m.injection.size() != dst.arity) {
      throw Error(Errc::invalid_argument, "injection length differs from target arity");
    }
    std::set<std::size_t> seen;
    for (auto pos : m.injection) {
      if (pos < 1 || pos > src.arity || !seen.insert(pos).second) {
        throw Error(Errc::invalid_argument, "injection is not an injection into the source arity");
      }
    }
    if (!injection_condition(src.symmetry, dst.symmetry, m.injection)) {
      throw Error(Errc::invalid_argument, "injection is not compatible with the symmetries");
    }
  }
}

std::vector<EquivariantMap> equivariant_maps_between(const SupportRepresentation& src,
                                                     const SupportRepresentation& dst) {
  if (src.arity > 6 || dst.arity > 6) {
    throw Error(Errc::unsupported_degree, "equivariant map enumeration needs arities <= 6");
  }
  std::set<std::vector<std::size_t>> classes;
  AtomTuple current;
  std::vector<bool> used(src.arity, false);
  injective_tuples(dst.arity, src.arity, current, used, [&](const AtomTuple& t) {
    std::vector<std::size_t> u;
    for (auto a : t) u.push_back(a + 1);
    if (!injection_condition(src.symmetry, dst.symmetry, u)) return;
    auto best = u;
    std::vector<std::size_t> candidate(u.size());
    for (const auto& tau : dst.symmetry.elements()) {
      for (std::size_t i = 0; i < u.size(); ++i) candidate[i] = u[tau(i)];
      best = std::min(best, candidate);
    }
    classes.insert(best);
  });
  std::vector<EquivariantMap> out;
  for (const auto& u : classes) {
    out.push_back(EquivariantMap{OrbitFiniteSet{{src}}, OrbitFiniteSet{{dst}}, {OrbitMapping{0, u}}});
  }
  return out;
}

bool iso_single_orbit(const SupportRepresentation& a, const SupportRepresentation& b) {
  return a.arity == b.arity && are_conjugate_subgroups(a.symmetry, b.symmetry).conjugate;
}

std::size_t count_single_orbit_sets(std::size_t k) {
  return subgroup_conjugacy_classes(k).classes.size();
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

AtomTuple identity_tuple(std::size_t k) {
  AtomTuple t(k);
  std::iota(t.begin(), t.end(), Atom{0});
  return t;
}

void validate_relation(const OrbitFiniteSet& x, const RelationOracle& relation,
                       const QuotientOptions& options) {
  const std::size_t pool = 2 * x.dimension() + 2;
  std::vector<Element> sample;
  for (std::size_t o = 0; o < x.orbit_count(); ++o) {
    auto elems = elements_over(x, o, pool);
    sample.insert(sample.end(), elems.begin(), elems.end());
  }
  std::mt19937_64 rng(options.seed);
  constexpr std::size_t kMaxSample = 150;
  if (sample.size() > kMaxSample) {
    deterministic_shuffle(sample, rng);
    sample.resize(kMaxSample);
  }
  const auto n = sample.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = relation(sample[i], sample[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i]) throw Error(Errc::invalid_relation, "relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) throw Error(Errc::invalid_relation, "relation is not symmetric");
    }
  }
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n && triples < options.max_triples; ++i) {
    for (std::size_t j = 0; j < n && triples < options.max_triples; ++j) {
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n && triples < options.max_triples; ++k) {
        if (!rel[j][k]) continue;
        ++triples;
        if (!rel[i][k]) throw Error(Errc::invalid_relation, "relation is not transitive");
      }
    }
  }
  // Transpositions generate the finitary permutations, so closing related
  // pairs under every transposition of the pool (plus one outside atom) is
  // the equivariance check.
  std::size_t checks = 0;
  for (std::size_t i = 0; i < n && checks < options.max_pairs; ++i) {
    for (std::size_t j = 0; j < n && checks < options.max_pairs; ++j) {
      if (i == j || !rel[i][j]) continue;
      for (Atom a = 0; a <= pool && checks < options.max_pairs; ++a) {
        for (Atom b = a + 1; b <= pool && checks < options.max_pairs; ++b) {
          auto tau = AtomPermutation::transposition(a, b);
          ++checks;
          if (!relation(act(x, tau, sample[i]), act(x, tau, sample[j]))) {
            throw Error(Errc::invalid_relation, "relation is not equivariant");
          }
        }
      }
    }
  }
}

}  // namespace

Quotient quotient(const OrbitFiniteSet& x, const RelationOracle& relation, const QuotientOptions& options) {
  if (options.validate) validate_relation(x, relation, options);
  const auto n = x.orbit_count();

  // Orbits i and j merge when some element of j is related to the canonical
  // representative of i; atoms beyond k_i + k_j add nothing new.
  std::vector<std::size_t> group(n);
  std::iota(group.begin(), group.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] != i) continue;
    Element xi{i, identity_tuple(x.orbits[i].arity)};
    for (std::size_t j = i + 1; j < n; ++j) {
      if (group[j] != j) continue;
      for (const auto& y : elements_over(x, j, x.orbits[i].arity + x.orbits[j].arity)) {
        if (relation(xi, y)) {
          group[j] = i;
          break;
        }
      }
    }
  }

  Quotient result;
  std::vector<std::size_t> quotient_orbit_of(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] != i) continue;
    const auto k = x.orbits[i].arity;
    Element xi{i, identity_tuple(k)};
    QuotientOrbitInfo info;
    info.source_orbit = i;
    for (std::size_t t = 0; t < k; ++t) {
      auto tau = AtomPermutation::transposition(static_cast<Atom>(t), static_cast<Atom>(k));
      if (!relation(xi, act(x, tau, xi))) info.support_positions.push_back(t);
    }
    const auto kq = info.support_positions.size();
    std::vector<Permutation> stabilizer;
    for (const auto& sigma : all_permutations(kq)) {
      std::map<Atom, Atom> mapping;
      for (std::size_t a = 0; a < kq; ++a) {
        mapping[static_cast<Atom>(info.support_positions[a])] =
            static_cast<Atom>(info.support_positions[sigma(a)]);
      }
      if (relation(xi, act(x, AtomPermutation::from_map(mapping), xi))) stabilizer.push_back(sigma);
    }
    Subgroup symmetry;
    try {
      symmetry = Subgroup::from_elements(kq, std::move(stabilizer));
    } catch (const Error&) {
      throw Error(Errc::invalid_relation, "class stabilizer is not a group");
    }
    quotient_orbit_of[i] = result.set.orbits.size();
    result.set.orbits.emplace_back(kq, std::move(symmetry));
    result.lifts.push_back(std::move(info));
  }

  result.projection.source = x;
  result.projection.target = result.set;
  for (std::size_t j = 0; j < n; ++j) {
    const auto rep_orbit = group[j];
    const auto q = quotient_orbit_of[rep_orbit];
    const auto& info = result.lifts[q];
    const auto kj = x.orbits[j].arity;
    Element xj{j, identity_tuple(kj)};
    std::optional<OrbitMapping> mapping;
    for (const auto& y : elements_over(x, rep_orbit, kj + x.orbits[rep_orbit].arity)) {
      if (!relation(xj, y)) continue;
      OrbitMapping m{q, {}};
      // y's canonical tuple is pi(tau(0..k-1)) for some tau in the symmetry,
      // and pi o tau moves the representative to y as well.
      for (auto pos : info.support_positions) {
        auto atom = y.atoms[pos];
        if (atom >= kj) {
          throw Error(Errc::invalid_relation, "class support is not contained in the element support");
        }
        m.injection.push_back(atom + 1);
      }
      mapping = std::move(m);
      break;
    }
    if (!mapping) throw Error(Errc::invalid_relation, "orbit has no related representative");
    result.projection.per_orbit.push_back(std::move(*mapping));
  }
  try {
    result.projection.validate();
  } catch (const Error& e) {
    throw Error(Errc::invalid_relation, std::string("projection is not equivariant: ") + e.what());
  }
  return result;
}

Element Quotient::lift(const OrbitFiniteSet& x, const Element& q, std::span<const Atom> avoid) const {
  const auto& info = lifts.at(q.orbit);
  const auto k = x.orbits[info.source_orbit].arity;
  std::set<Atom> taken(avoid.begin(), avoid.end());
  taken.insert(q.atoms.begin(), q.atoms.end());
  AtomTuple tuple(k, 0);
  std::vector<bool> filled(k, false);
  for (std::size_t a = 0; a < info.support_positions.size(); ++a) {
    tuple[info.support_positions[a]] = q.atoms.at(a);
    filled[info.support_positions[a]] = true;
  }
  Atom fresh = 0;
  for (std::size_t t = 0; t < k; ++t) {
    if (filled[t]) continue;
    while (taken.count(fresh)) ++fresh;
    tuple[t] = fresh;
    taken.insert(fresh);
  }
  return make_element(x, info.source_orbit, std::move(tuple));
}

}  // namespace qbounds
