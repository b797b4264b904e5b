#include "qbounds/nominal_dfa.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qbounds/error.hpp"

namespace qbounds {

// ---------------------------------------------------------------------------
// Words

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Atom> word_atoms(const Word& w) {
  std::set<Atom> atoms;
  for (const auto& letter : w) atoms.insert(letter.atoms.begin(), letter.atoms.end());
  return {atoms.begin(), atoms.end()};
}

Word act_word(const OrbitFiniteSet& alphabet, const AtomPermutation& pi, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& letter : w) out.push_back(act(alphabet, pi, letter));
  return out;
}

Word canonical_word(const OrbitFiniteSet& alphabet, const Word& w) {
  std::vector<PatternItem> items;
  for (const auto& letter : w) {
    if (letter.orbit >= alphabet.orbit_count()) throw Error(Errc::alphabet_mismatch, "letter orbit out of range");
    items.push_back(PatternItem{&alphabet.orbits[letter.orbit].symmetry, letter.atoms});
  }
  auto pattern = min_pattern(items);
  Word out;
  std::size_t pos = 0;
  for (const auto& letter : w) {
    const auto k = letter.atoms.size();
    AtomTuple atoms(pattern.renamed.begin() + static_cast<std::ptrdiff_t>(pos),
                    pattern.renamed.begin() + static_cast<std::ptrdiff_t>(pos + k));
    pos += k;
    out.push_back(make_element(alphabet, letter.orbit, std::move(atoms)));
  }
  return out;
}

std::vector<Element> candidate_letters(const OrbitFiniteSet& alphabet, const std::vector<Atom>& relevant) {
  std::set<Element> out;
  std::set<Atom> taken(relevant.begin(), relevant.end());
  for (std::size_t o = 0; o < alphabet.orbit_count(); ++o) {
    const auto k = alphabet.orbits[o].arity;
    std::vector<Atom> fresh;
    for (Atom a = 0; fresh.size() < k; ++a) {
      if (!taken.count(a)) fresh.push_back(a);
    }
    AtomTuple current;
    std::vector<bool> used_relevant(relevant.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t fresh_used) {
      if (current.size() == k) {
        out.insert(make_element(alphabet, o, current));
        return;
      }
      for (std::size_t i = 0; i < relevant.size(); ++i) {
        if (used_relevant[i]) continue;
        used_relevant[i] = true;
        current.push_back(relevant[i]);
        rec(fresh_used);
        current.pop_back();
        used_relevant[i] = false;
      }
      current.push_back(fresh[fresh_used]);
      rec(fresh_used + 1);
      current.pop_back();
    };
    rec(0);
  }
  return {out.begin(), out.end()};
}

std::vector<Word> canonical_words(const OrbitFiniteSet& alphabet, std::size_t max_length) {
  std::set<Word> all;
  std::vector<Word> level{Word{}};
  all.insert(Word{});
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::set<Word> next;
    for (const auto& w : level) {
      for (const auto& letter : candidate_letters(alphabet, word_atoms(w))) {
        auto extended = w;
        extended.push_back(letter);
        next.insert(canonical_word(alphabet, extended));
      }
    }
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<Word> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::string format_word(const OrbitFiniteSet& alphabet, const Word& w) {
  if (w.empty()) return "ε";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    if (alphabet.orbit_count() > 1) out << w[i].orbit << ':';
    if (w[i].atoms.empty()) out << "()";
    for (std::size_t j = 0; j < w[i].atoms.size(); ++j) {
      if (j) out << ',';
      out << w[i].atoms[j];
    }
  }
  return out.str();
}

Word parse_word(const OrbitFiniteSet& alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word out;
  while (in >> token) {
    if (token == "ε") continue;
    std::size_t orbit = 0;
    std::string body = token;
    if (auto colon = token.find(':'); colon != std::string::npos) {
      try {
        orbit = std::stoul(token.substr(0, colon));
      } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad letter orbit in '" + token + "'");
      }
      body = token.substr(colon + 1);
    } else if (alphabet.orbit_count() != 1) {
      throw Error(Errc::parse_error, "letter '" + token + "' needs an orbit prefix");
    }
    if (orbit >= alphabet.orbit_count()) throw Error(Errc::alphabet_mismatch, "letter orbit out of range");
    AtomTuple atoms;
    if (body != "()") {
      std::istringstream parts(body);
      std::string part;
      while (std::getline(parts, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
          throw Error(Errc::parse_error, "bad atom in letter '" + token + "'");
        }
        atoms.push_back(static_cast<Atom>(std::stoul(part)));
      }
    }
    if (atoms.size() != alphabet.orbits[orbit].arity || !pairwise_distinct(atoms)) {
      throw Error(Errc::alphabet_mismatch, "letter '" + token + "' does not fit its orbit");
    }
    out.push_back(make_element(alphabet, orbit, std::move(atoms)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automata

NominalDFA::NominalDFA(OrbitFiniteSet alphabet, OrbitFiniteSet states, std::vector<OrbitMapping> transitions,
                       std::size_t initial_orbit, std::vector<std::size_t> accepting)
    : alphabet_(std::move(alphabet)), initial_orbit_(initial_orbit), accepting_(std::move(accepting)) {
  if (states.orbit_count() == 0) throw Error(Errc::invalid_automaton, "automaton needs a state orbit");
  if (initial_orbit_ >= states.orbit_count() || states.orbits[initial_orbit_].arity != 0) {
    throw Error(Errc::invalid_automaton, "initial orbit must exist and have arity 0");
  }
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  for (auto f : accepting_) {
    if (f >= states.orbit_count()) throw Error(Errc::invalid_automaton, "accepting orbit out of range");
  }
  product_ = ProductSet(states, alphabet_);
  transition_ = EquivariantMap{product_.set(), std::move(states), std::move(transitions)};
  try {
    transition_.validate();
  } catch (const Error& e) {
    throw Error(Errc::invalid_automaton, std::string("transition map: ") + e.what());
  }
}

bool NominalDFA::is_accepting(std::size_t orbit) const {
  return std::binary_search(accepting_.begin(), accepting_.end(), orbit);
}

void NominalDFA::check_letter(const Element& a) const {
  if (a.orbit >= alphabet_.orbit_count() || a.atoms.size() != alphabet_.orbits[a.orbit].arity ||
      !pairwise_distinct(a.atoms) || canonicalize(a.atoms, alphabet_.orbits[a.orbit].symmetry) != a.atoms) {
    throw Error(Errc::alphabet_mismatch, "letter is not an element of the alphabet");
  }
}

Element NominalDFA::step(const Element& q, const Element& a) const {
  auto loc = product_.locate(q, a);
  const auto& m = transition_.per_orbit[loc.orbit];
  AtomTuple atoms;
  atoms.reserve(m.injection.size());
  for (auto pos : m.injection) atoms.push_back(loc.atoms[pos - 1]);
  return make_element(states(), m.target_orbit, std::move(atoms));
}

Element NominalDFA::run_from(const Element& q, const Word& w) const {
  Element state = q;
  for (const auto& letter : w) {
    check_letter(letter);
    state = step(state, letter);
  }
  return state;
}

std::vector<TransitionSpec> NominalDFA::transition_specs() const {
  std::vector<TransitionSpec> out;
  for (std::size_t i = 0; i < product_.orbits().size(); ++i) {
    const auto& o = product_.orbits()[i];
    const auto& m = transition_.per_orbit[i];
    out.push_back(TransitionSpec{o.left_orbit, o.right_orbit, o.pattern, m.target_orbit, m.injection});
  }
  return out;
}

NominalDFA build_automaton(OrbitFiniteSet alphabet, OrbitFiniteSet states, std::size_t initial_orbit,
                           std::vector<std::size_t> accepting, const std::vector<TransitionSpec>& specs) {
  ProductSet product(states, alphabet);
  std::vector<std::optional<OrbitMapping>> table(product.orbits().size());
  for (const auto& s : specs) {
    if (s.state_orbit >= states.orbit_count() || s.letter_orbit >= alphabet.orbit_count()) {
      throw Error(Errc::invalid_automaton, "transition refers to a missing orbit");
    }
    std::size_t index = 0;
    try {
      index = product.find(s.state_orbit, s.letter_orbit, s.product_orbit_case);
    } catch (const Error&) {
      throw Error(Errc::invalid_automaton, "transition case is not a product orbit pattern");
    }
    if (table[index]) throw Error(Errc::invalid_automaton, "product orbit has two transitions");
    table[index] = OrbitMapping{s.target_orbit, s.injection};
  }
  std::vector<OrbitMapping> transitions;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) throw Error(Errc::invalid_automaton, "product orbit without a transition");
    transitions.push_back(*table[i]);
  }
  return NominalDFA(std::move(alphabet), std::move(states), std::move(transitions), initial_orbit,
                    std::move(accepting));
}

RunResult accepts(const NominalDFA& m, const Word& w) {
  RunResult out;
  Element state = m.initial();
  out.trace.states.push_back(state);
  for (const auto& letter : w) {
    m.check_letter(letter);
    state = m.step(state, letter);
    out.trace.states.push_back(state);
  }
  out.accepted = m.is_accepting(state.orbit);
  return out;
}

// ---------------------------------------------------------------------------
// Breadth-first search over orbits of configurations

namespace {

struct SearchNode {
  Word word;
  std::vector<Element> states;
  std::vector<Atom> relevant;  // context atoms and atoms of word, sorted
};

using SearchKey = std::pair<std::vector<std::size_t>, std::vector<Atom>>;

// Words are extended level by level, letters in increasing order, so the
// first node reaching an orbit carries the least word reaching it. Nodes in
// an already reached orbit are dropped: the two continuations are related
// by a renaming that fixes the context.
template <class Visit>
void breadth_first(const std::vector<const NominalDFA*>& machines, std::vector<Element> start,
                   const std::vector<Atom>& context, Visit visit) {
  const auto& alphabet = machines.front()->alphabet();
  const Subgroup context_symmetry = Subgroup::trivial(context.size());
  auto key_of = [&](const SearchNode& node) {
    std::vector<PatternItem> items{PatternItem{&context_symmetry, context}};
    SearchKey key;
    for (std::size_t i = 0; i < node.states.size(); ++i) {
      const auto& s = node.states[i];
      items.push_back(PatternItem{&machines[i]->states().orbits[s.orbit].symmetry, s.atoms});
      key.first.push_back(s.orbit);
    }
    key.second = min_pattern(items).renamed;
    return key;
  };

  std::set<SearchKey> seen;
  SearchNode root{{}, std::move(start), context};
  seen.insert(key_of(root));
  if (visit(root)) return;
  std::vector<SearchNode> level{std::move(root)};
  while (!level.empty()) {
    std::vector<SearchNode> next;
    for (const auto& node : level) {
      for (const auto& letter : candidate_letters(alphabet, node.relevant)) {
        SearchNode child;
        child.word = node.word;
        child.word.push_back(letter);
        for (std::size_t i = 0; i < machines.size(); ++i) {
          child.states.push_back(machines[i]->step(node.states[i], letter));
        }
        std::set<Atom> rel(node.relevant.begin(), node.relevant.end());
        rel.insert(letter.atoms.begin(), letter.atoms.end());
        child.relevant.assign(rel.begin(), rel.end());
        if (!seen.insert(key_of(child)).second) continue;
        if (visit(child)) return;
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
}

void require_same_alphabet(const NominalDFA& a, const NominalDFA& b) {
  if (!(a.alphabet() == b.alphabet())) throw Error(Errc::alphabet_mismatch, "automata alphabets differ");
}

}  // namespace

ReachableOrbits reachable_orbits(const NominalDFA& m) {
  ReachableOrbits out;
  std::set<std::size_t> found;
  breadth_first({&m}, {m.initial()}, {}, [&](const SearchNode& node) {
    auto orbit = node.states[0].orbit;
    if (found.insert(orbit).second) {
      out.orbits.push_back(orbit);
      out.witnesses.push_back(canonical_word(m.alphabet(), node.word));
      out.set.orbits.push_back(m.states().orbits[orbit]);
    }
    return found.size() == m.states().orbit_count();
  });
  return out;
}

std::optional<Word> equivalence_check(const NominalDFA& m1, const NominalDFA& m2) {
  require_same_alphabet(m1, m2);
  std::optional<Word> out;
  breadth_first({&m1, &m2}, {m1.initial(), m2.initial()}, {}, [&](const SearchNode& node) {
    if (m1.is_accepting(node.states[0].orbit) != m2.is_accepting(node.states[1].orbit)) {
      out = canonical_word(m1.alphabet(), node.word);
      return true;
    }
    return false;
  });
  return out;
}

std::optional<Word> distinguishing_suffix(const NominalDFA& m1, const Element& q1, const NominalDFA& m2,
                                          const Element& q2) {
  require_same_alphabet(m1, m2);
  std::set<Atom> context(q1.atoms.begin(), q1.atoms.end());
  context.insert(q2.atoms.begin(), q2.atoms.end());
  std::optional<Word> out;
  breadth_first({&m1, &m2}, {q1, q2}, {context.begin(), context.end()}, [&](const SearchNode& node) {
    if (m1.is_accepting(node.states[0].orbit) != m2.is_accepting(node.states[1].orbit)) {
      out = node.word;
      return true;
    }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Minimization

namespace {

NominalDFA restrict_to(const NominalDFA& m, const std::vector<std::size_t>& keep) {
  std::map<std::size_t, std::size_t> renumber;
  OrbitFiniteSet states;
  for (auto o : keep) {
    renumber.emplace(o, states.orbit_count());
    states.orbits.push_back(m.states().orbits[o]);
  }
  std::vector<TransitionSpec> specs;
  for (auto spec : m.transition_specs()) {
    auto from = renumber.find(spec.state_orbit);
    if (from == renumber.end()) continue;
    spec.state_orbit = from->second;
    spec.target_orbit = renumber.at(spec.target_orbit);
    specs.push_back(std::move(spec));
  }
  std::vector<std::size_t> accepting;
  for (auto o : keep) {
    if (m.is_accepting(o)) accepting.push_back(renumber.at(o));
  }
  return build_automaton(m.alphabet(), std::move(states), renumber.at(m.initial_orbit()), std::move(accepting),
                         specs);
}

}  // namespace

Minimized minimize(const NominalDFA& m) {
  auto reach = reachable_orbits(m);
  std::vector<std::size_t> keep = reach.orbits;
  std::sort(keep.begin(), keep.end());
  auto r = restrict_to(m, keep);
  const auto& q = r.states();

  // Greatest congruence refining acceptance, computed on orbits of Q x Q:
  // a pair orbit stays related while every letter keeps it inside the
  // relation. Working with pair orbits lets a single state orbit split
  // internally, which blocks of whole orbits cannot express.
  ProductSet pairs(q, q);
  std::vector<bool> related(pairs.orbits().size());
  for (std::size_t i = 0; i < related.size(); ++i) {
    const auto& o = pairs.orbits()[i];
    related[i] = r.is_accepting(o.left_orbit) == r.is_accepting(o.right_orbit);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < related.size(); ++i) {
      if (!related[i]) continue;
      const auto& o = pairs.orbits()[i];
      std::set<Atom> rel(o.left.atoms.begin(), o.left.atoms.end());
      rel.insert(o.right.atoms.begin(), o.right.atoms.end());
      for (const auto& a : candidate_letters(r.alphabet(), {rel.begin(), rel.end()})) {
        if (!related[pairs.locate(r.step(o.left, a), r.step(o.right, a)).orbit]) {
          related[i] = false;
          changed = true;
          break;
        }
      }
    }
  }

  QuotientOptions options;
  options.validate = false;
  auto quo = quotient(q, [&](const Element& x, const Element& y) { return related[pairs.locate(x, y).orbit]; },
                      options);

  ProductSet next_product(quo.set, r.alphabet());
  std::vector<OrbitMapping> transitions;
  for (const auto& o : next_product.orbits()) {
    auto lifted = quo.lift(q, o.left, o.right.atoms);
    auto image = quo.projection.apply(r.step(lifted, o.right));
    auto loc = next_product.locate(o.left, o.right);
    OrbitMapping mapping{image.orbit, {}};
    for (auto atom : image.atoms) {
      auto it = std::find(loc.atoms.begin(), loc.atoms.end(), atom);
      if (it == loc.atoms.end()) throw Error(Errc::invalid_automaton, "minimized transition escapes its support");
      mapping.injection.push_back(static_cast<std::size_t>(it - loc.atoms.begin()) + 1);
    }
    transitions.push_back(std::move(mapping));
  }
  std::vector<std::size_t> accepting;
  for (std::size_t i = 0; i < quo.lifts.size(); ++i) {
    if (r.is_accepting(quo.lifts[i].source_orbit)) accepting.push_back(i);
  }
  auto initial = quo.projection.apply(r.initial()).orbit;
  NominalDFA out(r.alphabet(), quo.set, std::move(transitions), initial, std::move(accepting));
  return Minimized{std::move(out), std::move(quo.projection), std::move(keep)};
}

bool is_isomorphism(const EquivariantMap& f) {
  if (f.per_orbit.size() != f.source.orbit_count() || f.source.orbit_count() != f.target.orbit_count()) {
    return false;
  }
  std::set<std::size_t> targets;
  for (std::size_t i = 0; i < f.per_orbit.size(); ++i) {
    const auto& m = f.per_orbit[i];
    const auto& src = f.source.orbits[i];
    const auto& dst = f.target.orbits.at(m.target_orbit);
    if (!targets.insert(m.target_orbit).second) return false;
    if (src.arity != dst.arity || src.symmetry.size() != dst.symmetry.size()) return false;
  }
  return true;
}

std::vector<Word> short_witnesses(const NominalDFA& minimized) {
  auto reach = reachable_orbits(minimized);
  if (reach.orbits.size() != minimized.states().orbit_count()) {
    throw Error(Errc::invalid_argument, "automaton has unreachable orbits");
  }
  std::vector<Word> out(reach.orbits.size());
  for (std::size_t i = 0; i < reach.orbits.size(); ++i) out[reach.orbits[i]] = reach.witnesses[i];
  return out;
}

DimensionBoundReport dimension_bound_check(const NominalDFA& minimized) {
  DimensionBoundReport out;
  out.orbit_count = minimized.states().orbit_count();
  out.dimension = minimized.states().dimension();
  out.alphabet_dimension = minimized.alphabet().dimension();
  out.bound = (out.orbit_count - 1) * out.alphabet_dimension;
  out.ok = out.dimension <= out.bound;
  return out;
}

// ---------------------------------------------------------------------------
// Built-in fixtures, all over the alphabet N.

namespace {

OrbitFiniteSet free_orbits(std::initializer_list<std::size_t> arities) {
  OrbitFiniteSet out;
  for (auto k : arities) out.orbits.push_back(SupportRepresentation::free(k));
  return out;
}

using V = std::vector<Atom>;
using U = std::vector<std::size_t>;

NominalDFA aa_language(bool duplicate_sink) {
  auto states = duplicate_sink ? free_orbits({0, 1, 0, 0, 0}) : free_orbits({0, 1, 0, 0});
  std::vector<TransitionSpec> t{
      {0, 0, V{0}, 1, U{1}},       // q_I --a--> q_a
      {1, 0, V{0, 0}, 2, U{}},     // q_a --a--> q_A
      {1, 0, V{0, 1}, 3, U{}},     // q_a --b--> q_R
      {2, 0, V{0}, 3, U{}},
      {3, 0, V{0}, 3, U{}},
  };
  if (duplicate_sink) t.push_back({4, 0, V{0}, 4, U{}});
  return build_automaton(atoms_set(), std::move(states), 0, {2}, t);
}

NominalDFA constant_language(bool accept) {
  return build_automaton(atoms_set(), free_orbits({0}), 0, accept ? std::vector<std::size_t>{0} : std::vector<std::size_t>{},
                         {{0, 0, V{0}, 0, U{}}});
}

NominalDFA first_equals_last() {
  // q_I, then "last letter equals the first" and "differs from the first".
  std::vector<TransitionSpec> t{
      {0, 0, V{0}, 1, U{1}},
      {1, 0, V{0, 0}, 1, U{1}},
      {1, 0, V{0, 1}, 2, U{1}},
      {2, 0, V{0, 0}, 1, U{1}},
      {2, 0, V{0, 1}, 2, U{1}},
  };
  return build_automaton(atoms_set(), free_orbits({0, 1, 1}), 0, {1}, t);
}

NominalDFA abab_language() {
  // Accepts exactly a b a b with a != b.
  std::vector<TransitionSpec> t{
      {0, 0, V{0}, 1, U{1}},
      {1, 0, V{0, 0}, 5, U{}},
      {1, 0, V{0, 1}, 2, U{1, 2}},
      {2, 0, V{0, 1, 0}, 3, U{1, 2}},
      {2, 0, V{0, 1, 1}, 5, U{}},
      {2, 0, V{0, 1, 2}, 5, U{}},
      {3, 0, V{0, 1, 0}, 5, U{}},
      {3, 0, V{0, 1, 1}, 4, U{}},
      {3, 0, V{0, 1, 2}, 5, U{}},
      {4, 0, V{0}, 5, U{}},
      {5, 0, V{0}, 5, U{}},
  };
  return build_automaton(atoms_set(), free_orbits({0, 1, 2, 2, 0, 0}), 0, {4}, t);
}

NominalDFA empty_redundant() {
  std::vector<TransitionSpec> t{
      {0, 0, V{0}, 1, U{1}},
      {1, 0, V{0, 0}, 2, U{}},
      {1, 0, V{0, 1}, 3, U{}},
      {2, 0, V{0}, 0, U{}},
      {3, 0, V{0}, 3, U{}},
  };
  return build_automaton(atoms_set(), free_orbits({0, 1, 0, 0}), 0, {}, t);
}

}  // namespace

std::vector<std::string> builtin_fixture_names() {
  return {"aa", "empty", "full", "first_equals_last", "abab", "aa_dup_sink", "empty_redundant"};
}

NominalDFA builtin_fixture(std::string_view name) {
  if (name == "aa") return aa_language(false);
  if (name == "empty") return constant_language(false);
  if (name == "full") return constant_language(true);
  if (name == "first_equals_last") return first_equals_last();
  if (name == "abab") return abab_language();
  if (name == "aa_dup_sink") return aa_language(true);
  if (name == "empty_redundant") return empty_redundant();
  throw Error(Errc::invalid_argument, "unknown fixture '" + std::string(name) + "'");
}

NominalDFA random_automaton(std::mt19937_64& rng, std::size_t orbits, std::size_t max_arity) {
  OrbitFiniteSet states;
  states.orbits.push_back(SupportRepresentation::free(0));
  for (std::size_t i = 1; i < orbits; ++i) states.orbits.push_back(SupportRepresentation::free(rng() % (max_arity + 1)));
  auto alphabet = atoms_set();
  ProductSet product(states, alphabet);
  std::vector<OrbitMapping> transitions;
  for (const auto& po : product.orbits()) {
    const auto width = po.shape.arity;
    std::size_t target = 0;
    do {
      target = rng() % orbits;
    } while (states.orbits[target].arity > width);
    std::vector<std::size_t> slots(width);
    std::iota(slots.begin(), slots.end(), std::size_t{1});
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(states.orbits[target].arity);
    transitions.push_back({target, slots});
  }
  std::vector<std::size_t> accepting;
  for (std::size_t i = 0; i < orbits; ++i) {
    if (rng() & 1) accepting.push_back(i);
  }
  return NominalDFA(alphabet, states, transitions, 0, accepting);
}

}  // namespace qbounds
