#include "qbounds/witnesses.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qbounds/combinatorics.hpp"
#include "qbounds/error.hpp"

namespace qbounds {

const char* to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::advice_classes: return "advice-classes";
    case WitnessKind::nominal_dimension: return "nominal-dimension";
    case WitnessKind::nominal_orbits: return "nominal-orbits";
    case WitnessKind::non_equivariance: return "non-equivariance";
  }
  return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  for (auto k : {WitnessKind::advice_classes, WitnessKind::nominal_dimension, WitnessKind::nominal_orbits,
                 WitnessKind::non_equivariance}) {
    if (s == to_string(k)) return k;
  }
  throw Error(Errc::parse_error, "unknown witness kind '" + s + "'");
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<std::string> advice_points(const AdviceProvenance& p) {
  std::set<std::size_t> idx;
  for (const auto& s : p.suffixes) {
    idx.insert(string_index(p.sigma, p.reps.at(s.i) + s.z));
    idx.insert(string_index(p.sigma, p.reps.at(s.j) + s.z));
  }
  auto domain = strings_up_to(p.sigma, p.m);
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(domain.at(i));
  return out;
}

std::vector<std::string> word_points(const OrbitFiniteSet& alphabet, std::vector<Word> words) {
  std::sort(words.begin(), words.end(), word_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(format_word(alphabet, w));
  return out;
}

std::vector<std::string> dimension_points(const OrbitFiniteSet& alphabet, const DimensionProvenance& p) {
  std::vector<Word> words;
  for (std::size_t t = 0; t < p.chosen.size(); ++t) {
    auto i = p.chosen[t];
    auto tau = AtomPermutation::transposition(i, i + p.shift);
    words.push_back(concat(act_word(alphabet, tau, p.x0), p.suffixes.at(t)));
    words.push_back(concat(p.x0, p.suffixes.at(t)));
  }
  return word_points(alphabet, std::move(words));
}

std::vector<std::string> orbit_points(const OrbitFiniteSet& alphabet, const OrbitProvenance& p) {
  std::vector<Word> words;
  for (const auto& e : p.entries) {
    auto sigma = extend_injection(e.injection);
    words.push_back(concat(act_word(alphabet, sigma, p.reps.at(e.i)), e.z));
    words.push_back(concat(p.reps.at(e.j), e.z));
  }
  return word_points(alphabet, std::move(words));
}

NominalDFA minimal(const NominalDFA& m) { return minimize(m).automaton; }

}  // namespace

AtomPermutation extend_injection(const std::vector<std::pair<Atom, Atom>>& injection) {
  std::map<Atom, Atom> map;
  std::set<Atom> sources;
  std::set<Atom> images;
  for (const auto& [a, b] : injection) {
    if (!map.emplace(a, b).second || !images.insert(b).second) {
      throw Error(Errc::invalid_argument, "not an injection");
    }
    sources.insert(a);
  }
  std::vector<Atom> back;   // images that are not sources, must map somewhere
  std::vector<Atom> spare;  // sources that are not images, must be hit
  for (auto b : images) {
    if (!sources.count(b)) back.push_back(b);
  }
  for (auto a : sources) {
    if (!images.count(a)) spare.push_back(a);
  }
  for (std::size_t t = 0; t < back.size(); ++t) map[back[t]] = spare[t];
  for (auto it = map.begin(); it != map.end();) {
    it = it->first == it->second ? map.erase(it) : std::next(it);
  }
  return AtomPermutation::from_map(map);
}

std::vector<std::string> replay_points(const WitnessSet& w) {
  return std::visit(
      [&](const auto& p) -> std::vector<std::string> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, AdviceProvenance>) {
          return advice_points(p);
        } else if constexpr (std::is_same_v<P, DimensionProvenance>) {
          return dimension_points(w.alphabet, p);
        } else if constexpr (std::is_same_v<P, OrbitProvenance>) {
          return orbit_points(w.alphabet, p);
        } else {
          return word_points(w.alphabet, {p.x0, act_word(w.alphabet, extend_injection(p.pi), p.x0)});
        }
      },
      w.provenance);
}

// ---------------------------------------------------------------------------

WitnessSet advice_witness(const LanguageTable& l, std::size_t n) {
  std::optional<MNPartition> part;
  for (std::size_t len = 0; len <= l.m; ++len) {
    auto p = mn_partition(l, len);
    if (p.blocks.size() > n) {
      part = std::move(p);
      break;
    }
  }
  if (!part) throw Error(Errc::not_a_witness_case, "every length has at most n classes");
  AdviceProvenance prov;
  prov.sigma = l.sigma;
  prov.m = l.m;
  prov.n = n;
  prov.length = part->length;
  for (std::size_t i = 0; i <= n; ++i) prov.reps.push_back(part->blocks[i].front());
  auto suffixes = strings_up_to(l.sigma, l.m - part->length);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto it = std::find_if(suffixes.begin(), suffixes.end(), [&](const std::string& z) {
        return l.at(prov.reps[i] + z) != l.at(prov.reps[j] + z);
      });
      prov.suffixes.push_back({i, j, *it});
    }
  }
  WitnessSet w;
  w.kind = WitnessKind::advice_classes;
  w.claimed_bound = static_cast<std::size_t>(checked_mul(n, n + 1));
  w.points = advice_points(prov);
  w.constructed = 2 * prov.suffixes.size();
  w.provenance = std::move(prov);
  return w;
}

WitnessSet nominal_dimension_witness(const NominalDFA& input, std::size_t k) {
  auto m = minimal(input);
  auto reach = reachable_orbits(m);
  std::optional<std::size_t> hit;
  for (std::size_t t = 0; t < reach.orbits.size(); ++t) {
    if (m.states().orbits[reach.orbits[t]].arity >= k + 1) {
      hit = t;
      break;
    }
  }
  if (!hit) throw Error(Errc::not_a_witness_case, "no state has a least support larger than k");
  DimensionProvenance prov;
  prov.k = k;
  prov.x0 = reach.witnesses[*hit];
  auto q = m.run_from(m.initial(), prov.x0);
  prov.support = least_support(m.states(), q);
  if (prov.support.size() < k + 1) throw Error(Errc::invalid_automaton, "minimized state has a smaller support than its arity");
  prov.chosen.assign(prov.support.begin(), prov.support.begin() + static_cast<std::ptrdiff_t>(k + 1));
  prov.shift = prov.support.back() + 1;
  for (auto i : prov.chosen) {
    auto tau = AtomPermutation::transposition(i, i + prov.shift);
    auto moved = m.run_from(m.initial(), act_word(m.alphabet(), tau, prov.x0));
    auto z = distinguishing_suffix(m, moved, m, q);
    if (!z) throw Error(Errc::invalid_automaton, "swapping a support atom did not move the state");
    prov.suffixes.push_back(*z);
  }
  WitnessSet w;
  w.kind = WitnessKind::nominal_dimension;
  w.claimed_bound = 2 * (k + 1);
  w.alphabet = m.alphabet();
  w.points = dimension_points(w.alphabet, prov);
  w.constructed = 2 * prov.chosen.size();
  w.provenance = std::move(prov);
  return w;
}

WitnessSet nominal_orbit_witness(const NominalDFA& input, std::size_t n, std::size_t k) {
  auto m = minimal(input);
  auto reach = reachable_orbits(m);
  if (reach.orbits.size() < n + 1) throw Error(Errc::not_a_witness_case, "at most n orbits");
  const std::size_t p = m.alphabet().dimension();
  if (k > p * n) throw Error(Errc::invalid_argument, "k exceeds pn; the size formula is zero");
  OrbitProvenance prov;
  prov.n = n;
  prov.k = k;
  prov.p = p;
  // Discovery order is shortest first, so the first n+1 have length <= n.
  prov.reps.assign(reach.witnesses.begin(), reach.witnesses.begin() + static_cast<std::ptrdiff_t>(n + 1));
  std::set<Atom> used;
  std::size_t widest = 0;
  for (const auto& x : prov.reps) {
    prov.supports.push_back(word_atoms(x));
    used.insert(prov.supports.back().begin(), prov.supports.back().end());
    widest = std::max(widest, prov.supports.back().size());
  }
  for (Atom a = 0; prov.fresh.size() < widest; ++a) {
    if (!used.count(a)) prov.fresh.push_back(a);
  }
  std::vector<Element> states;
  for (const auto& x : prov.reps) states.push_back(m.run_from(m.initial(), x));

  for (std::size_t i = 0; i <= n; ++i) {
    const auto& di = prov.supports[i];
    // With |D_i| < k the whole of D_i is taken: supports of classes of x_i
    // lie inside D_i, which is all the argument needs.
    const std::size_t s = std::min(k, di.size());
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::set<Atom> pool_set(di.begin(), di.end());
      pool_set.insert(prov.supports[j].begin(), prov.supports[j].end());
      pool_set.insert(prov.fresh.begin(), prov.fresh.end());
      std::vector<Atom> pool(pool_set.begin(), pool_set.end());
      // k-subsets of D_i in lexicographic order, then injections into the pool.
      std::vector<std::size_t> pick(s);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      while (true) {
        std::vector<std::size_t> image(s, 0);
        while (true) {
          std::set<std::size_t> distinct(image.begin(), image.end());
          if (distinct.size() == s) {
            OrbitProvenance::Entry e;
            e.i = i;
            e.j = j;
            for (std::size_t t = 0; t < s; ++t) e.injection.emplace_back(di[pick[t]], pool[image[t]]);
            auto sigma = extend_injection(e.injection);
            auto moved = act(m.states(), sigma, states[i]);
            auto z = distinguishing_suffix(m, moved, m, states[j]);
            if (!z) throw Error(Errc::invalid_automaton, "representatives share an orbit");
            e.z = *z;
            prov.entries.push_back(std::move(e));
          }
          std::size_t pos = s;
          while (pos > 0 && ++image[pos - 1] == pool.size()) image[--pos] = 0;
          if (pos == 0) break;
        }
        // next combination
        std::size_t t = s;
        while (t > 0 && pick[t - 1] == di.size() - s + t - 1) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (std::size_t u = t; u < s; ++u) pick[u] = pick[u - 1] + 1;
      }
    }
  }
  WitnessSet w;
  w.kind = WitnessKind::nominal_orbits;
  w.claimed_bound = static_cast<std::size_t>(
      checked_mul(checked_mul(checked_mul(2, binomial(n + 1, 2)), binomial(p * n, k)), checked_pow(3 * p * n, k)));
  w.alphabet = m.alphabet();
  if (widest == 0) w.notes.push_back("all representative supports are empty; each pair uses the identity only");
  w.points = orbit_points(w.alphabet, prov);
  w.constructed = 2 * prov.entries.size();
  w.provenance = std::move(prov);
  return w;
}

WitnessSet non_equivariance_witness(const WordTable& table) {
  std::map<Word, std::size_t> first;
  for (std::size_t t = 0; t < table.entries.size(); ++t) {
    const auto& [x, label] = table.entries[t];
    auto c = canonical_word(table.alphabet, x);
    auto [it, inserted] = first.emplace(c, t);
    if (inserted || table.entries[it->second].second == label) continue;
    NonEquivarianceProvenance prov;
    prov.x0 = table.entries[it->second].first;
    prov.moved = x;
    // Same first-use pattern: match atoms position by position.
    std::map<Atom, Atom> seen;
    for (std::size_t pos = 0; pos < prov.x0.size(); ++pos) {
      const auto& a = prov.x0[pos].atoms;
      const auto& b = x[pos].atoms;
      for (std::size_t u = 0; u < a.size(); ++u) {
        if (seen.emplace(a[u], b[u]).second) prov.pi.emplace_back(a[u], b[u]);
      }
    }
    WitnessSet w;
    w.kind = WitnessKind::non_equivariance;
    w.claimed_bound = 2;
    w.alphabet = table.alphabet;
    w.provenance = prov;
    w.points = replay_points(w);
    w.constructed = 2;
    return w;
  }
  throw Error(Errc::not_a_witness_case, "the table is equivariant on its entries");
}

// ---------------------------------------------------------------------------

WitnessValidation validate_witness(const WitnessSet& w, const std::function<bool(const std::string&)>& language,
                                   const std::vector<Fixture>& in_class) {
  WitnessValidation out;
  out.mode = "fixture-relative";
  if (w.points.empty()) out.problems.push_back("empty witness set");
  if (w.points.size() > w.claimed_bound || w.constructed > w.claimed_bound) {
    out.problems.push_back("more points than the claimed bound");
  }
  if (replay_points(w) != w.points) out.problems.push_back("provenance does not reproduce the points");

  std::vector<bool> labels;
  for (const auto& x : w.points) labels.push_back(language(x));
  for (const auto& f : in_class) {
    bool agrees = true;
    for (std::size_t t = 0; t < w.points.size() && agrees; ++t) agrees = f.member(w.points[t]) == labels[t];
    if (agrees) out.agreeing.push_back(f.name);
  }

  // The separating pairs must really separate under L.
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, AdviceProvenance>) {
          for (const auto& s : p.suffixes) {
            if (language(p.reps[s.i] + s.z) == language(p.reps[s.j] + s.z)) out.problems.push_back("suffix does not separate");
          }
        } else if constexpr (std::is_same_v<P, DimensionProvenance>) {
          for (std::size_t t = 0; t < p.chosen.size(); ++t) {
            auto tau = AtomPermutation::transposition(p.chosen[t], p.chosen[t] + p.shift);
            auto a = format_word(w.alphabet, concat(act_word(w.alphabet, tau, p.x0), p.suffixes[t]));
            auto b = format_word(w.alphabet, concat(p.x0, p.suffixes[t]));
            if (language(a) == language(b)) out.problems.push_back("suffix does not separate");
          }
        } else if constexpr (std::is_same_v<P, OrbitProvenance>) {
          for (const auto& e : p.entries) {
            auto a = format_word(w.alphabet, concat(act_word(w.alphabet, extend_injection(e.injection), p.reps[e.i]), e.z));
            auto b = format_word(w.alphabet, concat(p.reps[e.j], e.z));
            if (language(a) == language(b)) out.problems.push_back("suffix does not separate");
          }
        } else {
          if (language(format_word(w.alphabet, p.x0)) == language(format_word(w.alphabet, p.moved))) {
            out.problems.push_back("labels do not differ");
          }
        }
      },
      w.provenance);

  if (const auto* adv = std::get_if<AdviceProvenance>(&w.provenance)) {
    const auto domain = strings_up_to(adv->sigma, adv->m);
    if (domain.size() <= kMaxExhaustiveDomain) {
      out.mode = "full-extension";
      LanguageTable ext{adv->sigma, adv->m, Bits(domain.size(), 0)};
      std::vector<std::size_t> fixed;
      std::vector<std::size_t> free;
      std::set<std::string> on_b(w.points.begin(), w.points.end());
      for (std::size_t i = 0; i < domain.size(); ++i) {
        if (on_b.count(domain[i])) {
          ext.bits[i] = language(domain[i]) ? 1 : 0;
        } else {
          free.push_back(i);
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        for (std::size_t t = 0; t < free.size(); ++t) ext.bits[free[t]] = static_cast<std::uint8_t>(mask >> t & 1);
        ++out.extensions_checked;
        if (mn_partition(ext, adv->length).blocks.size() <= adv->n) {
          out.problems.push_back("an extension has at most n classes at the witnessed length");
          break;
        }
      }
    }
  }
  out.ok = out.problems.empty() && out.agreeing.empty();
  return out;
}

void require_valid_witness(const WitnessSet& w, const std::function<bool(const std::string&)>& language,
                           const std::vector<Fixture>& in_class) {
  auto v = validate_witness(w, language, in_class);
  if (v.ok) return;
  std::string msg;
  for (const auto& a : v.agreeing) msg += " fixture " + a + " extends L|B;";
  for (const auto& p : v.problems) msg += " " + p + ";";
  throw Error(Errc::validation_failure, msg);
}

}  // namespace qbounds
