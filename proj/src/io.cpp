#include "qbounds/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbounds/error.hpp"

namespace qbounds {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

std::string bit_string(const Bits& b) {
  std::string s(b.size(), '0');
  for (std::size_t i = 0; i < b.size(); ++i) s[i] = b[i] ? '1' : '0';
  return s;
}

Bits parse_bits(const std::string& s) {
  Bits b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') bad("bit string '" + s + "' has a character other than 0/1");
    b[i] = s[i] == '1';
  }
  return b;
}

json pairs(const std::vector<std::pair<Atom, Atom>>& p) {
  json a = json::array();
  for (auto [s, t] : p) a.push_back({s, t});
  return a;
}

std::vector<std::pair<Atom, Atom>> pairs_from(const json& j) {
  std::vector<std::pair<Atom, Atom>> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Atom>(), e.at(1).get<Atom>());
  return out;
}

}  // namespace

json to_json(const AdviceDFA& m) {
  return {{"sigma", m.sigma}, {"m", m.m}, {"n", m.n}, {"q0", m.q0}, {"accepting", m.accepting}, {"steps", m.steps}};
}

AdviceDFA advice_dfa_from_json(const json& j) {
  AdviceDFA m;
  m.sigma = get<std::string>(j, "sigma");
  m.m = get<std::size_t>(j, "m");
  m.n = get<std::size_t>(j, "n");
  m.q0 = get<std::size_t>(j, "q0");
  m.accepting = get<std::vector<std::size_t>>(j, "accepting");
  m.steps = get<std::vector<std::vector<std::size_t>>>(j, "steps");
  try {
    m.validate();
  } catch (const Error& e) {
    bad(std::string("advice automaton: ") + e.what());
  }
  return m;
}

json to_json(const LanguageTable& t) {
  json bits = json::object();
  auto keys = strings_up_to(t.sigma, t.m);
  for (std::size_t i = 0; i < keys.size(); ++i) bits[keys[i]] = t.bits.at(i);
  return {{"sigma", t.sigma}, {"m", t.m}, {"bits", bits}};
}

LanguageTable language_table_from_json(const json& j) {
  LanguageTable t;
  t.sigma = get<std::string>(j, "sigma");
  t.m = get<std::size_t>(j, "m");
  const auto& bits = field(j, "bits");
  if (!bits.is_object()) bad("'bits' must be an object");
  auto keys = strings_up_to(t.sigma, t.m);
  if (bits.size() != keys.size()) {
    bad("'bits' has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(keys.size()));
  }
  t.bits.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto it = bits.find(keys[i]);
    if (it == bits.end()) bad("'bits' lacks the string '" + keys[i] + "'");
    auto v = it->get<int>();
    if (v != 0 && v != 1) bad("bit for '" + keys[i] + "' is not 0/1");
    t.bits[i] = static_cast<std::uint8_t>(v);
  }
  return t;
}

json to_json(const OrbitFiniteSet& s) {
  json orbits = json::array();
  for (const auto& o : s.orbits) {
    json gens = json::array();
    for (const auto& g : o.symmetry.generators()) gens.push_back(g.to_string());
    orbits.push_back({{"arity", o.arity}, {"symmetry", gens}});
  }
  return {{"orbits", orbits}};
}

OrbitFiniteSet orbit_finite_set_from_json(const json& j) {
  OrbitFiniteSet s;
  for (const auto& o : field(j, "orbits")) {
    auto arity = get<std::size_t>(o, "arity");
    std::vector<Permutation> gens;
    try {
      for (const auto& g : field(o, "symmetry")) gens.push_back(Permutation::parse(g.get<std::string>(), arity));
      s.orbits.emplace_back(arity, subgroup_closure(gens, arity));
    } catch (const Error& e) {
      bad(std::string("orbit symmetry: ") + e.what());
    } catch (const json::exception& e) {
      bad(std::string("orbit symmetry: ") + e.what());
    }
  }
  return s;
}

json to_json(const NominalDFA& m) {
  json tr = json::array();
  for (const auto& t : m.transition_specs()) {
    tr.push_back({{"state_orbit", t.state_orbit},
                  {"letter_orbit", t.letter_orbit},
                  {"product_orbit_case", t.product_orbit_case},
                  {"target_orbit", t.target_orbit},
                  {"injection", t.injection}});
  }
  return {{"alphabet", to_json(m.alphabet())},
          {"states", to_json(m.states())},
          {"initial", m.initial_orbit()},
          {"accepting", m.accepting()},
          {"transitions", tr}};
}

NominalDFA nominal_dfa_from_json(const json& j) {
  auto alphabet = orbit_finite_set_from_json(field(j, "alphabet"));
  auto states = orbit_finite_set_from_json(field(j, "states"));
  std::vector<TransitionSpec> specs;
  for (const auto& t : field(j, "transitions")) {
    TransitionSpec s;
    s.state_orbit = get<std::size_t>(t, "state_orbit");
    s.letter_orbit = get<std::size_t>(t, "letter_orbit");
    s.product_orbit_case = get<std::vector<Atom>>(t, "product_orbit_case");
    s.target_orbit = get<std::size_t>(t, "target_orbit");
    s.injection = get<std::vector<std::size_t>>(t, "injection");
    specs.push_back(std::move(s));
  }
  try {
    return build_automaton(std::move(alphabet), std::move(states), get<std::size_t>(j, "initial"),
                           get<std::vector<std::size_t>>(j, "accepting"), specs);
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    bad(std::string("nominal automaton: ") + e.what());
  }
}

json to_json(const ConceptClass& c) {
  json members = json::array();
  for (const auto& m : c.members()) members.push_back(bit_string(m));
  return {{"domain", c.domain()->keys()}, {"members", members}, {"provenance", c.provenance()}};
}

ConceptClass concept_class_from_json(const json& j) {
  auto domain = make_domain(get<std::vector<std::string>>(j, "domain"));
  std::vector<Bits> members;
  for (const auto& s : get<std::vector<std::string>>(j, "members")) members.push_back(parse_bits(s));
  std::vector<std::string> prov;
  if (j.contains("provenance")) prov = get<std::vector<std::string>>(j, "provenance");
  try {
    return ConceptClass(domain, std::move(members), std::move(prov));
  } catch (const Error& e) {
    bad(std::string("concept class: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

struct ProvenanceWriter {
  const OrbitFiniteSet& alphabet;

  std::string w(const Word& x) const { return format_word(alphabet, x); }

  json operator()(const AdviceProvenance& p) const {
    json s = json::array();
    for (const auto& z : p.suffixes) s.push_back({{"i", z.i}, {"j", z.j}, {"z", z.z}});
    return {{"sigma", p.sigma}, {"m", p.m}, {"n", p.n}, {"length", p.length}, {"reps", p.reps}, {"suffixes", s}};
  }
  json operator()(const DimensionProvenance& p) const {
    json s = json::array();
    for (const auto& z : p.suffixes) s.push_back(w(z));
    return {{"k", p.k}, {"x0", w(p.x0)}, {"support", p.support}, {"chosen", p.chosen}, {"shift", p.shift},
            {"suffixes", s}};
  }
  json operator()(const OrbitProvenance& p) const {
    json reps = json::array();
    for (const auto& x : p.reps) reps.push_back(w(x));
    json entries = json::array();
    for (const auto& e : p.entries) {
      entries.push_back({{"i", e.i}, {"j", e.j}, {"injection", pairs(e.injection)}, {"z", w(e.z)}});
    }
    return {{"n", p.n},           {"k", p.k},         {"p", p.p},         {"reps", reps},
            {"supports", p.supports}, {"fresh", p.fresh}, {"entries", entries}};
  }
  json operator()(const NonEquivarianceProvenance& p) const {
    return {{"x0", w(p.x0)}, {"moved", w(p.moved)}, {"pi", pairs(p.pi)}};
  }
};

bool is_nominal(WitnessKind k) { return k != WitnessKind::advice_classes; }

}  // namespace

json to_json(const WitnessSet& w) {
  json j = {{"kind", to_string(w.kind)},
            {"points", w.points},
            {"claimed_bound", w.claimed_bound},
            {"constructed", w.constructed},
            {"provenance", std::visit(ProvenanceWriter{w.alphabet}, w.provenance)},
            {"notes", w.notes}};
  if (is_nominal(w.kind)) j["alphabet"] = to_json(w.alphabet);
  return j;
}

WitnessSet witness_set_from_json(const json& j) {
  WitnessSet w;
  w.kind = witness_kind_from_string(get<std::string>(j, "kind"));
  w.points = get<std::vector<std::string>>(j, "points");
  w.claimed_bound = get<std::size_t>(j, "claimed_bound");
  w.constructed = get<std::size_t>(j, "constructed");
  if (j.contains("notes")) w.notes = get<std::vector<std::string>>(j, "notes");
  if (is_nominal(w.kind)) w.alphabet = orbit_finite_set_from_json(field(j, "alphabet"));
  const auto& p = field(j, "provenance");
  auto word = [&](const json& x) { return parse_word(w.alphabet, x.get<std::string>()); };
  try {
    switch (w.kind) {
      case WitnessKind::advice_classes: {
        AdviceProvenance a;
        a.sigma = get<std::string>(p, "sigma");
        a.m = get<std::size_t>(p, "m");
        a.n = get<std::size_t>(p, "n");
        a.length = get<std::size_t>(p, "length");
        a.reps = get<std::vector<std::string>>(p, "reps");
        for (const auto& s : field(p, "suffixes")) {
          a.suffixes.push_back({get<std::size_t>(s, "i"), get<std::size_t>(s, "j"), get<std::string>(s, "z")});
        }
        w.provenance = std::move(a);
        break;
      }
      case WitnessKind::nominal_dimension: {
        DimensionProvenance d;
        d.k = get<std::size_t>(p, "k");
        d.x0 = word(field(p, "x0"));
        d.support = get<std::vector<Atom>>(p, "support");
        d.chosen = get<std::vector<Atom>>(p, "chosen");
        d.shift = get<Atom>(p, "shift");
        for (const auto& z : field(p, "suffixes")) d.suffixes.push_back(word(z));
        w.provenance = std::move(d);
        break;
      }
      case WitnessKind::nominal_orbits: {
        OrbitProvenance o;
        o.n = get<std::size_t>(p, "n");
        o.k = get<std::size_t>(p, "k");
        o.p = get<std::size_t>(p, "p");
        for (const auto& x : field(p, "reps")) o.reps.push_back(word(x));
        o.supports = get<std::vector<std::vector<Atom>>>(p, "supports");
        o.fresh = get<std::vector<Atom>>(p, "fresh");
        for (const auto& e : field(p, "entries")) {
          o.entries.push_back({get<std::size_t>(e, "i"), get<std::size_t>(e, "j"), pairs_from(field(e, "injection")),
                               word(field(e, "z"))});
        }
        w.provenance = std::move(o);
        break;
      }
      case WitnessKind::non_equivariance: {
        NonEquivarianceProvenance n;
        n.x0 = word(field(p, "x0"));
        n.moved = word(field(p, "moved"));
        n.pi = pairs_from(field(p, "pi"));
        w.provenance = std::move(n);
        break;
      }
    }
  } catch (const json::exception& e) {
    bad(std::string("witness provenance: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    bad(std::string("witness provenance: ") + e.what());
  }
  return w;
}

json to_json(const WitnessValidation& v) {
  return {{"ok", v.ok},
          {"mode", v.mode},
          {"agreeing", v.agreeing},
          {"extensions_checked", v.extensions_checked},
          {"problems", v.problems}};
}

// ---------------------------------------------------------------------------

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(Errc::invalid_argument, "write failed: " + path.string());
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_digest(const json& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(config.dump())));
  return buf;
}

}  // namespace qbounds
