#include "qbounds/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qbounds/error.hpp"

namespace qbounds {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

template <class T>
T opt(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    bad(std::string("config field '") + key + "': " + e.what());
  }
}

template <class T>
T req(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("config entry lacks '") + key + "'");
  return opt<T>(j, key, T{});
}

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      bad("unknown key '" + key + "' in " + where);
    }
  }
}

Learner learner_from_string(const std::string& s) {
  for (auto l : {Learner::halving_eq_mq, Learner::halving_eq, Learner::consistent}) {
    if (s == to_string(l)) return l;
  }
  bad("unknown learner '" + s + "'");
}

LanguageTable table_from_spec(const json& j) {
  if (j.contains("bits")) return language_table_from_json(j);
  if (j.contains("tightness")) return tightness_language(req<std::size_t>(j, "tightness"), req<std::size_t>(j, "m"));
  only_keys(j, {"sigma", "m", "accept"}, "language");
  auto sigma = req<std::string>(j, "sigma");
  auto m = req<std::size_t>(j, "m");
  auto accept = req<std::vector<std::string>>(j, "accept");
  std::set<std::string> in(accept.begin(), accept.end());
  return table_from_predicate(sigma, m, [&](std::string_view w) { return in.count(std::string(w)) > 0; });
}

WitnessTarget witness_from_json(const json& j) {
  only_keys(j, {"name", "kind", "n", "k", "language", "fixture", "entries"}, "witness entry");
  WitnessTarget t;
  t.name = req<std::string>(j, "name");
  t.kind = witness_kind_from_string(req<std::string>(j, "kind"));
  t.n = opt<std::size_t>(j, "n", 1);
  t.k = opt<std::size_t>(j, "k", 1);
  switch (t.kind) {
    case WitnessKind::advice_classes:
      if (!j.contains("language")) bad("advice witness '" + t.name + "' needs a language");
      t.table = table_from_spec(j["language"]);
      break;
    case WitnessKind::nominal_dimension:
    case WitnessKind::nominal_orbits:
      t.fixture = req<std::string>(j, "fixture");
      break;
    case WitnessKind::non_equivariance: {
      WordTable w{atoms_set(), {}};
      for (const auto& e : req<json>(j, "entries")) {
        w.entries.emplace_back(parse_word(w.alphabet, e.at(0).get<std::string>()), e.at(1).get<bool>());
      }
      t.words = std::move(w);
      break;
    }
  }
  return t;
}

std::string csv_preamble(const std::string& command, const ExperimentConfig& c) {
  return "# qbounds " + command + " config_digest=" + c.digest + " seed=" + std::to_string(c.seed) + "\n";
}

json json_preamble(const std::string& command, const ExperimentConfig& c) {
  return {{"command", command}, {"config_digest", c.digest}, {"seed", c.seed}};
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string advice_params(const AdviceSetting& s) {
  return "n=" + std::to_string(s.n) + " m=" + std::to_string(s.m) + " k=" + std::to_string(s.k);
}

const NominalDFA& fixture(const ExperimentConfig& c, const std::string& name) {
  auto it = c.fixtures.find(name);
  if (it == c.fixtures.end()) throw Error(Errc::invalid_argument, "unknown fixture '" + name + "'");
  return it->second;
}

// A deterministic draw of `members` distinct concepts on `points` points.
ConceptClass generic_class(const GenericSetting& g, std::uint64_t seed, std::size_t index) {
  if (g.points == 0 || g.points > kMaxExhaustiveDomain) throw Error(Errc::budget_exceeded, "generic domain must have 1..20 points");
  const std::uint64_t total = std::uint64_t{1} << g.points;
  if (g.members == 0 || g.members > total) throw Error(Errc::invalid_argument, "generic class size out of range");
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < g.points; ++i) keys.push_back("p" + std::to_string(i));
  auto domain = make_domain(keys);
  std::mt19937_64 rng(seed * 1000003 + index);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < g.members) chosen.insert(rng() % total);
  std::vector<Bits> members;
  for (auto mask : chosen) {
    Bits b(g.points);
    for (std::size_t i = 0; i < g.points; ++i) b[i] = static_cast<std::uint8_t>(mask >> i & 1);
    members.push_back(std::move(b));
  }
  return ConceptClass(domain, std::move(members));
}

std::string generic_params(const GenericSetting& g, std::size_t index) {
  return "points=" + std::to_string(g.points) + " members=" + std::to_string(g.members) + " draw=" + std::to_string(index);
}

std::string bit_string(const Bits& b) {
  std::string s;
  for (auto v : b) s += v ? '1' : '0';
  return s;
}

BoundReport generic_report(const GenericSetting& g, std::uint64_t seed, std::size_t index) {
  auto c = generic_class(g, seed, index);
  auto all = all_concepts(c.domain());
  auto ldim = ldim_exact(c);
  auto log_bound = ldim_log_bound(c);
  auto cdim = cdim_exact(c, all);
  BoundReport r;
  auto params = generic_params(g, index);
  r.rows.push_back({"generic", params, "class_size", std::to_string(c.size()), "", "ref"});
  r.rows.push_back({"generic", params, "ldim", std::to_string(ldim.value), std::to_string(log_bound),
                    ldim.value <= log_bound ? "true" : "false"});
  bool tree_ok = !check_shattered_tree(ldim.tree, c).has_value();
  r.rows.push_back({"generic", params, "shattered_tree", tree_ok ? "valid" : "invalid", "valid", tree_ok ? "true" : "false"});
  r.rows.push_back({"generic", params, "cdim_vs_all", std::to_string(cdim.value), "", "ref"});
  return r;
}

std::vector<std::pair<std::string, NominalDFA>> suite_fixtures(const ExperimentConfig& c) {
  std::vector<std::pair<std::string, NominalDFA>> out;
  std::set<std::string> seen;
  for (const auto& s : c.nominal) {
    if (seen.insert(s.fixture).second) out.emplace_back(s.fixture, fixture(c, s.fixture));
  }
  return out;
}

std::size_t suite_word_length(const ExperimentConfig& c) {
  std::size_t len = 0;
  for (const auto& s : c.nominal) len = std::max(len, s.word_length);
  return len;
}

struct Suite {
  SuiteSpec spec;
  bool h_is_all = false;
};

std::vector<Suite> build_suites(const ExperimentConfig& c, std::size_t jobs) {
  std::vector<Suite> out;
  auto add = [&](std::string setting, std::string params, ConceptClass cc, ConceptClass h, bool all) {
    SuiteSpec s{std::move(setting), std::move(params), std::move(cc), std::move(h), c.learner, c.gate_constant, jobs};
    out.push_back({std::move(s), all});
  };
  if (c.setting == "advice") {
    for (const auto& a : c.advice) {
      auto cc = advice_class(a.k, a.n, a.m);
      if (c.hypothesis == "same") {
        add("advice", advice_params(a) + " H=same", cc, cc, false);
      } else if (c.hypothesis == "all") {
        add("advice", advice_params(a) + " H=all", cc, all_concepts(cc.domain()), true);
      } else {
        add("advice", advice_params(a) + " H=2n", cc, advice_class(a.k, 2 * a.n, a.m), false);
      }
    }
  } else if (c.setting == "nominal") {
    auto fx = suite_fixtures(c);
    if (!fx.empty()) {
      auto cc = nominal_concept_class(fx, suite_word_length(c));
      std::string names;
      for (const auto& [name, m] : fx) names += (names.empty() ? "" : "+") + name;
      add("nominal", names + " len<=" + std::to_string(suite_word_length(c)), cc, cc, false);
    }
  } else {
    for (std::size_t i = 0; i < c.generic.size(); ++i) {
      auto cc = generic_class(c.generic[i], c.seed, i);
      add("generic", generic_params(c.generic[i], i) + " H=all", cc, all_concepts(cc.domain()), true);
    }
  }
  return out;
}

// Random automata join the builtin and configured fixtures when nominal
// witnesses are validated; `keep` decides membership in the class.
std::vector<Fixture> nominal_validation_class(const ExperimentConfig& c, const OrbitFiniteSet& alphabet,
                                              std::size_t max_orbits, std::size_t max_arity,
                                              const std::function<bool(const DimensionBoundReport&)>& keep) {
  std::vector<Fixture> out;
  auto consider = [&](const std::string& name, const NominalDFA& m) {
    if (!(m.alphabet() == alphabet)) return;
    if (!keep(dimension_bound_check(minimize(m).automaton))) return;
    out.push_back({name, [m](const std::string& x) { return accepts(m, parse_word(m.alphabet(), x)).accepted; }});
  };
  for (const auto& [name, m] : c.fixtures) consider(name, m);
  if (alphabet == atoms_set() && max_orbits > 0) {
    std::mt19937_64 rng(c.seed);
    for (std::size_t t = 0; t < c.random_automata; ++t) {
      consider("random" + std::to_string(t), random_automaton(rng, 1 + rng() % max_orbits, max_arity));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.setting = "nominal";
  c.digest = config_digest(json::object());
  for (const auto& name : builtin_fixture_names()) c.fixtures.emplace(name, builtin_fixture(name));
  return c;
}

ExperimentConfig parse_config(const json& j, const fs::path& base_dir) {
  only_keys(j,
            {"setting", "seed", "parameters", "counting", "fixtures", "budgets", "learner", "gate_constant",
             "hypothesis", "witnesses"},
            "config");
  auto c = default_config();
  c.digest = config_digest(j);
  c.setting = req<std::string>(j, "setting");
  if (c.setting != "advice" && c.setting != "nominal" && c.setting != "generic") {
    bad("setting must be advice, nominal or generic, not '" + c.setting + "'");
  }
  c.seed = opt<std::uint64_t>(j, "seed", 0);

  for (const auto& [name, path] : opt<std::map<std::string, std::string>>(j, "fixtures", {})) {
    fs::path p = path;
    if (p.is_relative()) p = base_dir / p;
    c.fixtures.insert_or_assign(name, nominal_dfa_from_json(read_json_file(p)));
  }

  for (const auto& p : opt<json>(j, "parameters", json::array())) {
    if (c.setting == "advice") {
      only_keys(p, {"n", "m", "k"}, "advice parameters");
      c.advice.push_back({req<std::size_t>(p, "n"), req<std::size_t>(p, "m"), opt<std::size_t>(p, "k", 2)});
    } else if (c.setting == "nominal") {
      only_keys(p, {"fixture", "n", "k", "word_length"}, "nominal parameters");
      NominalSetting s{req<std::string>(p, "fixture"), opt<std::size_t>(p, "n", 0), opt<std::size_t>(p, "k", 1),
                       opt<std::size_t>(p, "word_length", 3)};
      if (!c.fixtures.count(s.fixture)) bad("unknown fixture '" + s.fixture + "'");
      c.nominal.push_back(s);
    } else {
      only_keys(p, {"points", "members"}, "generic parameters");
      c.generic.push_back({req<std::size_t>(p, "points"), req<std::size_t>(p, "members")});
    }
  }
  for (const auto& p : opt<json>(j, "counting", json::array())) {
    only_keys(p, {"n", "k"}, "counting entry");
    c.counting.push_back({req<std::size_t>(p, "n"), req<std::size_t>(p, "k")});
  }

  auto budgets = opt<json>(j, "budgets", json::object());
  only_keys(budgets, {"classes", "random_automata"}, "budgets");
  c.class_budget = opt<std::uint64_t>(budgets, "classes", c.class_budget);
  c.random_automata = opt<std::size_t>(budgets, "random_automata", c.random_automata);
  if (c.class_budget == 0) bad("budgets must be positive");

  c.learner = learner_from_string(opt<std::string>(j, "learner", to_string(c.learner)));
  c.gate_constant = opt<std::size_t>(j, "gate_constant", c.gate_constant);
  c.hypothesis = opt<std::string>(j, "hypothesis", c.hypothesis);
  if (c.hypothesis != "double" && c.hypothesis != "same" && c.hypothesis != "all") {
    bad("hypothesis must be double, same or all");
  }
  std::set<std::string> names;
  for (const auto& w : opt<json>(j, "witnesses", json::array())) {
    c.witnesses.push_back(witness_from_json(w));
    if (!names.insert(c.witnesses.back().name).second) bad("duplicate witness name '" + c.witnesses.back().name + "'");
    const auto& t = c.witnesses.back();
    if (!t.fixture.empty() && !c.fixtures.count(t.fixture)) bad("unknown fixture '" + t.fixture + "'");
  }
  return c;
}

ExperimentConfig load_config(const fs::path& path) { return parse_config(read_json_file(path), path.parent_path()); }

// ---------------------------------------------------------------------------

int cmd_dims(const ExperimentConfig& c, const RunOptions& o, std::ostream& log) {
  BoundReport all;
  auto take = [&](const BoundReport& r) { all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end()); };
  for (const auto& a : c.advice) take(advice_bound_report(a));
  for (const auto& n : c.nominal) take(nominal_bound_report(n, fixture(c, n.fixture)));
  for (std::size_t i = 0; i < c.generic.size(); ++i) take(generic_report(c.generic[i], c.seed, i));
  write_text_file(o.out / "dims.csv", csv_preamble("dims", c) + bound_csv_header() + bound_csv_rows(all));
  log << "dims: " << all.rows.size() << " rows, " << (all.ok() ? "all bounds hold" : "a bound FAILS") << "\n";
  return all.ok() ? exit_ok : exit_validation;
}

int cmd_learn(const ExperimentConfig& c, const RunOptions& o, std::ostream& log) {
  std::string csv = csv_preamble("learn", c) + "# learner=" + to_string(c.learner) +
                    " gate_constant=" + std::to_string(c.gate_constant) + "\n" + suite_csv_header();
  auto summary = json_preamble("learn", c);
  summary["learner"] = to_string(c.learner);
  summary["gate_constant"] = c.gate_constant;
  summary["suites"] = json::array();
  bool ok = true;
  for (const auto& s : build_suites(c, o.jobs)) {
    auto r = run_suite(s.spec);
    csv += suite_csv_rows(r);
    const auto& first = r.rows.front();
    json js = {{"setting", s.spec.setting},
               {"params", s.spec.params},
               {"class_size", r.class_size},
               {"hypothesis_size", s.spec.h.size()},
               {"ldim", first.ldim},
               {"cdim", first.cdim},
               {"cd_product", first.cd_product},
               {"max_total", r.max_total},
               {"mean_total", fmt(r.mean_total)},
               {"max_eq", r.max_eq},
               {"all_identified", r.all_identified()},
               {"all_bound_ok", r.all_bound_ok()}};
    js["ratio"] = first.cd_product == 0 ? json(nullptr) : json(fmt(double(r.max_total) / double(first.cd_product)));
    if (s.h_is_all && c.learner != Learner::consistent) {
      auto cap = static_cast<std::size_t>(std::floor(std::log2(double(r.class_size)))) + 1;
      js["eq_log_cap"] = cap;
      js["eq_within_log_cap"] = r.max_eq <= cap;
      ok = ok && r.max_eq <= cap;
    }
    ok = ok && r.all_identified();
    log << "learn " << s.spec.setting << " [" << s.spec.params << "]: |C|=" << r.class_size << " max_total=" << r.max_total
        << " bound_ok=" << (r.all_bound_ok() ? "yes" : "no") << "\n";
    summary["suites"].push_back(std::move(js));
  }
  summary["ok"] = ok;
  write_text_file(o.out / "learn.csv", csv);
  write_text_file(o.out / "learn_summary.json", dump_json(summary));
  return ok ? exit_ok : exit_validation;
}

int cmd_witness(const ExperimentConfig& c, const RunOptions& o, std::ostream& log) {
  std::string csv = csv_preamble("witness", c) + "name,kind,status,points,constructed,claimed_bound,mode,agreeing\n";
  bool ok = true;
  for (const auto& t : c.witnesses) {
    auto row = [&](const std::string& status, const WitnessSet* w, const WitnessValidation* v) {
      std::string agreeing;
      if (v) {
        for (const auto& a : v->agreeing) agreeing += (agreeing.empty() ? "" : " ") + a;
      }
      csv += quote(t.name) + "," + to_string(t.kind) + "," + status + "," + (w ? std::to_string(w->points.size()) : "") +
             "," + (w ? std::to_string(w->constructed) : "") + "," + (w ? std::to_string(w->claimed_bound) : "") + "," +
             (v ? v->mode : "") + "," + quote(agreeing) + "\n";
    };
    std::optional<WitnessSet> w;
    std::function<bool(const std::string&)> language;
    std::vector<Fixture> in_class;
    try {
      switch (t.kind) {
        case WitnessKind::advice_classes: {
          const auto& table = *t.table;
          if (table.sigma != digit_alphabet(table.sigma.size())) {
            throw Error(Errc::invalid_argument, "advice witnesses need the alphabet " + digit_alphabet(table.sigma.size()));
          }
          w = advice_witness(table, t.n);
          language = [table](const std::string& x) { return table.at(x); };
          auto cls = enumerate_class(table.sigma.size(), t.n, table.m, c.class_budget);
          for (std::size_t i = 0; i < cls.size(); ++i) {
            in_class.push_back({"L" + std::to_string(i), [tb = cls[i]](const std::string& x) { return tb.at(x); }});
          }
          break;
        }
        case WitnessKind::nominal_dimension:
        case WitnessKind::nominal_orbits: {
          const auto& m = fixture(c, t.fixture);
          if (t.kind == WitnessKind::nominal_dimension) {
            w = nominal_dimension_witness(m, t.k);
            in_class = nominal_validation_class(c, m.alphabet(), 4, t.k,
                                                [&](const DimensionBoundReport& r) { return r.dimension <= t.k; });
          } else {
            w = nominal_orbit_witness(m, t.n, t.k);
            in_class = nominal_validation_class(c, m.alphabet(), t.n, t.k, [&](const DimensionBoundReport& r) {
              return r.orbit_count <= t.n && r.dimension <= t.k;
            });
          }
          language = [m](const std::string& x) { return accepts(m, parse_word(m.alphabet(), x)).accepted; };
          break;
        }
        case WitnessKind::non_equivariance: {
          const auto& words = *t.words;
          w = non_equivariance_witness(words);
          std::map<std::string, bool> lookup;
          for (const auto& [x, v] : words.entries) lookup[format_word(words.alphabet, x)] = v;
          language = [lookup](const std::string& x) { return lookup.at(x); };
          for (const auto& [name, m] : c.fixtures) {
            if (!(m.alphabet() == words.alphabet)) continue;
            in_class.push_back({name, [m](const std::string& x) { return accepts(m, parse_word(m.alphabet(), x)).accepted; }});
          }
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::not_a_witness_case) throw;
      row("skipped", nullptr, nullptr);
      log << "witness " << t.name << ": skipped (" << e.what() << ")\n";
      continue;
    }
    auto v = validate_witness(*w, language, in_class);
    ok = ok && v.ok;
    row(v.ok ? "pass" : "fail", &*w, &v);
    auto doc = json_preamble("witness", c);
    doc["name"] = t.name;
    doc["witness"] = to_json(*w);
    doc["validation"] = to_json(v);
    doc["validation"]["class_size"] = in_class.size();
    write_text_file(o.out / "witnesses" / (t.name + ".json"), dump_json(doc));
    log << "witness " << t.name << ": |B|=" << w->points.size() << " bound=" << w->claimed_bound << " "
        << (v.ok ? "pass" : "FAIL") << " (" << v.mode << ")\n";
  }
  write_text_file(o.out / "witness_report.csv", csv);
  return ok ? exit_ok : exit_validation;
}

int cmd_enumerate(const ExperimentConfig& c, const RunOptions& o, std::ostream& log) {
  std::string csv = csv_preamble("enumerate", c) + "setting,params,quantity,value\n";
  for (const auto& a : c.advice) {
    auto tables = enumerate_class(a.k, a.n, a.m, c.class_budget);
    const auto params = advice_params(a);
    csv += "advice," + params + ",machines," + std::to_string(machine_count(a.k, a.n, a.m)) + "\n";
    csv += "advice," + params + ",languages," + std::to_string(tables.size()) + "\n";
    auto doc = json_preamble("enumerate", c);
    doc["params"] = {{"n", a.n}, {"m", a.m}, {"k", a.k}};
    doc["languages"] = json::array();
    for (const auto& t : tables) doc["languages"].push_back(to_json(t));
    doc["class"] = to_json(advice_concept_class(tables));
    write_text_file(o.out / "classes" / ("advice_n" + std::to_string(a.n) + "_m" + std::to_string(a.m) + "_k" +
                                         std::to_string(a.k) + ".json"),
                    dump_json(doc));
    log << "enumerate advice " << params << ": " << tables.size() << " languages\n";
  }
  for (const auto& s : c.counting) {
    auto counts = nominal_state_set_counts(s.n, s.k);
    const auto params = "n=" + std::to_string(s.n) + " k=" + std::to_string(s.k);
    csv += "nominal," + params + ",state_sets," + std::to_string(counts.state_sets) + "\n";
    csv += "nominal," + params + ",transition_functions," + std::to_string(counts.transition_functions) + "\n";
  }
  if (c.setting == "nominal" && !c.nominal.empty()) {
    auto fx = suite_fixtures(c);
    auto cls = nominal_concept_class(fx, suite_word_length(c));
    csv += "nominal,len<=" + std::to_string(suite_word_length(c)) + ",distinct_languages," + std::to_string(cls.size()) + "\n";
    auto doc = json_preamble("enumerate", c);
    doc["class"] = to_json(cls);
    write_text_file(o.out / "classes" / "nominal.json", dump_json(doc));
  }
  for (std::size_t i = 0; i < c.generic.size(); ++i) {
    auto cls = generic_class(c.generic[i], c.seed, i);
    std::string members;
    for (const auto& m : cls.members()) members += (members.empty() ? "" : " ") + bit_string(m);
    csv += "generic," + generic_params(c.generic[i], i) + ",members," + members + "\n";
  }
  write_text_file(o.out / "enumerate.csv", csv);
  return exit_ok;
}

int cmd_verify_bounds(const ExperimentConfig& c, const RunOptions& o, std::ostream& log) {
  BoundReport all;
  auto take = [&](const BoundReport& r) { all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end()); };
  for (const auto& a : c.advice) {
    take(advice_bound_report(a));
    // every enumerated language: synthesis within 2n states, exact round trip
    auto tables = enumerate_class(a.k, a.n, a.m, c.class_budget);
    std::size_t worst = 0;
    bool round_trip = true;
    for (const auto& t : tables) {
      auto d = synthesize(t);
      worst = std::max(worst, d.n);
      round_trip = round_trip && language_table(d) == t && max_class_count(t) <= a.n;
    }
    all.rows.push_back({"advice", advice_params(a), "synthesized_states", std::to_string(worst),
                        std::to_string(2 * a.n), worst <= 2 * a.n ? "true" : "false"});
    all.rows.push_back({"advice", advice_params(a), "round_trip", round_trip ? "exact" : "mismatch", "exact",
                        round_trip ? "true" : "false"});
  }
  for (const auto& [name, m] : c.fixtures) {
    if (c.setting != "nominal") break;
    take(nominal_bound_report({name, 0, 1, 3}, m));
  }
  for (const auto& s : c.counting) take(counting_report(s.n, s.k));
  for (std::size_t i = 0; i < c.generic.size(); ++i) take(generic_report(c.generic[i], c.seed, i));
  write_text_file(o.out / "verify.csv", csv_preamble("verify-bounds", c) + bound_csv_header() + bound_csv_rows(all));
  log << "verify-bounds: " << all.rows.size() << " rows, " << (all.ok() ? "all hold" : "FAILURES") << "\n";
  return all.ok() ? exit_ok : exit_validation;
}

int cmd_fixtures(const ExperimentConfig& c, const RunOptions& o, std::ostream& log) {
  std::string csv = csv_preamble("fixtures", c) + "name,orbits,minimal_orbits,dimension,alphabet_dimension,bound_ok\n";
  for (const auto& [name, m] : c.fixtures) {
    auto r = dimension_bound_check(minimize(m).automaton);
    csv += name + "," + std::to_string(m.states().orbit_count()) + "," + std::to_string(r.orbit_count) + "," +
           std::to_string(r.dimension) + "," + std::to_string(r.alphabet_dimension) + "," + (r.ok ? "true" : "false") + "\n";
    write_text_file(o.out / "fixtures" / (name + ".json"), dump_json(to_json(m)));
  }
  write_text_file(o.out / "fixtures.csv", csv);
  log << "fixtures: wrote " << c.fixtures.size() << " automata\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qbounds: query-complexity bounds at desk scale"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  app.add_option("--config", config_path, "experiment config (JSON)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "overrides the config seed");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  using Command = int (*)(const ExperimentConfig&, const RunOptions&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands = {
      {"dims", "exact dimensions next to the bounds", cmd_dims},
      {"learn", "run learning suites", cmd_learn},
      {"witness", "build and validate witness sets", cmd_witness},
      {"enumerate", "enumerate advice classes and nominal state sets", cmd_enumerate},
      {"verify-bounds", "check every computable bound", cmd_verify_bounds},
      {"fixtures", "export fixture automata", cmd_fixtures},
  };
  for (const auto& [name, help, fn] : commands) {
    (void)fn;
    app.add_subcommand(name, help)->fallthrough();
  }

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.push_back("qbounds");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  const auto chosen = app.get_subcommands().front()->get_name();
  try {
    ExperimentConfig c;
    if (!config_path.empty()) {
      c = load_config(config_path);
    } else if (chosen == "fixtures") {
      c = default_config();
    } else {
      err << "usage error: " << chosen << " needs --config\n";
      return exit_usage;
    }
    if (seed) c.seed = *seed;
    RunOptions o{out_dir, jobs};
    for (const auto& [name, help, fn] : commands) {
      if (name == chosen) return fn(c, o, out);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::parse_error ? exit_usage : exit_validation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_validation;
  }
  return exit_usage;
}

}  // namespace qbounds
