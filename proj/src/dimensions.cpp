#include "qbounds/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "qbounds/combinatorics.hpp"
#include "qbounds/error.hpp"
#include "qbounds/permgroup.hpp"
#include "qbounds/witnesses.hpp"

namespace qbounds {

namespace {

using Subset = std::vector<std::uint64_t>;  // bitset over class members

class LdimSolver {
 public:
  explicit LdimSolver(const ConceptClass& c) : c_(c), words_((c.size() + 63) / 64) {}

  Subset full() const {
    Subset s(words_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) s[i / 64] |= std::uint64_t{1} << (i % 64);
    return s;
  }

  std::size_t value(const Subset& v) {
    auto n = count(v);
    if (n <= 1) return 0;
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    const auto cap = floor_log2(n);
    std::size_t best = 0;
    for (std::size_t x = 0; x < c_.domain()->size() && best < cap; ++x) {
      auto [one, zero] = split(v, x);
      auto n1 = count(one);
      auto n0 = count(zero);
      if (n1 == 0 || n0 == 0) continue;
      // Each side can reach at most floor(log2 size).
      if (1 + std::min(floor_log2(n1), floor_log2(n0)) <= best) continue;
      auto& first = n1 <= n0 ? one : zero;
      auto& second = n1 <= n0 ? zero : one;
      auto a = value(first);
      if (1 + a <= best) continue;
      auto b = value(second);
      best = std::max(best, 1 + std::min(a, b));
    }
    memo_.emplace(v, best);
    return best;
  }

  std::size_t build(const Subset& v, std::size_t height, ShatteredTree& t) {
    const auto id = t.nodes.size();
    t.nodes.emplace_back();
    if (height == 0) {
      t.nodes[id].leaf = true;
      t.nodes[id].member = first(v);
      return id;
    }
    for (std::size_t x = 0; x < c_.domain()->size(); ++x) {
      auto [one, zero] = split(v, x);
      if (count(one) == 0 || count(zero) == 0) continue;
      if (value(one) + 1 < height || value(zero) + 1 < height) continue;
      t.nodes[id].leaf = false;
      t.nodes[id].instance = x;
      auto a = build(one, height - 1, t);
      auto b = build(zero, height - 1, t);
      t.nodes[id].one = a;
      t.nodes[id].zero = b;
      return id;
    }
    throw Error(Errc::invalid_argument, "no split realizes the requested height");
  }

 private:
  static std::size_t count(const Subset& s) {
    std::size_t n = 0;
    for (auto w : s) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  static std::size_t first(const Subset& s) {
    for (std::size_t w = 0; w < s.size(); ++w) {
      if (s[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(s[w]));
    }
    throw Error(Errc::invalid_argument, "empty version space");
  }

  std::pair<Subset, Subset> split(const Subset& v, std::size_t x) const {
    Subset one(words_, 0);
    Subset zero(words_, 0);
    for (std::size_t w = 0; w < words_; ++w) {
      auto bits = v[w];
      while (bits) {
        auto b = static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        auto i = w * 64 + b;
        (c_.member(i)[x] ? one : zero)[w] |= std::uint64_t{1} << b;
      }
    }
    return {std::move(one), std::move(zero)};
  }

  const ConceptClass& c_;
  std::size_t words_;
  std::map<Subset, std::size_t> memo_;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

LdimResult ldim_exact(const ConceptClass& c) {
  if (c.size() > kMaxLdimClass) throw Error(Errc::budget_exceeded, "exact Littlestone dimension needs at most 4096 concepts");
  LdimSolver solver(c);
  auto all = solver.full();
  LdimResult out;
  out.value = solver.value(all);
  out.tree.height = out.value;
  solver.build(all, out.value, out.tree);
  return out;
}

std::size_t ldim_log_bound(const ConceptClass& c) { return static_cast<std::size_t>(floor_log2(c.size())); }

std::optional<std::string> check_shattered_tree(const ShatteredTree& t, const ConceptClass& c) {
  if (t.nodes.empty()) return "tree has no nodes";
  struct Frame {
    std::size_t node;
    std::size_t depth;
    std::vector<std::pair<std::size_t, std::uint8_t>> path;
  };
  std::vector<Frame> stack{{0, 0, {}}};
  std::size_t visited = 0;
  while (!stack.empty()) {
    auto f = std::move(stack.back());
    stack.pop_back();
    if (++visited > t.nodes.size()) return "tree revisits nodes";
    if (f.node >= t.nodes.size()) return "child index out of range";
    const auto& n = t.nodes[f.node];
    if (n.leaf) {
      if (f.depth != t.height) return "leaf at depth " + std::to_string(f.depth) + ", expected " + std::to_string(t.height);
      if (n.member >= c.size()) return "leaf member out of range";
      for (const auto& [x, v] : f.path) {
        if (c.member(n.member).at(x) != v) {
          return "leaf " + std::to_string(f.node) + " disagrees with its path at instance " + c.domain()->key(x);
        }
      }
      continue;
    }
    if (f.depth >= t.height) return "internal node below the declared height";
    if (n.instance >= c.domain()->size()) return "instance out of range";
    auto p1 = f.path;
    p1.emplace_back(n.instance, 1);
    auto p0 = std::move(f.path);
    p0.emplace_back(n.instance, 0);
    stack.push_back({n.zero, f.depth + 1, std::move(p0)});
    stack.push_back({n.one, f.depth + 1, std::move(p1)});
  }
  return std::nullopt;
}

CdimResult cdim_exact(const ConceptClass& c, const ConceptClass& h) {
  if (!same_domain(c.domain(), h.domain())) throw Error(Errc::domain_mismatch, "C and H on different domains");
  const auto n = c.domain()->size();
  if (n > kMaxExhaustiveDomain) throw Error(Errc::budget_exceeded, "exact consistency dimension needs a domain of at most 20");
  for (const auto& m : c.members()) {
    if (!h.contains(m)) throw Error(Errc::invalid_argument, "C is not contained in H; the dimension is unbounded");
  }
  CdimResult out;
  Bits a(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>(mask >> i & 1);
    if (h.contains(a)) continue;
    auto y = smallest_inconsistent_set(a, c);
    if (!out.extremal || y->size() > out.value) {
      out.value = y->size();
      out.extremal = a;
      out.witness = *y;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool BoundReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.pass == "false"; });
}

double advice_ldim_bound(std::size_t n, std::size_t m, std::size_t k) {
  return static_cast<double>(n * m * k) * std::log2(static_cast<double>(n)) + static_cast<double>(n);
}

std::uint64_t nominal_cdim_bound(std::size_t n, std::size_t k, std::size_t p) {
  return checked_mul(checked_mul(checked_mul(2, binomial(n + 1, 2)), binomial(p * n, k)), checked_pow(3 * p * n, k));
}

ConceptClass advice_class(std::size_t k, std::size_t n, std::size_t m) {
  // The state-count filter is exact and far cheaper on small domains.
  if (strings_up_to(digit_alphabet(k), m).size() <= 16) return advice_concept_class(class_by_minimal_states(k, n, m));
  return advice_concept_class(enumerate_class(k, n, m));
}

BoundReport advice_bound_report(const AdviceSetting& s) {
  BoundReport r;
  std::ostringstream params;
  params << "n=" << s.n << " m=" << s.m << " k=" << s.k;
  auto row = [&](std::string q, std::string exact, std::string bound, std::string pass) {
    r.rows.push_back({"advice", params.str(), std::move(q), std::move(exact), std::move(bound), std::move(pass)});
  };
  auto c = advice_class(s.k, s.n, s.m);
  auto h = advice_class(s.k, 2 * s.n, s.m);
  std::uint64_t size_bound = 0;
  std::string size_bound_text = "overflow";
  try {
    size_bound = machine_count(s.k, s.n, s.m);
    size_bound_text = std::to_string(size_bound);
  } catch (const Error&) {
  }
  row("class_size", std::to_string(c.size()), size_bound_text,
      flag(size_bound_text == "overflow" || c.size() <= size_bound));
  auto ld = ldim_exact(c);
  auto ldb = advice_ldim_bound(s.n, s.m, s.k);
  row("ldim", std::to_string(ld.value), fmt_double(ldb), flag(static_cast<double>(ld.value) <= ldb + 1e-9));
  row("ldim_log", std::to_string(ld.value), std::to_string(ldim_log_bound(c)), flag(ld.value <= ldim_log_bound(c)));
  auto cd = cdim_exact(c, h);
  row("cdim", std::to_string(cd.value), std::to_string(s.n * (s.n + 1)), flag(cd.value <= s.n * (s.n + 1)));
  row("query_product", std::to_string(cd.value * ld.value), "O(n^3 m k log n)", "ref");
  return r;
}

BoundReport nominal_bound_report(const NominalSetting& s) { return nominal_bound_report(s, builtin_fixture(s.fixture)); }

BoundReport nominal_bound_report(const NominalSetting& s, const NominalDFA& fixture) {
  BoundReport r;
  auto minimized = minimize(fixture).automaton;
  auto dim = dimension_bound_check(minimized);
  const auto orbits = dim.orbit_count;
  const auto p = dim.alphabet_dimension;
  std::ostringstream params;
  params << s.fixture << " orbits=" << orbits << " dim=" << dim.dimension << " p=" << p;
  auto row = [&](std::string q, std::string exact, std::string bound, std::string pass) {
    r.rows.push_back({"nominal", params.str(), std::move(q), std::move(exact), std::move(bound), std::move(pass)});
  };
  row("dimension", std::to_string(dim.dimension), std::to_string(dim.bound), flag(dim.ok));
  std::size_t longest = 0;
  for (const auto& w : short_witnesses(minimized)) longest = std::max(longest, w.size());
  row("short_witness_length", std::to_string(longest), std::to_string(orbits - 1), flag(longest + 1 <= orbits));

  if (dim.dimension >= 1) {
    auto w = nominal_dimension_witness(minimized, dim.dimension - 1);
    row("dimension_witness_size k=" + std::to_string(dim.dimension - 1), std::to_string(w.points.size()),
        std::to_string(2 * dim.dimension), flag(w.points.size() <= 2 * dim.dimension));
  }
  const std::size_t n = s.witness_orbits == 0 ? orbits - 1 : s.witness_orbits;
  if (n >= 1 && orbits >= n + 1 && s.witness_k <= p * n) {
    auto w = nominal_orbit_witness(minimized, n, s.witness_k);
    auto bound = nominal_cdim_bound(n, s.witness_k, p);
    row("orbit_witness_size n=" + std::to_string(n) + " k=" + std::to_string(s.witness_k),
        std::to_string(w.points.size()), std::to_string(bound), flag(w.points.size() <= bound));
  }
  std::vector<std::pair<std::string, NominalDFA>> all;
  for (const auto& name : builtin_fixture_names()) all.emplace_back(name, builtin_fixture(name));
  auto cls = nominal_concept_class(all, s.word_length);
  row("ldim_fixture_class words<=" + std::to_string(s.word_length), std::to_string(ldim_exact(cls).value),
      "O(n k^p (log n + k log k))", "ref");
  return r;
}

StateSetCounts nominal_state_set_counts(std::size_t n, std::size_t k) {
  std::vector<SupportRepresentation> types{SupportRepresentation::free(0)};
  for (std::size_t j = 1; j <= k; ++j) {
    for (const auto& cls : subgroup_conjugacy_classes(j).classes) types.emplace_back(j, cls.front());
  }
  StateSetCounts out;
  std::vector<std::size_t> pick(n, 0);
  if (n == 0) return out;
  while (true) {
    OrbitFiniteSet q;
    for (auto t : pick) q.orbits.push_back(types[t]);
    ++out.state_sets;
    auto product = orbits_of_product(q, atoms_set());
    std::uint64_t functions = 1;
    for (const auto& po : product.orbits()) {
      std::uint64_t choices = 0;
      for (const auto& target : q.orbits) choices += equivariant_maps_between(po.shape, target).size();
      functions = checked_mul(functions, choices);
    }
    out.transition_functions = checked_add(out.transition_functions, functions);
    // next non-decreasing sequence
    std::size_t pos = n;
    while (pos > 0 && pick[pos - 1] == types.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t u = pos; u < n; ++u) pick[u] = pick[pos - 1];
  }
  return out;
}

BoundReport counting_report(std::size_t n, std::size_t k) {
  BoundReport r;
  std::ostringstream params;
  params << "n=" << n << " k=" << k << " p=1";
  auto counts = nominal_state_set_counts(n, k);
  std::uint64_t types = 1;
  for (std::size_t j = 1; j <= k; ++j) types += count_single_orbit_sets(j);
  auto power = checked_pow(types, n);
  r.rows.push_back({"counting", params.str(), "state_sets", std::to_string(counts.state_sets),
                    std::to_string(power) + " = types^n", flag(counts.state_sets <= power)});
  r.rows.push_back({"counting", params.str(), "state_sets", std::to_string(counts.state_sets), "2^O(n k^2)", "ref"});
  r.rows.push_back({"counting", params.str(), "transition_functions", std::to_string(counts.transition_functions),
                    "(n (k+p)!)^O(n k^p)", "ref"});
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string bound_csv_header() { return "setting,params,quantity,exact,paper_bound,pass\n"; }

std::string bound_csv_rows(const BoundReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    out += csv_field(row.setting) + "," + csv_field(row.params) + "," + csv_field(row.quantity) + "," +
           csv_field(row.exact) + "," + csv_field(row.paper_bound) + "," + csv_field(row.pass) + "\n";
  }
  return out;
}

}  // namespace qbounds
