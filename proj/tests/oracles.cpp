#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

std::vector<Perm> all_perms(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

std::size_t subgroup_count_by_subsets(int k) {
  auto perms = all_perms(k);
  const std::size_t n = perms.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // identity is perms[0]
    std::set<Perm> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.insert(perms[i]);
    }
    bool closed = true;
    for (const auto& a : members) {
      for (const auto& b : members) {
        if (!members.count(compose(a, b))) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

std::vector<std::vector<Perm>> subgroups_by_pair_closure(int k) {
  auto perms = all_perms(k);
  std::set<std::vector<Perm>> groups;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      std::set<Perm> g{a, b};
      // a finite set closed under composition is a group
      for (bool grew = true; grew;) {
        grew = false;
        std::vector<Perm> now(g.begin(), g.end());
        for (const auto& x : now) {
          for (const auto& y : now) grew |= g.insert(compose(x, y)).second;
        }
      }
      groups.emplace(g.begin(), g.end());
    }
  }
  return {groups.begin(), groups.end()};
}

std::size_t conjugacy_class_count(int k, const std::vector<std::vector<Perm>>& groups) {
  auto perms = all_perms(k);
  std::set<std::vector<Perm>> all(groups.begin(), groups.end());
  std::set<std::vector<Perm>> seen;
  std::size_t classes = 0;
  for (const auto& g : groups) {
    if (seen.count(g)) continue;
    ++classes;
    for (const auto& rho : perms) {
      Perm inv(rho.size());
      for (std::size_t i = 0; i < rho.size(); ++i) inv[static_cast<std::size_t>(rho[i])] = static_cast<int>(i);
      std::vector<Perm> conj;
      for (const auto& s : g) conj.push_back(compose(compose(rho, s), inv));
      std::sort(conj.begin(), conj.end());
      seen.insert(conj);
    }
  }
  return classes;
}

namespace {

void tuples(int length, int pool, std::vector<int>& cur, std::vector<bool>& used,
            const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == length) {
    visit(cur);
    return;
  }
  for (int a = 0; a < pool; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    used[static_cast<std::size_t>(a)] = true;
    cur.push_back(a);
    tuples(length, pool, cur, used, visit);
    cur.pop_back();
    used[static_cast<std::size_t>(a)] = false;
  }
}

std::vector<std::vector<int>> all_tuples(int length, int pool) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(pool), false);
  tuples(length, pool, cur, used, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

std::vector<int> first_use(const std::vector<int>& word) {
  std::map<int, int> names;
  std::vector<int> out;
  for (int a : word) {
    auto it = names.find(a);
    if (it == names.end()) it = names.emplace(a, static_cast<int>(names.size())).first;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

std::size_t product_orbit_count(const std::vector<int>& arities) {
  const int pool = std::accumulate(arities.begin(), arities.end(), 0);
  std::set<std::vector<int>> keys;
  std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t i, std::vector<int>& word) {
    if (i == arities.size()) {
      keys.insert(first_use(word));
      return;
    }
    for (const auto& t : all_tuples(arities[i], pool)) {
      auto size = word.size();
      word.insert(word.end(), t.begin(), t.end());
      rec(i + 1, word);
      word.resize(size);
    }
  };
  std::vector<int> word;
  rec(0, word);
  return keys.size();
}

std::size_t product_orbit_count(int k1, int k2) { return product_orbit_count(std::vector<int>{k1, k2}); }

namespace {

// Class of a tuple modulo S as the sorted list of all its S-rearrangements.
std::vector<std::vector<int>> class_of(const std::vector<int>& t, const qbounds::Subgroup& s) {
  std::vector<std::vector<int>> out;
  for (const auto& tau : s.elements()) {
    std::vector<int> r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[tau(i)];
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::size_t symmetric_product_orbit_count(const qbounds::SupportRepresentation& a,
                                          const qbounds::SupportRepresentation& b) {
  const int pool = static_cast<int>(a.arity + b.arity);
  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  std::map<Key, std::size_t> index;
  for (const auto& x : all_tuples(static_cast<int>(a.arity), pool)) {
    for (const auto& y : all_tuples(static_cast<int>(b.arity), pool)) {
      Key key{class_of(x, a.symmetry), class_of(y, b.symmetry)};
      index.emplace(key, index.size());
    }
  }
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  auto perms = all_perms(pool);
  for (const auto& [key, id] : index) {
    const auto& x = key.first.front();
    const auto& y = key.second.front();
    for (const auto& pi : perms) {
      std::vector<int> px;
      std::vector<int> py;
      for (int v : x) px.push_back(pi[static_cast<std::size_t>(v)]);
      for (int v : y) py.push_back(pi[static_cast<std::size_t>(v)]);
      auto other = index.at(Key{class_of(px, a.symmetry), class_of(py, b.symmetry)});
      parent[find(other)] = find(id);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
  return roots.size();
}

std::vector<qbounds::Atom> least_support(const qbounds::SupportRepresentation& rep,
                                         const qbounds::AtomTuple& tuple) {
  std::vector<int> t(tuple.begin(), tuple.end());
  int top = t.empty() ? 0 : *std::max_element(t.begin(), t.end()) + 1;
  std::vector<int> universe = t;
  universe.push_back(top);
  universe.push_back(top + 1);
  const auto base = class_of(t, rep.symmetry);
  auto fixed_by = [&](int p, int q) {
    std::vector<int> moved;
    for (int v : t) moved.push_back(v == p ? q : v == q ? p : v);
    return class_of(moved, rep.symmetry) == base;
  };
  const std::size_t n = t.size();
  std::vector<std::vector<qbounds::Atom>> supports;
  std::size_t best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::set<int> d;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) d.insert(t[i]);
    }
    bool supports_x = true;
    for (int p : universe) {
      for (int q : universe) {
        if (p < q && !d.count(p) && !d.count(q) && !fixed_by(p, q)) supports_x = false;
      }
    }
    if (!supports_x) continue;
    std::vector<qbounds::Atom> as(d.begin(), d.end());
    if (as.size() < best) {
      best = as.size();
      supports.clear();
    }
    if (as.size() == best) supports.push_back(as);
  }
  // A least support is unique; several minimal ones would be a bug upstream.
  if (supports.size() != 1) return {};
  return supports.front();
}

namespace {

struct AdviceSearch {
  const std::string& sigma;
  std::size_t m;
  std::size_t n;
  std::vector<std::vector<bool>> labels;  // labels[l][i]: membership of i-th string of length l
  std::vector<bool> accepting;
  std::vector<std::set<std::vector<std::size_t>>> dead;

  bool consistent(std::size_t level, const std::vector<std::size_t>& assign) const {
    for (std::size_t i = 0; i < assign.size(); ++i) {
      if (accepting[assign[i]] != labels[level][i]) return false;
    }
    return true;
  }

  bool extend(std::size_t level, const std::vector<std::size_t>& assign) {
    if (level == m) return true;
    if (dead[level].count(assign)) return false;
    const auto k = sigma.size();
    std::vector<std::size_t> occupied(assign.begin(), assign.end());
    std::sort(occupied.begin(), occupied.end());
    occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
    // rows[j * k + s]: successor of occupied[j] on symbol s
    std::vector<std::size_t> rows(occupied.size() * k, 0);
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t j = 0; j < occupied.size(); ++j) slot[occupied[j]] = j;
    while (true) {
      std::vector<std::size_t> next;
      next.reserve(assign.size() * k);
      for (auto q : assign) {
        for (std::size_t s = 0; s < k; ++s) next.push_back(rows[slot[q] * k + s]);
      }
      if (consistent(level + 1, next) && extend(level + 1, next)) return true;
      std::size_t pos = 0;
      while (pos < rows.size() && ++rows[pos] == n) rows[pos++] = 0;
      if (pos == rows.size()) break;
    }
    dead[level].insert(assign);
    return false;
  }
};

}  // namespace

bool advice_feasible(const std::string& sigma, std::size_t m, std::size_t n,
                     const std::function<bool(const std::string&)>& member) {
  std::vector<std::vector<bool>> labels(m + 1);
  std::vector<std::string> level{""};
  for (std::size_t l = 0; l <= m; ++l) {
    for (const auto& x : level) labels[l].push_back(member(x));
    std::vector<std::string> next;
    for (const auto& x : level) {
      for (char c : sigma) next.push_back(x + c);
    }
    level = std::move(next);
  }
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    AdviceSearch search{sigma, m, n, labels, std::vector<bool>(n), std::vector<std::set<std::vector<std::size_t>>>(m + 1)};
    for (std::size_t q = 0; q < n; ++q) search.accepting[q] = (f >> q & 1) != 0;
    for (std::size_t q0 = 0; q0 < n; ++q0) {
      std::vector<std::size_t> start{q0};
      if (search.consistent(0, start) && search.extend(0, start)) return true;
    }
  }
  return false;
}

std::size_t advice_min_states(const std::string& sigma, std::size_t m,
                              const std::function<bool(const std::string&)>& member) {
  for (std::size_t n = 1;; ++n) {
    if (advice_feasible(sigma, m, n, member)) return n;
  }
}

std::size_t ldim_naive(const std::vector<std::vector<std::uint8_t>>& cls, std::size_t domain_size) {
  if (cls.size() <= 1) return 0;
  std::size_t best = 0;
  for (std::size_t x = 0; x < domain_size; ++x) {
    std::vector<std::vector<std::uint8_t>> one;
    std::vector<std::vector<std::uint8_t>> zero;
    for (const auto& c : cls) (c[x] ? one : zero).push_back(c);
    if (one.empty() || zero.empty()) continue;
    best = std::max(best, 1 + std::min(ldim_naive(one, domain_size), ldim_naive(zero, domain_size)));
  }
  return best;
}

std::size_t cdim_naive(const std::vector<std::vector<std::uint8_t>>& c,
                       const std::vector<std::vector<std::uint8_t>>& h, std::size_t domain_size) {
  std::set<std::vector<std::uint8_t>> in_h(h.begin(), h.end());
  auto consistent = [&](const std::vector<std::uint8_t>& a, std::size_t n) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << domain_size); ++y) {
      if (static_cast<std::size_t>(__builtin_popcountll(y)) != n) continue;
      bool extended = std::any_of(c.begin(), c.end(), [&](const std::vector<std::uint8_t>& m) {
        for (std::size_t i = 0; i < domain_size; ++i) {
          if ((y >> i & 1) && m[i] != a[i]) return false;
        }
        return true;
      });
      if (!extended) return false;
    }
    return true;
  };
  for (std::size_t n = 0;; ++n) {
    bool ok = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << domain_size) && ok; ++mask) {
      std::vector<std::uint8_t> a(domain_size);
      for (std::size_t i = 0; i < domain_size; ++i) a[i] = static_cast<std::uint8_t>(mask >> i & 1);
      if (!in_h.count(a) && consistent(a, n)) ok = false;
    }
    if (ok) return n;
  }
}

qbounds::NominalDFA random_nominal_dfa(std::mt19937_64& rng, std::size_t orbits, std::size_t max_arity) {
  return qbounds::random_automaton(rng, orbits, max_arity);
}

}  // namespace oracle
