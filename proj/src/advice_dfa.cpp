#include "qbounds/advice_dfa.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qbounds/combinatorics.hpp"
#include "qbounds/error.hpp"

namespace qbounds {

namespace {

std::size_t symbol_index(std::string_view sigma, char c) {
  auto pos = sigma.find(c);
  if (pos == std::string_view::npos) {
    throw Error(Errc::invalid_argument, std::string("symbol '") + c + "' is not in the alphabet");
  }
  return pos;
}

std::uint64_t domain_size(std::size_t k, std::size_t m) {
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (std::size_t l = 0; l <= m; ++l) {
    total = checked_add(total, level);
    if (l < m) level = checked_mul(level, k);
  }
  return total;
}

void check_domain(std::size_t k, std::size_t m) {
  std::uint64_t size = 0;
  try {
    size = domain_size(k, m);
  } catch (const Error&) {
    throw Error(Errc::budget_exceeded, "language domain too large");
  }
  if (size > kMaxTableEntries) throw Error(Errc::budget_exceeded, "language domain too large");
}

}  // namespace

std::vector<std::string> strings_up_to(std::string_view sigma, std::size_t m) {
  check_domain(sigma.size(), m);
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t l = 1; l <= m; ++l) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : sigma) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

std::size_t string_index(std::string_view sigma, std::string_view x) {
  const auto k = sigma.size();
  std::size_t offset = 0;
  std::size_t level = 1;
  for (std::size_t l = 0; l < x.size(); ++l) {
    offset += level;
    level *= k;
  }
  std::size_t rank = 0;
  for (char c : x) rank = rank * k + symbol_index(sigma, c);
  return offset + rank;
}

// ---------------------------------------------------------------------------

void AdviceDFA::validate() const {
  const auto k = sigma.size();
  if (k == 0) throw Error(Errc::invalid_automaton, "empty alphabet");
  if (std::set<char>(sigma.begin(), sigma.end()).size() != k) {
    throw Error(Errc::invalid_automaton, "repeated alphabet symbol");
  }
  if (n == 0) throw Error(Errc::invalid_automaton, "automaton needs at least one state");
  if (q0 >= n) throw Error(Errc::invalid_automaton, "initial state out of range");
  for (auto f : accepting) {
    if (f >= n) throw Error(Errc::invalid_automaton, "accepting state out of range");
  }
  if (steps.size() != m) throw Error(Errc::invalid_automaton, "need exactly one step table per position");
  for (const auto& t : steps) {
    if (t.size() != n * k) throw Error(Errc::invalid_automaton, "step table has the wrong size");
    for (auto q : t) {
      if (q >= n) throw Error(Errc::invalid_automaton, "step table target out of range");
    }
  }
}

bool AdviceDFA::is_accepting(std::size_t q) const {
  return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

bool accepts(const AdviceDFA& m, std::string_view x) {
  if (x.size() > m.m) throw Error(Errc::invalid_argument, "string longer than the horizon");
  const auto k = m.sigma.size();
  std::size_t q = m.q0;
  for (std::size_t i = 0; i < x.size(); ++i) q = m.steps[i].at(q * k + symbol_index(m.sigma, x[i]));
  return m.is_accepting(q);
}

bool LanguageTable::at(std::string_view x) const {
  if (x.size() > m) throw Error(Errc::invalid_argument, "string longer than the horizon");
  return bits.at(string_index(sigma, x)) != 0;
}

LanguageTable language_table(const AdviceDFA& machine) {
  machine.validate();
  check_domain(machine.sigma.size(), machine.m);
  const auto k = machine.sigma.size();
  // states[i] is the state reached on the i-th string; children of string i
  // at length l sit contiguously in the next level.
  std::vector<std::size_t> states{machine.q0};
  std::size_t begin = 0;
  for (std::size_t l = 0; l < machine.m; ++l) {
    std::size_t end = states.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < k; ++s) states.push_back(machine.steps[l][states[i] * k + s]);
    }
    begin = end;
  }
  LanguageTable out{machine.sigma, machine.m, {}};
  out.bits.reserve(states.size());
  for (auto q : states) out.bits.push_back(machine.is_accepting(q) ? 1 : 0);
  return out;
}

LanguageTable table_from_predicate(std::string_view sigma, std::size_t m,
                                   const std::function<bool(std::string_view)>& member) {
  LanguageTable out{std::string(sigma), m, {}};
  for (const auto& x : strings_up_to(sigma, m)) out.bits.push_back(member(x) ? 1 : 0);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Profile of x: L(xz) for z in Σ^{<=m-|x|}, in domain order of z.
std::vector<std::uint8_t> profile(const LanguageTable& l, const std::string& x,
                                  const std::vector<std::string>& suffixes) {
  std::vector<std::uint8_t> out;
  out.reserve(suffixes.size());
  for (const auto& z : suffixes) out.push_back(l.bits[string_index(l.sigma, x + z)]);
  return out;
}

std::vector<std::string> strings_of_length(std::string_view sigma, std::size_t length) {
  auto all = strings_up_to(sigma, length);
  std::vector<std::string> out;
  for (auto& s : all) {
    if (s.size() == length) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

MNPartition mn_partition(const LanguageTable& l, std::size_t length) {
  if (length > l.m) throw Error(Errc::invalid_argument, "partition length beyond the horizon");
  auto suffixes = strings_up_to(l.sigma, l.m - length);
  std::map<std::vector<std::uint8_t>, std::size_t> block_of;
  MNPartition out;
  out.length = length;
  for (const auto& x : strings_of_length(l.sigma, length)) {
    auto [it, inserted] = block_of.emplace(profile(l, x, suffixes), out.blocks.size());
    if (inserted) out.blocks.emplace_back();
    out.blocks[it->second].push_back(x);
  }
  return out;
}

std::size_t max_class_count(const LanguageTable& l) {
  std::size_t best = 0;
  for (std::size_t len = 0; len <= l.m; ++len) best = std::max(best, mn_partition(l, len).blocks.size());
  return best;
}

namespace {

// Shared by synthesize and minimal_states: per-length block ids, a state for
// each (length, block), and step tables following the blocks.
AdviceDFA automaton_from_blocks(const LanguageTable& l, std::size_t state_count,
                                const std::function<std::size_t(std::size_t, std::size_t, bool)>& state_of) {
  const auto k = l.sigma.size();
  std::vector<std::map<std::string, std::size_t>> block_index(l.m + 1);
  for (std::size_t len = 0; len <= l.m; ++len) {
    auto part = mn_partition(l, len);
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
      for (const auto& x : part.blocks[b]) block_index[len].emplace(x, b);
    }
  }
  auto state_for = [&](const std::string& x) {
    return state_of(x.size(), block_index[x.size()].at(x), l.at(x));
  };
  AdviceDFA out;
  out.sigma = l.sigma;
  out.m = l.m;
  out.n = state_count;
  out.q0 = state_for("");
  for (std::size_t q = 0; q < state_count; ++q) {
    bool acc = false;
    bool seen = false;
    for (std::size_t len = 0; len <= l.m && !seen; ++len) {
      for (const auto& [x, b] : block_index[len]) {
        if (state_for(x) == q) {
          acc = l.at(x);
          seen = true;
          break;
        }
      }
    }
    if (acc) out.accepting.push_back(q);
  }
  for (std::size_t len = 0; len < l.m; ++len) {
    std::vector<std::size_t> table(state_count * k, 0);
    for (const auto& [x, b] : block_index[len]) {
      for (std::size_t s = 0; s < k; ++s) table[state_for(x) * k + s] = state_for(x + l.sigma[s]);
    }
    out.steps.push_back(std::move(table));
  }
  return out;
}

}  // namespace

AdviceDFA synthesize(const LanguageTable& l) {
  const auto n = max_class_count(l);
  return automaton_from_blocks(l, 2 * n, [](std::size_t, std::size_t block, bool acc) {
    return 2 * block + (acc ? 1 : 0);
  });
}

MinimalStates minimal_states(const LanguageTable& l) {
  // Rank of each block among the accepting (or rejecting) blocks at its length.
  std::vector<std::vector<std::size_t>> rank(l.m + 1);
  std::size_t max_acc = 0;
  std::size_t max_rej = 0;
  for (std::size_t len = 0; len <= l.m; ++len) {
    auto part = mn_partition(l, len);
    std::size_t acc = 0;
    std::size_t rej = 0;
    for (const auto& block : part.blocks) rank[len].push_back(l.at(block.front()) ? acc++ : rej++);
    max_acc = std::max(max_acc, acc);
    max_rej = std::max(max_rej, rej);
  }
  const auto states = max_acc + max_rej;
  auto realization = automaton_from_blocks(l, states, [&](std::size_t len, std::size_t block, bool acc) {
    return acc ? rank[len][block] : max_acc + rank[len][block];
  });
  return {states, std::move(realization)};
}

// ---------------------------------------------------------------------------

std::string digit_alphabet(std::size_t k) {
  if (k == 0 || k > 10) throw Error(Errc::invalid_argument, "alphabet size must be 1..10");
  return std::string("0123456789").substr(0, k);
}

std::uint64_t machine_count(std::size_t k, std::size_t n, std::size_t m) {
  auto tables = checked_pow(n, checked_mul(checked_mul(n, m), k));
  return checked_mul(tables, checked_pow(2, n));
}

std::vector<LanguageTable> enumerate_class(std::size_t k, std::size_t n, std::size_t m, std::uint64_t budget) {
  if (n == 0) throw Error(Errc::invalid_argument, "state count must be positive");
  std::uint64_t count = 0;
  try {
    count = machine_count(k, n, m);
  } catch (const Error&) {
    throw Error(Errc::budget_exceeded, "machine space overflows");
  }
  if (count > budget) throw Error(Errc::budget_exceeded, "machine space exceeds the enumeration budget");
  const auto sigma = digit_alphabet(k);
  check_domain(k, m);

  // Walk all step tables as one odometer over n^{nmk} digits; the reached
  // state of every string then fixes the table for all 2^n accepting sets.
  const std::size_t cells = n * k * m;
  std::vector<std::size_t> digits(cells, 0);
  std::set<std::vector<std::uint8_t>> found;
  AdviceDFA machine{sigma, m, n, 0, {}, std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(n * k))};
  while (true) {
    for (std::size_t l = 0; l < m; ++l) {
      std::copy(digits.begin() + static_cast<std::ptrdiff_t>(l * n * k),
                digits.begin() + static_cast<std::ptrdiff_t>((l + 1) * n * k), machine.steps[l].begin());
    }
    std::vector<std::size_t> states{0};
    std::size_t begin = 0;
    for (std::size_t l = 0; l < m; ++l) {
      std::size_t end = states.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t s = 0; s < k; ++s) states.push_back(machine.steps[l][states[i] * k + s]);
      }
      begin = end;
    }
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
      std::vector<std::uint8_t> bits(states.size());
      for (std::size_t i = 0; i < states.size(); ++i) bits[i] = static_cast<std::uint8_t>(f >> states[i] & 1);
      found.insert(std::move(bits));
    }
    std::size_t pos = 0;
    while (pos < cells && ++digits[pos] == n) digits[pos++] = 0;
    if (pos == cells) break;
  }
  std::vector<LanguageTable> out;
  for (const auto& bits : found) out.push_back(LanguageTable{sigma, m, bits});
  return out;
}

std::vector<LanguageTable> class_by_minimal_states(std::size_t k, std::size_t n, std::size_t m) {
  const auto sigma = digit_alphabet(k);
  const auto size = strings_up_to(sigma, m).size();
  if (size > 20) throw Error(Errc::budget_exceeded, "exhaustive language filter needs <= 20 strings");
  std::vector<LanguageTable> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    LanguageTable t{sigma, m, std::vector<std::uint8_t>(size)};
    for (std::size_t i = 0; i < size; ++i) t.bits[i] = static_cast<std::uint8_t>(mask >> i & 1);
    if (minimal_states(t).states <= n) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LanguageTable tightness_language(std::size_t k, std::size_t m) {
  if (k == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
  return table_from_predicate("01", m, [k](std::string_view w) {
    auto zeros = static_cast<std::size_t>(std::count(w.begin(), w.end(), '0'));
    return (zeros % k == 0 && w.size() != 2) || w.size() == 3;
  });
}

AdviceDFA tightness_automaton(std::size_t k, std::size_t m) {
  return minimal_states(tightness_language(k, m)).realization;
}

}  // namespace qbounds
