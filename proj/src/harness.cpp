#include "qbounds/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qbounds/dimensions.hpp"
#include "qbounds/error.hpp"

namespace qbounds {

Teacher::Teacher(Concept target, const ConceptClass& hypotheses) : target_(std::move(target)), hypotheses_(&hypotheses) {
  if (!same_domain(target_.domain, hypotheses.domain())) throw Error(Errc::domain_mismatch, "target and hypothesis class differ in domain");
}

bool Teacher::membership_query(std::size_t instance) {
  if (instance >= target_.bits.size()) throw Error(Errc::domain_mismatch, "instance out of range");
  bool v = target_.bits[instance] != 0;
  transcript_.log.push_back({QueryKind::membership, instance, {}, v});
  ++transcript_.mq_count;
  return v;
}

bool Teacher::membership_query(const std::string& key) { return membership_query(target_.domain->index(key)); }

std::optional<std::size_t> Teacher::equivalence_query(const Bits& hypothesis) {
  if (!hypotheses_->contains(hypothesis)) throw Error(Errc::illegal_hypothesis, "hypothesis is not in the hypothesis class");
  ++transcript_.eq_count;
  for (std::size_t i = 0; i < hypothesis.size(); ++i) {
    if (hypothesis[i] != target_.bits[i]) {
      transcript_.log.push_back({QueryKind::equivalence, i, hypothesis, false});
      return i;
    }
  }
  transcript_.log.push_back({QueryKind::equivalence, 0, hypothesis, true});
  return std::nullopt;
}

namespace {

void keep_consistent(const ConceptClass& c, std::vector<std::size_t>& v, std::size_t x, bool value) {
  std::erase_if(v, [&](std::size_t i) { return (c.member(i)[x] != 0) != value; });
  if (v.empty()) throw Error(Errc::inconsistent_teacher, "no concept in C agrees with the answers");
}

std::vector<std::size_t> everyone(const ConceptClass& c) {
  std::vector<std::size_t> v(c.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Returns true when the EQ was answered "yes".
bool ask(const ConceptClass& c, Teacher& t, std::vector<std::size_t>& v, const Bits& h) {
  auto cx = t.equivalence_query(h);
  if (!cx) return true;
  keep_consistent(c, v, *cx, h[*cx] == 0);
  return false;
}

}  // namespace

Transcript halving_learn(const ConceptClass& c, const ConceptClass& h, Teacher& t, LearnMode mode) {
  const auto n = c.domain()->size();
  auto v = everyone(c);
  while (true) {
    if (v.size() == 1) {
      if (ask(c, t, v, c.member(v.front()))) return t.transcript();
      continue;
    }
    Bits majority(n);
    std::size_t best_x = n;
    std::size_t best_gap = v.size();
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t ones = 0;
      for (auto i : v) ones += c.member(i)[x];
      majority[x] = 2 * ones > v.size() ? 1 : 0;
      if (ones == 0 || ones == v.size()) continue;
      auto gap = ones > v.size() - ones ? 2 * ones - v.size() : v.size() - 2 * ones;
      if (gap < best_gap) {
        best_gap = gap;
        best_x = x;
      }
    }
    if (h.contains(majority)) {
      if (ask(c, t, v, majority)) return t.transcript();
    } else if (mode == LearnMode::eq_mq && best_x < n) {
      keep_consistent(c, v, best_x, t.membership_query(best_x));
    } else {
      if (ask(c, t, v, c.member(v.front()))) return t.transcript();
    }
  }
}

Transcript consistent_learn(const ConceptClass& c, const ConceptClass& h, Teacher& t) {
  (void)h;
  auto v = everyone(c);
  while (!ask(c, t, v, c.member(v.front()))) {
  }
  return t.transcript();
}

std::vector<std::string> check_transcript(const Transcript& tr, const Concept& target) {
  std::vector<std::string> problems;
  std::size_t eq = 0;
  std::size_t mq = 0;
  std::vector<char> known(target.bits.size(), 0);
  for (std::size_t k = 0; k < tr.log.size(); ++k) {
    const auto& r = tr.log[k];
    if (r.kind == QueryKind::membership) {
      ++mq;
      if (r.answer != (target.bits.at(r.instance) != 0)) problems.push_back("wrong MQ answer");
      if (known[r.instance]) problems.push_back("MQ on an instance already answered");
      known[r.instance] = 1;
      continue;
    }
    ++eq;
    if (r.answer) {
      if (r.hypothesis != target.bits) problems.push_back("EQ accepted a wrong hypothesis");
      if (k + 1 != tr.log.size()) problems.push_back("queries after a successful EQ");
    } else {
      if (r.hypothesis.at(r.instance) == target.bits.at(r.instance)) problems.push_back("counterexample does not separate");
      known[r.instance] = 1;
    }
  }
  if (tr.log.empty() || tr.log.back().kind != QueryKind::equivalence || !tr.log.back().answer) {
    problems.push_back("transcript does not end in a successful EQ");
  }
  if (eq != tr.eq_count || mq != tr.mq_count) problems.push_back("counters do not match the log");
  return problems;
}

// ---------------------------------------------------------------------------

const char* to_string(Learner l) noexcept {
  switch (l) {
    case Learner::halving_eq_mq: return "halving-eq-mq";
    case Learner::halving_eq: return "halving-eq";
    case Learner::consistent: return "consistent";
  }
  return "?";
}

bool SuiteResult::all_identified() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.identified; });
}

bool SuiteResult::all_bound_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.bound_ok; });
}

SuiteResult run_suite(const SuiteSpec& spec) {
  const auto ldim = ldim_exact(spec.c).value;
  const auto cdim = cdim_exact(spec.c, spec.h).value;
  SuiteResult out;
  out.class_size = spec.c.size();
  out.rows.resize(spec.c.size());

  auto session = [&](std::size_t target) {
    Teacher t(spec.c.concept_at(target), spec.h);
    Transcript tr;
    switch (spec.learner) {
      case Learner::halving_eq_mq: tr = halving_learn(spec.c, spec.h, t, LearnMode::eq_mq); break;
      case Learner::halving_eq: tr = halving_learn(spec.c, spec.h, t, LearnMode::eq_only); break;
      case Learner::consistent: tr = consistent_learn(spec.c, spec.h, t); break;
    }
    SuiteRow r;
    r.setting = spec.setting;
    r.params = spec.params;
    r.target_id = target;
    r.eq = tr.eq_count;
    r.mq = tr.mq_count;
    r.total = tr.total();
    r.ldim = ldim;
    r.cdim = cdim;
    r.cd_product = ldim * cdim;
    r.bound_ok = r.total <= spec.gate_constant * r.cd_product;
    r.identified = check_transcript(tr, t.target()).empty();
    out.rows[target] = std::move(r);
  };

  const auto jobs = std::max<std::size_t>(1, std::min(spec.jobs, spec.c.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < spec.c.size(); ++i) session(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (auto i = next++; i < spec.c.size(); i = next++) session(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::size_t sum = 0;
  for (const auto& r : out.rows) {
    out.max_total = std::max(out.max_total, r.total);
    out.max_eq = std::max(out.max_eq, r.eq);
    sum += r.total;
  }
  out.mean_total = out.rows.empty() ? 0.0 : static_cast<double>(sum) / static_cast<double>(out.rows.size());
  return out;
}

std::string suite_csv_header() { return "setting,params,target_id,eq,mq,total,ldim,cdim,cd_product,bound_ok\n"; }

std::string suite_csv_rows(const SuiteResult& r) {
  std::string out;
  for (const auto& row : r.rows) {
    out += row.setting + "," + row.params + "," + std::to_string(row.target_id) + "," + std::to_string(row.eq) + "," +
           std::to_string(row.mq) + "," + std::to_string(row.total) + "," + std::to_string(row.ldim) + "," +
           std::to_string(row.cdim) + "," + std::to_string(row.cd_product) + "," + (row.bound_ok ? "true" : "false") +
           "\n";
  }
  return out;
}

}  // namespace qbounds
