#pragma once

// Teachers answering membership and equivalence queries, and learners that
// use them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qbounds/concepts.hpp"

namespace qbounds {

enum class QueryKind { membership, equivalence };

struct QueryRecord {
  QueryKind kind = QueryKind::membership;
  std::size_t instance = 0;          // MQ: the instance; EQ: the counterexample
  Bits hypothesis;                   // EQ only
  bool answer = false;               // MQ: target value; EQ: true on "yes"
};

struct Transcript {
  std::vector<QueryRecord> log;
  std::size_t eq_count = 0;
  std::size_t mq_count = 0;
  std::size_t total() const noexcept { return eq_count + mq_count; }
};

class Teacher {
 public:
  /// Hypotheses are restricted to `hypotheses`.
  Teacher(Concept target, const ConceptClass& hypotheses);

  bool membership_query(std::size_t instance);
  bool membership_query(const std::string& key);
  /// nullopt means "yes"; otherwise the first disagreeing instance in
  /// domain order. Throws Errc::illegal_hypothesis outside the class.
  std::optional<std::size_t> equivalence_query(const Bits& hypothesis);

  const Concept& target() const noexcept { return target_; }
  const Transcript& transcript() const noexcept { return transcript_; }

 private:
  Concept target_;
  const ConceptClass* hypotheses_;
  Transcript transcript_;
};

enum class LearnMode { eq_only, eq_mq };

/// Version-space halving. The majority vote is asked as an EQ when it lies
/// in H; otherwise eq_mq asks the most balanced instance, and eq_only falls
/// back to the first surviving member.
Transcript halving_learn(const ConceptClass& c, const ConceptClass& h, Teacher& t, LearnMode mode);
/// Asks the first member of C not yet refuted.
Transcript consistent_learn(const ConceptClass& c, const ConceptClass& h, Teacher& t);

/// Problems found when replaying a transcript against the target, if any.
std::vector<std::string> check_transcript(const Transcript& tr, const Concept& target);

enum class Learner { halving_eq_mq, halving_eq, consistent };
const char* to_string(Learner l) noexcept;

struct SuiteSpec {
  std::string setting;
  std::string params;
  ConceptClass c;
  ConceptClass h;
  Learner learner = Learner::halving_eq_mq;
  std::size_t gate_constant = 4;
  std::size_t jobs = 1;
};

struct SuiteRow {
  std::string setting;
  std::string params;
  std::size_t target_id = 0;
  std::size_t eq = 0;
  std::size_t mq = 0;
  std::size_t total = 0;
  std::size_t ldim = 0;
  std::size_t cdim = 0;
  std::size_t cd_product = 0;
  bool bound_ok = false;
  bool identified = false;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  std::size_t class_size = 0;
  std::size_t max_total = 0;
  double mean_total = 0;
  std::size_t max_eq = 0;
  bool all_identified() const;
  bool all_bound_ok() const;
};

/// One learning session per member of C as target.
SuiteResult run_suite(const SuiteSpec& spec);

std::string suite_csv_header();
std::string suite_csv_rows(const SuiteResult& r);

}  // namespace qbounds
