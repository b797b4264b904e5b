#pragma once

#include <stdexcept>
#include <string>

namespace qbounds {

enum class Errc {
  degree_mismatch,
  unsupported_degree,
  arity_mismatch,
  invalid_argument,
  alphabet_mismatch,
  invalid_relation,
  invalid_automaton,
  budget_exceeded,
  domain_mismatch,
  not_a_witness_case,
  illegal_hypothesis,
  inconsistent_teacher,
  validation_failure,
  parse_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qbounds
