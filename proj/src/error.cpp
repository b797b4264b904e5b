#include "qbounds/error.hpp"

namespace qbounds {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::degree_mismatch: return "degree mismatch";
    case Errc::unsupported_degree: return "unsupported degree";
    case Errc::arity_mismatch: return "arity mismatch";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::alphabet_mismatch: return "alphabet mismatch";
    case Errc::invalid_relation: return "invalid relation";
    case Errc::invalid_automaton: return "invalid automaton";
    case Errc::budget_exceeded: return "budget exceeded";
    case Errc::domain_mismatch: return "domain mismatch";
    case Errc::not_a_witness_case: return "not a witness case";
    case Errc::illegal_hypothesis: return "illegal hypothesis";
    case Errc::inconsistent_teacher: return "inconsistent teacher";
    case Errc::validation_failure: return "validation failure";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

}  // namespace qbounds
