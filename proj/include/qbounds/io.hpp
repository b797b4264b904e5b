#pragma once

// JSON forms of the library's structured objects, file helpers and the
// config digest. Malformed input throws Errc::parse_error.

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "qbounds/advice_dfa.hpp"
#include "qbounds/concepts.hpp"
#include "qbounds/nominal_dfa.hpp"
#include "qbounds/witnesses.hpp"

namespace qbounds {

using json = nlohmann::json;

json to_json(const AdviceDFA& m);
AdviceDFA advice_dfa_from_json(const json& j);

/// {sigma, m, bits: {string: 0/1}}; ε is the empty key.
json to_json(const LanguageTable& t);
LanguageTable language_table_from_json(const json& j);

/// {orbits: [{arity, symmetry: [generators in cycle notation]}]}
json to_json(const OrbitFiniteSet& s);
OrbitFiniteSet orbit_finite_set_from_json(const json& j);

json to_json(const NominalDFA& m);
NominalDFA nominal_dfa_from_json(const json& j);

/// {domain: [keys], members: ["0110..."], provenance: [...]}
json to_json(const ConceptClass& c);
ConceptClass concept_class_from_json(const json& j);

json to_json(const WitnessSet& w);
WitnessSet witness_set_from_json(const json& j);

json to_json(const WitnessValidation& v);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);
/// Two-space indent and a trailing newline.
std::string dump_json(const json& j);

std::uint64_t fnv1a64(const std::string& bytes);
/// FNV-1a over the compact dump of `config`; object keys come out sorted, so
/// formatting and key order of the source file do not matter.
std::string config_digest(const json& config);

}  // namespace qbounds
