#ifndef COSETCONN_SPEC_DOCUMENT_HPP
#define COSETCONN_SPEC_DOCUMENT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cosetconn/coset_digraph.hpp"
#include "cosetconn/cp_family.hpp"
#include "cosetconn/digraph.hpp"

namespace cosetconn {

// Input document: either an explicit group/subgroup/connection-set triple
// (permutations in cycle notation) or {"family": "cp", "n": N, "k": K}, plus
// optional "settings" {enumeration_cap, bruteforce_cap}.
struct SpecDocument {
  CosetDigraphSpec spec;
  std::optional<CPParams> family;
  std::size_t bruteforce_cap = default_bruteforce_cap;
};

// Throws InputError on malformed JSON, unknown keys or invalid permutations.
SpecDocument parse_spec_document(std::string_view text);
SpecDocument load_spec_document(const std::string& path);

// COSET_ENUM_CAP, if set; InputError if it is not a positive integer.
std::optional<std::size_t> enumeration_cap_from_env();

// Explicit form; labels and permutations in cycle notation.
nlohmann::ordered_json spec_to_json(const CosetDigraphSpec& spec);

CosetDigraph build_document(const SpecDocument& doc);

} // namespace cosetconn

#endif // COSETCONN_SPEC_DOCUMENT_HPP
