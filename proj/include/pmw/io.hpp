#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pmw/codes.hpp"
#include "pmw/gf.hpp"
#include "pmw/poset.hpp"
#include "pmw/relations.hpp"

namespace pmw::io {

using nlohmann::json;

/// "{1,3}" with 1-based elements; "{}" for the empty ideal.
std::string format_ideal(Mask ideal);
/// Space-separated 1-based images, e.g. "2 1 4 3".
std::string format_permutation(const Permutation& sigma);

/// Poset text format:
///   # comment
///   n=5
///   1<2
/// Relation pairs may be covers or any comparable pairs; the closure is taken.
/// A JSON document with a "poset" object (or of type "poset") is accepted too.
/// Errors carry "<source>:<line>:" prefixes.
Poset read_poset(std::string_view text, std::string_view source = "<poset>");

/// Code text format:
///   q=4
///   modulus=1 1 1      (optional, leading coefficient first)
///   n=3
///   k=2
///   then k rows of n integers in [0, q)
GeneratorMatrix read_code(std::string_view text, std::string_view source = "<code>");

/// One permutation per line as 1-based images. The identity is added if absent.
std::vector<Permutation> read_subgroup(std::string_view text, int n, std::string_view source = "<subgroup>");

/// Partition text format: one block per line, ideals written as {a,b,...}
/// separated by whitespace. A JSON partition document is accepted too; its
/// embedded poset must equal `poset`.
IdealPartition read_partition(std::string_view text, const Poset& poset, std::string_view source = "<partition>");

/// Field of order q, with an optional modulus listed leading coefficient first.
Field field_for(std::uint32_t q, const std::optional<std::vector<std::uint32_t>>& modulus_leading_first);

json poset_to_json(const Poset& poset);
json code_to_json(const GeneratorMatrix& g);
json ideal_to_json(Mask ideal);
json partition_to_json(const IdealPartition& partition);

Poset poset_from_json(const json& j);
GeneratorMatrix code_from_json(const json& j);
IdealPartition partition_from_json(const json& j);

/// Compact JSON with a trailing newline.
std::string dump(const json& j);

}  // namespace pmw::io
