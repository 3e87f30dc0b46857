#pragma once

#include "cobweb/bigint.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/tiling.hpp"

#include <json.hpp>

#include <cstddef>
#include <vector>

namespace cobweb {

using Json = nlohmann::ordered_json;

// Exact integers are always serialized as decimal strings.
inline Json to_json(const BigInt& v) { return v.str(); }
Json to_json(const std::vector<BigInt>& values);

/// {"order": ["<1,0>", ...], "matrix": [["1","1",...], ...]}
Json matrix_json(const IncidenceMatrix& m, std::size_t leading = 0);

/// {"sequence", "k", "n", "sigma", "block_chain_count", "chains": [[j_k..j_n], ...],
///  and with candidates: "blocks": [[chain indices], ...]}
Json tiling_instance_json(const TilingInstance& instance, bool include_candidates);

/// Witness blocks as arrays of chain indices.
Json witness_json(const TilingInstance& instance, const std::vector<std::size_t>& block_ids);

/// Reads {"witness": [[chain indices], ...]} (or a bare array of arrays).
std::vector<std::vector<std::size_t>> witness_from_json(const Json& doc);

}  // namespace cobweb
