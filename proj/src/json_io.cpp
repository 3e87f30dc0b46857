#include "cobweb/json_io.hpp"

#include "cobweb/errors.hpp"

namespace cobweb {

Json to_json(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

Json matrix_json(const IncidenceMatrix& m, std::size_t leading) {
  const std::size_t n = leading == 0 ? m.order.size() : leading;
  if (n > m.order.size()) throw Error("leading block larger than the matrix");
  Json order = Json::array();
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    order.push_back(to_string(m.order[i]));
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.entries(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"order", std::move(order)}, {"matrix", std::move(rows)}};
}

Json tiling_instance_json(const TilingInstance& instance, bool include_candidates) {
  Json doc;
  doc["sequence"] = instance.sequence().name();
  doc["k"] = instance.k();
  doc["n"] = instance.n();
  doc["sigma"] = to_string(instance.policy());
  doc["block_chain_count"] = instance.block_chain_count();
  doc["chains"] = instance.universe();
  if (include_candidates) {
    Json blocks = Json::array();
    for (const auto& b : instance.blocks()) blocks.push_back(b.chains);
    doc["blocks"] = std::move(blocks);
  }
  return doc;
}

Json witness_json(const TilingInstance& instance, const std::vector<std::size_t>& block_ids) {
  Json blocks = Json::array();
  for (auto id : block_ids) {
    if (id >= instance.blocks().size()) throw ForeignBlock("witness refers to a missing block");
    blocks.push_back(instance.blocks()[id].chains);
  }
  return blocks;
}

std::vector<std::vector<std::size_t>> witness_from_json(const Json& doc) {
  if (doc.is_object() && !doc.contains("witness"))
    throw ParseError("witness object has no \"witness\" member");
  const Json& arr = doc.is_object() ? doc["witness"] : doc;
  if (!arr.is_array()) throw ParseError("witness must be an array of chain-index arrays");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& block : arr) {
    if (!block.is_array()) throw ParseError("witness block must be an array of chain indices");
    std::vector<std::size_t> chains;
    for (const auto& c : block) {
      if (!c.is_number_unsigned()) throw ParseError("chain index must be a nonnegative integer");
      chains.push_back(c.get<std::size_t>());
    }
    out.push_back(std::move(chains));
  }
  return out;
}

}  // namespace cobweb
