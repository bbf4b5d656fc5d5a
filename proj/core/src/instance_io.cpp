#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fairdiv/model.hpp"
#include "json_util.hpp"

namespace fairdiv {

namespace {

std::vector<std::string> read_names(const nlohmann::json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of strings");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) {
      throw ParseError(std::string(key) + "[" + std::to_string(k) + "] must be a string");
    }
    out.push_back(arr[k].get<std::string>());
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const nlohmann::json doc = detail::parse_exact_json(text);
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object", 1);

  Instance inst;
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw ParseError("missing string field \"kind\"");
  }
  try {
    inst.kind = parse_kind(doc.at("kind").get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }

  if (!doc.contains("weights") || !doc.at("weights").is_array()) {
    throw ParseError("missing array field \"weights\"");
  }
  const auto& weights = doc.at("weights");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    inst.weights.push_back(detail::rational_from_json(weights[i], "weights[" + std::to_string(i) + "]"));
  }

  if (!doc.contains("costs") || !doc.at("costs").is_array()) {
    throw ParseError("missing array field \"costs\"");
  }
  const auto& costs = doc.at("costs");
  if (costs.size() != inst.weights.size()) {
    throw ParseError("dimension mismatch: " + std::to_string(costs.size()) + " cost rows for " +
                     std::to_string(inst.weights.size()) + " weights");
  }
  std::size_t width = 0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    const auto& row = costs[i];
    if (!row.is_array()) throw ParseError("costs[" + std::to_string(i) + "] must be an array");
    if (i == 0) width = row.size();
    if (row.size() != width) {
      throw ParseError("dimension mismatch: costs[" + std::to_string(i) + "] has " +
                       std::to_string(row.size()) + " entries, costs[0] has " + std::to_string(width));
    }
    std::vector<Rational> parsed;
    parsed.reserve(row.size());
    for (std::size_t e = 0; e < row.size(); ++e) {
      parsed.push_back(detail::rational_from_json(
          row[e], "costs[" + std::to_string(i) + "][" + std::to_string(e) + "]"));
    }
    inst.costs.push_back(std::move(parsed));
  }

  inst.agent_names = read_names(doc, "agent_names");
  inst.item_names = read_names(doc, "item_names");
  if (!inst.agent_names.empty() && inst.agent_names.size() != inst.agents()) {
    throw ParseError("dimension mismatch: agent_names has " + std::to_string(inst.agent_names.size()) +
                     " entries for " + std::to_string(inst.agents()) + " agents");
  }
  if (!inst.item_names.empty() && inst.item_names.size() != inst.items()) {
    throw ParseError("dimension mismatch: item_names has " + std::to_string(inst.item_names.size()) +
                     " entries for " + std::to_string(inst.items()) + " items");
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": " << detail::quote(to_string(inst.kind)) << ",\n";
  out << "  \"weights\": " << detail::rational_array(inst.weights) << ",\n";
  out << "  \"costs\": [";
  for (std::size_t i = 0; i < inst.costs.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    " << detail::rational_array(inst.costs[i]);
  }
  out << (inst.costs.empty() ? "]" : "\n  ]");
  if (!inst.agent_names.empty()) out << ",\n  \"agent_names\": " << detail::string_array(inst.agent_names);
  if (!inst.item_names.empty()) out << ",\n  \"item_names\": " << detail::string_array(inst.item_names);
  out << "\n}\n";
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void save_text(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

Instance load_instance(const std::string& path) { return parse_instance(read_text(path)); }

}  // namespace fairdiv
