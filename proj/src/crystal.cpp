#include "demazure/crystal.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace demazure {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_graph_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (const auto& [key, wt] : g.nodes) {
    os << "  \"" << dot_escape(key) << "\";\n";
  }
  for (const auto& [from, to, i] : g.edges) {
    os << "  \"" << dot_escape(from) << "\" -> \"" << dot_escape(to)
       << "\" [label=" << i << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_graph_json(const CrystalGraph& g) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const auto& [key, wt] : g.nodes) {
    j["nodes"].push_back({{"key", key}, {"d", wt.d}, {"v", wt.v}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [from, to, i] : g.edges) {
    j["edges"].push_back({{"from", from}, {"to", to}, {"i", i}});
  }
  return j.dump(2);
}

CrystalGraph import_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("bad graph JSON: ") + e.what());
  }
  CrystalGraph g;
  try {
    for (const auto& n : j.at("nodes")) {
      Weight wt{n.at("d").get<DimVector>(), n.at("v").get<DimVector>()};
      g.nodes.emplace(n.at("key").get<std::string>(), std::move(wt));
    }
    for (const auto& e : j.at("edges")) {
      g.edges.emplace(e.at("from").get<std::string>(),
                      e.at("to").get<std::string>(), e.at("i").get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("bad graph JSON: ") + e.what());
  }
  return g;
}

}  // namespace demazure
