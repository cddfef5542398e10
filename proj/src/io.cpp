#include "cubemedian/io.hpp"

#include <fstream>
#include <sstream>

#include "cubemedian/errors.hpp"

namespace cubemedian {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(where + ": missing field '" + name + "'");
  return *it;
}

std::string expectString(const Json& j, const std::string& name) {
  if (!j.is_string()) throw InputError("field '" + name + "': expected a string");
  return j.get<std::string>();
}

int expectInt(const Json& j, const std::string& name) {
  if (!j.is_number_integer()) throw InputError("field '" + name + "': expected an integer");
  return j.get<int>();
}

const Json& expectArray(const Json& j, const std::string& name) {
  if (!j.is_array()) throw InputError("field '" + name + "': expected an array");
  return j;
}

// Either ["a", "c"] or the string "ac".
Word symbolsFromJson(const DefiningGraph& graph, const Json& j, const std::string& name) {
  if (j.is_string()) {
    try {
      return graph.parseWord(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field '" + name + "': " + e.what());
    }
  }
  expectArray(j, name);
  Word out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = name + "[" + std::to_string(i) + "]";
    auto s = graph.indexOf(expectString(j[i], where));
    if (!s) throw InputError("field '" + where + "': unknown generator '" + j[i].get<std::string>() + "'");
    out.push_back(*s);
  }
  return out;
}

}  // namespace

Json parseJsonText(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(what + ": malformed JSON (" + e.what() + ")");
  }
}

Json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseJsonText(buf.str(), path.string());
}

DefiningGraph presentationFromJson(const Json& j) {
  const auto& gens = expectArray(field(j, "generators", "presentation"), "generators");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names.push_back(expectString(gens[i], "generators[" + std::to_string(i) + "]"));
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("commuting")) {
    const auto& comm = expectArray(j["commuting"], "commuting");
    for (std::size_t i = 0; i < comm.size(); ++i) {
      const std::string where = "commuting[" + std::to_string(i) + "]";
      if (!comm[i].is_array() || comm[i].size() != 2) {
        throw InputError("field '" + where + "': expected a pair of generator names");
      }
      pairs.emplace_back(expectString(comm[i][0], where), expectString(comm[i][1], where));
    }
  }
  return DefiningGraph(std::move(names), pairs);
}

Json presentationToJson(const DefiningGraph& graph) {
  Json j;
  j["generators"] = graph.generators();
  Json comm = Json::array();
  for (auto [s, t] : graph.commutingPairs()) comm.push_back({graph.symbol(s), graph.symbol(t)});
  j["commuting"] = comm;
  return j;
}

ExplicitGraph graphFromJson(const Json& j) {
  const int n = expectInt(field(j, "vertices", "graph"), "vertices");
  const auto& edges = expectArray(field(j, "edges", "graph"), "edges");
  std::vector<std::pair<int, int>> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) {
      throw InputError("field '" + where + "': expected a pair of vertex ids");
    }
    list.emplace_back(expectInt(edges[i][0], where), expectInt(edges[i][1], where));
  }
  const int base = j.contains("basepoint") ? expectInt(j["basepoint"], "basepoint") : 0;
  std::vector<int> colors;
  if (j.contains("colors")) {
    const auto& c = expectArray(j["colors"], "colors");
    for (std::size_t i = 0; i < c.size(); ++i) colors.push_back(expectInt(c[i], "colors[" + std::to_string(i) + "]"));
  }
  return ExplicitGraph(n, list, base, colors);
}

Json graphToJson(const ExplicitGraph& graph) {
  Json j;
  j["vertices"] = graph.vertexCount();
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["basepoint"] = graph.basepoint();
  if (graph.hasColors()) {
    Json colors = Json::array();
    for (std::size_t i = 0; i < graph.edges().size(); ++i) colors.push_back(graph.edgeColor(i));
    j["colors"] = colors;
  }
  return j;
}

RaySpec raySpecFromJson(const Racg& group, const Json& j) {
  RaySpec spec;
  const std::string base = expectString(field(j, "base", "ray spec"), "base");
  try {
    spec.base = group.parse(base);
  } catch (const InputError& e) {
    throw InputError(std::string("field 'base': ") + e.what());
  }
  if (j.contains("preperiod")) spec.preperiod = symbolsFromJson(group.graph(), j["preperiod"], "preperiod");
  spec.period = symbolsFromJson(group.graph(), field(j, "period", "ray spec"), "period");
  if (spec.period.empty()) throw InputError("field 'period': must be nonempty");
  return spec;
}

Json wordToJson(const DefiningGraph& graph, const Word& word) {
  Json out = Json::array();
  for (Generator s : word) out.push_back(graph.symbol(s));
  return out;
}

Json raySpecToJson(const Racg& group, const RaySpec& spec) {
  Json j;
  j["base"] = group.format(spec.base);
  j["preperiod"] = wordToJson(group.graph(), spec.preperiod);
  j["period"] = wordToJson(group.graph(), spec.period);
  return j;
}

Json elementsToJson(const Racg& group, const std::vector<GroupElement>& elements) {
  Json out = Json::array();
  for (const auto& g : elements) out.push_back(group.format(g));
  return out;
}

}  // namespace cubemedian
