#pragma once

// JSON formats: presentations, explicit graphs, ray specs, and the pieces of
// reports that several commands share. Malformed input raises InputError with
// the offending field in the message.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cubemedian/boundary.hpp"
#include "cubemedian/medgraph.hpp"
#include "cubemedian/racg.hpp"

namespace cubemedian {

using Json = nlohmann::ordered_json;

Json readJsonFile(const std::filesystem::path& path);
Json parseJsonText(const std::string& text, const std::string& what);

// {"generators": ["a", ...], "commuting": [["a", "b"], ...]}
DefiningGraph presentationFromJson(const Json& j);
Json presentationToJson(const DefiningGraph& graph);

// {"vertices": n, "edges": [[0, 1], ...], "basepoint": 0, "colors": [...]?}
ExplicitGraph graphFromJson(const Json& j);
Json graphToJson(const ExplicitGraph& graph);

// {"base": "aca", "preperiod": ["b"], "period": ["a", "c"]}
RaySpec raySpecFromJson(const Racg& group, const Json& j);
Json raySpecToJson(const Racg& group, const RaySpec& spec);

Json elementsToJson(const Racg& group, const std::vector<GroupElement>& elements);
Json wordToJson(const DefiningGraph& graph, const Word& word);

}  // namespace cubemedian
