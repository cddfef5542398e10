#include "cubemedian/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cubemedian/errors.hpp"
#include "cubemedian/io.hpp"

namespace cubemedian {

std::string presentationHash(const DefiningGraph& graph) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : graph.canonicalText()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<std::filesystem::path> cacheDirectory() {
  const char* dir = std::getenv("CUBEMEDIAN_CACHE");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir);
}

namespace {

std::optional<Ball> tryLoad(const Racg& group, const std::filesystem::path& file, int radius) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  Json j;
  try {
    j = Json::parse(in);
    if (j.at("presentation").get<std::string>() != group.graph().canonicalText() ||
        j.at("radius").get<int>() != radius) {
      return std::nullopt;
    }
    std::vector<GroupElement> vertices;
    for (const auto& w : j.at("vertices")) vertices.push_back(group.parse(w.get<std::string>()));
    std::vector<BallEdge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>(),
                       e.at(2).get<Generator>()});
    }
    auto offsets = j.at("offsets").get<std::vector<std::size_t>>();
    return restoreBall(radius, std::move(vertices), std::move(edges), std::move(offsets));
  } catch (const std::exception&) {
    // A damaged snapshot is rebuilt rather than trusted.
    return std::nullopt;
  }
}

void store(const Racg& group, const std::filesystem::path& file, const Ball& ball) {
  Json j;
  j["presentation"] = group.graph().canonicalText();
  j["radius"] = ball.radius();
  Json vertices = Json::array();
  for (const auto& g : ball.vertices()) vertices.push_back(group.format(g));
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : ball.edges()) edges.push_back({e.source, e.target, e.color});
  j["edges"] = std::move(edges);
  std::vector<std::size_t> offsets;
  for (int r = 0; r <= ball.radius() + 1; ++r) offsets.push_back(ball.sphereStart(r));
  j["offsets"] = offsets;
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

Ball loadOrBuildBall(const Racg& group, int radius, std::size_t vertexCap,
                     const std::optional<std::filesystem::path>& directory) {
  if (!directory) return group.ball(radius, vertexCap);
  std::error_code ec;
  std::filesystem::create_directories(*directory, ec);
  const auto file = *directory / (presentationHash(group.graph()) + "-r" + std::to_string(radius) + ".json");
  if (auto cached = tryLoad(group, file, radius)) {
    if (cached->size() > vertexCap) {
      throw ResourceError("ball(" + std::to_string(radius) + ") exceeds vertex cap " +
                          std::to_string(vertexCap));
    }
    return std::move(*cached);
  }
  Ball ball = group.ball(radius, vertexCap);
  store(group, file, ball);
  return ball;
}

Ball loadOrBuildBall(const Racg& group, int radius, std::size_t vertexCap) {
  return loadOrBuildBall(group, radius, vertexCap, cacheDirectory());
}

}  // namespace cubemedian
