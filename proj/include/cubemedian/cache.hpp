#pragma once

// Ball snapshots on disk. When CUBEMEDIAN_CACHE names a directory, balls are
// stored there under a key built from the presentation hash and the radius.

#include <filesystem>
#include <optional>
#include <string>

#include "cubemedian/racg.hpp"

namespace cubemedian {

std::string presentationHash(const DefiningGraph& graph);

// Directory from CUBEMEDIAN_CACHE, if set and nonempty.
std::optional<std::filesystem::path> cacheDirectory();

Ball loadOrBuildBall(const Racg& group, int radius, std::size_t vertexCap = kDefaultBallCap);
Ball loadOrBuildBall(const Racg& group, int radius, std::size_t vertexCap,
                     const std::optional<std::filesystem::path>& directory);

}  // namespace cubemedian
