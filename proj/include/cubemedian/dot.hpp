#pragma once

// Graphviz export of a Cayley ball. Each wall gets its own edge color; vertices
// are named by normal form ("1" for the identity); highlighted vertices carry
// class="delta" and a fill color.

#include <cstddef>
#include <string>
#include <vector>

#include "cubemedian/racg.hpp"

namespace cubemedian {

struct DotOptions {
  std::size_t nodeCap = 5000;
  std::string graphName = "cayley";
};

struct DotStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t walls = 0;
  std::size_t highlighted = 0;
};

std::string exportDot(const Racg& group, const Ball& ball, const DotOptions& options,
                      const std::vector<GroupElement>& highlight = {}, DotStats* stats = nullptr);

}  // namespace cubemedian
