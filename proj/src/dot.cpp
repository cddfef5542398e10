#include "cubemedian/dot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "cubemedian/errors.hpp"

namespace cubemedian {

namespace {

std::string nodeName(const Racg& group, const GroupElement& g) {
  return g.isIdentity() ? "1" : group.format(g);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Golden-ratio hue walk; stable for any number of walls.
std::string wallColor(std::size_t i) {
  const double hue = std::fmod(static_cast<double>(i) * 0.618033988749895, 1.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f 0.750 0.850", hue);
  return buf;
}

}  // namespace

std::string exportDot(const Racg& group, const Ball& ball, const DotOptions& options,
                      const std::vector<GroupElement>& highlight, DotStats* stats) {
  if (ball.size() > options.nodeCap) {
    throw ResourceError("ball has " + std::to_string(ball.size()) + " vertices, node cap is " +
                        std::to_string(options.nodeCap));
  }
  const std::set<GroupElement> marked(highlight.begin(), highlight.end());

  struct Line {
    std::uint32_t u, v;
    Hyperplane wall;
  };
  std::vector<Line> lines;
  std::set<Hyperplane> wallSet;
  for (const auto& e : ball.edges()) {
    if (e.source >= e.target) continue;
    auto wall = group.wallOfEdge(ball.vertices()[e.source], e.color);
    wallSet.insert(wall);
    lines.push_back({e.source, e.target, std::move(wall)});
  }
  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::map<Hyperplane, std::size_t> wallIndex;
  for (const auto& w : wallSet) wallIndex.emplace(w, wallIndex.size());

  std::string out = "graph " + quoted(options.graphName) + " {\n";
  out += "  node [shape=circle, fontsize=10];\n";
  std::size_t highlighted = 0;
  for (const auto& g : ball.vertices()) {
    out += "  " + quoted(nodeName(group, g));
    if (marked.count(g)) {
      out += " [class=\"delta\", style=filled, fillcolor=\"#f4c430\"]";
      ++highlighted;
    }
    out += ";\n";
  }
  for (const auto& l : lines) {
    out += "  " + quoted(nodeName(group, ball.vertices()[l.u])) + " -- " +
           quoted(nodeName(group, ball.vertices()[l.v])) + " [color=" +
           quoted(wallColor(wallIndex.at(l.wall))) + ", tooltip=" +
           quoted("wall " + nodeName(group, l.wall.reflection)) + "];\n";
  }
  out += "}\n";
  if (stats) *stats = DotStats{ball.size(), lines.size(), wallSet.size(), highlighted};
  return out;
}

}  // namespace cubemedian
