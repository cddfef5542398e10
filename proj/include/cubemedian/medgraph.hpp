#pragma once

// Explicit finite median graphs (1-skeleta of finite CAT(0) cube complexes):
// validation, Djokovic-Winkler classes (hyperplanes) and halfspaces.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubemedian/complex.hpp"

namespace cubemedian {

class ExplicitGraph {
 public:
  using Edge = std::pair<int, int>;

  ExplicitGraph() = default;
  // Edges are stored as sorted pairs (u < v) in sorted order. Loops and
  // repeated edges are rejected.
  ExplicitGraph(int vertexCount, std::vector<Edge> edges, int basepoint = 0,
                std::vector<int> edgeColors = {});

  int vertexCount() const { return vertexCount_; }
  int basepoint() const { return basepoint_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  // Color of edge i, or -1 when the graph carries no colors.
  int edgeColor(std::size_t i) const { return colors_.empty() ? -1 : colors_[i]; }
  bool hasColors() const { return !colors_.empty(); }
  std::optional<std::size_t> edgeIndex(int u, int v) const;

  bool isConnected() const;
  // All-pairs BFS distances; -1 for unreachable.
  std::vector<std::vector<int>> distanceMatrix() const;

 private:
  int vertexCount_ = 0;
  int basepoint_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> adjacency_;
};

ExplicitGraph cubeGraph(int dimension);
ExplicitGraph cycleGraphExplicit(int n);
ExplicitGraph pathGraph(int n);

struct MedianCheck {
  bool isMedian = true;
  // First triple (u < v < w, lexicographic) whose median set is not a singleton.
  std::optional<std::array<int, 3>> witness;
  std::vector<int> witnessMedians;
};

MedianCheck validateMedian(const ExplicitGraph& graph);

struct ThetaClasses {
  // classOfEdge[i] is the class of graph.edges()[i]. Classes are numbered in
  // order of their first edge.
  std::vector<int> classOfEdge;
  // halves[c] = (side containing the basepoint, other side), each sorted.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> halves;

  std::size_t classCount() const { return halves.size(); }
};

ThetaClasses thetaClasses(const ExplicitGraph& graph);
std::pair<std::vector<int>, std::vector<int>> halfspaces(const ThetaClasses& classes, int classIndex);

// Provider over a validated median graph. Walls are Theta-class indices.
class ExplicitComplex {
 public:
  using Vertex = int;
  using Wall = int;
  using VertexHash = std::hash<int>;
  using WallHash = std::hash<int>;

  // Throws DomainError unless the graph is a connected median graph.
  explicit ExplicitComplex(ExplicitGraph graph);

  const ExplicitGraph& graph() const { return graph_; }
  const ThetaClasses& classes() const { return classes_; }

  std::vector<Arc<int>> neighbors(int v) const;
  int distance(int u, int v) const { return dist_.at(u).at(v); }
  int colorOf(int u, int v) const;
  int wallOf(int u, int v) const;
  std::vector<int> wallsSeparating(int u, int v) const;
  bool separates(int h, int u, int v) const { return side_.at(h).at(u) != side_.at(h).at(v); }
  bool contains(int v) const { return v >= 0 && v < graph_.vertexCount(); }
  std::string label(int v) const { return std::to_string(v); }
  std::string wallLabel(int h) const { return "theta" + std::to_string(h); }

 private:
  ExplicitGraph graph_;
  ThetaClasses classes_;
  std::vector<std::vector<int>> dist_;
  // side_[h][v]: 0 on the basepoint's half, 1 otherwise.
  std::vector<std::vector<char>> side_;
};

static_assert(ComplexProvider<ExplicitComplex>);

}  // namespace cubemedian
