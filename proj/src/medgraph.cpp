#include "cubemedian/medgraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

#include "cubemedian/errors.hpp"

namespace cubemedian {

ExplicitGraph::ExplicitGraph(int vertexCount, std::vector<Edge> edges, int basepoint,
                             std::vector<int> edgeColors)
    : vertexCount_(vertexCount), basepoint_(basepoint) {
  if (vertexCount <= 0) throw InputError("vertices: must be positive");
  if (basepoint < 0 || basepoint >= vertexCount) throw InputError("basepoint: out of range");
  if (!edgeColors.empty() && edgeColors.size() != edges.size()) {
    throw InputError("colors: must have one entry per edge");
  }
  std::vector<std::pair<Edge, int>> tagged;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= vertexCount || v >= vertexCount) {
      throw InputError("edges: endpoint out of range in [" + std::to_string(u) + "," +
                       std::to_string(v) + "]");
    }
    if (u == v) throw InputError("edges: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    tagged.push_back({{u, v}, edgeColors.empty() ? -1 : edgeColors[i]});
  }
  std::sort(tagged.begin(), tagged.end());
  for (std::size_t i = 1; i < tagged.size(); ++i) {
    if (tagged[i].first == tagged[i - 1].first) {
      throw InputError("edges: repeated edge [" + std::to_string(tagged[i].first.first) + "," +
                       std::to_string(tagged[i].first.second) + "]");
    }
  }
  adjacency_.assign(static_cast<std::size_t>(vertexCount), {});
  for (const auto& [e, c] : tagged) {
    edges_.push_back(e);
    if (!edgeColors.empty()) colors_.push_back(c);
    adjacency_[static_cast<std::size_t>(e.first)].push_back(e.second);
    adjacency_[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::optional<std::size_t> ExplicitGraph::edgeIndex(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::vector<int>> ExplicitGraph::distanceMatrix() const {
  const auto n = static_cast<std::size_t>(vertexCount_);
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::queue<int> q;
    row[s] = 0;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adjacency_[static_cast<std::size_t>(u)]) {
        if (row[static_cast<std::size_t>(w)] < 0) {
          row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
  }
  return dist;
}

bool ExplicitGraph::isConnected() const {
  auto dist = distanceMatrix();
  return std::none_of(dist[0].begin(), dist[0].end(), [](int d) { return d < 0; });
}

ExplicitGraph cubeGraph(int dimension) {
  if (dimension < 0 || dimension > 16) throw InputError("cube dimension out of range");
  const int n = 1 << dimension;
  std::vector<ExplicitGraph::Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < dimension; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return ExplicitGraph(n, std::move(edges), 0);
}

ExplicitGraph cycleGraphExplicit(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<ExplicitGraph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return ExplicitGraph(n, std::move(edges), 0);
}

ExplicitGraph pathGraph(int n) {
  std::vector<ExplicitGraph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return ExplicitGraph(n, std::move(edges), 0);
}

namespace {

using Bits = std::vector<std::uint64_t>;

}  // namespace

MedianCheck validateMedian(const ExplicitGraph& graph) {
  const auto dist = graph.distanceMatrix();
  const auto n = static_cast<std::size_t>(graph.vertexCount());
  for (const auto& row : dist) {
    if (std::any_of(row.begin(), row.end(), [](int d) { return d < 0; })) {
      throw DomainError("graph is disconnected");
    }
  }
  const std::size_t words = (n + 63) / 64;
  // intervals[u * n + v] as a bitset over vertices
  std::vector<Bits> intervals(n * n, Bits(words, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      Bits& bits = intervals[u * n + v];
      for (std::size_t x = 0; x < n; ++x) {
        if (dist[u][x] + dist[x][v] == dist[u][v]) bits[x / 64] |= std::uint64_t{1} << (x % 64);
      }
      intervals[v * n + u] = bits;
    }
  }
  MedianCheck out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      for (std::size_t w = v + 1; w < n; ++w) {
        const Bits& a = intervals[u * n + v];
        const Bits& b = intervals[v * n + w];
        const Bits& c = intervals[u * n + w];
        int count = 0;
        for (std::size_t k = 0; k < words; ++k) {
          count += __builtin_popcountll(a[k] & b[k] & c[k]);
        }
        if (count != 1) {
          out.isMedian = false;
          out.witness = std::array<int, 3>{static_cast<int>(u), static_cast<int>(v),
                                           static_cast<int>(w)};
          for (std::size_t x = 0; x < n; ++x) {
            if ((a[x / 64] & b[x / 64] & c[x / 64]) >> (x % 64) & 1U) {
              out.witnessMedians.push_back(static_cast<int>(x));
            }
          }
          return out;
        }
      }
    }
  }
  return out;
}

ThetaClasses thetaClasses(const ExplicitGraph& graph) {
  auto check = validateMedian(graph);
  if (!check.isMedian) {
    const auto& t = *check.witness;
    throw DomainError("graph is not median: triple (" + std::to_string(t[0]) + "," +
                      std::to_string(t[1]) + "," + std::to_string(t[2]) + ") has " +
                      std::to_string(check.witnessMedians.size()) + " medians");
  }
  const auto dist = graph.distanceMatrix();
  const auto& edges = graph.edges();
  const std::size_t m = edges.size();

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto d = [&](int a, int b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (std::size_t i = 0; i < m; ++i) {
    auto [u, v] = edges[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      auto [x, y] = edges[j];
      if (d(u, x) + d(v, y) != d(u, y) + d(v, x)) parent[find(j)] = find(i);
    }
  }

  ThetaClasses out;
  out.classOfEdge.assign(m, -1);
  std::vector<int> classOfRoot(m, -1);
  const int base = graph.basepoint();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = find(i);
    if (classOfRoot[r] < 0) {
      classOfRoot[r] = static_cast<int>(out.halves.size());
      auto [u, v] = edges[i];
      std::vector<int> nearU, nearV;
      for (int w = 0; w < graph.vertexCount(); ++w) {
        if (d(w, u) < d(w, v)) nearU.push_back(w);
        else nearV.push_back(w);
      }
      if (d(base, u) < d(base, v)) out.halves.emplace_back(std::move(nearU), std::move(nearV));
      else out.halves.emplace_back(std::move(nearV), std::move(nearU));
    }
    out.classOfEdge[i] = classOfRoot[r];
  }

  // Each class must cut the graph into exactly its two halves.
  for (std::size_t c = 0; c < out.halves.size(); ++c) {
    std::vector<int> comp(static_cast<std::size_t>(graph.vertexCount()), -1);
    int components = 0;
    for (int s = 0; s < graph.vertexCount(); ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      comp[static_cast<std::size_t>(s)] = components;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : graph.adjacency()[static_cast<std::size_t>(u)]) {
          if (out.classOfEdge[*graph.edgeIndex(u, w)] == static_cast<int>(c)) continue;
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = components;
            q.push(w);
          }
        }
      }
      ++components;
    }
    if (components != 2) {
      throw ProviderError("theta class " + std::to_string(c) + " leaves " +
                          std::to_string(components) + " components");
    }
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> halfspaces(const ThetaClasses& classes,
                                                         int classIndex) {
  if (classIndex < 0 || static_cast<std::size_t>(classIndex) >= classes.classCount()) {
    throw InputError("class index " + std::to_string(classIndex) + " out of range");
  }
  return classes.halves[static_cast<std::size_t>(classIndex)];
}

ExplicitComplex::ExplicitComplex(ExplicitGraph graph)
    : graph_(std::move(graph)), classes_(thetaClasses(graph_)), dist_(graph_.distanceMatrix()) {
  const auto n = static_cast<std::size_t>(graph_.vertexCount());
  side_.assign(classes_.classCount(), std::vector<char>(n, 0));
  for (std::size_t c = 0; c < classes_.classCount(); ++c) {
    for (int v : classes_.halves[c].second) side_[c][static_cast<std::size_t>(v)] = 1;
  }
}

std::vector<Arc<int>> ExplicitComplex::neighbors(int v) const {
  std::vector<Arc<int>> out;
  for (int w : graph_.adjacency().at(static_cast<std::size_t>(v))) out.push_back({w, colorOf(v, w)});
  std::stable_sort(out.begin(), out.end(),
                   [](const Arc<int>& a, const Arc<int>& b) { return a.color < b.color; });
  return out;
}

int ExplicitComplex::colorOf(int u, int v) const {
  auto i = graph_.edgeIndex(u, v);
  if (!i) throw DomainError(std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  return graph_.hasColors() ? graph_.edgeColor(*i) : classes_.classOfEdge[*i];
}

int ExplicitComplex::wallOf(int u, int v) const {
  auto i = graph_.edgeIndex(u, v);
  if (!i) throw DomainError(std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  return classes_.classOfEdge[*i];
}

std::vector<int> ExplicitComplex::wallsSeparating(int u, int v) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < side_.size(); ++c) {
    if (side_[c].at(static_cast<std::size_t>(u)) != side_[c].at(static_cast<std::size_t>(v))) {
      out.push_back(static_cast<int>(c));
    }
  }
  return out;
}

}  // namespace cubemedian
