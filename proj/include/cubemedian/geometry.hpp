#pragma once

// Combinatorial geodesics, intervals, medians, convexity, nearest-point
// projection, thinness of triangles and ray surgery. Everything is generic
// over ComplexProvider, so the same code runs on a RACG Cayley graph and on
// an explicit median graph.
//
// Region safety: whenever a traversal needs a vertex the provider does not
// contain (a ball-limited RACG window), a RegionError is raised instead of
// silently clipping the result.

#include <algorithm>
#include <array>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cubemedian/complex.hpp"
#include "cubemedian/errors.hpp"

namespace cubemedian {

template <class V>
struct Path {
  std::vector<V> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  const V& front() const { return vertices.front(); }
  const V& back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

template <ComplexProvider P>
std::vector<int> pathColors(const P& complex, const Path<typename P::Vertex>& path) {
  std::vector<int> colors;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    colors.push_back(complex.colorOf(path.vertices[i], path.vertices[i + 1]));
  }
  return colors;
}

template <class W>
struct GeodesicCheck {
  bool geodesic = true;
  // The first wall crossed twice, with the indices of the two edges crossing it.
  std::optional<W> repeatedWall;
  std::size_t firstEdge = 0;
  std::size_t secondEdge = 0;
};

// A path is a combinatorial geodesic iff no wall is dual to two of its edges.
// With crossCheck the verdict is compared against length == distance and a
// disagreement raises ProviderError.
template <ComplexProvider P>
GeodesicCheck<typename P::Wall> isGeodesic(const P& complex, const Path<typename P::Vertex>& path,
                                           bool crossCheck = true) {
  using W = typename P::Wall;
  if (path.vertices.empty()) throw DomainError("empty path");
  GeodesicCheck<W> out;
  std::unordered_map<W, std::size_t, typename P::WallHash> seen;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    W wall = complex.wallOf(path.vertices[i], path.vertices[i + 1]);
    auto [it, inserted] = seen.emplace(wall, i);
    if (!inserted) {
      out.geodesic = false;
      out.repeatedWall = std::move(wall);
      out.firstEdge = it->second;
      out.secondEdge = i;
      break;
    }
  }
  if (crossCheck) {
    const bool byLength =
        static_cast<int>(path.length()) == complex.distance(path.front(), path.back());
    if (byLength != out.geodesic) {
      throw ProviderError("wall criterion and distance disagree on a path from " +
                          complex.label(path.front()) + " to " + complex.label(path.back()));
    }
  }
  return out;
}

namespace detail {

template <ComplexProvider P>
void requireContained(const P& complex, const typename P::Vertex& v) {
  if (!complex.contains(v)) {
    throw RegionError("vertex " + complex.label(v) + " lies outside the materialized region");
  }
}

// Neighbors of w one step closer to target, in increasing color order.
template <ComplexProvider P>
std::vector<Arc<typename P::Vertex>> stepsToward(const P& complex, const typename P::Vertex& w,
                                                 const typename P::Vertex& target, int remaining) {
  std::vector<Arc<typename P::Vertex>> out;
  for (auto& arc : complex.neighbors(w)) {
    if (complex.distance(arc.target, target) == remaining - 1) {
      requireContained(complex, arc.target);
      out.push_back(std::move(arc));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.color < b.color; });
  return out;
}

}  // namespace detail

// {w : d(u,w) + d(w,v) = d(u,v)}, sorted.
template <ComplexProvider P>
std::vector<typename P::Vertex> interval(const P& complex, const typename P::Vertex& u,
                                         const typename P::Vertex& v) {
  using V = typename P::Vertex;
  detail::requireContained(complex, u);
  detail::requireContained(complex, v);
  std::vector<V> layer{u};
  std::vector<V> out{u};
  int remaining = complex.distance(u, v);
  while (remaining > 0) {
    std::unordered_set<V, typename P::VertexHash> next;
    for (const auto& w : layer) {
      for (auto& arc : detail::stepsToward(complex, w, v, remaining)) next.insert(arc.target);
    }
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
    --remaining;
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class V>
struct GeodesicEnumeration {
  std::vector<Path<V>> paths;
  bool truncated = false;
};

// Depth-first over the interval DAG, smaller colors first, so paths come out in
// lexicographic order of their color words. The first path is the canonical
// (ShortLex) geodesic.
template <ComplexProvider P>
GeodesicEnumeration<typename P::Vertex> geodesicsBetween(const P& complex,
                                                          const typename P::Vertex& u,
                                                          const typename P::Vertex& v,
                                                          std::size_t cap) {
  using V = typename P::Vertex;
  if (cap == 0) throw InputError("geodesic cap must be positive");
  detail::requireContained(complex, u);
  detail::requireContained(complex, v);
  GeodesicEnumeration<V> out;
  std::vector<V> stack{u};
  const int total = complex.distance(u, v);

  auto dfs = [&](auto&& self, int remaining) -> bool {
    if (remaining == 0) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.paths.push_back(Path<V>{stack});
      return true;
    }
    for (auto& arc : detail::stepsToward(complex, stack.back(), v, remaining)) {
      stack.push_back(std::move(arc.target));
      const bool more = self(self, remaining - 1);
      stack.pop_back();
      if (!more) return false;
    }
    return true;
  };
  dfs(dfs, total);
  return out;
}

template <ComplexProvider P>
Path<typename P::Vertex> canonicalGeodesic(const P& complex, const typename P::Vertex& u,
                                           const typename P::Vertex& v) {
  detail::requireContained(complex, u);
  detail::requireContained(complex, v);
  Path<typename P::Vertex> path{{u}};
  for (int remaining = complex.distance(u, v); remaining > 0; --remaining) {
    auto steps = detail::stepsToward(complex, path.back(), v, remaining);
    if (steps.empty()) throw ProviderError("no geodesic step toward " + complex.label(v));
    path.vertices.push_back(std::move(steps.front().target));
  }
  return path;
}

template <ComplexProvider P>
typename P::Vertex median(const P& complex, const typename P::Vertex& u,
                          const typename P::Vertex& v, const typename P::Vertex& w) {
  using V = typename P::Vertex;
  std::vector<V> found;
  const int dvw = complex.distance(v, w);
  const int duw = complex.distance(u, w);
  for (const auto& x : interval(complex, u, v)) {
    if (complex.distance(v, x) + complex.distance(x, w) == dvw &&
        complex.distance(u, x) + complex.distance(x, w) == duw) {
      found.push_back(x);
    }
  }
  if (found.size() != 1) {
    throw DomainError("triple (" + complex.label(u) + ", " + complex.label(v) + ", " +
                      complex.label(w) + ") has " + std::to_string(found.size()) + " medians");
  }
  return found.front();
}

namespace detail {
// Marks construction paths that have already established convexity.
struct CheckedConvex {};
}  // namespace detail

// A finite vertex set closed under intervals. Build it with makeConvex
// (checked) or convexHull.
template <class V, class Hash>
class ConvexSet {
 public:
  ConvexSet(std::vector<V> sorted, detail::CheckedConvex) : vertices_(std::move(sorted)) {
    members_.insert(vertices_.begin(), vertices_.end());
  }

  const std::vector<V>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(const V& v) const { return members_.count(v) != 0; }

 private:
  std::vector<V> vertices_;
  std::unordered_set<V, Hash> members_;
};

template <ComplexProvider P>
using ConvexSetOf = ConvexSet<typename P::Vertex, typename P::VertexHash>;

template <ComplexProvider P>
bool isConvex(const P& complex, const std::vector<typename P::Vertex>& set) {
  using V = typename P::Vertex;
  std::unordered_set<V, typename P::VertexHash> members(set.begin(), set.end());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      for (const auto& w : interval(complex, set[i], set[j])) {
        if (!members.count(w)) return false;
      }
    }
  }
  return true;
}

// Iterated interval closure to a fixpoint.
template <ComplexProvider P>
ConvexSetOf<P> convexHull(const P& complex, std::vector<typename P::Vertex> seed) {
  using V = typename P::Vertex;
  if (seed.empty()) throw DomainError("convex hull of the empty set");
  std::unordered_set<V, typename P::VertexHash> members(seed.begin(), seed.end());
  std::vector<V> current(members.begin(), members.end());
  std::sort(current.begin(), current.end());
  // New pairs only involve at least one vertex added in the previous round.
  std::size_t checkedUpTo = 0;
  while (true) {
    std::vector<V> added;
    for (std::size_t j = checkedUpTo; j < current.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (auto& w : interval(complex, current[i], current[j])) {
          if (members.insert(w).second) added.push_back(std::move(w));
        }
      }
    }
    if (added.empty()) break;
    checkedUpTo = current.size();
    current.insert(current.end(), added.begin(), added.end());
  }
  std::sort(current.begin(), current.end());
  return ConvexSetOf<P>(std::move(current), detail::CheckedConvex{});
}

template <ComplexProvider P>
ConvexSetOf<P> makeConvex(const P& complex, std::vector<typename P::Vertex> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty() || !isConvex(complex, set)) throw DomainError("vertex set is not convex");
  return ConvexSetOf<P>(std::move(set), detail::CheckedConvex{});
}

template <ComplexProvider P>
int distanceToSet(const P& complex, const typename P::Vertex& v, const ConvexSetOf<P>& set) {
  int best = -1;
  for (const auto& y : set.vertices()) {
    int d = complex.distance(v, y);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// The unique nearest vertex of a convex set.
template <ComplexProvider P>
typename P::Vertex project(const P& complex, const typename P::Vertex& v,
                           const ConvexSetOf<P>& set) {
  const typename P::Vertex* best = nullptr;
  int bestDistance = -1;
  bool tie = false;
  for (const auto& y : set.vertices()) {
    int d = complex.distance(v, y);
    if (best == nullptr || d < bestDistance) {
      best = &y;
      bestDistance = d;
      tie = false;
    } else if (d == bestDistance) {
      tie = true;
    }
  }
  if (tie) throw ProviderError("nearest point of a convex set is not unique");
  return *best;
}

// Walls with v on one side and the whole set on the other.
template <ComplexProvider P>
std::vector<typename P::Wall> wallsSeparatingFromSet(const P& complex,
                                                     const typename P::Vertex& v,
                                                     const ConvexSetOf<P>& set) {
  std::vector<typename P::Wall> out;
  for (auto& h : complex.wallsSeparating(v, set.vertices().front())) {
    bool all = std::all_of(set.vertices().begin(), set.vertices().end(),
                           [&](const auto& y) { return complex.separates(h, v, y); });
    if (all) out.push_back(std::move(h));
  }
  return out;
}

// A wall meets a convex set iff the set has vertices on both of its sides.
template <ComplexProvider P>
bool wallMeetsSet(const P& complex, const typename P::Wall& h, const ConvexSetOf<P>& set) {
  const auto& y0 = set.vertices().front();
  return std::any_of(set.vertices().begin(), set.vertices().end(),
                     [&](const auto& y) { return complex.separates(h, y0, y); });
}

template <class V, class W>
struct EdgeProjection {
  // 1: the wall misses the set and both endpoints project to the same vertex.
  // 2: the wall meets the set; the projections are adjacent across that wall.
  int lemmaCase = 0;
  W wall;
  V uProjection;
  V vProjection;
};

template <ComplexProvider P>
EdgeProjection<typename P::Vertex, typename P::Wall> projectEdge(const P& complex,
                                                                  const typename P::Vertex& u,
                                                                  const typename P::Vertex& v,
                                                                  const ConvexSetOf<P>& set) {
  auto wall = complex.wallOf(u, v);
  auto pu = project(complex, u, set);
  auto pv = project(complex, v, set);
  const bool meets = wallMeetsSet(complex, wall, set);
  if (!meets && pu == pv) {
    return {1, std::move(wall), std::move(pu), std::move(pv)};
  }
  if (meets && complex.distance(pu, pv) == 1 && complex.wallOf(pu, pv) == wall) {
    return {2, std::move(wall), std::move(pu), std::move(pv)};
  }
  throw ProviderError("edge (" + complex.label(u) + ", " + complex.label(v) +
                      ") projects outside both cases");
}

// Image of a geodesic under nearest-point projection, consecutive repeats
// collapsed. May be a single vertex.
template <ComplexProvider P>
Path<typename P::Vertex> projectPath(const P& complex, const Path<typename P::Vertex>& path,
                                     const ConvexSetOf<P>& set) {
  if (!isGeodesic(complex, path, false).geodesic) {
    throw DomainError("projectPath needs a geodesic");
  }
  Path<typename P::Vertex> out;
  for (const auto& v : path.vertices) {
    auto p = project(complex, v, set);
    if (out.vertices.empty() || !(out.vertices.back() == p)) out.vertices.push_back(std::move(p));
  }
  return out;
}

struct DeltaEstimate {
  int value = 0;
  int radius = 0;
  std::size_t trianglesChecked = 0;
  // Some side had more geodesics than the cap; value is then a lower bound
  // over the enumerated sides only.
  bool capped = false;
};

namespace detail {

template <ComplexProvider P>
int triangleDefect(const P& complex, const typename P::Vertex& a, const typename P::Vertex& b,
                   const typename P::Vertex& c, std::size_t cap, bool& capped) {
  using V = typename P::Vertex;
  const std::array<std::pair<const V*, const V*>, 3> ends{
      {{&a, &b}, {&b, &c}, {&a, &c}}};
  std::array<GeodesicEnumeration<V>, 3> sides;
  for (std::size_t i = 0; i < 3; ++i) {
    sides[i] = geodesicsBetween(complex, *ends[i].first, *ends[i].second, cap);
    capped = capped || sides[i].truncated;
  }
  // Worst choice of side j for a point p: max over geodesics of d(p, geodesic).
  auto worstDistance = [&](const V& p, std::size_t j) {
    int worst = 0;
    for (const auto& path : sides[j].paths) {
      int nearest = -1;
      for (const auto& q : path.vertices) {
        int d = complex.distance(p, q);
        if (nearest < 0 || d < nearest) nearest = d;
        if (nearest == 0) break;
      }
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  int defect = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::unordered_set<V, typename P::VertexHash> points;
    for (const auto& path : sides[i].paths) points.insert(path.vertices.begin(), path.vertices.end());
    for (const auto& p : points) {
      int d = std::min(worstDistance(p, (i + 1) % 3), worstDistance(p, (i + 2) % 3));
      defect = std::max(defect, d);
    }
  }
  return defect;
}

}  // namespace detail

// Largest thinness defect over triangles (x, u, v) with x drawn from anchors
// and {u, v} an unordered pair from corners, maximized over every choice of
// geodesic sides (at most cap per side). The triple space is split across
// workers and merged by max.
template <ComplexProvider P>
DeltaEstimate deltaEstimate(const P& complex, const std::vector<typename P::Vertex>& anchors,
                            const std::vector<typename P::Vertex>& corners, std::size_t cap,
                            int radius = 0, unsigned workers = 1) {
  struct Partial {
    int value = 0;
    std::size_t count = 0;
    bool capped = false;
  };
  const std::size_t n = corners.size();
  auto run = [&](std::size_t offset, std::size_t stride) {
    Partial part;
    std::size_t k = 0;
    for (const auto& x : anchors) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
          if (k % stride != offset) continue;
          part.value = std::max(
              part.value, detail::triangleDefect(complex, x, corners[i], corners[j], cap, part.capped));
          ++part.count;
        }
      }
    }
    return part;
  };
  workers = std::max(1U, workers);
  std::vector<std::future<Partial>> futures;
  for (unsigned w = 1; w < workers; ++w) futures.push_back(std::async(std::launch::async, run, w, workers));
  Partial total = run(0, workers);
  for (auto& f : futures) {
    Partial p = f.get();
    total.value = std::max(total.value, p.value);
    total.count += p.count;
    total.capped = total.capped || p.capped;
  }
  return DeltaEstimate{total.value, radius, total.count, total.capped};
}

template <class V>
struct SurgeryResult {
  // 1: the ray never crosses the wall between x and y; 2: it does.
  int lemmaCase = 0;
  // Index of the ray edge crossing the wall (case 2).
  std::size_t crossingEdge = 0;
  Path<V> path;
};

// Rebuilds a geodesic ray from x out of a geodesic ray from an adjacent y:
// either prepend the edge xy, or jump from x to the first vertex past the wall
// between x and y and keep the rest of the ray. The output is verified.
template <ComplexProvider P>
SurgeryResult<typename P::Vertex> raySurgery(const P& complex, const typename P::Vertex& x,
                                             const Path<typename P::Vertex>& ray) {
  using V = typename P::Vertex;
  if (ray.vertices.empty()) throw DomainError("empty ray");
  const V& y = ray.front();
  if (complex.distance(x, y) != 1) throw DomainError("surgery needs x adjacent to the ray start");
  if (!isGeodesic(complex, ray, false).geodesic) throw DomainError("ray is not geodesic");
  const auto wall = complex.wallOf(x, y);

  SurgeryResult<V> out;
  std::optional<std::size_t> crossing;
  for (std::size_t i = 0; i + 1 < ray.vertices.size(); ++i) {
    if (complex.wallOf(ray.vertices[i], ray.vertices[i + 1]) == wall) {
      crossing = i;
      break;
    }
  }
  if (!crossing) {
    out.lemmaCase = 1;
    out.path.vertices.push_back(x);
    out.path.vertices.insert(out.path.vertices.end(), ray.vertices.begin(), ray.vertices.end());
  } else {
    out.lemmaCase = 2;
    out.crossingEdge = *crossing;
    const V& z = ray.vertices[*crossing + 1];
    out.path = canonicalGeodesic(complex, x, z);
    out.path.vertices.insert(out.path.vertices.end(),
                             ray.vertices.begin() + static_cast<std::ptrdiff_t>(*crossing + 2),
                             ray.vertices.end());
  }
  if (!isGeodesic(complex, out.path, false).geodesic) {
    throw ProviderError("surgered ray from " + complex.label(x) + " is not geodesic");
  }
  return out;
}

}  // namespace cubemedian
