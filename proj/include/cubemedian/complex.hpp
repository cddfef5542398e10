#pragma once

// The complex-view contract shared by the two vertex providers. Geometry
// algorithms are written against ComplexProvider and run unchanged over a
// RACG Cayley graph (lazily generated, exact distances) or an explicit finite
// median graph.

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "cubemedian/errors.hpp"
#include "cubemedian/racg.hpp"

namespace cubemedian {

template <class V>
struct Arc {
  V target;
  int color;
};

template <class P>
concept ComplexProvider = requires(const P& p, const typename P::Vertex& v,
                                   const typename P::Wall& h) {
  typename P::VertexHash;
  typename P::WallHash;
  { p.neighbors(v) } -> std::same_as<std::vector<Arc<typename P::Vertex>>>;
  { p.distance(v, v) } -> std::convertible_to<int>;
  { p.wallOf(v, v) } -> std::same_as<typename P::Wall>;
  { p.colorOf(v, v) } -> std::convertible_to<int>;
  { p.wallsSeparating(v, v) } -> std::same_as<std::vector<typename P::Wall>>;
  { p.separates(h, v, v) } -> std::same_as<bool>;
  { p.contains(v) } -> std::same_as<bool>;
  { p.label(v) } -> std::convertible_to<std::string>;
  { p.wallLabel(h) } -> std::convertible_to<std::string>;
  { v < v } -> std::convertible_to<bool>;
};

// Cayley graph of a RACG. Distances and walls are global and exact; the
// optional radius limit turns the provider into a finite window (ball around
// the identity) so that region-size errors can be exercised.
class RacgComplex {
 public:
  using Vertex = GroupElement;
  using Wall = Hyperplane;
  using VertexHash = GroupElementHash;
  using WallHash = HyperplaneHash;

  explicit RacgComplex(Racg group, std::optional<int> radiusLimit = std::nullopt)
      : group_(std::move(group)), radiusLimit_(radiusLimit) {}

  const Racg& group() const { return group_; }
  std::optional<int> radiusLimit() const { return radiusLimit_; }

  std::vector<Arc<Vertex>> neighbors(const Vertex& g) const {
    std::vector<Arc<Vertex>> out;
    out.reserve(group_.rank());
    for (std::size_t s = 0; s < group_.rank(); ++s) {
      out.push_back({group_.multiply(g, static_cast<Generator>(s)), static_cast<int>(s)});
    }
    return out;
  }
  int distance(const Vertex& g, const Vertex& h) const { return group_.distance(g, h); }
  int colorOf(const Vertex& g, const Vertex& h) const {
    auto s = group_.edgeColor(g, h);
    if (!s) throw DomainError(label(g) + " and " + label(h) + " are not adjacent");
    return *s;
  }
  Wall wallOf(const Vertex& g, const Vertex& h) const {
    return group_.wallOfEdge(g, static_cast<Generator>(colorOf(g, h)));
  }
  std::vector<Wall> wallsSeparating(const Vertex& g, const Vertex& h) const {
    return group_.wallsSeparating(g, h);
  }
  bool separates(const Wall& w, const Vertex& g, const Vertex& h) const {
    return group_.separates(w, g, h);
  }
  bool contains(const Vertex& g) const {
    return !radiusLimit_ || g.length() <= static_cast<std::size_t>(*radiusLimit_);
  }
  std::string label(const Vertex& g) const {
    return g.isIdentity() ? std::string("1") : group_.format(g);
  }
  std::string wallLabel(const Wall& w) const { return "[" + group_.format(w.reflection) + "]"; }

 private:
  Racg group_;
  std::optional<int> radiusLimit_;
};

static_assert(ComplexProvider<RacgComplex>);

}  // namespace cubemedian
