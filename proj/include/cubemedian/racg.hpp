#pragma once

// Right-angled Coxeter groups: ShortLex normal forms, reflections (walls),
// distances, and balls in the Cayley graph. The Cayley graph of a RACG is the
// 1-skeleton of its Davis complex, a CAT(0) cube complex on which the group
// acts freely and transitively on vertices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cubemedian {

using Generator = std::uint8_t;
using Word = std::vector<Generator>;

inline constexpr std::size_t kMaxRank = 64;
inline constexpr std::size_t kDefaultBallCap = 500000;

// Generators plus the commuting pairs. Generator order is the color order used
// everywhere else (ShortLex, least strings, DOT colors).
class DefiningGraph {
 public:
  DefiningGraph() = default;
  DefiningGraph(std::vector<std::string> generators,
                const std::vector<std::pair<std::string, std::string>>& commuting);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& symbol(Generator s) const { return generators_.at(s); }
  std::optional<Generator> indexOf(std::string_view symbol) const;

  bool commutes(Generator s, Generator t) const {
    return (commuteMask_[s] >> t) & 1U;
  }
  std::uint64_t commuteMask(Generator s) const { return commuteMask_[s]; }

  // Sorted pairs (s, t) with s < t.
  std::vector<std::pair<Generator, Generator>> commutingPairs() const;

  // Longest-match tokenization of a symbol string; "" is the identity.
  Word parseWord(std::string_view text) const;
  std::string formatWord(std::span<const Generator> word) const;

  // Canonical JSON-like text used for hashing and cache keys.
  std::string canonicalText() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<std::uint64_t> commuteMask_;
};

// Presets with generators named a, b, c, ...
DefiningGraph cycleGraph(std::size_t n);
DefiningGraph edgelessGraph(std::size_t n);
DefiningGraph completeGraph(std::size_t n);

// True iff the defining graph has no induced 4-cycle, which for a RACG is
// equivalent to word-hyperbolicity.
bool isHyperbolicPresentation(const DefiningGraph& graph);

// A group element stored as its ShortLex normal form. Ordering is ShortLex:
// shorter first, then lexicographic by generator index. Only Racg builds
// non-identity elements, so the word is always reduced and lex-least.
class GroupElement {
 public:
  GroupElement() = default;

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool isIdentity() const { return word_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  friend class Racg;
  explicit GroupElement(Word word) : word_(std::move(word)) {}
  Word word_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

// A wall of the Davis complex, identified with the reflection g s g^-1 that
// fixes it, in normal form.
struct Hyperplane {
  GroupElement reflection;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct HyperplaneHash {
  std::size_t operator()(const Hyperplane& h) const noexcept {
    return GroupElementHash{}(h.reflection);
  }
};

struct BallEdge {
  std::uint32_t source;
  std::uint32_t target;
  Generator color;
};

// All elements of length <= radius in (length, ShortLex) order, with every
// directed Cayley edge (g, gs) whose endpoints both lie in the ball.
class Ball {
 public:
  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<GroupElement>& vertices() const { return vertices_; }
  const std::vector<BallEdge>& edges() const { return edges_; }
  // Index range [sphereStart(r), sphereStart(r + 1)) holds the sphere of radius r.
  std::size_t sphereStart(int r) const { return sphereOffsets_.at(static_cast<std::size_t>(r)); }
  std::optional<std::size_t> indexOf(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return indexOf(g).has_value(); }

 private:
  friend class Racg;
  friend Ball restoreBall(int radius, std::vector<GroupElement> vertices,
                          std::vector<BallEdge> edges, std::vector<std::size_t> offsets);
  int radius_ = 0;
  std::vector<GroupElement> vertices_;
  std::vector<BallEdge> edges_;
  std::vector<std::size_t> sphereOffsets_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

// Rebuilds a ball from serialized parts (vertices must already be normal forms).
Ball restoreBall(int radius, std::vector<GroupElement> vertices, std::vector<BallEdge> edges,
                 std::vector<std::size_t> offsets);

class Racg {
 public:
  explicit Racg(DefiningGraph graph);

  const DefiningGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.rank(); }

  GroupElement identity() const { return {}; }
  GroupElement generator(Generator s) const;

  GroupElement normalize(std::span<const Generator> word) const;
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement invert(const GroupElement& g) const;
  // g * s
  GroupElement multiply(const GroupElement& g, Generator s) const;

  int distance(const GroupElement& g, const GroupElement& h) const;

  Hyperplane wallOfEdge(const GroupElement& g, Generator s) const;
  // Prefix reflections of the normal form of g^-1 h, translated by g. Sorted.
  std::vector<Hyperplane> wallsSeparating(const GroupElement& g, const GroupElement& h) const;
  // True iff g lies in the halfspace of h not containing the identity.
  bool farSide(const Hyperplane& h, const GroupElement& g) const;
  bool separates(const Hyperplane& h, const GroupElement& g1, const GroupElement& g2) const {
    return farSide(h, g1) != farSide(h, g2);
  }

  // The generator s with g s = h, if g and h are adjacent.
  std::optional<Generator> edgeColor(const GroupElement& g, const GroupElement& h) const;

  GroupElement parse(std::string_view text) const { return normalize(graph_.parseWord(text)); }
  std::string format(const GroupElement& g) const { return graph_.formatWord(g.word()); }

  Ball ball(int radius, std::size_t vertexCap = kDefaultBallCap) const;
  // Sphere sizes 0..radius without materializing edges.
  std::vector<std::size_t> sphereSizes(int radius, std::size_t vertexCap = kDefaultBallCap) const;

 private:
  void checkWord(std::span<const Generator> word) const;
  // nf <- normal form of nf * s
  void append(Word& nf, Generator s) const;

  DefiningGraph graph_;
};

}  // namespace cubemedian
