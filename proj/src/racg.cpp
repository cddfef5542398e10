#include "cubemedian/racg.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "cubemedian/errors.hpp"

namespace cubemedian {

DefiningGraph::DefiningGraph(std::vector<std::string> generators,
                             const std::vector<std::pair<std::string, std::string>>& commuting)
    : generators_(std::move(generators)), commuteMask_(generators_.size(), 0) {
  if (generators_.size() > kMaxRank) {
    throw InputError("generators: at most " + std::to_string(kMaxRank) + " supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw InputError("generators: empty symbol");
    if (!seen.insert(g).second) throw InputError("generators: duplicate symbol '" + g + "'");
  }
  for (const auto& [x, y] : commuting) {
    auto s = indexOf(x);
    auto t = indexOf(y);
    if (!s) throw InputError("commuting: unknown generator '" + x + "'");
    if (!t) throw InputError("commuting: unknown generator '" + y + "'");
    if (*s == *t) throw InputError("commuting: generator '" + x + "' paired with itself");
    commuteMask_[*s] |= std::uint64_t{1} << *t;
    commuteMask_[*t] |= std::uint64_t{1} << *s;
  }
}

std::optional<Generator> DefiningGraph::indexOf(std::string_view symbol) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == symbol) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

std::vector<std::pair<Generator, Generator>> DefiningGraph::commutingPairs() const {
  std::vector<std::pair<Generator, Generator>> out;
  for (std::size_t s = 0; s < rank(); ++s) {
    for (std::size_t t = s + 1; t < rank(); ++t) {
      if (commutes(static_cast<Generator>(s), static_cast<Generator>(t))) {
        out.emplace_back(static_cast<Generator>(s), static_cast<Generator>(t));
      }
    }
  }
  return out;
}

Word DefiningGraph::parseWord(std::string_view text) const {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    Generator which = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& sym = generators_[i];
      if (sym.size() > best && text.substr(pos, sym.size()) == sym) {
        best = sym.size();
        which = static_cast<Generator>(i);
      }
    }
    if (best == 0) {
      throw InputError("word '" + std::string(text) + "': no generator matches at offset " +
                       std::to_string(pos));
    }
    out.push_back(which);
    pos += best;
  }
  return out;
}

std::string DefiningGraph::formatWord(std::span<const Generator> word) const {
  std::string out;
  for (Generator s : word) out += symbol(s);
  return out;
}

std::string DefiningGraph::canonicalText() const {
  nlohmann::json j;
  j["generators"] = generators_;
  auto pairs = nlohmann::json::array();
  for (auto [s, t] : commutingPairs()) pairs.push_back({symbol(s), symbol(t)});
  j["commuting"] = pairs;
  return j.dump();
}

namespace {

std::vector<std::string> letterNames(std::size_t n) {
  if (n > 26) throw InputError("preset graphs support at most 26 generators");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace

DefiningGraph cycleGraph(std::size_t n) {
  auto names = letterNames(n);
  std::vector<std::pair<std::string, std::string>> edges;
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  } else if (n == 2) {
    edges.emplace_back(names[0], names[1]);
  }
  return DefiningGraph(names, edges);
}

DefiningGraph edgelessGraph(std::size_t n) { return DefiningGraph(letterNames(n), {}); }

DefiningGraph completeGraph(std::size_t n) {
  auto names = letterNames(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
  }
  return DefiningGraph(names, edges);
}

bool isHyperbolicPresentation(const DefiningGraph& graph) {
  const std::size_t n = graph.rank();
  auto adj = [&](std::size_t x, std::size_t y) {
    return graph.commutes(static_cast<Generator>(x), static_cast<Generator>(y));
  };
  // Induced 4-cycle a-b-c-d-a with diagonals a-c and b-d absent.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      if (adj(a, c)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || b == c || !adj(a, b) || !adj(b, c)) continue;
        for (std::size_t d = b + 1; d < n; ++d) {
          if (d == a || d == c || !adj(a, d) || !adj(c, d)) continue;
          if (!adj(b, d)) return false;
        }
      }
    }
  }
  return true;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  // FNV-1a over the letters.
  std::uint64_t h = 1469598103934665603ULL;
  for (Generator s : g.word()) {
    h ^= s;
    h *= 1099511628211ULL;
  }
  h ^= g.length();
  return static_cast<std::size_t>(h);
}

std::optional<std::size_t> Ball::indexOf(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Racg::Racg(DefiningGraph graph) : graph_(std::move(graph)) {}

void Racg::checkWord(std::span<const Generator> word) const {
  for (Generator s : word) {
    if (s >= rank()) {
      throw InputError("invalid generator index " + std::to_string(s) + " (rank " +
                       std::to_string(rank()) + ")");
    }
  }
}

void Racg::append(Word& nf, Generator s) const {
  const std::uint64_t mask = graph_.commuteMask(s);
  std::size_t pos = nf.size();
  while (pos > 0) {
    const Generator t = nf[pos - 1];
    if (t == s) {
      nf.erase(nf.begin() + static_cast<std::ptrdiff_t>(pos - 1));
      return;
    }
    if (((mask >> t) & 1U) == 0) break;
    --pos;
  }
  // Every letter from pos on commutes with s; the lex-least placement skips
  // over the smaller ones.
  while (pos < nf.size() && nf[pos] < s) ++pos;
  nf.insert(nf.begin() + static_cast<std::ptrdiff_t>(pos), s);
}

GroupElement Racg::generator(Generator s) const {
  checkWord(std::span<const Generator>(&s, 1));
  return GroupElement(Word{s});
}

GroupElement Racg::normalize(std::span<const Generator> word) const {
  checkWord(word);
  Word nf;
  nf.reserve(word.size());
  for (Generator s : word) append(nf, s);
  return GroupElement(std::move(nf));
}

GroupElement Racg::compose(const GroupElement& g, const GroupElement& h) const {
  checkWord(h.word());
  Word nf = g.word();
  for (Generator s : h.word()) append(nf, s);
  return GroupElement(std::move(nf));
}

GroupElement Racg::invert(const GroupElement& g) const {
  Word rev(g.word().rbegin(), g.word().rend());
  return normalize(rev);
}

GroupElement Racg::multiply(const GroupElement& g, Generator s) const {
  checkWord(std::span<const Generator>(&s, 1));
  Word nf = g.word();
  append(nf, s);
  return GroupElement(std::move(nf));
}

int Racg::distance(const GroupElement& g, const GroupElement& h) const {
  Word nf;
  nf.reserve(g.length() + h.length());
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) append(nf, *it);
  for (Generator s : h.word()) append(nf, s);
  return static_cast<int>(nf.size());
}

Hyperplane Racg::wallOfEdge(const GroupElement& g, Generator s) const {
  checkWord(std::span<const Generator>(&s, 1));
  // g s g^-1 == (gs) s (gs)^-1, so either endpoint gives the same element.
  Word nf = g.word();
  append(nf, s);
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) append(nf, *it);
  return Hyperplane{GroupElement(std::move(nf))};
}

std::vector<Hyperplane> Racg::wallsSeparating(const GroupElement& g, const GroupElement& h) const {
  const GroupElement step = compose(invert(g), h);
  std::vector<Hyperplane> walls;
  walls.reserve(step.length());
  Word prefix = g.word();
  for (Generator s : step.word()) {
    walls.push_back(wallOfEdge(GroupElement(prefix), s));
    append(prefix, s);
  }
  std::sort(walls.begin(), walls.end());
  return walls;
}

bool Racg::farSide(const Hyperplane& h, const GroupElement& g) const {
  return compose(h.reflection, g).length() < g.length();
}

std::optional<Generator> Racg::edgeColor(const GroupElement& g, const GroupElement& h) const {
  if (g.length() + 1 != h.length() && h.length() + 1 != g.length()) return std::nullopt;
  const GroupElement step = compose(invert(g), h);
  if (step.length() != 1) return std::nullopt;
  return step.word().front();
}

Ball Racg::ball(int radius, std::size_t vertexCap) const {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  Ball out;
  out.radius_ = radius;
  out.vertices_.push_back(identity());
  out.index_.emplace(identity(), 0);
  out.sphereOffsets_.push_back(0);
  std::size_t sphereBegin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t sphereEnd = out.vertices_.size();
    out.sphereOffsets_.push_back(sphereEnd);
    std::vector<GroupElement> next;
    std::unordered_set<GroupElement, GroupElementHash> seen;
    for (std::size_t i = sphereBegin; i < sphereEnd; ++i) {
      for (std::size_t s = 0; s < rank(); ++s) {
        GroupElement gs = multiply(out.vertices_[i], static_cast<Generator>(s));
        if (gs.length() == static_cast<std::size_t>(r) && seen.insert(gs).second) {
          next.push_back(std::move(gs));
        }
      }
    }
    if (out.vertices_.size() + next.size() > vertexCap) {
      throw ResourceError("ball(" + std::to_string(radius) + ") exceeds vertex cap " +
                          std::to_string(vertexCap));
    }
    std::sort(next.begin(), next.end());
    for (auto& g : next) {
      out.index_.emplace(g, out.vertices_.size());
      out.vertices_.push_back(std::move(g));
    }
    sphereBegin = sphereEnd;
  }
  out.sphereOffsets_.push_back(out.vertices_.size());

  for (std::size_t i = 0; i < out.vertices_.size(); ++i) {
    for (std::size_t s = 0; s < rank(); ++s) {
      auto j = out.indexOf(multiply(out.vertices_[i], static_cast<Generator>(s)));
      if (j) {
        out.edges_.push_back(BallEdge{static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(*j),
                                      static_cast<Generator>(s)});
      }
    }
  }
  return out;
}

std::vector<std::size_t> Racg::sphereSizes(int radius, std::size_t vertexCap) const {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  std::vector<std::size_t> sizes{1};
  std::vector<GroupElement> sphere{identity()};
  std::size_t total = 1;
  for (int r = 1; r <= radius; ++r) {
    std::unordered_set<GroupElement, GroupElementHash> next;
    for (const auto& g : sphere) {
      for (std::size_t s = 0; s < rank(); ++s) {
        GroupElement gs = multiply(g, static_cast<Generator>(s));
        if (gs.length() == static_cast<std::size_t>(r)) next.insert(std::move(gs));
      }
    }
    total += next.size();
    if (total > vertexCap) {
      throw ResourceError("ball(" + std::to_string(radius) + ") exceeds vertex cap " +
                          std::to_string(vertexCap));
    }
    sizes.push_back(next.size());
    sphere.assign(next.begin(), next.end());
  }
  return sizes;
}

Ball restoreBall(int radius, std::vector<GroupElement> vertices, std::vector<BallEdge> edges,
                 std::vector<std::size_t> offsets) {
  Ball out;
  out.radius_ = radius;
  out.vertices_ = std::move(vertices);
  out.edges_ = std::move(edges);
  out.sphereOffsets_ = std::move(offsets);
  for (std::size_t i = 0; i < out.vertices_.size(); ++i) out.index_.emplace(out.vertices_[i], i);
  return out;
}

}  // namespace cubemedian
