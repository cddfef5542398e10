#include "cubemedian/hyperfinite.hpp"

#include <algorithm>
#include <unordered_set>

#include "cubemedian/errors.hpp"
#include "cubemedian/geometry.hpp"

namespace cubemedian {

Word colorString(const Racg& group, const Path<GroupElement>& path, std::size_t m, std::size_t n) {
  if (m + n > path.length()) {
    throw InputError("color string [" + std::to_string(m) + ", " + std::to_string(m + n) +
                     ") exceeds path length " + std::to_string(path.length()));
  }
  Word out;
  for (std::size_t i = m; i < m + n; ++i) {
    auto s = group.edgeColor(path.vertices[i], path.vertices[i + 1]);
    if (!s) throw DomainError("path has non-adjacent consecutive vertices");
    out.push_back(*s);
  }
  return out;
}

ApproxS approxS(const Racg& group, const RaySpec& spec, int depth, std::size_t geodesicCap,
                int maxLength, int window) {
  if (depth < 1 || maxLength < 1 || window < 1) {
    throw InputError("depth, string length and window must be positive");
  }
  requireValidRay(group, spec, static_cast<std::size_t>(depth) + 1);
  const RacgComplex complex(group);
  const auto ray = materialize(group, spec, static_cast<std::size_t>(depth));
  ApproxS out;
  out.depth = depth;
  out.maxLength = maxLength;
  for (int target = std::max(0, depth - window + 1); target <= depth; ++target) {
    auto geodesics = geodesicsBetween(complex, group.identity(),
                                      ray.vertices[static_cast<std::size_t>(target)], geodesicCap);
    out.truncated = out.truncated || geodesics.truncated;
    out.geodesicCount += geodesics.paths.size();
    for (const auto& path : geodesics.paths) {
      const auto colors = pathColors(complex, path);
      const auto len = colors.size();
      out.frontier = std::max(out.frontier, static_cast<int>(len));
      for (std::size_t m = 0; m < len; ++m) {
        Word str;
        for (std::size_t n = 1; n <= static_cast<std::size_t>(maxLength) && m + n <= len; ++n) {
          str.push_back(static_cast<Generator>(colors[m + n - 1]));
          auto& ev = out.strings[str];
          ev.vertices.insert(path.vertices[m]);
          ev.distances.insert(static_cast<int>(m));
        }
      }
    }
  }
  return out;
}

std::vector<LeastStringProfile> leastStrings(const ApproxS& s, const RaySpec& spec, int nMax,
                                             const SurrogateOptions& options) {
  if (nMax < 1) throw InputError("nMax must be positive");
  if (nMax > s.maxLength) throw InputError("nMax exceeds the recorded string length");
  const int slack = options.slack >= 0 ? options.slack : 2 * static_cast<int>(spec.period.size());
  auto qualifies = [&](const Word& str, const StringEvidence& ev) {
    const int n = static_cast<int>(str.size());
    return static_cast<int>(ev.distances.size()) >= options.threshold &&
           *ev.distances.rbegin() >= s.frontier - n - slack;
  };

  std::vector<LeastStringProfile> out;
  for (int n = 1; n <= nMax; ++n) {
    const Word* chosen = nullptr;
    const Word* overall = nullptr;
    const StringEvidence* evidence = nullptr;
    for (const auto& [str, ev] : s.strings) {
      if (static_cast<int>(str.size()) != n || !qualifies(str, ev)) continue;
      if (!overall) overall = &str;
      const bool extends =
          out.empty() || std::equal(out.back().s.begin(), out.back().s.end(), str.begin());
      if (extends) {
        chosen = &str;
        evidence = &ev;
        break;
      }
    }
    if (!chosen) {
      throw DomainError("no recurring string of length " + std::to_string(n) +
                        (out.empty() ? std::string() : " extends the previous least string") +
                        "; increase the depth");
    }
    LeastStringProfile p;
    p.n = n;
    p.s = *chosen;
    p.T.assign(evidence->vertices.begin(), evidence->vertices.end());
    p.v = p.T.front();
    p.k = static_cast<int>(p.v.length());
    p.evidence.assign(evidence->distances.begin(), evidence->distances.end());
    p.frontier = s.frontier;
    p.unconstrainedAgrees = (*overall == *chosen);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<LeastStringProfile> leastStrings(const Racg& group, const RaySpec& spec, int depth,
                                             int nMax, std::size_t geodesicCap,
                                             const SurrogateOptions& options) {
  return leastStrings(approxS(group, spec, depth, geodesicCap, nMax), spec, nMax, options);
}

std::string Fingerprint::encode(const Racg& group) const {
  std::string out;
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (i) out += '\n';
    out += group.format(H[i]);
  }
  return out;
}

std::uint64_t Fingerprint::hash(const Racg& group) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : encode(group)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool Fingerprint::contains(const GroupElement& x) const {
  return std::binary_search(H.begin(), H.end(), x);
}

Fingerprint fingerprint(const Racg& group, const LeastStringProfile& profile, int radius) {
  if (radius < 0) throw InputError("fingerprint radius must be nonnegative");
  if (profile.frontier - profile.n < radius + profile.k) {
    throw DomainError("evidence frontier " + std::to_string(profile.frontier) +
                      " too shallow for n=" + std::to_string(profile.n) + ", k=" +
                      std::to_string(profile.k) + ", radius " + std::to_string(radius));
  }
  Fingerprint fp;
  fp.n = profile.n;
  fp.radius = radius;
  fp.g = group.invert(profile.v);
  for (const auto& t : profile.T) {
    auto x = group.compose(fp.g, t);
    if (x.length() <= static_cast<std::size_t>(radius)) fp.H.push_back(std::move(x));
  }
  std::sort(fp.H.begin(), fp.H.end());
  return fp;
}

Fingerprint fingerprint(const Racg& group, const RaySpec& spec, int n, int depth, int radius,
                        std::size_t geodesicCap, const SurrogateOptions& options) {
  if (n < 1) throw InputError("fingerprint depth n must be positive");
  auto profiles = leastStrings(group, spec, depth, n, geodesicCap, options);
  return fingerprint(group, profiles.back(), radius);
}

FingerprintComparison compareFingerprints(const Racg& group, const Fingerprint& first,
                                          const Fingerprint& second, int searchRadius) {
  if (first.n != second.n) throw InputError("fingerprints have different n");
  if (first.radius != second.radius) throw InputError("fingerprints have different radii");
  if (searchRadius < 0 || searchRadius > first.radius) {
    throw InputError("search radius must lie in [0, fingerprint radius]");
  }
  FingerprintComparison out;
  out.agreementRadius = first.radius - searchRadius;
  const auto limit = static_cast<std::size_t>(out.agreementRadius);
  const Ball candidates = group.ball(searchRadius);
  for (const auto& g : candidates.vertices()) {
    ++out.candidatesTried;
    const GroupElement gInv = group.invert(g);
    bool ok = true;
    for (const auto& h : first.H) {
      auto x = group.compose(g, h);
      if (x.length() <= limit && !second.contains(x)) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < second.H.size(); ++i) {
      const auto& x = second.H[i];
      if (x.length() <= limit && !first.contains(group.compose(gInv, x))) ok = false;
    }
    if (ok) {
      out.related = true;
      out.witness = g;
      return out;
    }
  }
  return out;
}

std::size_t kBound(const Racg& group, int delta, std::size_t vertexCap) {
  if (delta < 0) throw InputError("delta must be nonnegative");
  std::size_t total = 0;
  for (auto n : group.sphereSizes(6 * delta, vertexCap)) total += n;
  return total;
}

ZDiagnostic zDiagnostic(const std::vector<LeastStringProfile>& profiles) {
  ZDiagnostic out;
  for (const auto& p : profiles) out.k.push_back(p.k);
  if (out.k.empty()) {
    out.verdict = "bounded within depth";
    return out;
  }
  const int mid = out.k[out.k.size() / 2];
  out.verdict = out.k.back() == mid ? "bounded within depth" : "increasing";
  return out;
}

}  // namespace cubemedian
