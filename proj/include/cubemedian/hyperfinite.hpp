#pragma once

// Finite-depth version of the hyperfiniteness construction for a group acting
// freely on its Cayley graph.
//
// The action is free and transitive on vertices, so the transversal is the
// identity alone, the basepoint v0 is the identity, and the invariant coloring
// gives the directed edge (g, gs) the color s. Vertices are ordered by
// (d(v0, .), ShortLex), which is exactly GroupElement's ordering.
//
// For a boundary point a (given by a RaySpec) and a length n:
//   S      pairs (vertex, color string) read along geodesics from v0 toward a
//   s_n    the lex-least length-n string that recurs in S
//   T_n    vertices where s_n starts
//   v_n    min T_n,  k_n = d(v0, v_n)
//   H_n    v_n^-1 T_n, truncated to a ball
// Recurrence ("infinitely often") is replaced by a finite surrogate: the string
// starts at >= threshold distinct distances, one of them near the frontier.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubemedian/boundary.hpp"
#include "cubemedian/racg.hpp"

namespace cubemedian {

// The n colors of path edges m .. m+n-1.
Word colorString(const Racg& group, const Path<GroupElement>& path, std::size_t m, std::size_t n);

struct StringEvidence {
  std::set<GroupElement> vertices;
  std::set<int> distances;
};

struct ApproxS {
  std::map<Word, StringEvidence> strings;
  int depth = 0;
  int maxLength = 0;
  // Length of the longest enumerated geodesic.
  int frontier = 0;
  std::size_t geodesicCount = 0;
  // Some target had more geodesics than the cap. The canonical geodesic is
  // always among the enumerated ones.
  bool truncated = false;
};

// Reads strings of length 1..maxLength along every geodesic from the identity
// to omega(N), N in [depth - window + 1, depth].
ApproxS approxS(const Racg& group, const RaySpec& spec, int depth, std::size_t geodesicCap,
                int maxLength, int window = 4);

struct SurrogateOptions {
  int threshold = 3;
  // Frontier slack; < 0 means 2 * |period|.
  int slack = -1;
};

struct LeastStringProfile {
  int n = 0;
  Word s;
  std::vector<GroupElement> T;
  GroupElement v;
  int k = 0;
  std::vector<int> evidence;
  int frontier = 0;
  // The least qualifying string overall equals the prefix-coherent choice.
  bool unconstrainedAgrees = true;
};

std::vector<LeastStringProfile> leastStrings(const ApproxS& s, const RaySpec& spec, int nMax,
                                             const SurrogateOptions& options = {});
std::vector<LeastStringProfile> leastStrings(const Racg& group, const RaySpec& spec, int depth,
                                             int nMax, std::size_t geodesicCap = 4096,
                                             const SurrogateOptions& options = {});

struct Fingerprint {
  int n = 0;
  int radius = 0;
  // g * v_n = identity
  GroupElement g;
  // Sorted (ShortLex).
  std::vector<GroupElement> H;

  // Newline-joined normal forms in ShortLex order; the identity is the empty line.
  std::string encode(const Racg& group) const;
  std::uint64_t hash(const Racg& group) const;
  bool contains(const GroupElement& x) const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Throws DomainError when the evidence cannot determine H inside ball(radius),
// i.e. frontier - n < radius + k.
Fingerprint fingerprint(const Racg& group, const LeastStringProfile& profile, int radius);
Fingerprint fingerprint(const Racg& group, const RaySpec& spec, int n, int depth, int radius,
                        std::size_t geodesicCap = 4096, const SurrogateOptions& options = {});

struct FingerprintComparison {
  bool related = false;
  std::optional<GroupElement> witness;
  // Agreement was required on ball(agreementRadius).
  int agreementRadius = 0;
  std::size_t candidatesTried = 0;
};

// Searches g in ball(searchRadius), in ShortLex order, with g * H1 == H2 on
// ball(R - searchRadius). Related fingerprints are necessary, not sufficient,
// for the boundary points to lie in one orbit.
FingerprintComparison compareFingerprints(const Racg& group, const Fingerprint& first,
                                          const Fingerprint& second, int searchRadius);

// |ball(6 delta)|, the bound on the size of a class of translated fingerprints.
std::size_t kBound(const Racg& group, int delta, std::size_t vertexCap = kDefaultBallCap);

struct ZDiagnostic {
  std::vector<int> k;
  // "bounded within depth" or "increasing"; a finite-depth observation only.
  std::string verdict;
};

ZDiagnostic zDiagnostic(const std::vector<LeastStringProfile>& profiles);

}  // namespace cubemedian
