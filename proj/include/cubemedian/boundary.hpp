#pragma once

// Finitely described boundary points (eventually periodic geodesic rays in a
// RACG Cayley graph), truncated intervals toward them, and the experiment
// comparing the intervals from two adjacent basepoints.

#include <optional>
#include <string>
#include <vector>

#include "cubemedian/complex.hpp"
#include "cubemedian/geometry.hpp"
#include "cubemedian/racg.hpp"

namespace cubemedian {

// The ray base * preperiod * period * period * ...
struct RaySpec {
  GroupElement base;
  Word preperiod;
  Word period;

  friend bool operator==(const RaySpec&, const RaySpec&) = default;
};

// Colors of the first n edges.
Word rayColors(const RaySpec& spec, std::size_t n);

Path<GroupElement> materialize(const Racg& group, const RaySpec& spec, std::size_t n);

// Same ray with the base advanced one edge (preperiod consumed, or the period
// rotated once it is exhausted).
RaySpec tailSpec(const Racg& group, const RaySpec& spec);
// Left translate: base replaced by g * base, colors unchanged.
RaySpec translateSpec(const Racg& group, const GroupElement& g, const RaySpec& spec);

struct RayValidation {
  bool valid = false;
  std::string reason;
  // Length of the shortest non-geodesic prefix, when geodesy failed.
  std::optional<std::size_t> failingPrefix;
  // |normalize(period^k)| for k = 1..certPower (computed up to the first failure).
  std::vector<std::size_t> powerLengths;
};

RayValidation validateRaySpec(const Racg& group, const RaySpec& spec, std::size_t depthCap,
                              int certPower);
// Throws DomainError with the validation reason when the spec is invalid.
void requireValidRay(const Racg& group, const RaySpec& spec, std::size_t depthCap = 24,
                     int certPower = 6);

enum class FellowVerdict { Same, Diverged, Inconclusive };
std::string verdictName(FellowVerdict v);

struct FellowTravelResult {
  FellowVerdict verdict = FellowVerdict::Inconclusive;
  int maxDistance = 0;
  // 2 delta + d(base1, base2); reduces to 2 delta for a common basepoint.
  int threshold = 0;
  std::optional<std::size_t> divergedAt;
  std::vector<int> distances;
};

FellowTravelResult fellowTravel(const Racg& group, const RaySpec& first, const RaySpec& second,
                                std::size_t depth, int delta, std::size_t trailingWindow = 4);

enum class GeoTier { Strict, Slack };
std::string tierName(GeoTier t);

struct GeoSetOptions {
  GeoTier tier = GeoTier::Strict;
  int delta = 0;
  // Number of extra window depths past the first; the window is [n0, n0 + window].
  int window = 4;
  // Extra depth between the query radius and the window start; < 0 means 2 delta + 2.
  int slack = -1;
  // Explicit window start; when unset it is d(x, base) + R + slack.
  std::optional<int> windowStart;
  std::size_t maxDepth = 4096;

  int effectiveSlack() const { return slack >= 0 ? slack : 2 * delta + 2; }
};

struct GeoSetResult {
  std::vector<GroupElement> members;
  std::vector<GroupElement> unstable;
  GroupElement center;
  int radius = 0;
  int windowStart = 0;
  int windowEnd = 0;
  GeoTier tier = GeoTier::Strict;
};

// Vertices y with d(center, y) <= R lying between x and every window target
// omega(n) (strict: d(x,y) + d(y,omega(n)) == d(x,omega(n)); slack: defect at
// most 2 delta). The center defaults to x. candidates must be ball(R) or larger.
GeoSetResult geoSet(const Racg& group, const GroupElement& x, const RaySpec& spec, int radius,
                    const GeoSetOptions& options, const Ball& candidates,
                    std::optional<GroupElement> center = std::nullopt);
GeoSetResult geoSet(const Racg& group, const GroupElement& x, const RaySpec& spec, int radius,
                    const GeoSetOptions& options);

struct GeoDiffStep {
  int radius = 0;
  std::size_t size = 0;
  // Members of the symmetric difference, sorted.
  std::vector<GroupElement> difference;
};

struct GeoDiffReport {
  std::vector<GeoDiffStep> steps;
  bool stabilized = false;
  // No size decrease between consecutive radii.
  bool monotone = true;
  std::size_t plateau = 0;
  int windowStart = 0;
  int windowEnd = 0;
};

// |Geo(x) delta Geo(y)| inside ball(x, R) for R = 1..maxRadius, with one target
// window shared by every radius.
GeoDiffReport geoDiffExperiment(const Racg& group, const GroupElement& x, const GroupElement& y,
                                const RaySpec& spec, int maxRadius, const GeoSetOptions& options,
                                int stabilizationWindow = 3);

}  // namespace cubemedian
