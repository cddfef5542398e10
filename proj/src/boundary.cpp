#include "cubemedian/boundary.hpp"

#include <algorithm>
#include <unordered_set>

#include "cubemedian/errors.hpp"

namespace cubemedian {

Word rayColors(const RaySpec& spec, std::size_t n) {
  if (spec.period.empty()) throw DomainError("ray period must be nonempty");
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < spec.preperiod.size()) out.push_back(spec.preperiod[i]);
    else out.push_back(spec.period[(i - spec.preperiod.size()) % spec.period.size()]);
  }
  return out;
}

Path<GroupElement> materialize(const Racg& group, const RaySpec& spec, std::size_t n) {
  Path<GroupElement> path{{spec.base}};
  for (Generator s : rayColors(spec, n)) path.vertices.push_back(group.multiply(path.back(), s));
  return path;
}

RaySpec tailSpec(const Racg& group, const RaySpec& spec) {
  if (spec.period.empty()) throw DomainError("ray period must be nonempty");
  RaySpec out = spec;
  Generator first;
  if (!spec.preperiod.empty()) {
    first = spec.preperiod.front();
    out.preperiod.erase(out.preperiod.begin());
  } else {
    first = spec.period.front();
    std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
  }
  out.base = group.multiply(spec.base, first);
  return out;
}

RaySpec translateSpec(const Racg& group, const GroupElement& g, const RaySpec& spec) {
  RaySpec out = spec;
  out.base = group.compose(g, spec.base);
  return out;
}

RayValidation validateRaySpec(const Racg& group, const RaySpec& spec, std::size_t depthCap,
                              int certPower) {
  RayValidation out;
  auto checkColors = [&](const Word& w) {
    for (Generator s : w) {
      if (s >= group.rank()) throw InputError("ray color index " + std::to_string(s) + " invalid");
    }
  };
  checkColors(spec.preperiod);
  checkColors(spec.period);
  if (spec.period.empty()) {
    out.reason = "period is empty";
    return out;
  }
  // Geodesy of every prefix: the color word must stay reduced. Translating by
  // the base is an isometry, so the base plays no role here.
  Word colors = rayColors(spec, depthCap);
  Word prefix;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    prefix.push_back(colors[i]);
    if (group.normalize(prefix).length() != prefix.size()) {
      out.failingPrefix = i + 1;
      out.reason = "prefix of length " + std::to_string(i + 1) + " is not geodesic";
      return out;
    }
  }
  Word power;
  for (int k = 1; k <= certPower; ++k) {
    power.insert(power.end(), spec.period.begin(), spec.period.end());
    const std::size_t len = group.normalize(power).length();
    out.powerLengths.push_back(len);
    if (len != power.size()) {
      out.reason = "period power " + std::to_string(k) + " has length " + std::to_string(len) +
                   ", expected " + std::to_string(power.size());
      return out;
    }
  }
  out.valid = true;
  return out;
}

void requireValidRay(const Racg& group, const RaySpec& spec, std::size_t depthCap, int certPower) {
  auto v = validateRaySpec(group, spec, depthCap, certPower);
  if (!v.valid) throw DomainError("invalid ray: " + v.reason);
}

std::string verdictName(FellowVerdict v) {
  switch (v) {
    case FellowVerdict::Same: return "same";
    case FellowVerdict::Diverged: return "diverged";
    case FellowVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

FellowTravelResult fellowTravel(const Racg& group, const RaySpec& first, const RaySpec& second,
                                std::size_t depth, int delta, std::size_t trailingWindow) {
  const auto p1 = materialize(group, first, depth);
  const auto p2 = materialize(group, second, depth);
  FellowTravelResult out;
  out.threshold = 2 * delta + group.distance(first.base, second.base);
  for (std::size_t t = 0; t <= depth; ++t) {
    const int d = group.distance(p1.vertices[t], p2.vertices[t]);
    out.distances.push_back(d);
    out.maxDistance = std::max(out.maxDistance, d);
    if (d > out.threshold && !out.divergedAt) out.divergedAt = t;
  }
  if (out.maxDistance <= out.threshold) {
    out.verdict = FellowVerdict::Same;
    return out;
  }
  const std::size_t n = out.distances.size();
  const std::size_t from = n > trailingWindow ? n - trailingWindow : 0;
  bool nonDecreasing = true;
  for (std::size_t t = from + 1; t < n; ++t) {
    if (out.distances[t] < out.distances[t - 1]) nonDecreasing = false;
  }
  const bool aboveAtEnd = out.distances.back() > out.threshold;
  out.verdict = nonDecreasing && aboveAtEnd ? FellowVerdict::Diverged : FellowVerdict::Inconclusive;
  return out;
}

std::string tierName(GeoTier t) { return t == GeoTier::Strict ? "strict" : "slack"; }

namespace {

struct Window {
  int start;
  int end;
  std::vector<GroupElement> targets;
  std::vector<int> fromX;
};

Window makeWindow(const Racg& group, const GroupElement& x, const RaySpec& spec, int start,
                  const GeoSetOptions& options) {
  if (start < 0) throw InputError("window start must be nonnegative");
  Window w{start, start + options.window, {}, {}};
  if (static_cast<std::size_t>(w.end) > options.maxDepth) {
    throw RegionError("target window ends at depth " + std::to_string(w.end) +
                      ", past the materializable depth " + std::to_string(options.maxDepth));
  }
  const auto ray = materialize(group, spec, static_cast<std::size_t>(w.end));
  for (int n = w.start; n <= w.end; ++n) {
    w.targets.push_back(ray.vertices[static_cast<std::size_t>(n)]);
    w.fromX.push_back(group.distance(x, w.targets.back()));
  }
  return w;
}

GeoSetResult collect(const Racg& group, const GroupElement& x, const Window& window, int radius,
                     const GeoSetOptions& options, const Ball& candidates,
                     const GroupElement& center) {
  if (candidates.radius() < radius) throw InputError("candidate ball smaller than the radius");
  GeoSetResult out;
  out.center = center;
  out.radius = radius;
  out.windowStart = window.start;
  out.windowEnd = window.end;
  out.tier = options.tier;
  const int allowed = options.tier == GeoTier::Strict ? 0 : 2 * options.delta;
  const std::size_t end = candidates.sphereStart(radius + 1);
  for (std::size_t i = 0; i < end; ++i) {
    GroupElement y = group.compose(center, candidates.vertices()[i]);
    const int dxy = group.distance(x, y);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < window.targets.size(); ++k) {
      const int defect = dxy + group.distance(y, window.targets[k]) - window.fromX[k];
      if (defect <= allowed) ++hits;
    }
    if (hits == window.targets.size()) out.members.push_back(std::move(y));
    else if (hits > 0) out.unstable.push_back(std::move(y));
  }
  std::sort(out.members.begin(), out.members.end());
  std::sort(out.unstable.begin(), out.unstable.end());
  return out;
}

}  // namespace

GeoSetResult geoSet(const Racg& group, const GroupElement& x, const RaySpec& spec, int radius,
                    const GeoSetOptions& options, const Ball& candidates,
                    std::optional<GroupElement> center) {
  if (radius < 0) throw InputError("radius must be nonnegative");
  requireValidRay(group, spec);
  const int minStart = radius + options.effectiveSlack();
  const int start = options.windowStart.value_or(group.distance(x, spec.base) + minStart);
  if (start < minStart) {
    throw InputError("window start " + std::to_string(start) + " below radius + slack " +
                     std::to_string(minStart));
  }
  const auto window = makeWindow(group, x, spec, start, options);
  return collect(group, x, window, radius, options, candidates, center.value_or(x));
}

GeoSetResult geoSet(const Racg& group, const GroupElement& x, const RaySpec& spec, int radius,
                    const GeoSetOptions& options) {
  return geoSet(group, x, spec, radius, options, group.ball(radius));
}

GeoDiffReport geoDiffExperiment(const Racg& group, const GroupElement& x, const GroupElement& y,
                                const RaySpec& spec, int maxRadius, const GeoSetOptions& options,
                                int stabilizationWindow) {
  if (maxRadius < 1) throw InputError("maximum radius must be at least 1");
  if (stabilizationWindow < 1) throw InputError("stabilization window must be positive");
  requireValidRay(group, spec);
  const Ball candidates = group.ball(maxRadius);
  const int far = std::max(group.distance(x, spec.base), group.distance(y, spec.base));
  GeoSetOptions shared = options;
  shared.windowStart = options.windowStart.value_or(far + maxRadius + options.effectiveSlack());

  GeoDiffReport report;
  const auto windowX = makeWindow(group, x, spec, *shared.windowStart, shared);
  const auto windowY = makeWindow(group, y, spec, *shared.windowStart, shared);
  report.windowStart = windowX.start;
  report.windowEnd = windowX.end;
  for (int r = 1; r <= maxRadius; ++r) {
    auto gx = collect(group, x, windowX, r, shared, candidates, x);
    auto gy = collect(group, y, windowY, r, shared, candidates, x);
    GeoDiffStep step;
    step.radius = r;
    std::set_symmetric_difference(gx.members.begin(), gx.members.end(), gy.members.begin(),
                                  gy.members.end(), std::back_inserter(step.difference));
    step.size = step.difference.size();
    if (!report.steps.empty() && step.size < report.steps.back().size) report.monotone = false;
    report.steps.push_back(std::move(step));
  }
  const auto n = report.steps.size();
  if (n >= static_cast<std::size_t>(stabilizationWindow)) {
    const std::size_t last = report.steps.back().size;
    report.stabilized = std::all_of(report.steps.end() - stabilizationWindow, report.steps.end(),
                                    [&](const GeoDiffStep& s) { return s.size == last; });
  }
  report.plateau = report.steps.back().size;
  return report;
}

}  // namespace cubemedian
