#include "cubemedian/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "cubemedian/boundary.hpp"
#include "cubemedian/cache.hpp"
#include "cubemedian/complex.hpp"
#include "cubemedian/dot.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/geometry.hpp"
#include "cubemedian/hyperfinite.hpp"
#include "cubemedian/io.hpp"
#include "cubemedian/medgraph.hpp"
#include "cubemedian/racg.hpp"

namespace cubemedian {

namespace {

// Every option is kept as text so the resolved configuration can be echoed
// verbatim and replayed.
struct Opt {
  std::string name;
  std::string value;
  std::vector<std::string> list;
  bool isList = false;
  bool isFlag = false;
  bool flag = false;
  bool echo = true;
};

struct Outcome {
  Json results = Json::object();
  bool truncated = false;
  std::optional<std::string> text;
};

class Options {
 public:
  Options(CLI::App* app, std::string command) : app_(app), command_(std::move(command)) {}

  void add(const std::string& name, const std::string& def, const std::string& help) {
    auto& o = push(name);
    o.value = def;
    app_->add_option("--" + name, o.value, help);
  }
  void addList(const std::string& name, const std::string& help) {
    auto& o = push(name);
    o.isList = true;
    app_->add_option("--" + name, o.list, help);
  }
  void addFlag(const std::string& name, const std::string& help) {
    auto& o = push(name);
    o.isFlag = true;
    app_->add_flag("--" + name, o.flag, help);
  }
  void addHidden(const std::string& name, const std::string& help) {
    add(name, "", help);
    opts_.back()->echo = false;
  }

  const std::string& str(const std::string& name) const { return find(name).value; }
  const std::vector<std::string>& list(const std::string& name) const { return find(name).list; }
  bool flag(const std::string& name) const { return find(name).flag; }
  bool has(const std::string& name) const {
    for (const auto& o : opts_) {
      if (o->name == name) return true;
    }
    return false;
  }

  long long integer(const std::string& name, long long min = 0) const {
    const auto& v = str(name);
    std::size_t used = 0;
    long long out = 0;
    try {
      out = std::stoll(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (v.empty() || used != v.size()) throw InputError("option --" + name + ": expected an integer, got '" + v + "'");
    if (out < min) throw InputError("option --" + name + ": must be at least " + std::to_string(min));
    return out;
  }
  int small(const std::string& name, int min = 0) const {
    auto v = integer(name, min);
    if (v > 1000000) throw InputError("option --" + name + ": too large");
    return static_cast<int>(v);
  }
  // "auto" (or empty) means unset.
  std::optional<int> optionalInt(const std::string& name, int min = 0) const {
    const auto& v = str(name);
    if (v.empty() || v == "auto") return std::nullopt;
    return small(name, min);
  }

  Json config() const {
    Json c = Json::object();
    Json argv = Json::array({command_});
    for (const auto& o : opts_) {
      if (!o->echo) continue;
      if (o->isFlag) {
        c[o->name] = o->flag;
        if (o->flag) argv.push_back("--" + o->name);
      } else if (o->isList) {
        c[o->name] = o->list;
        for (const auto& v : o->list) {
          argv.push_back("--" + o->name);
          argv.push_back(v);
        }
      } else {
        c[o->name] = o->value;
        if (!o->value.empty()) {
          argv.push_back("--" + o->name);
          argv.push_back(o->value);
        }
      }
    }
    c["argv"] = argv;
    return c;
  }

  const std::string& command() const { return command_; }

 private:
  Opt& push(const std::string& name) {
    opts_.push_back(std::make_unique<Opt>());
    opts_.back()->name = name;
    return *opts_.back();
  }
  const Opt& find(const std::string& name) const {
    for (const auto& o : opts_) {
      if (o->name == name) return *o;
    }
    throw std::logic_error("unregistered option " + name);
  }

  CLI::App* app_;
  std::string command_;
  std::vector<std::unique_ptr<Opt>> opts_;
};

// ---- shared option groups ----

void presentationOptions(Options& o) {
  o.add("presentation", "", "presentation JSON file");
  o.add("preset", "", "built-in presentation: c5, tree, square, cycleN, freeN, completeN");
  o.add("cap", std::to_string(kDefaultBallCap), "ball vertex cap");
}

void graphOption(Options& o) { o.add("graph", "", "explicit median graph JSON file (instead of a presentation)"); }

void deltaOptions(Options& o) {
  o.add("delta", "estimate", "hyperbolicity constant, or 'estimate'");
  o.add("delta-radius", "2", "ball radius for the delta estimate");
  o.add("geodesic-cap", "4096", "geodesics enumerated per pair");
}

void geoOptions(Options& o) {
  o.add("tier", "strict", "strict | slack");
  deltaOptions(o);
  o.add("window", "4", "extra target depths past the window start");
  o.add("slack", "auto", "depth between radius and window start (auto: 2 delta + 2)");
  o.add("window-start", "auto", "explicit window start depth");
}

DefiningGraph presetGraph(const std::string& name) {
  auto numbered = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const auto rest = name.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 3) return std::nullopt;
    return static_cast<std::size_t>(std::stoul(rest));
  };
  if (name == "c5") return cycleGraph(5);
  if (name == "tree") return edgelessGraph(3);
  if (name == "square") return completeGraph(2);
  if (auto n = numbered("cycle")) return cycleGraph(*n);
  if (auto n = numbered("free")) return edgelessGraph(*n);
  if (auto n = numbered("complete")) return completeGraph(*n);
  throw InputError("option --preset: unknown preset '" + name + "'");
}

Racg loadGroup(const Options& o) {
  const auto& path = o.str("presentation");
  const auto& preset = o.str("preset");
  if (!path.empty() && !preset.empty()) throw InputError("give only one of --presentation and --preset");
  if (!path.empty()) {
    try {
      return Racg(presentationFromJson(readJsonFile(path)));
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  if (!preset.empty()) return Racg(presetGraph(preset));
  throw InputError("one of --presentation or --preset is required");
}

ExplicitGraph loadGraph(const std::string& path) {
  try {
    return graphFromJson(readJsonFile(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

RaySpec loadSpec(const Racg& group, const Options& o, const std::string& name) {
  const auto& path = o.str(name);
  if (path.empty()) throw InputError("option --" + name + " is required");
  try {
    return raySpecFromJson(group, readJsonFile(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

GroupElement parseVertex(const Racg& group, const Options& o, const std::string& name) {
  try {
    return group.parse(o.str(name));
  } catch (const InputError& e) {
    throw InputError("option --" + name + ": " + e.what());
  }
}

std::size_t ballCap(const Options& o) { return static_cast<std::size_t>(o.integer("cap", 1)); }

struct ResolvedDelta {
  int value = 0;
  bool estimated = false;
  bool capped = false;
};

ResolvedDelta resolveDelta(const Racg& group, const Options& o) {
  if (o.str("delta") != "estimate") return {o.small("delta", 0), false, false};
  const int radius = o.small("delta-radius", 0);
  const RacgComplex complex(group);
  const auto ball = loadOrBuildBall(group, radius, ballCap(o));
  // The action is transitive on vertices, so anchoring at the identity is enough.
  auto est = deltaEstimate(complex, {group.identity()}, ball.vertices(),
                           static_cast<std::size_t>(o.integer("geodesic-cap", 1)), radius);
  return {est.value, true, est.capped};
}

Json deltaJson(const ResolvedDelta& d) {
  return Json{{"value", d.value}, {"source", d.estimated ? "estimate" : "given"}, {"capped", d.capped}};
}

GeoSetOptions geoSetOptions(const Options& o, int delta) {
  GeoSetOptions g;
  const auto& tier = o.str("tier");
  if (tier == "strict") g.tier = GeoTier::Strict;
  else if (tier == "slack") g.tier = GeoTier::Slack;
  else throw InputError("option --tier: expected strict or slack");
  g.delta = delta;
  g.window = o.small("window", 0);
  g.slack = o.optionalInt("slack").value_or(-1);
  g.windowStart = o.optionalInt("window-start");
  return g;
}

// ---- vertex codecs so query commands run over either provider ----

struct RacgCodec {
  const Racg& group;
  GroupElement parse(const std::string& text, const std::string& name) const {
    try {
      return group.parse(text);
    } catch (const InputError& e) {
      throw InputError("option --" + name + ": " + e.what());
    }
  }
  Json vertex(const GroupElement& g) const { return group.format(g); }
  Json wall(const Hyperplane& h) const { return group.format(h.reflection); }
};

struct GraphCodec {
  int vertexCount;
  int parse(const std::string& text, const std::string& name) const {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (text.empty() || used != text.size() || v < 0 || v >= vertexCount) {
      throw InputError("option --" + name + ": expected a vertex id in [0, " + std::to_string(vertexCount) + ")");
    }
    return v;
  }
  Json vertex(int v) const { return v; }
  Json wall(int h) const { return h; }
};

template <class P, class Codec>
Json vertexList(const Codec& codec, const std::vector<typename P::Vertex>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(codec.vertex(v));
  return out;
}

template <class F>
Outcome onProvider(const Options& o, F&& body) {
  const auto& graphPath = o.str("graph");
  if (!graphPath.empty()) {
    if (!o.str("presentation").empty() || !o.str("preset").empty()) {
      throw InputError("give either --graph or a presentation, not both");
    }
    ExplicitComplex complex(loadGraph(graphPath));
    return body(complex, GraphCodec{complex.graph().vertexCount()});
  }
  const Racg group = loadGroup(o);
  RacgComplex complex(group);
  return body(complex, RacgCodec{complex.group()});
}

// ---- commands ----

Outcome cmdValidate(const Options& o) {
  Outcome out;
  if (!o.str("graph").empty()) {
    const auto graph = loadGraph(o.str("graph"));
    out.results["vertices"] = graph.vertexCount();
    out.results["edges"] = graph.edges().size();
    const auto check = validateMedian(graph);
    out.results["median"] = check.isMedian;
    out.results["witness"] = check.witness ? Json(*check.witness) : Json(nullptr);
    out.results["witnessMedians"] = check.witnessMedians;
    if (check.isMedian) {
      const auto classes = thetaClasses(graph);
      Json sizes = Json::array();
      std::vector<int> count(classes.classCount(), 0);
      for (int c : classes.classOfEdge) ++count[static_cast<std::size_t>(c)];
      for (int c : count) sizes.push_back(c);
      out.results["thetaClasses"] = classes.classCount();
      out.results["classSizes"] = sizes;
    }
    return out;
  }
  const Racg group = loadGroup(o);
  const auto& g = group.graph();
  out.results["rank"] = g.rank();
  out.results["generators"] = g.generators();
  out.results["commuting"] = presentationToJson(g)["commuting"];
  out.results["hyperbolic"] = isHyperbolicPresentation(g);

  // Sampled duality check: distance == number of separating walls.
  const int radius = o.small("check-radius", 0);
  const auto samples = o.integer("samples", 0);
  std::mt19937_64 rng(static_cast<std::uint64_t>(o.integer("seed", 0)));
  const auto ball = loadOrBuildBall(group, radius, ballCap(o));
  std::size_t violations = 0;
  for (long long i = 0; i < samples; ++i) {
    const auto& a = ball.vertices()[rng() % ball.size()];
    const auto& b = ball.vertices()[rng() % ball.size()];
    if (static_cast<std::size_t>(group.distance(a, b)) != group.wallsSeparating(a, b).size()) ++violations;
  }
  out.results["selfCheck"] = Json{{"samples", samples}, {"radius", radius}, {"violations", violations}};
  return out;
}

Outcome cmdBall(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const int radius = o.small("radius", 0);
  const auto ball = loadOrBuildBall(group, radius, ballCap(o));
  Json spheres = Json::array();
  for (int r = 0; r <= radius; ++r) spheres.push_back(ball.sphereStart(r + 1) - ball.sphereStart(r));
  out.results["radius"] = radius;
  out.results["size"] = ball.size();
  out.results["sphereSizes"] = spheres;
  out.results["edges"] = ball.edges().size() / 2;
  if (o.flag("list")) out.results["vertices"] = elementsToJson(group, ball.vertices());
  return out;
}

Outcome cmdDist(const Options& o) {
  return onProvider(o, [&](const auto& c, const auto& codec) {
    Outcome out;
    auto u = codec.parse(o.str("word1"), "word1");
    auto v = codec.parse(o.str("word2"), "word2");
    out.results["distance"] = c.distance(u, v);
    return out;
  });
}

Outcome cmdMedian(const Options& o) {
  return onProvider(o, [&](const auto& c, const auto& codec) {
    Outcome out;
    auto u = codec.parse(o.str("word1"), "word1");
    auto v = codec.parse(o.str("word2"), "word2");
    auto w = codec.parse(o.str("word3"), "word3");
    out.results["median"] = codec.vertex(median(c, u, v, w));
    return out;
  });
}

Outcome cmdInterval(const Options& o) {
  return onProvider(o, [&](const auto& c, const auto& codec) {
    using P = std::decay_t<decltype(c)>;
    Outcome out;
    auto u = codec.parse(o.str("word1"), "word1");
    auto v = codec.parse(o.str("word2"), "word2");
    auto iv = interval(c, u, v);
    out.results["size"] = iv.size();
    out.results["vertices"] = vertexList<P>(codec, iv);
    return out;
  });
}

Outcome cmdWalls(const Options& o) {
  return onProvider(o, [&](const auto& c, const auto& codec) {
    Outcome out;
    auto u = codec.parse(o.str("word1"), "word1");
    auto v = codec.parse(o.str("word2"), "word2");
    Json walls = Json::array();
    for (const auto& h : c.wallsSeparating(u, v)) walls.push_back(codec.wall(h));
    out.results["count"] = walls.size();
    out.results["walls"] = walls;
    return out;
  });
}

Outcome cmdProject(const Options& o) {
  return onProvider(o, [&](const auto& c, const auto& codec) {
    using P = std::decay_t<decltype(c)>;
    using V = typename P::Vertex;
    Outcome out;
    if (o.list("y").empty()) throw InputError("option --y: at least one vertex of the hull seed is required");
    std::vector<V> seed;
    for (const auto& y : o.list("y")) seed.push_back(codec.parse(y, "y"));
    const auto hull = convexHull(c, seed);
    const auto v = codec.parse(o.str("v"), "v");
    const auto p = project(c, v, hull);
    out.results["hullSize"] = hull.size();
    out.results["projection"] = codec.vertex(p);
    out.results["distance"] = distanceToSet(c, v, hull);
    out.results["separatingWalls"] = wallsSeparatingFromSet(c, v, hull).size();
    if (!o.str("neighbor").empty()) {
      const auto w = codec.parse(o.str("neighbor"), "neighbor");
      if (c.distance(v, w) != 1) throw DomainError("option --neighbor: not adjacent to --v");
      const auto e = projectEdge(c, v, w, hull);
      out.results["edge"] = Json{{"case", e.lemmaCase},
                                 {"wall", codec.wall(e.wall)},
                                 {"uProjection", codec.vertex(e.uProjection)},
                                 {"vProjection", codec.vertex(e.vProjection)}};
    }
    return out;
  });
}

Outcome cmdDelta(const Options& o) {
  Outcome out;
  const auto cap = static_cast<std::size_t>(o.integer("geodesic-cap", 1));
  const unsigned workers = static_cast<unsigned>(o.small("workers", 1));
  DeltaEstimate est;
  if (!o.str("graph").empty()) {
    ExplicitComplex complex(loadGraph(o.str("graph")));
    std::vector<int> all;
    for (int v = 0; v < complex.graph().vertexCount(); ++v) all.push_back(v);
    est = deltaEstimate(complex, all, all, cap, 0, workers);
  } else {
    const Racg group = loadGroup(o);
    const int radius = o.small("radius", 0);
    const auto ball = loadOrBuildBall(group, radius, ballCap(o));
    est = deltaEstimate(RacgComplex(group), {group.identity()}, ball.vertices(), cap, radius, workers);
    out.results["radius"] = radius;
  }
  out.results["delta"] = est.value;
  out.results["trianglesChecked"] = est.trianglesChecked;
  out.results["capped"] = est.capped;
  out.truncated = est.capped;
  return out;
}

Outcome cmdRayValidate(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto spec = loadSpec(group, o, "spec");
  const auto v = validateRaySpec(group, spec, static_cast<std::size_t>(o.integer("depth-cap", 1)),
                                 o.small("cert-power", 1));
  out.results["spec"] = raySpecToJson(group, spec);
  out.results["valid"] = v.valid;
  out.results["reason"] = v.reason;
  out.results["failingPrefix"] = v.failingPrefix ? Json(*v.failingPrefix) : Json(nullptr);
  out.results["powerLengths"] = v.powerLengths;
  return out;
}

Outcome cmdGeoSet(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto spec = loadSpec(group, o, "spec");
  const auto x = parseVertex(group, o, "x");
  const int radius = o.small("radius", 0);
  const auto delta = resolveDelta(group, o);
  const auto opts = geoSetOptions(o, delta.value);
  const auto ball = loadOrBuildBall(group, radius, ballCap(o));
  const auto geo = geoSet(group, x, spec, radius, opts, ball);
  out.results["delta"] = deltaJson(delta);
  out.results["tier"] = tierName(geo.tier);
  out.results["windowStart"] = geo.windowStart;
  out.results["windowEnd"] = geo.windowEnd;
  out.results["size"] = geo.members.size();
  out.results["members"] = elementsToJson(group, geo.members);
  out.results["unstable"] = elementsToJson(group, geo.unstable);
  out.truncated = delta.capped;
  return out;
}

Outcome cmdGeoDiff(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto spec = loadSpec(group, o, "spec");
  const auto x = parseVertex(group, o, "x");
  const auto y = parseVertex(group, o, "y");
  const auto delta = resolveDelta(group, o);
  const auto opts = geoSetOptions(o, delta.value);
  const auto report = geoDiffExperiment(group, x, y, spec, o.small("rmax", 1), opts,
                                        o.small("stabilization", 1));
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    steps.push_back(Json{{"radius", s.radius}, {"size", s.size},
                         {"difference", elementsToJson(group, s.difference)}});
  }
  out.results["delta"] = deltaJson(delta);
  out.results["tier"] = tierName(opts.tier);
  out.results["windowStart"] = report.windowStart;
  out.results["windowEnd"] = report.windowEnd;
  out.results["steps"] = steps;
  out.results["verdict"] = report.stabilized ? "stabilized" : "not stabilized";
  out.results["monotone"] = report.monotone;
  out.results["plateau"] = report.stabilized ? Json(report.plateau) : Json(nullptr);
  out.truncated = delta.capped;
  return out;
}

SurrogateOptions surrogateOptions(const Options& o) {
  SurrogateOptions s;
  s.threshold = o.small("threshold", 1);
  s.slack = o.optionalInt("slack").value_or(-1);
  return s;
}

void hfOptions(Options& o) {
  o.add("depth", "12", "ray depth explored");
  o.add("geodesic-cap", "4096", "geodesics enumerated per target");
  o.add("threshold", "3", "distinct start distances required for recurrence");
  o.add("slack", "auto", "frontier slack (auto: 2 |period|)");
}

Outcome cmdHfLeast(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto spec = loadSpec(group, o, "spec");
  const int nMax = o.small("nmax", 1);
  const auto s = approxS(group, spec, o.small("depth", 1),
                         static_cast<std::size_t>(o.integer("geodesic-cap", 1)), nMax);
  const auto profiles = leastStrings(s, spec, nMax, surrogateOptions(o));
  Json list = Json::array();
  for (const auto& p : profiles) {
    list.push_back(Json{{"n", p.n},
                        {"s", wordToJson(group.graph(), p.s)},
                        {"k", p.k},
                        {"v", group.format(p.v)},
                        {"T", elementsToJson(group, p.T)},
                        {"evidence", p.evidence},
                        {"unconstrainedAgrees", p.unconstrainedAgrees}});
  }
  const auto z = zDiagnostic(profiles);
  out.results["frontier"] = s.frontier;
  out.results["geodesics"] = s.geodesicCount;
  out.results["profiles"] = list;
  out.results["z"] = Json{{"k", z.k}, {"verdict", z.verdict},
                          {"note", "finite-depth observation; membership in Z is not asserted"}};
  out.truncated = s.truncated;
  return out;
}

Json fingerprintJson(const Racg& group, const Fingerprint& fp) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fp.hash(group)));
  return Json{{"n", fp.n}, {"radius", fp.radius}, {"g", group.format(fp.g)},
              {"H", elementsToJson(group, fp.H)}, {"hash", hex}};
}

Outcome cmdHfFp(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto spec = loadSpec(group, o, "spec");
  const auto fp = fingerprint(group, spec, o.small("n", 1), o.small("depth", 1), o.small("radius", 0),
                              static_cast<std::size_t>(o.integer("geodesic-cap", 1)), surrogateOptions(o));
  out.results = fingerprintJson(group, fp);
  return out;
}

Outcome cmdHfCmp(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto spec1 = loadSpec(group, o, "spec1");
  const auto spec2 = loadSpec(group, o, "spec2");
  const int n = o.small("n", 1);
  const int depth = o.small("depth", 1);
  const int radius = o.small("radius", 0);
  const auto cap = static_cast<std::size_t>(o.integer("geodesic-cap", 1));
  const auto fp1 = fingerprint(group, spec1, n, depth, radius, cap, surrogateOptions(o));
  const auto fp2 = fingerprint(group, spec2, n, depth, radius, cap, surrogateOptions(o));
  const auto cmp = compareFingerprints(group, fp1, fp2, o.small("search", 0));
  out.results["first"] = fingerprintJson(group, fp1);
  out.results["second"] = fingerprintJson(group, fp2);
  out.results["related"] = cmp.related;
  out.results["witness"] = cmp.witness ? Json(group.format(*cmp.witness)) : Json(nullptr);
  out.results["agreementRadius"] = cmp.agreementRadius;
  out.results["candidatesTried"] = cmp.candidatesTried;
  out.results["inference"] = "related fingerprints are necessary, not sufficient, for equivalent boundary points";
  return out;
}

Outcome cmdHfKBound(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const auto delta = resolveDelta(group, o);
  out.results["K"] = kBound(group, delta.value, ballCap(o));
  if (delta.estimated) out.results["delta"] = deltaJson(delta);
  out.truncated = delta.capped;
  return out;
}

Outcome cmdExportDot(const Options& o) {
  Outcome out;
  const Racg group = loadGroup(o);
  const int radius = o.small("radius", 0);
  DotOptions dot;
  dot.nodeCap = static_cast<std::size_t>(o.integer("node-cap", 1));
  const auto ball = loadOrBuildBall(group, radius, std::min(ballCap(o), dot.nodeCap + 1));
  std::vector<GroupElement> highlight;
  if (!o.str("spec").empty()) {
    const auto spec = loadSpec(group, o, "spec");
    const auto delta = resolveDelta(group, o);
    const auto report = geoDiffExperiment(group, parseVertex(group, o, "x"), parseVertex(group, o, "y"),
                                          spec, o.small("rmax", 1), geoSetOptions(o, delta.value));
    highlight = report.steps.back().difference;
  }
  out.text = exportDot(group, ball, dot, highlight);
  return out;
}

using Handler = std::function<Outcome(const Options&)>;

struct Registered {
  CLI::App* app;
  std::unique_ptr<Options> options;
  Handler handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cube-complex geometry and boundary fingerprints on right-angled Coxeter groups",
               "cubemedian"};
  app.require_subcommand(1);
  std::string outPath;
  std::vector<Registered> commands;

  auto add = [&](const std::string& name, const std::string& help, auto&& setup, Handler handler) {
    auto* sub = app.add_subcommand(name, help);
    auto opts = std::make_unique<Options>(sub, name);
    setup(*opts);
    sub->add_option("--out", outPath, "write the report here instead of stdout");
    commands.push_back({sub, std::move(opts), std::move(handler)});
  };
  auto words = [](int count) {
    return [count](Options& o) {
      presentationOptions(o);
      graphOption(o);
      for (int i = 1; i <= count; ++i) o.add("word" + std::to_string(i), "", "vertex (word, or id with --graph)");
    };
  };

  add("validate", "check a presentation or a median graph",
      [](Options& o) {
        presentationOptions(o);
        graphOption(o);
        o.add("check-radius", "3", "ball radius for the sampled duality check");
        o.add("samples", "200", "sampled pairs");
        o.add("seed", "1", "random seed");
      },
      cmdValidate);
  add("ball", "materialize a ball around the identity",
      [](Options& o) {
        presentationOptions(o);
        o.add("radius", "2", "ball radius");
        o.addFlag("list", "include the vertex list");
      },
      cmdBall);
  add("dist", "distance between two vertices", words(2), cmdDist);
  add("median", "median of three vertices", words(3), cmdMedian);
  add("interval", "vertices on geodesics between two vertices", words(2), cmdInterval);
  add("walls", "walls separating two vertices", words(2), cmdWalls);
  add("project", "nearest-point projection to the convex hull of --y vertices",
      [](Options& o) {
        presentationOptions(o);
        graphOption(o);
        o.addList("y", "hull seed vertex (repeatable)");
        o.add("v", "", "vertex to project");
        o.add("neighbor", "", "neighbor of --v for the edge projection report");
      },
      cmdProject);
  add("delta", "thin-triangle estimate of the hyperbolicity constant",
      [](Options& o) {
        presentationOptions(o);
        graphOption(o);
        o.add("radius", "2", "corner ball radius");
        o.add("geodesic-cap", "4096", "geodesics enumerated per side");
        o.add("workers", "1", "worker threads");
      },
      cmdDelta);
  add("ray-validate", "check that a ray spec describes a geodesic ray",
      [](Options& o) {
        presentationOptions(o);
        o.add("spec", "", "ray spec JSON file");
        o.add("depth-cap", "24", "prefix depth checked");
        o.add("cert-power", "6", "period powers checked");
      },
      cmdRayValidate);
  add("geoset", "truncated interval from x toward a boundary point",
      [](Options& o) {
        presentationOptions(o);
        o.add("spec", "", "ray spec JSON file");
        o.add("x", "", "basepoint word");
        o.add("radius", "3", "query radius");
        geoOptions(o);
      },
      cmdGeoSet);
  add("geodiff", "compare truncated intervals from two basepoints",
      [](Options& o) {
        presentationOptions(o);
        o.add("spec", "", "ray spec JSON file");
        o.add("x", "", "first basepoint word");
        o.add("y", "", "second basepoint word");
        o.add("rmax", "6", "largest radius");
        o.add("stabilization", "3", "trailing radii that must agree");
        geoOptions(o);
      },
      cmdGeoDiff);
  add("hf-least", "least recurring color strings along a boundary point",
      [](Options& o) {
        presentationOptions(o);
        o.add("spec", "", "ray spec JSON file");
        o.add("nmax", "4", "longest string");
        hfOptions(o);
      },
      cmdHfLeast);
  add("hf-fp", "fingerprint of a boundary point at length n",
      [](Options& o) {
        presentationOptions(o);
        o.add("spec", "", "ray spec JSON file");
        o.add("n", "2", "string length");
        o.add("radius", "3", "fingerprint radius");
        hfOptions(o);
      },
      cmdHfFp);
  add("hf-cmp", "search for a translation relating two fingerprints",
      [](Options& o) {
        presentationOptions(o);
        o.add("spec1", "", "first ray spec JSON file");
        o.add("spec2", "", "second ray spec JSON file");
        o.add("n", "2", "string length");
        o.add("radius", "3", "fingerprint radius");
        o.add("search", "2", "translation search radius");
        hfOptions(o);
      },
      cmdHfCmp);
  add("hf-kbound", "size of ball(6 delta)",
      [](Options& o) {
        presentationOptions(o);
        deltaOptions(o);
      },
      cmdHfKBound);
  add("export-dot", "Graphviz rendering of a ball, optionally with a geodiff overlay",
      [](Options& o) {
        presentationOptions(o);
        o.add("radius", "2", "ball radius");
        o.add("node-cap", "5000", "largest drawable ball");
        o.add("spec", "", "ray spec JSON file for the overlay");
        o.add("x", "", "first basepoint word");
        o.add("y", "", "second basepoint word");
        o.add("rmax", "3", "overlay radius");
        geoOptions(o);
      },
      cmdExportDot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  for (auto& c : commands) {
    if (!c.app->parsed()) continue;
    try {
      Outcome result = c.handler(*c.options);
      std::string text;
      if (result.text) {
        text = *result.text;
      } else {
        Json report;
        report["command"] = c.options->command();
        report["config"] = c.options->config();
        report["results"] = std::move(result.results);
        report["truncated"] = result.truncated;
        text = report.dump(2) + "\n";
      }
      if (outPath.empty()) {
        out << text;
      } else {
        std::ofstream file(outPath, std::ios::binary);
        if (!file) throw InputError("option --out: cannot write " + outPath);
        file << text;
      }
      return 0;
    } catch (const ResourceError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::bad_alloc&) {
      err << "error: out of memory\n";
      return 2;
    }
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace cubemedian
