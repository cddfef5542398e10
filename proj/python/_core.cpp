#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cubemedian/boundary.hpp"
#include "cubemedian/cli.hpp"
#include "cubemedian/complex.hpp"
#include "cubemedian/errors.hpp"
#include "cubemedian/geometry.hpp"
#include "cubemedian/hyperfinite.hpp"
#include "cubemedian/io.hpp"
#include "cubemedian/medgraph.hpp"
#include "cubemedian/racg.hpp"

namespace py = pybind11;
using namespace cubemedian;

namespace {

// Specs and presentations arrive as dicts or JSON text.
Json toJson(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parseJsonText(o.cast<std::string>(), "argument");
  return parseJsonText(py::module_::import("json").attr("dumps")(o).cast<std::string>(), "argument");
}

py::object fromJson(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

class Group {
 public:
  explicit Group(DefiningGraph graph) : racg_(std::move(graph)), complex_(racg_) {}

  const Racg& racg() const { return racg_; }
  const RacgComplex& complex() const { return complex_; }

  GroupElement el(const std::string& w) const { return racg_.parse(w); }
  std::string str(const GroupElement& g) const { return racg_.format(g); }
  std::vector<std::string> strs(const std::vector<GroupElement>& gs) const {
    std::vector<std::string> out;
    out.reserve(gs.size());
    for (const auto& g : gs) out.push_back(str(g));
    return out;
  }
  RaySpec spec(const py::object& o) const { return raySpecFromJson(racg_, toJson(o)); }

 private:
  Racg racg_;
  RacgComplex complex_;
};

py::dict profileDict(const Group& g, const LeastStringProfile& p) {
  py::dict d;
  d["n"] = p.n;
  d["s"] = fromJson(wordToJson(g.racg().graph(), p.s));
  d["T"] = g.strs(p.T);
  d["v"] = g.str(p.v);
  d["k"] = p.k;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Right-angled Coxeter group geometry, boundary intervals and fingerprints";

  // Translators are tried newest first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<RegionError>(m, "RegionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<Group>(m, "Group")
      .def(py::init([](const py::object& presentation) { return Group(presentationFromJson(toJson(presentation))); }),
           py::arg("presentation"))
      .def_static("cycle", [](std::size_t n) { return Group(cycleGraph(n)); })
      .def_static("free", [](std::size_t n) { return Group(edgelessGraph(n)); })
      .def_static("complete", [](std::size_t n) { return Group(completeGraph(n)); })
      .def_property_readonly("rank", [](const Group& g) { return g.racg().rank(); })
      .def_property_readonly("generators", [](const Group& g) { return g.racg().graph().generators(); })
      .def("normal_form", [](const Group& g, const std::string& w) { return g.str(g.el(w)); })
      .def("distance", [](const Group& g, const std::string& u, const std::string& v) {
        return g.racg().distance(g.el(u), g.el(v));
      })
      .def("walls", [](const Group& g, const std::string& u, const std::string& v) {
        std::vector<std::string> out;
        for (const auto& h : g.racg().wallsSeparating(g.el(u), g.el(v))) out.push_back(g.str(h.reflection));
        return out;
      })
      .def("ball", [](const Group& g, int r, std::size_t cap) { return g.strs(g.racg().ball(r, cap).vertices()); },
           py::arg("radius"), py::arg("cap") = kDefaultBallCap)
      .def("sphere_sizes", [](const Group& g, int r) { return g.racg().sphereSizes(r); })
      .def("median", [](const Group& g, const std::string& u, const std::string& v, const std::string& w) {
        return g.str(median(g.complex(), g.el(u), g.el(v), g.el(w)));
      })
      .def("interval", [](const Group& g, const std::string& u, const std::string& v) {
        return g.strs(interval(g.complex(), g.el(u), g.el(v)));
      })
      .def("is_geodesic", [](const Group& g, const std::vector<std::string>& path) {
        Path<GroupElement> p;
        for (const auto& w : path) p.vertices.push_back(g.el(w));
        return isGeodesic(g.complex(), p).geodesic;
      })
      .def("hull", [](const Group& g, const std::vector<std::string>& seed) {
        std::vector<GroupElement> s;
        for (const auto& w : seed) s.push_back(g.el(w));
        return g.strs(convexHull(g.complex(), s).vertices());
      })
      .def("project", [](const Group& g, const std::string& v, const std::vector<std::string>& seed) {
        std::vector<GroupElement> s;
        for (const auto& w : seed) s.push_back(g.el(w));
        return g.str(project(g.complex(), g.el(v), convexHull(g.complex(), s)));
      }, "Gate projection onto the convex hull of seed.")
      .def("delta", [](const Group& g, int radius, std::size_t cap) {
        const auto corners = g.racg().ball(radius);
        const auto est = deltaEstimate(g.complex(), {g.racg().identity()}, corners.vertices(), cap, radius);
        py::dict d;
        d["value"] = est.value;
        d["triangles"] = est.trianglesChecked;
        d["capped"] = est.capped;
        return d;
      }, py::arg("radius"), py::arg("cap") = 4096)
      .def("validate_ray", [](const Group& g, const py::object& spec) {
        const auto r = validateRaySpec(g.racg(), g.spec(spec), 24, 6);
        py::dict d;
        d["valid"] = r.valid;
        d["reason"] = r.reason;
        return d;
      })
      .def("materialize", [](const Group& g, const py::object& spec, std::size_t n) {
        return g.strs(materialize(g.racg(), g.spec(spec), n).vertices);
      })
      .def("fellow_travel", [](const Group& g, const py::object& a, const py::object& b, std::size_t depth, int delta) {
        const auto r = fellowTravel(g.racg(), g.spec(a), g.spec(b), depth, delta);
        py::dict d;
        d["verdict"] = verdictName(r.verdict);
        d["max_distance"] = r.maxDistance;
        d["threshold"] = r.threshold;
        return d;
      })
      .def("geodiff", [](const Group& g, const std::string& x, const std::string& y, const py::object& spec,
                         int maxRadius, int delta, bool slack) {
        GeoSetOptions o;
        o.delta = delta;
        o.tier = slack ? GeoTier::Slack : GeoTier::Strict;
        const auto r = geoDiffExperiment(g.racg(), g.el(x), g.el(y), g.spec(spec), maxRadius, o);
        std::vector<std::size_t> sizes;
        for (const auto& st : r.steps) sizes.push_back(st.size);
        py::dict d;
        d["sizes"] = sizes;
        d["stabilized"] = r.stabilized;
        d["plateau"] = r.stabilized ? py::cast(r.plateau) : py::none();
        d["monotone"] = r.monotone;
        return d;
      }, py::arg("x"), py::arg("y"), py::arg("spec"), py::arg("max_radius"), py::arg("delta") = 0,
         py::arg("slack") = false)
      .def("least_strings", [](const Group& g, const py::object& spec, int depth, int nMax) {
        py::list out;
        for (const auto& p : leastStrings(g.racg(), g.spec(spec), depth, nMax)) out.append(profileDict(g, p));
        return out;
      }, py::arg("spec"), py::arg("depth"), py::arg("n_max"))
      .def("fingerprint", [](const Group& g, const py::object& spec, int n, int depth, int radius) {
        const auto f = fingerprint(g.racg(), g.spec(spec), n, depth, radius);
        py::dict d;
        d["n"] = f.n;
        d["g"] = g.str(f.g);
        d["H"] = g.strs(f.H);
        return d;
      }, py::arg("spec"), py::arg("n"), py::arg("depth"), py::arg("radius"))
      .def("compare_fingerprints", [](const Group& g, const py::object& a, const py::object& b, int n, int depth,
                                      int radius, int search) {
        const auto fa = fingerprint(g.racg(), g.spec(a), n, depth, radius);
        const auto fb = fingerprint(g.racg(), g.spec(b), n, depth, radius);
        const auto c = compareFingerprints(g.racg(), fa, fb, search);
        py::dict d;
        d["related"] = c.related;
        d["witness"] = c.witness ? py::cast(g.str(*c.witness)) : py::none();
        return d;
      }, py::arg("first"), py::arg("second"), py::arg("n"), py::arg("depth"), py::arg("radius"), py::arg("search"))
      .def("kbound", [](const Group& g, int delta) { return kBound(g.racg(), delta); });

  m.def("validate_median", [](int vertices, const std::vector<std::pair<int, int>>& edges) {
    const auto r = validateMedian(ExplicitGraph(vertices, edges));
    py::dict d;
    d["is_median"] = r.isMedian;
    d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
    return d;
  }, py::arg("vertices"), py::arg("edges"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs one CLI subcommand; returns (exit code, stdout, stderr).");
}
