#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqha/distance.hpp"
#include "fqha/energy.hpp"
#include "fqha/exponents.hpp"
#include "fqha/fourier.hpp"
#include "fqha/incidence.hpp"
#include "fqha/lattice.hpp"
#include "fqha/suites.hpp"

namespace py = pybind11;
using namespace fqha;

namespace {

// exponents cross the boundary as (num, den); den == 0 encodes infinity
std::pair<long long, long long> encode(const LpExponent& e) {
    if (e.is_inf) return {1, 0};
    return {e.r.num, e.r.den};
}

LpExponent decode(std::pair<long long, long long> e) {
    if (e.second == 0) return LpExponent::infinity();
    return LpExponent::of(e.first, e.second);
}

RadiusClass radius_class_of(const std::string& s) {
    if (s == "zero") return RadiusClass::Zero;
    if (s == "square") return RadiusClass::Square;
    if (s == "nonsquare") return RadiusClass::NonSquare;
    if (s == "primitive") return RadiusClass::Primitive;
    throw InvalidParams("radius class must be zero/square/nonsquare/primitive");
}

py::dict check_dict(const Check& c) {
    py::dict d;
    d["id"] = c.id;
    d["pass"] = c.pass;
    d["observed"] = c.observed;
    d["threshold"] = c.threshold;
    d["detail"] = c.detail;
    return d;
}

// pybind11 holders cannot be shared_ptr-to-const; wrap the handle instead
struct PyField {
    FieldPtr f;
};

} // namespace

PYBIND11_MODULE(_fqha, m) {
    m.doc() = "finite-field harmonic analysis verification kernels";

    py::register_exception<Error>(m, "FqhaError");

    py::class_<PyField>(m, "Field")
        .def_static(
            "make",
            [](long long p, int k, long long q_cap) {
                return PyField{Field::make(p, k, q_cap)};
            },
            py::arg("p"), py::arg("k") = 1, py::arg("q_cap") = Field::kDefaultQCap)
        .def_property_readonly("p", [](const PyField& f) { return f.f->p(); })
        .def_property_readonly("k", [](const PyField& f) { return f.f->k(); })
        .def_property_readonly("q", [](const PyField& f) { return f.f->q(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.f->modulus(); })
        .def_property_readonly("primitive", [](const PyField& f) { return f.f->primitive(); })
        .def("add", [](const PyField& f, int a, int b) { return f.f->add(a, b); })
        .def("sub", [](const PyField& f, int a, int b) { return f.f->sub(a, b); })
        .def("neg", [](const PyField& f, int a) { return f.f->neg(a); })
        .def("mul", [](const PyField& f, int a, int b) { return f.f->mul(a, b); })
        .def("inv", [](const PyField& f, int a) { return f.f->inv(a); })
        .def("pow", [](const PyField& f, int a, long long e) { return f.f->pow(a, e); })
        .def("trace", [](const PyField& f, int a) { return f.f->trace(a); })
        .def("chi", [](const PyField& f, int x) { return f.f->chi(x); })
        .def("eta", [](const PyField& f, int x) { return f.f->eta(x); })
        .def("gauss_sum", [](const PyField& f) { return f.f->gauss_sum(); })
        .def("kloosterman", [](const PyField& f, int a, int b) { return f.f->kloosterman(a, b); })
        .def("log", [](const PyField& f, int a) { return f.f->log(a); });

    py::class_<PointSet>(m, "PointSet")
        .def(py::init([](const PyField& f, int dim, const std::vector<long long>& indices) {
                 PointSet s(f.f, dim);
                 for (long long i : indices) s.insert(i);
                 return s;
             }),
             py::arg("field"), py::arg("dim"), py::arg("indices") = std::vector<long long>{})
        .def_property_readonly("dim", &PointSet::dim)
        .def("__len__", &PointSet::size)
        .def("__contains__", &PointSet::contains)
        .def("insert", &PointSet::insert)
        .def("indices", &PointSet::indices);

    m.def("point_index",
          [](const PyField& f, const Point& x) { return point_index(*f.f, x); });
    m.def("index_point",
          [](const PyField& f, int dim, long long i) { return index_point(*f.f, dim, i); });
    m.def("quad_norm", [](const PyField& f, const Point& x) { return quad_norm(*f.f, x); });

    m.def(
        "sphere",
        [](const PyField& f, int dim, int radius) {
            return enumerate_variety(f.f, dim, SphereSpec{radius, {}});
        },
        py::arg("field"), py::arg("dim"), py::arg("radius"));
    m.def(
        "paraboloid",
        [](const PyField& f, int dim, int beta) {
            return enumerate_variety(f.f, dim, ParaboloidSpec{beta});
        },
        py::arg("field"), py::arg("dim"), py::arg("beta") = 0);
    m.def("sphere_sizes", [](const PyField& f, int dim) {
        std::map<int, long long> out = variety_sizes(f.f, dim);
        return out;
    });

    m.def("additive_energy", [](const PointSet& a) { return additive_energy(a); });
    m.def("right_angle_triples", &right_angle_triples);
    m.def("mu3_counts", [](const PointSet& a) { return mu3(a).counts; });
    m.def("distance_sets", [](const PointSet& a) {
        auto [d2, d3] = distance_sets(a);
        return std::make_pair(std::vector<int>(d2.begin(), d2.end()),
                              std::vector<int>(d3.begin(), d3.end()));
    });

    m.def("sphere_fourier_decay", [](const PyField& f, int dim, int t) {
        SphereDecay d = sphere_fourier_decay(f.f, dim, t);
        return std::make_pair(d.max_nonzero, d.ratio);
    });
    m.def("cone_l2_ratio", &cone_l2_ratio, py::arg("g"), py::arg("exploratory") = false);

    m.def("count_incidences",
          [](const PointSet& points, const std::vector<std::pair<Point, int>>& planes) {
              HyperplaneSet hs(points.field(), points.dim());
              for (const auto& [a, c] : planes) hs.add({a, c});
              IncidenceReport r = count_incidences(points, hs);
              py::dict d;
              d["incidences"] = r.incidences;
              d["points"] = r.points;
              d["hyperplanes"] = r.hyperplanes;
              d["main_term"] = r.main_term;
              d["gap"] = r.gap;
              d["universal_bound"] = r.universal_bound;
              d["universal_holds"] = r.universal_holds;
              return d;
          });

    m.def(
        "interpolate",
        [](std::pair<long long, long long> p0, std::pair<long long, long long> r0,
           std::pair<long long, long long> p1, std::pair<long long, long long> r1,
           std::pair<long long, long long> theta) {
            auto [p, r] = interpolate(decode(p0), decode(r0), decode(p1), decode(r1),
                                      Rat(theta.first, theta.second));
            return std::make_pair(encode(p), encode(r));
        },
        "Riesz-Thorin interpolation on (num, den) pairs; den 0 means infinity");

    m.def("exponent_catalog", [](int d, int q_class, const std::string& radius_class) {
        ExponentRecord rec = exponent_catalog(d, q_class, radius_class_of(radius_class));
        auto entries = [](const std::vector<ExponentEntry>& v) {
            py::list out;
            for (const auto& e : v) {
                py::dict x;
                x["p"] = e.p.str();
                x["r"] = e.r.str();
                x["source"] = e.source;
                out.append(x);
            }
            return out;
        };
        py::dict d2;
        d2["d"] = rec.d;
        d2["q_class"] = rec.q_class;
        d2["achieved"] = entries(rec.achieved);
        d2["conjectured"] = entries(rec.conjectured);
        d2["achieved_dual"] = entries(rec.achieved_dual);
        d2["conjectured_dual"] = entries(rec.conjectured_dual);
        return d2;
    });

    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, uint64_t seed, bool exploratory,
           const std::string& out_dir) {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.exploratory = exploratory;
            cfg.out_dir = out_dir;
            SuiteResult r = out_dir.empty() ? run_suite(name, cfg)
                                            : run_suites({name}, cfg).front();
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed();
            py::list checks;
            for (const auto& c : r.checks) checks.append(check_dict(c));
            d["checks"] = checks;
            d["csv"] = to_csv(r);
            return d;
        },
        py::arg("name"), py::arg("seed") = RunConfig{}.seed,
        py::arg("exploratory") = false, py::arg("out_dir") = std::string{});
}
