#include "fqha/serialize.hpp"

namespace fqha {

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()},
                {"primitive", f.primitive()}};
}

json pointset_to_json(const PointSet& s) {
    return json{{"field", field_to_json(*s.field())},
                {"dim", s.dim()},
                {"indices", s.indices()}};
}

PointSet pointset_from_json(const json& j, FieldPtr f) {
    if (!f) f = Field::make(j.at("field").at("p").get<long long>(),
                            j.at("field").at("k").get<int>());
    PointSet out(f, j.at("dim").get<int>());
    for (long long idx : j.at("indices").get<std::vector<long long>>()) out.insert(idx);
    return out;
}

json variety_to_json(const VarietySpec& v) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SphereSpec>)
                return json{{"type", "sphere"}, {"radius", s.radius}, {"center", s.center}};
            else if constexpr (std::is_same_v<T, ParaboloidSpec>)
                return json{{"type", "paraboloid"}, {"beta", s.beta}};
            else if constexpr (std::is_same_v<T, ConeSpec>)
                return json{{"type", "cone"}};
            else if constexpr (std::is_same_v<T, HyperplaneSpec>)
                return json{{"type", "hyperplane"}, {"normal", s.normal}, {"c", s.c}};
            else
                return json{{"type", "affine_subspace"}, {"basis", s.basis},
                            {"offset", s.offset}};
        },
        v);
}

VarietySpec variety_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "sphere")
        return SphereSpec{j.at("radius").get<int>(),
                          j.value("center", Point{})};
    if (type == "paraboloid") return ParaboloidSpec{j.at("beta").get<int>()};
    if (type == "cone") return ConeSpec{};
    if (type == "hyperplane")
        return HyperplaneSpec{j.at("normal").get<Point>(), j.at("c").get<int>()};
    if (type == "affine_subspace")
        return AffineSubspaceSpec{j.at("basis").get<std::vector<Point>>(),
                                  j.at("offset").get<Point>()};
    throw ConfigError("unknown variety type: " + type);
}

namespace {

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::Counting: return "dc";
        case Measure::Normalized: return "dn";
        case Measure::Surface: return "dsigma";
    }
    return "dc";
}

Measure measure_of(const std::string& s) {
    if (s == "dc") return Measure::Counting;
    if (s == "dn") return Measure::Normalized;
    if (s == "dsigma") return Measure::Surface;
    throw ConfigError("unknown measure: " + s);
}

} // namespace

json table_to_json(const FunctionTable& t) {
    json values = json::array();
    if (t.full_space()) {
        for (long long i = 0; i < t.space_size(); ++i) {
            const cplx& v = t.values()[static_cast<size_t>(i)];
            if (v != cplx{}) values.push_back({i, v.real(), v.imag()});
        }
    } else {
        for (size_t i = 0; i < t.support().size(); ++i) {
            const cplx& v = t.values()[i];
            values.push_back({t.support()[i], v.real(), v.imag()});
        }
    }
    json support = t.full_space() ? json("full") : variety_to_json(*t.support_spec());
    return json{{"field", field_to_json(*t.field())},
                {"dim", t.dim()},
                {"support", support},
                {"measure", measure_name(t.measure())},
                {"values", values}};
}

FunctionTable table_from_json(const json& j, FieldPtr f) {
    if (!f) f = Field::make(j.at("field").at("p").get<long long>(),
                            j.at("field").at("k").get<int>());
    const int dim = j.at("dim").get<int>();
    Measure m = measure_of(j.at("measure").get<std::string>());
    if (j.at("support").is_string()) {
        FunctionTable t(f, dim, m);
        for (const auto& row : j.at("values"))
            t.set(row.at(0).get<long long>(),
                  cplx{row.at(1).get<double>(), row.at(2).get<double>()});
        return t;
    }
    VarietySpec spec = variety_from_json(j.at("support"));
    PointSet variety = enumerate_variety(f, dim, spec);
    FunctionTable t(f, dim, spec, variety, m);
    for (const auto& row : j.at("values"))
        t.set(row.at(0).get<long long>(),
              cplx{row.at(1).get<double>(), row.at(2).get<double>()});
    return t;
}

json incidence_report_to_json(const IncidenceReport& r) {
    return json{{"incidences", r.incidences},
                {"points", r.points},
                {"hyperplanes", r.hyperplanes},
                {"main_term", r.main_term},
                {"gap", r.gap},
                {"universal_bound", r.universal_bound},
                {"universal_holds", r.universal_holds},
                {"universal_ratio", r.universal_ratio},
                {"t", r.t},
                {"new_bound", r.new_bound},
                {"new_ratio", r.new_ratio},
                {"hypothesis_flags", r.hypothesis_flags}};
}

namespace {

json entries_to_json(const std::vector<ExponentEntry>& es) {
    json out = json::array();
    for (const auto& e : es)
        out.push_back({{"p", e.p.str()}, {"r", e.r.str()}, {"source", e.source}});
    return out;
}

} // namespace

json exponent_record_to_json(const ExponentRecord& r) {
    const char* rc = r.radius_class == RadiusClass::Zero        ? "zero"
                     : r.radius_class == RadiusClass::Square    ? "square"
                     : r.radius_class == RadiusClass::NonSquare ? "nonsquare"
                                                                : "primitive";
    return json{{"d", r.d},
                {"q_class", r.q_class},
                {"radius_class", rc},
                {"achieved", entries_to_json(r.achieved)},
                {"conjectured", entries_to_json(r.conjectured)},
                {"achieved_dual", entries_to_json(r.achieved_dual)},
                {"conjectured_dual", entries_to_json(r.conjectured_dual)}};
}

} // namespace fqha
