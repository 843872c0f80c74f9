#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gbf/measures.hpp"

namespace gbf::measures {

namespace {

using nlohmann::json;

Density density_from_json(const json& j) {
    std::string name = j.at("name").get<std::string>();
    json params = j.value("params", json::object());
    if (name == "lomax2") return Density::lomax2();
    if (name == "expneg") return Density::expneg(params.at("c").get<double>());
    if (name == "powerexp")
        return Density::powerexp(params.at("p").get<double>(), params.at("c").get<double>());
    if (name == "custom-table")
        return Density::custom_table(params.at("t").get<std::vector<double>>(),
                                     params.at("value").get<std::vector<double>>());
    throw std::domain_error("unknown density name: " + name);
}

json density_to_json(const Density& d) {
    json j;
    j["name"] = d.name();
    json params = json::object();
    switch (d.kind()) {
        case Density::Kind::lomax2:
            break;
        case Density::Kind::expneg:
            params["c"] = d.param_c();
            break;
        case Density::Kind::powerexp:
            params["p"] = d.param_p();
            params["c"] = d.param_c();
            break;
        case Density::Kind::custom_table:
            params["t"] = d.table_t();
            params["value"] = d.table_v();
            break;
    }
    j["params"] = params;
    return j;
}

MeasureSpec measure_from(const json& j) {
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        for (const auto& ja : j.at("atoms"))
            atoms.push_back(Atom{ja.at("location").get<double>(), ja.at("weight").get<double>()});
    }
    std::optional<Density> density;
    if (j.contains("density") && !j.at("density").is_null())
        density = density_from_json(j.at("density"));
    return MeasureSpec(std::move(atoms), std::move(density));
}

json measure_to(const MeasureSpec& mu) {
    json j;
    j["atoms"] = json::array();
    for (const Atom& a : mu.atoms)
        j["atoms"].push_back({{"location", a.location}, {"weight", a.weight}});
    if (mu.density.has_value())
        j["density"] = density_to_json(*mu.density);
    return j;
}

KernelForm kernel_form_from(const std::string& s) {
    if (s == "measure" || s == "MEASURE") return KernelForm::measure;
    if (s == "density" || s == "DENSITY") return KernelForm::density;
    throw std::domain_error("kernel_form must be \"measure\" or \"density\", got: " + s);
}

} // namespace

MeasureSpec measure_from_json(const std::string& text) {
    return measure_from(json::parse(text));
}

std::string measure_to_json(const MeasureSpec& mu) {
    return measure_to(mu).dump(2);
}

GbfRep gbf_from_json(const std::string& text) {
    json j = json::parse(text);
    return GbfRep(j.at("lambda").get<double>(), j.value("a", 0.0), j.value("b", 0.0),
                  kernel_form_from(j.at("kernel_form").get<std::string>()),
                  measure_from(j.at("measure_or_density")));
}

GbfRep gbf_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return gbf_from_json(buf.str());
}

std::string gbf_to_json(const GbfRep& rep) {
    json j;
    j["lambda"] = rep.lambda();
    j["a"] = rep.a();
    j["b"] = rep.b();
    j["kernel_form"] = rep.kernel_form() == KernelForm::measure ? "measure" : "density";
    j["measure_or_density"] = measure_to(rep.measure());
    return j.dump(2);
}

} // namespace gbf::measures
