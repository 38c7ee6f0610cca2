#include "valleysplit/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "valleysplit/error.hpp"

namespace valleysplit {

using nlohmann::json;

std::string_view to_string(Figure figure) {
    switch (figure) {
    case Figure::fig1: return "fig1";
    case Figure::fig2: return "fig2";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    }
    return "fig1";
}

Figure parse_figure(std::string_view text) {
    if (text == "fig1")
        return Figure::fig1;
    if (text == "fig2")
        return Figure::fig2;
    if (text == "fig3")
        return Figure::fig3;
    if (text == "fig4")
        return Figure::fig4;
    throw InvalidArgument("unknown figure '" + std::string(text) + "' (expected fig1..fig4)");
}

std::vector<double> SweepConfig::width_grid() const {
    return widths_nm.empty() ? std::vector<double>{geometry.well_nm} : widths_nm;
}

std::vector<double> SweepConfig::field_grid() const {
    return fields_V_per_m.empty() ? std::vector<double>{field_V_per_m} : fields_V_per_m;
}

void SweepConfig::validate() const {
    material.validate();
    geometry.validate();
    if (subbands < 1)
        throw InvalidArgument("subbands must be >= 1");
    if (!(mesh_h_nm > 0.0))
        throw InvalidArgument("mesh_h_nm must be positive");
    for (double w : width_grid())
        if (!(w > 0.0))
            throw InvalidArgument("well widths must be positive");
    for (double f : field_grid())
        if (!(f >= 0.0) || !std::isfinite(f))
            throw InvalidArgument("fields must be finite and >= 0 V/m");
}

std::vector<double> expand_range(double start, double stop, double step) {
    if (!(step > 0.0))
        throw InvalidArgument("range step must be positive");
    if (stop < start)
        throw InvalidArgument("range stop must not precede start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object())
        throw InvalidArgument(where + " must be a JSON object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.contains(key))
            throw InvalidArgument("unknown key '" + key + "' in " + where);
}

std::vector<double> read_grid(const json& node, const std::string& what) {
    if (node.is_array())
        return node.get<std::vector<double>>();
    if (node.is_object()) {
        reject_unknown(node, {"start", "stop", "step"}, what);
        return expand_range(node.at("start").get<double>(), node.at("stop").get<double>(),
                            node.at("step").get<double>());
    }
    if (node.is_number())
        return {node.get<double>()};
    throw InvalidArgument(what + " must be a list, a number or a {start, stop, step} range");
}

} // namespace

SweepConfig config_from_json(const json& doc, SweepConfig base) {
    reject_unknown(doc,
                   {"material", "geometry", "field_V_per_m", "widths_nm", "fields_V_per_m", "subbands", "mesh_h_nm",
                    "constants_mode", "field_polarity", "integrate_in_well_only", "coupling", "output"},
                   "config");
    SweepConfig c = std::move(base);
    try {
        if (doc.contains("material")) {
            const auto& m = doc.at("material");
            reject_unknown(m, {"preset", "m_z_well", "m_z_barrier", "delta_Ec_eV", "lattice_nm", "k0_fraction"},
                           "material");
            if (m.contains("preset")) {
                c.material_preset = m.at("preset").get<std::string>();
                c.material = material_preset(c.material_preset);
            }
            if (m.contains("m_z_well"))
                c.material.m_z_well = m.at("m_z_well").get<double>();
            if (m.contains("m_z_barrier"))
                c.material.m_z_barrier = m.at("m_z_barrier").get<double>();
            if (m.contains("delta_Ec_eV"))
                c.material.delta_Ec_eV = m.at("delta_Ec_eV").get<double>();
            if (m.contains("lattice_nm"))
                c.material.lattice_nm = m.at("lattice_nm").get<double>();
            if (m.contains("k0_fraction"))
                c.material.k0_fraction = m.at("k0_fraction").get<double>();
        }
        if (doc.contains("geometry")) {
            const auto& g = doc.at("geometry");
            reject_unknown(g, {"well_nm", "barrier_nm"}, "geometry");
            if (g.contains("well_nm"))
                c.geometry.well_nm = g.at("well_nm").get<double>();
            if (g.contains("barrier_nm"))
                c.geometry.barrier_nm = g.at("barrier_nm").get<double>();
        }
        if (doc.contains("field_V_per_m"))
            c.field_V_per_m = doc.at("field_V_per_m").get<double>();
        if (doc.contains("widths_nm"))
            c.widths_nm = read_grid(doc.at("widths_nm"), "widths_nm");
        if (doc.contains("fields_V_per_m"))
            c.fields_V_per_m = read_grid(doc.at("fields_V_per_m"), "fields_V_per_m");
        if (doc.contains("subbands")) {
            const auto n = doc.at("subbands").get<long long>();
            if (n < 1)
                throw InvalidArgument("subbands must be >= 1");
            c.subbands = static_cast<std::size_t>(n);
        }
        if (doc.contains("mesh_h_nm"))
            c.mesh_h_nm = doc.at("mesh_h_nm").get<double>();
        if (doc.contains("constants_mode"))
            c.constants_mode = parse_constants_mode(doc.at("constants_mode").get<std::string>());
        if (doc.contains("field_polarity"))
            c.polarity = parse_field_polarity(doc.at("field_polarity").get<std::string>());
        if (doc.contains("integrate_in_well_only"))
            c.integrate_in_well_only = doc.at("integrate_in_well_only").get<bool>();
        if (doc.contains("coupling"))
            c.coupling = doc.at("coupling").get<bool>();
        if (doc.contains("output")) {
            const auto& o = doc.at("output");
            reject_unknown(o, {"csv", "gnuplot"}, "output");
            if (o.contains("csv"))
                c.csv_path = o.at("csv").get<std::string>();
            if (o.contains("gnuplot"))
                c.gnuplot_path = o.at("gnuplot").get<std::string>();
        }
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

json config_to_json(const SweepConfig& c) {
    json doc;
    doc["material"] = {{"preset", c.material_preset},
                       {"m_z_well", c.material.m_z_well},
                       {"m_z_barrier", c.material.m_z_barrier},
                       {"delta_Ec_eV", c.material.delta_Ec_eV},
                       {"lattice_nm", c.material.lattice_nm},
                       {"k0_fraction", c.material.k0_fraction}};
    doc["geometry"] = {{"well_nm", c.geometry.well_nm}, {"barrier_nm", c.geometry.barrier_nm}};
    doc["field_V_per_m"] = c.field_V_per_m;
    doc["widths_nm"] = c.width_grid();
    doc["fields_V_per_m"] = c.field_grid();
    doc["subbands"] = c.subbands;
    doc["mesh_h_nm"] = c.mesh_h_nm;
    doc["constants_mode"] = std::string(to_string(c.constants_mode));
    doc["field_polarity"] = std::string(to_string(c.polarity));
    doc["integrate_in_well_only"] = c.integrate_in_well_only;
    doc["coupling"] = c.coupling;
    doc["output"] = {{"csv", c.csv_path}, {"gnuplot", c.gnuplot_path}};
    return doc;
}

SweepConfig load_config(const std::string& path, SweepConfig base) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw InvalidArgument("config '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(doc, std::move(base));
}

SweepConfig figure_config(Figure figure) {
    SweepConfig c;
    c.gnuplot_path = std::string(to_string(figure)) + ".gp";
    c.csv_path = std::string(to_string(figure)) + ".csv";
    switch (figure) {
    case Figure::fig1:
        c.material_preset = "sige30_si";
        c.material = sige30_si();
        c.widths_nm = expand_range(2.0, 10.0, 0.05);
        c.fields_V_per_m = {0.0};
        c.subbands = 1;
        break;
    case Figure::fig2:
        c.widths_nm = expand_range(2.0, 10.0, 0.05);
        c.fields_V_per_m = {1e7};
        c.subbands = 3;
        break;
    case Figure::fig3:
        c.geometry.well_nm = 6.0;
        c.widths_nm = {6.0};
        c.fields_V_per_m = expand_range(0.0, 1.5e8, 5e6);
        c.subbands = 3;
        break;
    case Figure::fig4:
        c.widths_nm = expand_range(3.0, 10.0, 0.05);
        c.fields_V_per_m = {2.15e7, 5e7, 1e8, 1.5e8};
        c.subbands = 3;
        break;
    }
    return c;
}

} // namespace valleysplit
