#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "json.hpp"

#include "valleysplit/config.hpp"
#include "valleysplit/error.hpp"
#include "valleysplit/report.hpp"
#include "valleysplit/sweep.hpp"

using namespace valleysplit;
namespace fs = std::filesystem;

namespace {

ResultRow sample_row() {
    ResultRow r;
    r.material = "sio2_si";
    r.W_nm = 6.0;
    r.F_V_per_m = 1e7;
    r.n = 0;
    r.E_meV = 23.123456789;
    r.delta_meV = 1.5;
    r.lower_meV = 22.373456789;
    r.upper_meV = 23.873456789;
    r.CV_meV = 0.75;
    r.CF_meV = 0.1;
    r.Cdelta_meV = 0.7;
    r.bulk_meV = 0.718;
    return r;
}

fs::path temp_dir() {
    auto d = fs::temp_directory_path() / "valleysplit_tests";
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("range expansion") {
    const auto v = expand_range(2.0, 10.0, 0.05);
    CHECK(v.size() == 161);
    CHECK(v.front() == 2.0);
    CHECK(v.back() == doctest::Approx(10.0));
    CHECK(expand_range(1.0, 1.0, 0.5) == std::vector<double>{1.0});
    CHECK_THROWS_AS(expand_range(0.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(expand_range(2.0, 1.0, 0.1), InvalidArgument);
}

TEST_CASE("JSON round trip") {
    auto cfg = figure_config(Figure::fig4);
    cfg.constants_mode = ConstantsMode::analytic;
    cfg.polarity = FieldPolarity::toward_left;
    cfg.integrate_in_well_only = true;
    cfg.coupling = false;
    cfg.gnuplot_path = "x.gp";
    const auto doc = config_to_json(cfg);
    const auto back = config_from_json(doc);
    CHECK(config_to_json(back) == doc);
    CHECK(back.width_grid() == cfg.width_grid());
    CHECK(back.field_grid() == cfg.field_grid());
    CHECK(back.constants_mode == ConstantsMode::analytic);
    CHECK_FALSE(back.coupling);
}

TEST_CASE("JSON overlays and validation") {
    using nlohmann::json;
    const auto cfg = config_from_json(json::parse(R"({"widths_nm": {"start": 3, "stop": 4, "step": 0.5},
                                                      "material": {"preset": "sige30_si"}, "subbands": 2})"));
    CHECK(cfg.width_grid() == std::vector<double>{3.0, 3.5, 4.0});
    CHECK(cfg.material.delta_Ec_eV == 0.16);
    CHECK(cfg.subbands == 2);
    CHECK(config_from_json(json::parse(R"({"fields_V_per_m": 5e7})")).field_grid() == std::vector<double>{5e7});

    CHECK_THROWS_AS(config_from_json(json::parse(R"({"widht_nm": 3})")), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"geometry": {"well": 3}})")), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"subbands": 0})")), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"fields_V_per_m": [-1]})")).validate(), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"constants_mode": "guess"})")), InvalidArgument);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"mesh_h_nm": "fine"})")), InvalidArgument);

    const auto bad = temp_dir() / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_AS(load_config(bad.string()), InvalidArgument);
    CHECK_THROWS_AS(load_config((temp_dir() / "missing.json").string()), IoError);
}

TEST_CASE("bundled figure configs match the presets") {
    for (auto fig : {Figure::fig1, Figure::fig2, Figure::fig3, Figure::fig4}) {
        const fs::path p = fs::path(VALLEYSPLIT_SOURCE_DIR) / "configs" / (std::string(to_string(fig)) + ".json");
        const auto loaded = load_config(p.string());
        CHECK(config_to_json(loaded) == config_to_json(figure_config(fig)));
    }
    CHECK_THROWS_AS(parse_figure("fig5"), InvalidArgument);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(1e8) == "100000000");
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN()).empty());
    CHECK(std::stod(format_number(0.123456789123)) == doctest::Approx(0.123456789).epsilon(1e-12));
}

TEST_CASE("CSV layout and round trip") {
    const auto text = format_csv({sample_row()});
    CHECK(text.rfind(std::string(csv_header) + "\r\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.substr(text.size() - 2) == "\r\n");

    const auto parsed = parse_csv(text);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].E_meV == doctest::Approx(23.123456789).epsilon(1e-9));
    CHECK(format_csv(parsed) == text);

    auto err = sample_row();
    err.E_meV = std::numeric_limits<double>::quiet_NaN();
    err.error = "solver said \"no\", giving up";
    const auto text2 = format_csv({err});
    CHECK(text2.find("\"solver said \"\"no\"\", giving up\"") != std::string::npos);
    const auto parsed2 = parse_csv(text2);
    CHECK(parsed2[0].error == err.error);
    CHECK(std::isnan(parsed2[0].E_meV));

    CHECK_THROWS_AS(parse_csv(""), InvalidArgument);
    CHECK_THROWS_AS(parse_csv("a,b\r\n"), InvalidArgument);
}

TEST_CASE("CSV files") {
    const auto path = temp_dir() / "rows.csv";
    emit_csv({sample_row()}, path.string());
    CHECK(slurp(path) == format_csv({sample_row()}));
    CHECK_THROWS_AS(emit_csv({}, path.string()), InvalidArgument);
    CHECK_THROWS_AS(emit_csv({sample_row()}, "/nonexistent_dir/x.csv"), IoError);
}

TEST_CASE("gnuplot scripts") {
    SweepConfig cfg;
    cfg.widths_nm = {5.0, 6.0};
    cfg.subbands = 3;
    const auto rows = run_width_sweep(cfg, 1);
    const auto fig1 = format_gnuplot(rows, Figure::fig1, "a.csv");
    CHECK(fig1.find("Well width (angstrom)") != std::string::npos);
    CHECK(fig1.find("a.csv") != std::string::npos);
    CHECK(fig1 == format_gnuplot(rows, Figure::fig1, "a.csv"));
    const auto fig2 = format_gnuplot(rows, Figure::fig2, "a.csv");
    CHECK(fig2.find("multiplot") != std::string::npos);
    CHECK_THROWS_AS(format_gnuplot(rows, Figure::fig3, "a.csv"), InvalidArgument);
    CHECK_THROWS_AS(format_gnuplot({}, Figure::fig1, "a.csv"), InvalidArgument);

    SweepConfig fcfg;
    fcfg.fields_V_per_m = {0.0, 1e8};
    const auto frows = run_field_sweep(fcfg, 1);
    const auto fig3 = format_gnuplot(frows, Figure::fig3, "b.csv");
    CHECK(fig3.find("Electric field (V/m)") != std::string::npos);
    CHECK_THROWS_AS(format_gnuplot(frows, Figure::fig1, "b.csv"), InvalidArgument);
}
