// valleysplit: subband and valley-splitting sweeps for Si quantum wells.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "valleysplit/config.hpp"
#include "valleysplit/error.hpp"
#include "valleysplit/oracles.hpp"
#include "valleysplit/report.hpp"
#include "valleysplit/sweep.hpp"

namespace vs = valleysplit;

namespace {

enum ExitCode { ok = 0, usage = 1, oracle_failure = 2, io_failure = 3 };

struct Overrides {
    std::string config_path;
    std::optional<double> well_nm;
    std::optional<double> field;
    std::optional<std::string> material;
    std::optional<std::size_t> subbands;
    std::optional<double> mesh_h;
    std::optional<std::string> constants_mode;
    std::optional<std::string> polarity;
    std::optional<std::string> out;
    std::optional<std::string> gnuplot;
    bool no_coupling = false;
    bool well_only = false;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("-c,--config", o.config_path, "JSON config file");
    cmd->add_option("--well-nm", o.well_nm, "single well width (nm); replaces the width grid");
    cmd->add_option("--field", o.field, "single field (V/m); replaces the field grid");
    cmd->add_option("--material", o.material, "material preset: sio2_si | sige30_si");
    cmd->add_option("--subbands", o.subbands, "number of subbands");
    cmd->add_option("--mesh-h", o.mesh_h, "target element length (nm)");
    cmd->add_option("--constants-mode", o.constants_mode, "paper-canonical | analytic");
    cmd->add_option("--polarity", o.polarity, "toward_right | toward_left");
    cmd->add_option("-o,--out", o.out, "output CSV path");
    cmd->add_flag("--no-coupling", o.no_coupling, "drop the off-diagonal element (degenerate valley pairs)");
    cmd->add_flag("--well-only", o.well_only, "restrict the splitting integral to the well");
}

vs::SweepConfig resolve(const Overrides& o, vs::SweepConfig base) {
    vs::SweepConfig c = o.config_path.empty() ? std::move(base) : vs::load_config(o.config_path, std::move(base));
    if (o.material) {
        c.material_preset = *o.material;
        c.material = vs::material_preset(*o.material);
    }
    if (o.well_nm) {
        c.geometry.well_nm = *o.well_nm;
        c.widths_nm = {*o.well_nm};
    }
    if (o.field) {
        c.field_V_per_m = *o.field;
        c.fields_V_per_m = {*o.field};
    }
    if (o.subbands)
        c.subbands = *o.subbands;
    if (o.mesh_h)
        c.mesh_h_nm = *o.mesh_h;
    if (o.constants_mode)
        c.constants_mode = vs::parse_constants_mode(*o.constants_mode);
    if (o.polarity)
        c.polarity = vs::parse_field_polarity(*o.polarity);
    if (o.out) {
        c.csv_path = *o.out;
        c.gnuplot_path.clear(); // the script follows the CSV unless --gnuplot says otherwise
    }
    if (o.gnuplot)
        c.gnuplot_path = *o.gnuplot;
    if (o.no_coupling)
        c.coupling = false;
    if (o.well_only)
        c.integrate_in_well_only = true;
    c.validate();
    return c;
}

void report_errors(const std::vector<vs::ResultRow>& rows) {
    std::size_t failed = 0;
    for (const auto& r : rows)
        failed += r.error.empty() ? 0 : 1;
    if (failed)
        std::cerr << "warning: " << failed << " rows carry solver errors (see the error column)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-valley effective-mass subbands and valley splitting of Si quantum wells"};
    app.require_subcommand(1);

    Overrides width_o, field_o, fig_o, oracle_o, print_o;
    auto* width_cmd = app.add_subcommand("sweep-width", "sweep the well width (rows ordered by F, W, n)");
    add_common_options(width_cmd, width_o);
    auto* field_cmd = app.add_subcommand("sweep-field", "sweep the applied field (rows ordered by W, F, n)");
    add_common_options(field_cmd, field_o);

    std::string figure_name;
    auto* fig_cmd = app.add_subcommand("figure", "run a figure preset and write CSV plus gnuplot script");
    fig_cmd->add_option("name", figure_name, "fig1 | fig2 | fig3 | fig4")->required();
    add_common_options(fig_cmd, fig_o);
    fig_cmd->add_option("--gnuplot", fig_o.gnuplot, "output gnuplot script path");

    auto* oracle_cmd = app.add_subcommand("oracles", "run the oracle and invariant suites");
    add_common_options(oracle_cmd, oracle_o);

    std::string figure_for_print;
    auto* print_cmd = app.add_subcommand("print-config", "print the effective configuration as JSON");
    add_common_options(print_cmd, print_o);
    print_cmd->add_option("--figure", figure_for_print, "start from a figure preset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*width_cmd || *field_cmd) {
            const bool width = width_cmd->parsed();
            const auto cfg = resolve(width ? width_o : field_o, {});
            const auto rows = width ? vs::run_width_sweep(cfg) : vs::run_field_sweep(cfg);
            vs::emit_csv(rows, cfg.csv_path);
            report_errors(rows);
            std::cout << "wrote " << rows.size() << " rows to " << cfg.csv_path << "\n";
            return ok;
        }
        if (*fig_cmd) {
            const auto figure = vs::parse_figure(figure_name);
            const auto cfg = resolve(fig_o, vs::figure_config(figure));
            const auto rows = vs::run_figure_sweep(figure, cfg);
            vs::emit_csv(rows, cfg.csv_path);
            std::string script = cfg.gnuplot_path;
            if (script.empty())
                script = std::filesystem::path(cfg.csv_path).replace_extension(".gp").string();
            // the script refers to the CSV by its name relative to the script directory
            const auto csv_ref = std::filesystem::path(cfg.csv_path)
                                     .lexically_relative(std::filesystem::path(script).parent_path().empty()
                                                             ? std::filesystem::path(".")
                                                             : std::filesystem::path(script).parent_path())
                                     .string();
            vs::emit_gnuplot(rows, figure, csv_ref.empty() ? cfg.csv_path : csv_ref, script);
            report_errors(rows);
            std::cout << "wrote " << rows.size() << " rows to " << cfg.csv_path << " and script " << script << "\n";
            return ok;
        }
        if (*oracle_cmd) {
            const auto cfg = resolve(oracle_o, {});
            const auto report = vs::oracles::run_oracles(cfg);
            std::cout << report.format();
            return report.all_passed() ? ok : oracle_failure;
        }
        if (*print_cmd) {
            vs::SweepConfig base;
            if (!figure_for_print.empty())
                base = vs::figure_config(vs::parse_figure(figure_for_print));
            Overrides po = print_o;
            po.out.reset();
            const auto cfg = resolve(po, base);
            const std::string text = vs::config_to_json(cfg).dump(2) + "\n";
            if (print_o.out) {
                std::FILE* f = std::fopen(print_o.out->c_str(), "wb");
                if (!f || std::fputs(text.c_str(), f) < 0) {
                    if (f)
                        std::fclose(f);
                    throw vs::IoError("cannot write '" + *print_o.out + "'");
                }
                std::fclose(f);
            } else {
                std::cout << text;
            }
            return ok;
        }
    } catch (const vs::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return io_failure;
    } catch (const vs::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
