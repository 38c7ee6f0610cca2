#pragma once

#include <cstddef>
#include <string>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "valleysplit/materials.hpp"
#include "valleysplit/potential.hpp"

namespace valleysplit {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Figure { fig1, fig2, fig3, fig4 };

std::string_view to_string(Figure figure);
Figure parse_figure(std::string_view text);

/// Effective sweep configuration; every grid is fully expanded.
struct SweepConfig {
    std::string material_preset = "sio2_si";
    MaterialSystem material = sio2_si();
    WellGeometry geometry;
    double field_V_per_m = 0.0;
    std::vector<double> widths_nm;      ///< empty: geometry.well_nm only
    std::vector<double> fields_V_per_m; ///< empty: field_V_per_m only
    std::size_t subbands = 3;
    double mesh_h_nm = 0.05;
    ConstantsMode constants_mode = ConstantsMode::paper_canonical;
    FieldPolarity polarity = FieldPolarity::toward_right;
    bool integrate_in_well_only = false;
    bool coupling = true;
    std::string csv_path = "valleysplit.csv";
    std::string gnuplot_path;

    [[nodiscard]] std::vector<double> width_grid() const;
    [[nodiscard]] std::vector<double> field_grid() const;

    /// Throws InvalidArgument on empty grids, nonpositive sizes, zero subbands.
    void validate() const;
};

/// start, start + step, ... up to stop (inclusive within 1e-9 step).
std::vector<double> expand_range(double start, double stop, double step);

/// Overlay a JSON document on base. Unknown keys are rejected.
SweepConfig config_from_json(const nlohmann::json& doc, SweepConfig base = {});
nlohmann::json config_to_json(const SweepConfig& config);

SweepConfig load_config(const std::string& path, SweepConfig base = {});

/// Reconstructed grids for each figure.
SweepConfig figure_config(Figure figure);

} // namespace valleysplit
