#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "valleysplit/config.hpp"

namespace valleysplit {

/// One CSV row: subband n of the well (W, F). Energies in meV.
struct ResultRow {
    std::string material;
    double W_nm = 0.0;
    double F_V_per_m = 0.0;
    std::size_t n = 0;
    double E_meV = 0.0;
    double delta_meV = 0.0;
    double lower_meV = 0.0;
    double upper_meV = 0.0;
    double CV_meV = 0.0;
    double CF_meV = 0.0;
    double Cdelta_meV = 0.0;
    double bulk_meV = 0.0;
    std::string error; ///< empty on success; numeric fields are NaN otherwise
};

struct SweepPoint {
    double W_nm;
    double F_V_per_m;
};

/// (F, W) pairs with F outer: rows come out ordered by (F, W, n).
std::vector<SweepPoint> width_sweep_points(const SweepConfig& config);
/// (W, F) pairs with W outer: rows come out ordered by (W, F, n).
std::vector<SweepPoint> field_sweep_points(const SweepConfig& config);

/// config.subbands rows for one point; solver failures become error rows.
std::vector<ResultRow> compute_point(const SweepConfig& config, const SweepPoint& point);

/// Serial reference implementation.
std::vector<ResultRow> run_points_serial(const SweepConfig& config, const std::vector<SweepPoint>& points);
/// OpenMP over points; output is identical to the serial path.
std::vector<ResultRow> run_points_parallel(const SweepConfig& config, const std::vector<SweepPoint>& points,
                                           int threads);

/// VALLEYSPLIT_THREADS if set and positive, else the OpenMP default.
int worker_threads_from_env();

std::vector<ResultRow> run_width_sweep(const SweepConfig& config, int threads = worker_threads_from_env());
std::vector<ResultRow> run_field_sweep(const SweepConfig& config, int threads = worker_threads_from_env());
/// The sweep a figure is drawn from (field sweep for fig3, width sweep otherwise).
std::vector<ResultRow> run_figure_sweep(Figure figure, const SweepConfig& config,
                                        int threads = worker_threads_from_env());

} // namespace valleysplit
