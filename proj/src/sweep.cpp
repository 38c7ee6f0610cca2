#include "valleysplit/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "valleysplit/subbands.hpp"
#include "valleysplit/units.hpp"
#include "valleysplit/valley_coupling.hpp"

namespace valleysplit {

std::vector<SweepPoint> width_sweep_points(const SweepConfig& config) {
    std::vector<SweepPoint> points;
    for (double f : config.field_grid())
        for (double w : config.width_grid())
            points.push_back({w, f});
    return points;
}

std::vector<SweepPoint> field_sweep_points(const SweepConfig& config) {
    std::vector<SweepPoint> points;
    for (double w : config.width_grid())
        for (double f : config.field_grid())
            points.push_back({w, f});
    return points;
}

std::vector<ResultRow> compute_point(const SweepConfig& config, const SweepPoint& point) {
    std::vector<ResultRow> rows(config.subbands);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        rows[n].material = config.material_preset;
        rows[n].W_nm = point.W_nm;
        rows[n].F_V_per_m = point.F_V_per_m;
        rows[n].n = n;
    }
    try {
        WellProblem problem;
        problem.geometry = {point.W_nm, config.geometry.barrier_nm};
        problem.material = config.material;
        problem.field_V_per_m = point.F_V_per_m;
        problem.polarity = config.polarity;
        problem.n_states = config.subbands;
        problem.mesh_h_nm = config.mesh_h_nm;
        const auto solved = solve_well(problem);
        const auto constants = valley_pair_constants(config.material, config.constants_mode);
        std::optional<Window> window;
        if (config.integrate_in_well_only)
            window = Window{problem.geometry.z_left(), problem.geometry.z_right()};
        const double bulk = bulk_splitting_from_field_meV(point.F_V_per_m / 1e7);

        for (std::size_t n = 0; n < rows.size(); ++n) {
            const double E = solved.solution.energy(n);
            const auto split = valley_splitting(solved.solution, n, solved.profile, constants, window);
            const auto levels = coupled_levels(E, split, config.coupling);
            auto& r = rows[n];
            r.E_meV = units::eV_to_meV(E);
            r.delta_meV = units::eV_to_meV(config.coupling ? split.delta_eV : 0.0);
            r.lower_meV = units::eV_to_meV(levels.lower_eV);
            r.upper_meV = units::eV_to_meV(levels.upper_eV);
            r.CV_meV = units::eV_to_meV(std::abs(split.confinement));
            r.CF_meV = units::eV_to_meV(std::abs(split.field));
            r.Cdelta_meV = units::eV_to_meV(std::abs(split.interface));
            r.bulk_meV = bulk;
        }
    } catch (const std::exception& e) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        for (auto& r : rows) {
            r.E_meV = r.delta_meV = r.lower_meV = r.upper_meV = nan;
            r.CV_meV = r.CF_meV = r.Cdelta_meV = r.bulk_meV = nan;
            r.error = e.what();
        }
    }
    return rows;
}

std::vector<ResultRow> run_points_serial(const SweepConfig& config, const std::vector<SweepPoint>& points) {
    std::vector<ResultRow> out;
    out.reserve(points.size() * config.subbands);
    for (const auto& p : points) {
        auto rows = compute_point(config, p);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<ResultRow> run_points_parallel(const SweepConfig& config, const std::vector<SweepPoint>& points,
                                           int threads) {
    std::vector<std::vector<ResultRow>> per_point(points.size());
    const auto count = static_cast<long long>(points.size());
#ifdef _OPENMP
    const int n_threads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
#endif
    for (long long i = 0; i < count; ++i)
        per_point[static_cast<std::size_t>(i)] = compute_point(config, points[static_cast<std::size_t>(i)]);
    (void)threads;

    std::vector<ResultRow> out;
    out.reserve(points.size() * config.subbands);
    for (auto& rows : per_point)
        for (auto& r : rows)
            out.push_back(std::move(r));
    return out;
}

int worker_threads_from_env() {
    if (const char* env = std::getenv("VALLEYSPLIT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<ResultRow> run_width_sweep(const SweepConfig& config, int threads) {
    config.validate();
    return run_points_parallel(config, width_sweep_points(config), threads);
}

std::vector<ResultRow> run_field_sweep(const SweepConfig& config, int threads) {
    config.validate();
    return run_points_parallel(config, field_sweep_points(config), threads);
}

std::vector<ResultRow> run_figure_sweep(Figure figure, const SweepConfig& config, int threads) {
    return figure == Figure::fig3 ? run_field_sweep(config, threads) : run_width_sweep(config, threads);
}

} // namespace valleysplit
