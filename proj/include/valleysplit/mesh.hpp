#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "valleysplit/potential.hpp"

namespace valleysplit {

enum class Region : std::uint8_t { well, barrier };

/// Node set on [z_min, z_max] with a material tag per element.
class Mesh1D {
public:
    Mesh1D(std::vector<double> nodes_nm, std::vector<Region> element_regions);

    /// Uniform mesh of a single well region, spacing <= target_h.
    static Mesh1D uniform(double a_nm, double b_nm, double target_h_nm);

    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<Region>& regions() const { return regions_; }
    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
    [[nodiscard]] std::size_t element_count() const { return regions_.size(); }
    [[nodiscard]] double element_length(std::size_t e) const { return nodes_[e + 1] - nodes_[e]; }
    [[nodiscard]] double min_element_length() const;
    [[nodiscard]] double max_element_length() const;

    /// Index of the node at z, if z is a node up to rounding (1e-12 relative to the domain).
    [[nodiscard]] std::optional<std::size_t> node_index(double z_nm) const;

    [[nodiscard]] Mesh1D translated(double dz_nm) const;

private:
    std::vector<double> nodes_;
    std::vector<Region> regions_;
};

/// Barrier | well | barrier, each region uniformly divided with spacing <= target_h;
/// the interfaces and the domain edges are nodes.
Mesh1D build_mesh(const WellGeometry& geometry, double target_h_nm);

} // namespace valleysplit
