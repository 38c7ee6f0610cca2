#include "valleysplit/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "valleysplit/error.hpp"

namespace valleysplit {

namespace {

std::size_t division_count(double length, double target_h) {
    // 6 / 0.05 must give 120, not 121
    const double ratio = length / target_h;
    const auto n = static_cast<std::size_t>(std::ceil(ratio * (1.0 - 1e-12)));
    return std::max<std::size_t>(n, 1);
}

void append_region(std::vector<double>& nodes, std::vector<Region>& regions, double a, double b, double target_h,
                   Region tag) {
    const std::size_t n = division_count(b - a, target_h);
    if (nodes.empty())
        nodes.push_back(a);
    for (std::size_t i = 1; i < n; ++i)
        nodes.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n));
    nodes.push_back(b);
    regions.insert(regions.end(), n, tag);
}

} // namespace

Mesh1D::Mesh1D(std::vector<double> nodes_nm, std::vector<Region> element_regions)
    : nodes_(std::move(nodes_nm)), regions_(std::move(element_regions)) {
    if (nodes_.size() < 2 || regions_.size() != nodes_.size() - 1)
        throw InvalidArgument("mesh needs at least one element and one region tag per element");
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (!(nodes_[i] > nodes_[i - 1]))
            throw InvalidArgument("mesh nodes must be strictly increasing");
}

Mesh1D Mesh1D::uniform(double a_nm, double b_nm, double target_h_nm) {
    if (!(target_h_nm > 0.0))
        throw InvalidArgument("mesh spacing must be positive");
    if (!(b_nm > a_nm))
        throw InvalidArgument("degenerate mesh interval");
    std::vector<double> nodes;
    std::vector<Region> regions;
    append_region(nodes, regions, a_nm, b_nm, target_h_nm, Region::well);
    return {std::move(nodes), std::move(regions)};
}

double Mesh1D::min_element_length() const {
    double h = element_length(0);
    for (std::size_t e = 1; e < element_count(); ++e)
        h = std::min(h, element_length(e));
    return h;
}

double Mesh1D::max_element_length() const {
    double h = element_length(0);
    for (std::size_t e = 1; e < element_count(); ++e)
        h = std::max(h, element_length(e));
    return h;
}

std::optional<std::size_t> Mesh1D::node_index(double z_nm) const {
    const double tol = 1e-12 * std::max({1.0, std::abs(nodes_.front()), std::abs(nodes_.back())});
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), z_nm - tol);
    if (it == nodes_.end() || std::abs(*it - z_nm) > tol)
        return std::nullopt;
    return static_cast<std::size_t>(std::distance(nodes_.begin(), it));
}

Mesh1D Mesh1D::translated(double dz_nm) const {
    auto nodes = nodes_;
    for (double& z : nodes)
        z += dz_nm;
    return {std::move(nodes), regions_};
}

Mesh1D build_mesh(const WellGeometry& geometry, double target_h_nm) {
    geometry.validate();
    if (!(target_h_nm > 0.0))
        throw InvalidArgument("mesh spacing must be positive, got " + std::to_string(target_h_nm));
    std::vector<double> nodes;
    std::vector<Region> regions;
    append_region(nodes, regions, geometry.domain_min(), geometry.z_left(), target_h_nm, Region::barrier);
    append_region(nodes, regions, geometry.z_left(), geometry.z_right(), target_h_nm, Region::well);
    append_region(nodes, regions, geometry.z_right(), geometry.domain_max(), target_h_nm, Region::barrier);
    return {std::move(nodes), std::move(regions)};
}

} // namespace valleysplit
