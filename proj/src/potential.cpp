#include "valleysplit/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "valleysplit/error.hpp"
#include "valleysplit/units.hpp"

namespace valleysplit {

void WellGeometry::validate() const {
    if (!(well_nm > 0.0))
        throw InvalidArgument("well width must be positive, got " + std::to_string(well_nm));
    if (!(barrier_nm > 0.0))
        throw InvalidArgument("barrier width must be positive, got " + std::to_string(barrier_nm));
}

std::string_view to_string(FieldPolarity polarity) {
    return polarity == FieldPolarity::toward_left ? "toward_left" : "toward_right";
}

FieldPolarity parse_field_polarity(std::string_view text) {
    if (text == "toward_right")
        return FieldPolarity::toward_right;
    if (text == "toward_left")
        return FieldPolarity::toward_left;
    throw InvalidArgument("unknown field polarity '" + std::string(text) + "' (expected toward_right or toward_left)");
}

PotentialProfile::PotentialProfile(std::vector<double> breakpoints_nm, std::vector<double> segment_values_eV,
                                   double slope_eV_per_nm)
    : breakpoints_(std::move(breakpoints_nm)), values_(std::move(segment_values_eV)), slope_(slope_eV_per_nm) {
    if (values_.empty() || breakpoints_.size() != values_.size() + 1)
        throw InvalidArgument("potential profile needs one more breakpoint than segments");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw InvalidArgument("potential breakpoints must be strictly increasing");
    for (std::size_t i = 1; i < values_.size(); ++i) {
        const double dv = values_[i] - values_[i - 1];
        if (dv != 0.0)
            jumps_.push_back({breakpoints_[i], dv});
    }
}

PotentialProfile PotentialProfile::uniform(double a_nm, double b_nm, double value_eV, double slope_eV_per_nm) {
    return PotentialProfile({a_nm, b_nm}, {value_eV}, slope_eV_per_nm);
}

std::size_t PotentialProfile::segment_at(double z_nm) const {
    if (z_nm < domain_min() || z_nm > domain_max())
        throw InvalidArgument("z = " + std::to_string(z_nm) + " nm outside the potential domain");
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), z_nm);
    const auto idx = static_cast<std::size_t>(std::distance(breakpoints_.begin(), it));
    return std::min(idx, values_.size()) - 1;
}

double PotentialProfile::evaluate(double z_nm) const { return values_[segment_at(z_nm)] + slope_ * z_nm; }

PotentialProfile PotentialProfile::shifted(double V0_eV) const {
    auto values = values_;
    for (double& v : values)
        v += V0_eV;
    return {breakpoints_, std::move(values), slope_};
}

PotentialProfile PotentialProfile::translated(double dz_nm) const {
    auto bps = breakpoints_;
    for (double& z : bps)
        z += dz_nm;
    auto values = values_;
    for (double& v : values)
        v -= slope_ * dz_nm;
    return {std::move(bps), std::move(values), slope_};
}

PotentialProfile build_profile(const WellGeometry& geometry, const MaterialSystem& material, double field_V_per_m,
                               FieldPolarity polarity) {
    geometry.validate();
    material.validate();
    if (!(field_V_per_m >= 0.0))
        throw InvalidArgument("field must be >= 0 V/m; use the polarity to choose its direction");
    const double eF = units::field_to_eV_per_nm(field_V_per_m);
    const double slope = polarity == FieldPolarity::toward_left ? eF : 0.0 - eF;
    const double dEc = material.delta_Ec_eV;
    return PotentialProfile({geometry.domain_min(), geometry.z_left(), geometry.z_right(), geometry.domain_max()},
                            {dEc, 0.0, dEc}, slope);
}

DerivativeParts derivative_parts(const PotentialProfile& profile) { return {profile.slope(), profile.jumps()}; }

} // namespace valleysplit
