#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "valleysplit/materials.hpp"

namespace valleysplit {

/// Symmetric well of width W centred at z = 0 with barriers of width L_b on each side.
struct WellGeometry {
    double well_nm = 6.0;
    double barrier_nm = 6.0;

    [[nodiscard]] double z_left() const { return -0.5 * well_nm; }
    [[nodiscard]] double z_right() const { return 0.5 * well_nm; }
    [[nodiscard]] double domain_min() const { return -0.5 * well_nm - barrier_nm; }
    [[nodiscard]] double domain_max() const { return 0.5 * well_nm + barrier_nm; }

    void validate() const;
};

/// Which interface the applied field presses the electron against.
///
/// toward_right: slope -eF, electron sits on the interface where V_c steps up by
/// +delta_Ec. toward_left: slope +eF, electron on the -delta_Ec interface.
enum class FieldPolarity { toward_right, toward_left };

std::string_view to_string(FieldPolarity polarity);
FieldPolarity parse_field_polarity(std::string_view text);

struct PotentialJump {
    double z_nm;
    double dV_eV; ///< V_c(z+) - V_c(z-)

    bool operator==(const PotentialJump&) const = default;
};

/// Piecewise-constant confinement plus a linear term over the whole domain.
///
/// evaluate() returns the right limit at interior breakpoints.
class PotentialProfile {
public:
    PotentialProfile(std::vector<double> breakpoints_nm, std::vector<double> segment_values_eV, double slope_eV_per_nm);

    /// Single segment [a, b] with constant value and slope; no jumps.
    static PotentialProfile uniform(double a_nm, double b_nm, double value_eV, double slope_eV_per_nm = 0.0);

    [[nodiscard]] const std::vector<double>& breakpoints() const { return breakpoints_; }
    [[nodiscard]] const std::vector<double>& segment_values() const { return values_; }
    [[nodiscard]] const std::vector<PotentialJump>& jumps() const { return jumps_; }
    [[nodiscard]] double slope() const { return slope_; }
    [[nodiscard]] std::size_t segment_count() const { return values_.size(); }
    [[nodiscard]] double domain_min() const { return breakpoints_.front(); }
    [[nodiscard]] double domain_max() const { return breakpoints_.back(); }

    /// Segment containing z (right-limit convention; the last edge belongs to the last segment).
    [[nodiscard]] std::size_t segment_at(double z_nm) const;
    [[nodiscard]] double evaluate(double z_nm) const;

    /// Same profile with every segment raised by V0.
    [[nodiscard]] PotentialProfile shifted(double V0_eV) const;
    /// V'(z) = V(z - dz).
    [[nodiscard]] PotentialProfile translated(double dz_nm) const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double slope_;
    std::vector<PotentialJump> jumps_;
};

/// Confinement delta_Ec in both barriers, 0 in the well, plus the field term.
/// field_V_per_m must be >= 0; its direction is set by polarity.
PotentialProfile build_profile(const WellGeometry& geometry, const MaterialSystem& material, double field_V_per_m,
                               FieldPolarity polarity = FieldPolarity::toward_right);

inline double evaluate_V(const PotentialProfile& profile, double z_nm) { return profile.evaluate(z_nm); }

/// Distributional derivative of V: the smooth part eF plus the signed jumps.
struct DerivativeParts {
    double smooth_slope_eV_per_nm;
    std::vector<PotentialJump> jumps;
};

DerivativeParts derivative_parts(const PotentialProfile& profile);

} // namespace valleysplit
