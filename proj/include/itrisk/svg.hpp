#pragma once

#include <string>
#include <vector>

#include "itrisk/engine.hpp"

namespace itrisk::svg {

struct ProfileSeries {
    std::string label;
    RiskProfile profile;
    double average_risk = 0.0; // drawn as a dashed horizontal line
};

/// Step-function risk plot on a fixed 800x400 viewBox: tick t's value fills
/// the unit interval [t-1, t] so the painted area equals the total risk
/// area. One dashed line per profile at its average risk. Output is fully
/// deterministic: fixed element order, two-decimal coordinates.
std::string render_profile_svg(const std::vector<ProfileSeries>& series);

} // namespace itrisk::svg
