#ifndef GEGEN_ANALYTICITY_HPP
#define GEGEN_ANALYTICITY_HPP

#include <optional>
#include <vector>

namespace gegen {

/// Where a target function is known to be analytic.
///
/// polyellipse: a product of Bernstein ellipses with radii rho_vec (one per
/// dimension). region: the set of complex vectors whose squared-coordinate
/// sum lies in the ellipse with foci 0 and d and leftmost point
/// -(h^2 + d*epsilon). B_f, when present, is a (sampled or user-supplied)
/// upper bound for sup |f| over the region in play.
struct AnalyticityContext {
    enum class Mode { polyellipse, region };

    Mode mode = Mode::region;
    std::vector<double> rho_vec; // polyellipse mode, all > 1
    double h = 0.0;              // region mode, > 0
    double epsilon = 0.0;        // region mode; must be > 0 when 0 < lambda < 1
    std::optional<double> B_f;

    static AnalyticityContext polyellipse(std::vector<double> rho,
                                          std::optional<double> B = std::nullopt);
    static AnalyticityContext region(double h, double epsilon,
                                     std::optional<double> B = std::nullopt);

    /// rho = h + sqrt(1 + h^2) of the region mode.
    double region_rho() const;

    void validate() const;
};

} // namespace gegen

#endif
