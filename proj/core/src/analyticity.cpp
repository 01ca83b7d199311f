#include "gegen/analyticity.hpp"

#include <cmath>
#include <stdexcept>

namespace gegen {

AnalyticityContext AnalyticityContext::polyellipse(std::vector<double> rho, std::optional<double> B) {
    AnalyticityContext ctx;
    ctx.mode = Mode::polyellipse;
    ctx.rho_vec = std::move(rho);
    ctx.B_f = B;
    ctx.validate();
    return ctx;
}

AnalyticityContext AnalyticityContext::region(double h, double epsilon, std::optional<double> B) {
    AnalyticityContext ctx;
    ctx.mode = Mode::region;
    ctx.h = h;
    ctx.epsilon = epsilon;
    ctx.B_f = B;
    ctx.validate();
    return ctx;
}

double AnalyticityContext::region_rho() const {
    if (mode != Mode::region) throw std::domain_error("region_rho: not a region-mode context");
    return h + std::sqrt(1.0 + h * h);
}

void AnalyticityContext::validate() const {
    if (mode == Mode::polyellipse) {
        if (rho_vec.empty()) throw std::domain_error("AnalyticityContext: polyellipse needs rho_vec");
        for (double r : rho_vec)
            if (!(r > 1.0)) throw std::domain_error("AnalyticityContext: polyellipse radii must exceed 1");
    } else {
        if (!(h > 0.0)) throw std::domain_error("AnalyticityContext: region mode needs h > 0");
        if (epsilon < 0.0) throw std::domain_error("AnalyticityContext: epsilon must be >= 0");
    }
    if (B_f && !(*B_f > 0.0)) throw std::domain_error("AnalyticityContext: B_f must be positive");
}

} // namespace gegen
