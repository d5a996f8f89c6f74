#include "bcft/roc.hpp"

#include <algorithm>
#include <cmath>

#include "bcft/errors.hpp"
#include "bcft/format.hpp"

namespace bcft {

ConvergenceRegion::ConvergenceRegion(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw DomainError("convergence region requires alpha > 0 and beta > 0");
    }
}

bool ConvergenceRegion::bounded() const noexcept { return std::isfinite(alpha_) && std::isfinite(beta_); }

// Infinite rates follow IEEE arithmetic: beta - |a2| = +inf, (alpha+beta)/2 = +inf.
bool ConvergenceRegion::contains_units(const Bicomplex& w) const {
    const double a1 = w.a1();
    const double abs_a2 = std::abs(w.a2());
    return abs_a2 < 0.5 * (alpha_ + beta_) && -alpha_ + abs_a2 < a1 && a1 < beta_ - abs_a2;
}

bool ConvergenceRegion::contains_strips(const Bicomplex& w) const {
    const double y1 = w.w1().imag();
    const double y2 = w.w2().imag();
    return -alpha_ < y1 && y1 < beta_ && -alpha_ < y2 && y2 < beta_;
}

double ConvergenceRegion::component_margin(const Complex& wk) const {
    const double y = wk.imag();
    return std::min(y + alpha_, beta_ - y);
}

double ConvergenceRegion::margin(const Bicomplex& w) const {
    return std::min(component_margin(w.w1()), component_margin(w.w2()));
}

std::vector<PlanePoint> ConvergenceRegion::cross_section_polygon() const {
    if (!bounded()) throw DomainError("cross-section of an unbounded region is not a polygon");
    const double mid = 0.5 * (beta_ - alpha_);
    const double half = 0.5 * (alpha_ + beta_);
    return {{-alpha_, 0.0}, {mid, -half}, {beta_, 0.0}, {mid, half}};
}

std::string polygon_csv(const std::vector<PlanePoint>& polygon) {
    std::string out = "a1,a2\n";
    for (const auto& p : polygon) {
        out += format_number(p.a1) + "," + format_number(p.a2) + "\n";
    }
    return out;
}

}  // namespace bcft
