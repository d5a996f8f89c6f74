#pragma once

#include <limits>
#include <string>
#include <vector>

#include "bcft/bicomplex.hpp"

namespace bcft {

/// A vertex in the (a1, a2) cross-section plane.
struct PlanePoint {
    double a1;
    double a2;
};

/**
 * Region of absolute convergence of the bicomplex Fourier transform for a
 * signal with right-tail decay rate alpha and left-tail growth bound beta.
 *
 * The region is the product of the open strips -alpha < Im(w_k) < beta in
 * both idempotent planes. Either rate may be +infinity, which models a side
 * on which any finite rate works.
 */
class ConvergenceRegion {
public:
    static constexpr double kUnbounded = std::numeric_limits<double>::infinity();

    /// Throws DomainError unless alpha > 0 and beta > 0 (NaN rejected).
    ConvergenceRegion(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    bool bounded() const noexcept;

    /// Four-unit form: |a2| < (alpha+beta)/2 and -alpha+|a2| < a1 < beta-|a2|.
    bool contains_units(const Bicomplex& w) const;

    /// Componentwise form: -alpha < Im(P_k w) < beta for k = 1, 2.
    bool contains_strips(const Bicomplex& w) const;

    /// Signed distance of the nearer component to its strip boundary.
    /// Positive iff contains_strips(w).
    double margin(const Bicomplex& w) const;

    /// Strip margin of a single component frequency.
    double component_margin(const Complex& wk) const;

    /// Vertices of the open rhombus in the (a1, a2) plane, counterclockwise
    /// from the leftmost. Throws DomainError for an unbounded region.
    std::vector<PlanePoint> cross_section_polygon() const;

private:
    double alpha_;
    double beta_;
};

/// CSV with header `a1,a2` and one vertex per row, closing vertex not repeated.
std::string polygon_csv(const std::vector<PlanePoint>& polygon);

}  // namespace bcft
