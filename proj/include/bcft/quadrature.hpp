#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "bcft/bicomplex.hpp"

namespace bcft {

using ComplexIntegrand = std::function<Complex(double)>;

struct QuadratureResult {
    Complex value{};
    /// Sum over panels of |Kronrod15 - Gauss7|.
    double error = 0.0;
    std::size_t panels = 0;
    bool converged = false;
};

struct AdaptiveOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    std::size_t min_panels = 1;
    std::size_t max_panels = std::size_t{1} << 20;
};

/**
 * Globally adaptive Gauss-Kronrod (7/15) quadrature of a complex integrand
 * on [lo, hi].
 *
 * The interval is first cut at every breakpoint strictly inside (lo, hi),
 * then each piece is divided uniformly so that at least min_panels panels
 * cover [lo, hi]. The panel with the largest error estimate is bisected
 * until the summed estimate is at most max(abs_tol, rel_tol * |value|) or
 * the panel budget is spent (converged = false).
 */
QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi,
                                    std::span<const double> breakpoints, const AdaptiveOptions& opts);

/// Real-valued convenience wrapper.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    std::span<const double> breakpoints, const AdaptiveOptions& opts);

}  // namespace bcft
