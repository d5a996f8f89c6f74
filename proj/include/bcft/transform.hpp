#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcft/bicomplex.hpp"
#include "bcft/quadrature.hpp"
#include "bcft/signals.hpp"

namespace bcft {

/// Tolerances and budgets for the numerical transform.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    /// Relative floor; large transform values (compact signals far from the
    /// real axis) are accepted at rel_tol * |value|.
    double rel_tol = 1e-12;
    /// Budget for the two omitted tails, half per side.
    double tail_tol = 1e-12;
    std::size_t max_panels = std::size_t{1} << 20;
    /// Minimum panels per oscillation period of exp(i1 Re(w_k) t).
    double oscillation_density = 16.0;

    /// Throws DomainError unless all fields are positive and max_panels >= 2.
    void validate() const;
};

struct ComponentResult {
    Complex value{};
    double est_error = 0.0;
    std::size_t panels = 0;
};

struct TransformResult {
    Bicomplex value;
    /// Componentwise max of quadrature estimate plus tail budget.
    double est_error = 0.0;
    std::array<std::size_t, 2> panels{};
};

/// Margins below this are treated as outside the strip by the engine.
inline constexpr double kMinMargin = 1e-12;

/**
 * Truncation points (T_minus, T_plus) such that each omitted tail of
 * exp(i1 w t) f(t) is at most tail_tol/2 under the envelope, for a component
 * frequency with imaginary part v. Both are clamped to at least 1.
 * Throws OutsideRegionError when either side's margin is below kMinMargin.
 */
std::pair<double, double> truncation_bounds(const DecayEstimate& e, double v, double tail_tol);

/// Finite integration interval [lo, hi] for a signal at imaginary part v:
/// the support end where finite, otherwise the envelope truncation point.
std::pair<double, double> integration_window(const SignalSpec& s, double v, double tail_tol);

/// Quadrature of exp(i1 wk t) f(t) on [lo, hi] with the oscillation floor
/// and breakpoints of s. No region checks; est_error excludes tails.
ComponentResult integrate_component(const SignalSpec& s, Complex wk, double lo, double hi,
                                    const QuadratureConfig& cfg);

/// Complex transform of s at one idempotent component frequency. The kernel
/// is exp(+i1 wk t). Throws OutsideRegionError, ConvergenceError.
ComponentResult transform_component(const SignalSpec& s, Complex wk, const QuadratureConfig& cfg);

/// Bicomplex transform: component transforms at P1 w and P2 w recombined
/// with e1, e2. Throws OutsideRegionError (naming the failing component),
/// SingularityError, ConvergenceError.
TransformResult transform(const SignalSpec& s, const Bicomplex& w, const QuadratureConfig& cfg = {});

enum class PointStatus { ok, outside_roc, singular, no_converge };

const char* to_string(PointStatus status);

struct GridPoint {
    Bicomplex w;
    PointStatus status = PointStatus::ok;
    std::optional<TransformResult> result;
    std::string message;
};

/// Independent per-point evaluation; output order equals input order.
/// jobs == 0 uses the hardware concurrency.
std::vector<GridPoint> transform_grid(const SignalSpec& s, std::span<const Bicomplex> grid,
                                      const QuadratureConfig& cfg = {}, unsigned jobs = 1);

/// Header line of grid_csv.
inline constexpr const char* kGridCsvHeader =
    "a0,a1,a2,a3,re_w1,im_w1,re_w2,im_w2,fhat_a0,fhat_a1,fhat_a2,fhat_a3,est_error,status";

/// Grid results as CSV (header plus one row per point); value columns are
/// left empty for failed points.
std::string grid_csv(const std::vector<GridPoint>& points);

}  // namespace bcft
