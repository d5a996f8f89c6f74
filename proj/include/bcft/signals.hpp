#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcft/bicomplex.hpp"
#include "bcft/roc.hpp"

namespace bcft {

/// Exponential envelope |f(t)| <= C1 exp(-alpha t) for t >= 0 and
/// |f(t)| <= C2 exp(beta t) for t <= 0.
///
/// When a rate is flagged arbitrary, every finite rate works; the stored
/// value is one finite witness.
struct DecayEstimate {
    double C1 = 1.0;
    double alpha = 1.0;
    double C2 = 1.0;
    double beta = 1.0;
    bool alpha_arbitrary = false;
    bool beta_arbitrary = false;

    /// Throws DomainError unless every field is finite and positive.
    void validate() const;

    /// Envelope value at t.
    double bound(double t) const;

    /// Region implied by the rates; arbitrary rates map to +infinity.
    ConvergenceRegion region() const;
};

/// Closed interval [lo, hi] outside of which a signal vanishes identically.
/// Either end may be infinite.
struct Support {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool compact() const;
    bool contains(double t) const { return lo <= t && t <= hi; }
};

using RealFunction = std::function<double(double)>;
using ComponentFunction = std::function<Complex(Complex)>;

/**
 * A real continuous-time signal together with everything the transform
 * engine needs: decay envelope, region of convergence, known zero set,
 * discontinuity locations, and optionally a closed-form component transform
 * used as an oracle.
 *
 * Values are immutable; all callables must be pure.
 */
struct SignalSpec {
    std::string name;
    std::vector<std::pair<std::string, double>> parameters;

    RealFunction eval;

    /// Envelope witness valid for component frequencies with imaginary part
    /// near v. Its margin min(alpha + v, beta - v) must be positive whenever v
    /// lies in `region` (or anywhere, for entire signals).
    std::function<DecayEstimate(double v)> envelope_at;

    ConvergenceRegion region{1.0, 1.0};

    /// Transform is entire: region checks are bypassed.
    bool entire = false;

    Support support{};

    /// Points where eval or a low derivative jumps; integration splits there.
    std::vector<double> breakpoints;

    /// Scalar transform formula applied to each idempotent component.
    ComponentFunction closed_form;

    /// Component frequencies at which closed_form has a pole.
    std::function<bool(Complex)> singular;

    /// Analytic n-th derivative as its own signal; null when not registered.
    std::function<SignalSpec(int n)> derivative;

    DecayEstimate envelope() const { return envelope_at(0.0); }
    bool has_closed_form() const { return static_cast<bool>(closed_form); }
    bool is_singular(const Complex& wk) const { return singular && singular(wk); }
    std::optional<double> parameter(const std::string& key) const;
};

using ParameterMap = std::map<std::string, double>;

// Built-in signals. Each throws DomainError on invalid parameters.

/// exp(-a|t|), alpha = beta = a.
SignalSpec two_sided_exp(double a = 1.0);
/// exp(-t) for t > 0, zero otherwise; alpha = 1, beta arbitrary.
SignalSpec one_sided_exp();
/// exp(-t^2/2); entire transform.
SignalSpec gaussian();
/// 1 on |t| <= a, zero otherwise; compact support.
SignalSpec rect(double a = 1.0);
/// exp(-t/T) sin(w0 t) for t >= 0, zero otherwise; alpha = 1/T, beta arbitrary.
SignalSpec damped_osc(double T = 1.0, double w0 = 2.0);

/// The five built-ins with default parameters, in catalog order.
std::vector<SignalSpec> catalog();

/// Names in catalog order.
std::vector<std::string> catalog_names();

/// Construct a built-in by name. Unknown names or parameter keys throw DomainError.
SignalSpec make_signal(const std::string& name, const ParameterMap& params = {});

/// Closed-form transform evaluated componentwise. Throws DomainError when s
/// has no closed form, OutsideRegionError outside the strip region (unless
/// entire), SingularityError at a pole.
Bicomplex closed_form_transform(const SignalSpec& s, const Bicomplex& w);

/// Catalog listing: [{name, parameters, has_closed_form, support}].
std::string catalog_json(const std::vector<SignalSpec>& signals);

/// Tolerance used by the damped oscillator pole predicate.
inline constexpr double kPoleTolerance = 1e-9;

/// Small-argument cutoff for the rect transform series branch.
inline constexpr double kSincSeriesCutoff = 1e-4;

/// 2 sin(a w)/w with the removable singularity at w = 0 handled by series.
Complex rect_component_transform(double a, Complex w);

}  // namespace bcft
