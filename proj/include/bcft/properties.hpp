#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcft/bicomplex.hpp"
#include "bcft/signals.hpp"
#include "bcft/transform.hpp"

namespace bcft {

// ---------------------------------------------------------------------------
// Derived signals. Each wrapper recomputes envelope, region, support and
// breakpoints so the transform engine treats it like any other signal.
// ---------------------------------------------------------------------------

/// a f(t) + b g(t). Region is the intersection; envelope constants add.
SignalSpec linear_combination(const SignalSpec& f, const SignalSpec& g, double a, double b);

/// f(t - a). Envelope constants inflate by exp(max(alpha, beta) |a|).
SignalSpec shifted(const SignalSpec& f, double a);

/// f(a t), a != 0. Rates scale by |a| and swap sides when a < 0.
SignalSpec scaled(const SignalSpec& f, double a);

/// t^n f(t). The polynomial factor is absorbed by shrinking each rate by
/// min(slack, rate/2).
SignalSpec times_t_power(const SignalSpec& f, int n, double slack = 0.1);

struct ConvolutionOptions {
    /// Inner quadrature tolerances for h(t) = int f(u) g(t-u) du.
    double abs_tol = 1e-13;
    double rel_tol = 1e-13;
    double tail_tol = 1e-14;
    /// Rate shrink absorbing the linear factor of the middle term.
    double slack = 0.1;
};

/// (f * g)(t) evaluated pointwise by inner quadrature.
///
/// For t >= 0 the envelope is split over u < 0, 0 <= u <= t and u > t:
///   C1 = C2f C1g/(beta_f + alpha_g) + C1f C2g/(alpha_f + beta_g) + C1f C1g/(e s),
/// with rate min(alpha_f, alpha_g) - s; the mirror image holds for t <= 0.
SignalSpec convolution(const SignalSpec& f, const SignalSpec& g, const ConvolutionOptions& opts = {});

/// Intersection of two strip regions.
ConvergenceRegion intersect(const ConvergenceRegion& r, const ConvergenceRegion& s);

// ---------------------------------------------------------------------------
// Theorem checks.
// ---------------------------------------------------------------------------

struct CheckReport {
    std::string check;
    std::string signal;
    std::string partner;  ///< second signal of binary checks, else empty
    int order = 0;        ///< n for mult_by_t / derivative, else 0
    double parameter = 0.0;  ///< shift / scale amount, or 0
    std::size_t index = 0;   ///< frequency index within the suite
    Bicomplex w;
    Bicomplex lhs;
    Bicomplex rhs;
    double diff = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string error;  ///< set when a side could not be computed
};

struct CheckTolerances {
    double linearity = 1e-7;
    double shift = 1e-7;
    double scale = 1e-7;
    double convolution = 1e-6;
    double mult_by_t1 = 1e-5;
    double mult_by_t2 = 1e-3;
    double derivative = 1e-7;
    /// Relative to max(1, |closed form|).
    double compact_support = 1e-6;
};

/// F{a f + b g}(w) against a f^(w) + b g^(w).
CheckReport check_linearity(const SignalSpec& f, const SignalSpec& g, double a, double b, const Bicomplex& w,
                            double tol, const QuadratureConfig& cfg = {});

/// F{f(t - a)}(w) against exp(i1 w a) f^(w).
CheckReport check_shift(const SignalSpec& f, double a, const Bicomplex& w, double tol,
                        const QuadratureConfig& cfg = {});

/// F{f(a t)}(w) against f^(w / a) / |a|. Throws DomainError for a == 0.
CheckReport check_scale(const SignalSpec& f, double a, const Bicomplex& w, double tol,
                        const QuadratureConfig& cfg = {});

/// F{f * g}(w) against f^(w) g^(w).
CheckReport check_convolution(const SignalSpec& f, const SignalSpec& g, const Bicomplex& w, double tol,
                              const QuadratureConfig& cfg = {}, const ConvolutionOptions& conv = {});

/// Finite-difference step used by check_mult_by_t for a component frequency.
double mult_by_t_step(int n, const Complex& wk);

/// F{t^n f}(w) against (-i1)^n d^n/dw^n f^(w), the derivative taken by
/// central differences along each idempotent component. n in {1, 2}.
/// Throws DomainError when the strip margin is below 10 h.
CheckReport check_mult_by_t(const SignalSpec& f, int n, const Bicomplex& w, double tol,
                            const QuadratureConfig& cfg = {}, double slack = 0.1);

/// F{f^(n)}(w) against (-i1 w)^n f^(w). Throws DomainError when f has no
/// registered n-th derivative.
CheckReport check_derivative_of_signal(const SignalSpec& f, int n, const Bicomplex& w, double tol,
                                       const QuadratureConfig& cfg = {});

/// Compactly supported f: the transform succeeds at every sample and matches
/// the closed form to relative tol. One report per sample.
std::vector<CheckReport> check_compact_support_entire(const SignalSpec& f, const std::vector<Bicomplex>& sample,
                                                      double tol, const QuadratureConfig& cfg = {});

// ---------------------------------------------------------------------------
// Suite.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Check names in suite order.
const std::vector<std::string>& check_names();

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t frequencies = 20;
    std::vector<std::string> checks;   ///< empty = all
    std::vector<std::string> signals;  ///< empty = all catalog signals
    unsigned jobs = 1;
    QuadratureConfig quadrature{};
    CheckTolerances tolerances{};
};

/// Deterministic stream of doubles in [0, 1) independent of the standard
/// library's distribution implementations.
class UnitRandom {
public:
    explicit UnitRandom(std::uint64_t seed);
    double next();
    double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::uint64_t state_;
};

/// Frequencies whose components lie at least min_margin inside the strips
/// of `region`, with real parts in [-re_span, re_span] and imaginary parts
/// clipped to [-im_cap, im_cap]. Index 0 is always w = 0.
std::vector<Bicomplex> sample_frequencies(const ConvergenceRegion& region, std::size_t count, UnitRandom& rng,
                                          double min_margin, double re_span = 3.0, double im_cap = 1.5);

/// Runs the selected checks over the selected catalog signals. Reports are
/// sorted by (check, signal, order, index). Throws DomainError for unknown
/// filter names.
std::vector<CheckReport> run_suite(const SuiteOptions& opts);

/// One JSON object per line.
std::string report_json(const CheckReport& r);

}  // namespace bcft
