#include "bcft/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "bcft/errors.hpp"
#include "bcft/format.hpp"

namespace bcft {

namespace {

double tail_length(double C, double rate_margin, double tail_tol, const char* side) {
    if (!(rate_margin >= kMinMargin)) {
        throw OutsideRegionError(std::string("truncation: ") + side + " margin " + format_number(rate_margin) +
                                     " is not positive",
                                 0, rate_margin);
    }
    // C * exp(-m T) / m <= tail_tol / 2
    const double T = std::log(2.0 * C / (rate_margin * tail_tol)) / rate_margin;
    return std::max(1.0, T);
}

std::string component_tag(int k) { return k == 0 ? std::string() : " (component " + std::to_string(k) + ")"; }

ComponentResult component_checked(const SignalSpec& s, Complex wk, const QuadratureConfig& cfg, int k) {
    if (!s.entire) {
        const double m = s.region.component_margin(wk);
        if (!(m > 0.0)) {
            throw OutsideRegionError("frequency outside the region of " + s.name + component_tag(k) + ", margin " +
                                         format_number(m),
                                     k, m);
        }
    }
    std::pair<double, double> window;
    try {
        window = integration_window(s, wk.imag(), cfg.tail_tol);
    } catch (const OutsideRegionError& e) {
        throw OutsideRegionError(e.what() + component_tag(k), k, e.margin());
    }
    ComponentResult r = integrate_component(s, wk, window.first, window.second, cfg);
    r.est_error += cfg.tail_tol;
    return r;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(tail_tol > 0.0) || !(oscillation_density > 0.0)) {
        throw DomainError("quadrature tolerances and density must be positive");
    }
    if (max_panels < 2) throw DomainError("max_panels must be at least 2");
}

std::pair<double, double> truncation_bounds(const DecayEstimate& e, double v, double tail_tol) {
    if (!(tail_tol > 0.0)) throw DomainError("tail_tol must be positive");
    const double t_plus = tail_length(e.C1, e.alpha + v, tail_tol, "right-tail");
    const double t_minus = tail_length(e.C2, e.beta - v, tail_tol, "left-tail");
    return {t_minus, t_plus};
}

std::pair<double, double> integration_window(const SignalSpec& s, double v, double tail_tol) {
    if (s.support.compact()) return {s.support.lo, s.support.hi};
    const DecayEstimate e = s.envelope_at(v);
    double lo = s.support.lo;
    double hi = s.support.hi;
    if (!std::isfinite(hi)) hi = tail_length(e.C1, e.alpha + v, tail_tol, "right-tail");
    if (!std::isfinite(lo)) lo = -tail_length(e.C2, e.beta - v, tail_tol, "left-tail");
    if (hi < lo) hi = lo;
    return {lo, hi};
}

ComponentResult integrate_component(const SignalSpec& s, Complex wk, double lo, double hi,
                                    const QuadratureConfig& cfg) {
    cfg.validate();
    const double periods = std::abs(wk.real()) * (hi - lo) / (2.0 * std::numbers::pi);
    AdaptiveOptions opts;
    opts.abs_tol = cfg.abs_tol;
    opts.rel_tol = cfg.rel_tol;
    opts.max_panels = cfg.max_panels;
    opts.min_panels = static_cast<std::size_t>(std::max(8.0, std::ceil(cfg.oscillation_density * periods)));
    const Complex i_w = Complex(0.0, 1.0) * wk;
    const auto& f = s.eval;
    QuadratureResult q = integrate_adaptive(
        ComplexIntegrand([&](double t) {
            const double ft = f(t);
            return ft == 0.0 ? Complex{} : std::exp(i_w * t) * ft;
        }),
        lo, hi, s.breakpoints, opts);
    if (!q.converged) {
        throw ConvergenceError("quadrature for " + s.name + " did not converge: estimate " + format_number(q.error) +
                                   " after " + std::to_string(q.panels) + " panels",
                               q.error);
    }
    return {q.value, q.error, q.panels};
}

ComponentResult transform_component(const SignalSpec& s, Complex wk, const QuadratureConfig& cfg) {
    return component_checked(s, wk, cfg, 0);
}

TransformResult transform(const SignalSpec& s, const Bicomplex& w, const QuadratureConfig& cfg) {
    if (!w.is_finite()) throw DomainError("transform: frequency must be finite");
    for (int k = 1; k <= 2; ++k) {
        if (s.is_singular(w.component(k))) {
            throw SingularityError("component " + std::to_string(k) + " frequency is a pole of " + s.name);
        }
    }
    const ComponentResult r1 = component_checked(s, w.w1(), cfg, 1);
    const ComponentResult r2 = w.w1() == w.w2() ? r1 : component_checked(s, w.w2(), cfg, 2);
    return {Bicomplex::from_idempotent(r1.value, r2.value), std::max(r1.est_error, r2.est_error),
            {r1.panels, r2.panels}};
}

const char* to_string(PointStatus status) {
    switch (status) {
        case PointStatus::ok: return "ok";
        case PointStatus::outside_roc: return "outside_roc";
        case PointStatus::singular: return "singular";
        case PointStatus::no_converge: return "no_converge";
    }
    return "unknown";
}

std::vector<GridPoint> transform_grid(const SignalSpec& s, std::span<const Bicomplex> grid,
                                      const QuadratureConfig& cfg, unsigned jobs) {
    std::vector<GridPoint> out(grid.size());
    auto evaluate = [&](std::size_t i) {
        GridPoint& p = out[i];
        p.w = grid[i];
        try {
            p.result = transform(s, grid[i], cfg);
            p.status = PointStatus::ok;
        } catch (const OutsideRegionError& e) {
            p.status = PointStatus::outside_roc;
            p.message = e.what();
        } catch (const SingularityError& e) {
            p.status = PointStatus::singular;
            p.message = e.what();
        } catch (const ConvergenceError& e) {
            p.status = PointStatus::no_converge;
            p.message = e.what();
        }
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, grid.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < grid.size(); i = next++) evaluate(i);
        });
    }
    workers.clear();
    return out;
}

std::string grid_csv(const std::vector<GridPoint>& points) {
    std::string out = kGridCsvHeader;
    out += '\n';
    for (const auto& p : points) {
        for (double a : p.w.units()) out += format_number(a) + ",";
        out += format_number(p.w.w1().real()) + "," + format_number(p.w.w1().imag()) + "," +
               format_number(p.w.w2().real()) + "," + format_number(p.w.w2().imag()) + ",";
        if (p.result) {
            for (double a : p.result->value.units()) out += format_number(a) + ",";
            out += format_number(p.result->est_error) + ",";
        } else {
            out += ",,,,,";
        }
        out += to_string(p.status);
        out += '\n';
    }
    return out;
}

}  // namespace bcft
