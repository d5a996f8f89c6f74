#include "bcft/properties.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <set>
#include <thread>
#include <tuple>

#include "bcft/errors.hpp"
#include "bcft/format.hpp"

namespace bcft {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double poly_exp_peak(int n, double s) {
    if (n == 0) return 1.0;
    return std::pow(n / (std::numbers::e * s), n);
}

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_in_region(const SignalSpec& s, const Bicomplex& w, const char* check) {
    if (s.entire) return;
    for (int k = 1; k <= 2; ++k) {
        const double m = s.region.component_margin(w.component(k));
        if (!(m > 0.0)) {
            throw OutsideRegionError(std::string(check) + ": frequency outside the region of " + s.name +
                                         " (component " + std::to_string(k) + ", margin " + format_number(m) + ")",
                                     k, m);
        }
    }
}

CheckReport finish(CheckReport r) {
    r.diff = distance(r.lhs, r.rhs);
    r.pass = r.diff <= r.tol;
    return r;
}

const Bicomplex kNaNBicomplex = Bicomplex::from_idempotent(Complex(kNaN, kNaN), Complex(kNaN, kNaN));

}  // namespace

ConvergenceRegion intersect(const ConvergenceRegion& r, const ConvergenceRegion& s) {
    return ConvergenceRegion(std::min(r.alpha(), s.alpha()), std::min(r.beta(), s.beta()));
}

SignalSpec linear_combination(const SignalSpec& f, const SignalSpec& g, double a, double b) {
    SignalSpec s;
    s.name = format_number(a) + "*" + f.name + "+" + format_number(b) + "*" + g.name;
    s.eval = [fe = f.eval, ge = g.eval, a, b](double t) { return a * fe(t) + b * ge(t); };
    s.envelope_at = [fe = f.envelope_at, ge = g.envelope_at, a, b](double v) {
        const DecayEstimate ef = fe(v);
        const DecayEstimate eg = ge(v);
        return DecayEstimate{std::abs(a) * ef.C1 + std::abs(b) * eg.C1, std::min(ef.alpha, eg.alpha),
                             std::abs(a) * ef.C2 + std::abs(b) * eg.C2, std::min(ef.beta, eg.beta),
                             ef.alpha_arbitrary && eg.alpha_arbitrary, ef.beta_arbitrary && eg.beta_arbitrary};
    };
    s.region = intersect(f.region, g.region);
    s.entire = f.entire && g.entire;
    s.support = {std::min(f.support.lo, g.support.lo), std::max(f.support.hi, g.support.hi)};
    s.breakpoints = merged(f.breakpoints, g.breakpoints);
    return s;
}

SignalSpec shifted(const SignalSpec& f, double a) {
    if (!std::isfinite(a)) throw DomainError("shift amount must be finite");
    SignalSpec s;
    s.name = f.name + "(t-" + format_number(a) + ")";
    s.eval = [fe = f.eval, a](double t) { return fe(t - a); };
    s.envelope_at = [fe = f.envelope_at, a](double v) {
        DecayEstimate e = fe(v);
        const double K = std::max(e.C1, e.C2) * std::exp(std::max(e.alpha, e.beta) * std::abs(a));
        e.C1 = K;
        e.C2 = K;
        return e;
    };
    s.region = f.region;
    s.entire = f.entire;
    s.support = {f.support.lo + a, f.support.hi + a};
    for (double x : f.breakpoints) s.breakpoints.push_back(x + a);
    return s;
}

SignalSpec scaled(const SignalSpec& f, double a) {
    if (a == 0.0 || !std::isfinite(a)) throw DomainError("scale factor must be finite and nonzero");
    const double m = std::abs(a);
    SignalSpec s;
    s.name = f.name + "(" + format_number(a) + "t)";
    s.eval = [fe = f.eval, a](double t) { return fe(a * t); };
    s.envelope_at = [fe = f.envelope_at, a, m](double v) {
        const DecayEstimate e = fe(v / a);
        if (a > 0.0) return DecayEstimate{e.C1, e.alpha * m, e.C2, e.beta * m, e.alpha_arbitrary, e.beta_arbitrary};
        return DecayEstimate{e.C2, e.beta * m, e.C1, e.alpha * m, e.beta_arbitrary, e.alpha_arbitrary};
    };
    if (a > 0.0) {
        s.region = ConvergenceRegion(f.region.alpha() * m, f.region.beta() * m);
        s.support = {f.support.lo / a, f.support.hi / a};
    } else {
        s.region = ConvergenceRegion(f.region.beta() * m, f.region.alpha() * m);
        s.support = {f.support.hi / a, f.support.lo / a};
    }
    s.entire = f.entire;
    for (double x : f.breakpoints) s.breakpoints.push_back(x / a);
    std::sort(s.breakpoints.begin(), s.breakpoints.end());
    return s;
}

SignalSpec times_t_power(const SignalSpec& f, int n, double slack) {
    if (n < 0) throw DomainError("times_t_power: n must be nonnegative");
    if (!(slack > 0.0)) throw DomainError("times_t_power: slack must be positive");
    SignalSpec s;
    s.name = "t^" + std::to_string(n) + "*" + f.name;
    s.eval = [fe = f.eval, n](double t) { return std::pow(t, n) * fe(t); };
    s.envelope_at = [fe = f.envelope_at, n, slack](double v) {
        DecayEstimate e = fe(v);
        const double s1 = std::min(slack, 0.5 * e.alpha);
        const double s2 = std::min(slack, 0.5 * e.beta);
        e.C1 *= poly_exp_peak(n, s1);
        e.alpha -= s1;
        e.C2 *= poly_exp_peak(n, s2);
        e.beta -= s2;
        return e;
    };
    s.region = f.region;
    s.entire = f.entire;
    s.support = f.support;
    s.breakpoints = f.breakpoints;
    return s;
}

SignalSpec convolution(const SignalSpec& f, const SignalSpec& g, const ConvolutionOptions& opts) {
    SignalSpec s;
    s.name = f.name + "*" + g.name;

    auto envelope = [fe = f.envelope_at, ge = g.envelope_at, slack = opts.slack](double v) {
        const DecayEstimate a = fe(v);
        const DecayEstimate b = ge(v);
        const double cross = a.C2 * b.C1 / (a.beta + b.alpha) + a.C1 * b.C2 / (a.alpha + b.beta);
        const double r1 = std::min(a.alpha, b.alpha);
        const double r2 = std::min(a.beta, b.beta);
        const double s1 = std::min(slack, 0.5 * r1);
        const double s2 = std::min(slack, 0.5 * r2);
        DecayEstimate e;
        e.C1 = cross + a.C1 * b.C1 / (std::numbers::e * s1);
        e.alpha = r1 - s1;
        e.C2 = cross + a.C2 * b.C2 / (std::numbers::e * s2);
        e.beta = r2 - s2;
        e.alpha_arbitrary = a.alpha_arbitrary && b.alpha_arbitrary;
        e.beta_arbitrary = a.beta_arbitrary && b.beta_arbitrary;
        return e;
    };

    s.eval = [f, g, fd = f.envelope_at(0.0), gd = g.envelope_at(0.0), hd = envelope(0.0), opts](double t) {
        const double scale = std::min(1.0, hd.bound(t));
        const double tol = opts.tail_tol * scale;
        const double right = std::max(0.0, t);
        const double left = std::min(0.0, t);
        const double up_rate = fd.alpha + gd.beta;
        const double down_rate = fd.beta + gd.alpha;
        const double up_peak = fd.bound(right) * gd.bound(t - right);
        const double down_peak = fd.bound(left) * gd.bound(t - left);
        const double up = std::max(0.0, std::log(up_peak / (up_rate * tol)) / up_rate);
        const double down = std::max(0.0, std::log(down_peak / (down_rate * tol)) / down_rate);

        const double lo = std::max({f.support.lo, t - g.support.hi, left - down});
        const double hi = std::min({f.support.hi, t - g.support.lo, right + up});
        if (!(hi > lo)) return 0.0;
        std::vector<double> cuts = f.breakpoints;
        for (double b : g.breakpoints) cuts.push_back(t - b);
        cuts.push_back(0.0);
        cuts.push_back(t);
        AdaptiveOptions inner;
        inner.abs_tol = opts.abs_tol * scale;
        inner.rel_tol = opts.rel_tol;
        inner.min_panels = 8;
        inner.max_panels = std::size_t{1} << 16;
        const auto& fe = f.eval;
        const auto& ge = g.eval;
        QuadratureResult q =
            integrate_adaptive(std::function<double(double)>([&](double u) { return fe(u) * ge(t - u); }), lo, hi,
                               cuts, inner);
        if (!q.converged) {
            throw ConvergenceError("inner convolution quadrature did not converge at t = " + format_number(t),
                                   q.error);
        }
        return q.value.real();
    };
    s.envelope_at = envelope;
    s.region = intersect(f.region, g.region);
    s.entire = f.entire && g.entire;
    s.support = {f.support.lo + g.support.lo, f.support.hi + g.support.hi};
    for (double x : f.breakpoints) {
        for (double y : g.breakpoints) s.breakpoints.push_back(x + y);
    }
    std::sort(s.breakpoints.begin(), s.breakpoints.end());
    s.breakpoints.erase(std::unique(s.breakpoints.begin(), s.breakpoints.end()), s.breakpoints.end());
    return s;
}

CheckReport check_linearity(const SignalSpec& f, const SignalSpec& g, double a, double b, const Bicomplex& w,
                            double tol, const QuadratureConfig& cfg) {
    require_in_region(f, w, "linearity");
    require_in_region(g, w, "linearity");
    CheckReport r;
    r.check = "linearity";
    r.signal = f.name;
    r.partner = g.name;
    r.w = w;
    r.tol = tol;
    r.lhs = transform(linear_combination(f, g, a, b), w, cfg).value;
    r.rhs = a * transform(f, w, cfg).value + b * transform(g, w, cfg).value;
    return finish(r);
}

CheckReport check_shift(const SignalSpec& f, double a, const Bicomplex& w, double tol, const QuadratureConfig& cfg) {
    require_in_region(f, w, "shift");
    CheckReport r;
    r.check = "shift";
    r.signal = f.name;
    r.parameter = a;
    r.w = w;
    r.tol = tol;
    r.lhs = transform(shifted(f, a), w, cfg).value;
    r.rhs = exp(Bicomplex::i1() * w * a) * transform(f, w, cfg).value;
    return finish(r);
}

CheckReport check_scale(const SignalSpec& f, double a, const Bicomplex& w, double tol, const QuadratureConfig& cfg) {
    if (a == 0.0 || !std::isfinite(a)) throw DomainError("scale: factor must be finite and nonzero");
    const Bicomplex u = w / a;
    require_in_region(f, u, "scale");
    CheckReport r;
    r.check = "scale";
    r.signal = f.name;
    r.parameter = a;
    r.w = w;
    r.tol = tol;
    r.lhs = transform(scaled(f, a), w, cfg).value;
    r.rhs = transform(f, u, cfg).value / std::abs(a);
    return finish(r);
}

CheckReport check_convolution(const SignalSpec& f, const SignalSpec& g, const Bicomplex& w, double tol,
                              const QuadratureConfig& cfg, const ConvolutionOptions& conv) {
    require_in_region(f, w, "convolution");
    require_in_region(g, w, "convolution");
    CheckReport r;
    r.check = "convolution";
    r.signal = f.name;
    r.partner = g.name;
    r.w = w;
    r.tol = tol;
    r.lhs = transform(convolution(f, g, conv), w, cfg).value;
    r.rhs = transform(f, w, cfg).value * transform(g, w, cfg).value;
    return finish(r);
}

double mult_by_t_step(int n, const Complex& wk) {
    return (n == 1 ? 1e-5 : 1e-4) * std::max(1.0, std::abs(wk));
}

CheckReport check_mult_by_t(const SignalSpec& f, int n, const Bicomplex& w, double tol, const QuadratureConfig& cfg,
                            double slack) {
    if (n != 1 && n != 2) throw DomainError("mult_by_t: n must be 1 or 2");
    require_in_region(f, w, "mult_by_t");
    const double h_max = std::max(mult_by_t_step(n, w.w1()), mult_by_t_step(n, w.w2()));
    if (!f.entire && f.region.margin(w) < 10.0 * h_max) {
        throw DomainError("mult_by_t: strip margin " + format_number(f.region.margin(w)) +
                          " is below ten finite-difference steps");
    }

    // Difference quotients amplify quadrature noise by 1/h^n.
    QuadratureConfig fine = cfg;
    fine.abs_tol = std::min(cfg.abs_tol, 1e-13);
    fine.rel_tol = std::min(cfg.rel_tol, 1e-14);
    auto derivative = [&](const Complex& wk) {
        const double h = mult_by_t_step(n, wk);
        const Complex plus = transform_component(f, wk + h, fine).value;
        const Complex minus = transform_component(f, wk - h, fine).value;
        if (n == 1) return (plus - minus) / (2.0 * h);
        const Complex mid = transform_component(f, wk, fine).value;
        return (plus - 2.0 * mid + minus) / (h * h);
    };
    const Bicomplex d = Bicomplex::from_idempotent(derivative(w.w1()), derivative(w.w2()));

    CheckReport r;
    r.check = "mult_by_t";
    r.signal = f.name;
    r.order = n;
    r.w = w;
    r.tol = tol;
    r.lhs = transform(times_t_power(f, n, slack), w, cfg).value;
    r.rhs = pow(-Bicomplex::i1(), n) * d;
    return finish(r);
}

CheckReport check_derivative_of_signal(const SignalSpec& f, int n, const Bicomplex& w, double tol,
                                       const QuadratureConfig& cfg) {
    if (!f.derivative) throw DomainError("derivative: signal " + f.name + " has no registered derivatives");
    const SignalSpec d = f.derivative(n);
    require_in_region(f, w, "derivative");
    CheckReport r;
    r.check = "derivative";
    r.signal = f.name;
    r.order = n;
    r.w = w;
    r.tol = tol;
    r.lhs = transform(d, w, cfg).value;
    r.rhs = pow(-Bicomplex::i1() * w, n) * transform(f, w, cfg).value;
    return finish(r);
}

std::vector<CheckReport> check_compact_support_entire(const SignalSpec& f, const std::vector<Bicomplex>& sample,
                                                      double tol, const QuadratureConfig& cfg) {
    if (!f.support.compact()) throw DomainError("compact_support: signal " + f.name + " is not compactly supported");
    std::vector<CheckReport> out;
    out.reserve(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        CheckReport r;
        r.check = "compact_support";
        r.signal = f.name;
        r.index = i;
        r.w = sample[i];
        r.tol = tol;
        try {
            r.lhs = transform(f, sample[i], cfg).value;
        } catch (const Error& e) {
            r.lhs = kNaNBicomplex;
            r.rhs = kNaNBicomplex;
            r.diff = kNaN;
            r.error = e.what();
            out.push_back(r);
            continue;
        }
        if (f.has_closed_form()) {
            r.rhs = closed_form_transform(f, sample[i]);
            r.diff = distance(r.lhs, r.rhs) / std::max(1.0, magnitude(r.rhs));
        } else {
            r.rhs = r.lhs;
            r.diff = 0.0;
        }
        r.pass = r.diff <= tol;
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {"linearity",  "shift",      "scale",          "convolution",
                                                   "mult_by_t",  "derivative", "compact_support"};
    return names;
}

UnitRandom::UnitRandom(std::uint64_t seed) : state_(seed) {}

double UnitRandom::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

std::vector<Bicomplex> sample_frequencies(const ConvergenceRegion& region, std::size_t count, UnitRandom& rng,
                                          double min_margin, double re_span, double im_cap) {
    const double lo = std::max(-region.alpha() + min_margin, -im_cap);
    const double hi = std::min(region.beta() - min_margin, im_cap);
    if (!(hi >= lo)) throw DomainError("sample_frequencies: strip narrower than twice the margin");
    std::vector<Bicomplex> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) {
            out.push_back(Bicomplex::zero());
            continue;
        }
        const double x1 = rng.uniform(-re_span, re_span);
        const double y1 = rng.uniform(lo, hi);
        const double x2 = rng.uniform(-re_span, re_span);
        const double y2 = rng.uniform(lo, hi);
        out.push_back(Bicomplex::from_idempotent(Complex(x1, y1), Complex(x2, y2)));
    }
    return out;
}

namespace {

std::uint64_t stream_seed(std::uint64_t seed, const std::string& check, const std::string& signal) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char c : check + "/" + signal) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return seed ^ h;
}

struct Task {
    CheckReport base;
    std::function<CheckReport()> run;
};

bool selected(const std::vector<std::string>& filter, const std::string& name) {
    return filter.empty() || std::find(filter.begin(), filter.end(), name) != filter.end();
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteOptions& opts) {
    for (const auto& c : opts.checks) {
        if (!selected(check_names(), c) || c.empty()) throw DomainError("unknown check '" + c + "'");
    }
    const auto names = catalog_names();
    for (const auto& s : opts.signals) {
        if (std::find(names.begin(), names.end(), s) == names.end()) throw DomainError("unknown signal '" + s + "'");
    }

    const auto signals = catalog();
    const auto& tol = opts.tolerances;
    const auto& cfg = opts.quadrature;
    const std::size_t count = opts.frequencies;
    std::vector<Task> tasks;

    auto add = [&](CheckReport base, std::function<CheckReport()> fn) {
        tasks.push_back({std::move(base), std::move(fn)});
    };
    auto base_report = [](const std::string& check, const SignalSpec& s, std::size_t i, const Bicomplex& w,
                          double t) {
        CheckReport r;
        r.check = check;
        r.signal = s.name;
        r.index = i;
        r.w = w;
        r.tol = t;
        return r;
    };

    for (const auto& check : check_names()) {
        if (!selected(opts.checks, check)) continue;
        for (const auto& s : signals) {
            if (!selected(opts.signals, s.name)) continue;
            UnitRandom rng(stream_seed(opts.seed, check, s.name));

            if (check == "linearity") {
                const SignalSpec g = s.name == "gaussian" ? rect(1.0) : gaussian();
                const auto ws = sample_frequencies(intersect(s.region, g.region), count, rng, 0.1);
                for (std::size_t i = 0; i < ws.size(); ++i) {
                    const double a = rng.uniform(-2.0, 2.0);
                    const double b = rng.uniform(-2.0, 2.0);
                    CheckReport base = base_report(check, s, i, ws[i], tol.linearity);
                    base.partner = g.name;
                    add(base, [=, &cfg] {
                        CheckReport r = check_linearity(s, g, a, b, ws[i], tol.linearity, cfg);
                        r.index = i;
                        return r;
                    });
                }
            } else if (check == "shift") {
                const auto ws = sample_frequencies(s.region, count, rng, 0.1);
                for (std::size_t i = 0; i < ws.size(); ++i) {
                    const double a = rng.uniform(-1.0, 1.0);
                    CheckReport base = base_report(check, s, i, ws[i], tol.shift);
                    base.parameter = a;
                    add(base, [=, &cfg] {
                        CheckReport r = check_shift(s, a, ws[i], tol.shift, cfg);
                        r.index = i;
                        return r;
                    });
                }
            } else if (check == "scale") {
                const auto us = sample_frequencies(s.region, count, rng, 0.1);
                for (std::size_t i = 0; i < us.size(); ++i) {
                    const double mag = rng.uniform(0.5, 2.0);
                    const double a = rng.next() < 0.5 ? -mag : mag;
                    const Bicomplex w = a * us[i];
                    CheckReport base = base_report(check, s, i, w, tol.scale);
                    base.parameter = a;
                    add(base, [=, &cfg] {
                        CheckReport r = check_scale(s, a, w, tol.scale, cfg);
                        r.index = i;
                        return r;
                    });
                }
            } else if (check == "convolution") {
                const auto ws = sample_frequencies(s.region, count, rng, 0.2);
                for (std::size_t i = 0; i < ws.size(); ++i) {
                    CheckReport base = base_report(check, s, i, ws[i], tol.convolution);
                    base.partner = s.name;
                    add(base, [=, &cfg] {
                        CheckReport r = check_convolution(s, s, ws[i], tol.convolution, cfg);
                        r.index = i;
                        return r;
                    });
                }
            } else if (check == "mult_by_t") {
                const auto ws = sample_frequencies(s.region, count, rng, 0.2);
                for (int n = 1; n <= 2; ++n) {
                    const double t = n == 1 ? tol.mult_by_t1 : tol.mult_by_t2;
                    for (std::size_t i = 0; i < ws.size(); ++i) {
                        CheckReport base = base_report(check, s, i, ws[i], t);
                        base.order = n;
                        add(base, [=, &cfg] {
                            CheckReport r = check_mult_by_t(s, n, ws[i], t, cfg);
                            r.index = i;
                            return r;
                        });
                    }
                }
            } else if (check == "derivative") {
                if (!s.derivative) continue;
                const auto ws = sample_frequencies(s.region, count, rng, 0.1);
                for (int n = 1; n <= 2; ++n) {
                    try {
                        s.derivative(n);
                    } catch (const DomainError&) {
                        continue;
                    }
                    for (std::size_t i = 0; i < ws.size(); ++i) {
                        CheckReport base = base_report(check, s, i, ws[i], tol.derivative);
                        base.order = n;
                        add(base, [=, &cfg] {
                            CheckReport r = check_derivative_of_signal(s, n, ws[i], tol.derivative, cfg);
                            r.index = i;
                            return r;
                        });
                    }
                }
            } else if (check == "compact_support") {
                if (!s.support.compact()) continue;
                // Far outside any strip: |Im| up to 50.
                const auto ws = sample_frequencies(ConvergenceRegion(ConvergenceRegion::kUnbounded,
                                                                     ConvergenceRegion::kUnbounded),
                                                   count, rng, 0.0, 10.0, 50.0);
                for (std::size_t i = 0; i < ws.size(); ++i) {
                    add(base_report(check, s, i, ws[i], tol.compact_support), [=, &cfg] {
                        CheckReport r = check_compact_support_entire(s, {ws[i]}, tol.compact_support, cfg).front();
                        r.index = i;
                        return r;
                    });
                }
            }
        }
    }

    std::vector<CheckReport> reports(tasks.size());
    auto execute = [&](std::size_t i) {
        try {
            reports[i] = tasks[i].run();
        } catch (const Error& e) {
            CheckReport r = tasks[i].base;
            r.lhs = kNaNBicomplex;
            r.rhs = kNaNBicomplex;
            r.diff = kNaN;
            r.pass = false;
            r.error = e.what();
            reports[i] = r;
        }
    };
    unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) execute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) execute(i);
            });
        }
    }

    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.check, a.signal, a.order, a.index) < std::tie(b.check, b.signal, b.order, b.index);
    });
    return reports;
}

std::string report_json(const CheckReport& r) {
    std::string out = "{\"check\":" + json_string(r.check) + ",\"signal\":" + json_string(r.signal);
    if (!r.partner.empty()) out += ",\"partner\":" + json_string(r.partner);
    if (r.order != 0) out += ",\"n\":" + std::to_string(r.order);
    if (r.check == "shift" || r.check == "scale") out += ",\"a\":" + json_number(r.parameter);
    out += ",\"index\":" + std::to_string(r.index);
    out += ",\"w\":" + to_json(r.w) + ",\"lhs\":" + to_json(r.lhs) + ",\"rhs\":" + to_json(r.rhs);
    out += ",\"diff\":" + json_number(r.diff) + ",\"tol\":" + json_number(r.tol);
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    if (!r.error.empty()) out += ",\"error\":" + json_string(r.error);
    out += "}";
    return out;
}

}  // namespace bcft
