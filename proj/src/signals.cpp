#include "bcft/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bcft/errors.hpp"
#include "bcft/format.hpp"

namespace bcft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI(0.0, 1.0);

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + " must be finite and positive");
    }
}

// Rate used for witnesses of super-exponentially decaying or compactly
// supported signals: keeps a unit margin around any frequency.
double witness_rate(double v) { return std::max(1.0, std::abs(v) + 1.0); }

// sup_t |t|^k exp(-s|t|) = (k / (e s))^k.
double poly_exp_peak(int k, double s) {
    if (k == 0) return 1.0;
    return std::pow(k / (std::numbers::e * s), k);
}

SignalSpec gaussian_derivative(int n) {
    if (n < 1 || n > 2) throw DomainError("gaussian: derivatives registered for n = 1, 2 only");
    SignalSpec d;
    d.name = n == 1 ? "gaussian'" : "gaussian''";
    if (n == 1) {
        d.eval = [](double t) { return -t * std::exp(-0.5 * t * t); };
    } else {
        d.eval = [](double t) { return (t * t - 1.0) * std::exp(-0.5 * t * t); };
    }
    // |p_n(t)| e^{-t^2/2} <= |p_n(t)| e^{c^2/2} e^{-c|t|}; half a unit of the
    // rate absorbs the polynomial.
    d.envelope_at = [n](double v) {
        constexpr double shrink = 0.5;
        const double c = witness_rate(v);
        const double poly = n == 1 ? poly_exp_peak(1, shrink) : poly_exp_peak(2, shrink) + 1.0;
        const double C = std::exp(0.5 * c * c) * poly;
        return DecayEstimate{C, c - shrink, C, c - shrink, true, true};
    };
    d.region = ConvergenceRegion(kInf, kInf);
    d.entire = true;
    return d;
}

SignalSpec two_sided_exp_derivative(double a, int n) {
    // f'' carries a delta at the origin; only the classical first derivative is registered.
    if (n != 1) throw DomainError("two_sided_exp: only the first derivative is piecewise smooth");
    SignalSpec d;
    d.name = "two_sided_exp'";
    d.parameters = {{"a", a}};
    d.eval = [a](double t) {
        if (t == 0.0) return 0.0;
        return (t > 0.0 ? -a : a) * std::exp(-a * std::abs(t));
    };
    d.envelope_at = [a](double) { return DecayEstimate{a, a, a, a}; };
    d.region = ConvergenceRegion(a, a);
    d.breakpoints = {0.0};
    return d;
}

}  // namespace

void DecayEstimate::validate() const {
    for (double x : {C1, alpha, C2, beta}) {
        if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("decay estimate fields must be finite and positive");
    }
}

double DecayEstimate::bound(double t) const {
    return t >= 0.0 ? C1 * std::exp(-alpha * t) : C2 * std::exp(beta * t);
}

ConvergenceRegion DecayEstimate::region() const {
    return ConvergenceRegion(alpha_arbitrary ? kInf : alpha, beta_arbitrary ? kInf : beta);
}

bool Support::compact() const { return std::isfinite(lo) && std::isfinite(hi); }

std::optional<double> SignalSpec::parameter(const std::string& key) const {
    for (const auto& [k, v] : parameters) {
        if (k == key) return v;
    }
    return std::nullopt;
}

Complex rect_component_transform(double a, Complex w) {
    const Complex x = a * w;
    if (std::abs(x) < kSincSeriesCutoff) {
        const Complex x2 = x * x;
        return 2.0 * a * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
    }
    return 2.0 * std::sin(x) / w;
}

SignalSpec two_sided_exp(double a) {
    require_positive(a, "two_sided_exp: a");
    SignalSpec s;
    s.name = "two_sided_exp";
    s.parameters = {{"a", a}};
    s.eval = [a](double t) { return std::exp(-a * std::abs(t)); };
    s.envelope_at = [a](double) { return DecayEstimate{1.0, a, 1.0, a}; };
    s.region = ConvergenceRegion(a, a);
    s.breakpoints = {0.0};
    s.closed_form = [a](Complex w) { return 2.0 * a / (a * a + w * w); };
    s.derivative = [a](int n) { return two_sided_exp_derivative(a, n); };
    return s;
}

SignalSpec one_sided_exp() {
    SignalSpec s;
    s.name = "one_sided_exp";
    s.eval = [](double t) { return t > 0.0 ? std::exp(-t) : 0.0; };
    s.envelope_at = [](double v) {
        return DecayEstimate{1.0, 1.0, 1.0, std::max(1.0, v + 1.0), false, true};
    };
    s.region = ConvergenceRegion(1.0, kInf);
    s.support = {0.0, kInf};
    s.breakpoints = {0.0};
    s.closed_form = [](Complex w) { return 1.0 / (1.0 - kI * w); };
    return s;
}

SignalSpec gaussian() {
    SignalSpec s;
    s.name = "gaussian";
    s.eval = [](double t) { return std::exp(-0.5 * t * t); };
    // exp(-t^2/2) <= exp(c^2/2) exp(-c|t|) for every c > 0.
    s.envelope_at = [](double v) {
        const double c = witness_rate(v);
        const double C = std::exp(0.5 * c * c);
        return DecayEstimate{C, c, C, c, true, true};
    };
    s.region = ConvergenceRegion(kInf, kInf);
    s.entire = true;
    s.closed_form = [](Complex w) { return std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * w * w); };
    s.derivative = [](int n) { return gaussian_derivative(n); };
    return s;
}

SignalSpec rect(double a) {
    require_positive(a, "rect: a");
    SignalSpec s;
    s.name = "rect";
    s.parameters = {{"a", a}};
    s.eval = [a](double t) { return std::abs(t) <= a ? 1.0 : 0.0; };
    s.envelope_at = [a](double v) {
        const double c = witness_rate(v);
        const double C = std::exp(c * a);
        return DecayEstimate{C, c, C, c, true, true};
    };
    s.region = ConvergenceRegion(kInf, kInf);
    s.entire = true;
    s.support = {-a, a};
    s.breakpoints = {-a, a};
    s.closed_form = [a](Complex w) { return rect_component_transform(a, w); };
    return s;
}

SignalSpec damped_osc(double T, double w0) {
    require_positive(T, "damped_osc: T");
    require_positive(w0, "damped_osc: w0");
    SignalSpec s;
    s.name = "damped_osc";
    s.parameters = {{"T", T}, {"w0", w0}};
    s.eval = [T, w0](double t) { return t >= 0.0 ? std::exp(-t / T) * std::sin(w0 * t) : 0.0; };
    s.envelope_at = [T](double v) {
        return DecayEstimate{1.0, 1.0 / T, 1.0, std::max(1.0, v + 1.0), false, true};
    };
    s.region = ConvergenceRegion(1.0 / T, kInf);
    s.support = {0.0, kInf};
    s.breakpoints = {0.0};
    // Sign fixed against quadrature of exp(+i w t) f(t); poles at +-w0 - i/T.
    s.closed_form = [T, w0](Complex w) {
        const Complex damp = kI / T;
        return 0.5 * (1.0 / (w + w0 + damp) - 1.0 / (w - w0 + damp));
    };
    s.singular = [T, w0](Complex w) {
        const Complex damp = kI / T;
        return std::abs(w - (w0 - damp)) < kPoleTolerance || std::abs(w - (-w0 - damp)) < kPoleTolerance;
    };
    return s;
}

std::vector<SignalSpec> catalog() {
    return {two_sided_exp(1.0), one_sided_exp(), gaussian(), rect(1.0), damped_osc(1.0, 2.0)};
}

std::vector<std::string> catalog_names() {
    return {"two_sided_exp", "one_sided_exp", "gaussian", "rect", "damped_osc"};
}

SignalSpec make_signal(const std::string& name, const ParameterMap& params) {
    auto take = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : params) {
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
                throw DomainError("signal " + name + " has no parameter '" + key + "'");
            }
        }
    };
    auto get = [&](const char* key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    if (name == "two_sided_exp") {
        take({"a"});
        return two_sided_exp(get("a", 1.0));
    }
    if (name == "one_sided_exp") {
        take({});
        return one_sided_exp();
    }
    if (name == "gaussian") {
        take({});
        return gaussian();
    }
    if (name == "rect") {
        take({"a"});
        return rect(get("a", 1.0));
    }
    if (name == "damped_osc") {
        take({"T", "w0"});
        return damped_osc(get("T", 1.0), get("w0", 2.0));
    }
    throw DomainError("unknown signal '" + name + "'");
}

Bicomplex closed_form_transform(const SignalSpec& s, const Bicomplex& w) {
    if (!s.has_closed_form()) throw DomainError("signal " + s.name + " has no closed-form transform");
    if (!s.entire) {
        for (int k = 1; k <= 2; ++k) {
            const double m = s.region.component_margin(w.component(k));
            if (!(m > 0.0)) {
                throw OutsideRegionError("frequency outside the region of " + s.name + " (component " +
                                             std::to_string(k) + ", margin " + format_number(m) + ")",
                                         k, m);
            }
        }
    }
    for (int k = 1; k <= 2; ++k) {
        if (s.is_singular(w.component(k))) {
            throw SingularityError("component " + std::to_string(k) + " frequency is a pole of " + s.name);
        }
    }
    return Bicomplex::from_idempotent(s.closed_form(w.w1()), s.closed_form(w.w2()));
}

std::string catalog_json(const std::vector<SignalSpec>& signals) {
    std::string out = "[";
    for (std::size_t i = 0; i < signals.size(); ++i) {
        const auto& s = signals[i];
        if (i) out += ",";
        out += "{\"name\":" + json_string(s.name) + ",\"parameters\":{";
        for (std::size_t p = 0; p < s.parameters.size(); ++p) {
            if (p) out += ",";
            out += json_string(s.parameters[p].first) + ":" + json_number(s.parameters[p].second);
        }
        out += "},\"has_closed_form\":";
        out += s.has_closed_form() ? "true" : "false";
        out += ",\"support\":";
        if (s.support.compact()) {
            out += "[" + json_number(s.support.lo) + "," + json_number(s.support.hi) + "]";
        } else {
            out += "null";
        }
        out += "}";
    }
    out += "]";
    return out;
}

}  // namespace bcft
