#include "bcft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bcft/errors.hpp"

namespace bcft {

namespace {

// Kronrod abscissae on [-1, 1] (nonnegative half, descending); odd indices
// are the Gauss 7-point nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    Complex value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const ComplexIntegrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = f(center);
    Complex kronrod = kWgk[7] * fc;
    Complex gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const Complex sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

bool splittable(const Panel& p) {
    const double mid = 0.5 * (p.a + p.b);
    return mid > p.a && mid < p.b;
}

}  // namespace

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double lo, double hi,
                                    std::span<const double> breakpoints, const AdaptiveOptions& opts) {
    QuadratureResult result;
    if (!(hi > lo)) {
        result.converged = true;
        return result;
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("integration bounds must be finite");

    std::vector<double> cuts{lo};
    for (double x : breakpoints) {
        if (x > lo && x < hi) cuts.push_back(x);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const double length = hi - lo;
    const std::size_t wanted = std::clamp<std::size_t>(opts.min_panels, 1, std::max<std::size_t>(opts.max_panels, 1));
    std::vector<Panel> queue;  // max-heap on error
    std::vector<Panel> frozen;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s];
        const double b = cuts[s + 1];
        const auto n = static_cast<std::size_t>(
            std::max(1.0, std::ceil(static_cast<double>(wanted) * (b - a) / length)));
        for (std::size_t k = 0; k < n; ++k) {
            const double pa = a + (b - a) * static_cast<double>(k) / static_cast<double>(n);
            const double pb = k + 1 == n ? b : a + (b - a) * static_cast<double>(k + 1) / static_cast<double>(n);
            queue.push_back(gauss_kronrod(f, pa, pb));
        }
    }
    std::make_heap(queue.begin(), queue.end());

    auto totals = [&] {
        Complex value{};
        double error = 0.0;
        auto acc = [&](const Panel& p) {
            value += p.value;
            error += p.error;
        };
        for (const auto& p : queue) acc(p);
        for (const auto& p : frozen) acc(p);
        return std::pair{value, error};
    };

    // Running sums drift under repeated +=/-=; they only gate the exact recount.
    Complex run_value{};
    double run_error = 0.0;
    {
        auto [v, e] = totals();
        run_value = v;
        run_error = e;
    }
    std::size_t panels = queue.size();

    while (true) {
        const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(run_value));
        if (run_error <= target) {
            auto [v, e] = totals();
            run_value = v;
            run_error = e;
            if (e <= std::max(opts.abs_tol, opts.rel_tol * std::abs(v))) {
                result.converged = true;
                break;
            }
        }
        if (queue.empty() || panels >= opts.max_panels) break;

        std::pop_heap(queue.begin(), queue.end());
        Panel worst = queue.back();
        queue.pop_back();
        if (!splittable(worst)) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gauss_kronrod(f, worst.a, mid);
        Panel right = gauss_kronrod(f, mid, worst.b);
        run_value += left.value + right.value - worst.value;
        run_error += left.error + right.error - worst.error;
        queue.push_back(left);
        std::push_heap(queue.begin(), queue.end());
        queue.push_back(right);
        std::push_heap(queue.begin(), queue.end());
        ++panels;
    }

    auto [v, e] = totals();
    result.value = v;
    result.error = e;
    result.panels = panels;
    if (!result.converged) result.converged = e <= std::max(opts.abs_tol, opts.rel_tol * std::abs(v));
    return result;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    std::span<const double> breakpoints, const AdaptiveOptions& opts) {
    return integrate_adaptive(ComplexIntegrand([&f](double t) { return Complex(f(t)); }), lo, hi, breakpoints,
                              opts);
}

}  // namespace bcft
