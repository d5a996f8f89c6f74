#include "bcft/bicomplex.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "bcft/errors.hpp"
#include "bcft/format.hpp"

namespace bcft {

Bicomplex Bicomplex::from_units(double a0, double a1, double a2, double a3) {
    if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a3)) {
        throw DomainError("bicomplex coefficients must be finite");
    }
    return {Complex(a0 + a3, a1 - a2), Complex(a0 - a3, a1 + a2)};
}

Bicomplex Bicomplex::from_planes(Complex z1, Complex z2) {
    const Complex i(0.0, 1.0);
    return {z1 - i * z2, z1 + i * z2};
}

bool Bicomplex::is_finite() const {
    return std::isfinite(w1_.real()) && std::isfinite(w1_.imag()) && std::isfinite(w2_.real()) &&
           std::isfinite(w2_.imag());
}

double magnitude(const Bicomplex& w) { return std::max(std::abs(w.w1()), std::abs(w.w2())); }

double distance(const Bicomplex& w, const Bicomplex& v) {
    return std::max(std::abs(w.w1() - v.w1()), std::abs(w.w2() - v.w2()));
}

bool approx_equal(const Bicomplex& w, const Bicomplex& v, double tol) { return distance(w, v) <= tol; }

bool is_zero_divisor(const Bicomplex& w, double tol) {
    const double m1 = std::abs(w.w1());
    const double m2 = std::abs(w.w2());
    const double hi = std::max(m1, m2);
    if (hi == 0.0) return false;
    return std::min(m1, m2) <= tol * hi;
}

Bicomplex invert(const Bicomplex& w, double tol) {
    if (tol < 0.0) throw DomainError("invert: tolerance must be nonnegative");
    const double m1 = std::abs(w.w1());
    const double m2 = std::abs(w.w2());
    if (m1 == 0.0 && m2 == 0.0) {
        throw ZeroDivisorError("invert: zero operand", true);
    }
    const double threshold = tol * std::max({m1, m2, 1.0});
    if (m1 <= threshold || m2 <= threshold) {
        throw ZeroDivisorError("invert: operand is a zero divisor (idempotent component " +
                                   std::string(m1 <= threshold ? "1" : "2") + " vanishes)",
                               false);
    }
    return Bicomplex::from_idempotent(1.0 / w.w1(), 1.0 / w.w2());
}

Bicomplex exp(const Bicomplex& w) { return Bicomplex::from_idempotent(std::exp(w.w1()), std::exp(w.w2())); }

Bicomplex pow(const Bicomplex& w, int n) {
    if (n < 0) throw DomainError("pow: negative exponent");
    Bicomplex r = Bicomplex::one();
    for (int k = 0; k < n; ++k) r = r * w;
    return r;
}

std::string to_json(const Bicomplex& w) {
    return "{\"a0\":" + json_number(w.a0()) + ",\"a1\":" + json_number(w.a1()) +
           ",\"a2\":" + json_number(w.a2()) + ",\"a3\":" + json_number(w.a3()) + "}";
}

Bicomplex bicomplex_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bicomplex JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("bicomplex JSON: expected an object");
    std::array<double, 4> a{};
    static constexpr const char* keys[] = {"a0", "a1", "a2", "a3"};
    for (int k = 0; k < 4; ++k) {
        auto it = j.find(keys[k]);
        if (it == j.end() || !it->is_number()) {
            throw DomainError(std::string("bicomplex JSON: missing numeric field ") + keys[k]);
        }
        a[k] = it->get<double>();
    }
    return Bicomplex::from_units(a);
}

}  // namespace bcft
