#pragma once

#include <array>
#include <complex>
#include <string>

namespace bcft {

using Complex = std::complex<double>;

/// The two complex projections (P1 w, P2 w) of a bicomplex number. Both live
/// in the i1-complex plane.
struct IdempotentPair {
    Complex w1;
    Complex w2;
};

/// Default relative threshold for zero-divisor classification.
inline constexpr double kZeroDivisorTol = 1e-12;

/**
 * A bicomplex number a0 + i1 a1 + i2 a2 + i1 i2 a3.
 *
 * Stored as its idempotent pair (w1, w2) with w = w1 e1 + w2 e2, where
 * e1 = (1 + i1 i2)/2 and e2 = (1 - i1 i2)/2. Ring operations act
 * componentwise on the pair; the four-unit coefficients are a view computed
 * on demand with sums and exact halving.
 *
 * Values are immutable after construction.
 */
class Bicomplex {
public:
    constexpr Bicomplex() = default;

    /// Real scalar embedding.
    constexpr explicit Bicomplex(double x) : w1_(x), w2_(x) {}

    /// Build from four-unit coefficients. Throws DomainError on non-finite input.
    static Bicomplex from_units(double a0, double a1, double a2, double a3);
    static Bicomplex from_units(const std::array<double, 4>& a) {
        return from_units(a[0], a[1], a[2], a[3]);
    }

    /// Build from the idempotent pair; the inverse of to_idempotent().
    static constexpr Bicomplex from_idempotent(Complex w1, Complex w2) { return {w1, w2}; }
    static constexpr Bicomplex from_idempotent(const IdempotentPair& p) { return {p.w1, p.w2}; }

    /// Embedding z1 + i2 z2 with z1, z2 in the i1-plane.
    static Bicomplex from_planes(Complex z1, Complex z2);

    static constexpr Bicomplex zero() { return {}; }
    static constexpr Bicomplex one() { return Bicomplex(1.0); }
    static constexpr Bicomplex e1() { return {Complex(1.0), Complex(0.0)}; }
    static constexpr Bicomplex e2() { return {Complex(0.0), Complex(1.0)}; }
    static constexpr Bicomplex i1() { return {Complex(0.0, 1.0), Complex(0.0, 1.0)}; }
    static constexpr Bicomplex i2() { return {Complex(0.0, -1.0), Complex(0.0, 1.0)}; }
    static constexpr Bicomplex j() { return {Complex(1.0), Complex(-1.0)}; }  // i1 i2

    constexpr IdempotentPair to_idempotent() const { return {w1_, w2_}; }
    constexpr const Complex& w1() const { return w1_; }
    constexpr const Complex& w2() const { return w2_; }
    /// Projection P_k for k = 1, 2.
    const Complex& component(int k) const { return k == 1 ? w1_ : w2_; }

    double a0() const { return 0.5 * (w1_.real() + w2_.real()); }
    double a1() const { return 0.5 * (w1_.imag() + w2_.imag()); }
    double a2() const { return 0.5 * (w2_.imag() - w1_.imag()); }
    double a3() const { return 0.5 * (w1_.real() - w2_.real()); }
    std::array<double, 4> units() const { return {a0(), a1(), a2(), a3()}; }

    bool is_finite() const;

    friend constexpr Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
        return {a.w1_ + b.w1_, a.w2_ + b.w2_};
    }
    friend constexpr Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
        return {a.w1_ - b.w1_, a.w2_ - b.w2_};
    }
    friend constexpr Bicomplex operator-(const Bicomplex& a) { return {-a.w1_, -a.w2_}; }
    friend constexpr Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
        return {a.w1_ * b.w1_, a.w2_ * b.w2_};
    }
    friend constexpr Bicomplex operator*(double s, const Bicomplex& a) { return {s * a.w1_, s * a.w2_}; }
    friend constexpr Bicomplex operator*(const Bicomplex& a, double s) { return s * a; }
    friend constexpr Bicomplex operator/(const Bicomplex& a, double s) { return {a.w1_ / s, a.w2_ / s}; }

    /// Bitwise equality of the stored pair. Use approx_equal for numerical comparison.
    friend constexpr bool operator==(const Bicomplex& a, const Bicomplex& b) {
        return a.w1_ == b.w1_ && a.w2_ == b.w2_;
    }

private:
    constexpr Bicomplex(Complex w1, Complex w2) : w1_(w1), w2_(w2) {}

    Complex w1_{};
    Complex w2_{};
};

inline Bicomplex add(const Bicomplex& w, const Bicomplex& v) { return w + v; }
inline Bicomplex mul(const Bicomplex& w, const Bicomplex& v) { return w * v; }
inline IdempotentPair to_idempotent(const Bicomplex& w) { return w.to_idempotent(); }
inline Bicomplex from_idempotent(const IdempotentPair& p) { return Bicomplex::from_idempotent(p); }

/// Largest idempotent component modulus, max(|w1|, |w2|).
double magnitude(const Bicomplex& w);

/// max(|w1 - v1|, |w2 - v2|). All tolerance comparisons in the library use this.
double distance(const Bicomplex& w, const Bicomplex& v);

bool approx_equal(const Bicomplex& w, const Bicomplex& v, double tol);

/// True iff w != 0 and min(|w1|,|w2|) <= tol * max(|w1|,|w2|).
bool is_zero_divisor(const Bicomplex& w, double tol = kZeroDivisorTol);

/// Multiplicative inverse via componentwise reciprocals. Throws
/// ZeroDivisorError when either component is at or below
/// tol * max(|w1|, |w2|, 1); the error's zero_operand() flags w == 0.
Bicomplex invert(const Bicomplex& w, double tol = kZeroDivisorTol);

/// Componentwise complex exponential; agrees with the power series in C2.
Bicomplex exp(const Bicomplex& w);

/// Integer power by repeated multiplication, n >= 0.
Bicomplex pow(const Bicomplex& w, int n);

/// {"a0":...,"a1":...,"a2":...,"a3":...} with 17 significant digits.
std::string to_json(const Bicomplex& w);

/// Parses the to_json shape. Throws DomainError on malformed input.
Bicomplex bicomplex_from_json(const std::string& text);

}  // namespace bcft
