#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "hopfcalc/matrices.hpp"
#include "hopfcalc/poly.hpp"

namespace hopfcalc {

using Complex = std::complex<double>;

inline Complex cpow(Complex z, std::uint32_t n) {
    Complex r{1.0, 0.0};
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

/// Point on the total space: alpha = cos(theta) e^{i phi},
/// gamma = sin(theta) e^{i psi}, theta in [0, pi/2].
struct ChartPointS3 {
    double theta = 0, phi = 0, psi = 0;
    Complex alpha() const { return std::polar(std::cos(theta), phi); }
    Complex gamma() const { return std::polar(std::sin(theta), psi); }
};

/// Point on the base: x3 = cos(theta), x1 + i x2 = sin(theta) e^{i phi},
/// theta in [0, pi].
struct ChartPointS2 {
    double theta = 0, phi = 0;
    double x1() const { return std::sin(theta) * std::cos(phi); }
    double x2() const { return std::sin(theta) * std::sin(phi); }
    double x3() const { return std::cos(theta); }
};

/// Fibre projection in charts: theta' = 2 theta, phi' = psi - phi.
ChartPointS2 project_chart(const ChartPointS3& q);
/// Section used to evaluate invariant elements: phi = 0, psi = phi'.
ChartPointS3 section_chart(const ChartPointS2& x);

Complex eval_poly(const Poly& p, const ChartPointS3& q);
/// Requires p invariant; evaluates through the section.
Complex eval_invariant(const Poly& p, const ChartPointS2& x);

// ---------------------------------------------------------------- dual numbers

/// Forward-mode derivative carrier on the base chart: value plus the partial
/// derivatives along theta and phi.
struct Dual2 {
    Complex v{}, dt{}, dp{};

    Dual2() = default;
    Dual2(Complex value) : v(value) {}
    Dual2(Complex value, Complex dtheta, Complex dphi) : v(value), dt(dtheta), dp(dphi) {}

    friend Dual2 operator+(const Dual2& a, const Dual2& b) {
        return {a.v + b.v, a.dt + b.dt, a.dp + b.dp};
    }
    friend Dual2 operator-(const Dual2& a, const Dual2& b) {
        return {a.v - b.v, a.dt - b.dt, a.dp - b.dp};
    }
    Dual2 operator-() const { return {-v, -dt, -dp}; }
    friend Dual2 operator*(const Dual2& a, const Dual2& b) {
        return {a.v * b.v, a.dt * b.v + a.v * b.dt, a.dp * b.v + a.v * b.dp};
    }
    friend Dual2 operator/(const Dual2& a, const Dual2& b) {
        Complex v = a.v / b.v;
        return {v, (a.dt - v * b.dt) / b.v, (a.dp - v * b.dp) / b.v};
    }
    Dual2& operator+=(const Dual2& o) { return *this = *this + o; }
    Dual2& operator*=(const Dual2& o) { return *this = *this * o; }
};

Dual2 dual_pow(Dual2 z, std::uint32_t n);
Dual2 dual_sqrt(const Dual2& z);
inline Dual2 dual_reciprocal(const Dual2& z) { return Dual2(Complex(1.0)) / z; }

/// Base-chart coordinate functions with derivative seeds.
Dual2 dual_x1(const ChartPointS2& x);
Dual2 dual_x2(const ChartPointS2& x);
Dual2 dual_x3(const ChartPointS2& x);

/// Section values of the generators as functions on the base; composites of
/// these evaluate invariant elements together with their base derivatives.
std::array<Dual2, 4> dual_section_generators(const ChartPointS2& x);  // a, as, cs, c

Dual2 eval_invariant_dual(const Poly& p, const ChartPointS2& x);

/// Two-form component on (d/dtheta, d/dphi) of da /\ db.
inline Complex wedge(const Dual2& a, const Dual2& b) { return a.dt * b.dp - a.dp * b.dt; }

// ------------------------------------------------------- one-variable duals

/// Value and derivative along the circle-action orbit at a total-space point.
struct Dual1 {
    Complex v{}, d{};
    friend Dual1 operator+(const Dual1& a, const Dual1& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual1 operator*(const Dual1& a, const Dual1& b) {
        return {a.v * b.v, a.d * b.v + a.v * b.d};
    }
};

/// Evaluates p and its vertical (fibre-direction) derivative by one-variable
/// dual arithmetic along the action orbit.
Dual1 eval_poly_vertical(const Poly& p, const ChartPointS3& q);

// ------------------------------------------------- total-space chart frame

/// Generator values and their partials along (theta, phi, psi); the exact
/// anchor for evaluating symbolic forms on chart tangents.
struct GeneratorFrame {
    std::array<Complex, 4> value{};                  // a, as, cs, c
    std::array<std::array<Complex, 3>, 4> partial{};  // [generator][theta,phi,psi]
};

GeneratorFrame generator_frame(const ChartPointS3& q);

struct PolyGradient {
    Complex value{};
    std::array<Complex, 3> d{};  // theta, phi, psi
};

PolyGradient eval_poly_gradient(const Poly& p, const GeneratorFrame& frame);

// ----------------------------------------------------------- numeric matrices

struct ComplexMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Complex> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Complex& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    ComplexMatrix adjoint() const;
    friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
    friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
    double max_abs() const;
};

struct DualMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Dual2> data;

    DualMatrix() = default;
    DualMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Dual2& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Dual2& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

ComplexMatrix eval_matrix(const PolyMatrix& m, const ChartPointS3& q);
DualMatrix eval_matrix_dual(const PolyMatrix& m, const ChartPointS2& x);

/// Component on (d/dtheta, d/dphi) of Tr(e de de) for a square dual matrix.
Complex trace_e_de_de(const DualMatrix& e);

/// Coefficients of a 2x2 matrix in the basis (I, diag(1,-1), offdiag(1,1),
/// [[0,-i],[i,0]]).
struct PauliCoefficients {
    Dual2 s0, s1, s2, s3;
};
PauliCoefficients pauli_decompose(const DualMatrix& e);

/// 4i (s1 ds2/\ds3 + s2 ds3/\ds1 + s3 ds1/\ds2) on (d/dtheta, d/dphi).
Complex pauli_trace_identity_rhs(const PauliCoefficients& s);

// ----------------------------------------------------------------- quadrature

struct QuadratureRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights by Newton iteration on the recurrence.
QuadratureRule gauss_legendre(unsigned n);

/// Integrates the (dtheta /\ dphi)-component of a 2-form over the base:
/// Gauss-Legendre in theta on [0, pi] crossed with the periodic trapezoid
/// rule in phi on [0, 2 pi).
Complex integrate_s2(const std::function<Complex(const ChartPointS2&)>& component,
                     unsigned n_theta, unsigned n_phi);

/// Deterministic interior grid on the total space, n^3 points.
std::vector<ChartPointS3> s3_grid(unsigned n);
/// Deterministic interior grid on the base, n^2 points.
std::vector<ChartPointS2> s2_grid(unsigned n);

}  // namespace hopfcalc
