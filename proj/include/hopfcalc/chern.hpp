#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "hopfcalc/chart.hpp"
#include "hopfcalc/projector_eval.hpp"

namespace hopfcalc {

/// Which idempotent presentation of the line bundle feeds the trace.
enum class ProjectorSource { e_tilde, p };

/// Pointwise first Chern form (1/2pi i) Tr(e de de), stored as its component
/// on the ordered tangent pair (d/dtheta', d/dphi').
struct ChernDensity {
    std::function<Complex(const ChartPointS2&)> evaluator;
};

ChernDensity chern_density(std::int64_t mu, ProjectorSource source);

/// Integral of the density over the base sphere.
double chern_number(std::int64_t mu, unsigned n_theta = 64, unsigned n_phi = 128,
                    ProjectorSource source = ProjectorSource::e_tilde);

struct PairingResult {
    std::int64_t mu = 0;
    double integral = 0;
    double residual = 0;      // distance to the nearest integer
    std::int64_t nearest = 0;
};

/// Pairing of the projector class with the fundamental cyclic cocycle at the
/// default quadrature.  Throws std::runtime_error when the integral fails to
/// land on the expected integer -mu within 1e-6.
PairingResult pairing(std::int64_t mu);

/// (degree 0, degree 2) parts of the Chern character of the line bundle.
std::pair<double, double> chern_character_line(std::int64_t mu);

/// |chern(mu+nu) - chern(mu) - chern(nu)| < 1e-7.
bool additivity_check(std::int64_t mu, std::int64_t nu);

/// -(1/4pi)(x1 dx2^dx3 + x2 dx3^dx1 + x3 dx1^dx2) at a point: the closed-form
/// density of the mu = 1 bundle.
Complex closed_form_c1_density(const ChartPointS2& x);

}  // namespace hopfcalc
