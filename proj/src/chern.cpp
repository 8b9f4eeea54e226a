#include "hopfcalc/chern.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hopfcalc/matrices.hpp"

namespace hopfcalc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ChernDensity chern_density(std::int64_t mu, ProjectorSource source) {
    Complex norm = Complex(1.0) / Complex(0.0, kTwoPi);
    if (source == ProjectorSource::e_tilde) {
        auto e = std::make_shared<PolyMatrix>(build_E_tilde(mu));
        return {[e, norm](const ChartPointS2& x) {
            return norm * trace_e_de_de(eval_matrix_dual(*e, x));
        }};
    }
    auto p = std::make_shared<RatFnProjector>(build_p(mu));
    return {[p, norm](const ChartPointS2& x) {
        return norm * trace_e_de_de(eval_projector_dual(*p, x));
    }};
}

double chern_number(std::int64_t mu, unsigned n_theta, unsigned n_phi,
                    ProjectorSource source) {
    ChernDensity density = chern_density(mu, source);
    return integrate_s2(density.evaluator, n_theta, n_phi).real();
}

PairingResult pairing(std::int64_t mu) {
    PairingResult out;
    out.mu = mu;
    out.integral = chern_number(mu);
    out.nearest = std::llround(out.integral);
    out.residual = std::abs(out.integral - double(out.nearest));
    if (out.residual >= 1e-6 || out.nearest != -mu)
        throw std::runtime_error("pairing at mu = " + std::to_string(mu) +
                                 " missed the integer " + std::to_string(-mu) +
                                 ": integral " + std::to_string(out.integral));
    return out;
}

std::pair<double, double> chern_character_line(std::int64_t mu) {
    return {1.0, chern_number(mu)};
}

bool additivity_check(std::int64_t mu, std::int64_t nu) {
    double lhs = chern_number(mu + nu);
    double rhs = chern_number(mu) + chern_number(nu);
    return std::abs(lhs - rhs) < 1e-7;
}

Complex closed_form_c1_density(const ChartPointS2& x) {
    Dual2 x1 = dual_x1(x), x2 = dual_x2(x), x3 = dual_x3(x);
    Complex sum = x1.v * wedge(x2, x3) + x2.v * wedge(x3, x1) + x3.v * wedge(x1, x2);
    return -sum / (2.0 * kTwoPi);
}

}  // namespace hopfcalc
