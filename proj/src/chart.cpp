#include "hopfcalc/chart.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hopfcalc {

namespace {
constexpr double kPi = std::numbers::pi;
}

ChartPointS2 project_chart(const ChartPointS3& q) {
    // x3 = |alpha|^2 - |gamma|^2, x1 + i x2 = 2 alpha* gamma
    return ChartPointS2{2.0 * q.theta, q.psi - q.phi};
}

ChartPointS3 section_chart(const ChartPointS2& x) {
    return ChartPointS3{0.5 * x.theta, 0.0, x.phi};
}

Complex eval_poly(const Poly& p, const ChartPointS3& q) {
    Complex a = q.alpha(), c = q.gamma();
    Complex as = std::conj(a), cs = std::conj(c);
    Complex out{};
    for (const auto& [m, s] : p.terms())
        out += s.to_complex() * cpow(a, m.a) * cpow(as, m.as) * cpow(cs, m.cs) * cpow(c, m.c);
    return out;
}

Complex eval_invariant(const Poly& p, const ChartPointS2& x) {
    if (!p.is_invariant())
        throw std::invalid_argument("element is not invariant under the circle coaction");
    return eval_poly(p, section_chart(x));
}

Dual2 dual_pow(Dual2 z, std::uint32_t n) {
    Dual2 r{Complex(1.0)};
    while (n) {
        if (n & 1) r = r * z;
        z = z * z;
        n >>= 1;
    }
    return r;
}

Dual2 dual_sqrt(const Dual2& z) {
    Complex s = std::sqrt(z.v);
    return {s, z.dt / (2.0 * s), z.dp / (2.0 * s)};
}

Dual2 dual_x1(const ChartPointS2& x) {
    return {std::sin(x.theta) * std::cos(x.phi), std::cos(x.theta) * std::cos(x.phi),
            -std::sin(x.theta) * std::sin(x.phi)};
}

Dual2 dual_x2(const ChartPointS2& x) {
    return {std::sin(x.theta) * std::sin(x.phi), std::cos(x.theta) * std::sin(x.phi),
            std::sin(x.theta) * std::cos(x.phi)};
}

Dual2 dual_x3(const ChartPointS2& x) {
    return {std::cos(x.theta), -std::sin(x.theta), 0.0};
}

std::array<Dual2, 4> dual_section_generators(const ChartPointS2& x) {
    double h = 0.5 * x.theta;
    Complex eip = std::polar(1.0, x.phi);
    Complex i{0.0, 1.0};
    Dual2 A{std::cos(h), -0.5 * std::sin(h), 0.0};  // alpha real on the section
    Complex c = std::sin(h) * eip;
    Dual2 C{c, 0.5 * std::cos(h) * eip, i * c};
    Dual2 Cs{std::conj(c), 0.5 * std::cos(h) * std::conj(eip), std::conj(i * c)};
    return {A, A, Cs, C};
}

Dual2 eval_invariant_dual(const Poly& p, const ChartPointS2& x) {
    if (!p.is_invariant())
        throw std::invalid_argument("element is not invariant under the circle coaction");
    auto g = dual_section_generators(x);
    Dual2 out;
    for (const auto& [m, s] : p.terms()) {
        Dual2 t{s.to_complex()};
        t = t * dual_pow(g[0], m.a) * dual_pow(g[1], m.as) * dual_pow(g[2], m.cs) *
            dual_pow(g[3], m.c);
        out += t;
    }
    return out;
}

Dual1 eval_poly_vertical(const Poly& p, const ChartPointS3& q) {
    // One-variable dual along the circle-action orbit t -> (a e^{it}, c e^{it}),
    // the fibre direction of the bundle (phi and psi advance together).
    Complex i{0.0, 1.0};
    Complex a = q.alpha(), c = q.gamma();
    Dual1 A{a, i * a}, As{std::conj(a), -i * std::conj(a)};
    Dual1 C{c, i * c}, Cs{std::conj(c), -i * std::conj(c)};
    auto dpow = [](Dual1 z, std::uint32_t n) {
        Dual1 r{Complex(1.0), 0.0};
        for (std::uint32_t k = 0; k < n; ++k) r = r * z;
        return r;
    };
    Dual1 out{};
    for (const auto& [m, s] : p.terms()) {
        Dual1 t{s.to_complex(), 0.0};
        t = t * dpow(A, m.a) * dpow(As, m.as) * dpow(Cs, m.cs) * dpow(C, m.c);
        out = out + t;
    }
    return out;
}

GeneratorFrame generator_frame(const ChartPointS3& q) {
    GeneratorFrame f;
    Complex i{0.0, 1.0};
    Complex a = q.alpha(), c = q.gamma();
    Complex eip = std::polar(1.0, q.phi), eis = std::polar(1.0, q.psi);
    f.value = {a, std::conj(a), std::conj(c), c};
    // a = cos(theta) e^{i phi}
    f.partial[0] = {-std::sin(q.theta) * eip, i * a, Complex{}};
    f.partial[1] = {-std::sin(q.theta) * std::conj(eip), -i * std::conj(a), Complex{}};
    // c = sin(theta) e^{i psi}
    f.partial[3] = {std::cos(q.theta) * eis, Complex{}, i * c};
    f.partial[2] = {std::cos(q.theta) * std::conj(eis), Complex{}, -i * std::conj(c)};
    return f;
}

PolyGradient eval_poly_gradient(const Poly& p, const GeneratorFrame& frame) {
    PolyGradient out;
    for (const auto& [m, s] : p.terms()) {
        const std::uint32_t exps[4] = {m.a, m.as, m.cs, m.c};
        Complex powers[4];
        for (int g = 0; g < 4; ++g) powers[g] = cpow(frame.value[g], exps[g]);
        Complex coeff = s.to_complex();
        Complex val = coeff * powers[0] * powers[1] * powers[2] * powers[3];
        out.value += val;
        for (int g = 0; g < 4; ++g) {
            if (exps[g] == 0) continue;
            Complex rest = coeff * double(exps[g]) * cpow(frame.value[g], exps[g] - 1);
            for (int h = 0; h < 4; ++h)
                if (h != g) rest *= powers[h];
            for (int k = 0; k < 3; ++k) out.d[k] += rest * frame.partial[g][k];
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    ComplexMatrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k)
            for (std::size_t j = 0; j < y.cols; ++j)
                out.at(i, j) += x.at(i, k) * y.at(k, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix shape mismatch");
    ComplexMatrix out = x;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= y.data[i];
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const Complex& z : data) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix eval_matrix(const PolyMatrix& m, const ChartPointS3& q) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = eval_poly(m.at(i, j), q);
    return out;
}

DualMatrix eval_matrix_dual(const PolyMatrix& m, const ChartPointS2& x) {
    DualMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = eval_invariant_dual(m.at(i, j), x);
    return out;
}

Complex trace_e_de_de(const DualMatrix& e) {
    if (e.rows != e.cols) throw std::invalid_argument("square matrix required");
    Complex out{};
    for (std::size_t i = 0; i < e.rows; ++i)
        for (std::size_t k = 0; k < e.rows; ++k)
            for (std::size_t l = 0; l < e.rows; ++l)
                out += e.at(i, k).v * wedge(e.at(k, l), e.at(l, i));
    return out;
}

PauliCoefficients pauli_decompose(const DualMatrix& e) {
    if (e.rows != 2 || e.cols != 2) throw std::invalid_argument("2x2 matrix required");
    Complex half{0.5, 0.0}, ihalf{0.0, 0.5};
    PauliCoefficients s;
    s.s0 = (e.at(0, 0) + e.at(1, 1)) * Dual2(half);
    s.s1 = (e.at(0, 0) - e.at(1, 1)) * Dual2(half);
    s.s2 = (e.at(0, 1) + e.at(1, 0)) * Dual2(half);
    s.s3 = (e.at(0, 1) - e.at(1, 0)) * Dual2(ihalf);
    return s;
}

Complex pauli_trace_identity_rhs(const PauliCoefficients& s) {
    Complex acc = s.s1.v * wedge(s.s2, s.s3) + s.s2.v * wedge(s.s3, s.s1) +
                  s.s3.v * wedge(s.s1, s.s2);
    return Complex{0.0, 4.0} * acc;
}

QuadratureRule gauss_legendre(unsigned n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        // Newton from the Chebyshev-based initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

Complex integrate_s2(const std::function<Complex(const ChartPointS2&)>& component,
                     unsigned n_theta, unsigned n_phi) {
    QuadratureRule rule = gauss_legendre(n_theta);
    Complex total{};
    double wphi = 2.0 * kPi / n_phi;
    for (unsigned i = 0; i < n_theta; ++i) {
        double theta = 0.5 * kPi * (rule.nodes[i] + 1.0);
        double wtheta = 0.5 * kPi * rule.weights[i];
        Complex slice{};
        for (unsigned j = 0; j < n_phi; ++j)
            slice += component(ChartPointS2{theta, wphi * j});
        total += wtheta * wphi * slice;
    }
    return total;
}

std::vector<ChartPointS3> s3_grid(unsigned n) {
    std::vector<ChartPointS3> pts;
    pts.reserve(std::size_t(n) * n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                pts.push_back(ChartPointS3{(i + 0.5) * (0.5 * kPi) / n,
                                           (j + 0.5) * (2.0 * kPi) / n,
                                           (k + 0.5) * (2.0 * kPi) / n});
    return pts;
}

std::vector<ChartPointS2> s2_grid(unsigned n) {
    std::vector<ChartPointS2> pts;
    pts.reserve(std::size_t(n) * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            pts.push_back(ChartPointS2{(i + 0.5) * kPi / n, (j + 0.5) * (2.0 * kPi) / n});
    return pts;
}

}  // namespace hopfcalc
