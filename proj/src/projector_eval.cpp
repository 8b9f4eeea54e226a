#include "hopfcalc/projector_eval.hpp"

#include <cmath>
#include <stdexcept>

namespace hopfcalc {

ComplexMatrix eval_projector(const RatFnProjector& p, const ChartPointS3& q) {
    ComplexMatrix out = eval_matrix(p.num, q);
    Complex den = eval_poly(p.den, q);
    if (std::abs(den) < 1e-14) throw std::domain_error("projector denominator vanishes");
    for (Complex& z : out.data) z /= den;
    return out;
}

DualMatrix eval_projector_dual(const RatFnProjector& p, const ChartPointS2& x) {
    DualMatrix out = eval_matrix_dual(p.num, x);
    Dual2 den = eval_invariant_dual(p.den, x);
    if (std::abs(den.v) < 1e-14) throw std::domain_error("projector denominator vanishes");
    for (Dual2& z : out.data) z = z / den;
    return out;
}

HermitianIdempotent::HermitianIdempotent(std::int64_t mu)
    : mu_(mu), e_tilde_(build_E_tilde(mu)) {
    unsigned n = unsigned(mu < 0 ? -mu : mu);
    scale_.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        scale_.push_back(std::sqrt(binomial(n, k).convert_to<double>()));
}

ComplexMatrix HermitianIdempotent::eval(const ChartPointS3& q) const {
    ComplexMatrix out = eval_matrix(e_tilde_, q);
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j) out.at(i, j) *= scale_[i] / scale_[j];
    return out;
}

DualMatrix HermitianIdempotent::eval_dual(const ChartPointS2& x) const {
    DualMatrix out = eval_matrix_dual(e_tilde_, x);
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j) {
            Complex f{scale_[i] / scale_[j], 0.0};
            out.at(i, j) = out.at(i, j) * Dual2(f);
        }
    return out;
}

PartialIsometry::PartialIsometry(std::int64_t mu) : mu_(mu) {
    if (mu == 0) throw std::invalid_argument("partial isometry needs mu != 0");
    IdempotentVectors vw = build_vw(mu);
    w_tilde_ = vw.w_tilde;
    unsigned n = unsigned(mu < 0 ? -mu : mu);
    for (unsigned k = 0; k <= n; ++k)
        scale_.push_back(std::sqrt(binomial(n, k).convert_to<double>()));
    den_ = build_p(mu).den;
}

ComplexMatrix PartialIsometry::eval(const ChartPointS3& q) const {
    unsigned n = unsigned(mu_ < 0 ? -mu_ : mu_);
    double den = eval_poly(den_, q).real();
    if (den < 1e-14) throw std::domain_error("partial isometry denominator vanishes");
    double root = std::sqrt(den);
    Complex a = q.alpha(), c = q.gamma();
    // column of height 2 with r^* r = 1
    Complex r0, r1;
    if (mu_ < 0) {
        r0 = cpow(a, n) / root;
        r1 = cpow(c, n) / root;
    } else {
        r0 = cpow(std::conj(a), n) / root;
        r1 = cpow(std::conj(c), n) / root;
    }
    ComplexMatrix out(2, n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Complex wk = scale_[k] * eval_poly(w_tilde_[k], q);
        out.at(0, k) = r0 * std::conj(wk);
        out.at(1, k) = r1 * std::conj(wk);
    }
    return out;
}

}  // namespace hopfcalc
