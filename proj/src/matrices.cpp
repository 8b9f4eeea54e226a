#include "hopfcalc/matrices.hpp"

#include <stdexcept>

#include "hopfcalc/hopf.hpp"

namespace hopfcalc {

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Poly& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) out.at(i, j) += xik * y.at(k, j);
        }
    return out;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
    return out;
}

PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= y.data_[i];
    return out;
}

PolyMatrix PolyMatrix::adjoint() const {
    PolyMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).star();
    return out;
}

PolyMatrix PolyMatrix::scaled(const Scalar& s) const {
    PolyMatrix out = *this;
    for (auto& p : out.data_) p = p.scaled(s);
    return out;
}

Poly PolyMatrix::trace() const {
    Poly t;
    std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) t += at(i, i);
    return t;
}

IdempotentVectors build_vw(std::int64_t mu) {
    IdempotentVectors out;
    out.mu = mu;
    unsigned n = unsigned(mu < 0 ? -mu : mu);
    out.v_tilde.reserve(n + 1);
    out.w_tilde.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Scalar weight{Rational(binomial(n, k))};
        if (mu <= 0) {
            out.v_tilde.push_back(Poly::monomial(Monomial{0, n - k, k, 0}, weight));
            out.w_tilde.push_back(Poly::monomial(Monomial{n - k, 0, 0, k}));
        } else {
            out.v_tilde.push_back(Poly::monomial(Monomial{n - k, 0, 0, k}, weight));
            out.w_tilde.push_back(Poly::monomial(Monomial{0, n - k, k, 0}));
        }
    }
    return out;
}

PolyMatrix build_E_tilde(std::int64_t mu) {
    IdempotentVectors vw = build_vw(mu);
    std::size_t n = vw.size();
    PolyMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = vw.w_tilde[i] * vw.v_tilde[j];
    return out;
}

RatFnProjector build_p(std::int64_t mu) {
    RatFnProjector out;
    out.mu = mu;
    if (mu == 0) {
        out.num = PolyMatrix::identity(1);
        out.den = Poly::one();
        return out;
    }
    unsigned n = unsigned(mu < 0 ? -mu : mu);
    Poly asa = Poly::gen_as() * Poly::gen_a();   // |alpha|^2
    Poly csc = Poly::gen_cs() * Poly::gen_c();   // |gamma|^2
    Poly acs_n = Poly::monomial(Monomial{n, 0, n, 0});  // (a cs)^n
    Poly asc_n = Poly::monomial(Monomial{0, n, 0, n});  // (as c)^n
    out.num = PolyMatrix(2, 2);
    out.num.at(0, 0) = asa.pow(n);
    out.num.at(1, 1) = csc.pow(n);
    if (mu < 0) {
        out.num.at(0, 1) = acs_n;
        out.num.at(1, 0) = asc_n;
    } else {
        out.num.at(0, 1) = asc_n;
        out.num.at(1, 0) = acs_n;
    }
    out.den = asa.pow(n) + csc.pow(n);
    return out;
}

bool RatFnProjector::is_idempotent_cross() const {
    std::size_t n = num.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Poly lhs;
            for (std::size_t k = 0; k < n; ++k) lhs += num.at(i, k) * num.at(k, j);
            if (lhs != num.at(i, j) * den) return false;
        }
    return true;
}

Poly SectionDecomposition::reconstruct() const {
    Poly out;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        out += (coefficients[k] * monomials[k]).scaled(Scalar(Rational(weights[k])));
    return out;
}

SectionDecomposition decompose_section(const Poly& f, std::int64_t mu) {
    if (isotypic_project(f, mu) != f)
        throw std::invalid_argument("element is not homogeneous of the requested winding");
    SectionDecomposition out;
    out.mu = mu;
    unsigned n = unsigned(mu < 0 ? -mu : mu);
    for (unsigned k = 0; k <= n; ++k) {
        out.weights.push_back(binomial(n, k));
        if (mu <= 0) {
            out.coefficients.push_back(f * Poly::monomial(Monomial{0, n - k, k, 0}));
            out.monomials.push_back(Poly::monomial(Monomial{n - k, 0, 0, k}));
        } else {
            out.coefficients.push_back(f * Poly::monomial(Monomial{n - k, 0, 0, k}));
            out.monomials.push_back(Poly::monomial(Monomial{0, n - k, k, 0}));
        }
    }
    return out;
}

}  // namespace hopfcalc
