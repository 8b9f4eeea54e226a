#pragma once

#include <cstdint>
#include <vector>

#include "hopfcalc/poly.hpp"

namespace hopfcalc {

/// Dense matrix with polynomial entries.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
    friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    /// Conjugate transpose under the algebra star.
    PolyMatrix adjoint() const;
    PolyMatrix scaled(const Scalar& s) const;
    Poly trace() const;
    bool is_idempotent() const { return *this * *this == *this; }
    bool is_hermitian() const { return adjoint() == *this; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

/// Column vectors generating the winding-mu line bundle module: the dual pair
/// with v~^T w~ = 1.  v~ carries the binomial weights.
struct IdempotentVectors {
    std::int64_t mu = 0;
    std::vector<Poly> v_tilde;
    std::vector<Poly> w_tilde;
    std::size_t size() const { return v_tilde.size(); }
};

IdempotentVectors build_vw(std::int64_t mu);

/// (|mu|+1) x (|mu|+1) polynomial idempotent E~_mu = w~ v~^T with trace 1.
PolyMatrix build_E_tilde(std::int64_t mu);

/// 2x2 projector with entries num[i][j] / den; den is invertible on the
/// sphere (checked numerically elsewhere).  For mu = 0 this degenerates to
/// the 1x1 unit.
struct RatFnProjector {
    std::int64_t mu = 0;
    PolyMatrix num;
    Poly den;

    /// Exact idempotency through the cross-multiplied identity
    /// sum_k num[i][k] num[k][j] == num[i][j] * den.
    bool is_idempotent_cross() const;
};

RatFnProjector build_p(std::int64_t mu);

/// Invariant coefficients of a winding-homogeneous element relative to the
/// generating monomials of P_mu, plus the data needed to rebuild it.
struct SectionDecomposition {
    std::int64_t mu = 0;
    std::vector<Poly> coefficients;  // invariant, one per generator
    std::vector<Poly> monomials;     // reconstruction monomials
    std::vector<BigInt> weights;     // binomial weights

    Poly reconstruct() const;
};

/// Requires f homogeneous of winding mu (f == isotypic_project(f, mu)).
SectionDecomposition decompose_section(const Poly& f, std::int64_t mu);

}  // namespace hopfcalc
