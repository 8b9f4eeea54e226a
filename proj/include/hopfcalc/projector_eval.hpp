#pragma once

#include "hopfcalc/chart.hpp"
#include "hopfcalc/matrices.hpp"

namespace hopfcalc {

ComplexMatrix eval_projector(const RatFnProjector& p, const ChartPointS3& q);
DualMatrix eval_projector_dual(const RatFnProjector& p, const ChartPointS2& x);

/// Hermitian conjugate E_mu = A E~_mu A^{-1}, A = diag(sqrt(binomial)).
/// The square roots force this matrix to live at the numeric level only.
class HermitianIdempotent {
  public:
    explicit HermitianIdempotent(std::int64_t mu);
    std::int64_t mu() const { return mu_; }
    std::size_t size() const { return scale_.size(); }
    ComplexMatrix eval(const ChartPointS3& q) const;
    DualMatrix eval_dual(const ChartPointS2& x) const;

  private:
    std::int64_t mu_;
    PolyMatrix e_tilde_;
    std::vector<double> scale_;  // sqrt of the binomial weights
};

/// Chart-evaluable partial isometry F_mu = r_mu w_mu^* (2 rows, |mu|+1
/// columns) with F F^* = p_mu and F^* F = E_mu; undefined at mu = 0.
class PartialIsometry {
  public:
    explicit PartialIsometry(std::int64_t mu);
    std::int64_t mu() const { return mu_; }
    ComplexMatrix eval(const ChartPointS3& q) const;

  private:
    std::int64_t mu_;
    std::vector<Poly> w_tilde_;
    std::vector<double> scale_;
    Poly den_;
};

}  // namespace hopfcalc
