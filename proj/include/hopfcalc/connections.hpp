#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hopfcalc/forms.hpp"
#include "hopfcalc/matrices.hpp"

namespace hopfcalc {

/// The monopole connection form omega = m (S (x) d) Delta i on the circle's
/// group algebra, determined by its values on the group-likes u^n.
class ConnectionForm {
  public:
    SymbolicOneForm operator()(std::int64_t n) const;

  private:
    static constexpr std::int64_t kCacheRange = 32;
    mutable std::map<std::int64_t, SymbolicOneForm> cache_;
};

/// Uncached omega(u^n).
SymbolicOneForm connection_form_value(std::int64_t n);

/// Df = df - f * omega(u^d) for f with coaction f |-> f (x) u^d.
/// Throws std::invalid_argument when f mixes winding degrees.
SymbolicOneForm covariant_diff(const Poly& f);

/// Differential of a two-factor product expanded by the Leibniz rule before
/// any reduction: (df) g + f (dg).
SymbolicOneForm leibniz_differential(const Poly& f, const Poly& g);

/// Exact coefficient-level identities
///   D(alpha) = gamma d(alpha gamma*) - alpha d(gamma* gamma)
///   D(gamma) = alpha d(alpha* gamma) - gamma d(alpha* alpha)
/// for f in {alpha, gamma, 1}; product differentials via leibniz_differential.
bool horizontal_factor_check(const Poly& f);

/// nabla(e_k) = sum_j rows[k][j] (x) e_j over the module generators e_k.
struct ModuleConnection {
    std::int64_t mu = 0;
    std::vector<Poly> basis;  // empty when built from a bare idempotent
    std::vector<std::vector<SymbolicOneForm>> rows;

    std::size_t size() const { return rows.size(); }
};

/// Connection on the winding-mu module over the basis of PBW generators;
/// its rows are d of the rows of the polynomial idempotent.
ModuleConnection covariant_derivative(std::int64_t mu);

/// Rows are d of the idempotent's rows.  Throws std::invalid_argument unless
/// e is exactly idempotent.
ModuleConnection grassmann_connection(const PolyMatrix& e);

struct TwoFormMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<SymbolicTwoForm> data;

    TwoFormMatrix() = default;
    TwoFormMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    SymbolicTwoForm& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const SymbolicTwoForm& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Curvature of the Grassmann connection: entry (i,l) = -sum_k de_i^k ^ de_k^l.
/// Requires c to be the Grassmann connection of e.
TwoFormMatrix curvature(const ModuleConnection& c, const PolyMatrix& e);

/// Trace of a coefficient matrix against the idempotent that presents the
/// module: sum_{i,l} e_{li} * r_{il}.
SymbolicTwoForm module_trace(const TwoFormMatrix& r, const PolyMatrix& e);

/// Tr(e de de) as a symbolic 2-form.
SymbolicTwoForm trace_form_e_de_de(const PolyMatrix& e);

}  // namespace hopfcalc
