#include "hopfcalc/connections.hpp"

#include <stdexcept>

#include "hopfcalc/hopf.hpp"

namespace hopfcalc {

SymbolicOneForm connection_form_value(std::int64_t n) {
    SweedlerTensor delta = coproduct(splitting_i(LaurentPoly::u_power(n)));
    SymbolicOneForm out;
    for (const auto& [legs, s] : delta.terms()) {
        Poly left = antipode(Poly::monomial(legs.first, s));
        out += left * differential(Poly::monomial(legs.second));
    }
    return out;
}

SymbolicOneForm ConnectionForm::operator()(std::int64_t n) const {
    if (n < -kCacheRange || n > kCacheRange) return connection_form_value(n);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, connection_form_value(n)).first;
    return it->second;
}

SymbolicOneForm covariant_diff(const Poly& f) {
    if (f.is_zero()) return {};
    std::optional<std::int64_t> w = f.winding();
    if (!w) throw std::invalid_argument("covariant differentiation needs a homogeneous element");
    return differential(f) - f * connection_form_value(*w);
}

SymbolicOneForm leibniz_differential(const Poly& f, const Poly& g) {
    return g * differential(f) + f * differential(g);
}

bool horizontal_factor_check(const Poly& f) {
    Poly a = Poly::gen_a(), as = Poly::gen_as(), c = Poly::gen_c(), cs = Poly::gen_cs();
    if (f == Poly::one()) return covariant_diff(f).is_zero();
    SymbolicOneForm rhs;
    if (f == a)
        rhs = c * leibniz_differential(a, cs) - a * leibniz_differential(cs, c);
    else if (f == c)
        rhs = a * leibniz_differential(as, c) - c * leibniz_differential(as, a);
    else
        throw std::invalid_argument("check applies to the degree-one generators");
    return form_equal(covariant_diff(f), rhs, CompareMode::exact);
}

ModuleConnection covariant_derivative(std::int64_t mu) {
    if (mu == 0) throw std::invalid_argument("the invariant module carries the trivial d");
    ModuleConnection out = grassmann_connection(build_E_tilde(mu));
    out.mu = mu;
    out.basis = build_vw(mu).w_tilde;
    return out;
}

ModuleConnection grassmann_connection(const PolyMatrix& e) {
    if (!e.is_idempotent()) throw std::invalid_argument("grassmann connection needs e*e = e");
    ModuleConnection out;
    out.rows.resize(e.rows());
    for (std::size_t i = 0; i < e.rows(); ++i) {
        out.rows[i].reserve(e.cols());
        for (std::size_t j = 0; j < e.cols(); ++j)
            out.rows[i].push_back(differential(e.at(i, j)));
    }
    return out;
}

TwoFormMatrix curvature(const ModuleConnection& c, const PolyMatrix& e) {
    if (c.size() != e.rows() || e.rows() != e.cols())
        throw std::invalid_argument("connection and idempotent shapes disagree");
    if (!e.is_idempotent()) throw std::invalid_argument("curvature formula needs e*e = e");
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (!(c.rows[i][j] == differential(e.at(i, j))))
                throw std::invalid_argument("connection is not the Grassmann connection of e");
    std::size_t n = e.rows();
    TwoFormMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            SymbolicTwoForm acc;
            for (std::size_t k = 0; k < n; ++k)
                acc += wedge_product(c.rows[i][k], c.rows[k][l]);
            out.at(i, l) = -acc;
        }
    return out;
}

SymbolicTwoForm module_trace(const TwoFormMatrix& r, const PolyMatrix& e) {
    if (r.rows != e.rows() || r.cols != e.cols())
        throw std::invalid_argument("trace shapes disagree");
    SymbolicTwoForm out;
    for (std::size_t i = 0; i < r.rows; ++i)
        for (std::size_t l = 0; l < r.cols; ++l) out += e.at(l, i) * r.at(i, l);
    return out;
}

SymbolicTwoForm trace_form_e_de_de(const PolyMatrix& e) {
    if (e.rows() != e.cols()) throw std::invalid_argument("square matrix required");
    std::size_t n = e.rows();
    std::vector<SymbolicOneForm> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = differential(e.at(i, j));
    SymbolicTwoForm out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                out += e.at(i, k) * wedge_product(d[k * n + l], d[l * n + i]);
    return out;
}

}  // namespace hopfcalc
