#include "hopfcalc/hopf.hpp"

#include <tuple>

namespace hopfcalc {

void SweedlerTensor::add_product(const Poly& left, const Poly& right, const Scalar& scale) {
    if (scale.is_zero()) return;
    for (const auto& [ml, sl] : left.terms())
        for (const auto& [mr, sr] : right.terms()) add(ml, mr, scale * sl * sr);
}

SweedlerTensor operator*(const SweedlerTensor& x, const SweedlerTensor& y) {
    SweedlerTensor out;
    for (const auto& [kx, sx] : x.terms_) {
        Poly lx = Poly::monomial(kx.first);
        Poly rx = Poly::monomial(kx.second);
        for (const auto& [ky, sy] : y.terms_) {
            Poly l = lx * Poly::monomial(ky.first);
            Poly r = rx * Poly::monomial(ky.second);
            out.add_product(l, r, sx * sy);
        }
    }
    return out;
}

std::vector<std::pair<Poly, Poly>> SweedlerTensor::summands() const {
    std::map<Monomial, Poly::TermMap> grouped;
    for (const auto& [k, s] : terms_) grouped[k.second][k.first] = s;
    std::vector<std::pair<Poly, Poly>> out;
    out.reserve(grouped.size());
    for (auto& [right, left_terms] : grouped)
        out.emplace_back(poly_from_terms(std::move(left_terms)), Poly::monomial(right));
    return out;
}

namespace {

const SweedlerTensor& generator_coproduct(int which) {
    static const SweedlerTensor tensors[4] = {
        [] {  // a: a(x)a - cs(x)c
            SweedlerTensor t;
            t.add({1, 0, 0, 0}, {1, 0, 0, 0}, Scalar(1));
            t.add({0, 0, 1, 0}, {0, 0, 0, 1}, Scalar(-1));
            return t;
        }(),
        [] {  // as: as(x)as - c(x)cs
            SweedlerTensor t;
            t.add({0, 1, 0, 0}, {0, 1, 0, 0}, Scalar(1));
            t.add({0, 0, 0, 1}, {0, 0, 1, 0}, Scalar(-1));
            return t;
        }(),
        [] {  // cs: cs(x)as + a(x)cs
            SweedlerTensor t;
            t.add({0, 0, 1, 0}, {0, 1, 0, 0}, Scalar(1));
            t.add({1, 0, 0, 0}, {0, 0, 1, 0}, Scalar(1));
            return t;
        }(),
        [] {  // c: c(x)a + as(x)c
            SweedlerTensor t;
            t.add({0, 0, 0, 1}, {1, 0, 0, 0}, Scalar(1));
            t.add({0, 1, 0, 0}, {0, 0, 0, 1}, Scalar(1));
            return t;
        }(),
    };
    return tensors[which];
}

SweedlerTensor monomial_coproduct(const Monomial& m) {
    SweedlerTensor t;
    t.add(Monomial{}, Monomial{}, Scalar(1));
    const std::uint32_t exps[4] = {m.a, m.as, m.cs, m.c};
    for (int g = 0; g < 4; ++g)
        for (std::uint32_t k = 0; k < exps[g]; ++k) t = t * generator_coproduct(g);
    return t;
}

Scalar monomial_counit(const Monomial& m) {
    return (m.c == 0 && m.cs == 0) ? Scalar(1) : Scalar(0);
}

}  // namespace

SweedlerTensor coproduct(const Poly& p) {
    SweedlerTensor out;
    for (const auto& [m, s] : p.terms()) {
        SweedlerTensor t = monomial_coproduct(m);
        for (const auto& [k, v] : t.terms()) out.add(k.first, k.second, v * s);
    }
    return out;
}

Scalar counit(const Poly& p) {
    Scalar e(0);
    for (const auto& [m, s] : p.terms()) e += monomial_counit(m) * s;
    return e;
}

Poly antipode(const Poly& p) {
    Poly::TermMap out;
    for (const auto& [m, s] : p.terms()) {
        Monomial im{m.as, m.a, m.cs, m.c};
        bool flip = (m.c + m.cs) % 2 == 1;
        out[im] = flip ? -s : s;
    }
    return poly_from_terms(std::move(out));
}

Poly mul_antipode_left(const SweedlerTensor& t) {
    Poly out;
    for (const auto& [k, s] : t.terms())
        out += (antipode(Poly::monomial(k.first)) * Poly::monomial(k.second)).scaled(s);
    return out;
}

Poly mul_antipode_right(const SweedlerTensor& t) {
    Poly out;
    for (const auto& [k, s] : t.terms())
        out += (Poly::monomial(k.first) * antipode(Poly::monomial(k.second))).scaled(s);
    return out;
}

Poly counit_left(const SweedlerTensor& t) {
    Poly out;
    for (const auto& [k, s] : t.terms())
        out += Poly::monomial(k.second, monomial_counit(k.first) * s);
    return out;
}

Poly counit_right(const SweedlerTensor& t) {
    Poly out;
    for (const auto& [k, s] : t.terms())
        out += Poly::monomial(k.first, monomial_counit(k.second) * s);
    return out;
}

Tensor3 coproduct_left(const SweedlerTensor& t) {
    Tensor3 out;
    for (const auto& [k, s] : t.terms()) {
        SweedlerTensor d = monomial_coproduct(k.first);
        for (const auto& [dk, ds] : d.terms()) out.add(dk.first, dk.second, k.second, s * ds);
    }
    return out;
}

Tensor3 coproduct_right(const SweedlerTensor& t) {
    Tensor3 out;
    for (const auto& [k, s] : t.terms()) {
        SweedlerTensor d = monomial_coproduct(k.second);
        for (const auto& [dk, ds] : d.terms()) out.add(k.first, dk.first, dk.second, s * ds);
    }
    return out;
}

CoactionTensor coaction(const Poly& p) {
    CoactionTensor out;
    for (const auto& [m, s] : p.terms()) out.add(m, m.winding(), s);
    return out;
}

LaurentPoly surjection_p(const Poly& p) {
    LaurentPoly out;
    for (const auto& [m, s] : p.terms()) {
        if (m.c != 0 || m.cs != 0) continue;
        out += LaurentPoly::u_power(std::int64_t(m.a) - std::int64_t(m.as), s);
    }
    return out;
}

Poly splitting_i(const LaurentPoly& h) {
    Poly out;
    for (const auto& [n, s] : h.terms()) out += alpha_power(n).scaled(s);
    return out;
}

CoactionTensor surjection_right(const SweedlerTensor& t) {
    CoactionTensor out;
    for (const auto& [k, s] : t.terms()) {
        const Monomial& r = k.second;
        if (r.c != 0 || r.cs != 0) continue;
        out.add(k.first, std::int64_t(r.a) - std::int64_t(r.as), s);
    }
    return out;
}

Poly isotypic_project(const Poly& p, std::int64_t mu) {
    Poly::TermMap out;
    for (const auto& [m, s] : p.terms())
        if (m.winding() == -mu) out[m] = s;
    return poly_from_terms(std::move(out));
}

std::map<std::int64_t, Poly> isotypic_components(const Poly& p) {
    std::map<std::int64_t, Poly::TermMap> grouped;
    for (const auto& [m, s] : p.terms()) grouped[-m.winding()][m] = s;
    std::map<std::int64_t, Poly> out;
    for (auto& [mu, terms] : grouped) out.emplace(mu, poly_from_terms(std::move(terms)));
    return out;
}

std::vector<std::int64_t> cotensor_components(const std::vector<std::int64_t>& weights) {
    std::vector<std::int64_t> out;
    out.reserve(weights.size());
    for (std::int64_t w : weights) out.push_back(-w);
    return out;
}

std::vector<Monomial> pbw_monomials_up_to(unsigned max_degree) {
    std::vector<Monomial> out;
    for (unsigned a = 0; a <= max_degree; ++a)
        for (unsigned as = 0; as <= max_degree - a; ++as) {
            if (a > 0 && as > 0) continue;
            for (unsigned cs = 0; cs + a + as <= max_degree; ++cs)
                for (unsigned c = 0; c + cs + a + as <= max_degree; ++c)
                    out.push_back(Monomial{a, as, cs, c});
        }
    return out;
}

HopfAxiomReport verify_hopf_axioms(unsigned max_degree) {
    HopfAxiomReport report;
    report.max_degree = max_degree;
    auto note = [](AxiomCheck& check, bool ok, const Monomial& m) {
        if (!ok && check.passed) {
            check.passed = false;
            check.first_failure = render(Poly::monomial(m));
        }
    };
    for (const Monomial& m : pbw_monomials_up_to(max_degree)) {
        ++report.monomials_checked;
        Poly p = Poly::monomial(m);
        SweedlerTensor d = coproduct(p);

        note(report.coassociativity, coproduct_left(d) == coproduct_right(d), m);
        note(report.counit_left_law, counit_left(d) == p, m);
        note(report.counit_right_law, counit_right(d) == p, m);
        Poly eta_eps(counit(p));
        note(report.antipode_left_law, mul_antipode_left(d) == eta_eps, m);
        note(report.antipode_right_law, mul_antipode_right(d) == eta_eps, m);

        // circle coaction: coassociativity over the circle coproduct and counit law
        CoactionTensor ca = coaction(p);
        using Key3 = std::tuple<Monomial, std::int64_t, std::int64_t>;
        std::map<Key3, Scalar> lhs, rhs;
        for (const auto& [k, s] : ca.terms()) {
            CoactionTensor inner = coaction(Poly::monomial(k.first));
            for (const auto& [ik, is] : inner.terms())
                lhs[Key3{ik.first, ik.second, k.second}] += is * s;
            rhs[Key3{k.first, k.second, k.second}] += s;
        }
        for (auto it = lhs.begin(); it != lhs.end();)
            it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
        for (auto it = rhs.begin(); it != rhs.end();)
            it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        note(report.coaction_coassociativity, lhs == rhs, m);

        Poly counit_applied;
        for (const auto& [k, s] : ca.terms()) counit_applied += Poly::monomial(k.first, s);
        note(report.coaction_counit_law, counit_applied == p, m);
    }
    return report;
}

}  // namespace hopfcalc
