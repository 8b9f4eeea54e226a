#pragma once

#include <random>
#include <vector>

#include "hopfcalc/poly.hpp"

namespace hopfcalc::testing {

inline Scalar random_scalar(std::mt19937_64& rng, bool allow_imag = true) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational re(num(rng), den(rng));
    Rational im(0);
    if (allow_imag && rng() % 3 == 0) im = Rational(num(rng), den(rng));
    return Scalar(re, im);
}

inline RawTerm random_raw_term(std::mt19937_64& rng, unsigned max_exp = 3) {
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    return RawTerm{e(rng), e(rng), e(rng), e(rng), random_scalar(rng)};
}

inline std::vector<RawTerm> random_raw_terms(std::mt19937_64& rng, unsigned max_terms = 5,
                                             unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> n(1, max_terms);
    std::vector<RawTerm> raw;
    unsigned count = n(rng);
    raw.reserve(count);
    for (unsigned i = 0; i < count; ++i) raw.push_back(random_raw_term(rng, max_exp));
    return raw;
}

inline Poly random_poly(std::mt19937_64& rng, unsigned max_terms = 5, unsigned max_exp = 3) {
    return Poly::normal_form(random_raw_terms(rng, max_terms, max_exp));
}

/// Random polynomial avoiding the a-star generator entirely; products of such
/// polynomials never trigger the sphere rewrite.
inline Poly random_star_free_poly(std::mt19937_64& rng, unsigned max_terms = 4,
                                  unsigned max_exp = 3) {
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    std::uniform_int_distribution<unsigned> n(1, max_terms);
    std::vector<RawTerm> raw;
    unsigned count = n(rng);
    for (unsigned i = 0; i < count; ++i)
        raw.push_back(RawTerm{e(rng), 0, e(rng), e(rng), random_scalar(rng)});
    return Poly::normal_form(std::move(raw));
}

}  // namespace hopfcalc::testing

#include "hopfcalc/hopf.hpp"

namespace hopfcalc::testing {

/// Nonzero element of P_mu.
inline Poly random_homogeneous(std::mt19937_64& rng, std::int64_t mu) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly p = isotypic_project(random_poly(rng, 8, 3), mu);
        if (!p.is_zero()) return p;
    }
    Poly inv = isotypic_project(random_poly(rng, 6, 2), 0) + Poly::one();
    return alpha_power(-mu) * inv;
}

/// Nonzero invariant element.
inline Poly random_invariant(std::mt19937_64& rng, unsigned max_terms = 4,
                             unsigned max_exp = 2) {
    for (;;) {
        Poly p = isotypic_project(random_poly(rng, max_terms, max_exp), 0);
        if (!p.is_zero()) return p;
    }
}

/// Nonzero homogeneous element free of the a-star generator; its winding is
/// >= 0 when require_nonnegative is set.  Pairs of such elements multiply
/// without ever touching the sphere rewrite.
inline std::pair<Poly, std::int64_t> random_homogeneous_star_free(
    std::mt19937_64& rng, bool require_nonnegative = true) {
    for (;;) {
        Poly p = random_star_free_poly(rng);
        auto comps = isotypic_components(p);
        std::vector<std::pair<std::int64_t, Poly>> pool;
        for (auto& [mu, comp] : comps)
            if (!require_nonnegative || mu <= 0) pool.emplace_back(mu, comp);
        if (pool.empty()) continue;
        auto& [mu, comp] = pool[rng() % pool.size()];
        return {comp, -mu};  // second = winding degree
    }
}

}  // namespace hopfcalc::testing
