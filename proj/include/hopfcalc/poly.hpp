#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcalc/scalar.hpp"

namespace hopfcalc {

/// Commutative word a^ka (as)^kas (cs)^kcs c^kc in the generators
/// a = alpha, as = alpha*, c = gamma, cs = gamma*.  Normal-form monomials
/// never carry a and as simultaneously (the sphere relation removes a*a).
struct Monomial {
    std::uint32_t a = 0;
    std::uint32_t as = 0;
    std::uint32_t cs = 0;
    std::uint32_t c = 0;

    bool in_pbw() const { return a == 0 || as == 0; }
    std::uint32_t total_degree() const { return a + as + cs + c; }
    /// Winding degree under the circle coaction: u-exponent of the right leg.
    std::int64_t winding() const {
        return std::int64_t(a) + std::int64_t(c) - std::int64_t(as) - std::int64_t(cs);
    }
    bool is_unit() const { return a == 0 && as == 0 && cs == 0 && c == 0; }

    Monomial star() const { return {as, a, c, cs}; }

    friend auto operator<=>(const Monomial& x, const Monomial& y) {
        if (auto r = x.a <=> y.a; r != 0) return r;
        if (auto r = x.as <=> y.as; r != 0) return r;
        if (auto r = x.cs <=> y.cs; r != 0) return r;
        return x.c <=> y.c;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A not-yet-reduced term: exponents may mix a and as.
struct RawTerm {
    std::uint32_t a = 0, as = 0, cs = 0, c = 0;
    Scalar coeff;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

/// Element of the coordinate ring of the quantum-classical SU(2) (here the
/// commutative 3-sphere algebra): finite sum of PBW monomials with Gaussian
/// rational coefficients.  Zero is the empty term map.
class Poly {
  public:
    using TermMap = std::map<Monomial, Scalar>;

    Poly() = default;
    explicit Poly(Scalar s) {
        if (!s.is_zero()) terms_[Monomial{}] = std::move(s);
    }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Scalar(1)); }
    static Poly gen_a() { return monomial({1, 0, 0, 0}); }
    static Poly gen_as() { return monomial({0, 1, 0, 0}); }
    static Poly gen_c() { return monomial({0, 0, 0, 1}); }
    static Poly gen_cs() { return monomial({0, 0, 1, 0}); }

    static Poly monomial(Monomial m, Scalar coeff = Scalar(1));

    /// Rewrites a*a -> 1 - cs*c until every term is PBW, merging like terms.
    /// When rng is supplied the reduction order is randomized; the result is
    /// independent of that order (tested), which is what makes the normal
    /// form well defined.
    static Poly normal_form(std::vector<RawTerm> raw, std::mt19937_64* rng = nullptr);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly scaled(const Scalar& s) const;
    /// Star structure: conjugate coefficients, swap a<->as and c<->cs.
    Poly star() const;
    Poly pow(unsigned n) const;

    /// u-exponent if every monomial has the same winding degree.
    std::optional<std::int64_t> winding() const;
    bool is_invariant() const { return is_zero() || winding() == 0; }

  private:
    TermMap terms_;  // invariant: no zero coefficients, all monomials PBW
    void insert(const Monomial& m, const Scalar& s);
    friend Poly poly_from_terms(Poly::TermMap terms);
};

/// Wraps an already-reduced term map; callers must guarantee PBW monomials
/// and nonzero coefficients.
Poly poly_from_terms(Poly::TermMap terms);

/// alpha^n for n >= 0, (alpha*)^{-n} for n < 0.
Poly alpha_power(std::int64_t n);

std::string render(const Scalar& s);
std::string render(const Poly& p);
/// Inverse of render; accepts the documented textual grammar.
Poly parse_poly(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace hopfcalc
