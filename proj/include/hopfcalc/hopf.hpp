#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfcalc/laurent.hpp"
#include "hopfcalc/poly.hpp"

namespace hopfcalc {

/// Element of A (x) A in fully collected form: sparse map on pairs of PBW
/// monomials.  This is the unique bilinear normal form, so equality is map
/// equality.
class SweedlerTensor {
  public:
    using Key = std::pair<Monomial, Monomial>;
    using TermMap = std::map<Key, Scalar>;

    SweedlerTensor() = default;

    static SweedlerTensor simple(const Poly& left, const Poly& right) {
        SweedlerTensor t;
        t.add_product(left, right, Scalar(1));
        return t;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Monomial& l, const Monomial& r, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{l, r}, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    /// Adds scale * left (x) right, expanded bilinearly.
    void add_product(const Poly& left, const Poly& right, const Scalar& scale);

    SweedlerTensor& operator+=(const SweedlerTensor& o) {
        for (const auto& [k, s] : o.terms_) add(k.first, k.second, s);
        return *this;
    }
    SweedlerTensor& operator-=(const SweedlerTensor& o) {
        for (const auto& [k, s] : o.terms_) add(k.first, k.second, -s);
        return *this;
    }
    friend SweedlerTensor operator*(const SweedlerTensor& x, const SweedlerTensor& y);
    friend bool operator==(const SweedlerTensor&, const SweedlerTensor&) = default;

    /// Groups the summands by right-leg monomial: list of (left, right) pairs
    /// with distinct monomial right legs.
    std::vector<std::pair<Poly, Poly>> summands() const;

    SweedlerTensor flip() const {
        SweedlerTensor t;
        for (const auto& [k, s] : terms_) t.add(k.second, k.first, s);
        return t;
    }

  private:
    TermMap terms_;
};

/// Element of A (x) A (x) A, same normal-form idea.
class Tensor3 {
  public:
    using Key = std::tuple<Monomial, Monomial, Monomial>;
    using TermMap = std::map<Key, Scalar>;

    const TermMap& terms() const { return terms_; }
    void add(const Monomial& a, const Monomial& b, const Monomial& m, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{a, b, m}, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

  private:
    TermMap terms_;
};

/// Element of A (x) O(U(1)): used for the right circle coaction.
class CoactionTensor {
  public:
    using Key = std::pair<Monomial, std::int64_t>;
    using TermMap = std::map<Key, Scalar>;

    const TermMap& terms() const { return terms_; }
    void add(const Monomial& m, std::int64_t n, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{m, n}, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    friend bool operator==(const CoactionTensor&, const CoactionTensor&) = default;

  private:
    TermMap terms_;
};

/// Coproduct: algebra map with D(a) = a(x)a - cs(x)c, D(c) = c(x)a + as(x)c,
/// extended as a *-homomorphism.
SweedlerTensor coproduct(const Poly& p);
/// Counit: e(a) = 1, e(c) = 0.
Scalar counit(const Poly& p);
/// Antipode: S(a) = as, S(c) = -c, S(cs) = -cs, S(as) = a.
Poly antipode(const Poly& p);

Poly mul_antipode_left(const SweedlerTensor& t);   // m(S (x) id)
Poly mul_antipode_right(const SweedlerTensor& t);  // m(id (x) S)
Poly counit_left(const SweedlerTensor& t);         // (e (x) id)
Poly counit_right(const SweedlerTensor& t);        // (id (x) e)

Tensor3 coproduct_left(const SweedlerTensor& t);   // (D (x) id)
Tensor3 coproduct_right(const SweedlerTensor& t);  // (id (x) D)

/// Right coaction of the circle: m |-> m (x) u^{winding(m)}.
CoactionTensor coaction(const Poly& p);
/// Quotient *-homomorphism onto the circle algebra: a |-> u, c |-> 0.
LaurentPoly surjection_p(const Poly& p);
/// Unital linear splitting of the surjection: u^n |-> a^n (as^{-n} for n < 0).
Poly splitting_i(const LaurentPoly& h);
/// Applies the surjection to the right leg.
CoactionTensor surjection_right(const SweedlerTensor& t);

/// Component of p in the winding-mu isotypic subspace P_mu
/// (monomial winding degree == -mu).
Poly isotypic_project(const Poly& p, std::int64_t mu);
/// All nonzero isotypic components, keyed by mu.
std::map<std::int64_t, Poly> isotypic_components(const Poly& p);

/// Winding labels mu_j of the associated-module decomposition of a diagonal
/// circle comodule whose basis vector j carries coaction u^{w_j} (x) v_j.
std::vector<std::int64_t> cotensor_components(const std::vector<std::int64_t>& weights);

/// All PBW basis monomials of total degree <= max_degree.
std::vector<Monomial> pbw_monomials_up_to(unsigned max_degree);

struct AxiomCheck {
    bool passed = true;
    std::string first_failure;  // rendered monomial, empty when passed
};

struct HopfAxiomReport {
    unsigned max_degree = 0;
    std::size_t monomials_checked = 0;
    AxiomCheck coassociativity;
    AxiomCheck counit_left_law;
    AxiomCheck counit_right_law;
    AxiomCheck antipode_left_law;
    AxiomCheck antipode_right_law;
    AxiomCheck coaction_coassociativity;
    AxiomCheck coaction_counit_law;
    bool all_passed() const {
        return coassociativity.passed && counit_left_law.passed && counit_right_law.passed &&
               antipode_left_law.passed && antipode_right_law.passed &&
               coaction_coassociativity.passed && coaction_counit_law.passed;
    }
};

/// Checks every Hopf axiom exactly on all PBW monomials up to max_degree.
HopfAxiomReport verify_hopf_axioms(unsigned max_degree);

}  // namespace hopfcalc
