#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "hopfcalc/scalar.hpp"

namespace hopfcalc {

/// Group algebra of the circle: finite sums of coef * u^n, n in Z.
class LaurentPoly {
  public:
    using TermMap = std::map<std::int64_t, Scalar>;

    LaurentPoly() = default;
    explicit LaurentPoly(Scalar s) {
        if (!s.is_zero()) terms_[0] = std::move(s);
    }

    static LaurentPoly u_power(std::int64_t n, Scalar coeff = Scalar(1)) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.terms_[n] = std::move(coeff);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(std::int64_t n) const {
        auto it = terms_.find(n);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [n, s] : o.terms_) insert(n, s);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [n, s] : o.terms_) insert(n, -s);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly r;
        for (const auto& [n, s] : x.terms_)
            for (const auto& [m, t] : y.terms_) r.insert(n + m, s * t);
        return r;
    }

    /// Star: u is unitary, so u^n -> u^{-n} with conjugated coefficients.
    LaurentPoly star() const {
        LaurentPoly r;
        for (const auto& [n, s] : terms_) r.terms_[-n] = s.conj();
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  private:
    TermMap terms_;
    void insert(std::int64_t n, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(n, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

std::string render(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

}  // namespace hopfcalc
