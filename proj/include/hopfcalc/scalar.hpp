#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace hopfcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational re + im*i.  All ring ops are exact; no rounding
/// happens until to_complex().
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(Rational r) : re(std::move(r)) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long n) : re(n) {}
    Scalar(int n) : re(n) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        return Scalar(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        Rational n = y.re * y.re + y.im * y.im;
        if (n == 0) throw std::domain_error("scalar division by zero");
        return Scalar((x.re * y.re + x.im * y.im) / n,
                      (x.im * y.re - x.re * y.im) / n);
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

std::string render_rational(const Rational& q);

/// Exact binomial coefficient; n up to a few hundred is fine.
BigInt binomial(unsigned n, unsigned k);

}  // namespace hopfcalc
