#pragma once

#include <array>
#include <string>

#include "hopfcalc/chart.hpp"
#include "hopfcalc/poly.hpp"

namespace hopfcalc {

/// First-order forms as free-module coordinates over the generator
/// differentials; the differential of the sphere relation is NOT imposed
/// here, so two forms may differ symbolically yet agree on every chart
/// tangent (compare with form_equal in chart mode).
///
/// Coefficient order: da, das, dc, dcs.
struct SymbolicOneForm {
    std::array<Poly, 4> c;

    bool is_zero() const;
    SymbolicOneForm operator-() const;
    SymbolicOneForm& operator+=(const SymbolicOneForm& o);
    SymbolicOneForm& operator-=(const SymbolicOneForm& o);
    friend SymbolicOneForm operator+(SymbolicOneForm x, const SymbolicOneForm& y) {
        return x += y;
    }
    friend SymbolicOneForm operator-(SymbolicOneForm x, const SymbolicOneForm& y) {
        return x -= y;
    }
    /// Left multiplication by a function (the algebra is commutative).
    friend SymbolicOneForm operator*(const Poly& b, const SymbolicOneForm& w);
    SymbolicOneForm scaled(const Scalar& s) const;
    friend bool operator==(const SymbolicOneForm&, const SymbolicOneForm&) = default;
};

/// Coefficients over the ordered wedge basis
/// da^das, da^dc, da^dcs, das^dc, das^dcs, dc^dcs.
struct SymbolicTwoForm {
    std::array<Poly, 6> c;

    bool is_zero() const;
    SymbolicTwoForm operator-() const;
    SymbolicTwoForm& operator+=(const SymbolicTwoForm& o);
    SymbolicTwoForm& operator-=(const SymbolicTwoForm& o);
    friend SymbolicTwoForm operator+(SymbolicTwoForm x, const SymbolicTwoForm& y) {
        return x += y;
    }
    friend SymbolicTwoForm operator-(SymbolicTwoForm x, const SymbolicTwoForm& y) {
        return x -= y;
    }
    friend SymbolicTwoForm operator*(const Poly& b, const SymbolicTwoForm& w);
    SymbolicTwoForm scaled(const Scalar& s) const;
    friend bool operator==(const SymbolicTwoForm&, const SymbolicTwoForm&) = default;
};

/// d on the free coordinates: formal partials of the PBW representative.
/// Satisfies Leibniz whenever no product term crosses the sphere rewrite;
/// in general d(pq) - (dp)q - p(dq) is a multiple of the relation's
/// differential and vanishes in chart mode.
SymbolicOneForm differential(const Poly& p);

/// Bilinear antisymmetric expansion into the ordered wedge basis.
SymbolicTwoForm wedge_product(const SymbolicOneForm& x, const SymbolicOneForm& y);

std::string render(const SymbolicOneForm& w);
std::string render(const SymbolicTwoForm& w);

/// Components of a 1-form on the chart tangents (d/dtheta, d/dphi, d/dpsi).
std::array<Complex, 3> eval_form(const SymbolicOneForm& w, const GeneratorFrame& frame);
/// Components of a 2-form on the ordered tangent pairs
/// (theta,phi), (theta,psi), (phi,psi).
std::array<Complex, 3> eval_form(const SymbolicTwoForm& w, const GeneratorFrame& frame);

/// Value of a 1-form on the vertical vector (the circle-orbit direction).
Complex eval_form_vertical(const SymbolicOneForm& w, const ChartPointS3& q);

enum class CompareMode { exact, chart };

/// exact: coefficient Polys must match.  chart: all tangent components agree
/// on the fixed deterministic 12x12x12 interior grid to the tolerance; this
/// is equality in the de Rham calculus, where the relation's differential
/// vanishes.
bool form_equal(const SymbolicOneForm& x, const SymbolicOneForm& y, CompareMode mode,
                double tol = 1e-10);
bool form_equal(const SymbolicTwoForm& x, const SymbolicTwoForm& y, CompareMode mode,
                double tol = 1e-10);

}  // namespace hopfcalc
