#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfcalc/chart.hpp"

namespace hopfcalc {

// -------- non-proper free R-action on the plane --------

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

inline constexpr double kMaxFlowTime = 50.0;

// sine of the transported first coordinate; equals sin(flow(p, t).x)
double transported_sine(double x, double t);

PlanePoint flow(const PlanePoint& p, double t);

bool on_special_orbit(double x, double tol = 1e-12);

struct GroupLawReport {
    double max_deviation = 0.0;
    bool ok = false;
};

GroupLawReport group_law_check(const PlanePoint& p, double t1, double t2,
                               double tol = 1e-9);

// time moving p to q along its orbit; throws std::invalid_argument when the
// round-trip consistency check fails (points on different orbits)
double translation_time(const PlanePoint& p, const PlanePoint& q,
                        double tol = 1e-8);

// the two height-offset expressions for the same time; valid on regular
// same-orbit pairs, finite away from the poles of the logarithms
std::pair<double, double> translation_time_from_offsets(const PlanePoint& p,
                                                        const PlanePoint& q);

struct WitnessEntry {
    std::int64_t n = 0;
    PlanePoint first;
    PlanePoint second;
    double time = 0.0;
};

struct WitnessReport {
    std::vector<WitnessEntry> entries;
    PlanePoint limit_first;
    PlanePoint limit_second;
    bool pairs_same_orbit = false;
    bool limit_distinct_special = false;
    bool times_monotone = false;
};

WitnessReport nonproperness_witness(std::int64_t n_max);

// -------- Cantor-group encoding --------

using SignSeq = std::vector<int>;       // entries in {-1, +1}
using TernaryDigits = std::vector<int>; // entries in {0, 2}

SignSeq cantor_encode(const TernaryDigits& digits);
TernaryDigits cantor_decode(const SignSeq& signs);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// closure of the set of reals whose ternary expansion starts with the digits
Interval ternary_interval(const TernaryDigits& digits);

// -------- suspension model of the circle bundle over the 2-sphere --------

struct SuspensionPoint {
    double t = 0.0;
    Complex g{1.0, 0.0};
    Complex h{1.0, 0.0};
};

SuspensionPoint make_suspension(double t, Complex g, Complex h);
bool suspension_equal(const SuspensionPoint& lhs, const SuspensionPoint& rhs,
                      double tol = 1e-12);
SuspensionPoint suspension_act(const SuspensionPoint& p, Complex k);

struct SGPoint {
    double t = 0.0;
    Complex g{1.0, 0.0};
};

SGPoint make_sg(double t, Complex g);
bool sg_equal(const SGPoint& lhs, const SGPoint& rhs, double tol = 1e-12);

struct S3Point {
    S3Point(Complex a_in, Complex c_in);
    Complex a;
    Complex c;
};

S3Point suspension_to_s3(const SuspensionPoint& p);
SuspensionPoint s3_to_suspension(const S3Point& q);
S3Point s3_act(const S3Point& q, Complex k);

SGPoint bundle_base(const SuspensionPoint& p);
std::pair<Complex, double> sg_to_s2(const SGPoint& b);
SGPoint s2_to_sg(const Complex& z, double s);

// transition function of the two interval charts read off in each model
Complex transition_identity(const SGPoint& b);
Complex transition_function(const S3Point& q);
Complex transition_via_suspension(const S3Point& q);

std::pair<Complex, double> hopf_projection(const S3Point& q);

// -------- Heegaard splitting of the 3-sphere --------

std::pair<Complex, Complex> heegaard_maps(const S3Point& q);
S3Point heegaard_inverse(const Complex& z1, const Complex& z2);

bool in_first_torus(const S3Point& q, double tol = 1e-12);
bool in_second_torus(const S3Point& q, double tol = 1e-12);

}  // namespace hopfcalc
