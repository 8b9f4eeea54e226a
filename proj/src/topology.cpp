#include "hopfcalc/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hopfcalc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

void require_finite(const PlanePoint& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::invalid_argument("plane point must have finite coordinates");
}

void require_time(double t) {
    if (!std::isfinite(t) || std::abs(t) > kMaxFlowTime)
        throw std::invalid_argument("flow time must satisfy |t| <= 50");
}

// index of the nearest vertical line x = pi/2 + m*pi
long long special_index(double x) {
    return std::llround((x - kHalfPi) / kPi);
}

double special_sign(double x) {
    return (special_index(x) % 2 == 0) ? 1.0 : -1.0;  // sin(pi/2 + m*pi)
}

double flow_coordinate(double x, double t) {
    if (on_special_orbit(x)) return x;
    long long k = std::llround(std::floor((x + kHalfPi) / kPi));
    double asn = std::asin(std::clamp(transported_sine(x, t), -1.0, 1.0));
    return (k % 2 == 0) ? double(k) * kPi + asn : double(k) * kPi - asn;
}

double flow_height_shift(double x, double t) {
    if (on_special_orbit(x)) return special_sign(x) * t;
    double sp = 1.0 + std::sin(x);
    double sm = 1.0 - std::sin(x);
    return std::log((std::exp(t) * sp + std::exp(-t) * sm) / 2.0);
}

Complex unit_direction(const Complex& z, const char* what) {
    double r = std::abs(z);
    if (std::abs(r - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + " must lie on the unit circle");
    return z / r;
}

}  // namespace

bool on_special_orbit(double x, double tol) {
    return std::abs(x - (kHalfPi + double(special_index(x)) * kPi)) <= tol;
}

double transported_sine(double x, double t) {
    double sp = 1.0 + std::sin(x);
    double sm = 1.0 - std::sin(x);
    double up = std::exp(t) * sp;
    double dn = std::exp(-t) * sm;
    return (up - dn) / (up + dn);
}

PlanePoint flow(const PlanePoint& p, double t) {
    require_finite(p);
    require_time(t);
    return {flow_coordinate(p.x, t), p.y + flow_height_shift(p.x, t)};
}

GroupLawReport group_law_check(const PlanePoint& p, double t1, double t2,
                               double tol) {
    require_finite(p);
    require_time(t1);
    require_time(t2);
    require_time(t1 + t2);
    PlanePoint stepwise = flow(flow(p, t1), t2);
    PlanePoint direct = flow(p, t1 + t2);
    GroupLawReport report;
    double dx = std::abs(stepwise.x - direct.x) / std::max(1.0, std::abs(direct.x));
    double dy = std::abs(stepwise.y - direct.y) / std::max(1.0, std::abs(direct.y));
    report.max_deviation = std::max(dx, dy);
    report.ok = report.max_deviation <= tol;
    return report;
}

double translation_time(const PlanePoint& p, const PlanePoint& q, double tol) {
    require_finite(p);
    require_finite(q);
    double t;
    if (on_special_orbit(p.x)) {
        if (std::abs(p.x - q.x) > tol)
            throw std::invalid_argument("points are not on the same orbit");
        t = special_sign(p.x) * (q.y - p.y);
    } else {
        t = 0.5 * std::log(((1.0 - std::sin(p.x)) * (1.0 + std::sin(q.x))) /
                           ((1.0 + std::sin(p.x)) * (1.0 - std::sin(q.x))));
    }
    PlanePoint moved = flow(p, t);
    if (std::abs(moved.x - q.x) > tol || std::abs(moved.y - q.y) > tol)
        throw std::invalid_argument("points are not on the same orbit");
    return t;
}

std::pair<double, double> translation_time_from_offsets(const PlanePoint& p,
                                                        const PlanePoint& q) {
    require_finite(p);
    require_finite(q);
    double first = (q.y - p.y) + std::log((1.0 + std::sin(q.x)) / (1.0 + std::sin(p.x)));
    double second = (p.y - q.y) + std::log((1.0 - std::sin(p.x)) / (1.0 - std::sin(q.x)));
    return {first, second};
}

WitnessReport nonproperness_witness(std::int64_t n_max) {
    if (n_max < 3) throw std::invalid_argument("witness needs n_max >= 3");
    WitnessReport report;
    report.limit_first = {-kHalfPi, 0.0};
    report.limit_second = {kHalfPi, 0.0};
    report.pairs_same_orbit = true;
    report.times_monotone = true;
    double previous = 0.0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        WitnessEntry entry;
        entry.n = n;
        entry.first = {1.0 / double(n) - kHalfPi, 0.0};
        entry.second = {-1.0 / double(n) + kHalfPi, 0.0};
        try {
            entry.time = translation_time(entry.first, entry.second);
        } catch (const std::invalid_argument&) {
            report.pairs_same_orbit = false;
            entry.time = std::numeric_limits<double>::quiet_NaN();
        }
        if (n > 1 && !(std::abs(entry.time) > std::abs(previous)))
            report.times_monotone = false;
        previous = entry.time;
        report.entries.push_back(entry);
    }
    report.limit_distinct_special =
        on_special_orbit(report.limit_first.x) &&
        on_special_orbit(report.limit_second.x) &&
        std::abs(report.limit_first.x - report.limit_second.x) > 1e-9;
    return report;
}

SignSeq cantor_encode(const TernaryDigits& digits) {
    SignSeq out;
    out.reserve(digits.size());
    for (int d : digits) {
        if (d == 0)
            out.push_back(1);
        else if (d == 2)
            out.push_back(-1);
        else
            throw std::invalid_argument("ternary digits must be 0 or 2");
    }
    return out;
}

TernaryDigits cantor_decode(const SignSeq& signs) {
    TernaryDigits out;
    out.reserve(signs.size());
    for (int s : signs) {
        if (s == 1)
            out.push_back(0);
        else if (s == -1)
            out.push_back(2);
        else
            throw std::invalid_argument("signs must be -1 or +1");
    }
    return out;
}

Interval ternary_interval(const TernaryDigits& digits) {
    double lo = 0.0;
    double scale = 1.0;
    for (int d : digits) {
        if (d != 0 && d != 2)
            throw std::invalid_argument("ternary digits must be 0 or 2");
        scale /= 3.0;
        lo += double(d) * scale;
    }
    return {lo, lo + scale};
}

SuspensionPoint make_suspension(double t, Complex g, Complex h) {
    if (!(t >= -1e-12 && t <= 1.0 + 1e-12))
        throw std::invalid_argument("suspension parameter must lie in [0, 1]");
    t = std::clamp(t, 0.0, 1.0);
    SuspensionPoint p;
    p.t = t;
    p.g = (t == 0.0) ? Complex(1.0, 0.0) : unit_direction(g, "left circle factor");
    p.h = (t == 1.0) ? Complex(1.0, 0.0) : unit_direction(h, "right circle factor");
    return p;
}

bool suspension_equal(const SuspensionPoint& lhs, const SuspensionPoint& rhs,
                      double tol) {
    SuspensionPoint a = make_suspension(lhs.t, lhs.g, lhs.h);
    SuspensionPoint b = make_suspension(rhs.t, rhs.g, rhs.h);
    return std::abs(a.t - b.t) <= tol && std::abs(a.g - b.g) <= tol &&
           std::abs(a.h - b.h) <= tol;
}

SuspensionPoint suspension_act(const SuspensionPoint& p, Complex k) {
    k = unit_direction(k, "group element");
    return make_suspension(p.t, p.g * k, p.h * k);
}

SGPoint make_sg(double t, Complex g) {
    if (!(t >= -1e-12 && t <= 1.0 + 1e-12))
        throw std::invalid_argument("suspension parameter must lie in [0, 1]");
    t = std::clamp(t, 0.0, 1.0);
    SGPoint b;
    b.t = t;
    b.g = (t == 0.0 || t == 1.0) ? Complex(1.0, 0.0)
                                 : unit_direction(g, "circle factor");
    return b;
}

bool sg_equal(const SGPoint& lhs, const SGPoint& rhs, double tol) {
    SGPoint a = make_sg(lhs.t, lhs.g);
    SGPoint b = make_sg(rhs.t, rhs.g);
    return std::abs(a.t - b.t) <= tol && std::abs(a.g - b.g) <= tol;
}

S3Point::S3Point(Complex a_in, Complex c_in) : a(a_in), c(c_in) {
    double r = std::norm(a) + std::norm(c);
    if (std::abs(r - 1.0) > 1e-12)
        throw std::invalid_argument("point must satisfy |a|^2 + |c|^2 = 1");
}

S3Point suspension_to_s3(const SuspensionPoint& p) {
    SuspensionPoint n = make_suspension(p.t, p.g, p.h);
    return S3Point(std::sqrt(n.t) * n.g, std::sqrt(1.0 - n.t) * n.h);
}

SuspensionPoint s3_to_suspension(const S3Point& q) {
    double t = std::norm(q.a);
    Complex g = (std::abs(q.a) > 0.0) ? q.a / std::abs(q.a) : Complex(1.0, 0.0);
    Complex h = (std::abs(q.c) > 0.0) ? q.c / std::abs(q.c) : Complex(1.0, 0.0);
    return make_suspension(std::clamp(t, 0.0, 1.0), g, h);
}

S3Point s3_act(const S3Point& q, Complex k) {
    k = unit_direction(k, "group element");
    return S3Point(q.a * k, q.c * k);
}

SGPoint bundle_base(const SuspensionPoint& p) {
    SuspensionPoint n = make_suspension(p.t, p.g, p.h);
    return make_sg(n.t, n.g * std::conj(n.h));
}

std::pair<Complex, double> sg_to_s2(const SGPoint& b) {
    SGPoint n = make_sg(b.t, b.g);
    return {2.0 * n.g * std::sqrt(std::max(n.t - n.t * n.t, 0.0)), 2.0 * n.t - 1.0};
}

SGPoint s2_to_sg(const Complex& z, double s) {
    if (std::abs(std::norm(z) + s * s - 1.0) > 1e-12)
        throw std::invalid_argument("point must satisfy |z|^2 + s^2 = 1");
    Complex g = (std::abs(z) > 0.0) ? z / std::abs(z) : Complex(1.0, 0.0);
    return make_sg((s + 1.0) / 2.0, g);
}

Complex transition_identity(const SGPoint& b) {
    SGPoint n = make_sg(b.t, b.g);
    if (n.t <= 0.0 || n.t >= 1.0)
        throw std::invalid_argument("transition function is defined away from the poles");
    return n.g;
}

Complex transition_function(const S3Point& q) {
    double ra = std::abs(q.a);
    double rc = std::abs(q.c);
    if (ra < 1e-12 || rc < 1e-12)
        throw std::invalid_argument("transition function is defined away from the poles");
    return (q.a / ra) * (rc / q.c);
}

Complex transition_via_suspension(const S3Point& q) {
    return transition_identity(bundle_base(s3_to_suspension(q)));
}

std::pair<Complex, double> hopf_projection(const S3Point& q) {
    return {2.0 * q.a * std::conj(q.c), std::norm(q.a) - std::norm(q.c)};
}

std::pair<Complex, Complex> heegaard_maps(const S3Point& q) {
    double d = std::abs(std::norm(q.a) - std::norm(q.c));
    double root = std::sqrt(2.0 / (1.0 + d));
    return {root * q.a, root * q.c};
}

S3Point heegaard_inverse(const Complex& z1, const Complex& z2) {
    double r1 = std::norm(z1);
    double r2 = std::norm(z2);
    if (r1 > 1.0 + 1e-9 || r2 > 1.0 + 1e-9 ||
        std::abs((1.0 - r1) * (1.0 - r2)) > 1e-9)
        throw std::invalid_argument(
            "inverse needs |z_i| <= 1 with at least one factor on the circle");
    double root = std::sqrt(1.0 + r1 * r2);
    Complex a = z1 / root;
    Complex c = z2 / root;
    double unit = std::sqrt(std::norm(a) + std::norm(c));
    return S3Point(a / unit, c / unit);
}

bool in_first_torus(const S3Point& q, double tol) {
    return std::norm(q.a) <= 0.5 + tol;
}

bool in_second_torus(const S3Point& q, double tol) {
    return std::norm(q.a) >= 0.5 - tol;
}

}  // namespace hopfcalc
