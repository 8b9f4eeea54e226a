#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "hopfcalc/topology.hpp"

using namespace hopfcalc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

double regular_x(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-7.0, 7.0);
    for (;;) {
        double x = u(rng);
        if (!on_special_orbit(x, 1e-6)) return x;
    }
}

Complex random_phase(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    return std::polar(1.0, u(rng));
}

S3Point random_s3(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double t = u(rng);
    return S3Point(std::sqrt(t) * random_phase(rng),
                   std::sqrt(1.0 - t) * random_phase(rng));
}

}  // namespace

TEST_CASE("plane flow basics") {
    SECTION("time zero fixes every point") {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> u(-8.0, 8.0);
        for (int i = 0; i < 1000; ++i) {
            PlanePoint p{u(rng), u(rng)};
            PlanePoint q = flow(p, 0.0);
            CHECK(std::abs(q.x - p.x) < 1e-12);
            CHECK(std::abs(q.y - p.y) < 1e-12);
        }
    }

    SECTION("transported sine at x = 0 is tanh") {
        for (double t : {-3.0, -1.0, -0.25, 0.0, 0.5, 1.7, 4.0})
            CHECK(transported_sine(0.0, t) == Catch::Approx(std::tanh(t)).margin(1e-13));
    }

    SECTION("transported sine matches the moved coordinate") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> ut(-4.0, 4.0);
        for (int i = 0; i < 200; ++i) {
            double x = regular_x(rng), t = ut(rng);
            CHECK(std::sin(flow({x, 0.0}, t).x) ==
                  Catch::Approx(transported_sine(x, t)).margin(1e-10));
        }
    }

    SECTION("vertical lines are fixed in x and translated in y") {
        for (int m : {-2, -1, 0, 1, 3}) {
            double x = kHalfPi + m * kPi;
            double sign = (m % 2 == 0) ? 1.0 : -1.0;
            for (double t : {-2.0, 0.3, 5.0}) {
                PlanePoint q = flow({x, 1.0}, t);
                CHECK(q.x == x);
                CHECK(q.y == Catch::Approx(1.0 + sign * t).margin(1e-12));
            }
        }
    }

    SECTION("each open strip is preserved") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> ut(-5.0, 5.0);
        for (int i = 0; i < 200; ++i) {
            double x = regular_x(rng), t = ut(rng);
            double k = std::floor((x + kHalfPi) / kPi);
            double moved = flow({x, 0.0}, t).x;
            CHECK(moved > k * kPi - kHalfPi - 1e-12);
            CHECK(moved < k * kPi + kHalfPi + 1e-12);
        }
    }

    SECTION("continuity across a branch line") {
        double left = flow({kHalfPi - 1e-9, 0.0}, 1.3).x;
        double right = flow({kHalfPi + 1e-9, 0.0}, 1.3).x;
        CHECK(std::abs(left - kHalfPi) < 1e-6);
        CHECK(std::abs(right - kHalfPi) < 1e-6);
    }

    SECTION("rejects out-of-range times and non-finite points") {
        CHECK_THROWS_AS(flow({0.0, 0.0}, 50.5), std::invalid_argument);
        CHECK_THROWS_AS(flow({std::nan(""), 0.0}, 1.0), std::invalid_argument);
    }
}

TEST_CASE("plane flow is an action") {
    SECTION("group law on random samples") {
        std::mt19937_64 rng(314159);
        std::uniform_real_distribution<double> ut(-5.0, 5.0), uy(-3.0, 3.0);
        for (int i = 0; i < 1000; ++i) {
            PlanePoint p{regular_x(rng), uy(rng)};
            GroupLawReport r = group_law_check(p, ut(rng), ut(rng));
            CHECK(r.ok);
            CHECK(r.max_deviation < 1e-9);
        }
    }

    SECTION("trivial second step") {
        GroupLawReport r = group_law_check({0.3, -1.0}, 2.2, 0.0, 1e-14);
        CHECK(r.ok);
    }

    SECTION("vertical translations compose additively") {
        GroupLawReport r = group_law_check({kHalfPi, 0.0}, 3.0, -1.25, 1e-14);
        CHECK(r.ok);
    }
}

TEST_CASE("translation time") {
    SECTION("round trip recovers the time") {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> ut(-4.0, 4.0), uy(-2.0, 2.0);
        for (int i = 0; i < 300; ++i) {
            PlanePoint p{regular_x(rng), uy(rng)};
            double t = ut(rng);
            CHECK(translation_time(p, flow(p, t)) == Catch::Approx(t).margin(1e-9));
        }
        PlanePoint p{0.4, 0.0};
        CHECK(translation_time(p, flow(p, 1.7)) == Catch::Approx(1.7).margin(1e-9));
    }

    SECTION("coincident points give zero") {
        CHECK(translation_time({0.7, 2.0}, {0.7, 2.0}) == 0.0);
        CHECK(translation_time({kHalfPi, 1.0}, {kHalfPi, 1.0}) == 0.0);
    }

    SECTION("vertical translation on the special lines") {
        CHECK(translation_time({kHalfPi, 0.0}, {kHalfPi, 2.0}) ==
              Catch::Approx(2.0).margin(1e-12));
        CHECK(translation_time({-kHalfPi, 1.0}, {-kHalfPi, 0.0}) ==
              Catch::Approx(1.0).margin(1e-12));
    }

    SECTION("antisymmetry and additivity along orbits") {
        std::mt19937_64 rng(123);
        std::uniform_real_distribution<double> ut(-3.0, 3.0), uy(-2.0, 2.0);
        for (int i = 0; i < 200; ++i) {
            PlanePoint p{regular_x(rng), uy(rng)};
            PlanePoint q = flow(p, ut(rng));
            PlanePoint r = flow(p, ut(rng));
            double pq = translation_time(p, q);
            double qp = translation_time(q, p);
            double qr = translation_time(q, r);
            double pr = translation_time(p, r);
            CHECK(std::abs(pq + qp) < 1e-8);
            CHECK(std::abs(pq + qr - pr) < 1e-8);
        }
    }

    SECTION("recovered time is unique on samples") {
        std::mt19937_64 rng(321);
        std::uniform_real_distribution<double> ut(-4.0, 4.0);
        for (int i = 0; i < 100; ++i) {
            PlanePoint p{regular_x(rng), 0.0};
            double t1 = ut(rng), t2 = ut(rng);
            if (std::abs(t1 - t2) < 1e-6) continue;
            PlanePoint a = flow(p, t1), b = flow(p, t2);
            CHECK(std::abs(translation_time(a, b) - (t2 - t1)) < 1e-8);
        }
    }

    SECTION("distinct orbits are rejected") {
        CHECK_THROWS_AS(translation_time({0.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(translation_time({0.0, 0.0}, {3.0, 0.0}), std::invalid_argument);
        CHECK_THROWS_AS(translation_time({kHalfPi, 0.0}, {-kHalfPi, 0.0}),
                        std::invalid_argument);
    }

    SECTION("both height-offset expressions agree") {
        std::mt19937_64 rng(55);
        std::uniform_real_distribution<double> ut(-4.0, 4.0), uy(-2.0, 2.0);
        for (int i = 0; i < 300; ++i) {
            PlanePoint p{regular_x(rng), uy(rng)};
            double t = ut(rng);
            PlanePoint q = flow(p, t);
            auto [first, second] = translation_time_from_offsets(p, q);
            CHECK(first == Catch::Approx(t).margin(1e-9));
            CHECK(second == Catch::Approx(t).margin(1e-9));
        }
    }
}

TEST_CASE("witness for the non-proper action") {
    WitnessReport report = nonproperness_witness(12);
    REQUIRE(report.entries.size() == 12);
    CHECK(report.pairs_same_orbit);
    CHECK(report.times_monotone);
    CHECK(report.limit_distinct_special);
    CHECK(report.limit_first.x == Catch::Approx(-kHalfPi));
    CHECK(report.limit_second.x == Catch::Approx(kHalfPi));

    for (const WitnessEntry& e : report.entries) {
        double expected = std::log((1.0 + std::cos(1.0 / double(e.n))) /
                                   (1.0 - std::cos(1.0 / double(e.n))));
        CHECK(e.time == Catch::Approx(expected).margin(1e-9));
        CHECK(e.first.x == Catch::Approx(1.0 / double(e.n) - kHalfPi));
        CHECK(e.second.x == Catch::Approx(-1.0 / double(e.n) + kHalfPi));
    }
    CHECK(report.entries.back().time > report.entries.front().time + 2.0);
    CHECK_THROWS_AS(nonproperness_witness(2), std::invalid_argument);
}

TEST_CASE("Cantor encoding") {
    SECTION("stated replacement rule") {
        CHECK(cantor_encode({0, 2, 0}) == SignSeq{1, -1, 1});
        CHECK(cantor_encode({}) == SignSeq{});
        CHECK(cantor_decode({1, -1, 1}) == TernaryDigits{0, 2, 0});
    }

    SECTION("mutually inverse on all length-8 words") {
        for (unsigned mask = 0; mask < 256; ++mask) {
            TernaryDigits d;
            for (unsigned j = 0; j < 8; ++j) d.push_back((mask >> j) & 1 ? 2 : 0);
            CHECK(cantor_decode(cantor_encode(d)) == d);
        }
    }

    SECTION("invalid symbols are rejected") {
        CHECK_THROWS_AS(cantor_encode({0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(cantor_decode({1, 0}), std::invalid_argument);
    }

    SECTION("prefix intervals nest and separate") {
        CHECK(ternary_interval({0}).lo == Catch::Approx(0.0));
        CHECK(ternary_interval({0}).hi == Catch::Approx(1.0 / 3.0));
        CHECK(ternary_interval({2}).lo == Catch::Approx(2.0 / 3.0));
        CHECK(ternary_interval({2}).hi == Catch::Approx(1.0));

        Interval outer = ternary_interval({2, 0});
        Interval inner = ternary_interval({2, 0, 2});
        CHECK(outer.lo <= inner.lo);
        CHECK(inner.hi <= outer.hi);

        Interval left = ternary_interval({0, 2});
        Interval right = ternary_interval({2, 0});
        CHECK(left.hi < right.lo);
    }
}

TEST_CASE("suspension model of the 3-sphere") {
    SECTION("frozen image point") {
        S3Point q = suspension_to_s3(make_suspension(0.25, {1.0, 0.0}, {0.0, 1.0}));
        CHECK(std::abs(q.a - Complex(0.5, 0.0)) < 1e-15);
        CHECK(std::abs(q.c - Complex(0.0, std::sqrt(3.0) / 2.0)) < 1e-15);
    }

    SECTION("gluing at the ends") {
        SuspensionPoint p = make_suspension(0.0, {0.0, 1.0}, {1.0, 0.0});
        CHECK(p.g == Complex(1.0, 0.0));
        SuspensionPoint q = s3_to_suspension(S3Point({0.0, 0.0}, {1.0, 0.0}));
        CHECK(q.t == 0.0);
        CHECK(suspension_equal(p, q));
        CHECK_FALSE(suspension_equal(
            q, s3_to_suspension(S3Point({0.0, 0.0}, {0.0, 1.0}))));
        CHECK(suspension_equal(make_suspension(1.0, {0.0, -1.0}, {1.0, 0.0}),
                               make_suspension(1.0, {0.0, -1.0}, {0.0, 1.0})));
    }

    SECTION("round trips") {
        std::mt19937_64 rng(4242);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            S3Point q = random_s3(rng);
            S3Point back = suspension_to_s3(s3_to_suspension(q));
            CHECK(std::abs(back.a - q.a) < 1e-12);
            CHECK(std::abs(back.c - q.c) < 1e-12);

            SuspensionPoint p = make_suspension(u(rng), random_phase(rng), random_phase(rng));
            CHECK(suspension_equal(s3_to_suspension(suspension_to_s3(p)), p, 1e-12));
        }
    }

    SECTION("equivariance") {
        std::mt19937_64 rng(777);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            SuspensionPoint p = make_suspension(u(rng), random_phase(rng), random_phase(rng));
            Complex k = random_phase(rng);
            S3Point lhs = suspension_to_s3(suspension_act(p, k));
            S3Point rhs = s3_act(suspension_to_s3(p), k);
            CHECK(std::abs(lhs.a - rhs.a) < 1e-12);
            CHECK(std::abs(lhs.c - rhs.c) < 1e-12);
        }
    }

    SECTION("unit-sphere constraint is enforced") {
        CHECK_THROWS_AS(S3Point(Complex(1.0, 0.0), Complex(0.1, 0.0)),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_suspension(1.5, {1.0, 0.0}, {1.0, 0.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_suspension(0.5, {2.0, 0.0}, {1.0, 0.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("bundle projection to the 2-sphere") {
    SECTION("frozen values") {
        auto [z1, s1] = hopf_projection(S3Point({1.0, 0.0}, {0.0, 0.0}));
        CHECK(std::abs(z1) < 1e-15);
        CHECK(s1 == Catch::Approx(1.0));
        double r = 1.0 / std::sqrt(2.0);
        auto [z2, s2] = hopf_projection(S3Point({r, 0.0}, {r, 0.0}));
        CHECK(std::abs(z2 - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(s2) < 1e-15);
    }

    SECTION("lands on the unit sphere and is fiber-invariant") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 500; ++i) {
            S3Point q = random_s3(rng);
            auto [z, s] = hopf_projection(q);
            CHECK(std::abs(std::norm(z) + s * s - 1.0) < 1e-12);
            auto [zk, sk] = hopf_projection(s3_act(q, random_phase(rng)));
            CHECK(std::abs(zk - z) < 1e-12);
            CHECK(std::abs(sk - s) < 1e-12);
        }
    }

    SECTION("factors through the suspension picture") {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            SuspensionPoint p = make_suspension(u(rng), random_phase(rng), random_phase(rng));
            auto [z, s] = hopf_projection(suspension_to_s3(p));
            auto [zb, sb] = sg_to_s2(bundle_base(p));
            CHECK(std::abs(z - zb) < 1e-12);
            CHECK(std::abs(s - sb) < 1e-12);

            auto [zk, sk] = hopf_projection(suspension_to_s3(suspension_act(p, random_phase(rng))));
            CHECK(std::abs(zk - z) < 1e-12);
            CHECK(std::abs(sk - s) < 1e-12);
        }
    }

    SECTION("poles of the base interval chart") {
        auto [z0, s0] = sg_to_s2(make_sg(0.0, {1.0, 0.0}));
        CHECK(std::abs(z0) < 1e-15);
        CHECK(s0 == -1.0);
        auto [z1, s1] = sg_to_s2(make_sg(1.0, {0.0, 1.0}));
        CHECK(std::abs(z1) < 1e-15);
        CHECK(s1 == 1.0);
        CHECK(sg_equal(s2_to_sg(Complex(0.6, 0.0), 0.8), make_sg(0.9, {1.0, 0.0})));
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> u(0.01, 0.99);
        for (int i = 0; i < 100; ++i) {
            SGPoint b = make_sg(u(rng), random_phase(rng));
            auto [z, s] = sg_to_s2(b);
            CHECK(sg_equal(s2_to_sg(z, s), b, 1e-12));
        }
    }
}

TEST_CASE("transition function of the two charts") {
    SECTION("frozen values") {
        double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(transition_function(S3Point({r, 0.0}, {r, 0.0})) -
                       Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(transition_function(S3Point(Complex(0.0, r), {r, 0.0})) -
                       Complex(0.0, 1.0)) < 1e-15);
    }

    SECTION("unit modulus, fiber constancy, degenerate cocycle") {
        std::mt19937_64 rng(64);
        std::uniform_real_distribution<double> u(0.05, 0.95);
        for (int i = 0; i < 300; ++i) {
            double t = u(rng);
            S3Point q(std::sqrt(t) * random_phase(rng),
                      std::sqrt(1.0 - t) * random_phase(rng));
            Complex theta = transition_function(q);
            CHECK(std::abs(std::abs(theta) - 1.0) < 1e-12);
            CHECK(std::abs(transition_function(s3_act(q, random_phase(rng))) - theta) <
                  1e-12);
            Complex reverse = (q.c / std::abs(q.c)) * (std::abs(q.a) / q.a);
            CHECK(std::abs(theta * reverse - Complex(1.0, 0.0)) < 1e-12);
        }
    }

    SECTION("matches the interval-model transition through the identifications") {
        std::mt19937_64 rng(65);
        std::uniform_real_distribution<double> u(0.05, 0.95);
        for (int i = 0; i < 300; ++i) {
            double t = u(rng);
            S3Point q(std::sqrt(t) * random_phase(rng),
                      std::sqrt(1.0 - t) * random_phase(rng));
            CHECK(std::abs(transition_function(q) - transition_via_suspension(q)) < 1e-12);
        }
    }

    SECTION("equator restriction is the identity function") {
        std::mt19937_64 rng(66);
        for (int i = 0; i < 100; ++i) {
            Complex g = random_phase(rng), h = random_phase(rng);
            SuspensionPoint p = make_suspension(0.5, g, h);
            Complex theta = transition_function(suspension_to_s3(p));
            CHECK(std::abs(theta - g * std::conj(h)) < 1e-12);
            CHECK(std::abs(theta - transition_identity(bundle_base(p))) < 1e-12);
        }
    }

    SECTION("pole errors") {
        CHECK_THROWS_AS(transition_function(S3Point({1.0, 0.0}, {0.0, 0.0})),
                        std::invalid_argument);
        CHECK_THROWS_AS(transition_function(S3Point({0.0, 0.0}, {1.0, 0.0})),
                        std::invalid_argument);
        CHECK_THROWS_AS(transition_identity(make_sg(0.0, {1.0, 0.0})),
                        std::invalid_argument);
    }
}

TEST_CASE("Heegaard splitting") {
    SECTION("frozen values") {
        auto [z1, z2] = heegaard_maps(S3Point({1.0, 0.0}, {0.0, 0.0}));
        CHECK(std::abs(z1 - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(z2) < 1e-15);
        double r = 1.0 / std::sqrt(2.0);
        auto [w1, w2] = heegaard_maps(S3Point({r, 0.0}, Complex(0.0, r)));
        CHECK(std::abs(std::abs(w1) - 1.0) < 1e-12);
        CHECK(std::abs(std::abs(w2) - 1.0) < 1e-12);
    }

    SECTION("image lies in the union of the two boundary cylinders") {
        std::mt19937_64 rng(100);
        for (int i = 0; i < 500; ++i) {
            S3Point q = random_s3(rng);
            CHECK((in_first_torus(q) || in_second_torus(q)));
            auto [z1, z2] = heegaard_maps(q);
            double r1 = std::abs(z1), r2 = std::abs(z2);
            CHECK(r1 <= 1.0 + 1e-12);
            CHECK(r2 <= 1.0 + 1e-12);
            CHECK(std::abs(std::max(r1, r2) - 1.0) < 1e-12);
            CHECK(std::abs((1.0 - r1 * r1) * (1.0 - r2 * r2)) < 1e-12);
        }
    }

    SECTION("the small-|a| solid torus lands on the |z2| = 1 side") {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> u(0.0, 0.5);
        for (int i = 0; i < 200; ++i) {
            double t = u(rng);
            S3Point q(std::sqrt(t) * random_phase(rng),
                      std::sqrt(1.0 - t) * random_phase(rng));
            REQUIRE(in_first_torus(q));
            auto [z1, z2] = heegaard_maps(q);
            CHECK(std::abs(std::abs(z2) - 1.0) < 1e-12);
            CHECK(std::abs(z1) <= 1.0 + 1e-12);
        }
    }

    SECTION("round trips") {
        std::mt19937_64 rng(102);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            S3Point q = random_s3(rng);
            auto [z1, z2] = heegaard_maps(q);
            S3Point back = heegaard_inverse(z1, z2);
            CHECK(std::abs(back.a - q.a) < 1e-12);
            CHECK(std::abs(back.c - q.c) < 1e-12);

            Complex disk = std::sqrt(u(rng)) * random_phase(rng);
            Complex rim = random_phase(rng);
            bool first_on_rim = (i % 2 == 0);
            Complex w1 = first_on_rim ? rim : disk;
            Complex w2 = first_on_rim ? disk : rim;
            auto [r1, r2] = heegaard_maps(heegaard_inverse(w1, w2));
            CHECK(std::abs(r1 - w1) < 1e-12);
            CHECK(std::abs(r2 - w2) < 1e-12);
        }
    }

    SECTION("membership errors") {
        CHECK_THROWS_AS(heegaard_inverse(Complex(0.5, 0.0), Complex(0.0, 0.5)),
                        std::invalid_argument);
        CHECK_THROWS_AS(heegaard_inverse(Complex(1.2, 0.0), Complex(1.0, 0.0)),
                        std::invalid_argument);
    }
}
