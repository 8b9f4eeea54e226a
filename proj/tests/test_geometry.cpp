#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "hopfcalc/chart.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/projector_eval.hpp"

using namespace hopfcalc;
using hopfcalc::testing::random_poly;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

ChartPointS3 random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return ChartPointS3{u(rng) * kPi / 2, u(rng) * 2 * kPi, u(rng) * 2 * kPi};
}

using hopfcalc::testing::random_invariant;

}  // namespace

TEST_CASE("chart points satisfy the sphere constraints") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        ChartPointS3 q = random_point(rng);
        CHECK(std::abs(std::norm(q.alpha()) + std::norm(q.gamma()) - 1.0) < 1e-15);
        ChartPointS2 x = project_chart(q);
        double r2 = x.x1() * x.x1() + x.x2() * x.x2() + x.x3() * x.x3();
        CHECK(std::abs(r2 - 1.0) < 1e-14);
    }
}

TEST_CASE("fibre projection realizes the generator pullbacks") {
    // x1 + i x2 pulls back to 2 a* c and x3 to a* a - c* c
    Poly z = (Poly::gen_as() * Poly::gen_c()).scaled(Scalar(2));
    Poly height = Poly::gen_as() * Poly::gen_a() - Poly::gen_cs() * Poly::gen_c();
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        ChartPointS3 q = random_point(rng);
        ChartPointS2 x = project_chart(q);
        CHECK(near(eval_poly(z, q), Complex(x.x1(), x.x2()), 1e-12));
        CHECK(near(eval_poly(height, q), Complex(x.x3(), 0.0), 1e-12));
    }
}

TEST_CASE("the section inverts the projection") {
    for (const ChartPointS2& x : s2_grid(9)) {
        ChartPointS2 back = project_chart(section_chart(x));
        CHECK(back.theta == x.theta);
        CHECK(back.phi == x.phi);
    }
}

TEST_CASE("invariant elements descend to the base") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_invariant(rng);
        ChartPointS3 q = random_point(rng);
        // value through the section at the projected point = value upstairs
        CHECK(near(eval_invariant(p, project_chart(q)), eval_poly(p, q), 1e-10));
    }
    CHECK_THROWS_AS(eval_invariant(Poly::gen_c(), ChartPointS2{1.0, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_invariant_dual(Poly::gen_a(), ChartPointS2{1.0, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("frozen derivative seeds of the coordinate functions") {
    Dual2 x3 = dual_x3(ChartPointS2{kPi / 2, 1.3});
    CHECK(near(x3.v, 0.0, 1e-15));
    CHECK(near(x3.dt, -1.0, 1e-15));
    CHECK(near(x3.dp, 0.0, 1e-15));

    ChartPointS2 east{kPi / 2, 0.0};
    Dual2 zc = dual_x1(east) + Dual2(Complex(0, 1)) * dual_x2(east);
    CHECK(near(zc.v, 1.0, 1e-15));
    CHECK(near(zc.dt, 0.0, 1e-15));
    CHECK(near(zc.dp, Complex(0, 1), 1e-15));

    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.1, kPi - 0.1);
    for (int i = 0; i < 20; ++i) {
        ChartPointS2 x{u(rng), 2 * u(rng)};
        Dual2 r2 = dual_x1(x) * dual_x1(x) + dual_x2(x) * dual_x2(x) + dual_x3(x) * dual_x3(x);
        CHECK(near(r2.v, 1.0, 1e-14));
        CHECK(near(r2.dt, 0.0, 1e-14));
        CHECK(near(r2.dp, 0.0, 1e-14));
    }
}

TEST_CASE("dual arithmetic identities") {
    ChartPointS2 x{kPi / 3, 0.7};
    Dual2 w = (Dual2(Complex(1.0)) + dual_x3(x)) * Dual2(Complex(0.5));  // cos^2(theta/2)
    Dual2 root = dual_sqrt(w);
    CHECK(near(root.v, std::cos(kPi / 6), 1e-15));
    CHECK(near(root.dt, -0.5 * std::sin(kPi / 6), 1e-15));
    CHECK(near(root.dp, 0.0, 1e-15));

    Dual2 inv = dual_reciprocal(w);
    Dual2 unit = inv * w;
    CHECK(near(unit.v, 1.0, 1e-15));
    CHECK(near(unit.dt, 0.0, 1e-15));
    CHECK(near(unit.dp, 0.0, 1e-15));
    Dual2 sq = root * root;
    CHECK(near(sq.v, w.v, 1e-15));
    CHECK(near(sq.dt, w.dt, 1e-15));
}

TEST_CASE("base derivatives agree with central differences") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> ut(0.2, kPi - 0.2);
    std::uniform_real_distribution<double> up(0.0, 2 * kPi);
    const double h = 1e-5;
    for (int i = 0; i < 200; ++i) {
        Poly p = random_invariant(rng);
        ChartPointS2 x{ut(rng), up(rng)};
        Dual2 d = eval_invariant_dual(p, x);
        CHECK(near(d.v, eval_invariant(p, x), 1e-13));
        Complex ft = (eval_invariant(p, ChartPointS2{x.theta + h, x.phi}) -
                      eval_invariant(p, ChartPointS2{x.theta - h, x.phi})) /
                     (2 * h);
        Complex fp = (eval_invariant(p, ChartPointS2{x.theta, x.phi + h}) -
                      eval_invariant(p, ChartPointS2{x.theta, x.phi - h})) /
                     (2 * h);
        CHECK(near(d.dt, ft, 2e-6));
        CHECK(near(d.dp, fp, 2e-6));
    }
}

TEST_CASE("vertical derivative is multiplication by the winding") {
    std::mt19937_64 rng(16);
    Complex i01{0.0, 1.0};
    for (int i = 0; i < 100; ++i) {
        RawTerm t = hopfcalc::testing::random_raw_term(rng);
        Poly p = Poly::normal_form({t});
        double w = double(t.a) + double(t.c) - double(t.as) - double(t.cs);
        ChartPointS3 q = random_point(rng);
        Dual1 d = eval_poly_vertical(p, q);
        CHECK(near(d.v, eval_poly(p, q), 1e-13));
        CHECK(near(d.d, i01 * w * d.v, 1e-12));
    }
    ChartPointS3 q{0.9, 1.1, 2.3};
    Dual1 inv = eval_poly_vertical(random_invariant(rng), q);
    CHECK(near(inv.d, 0.0, 1e-13));
    Dual1 c = eval_poly_vertical(Poly::gen_c(), q);
    CHECK(near(c.d, i01 * c.v, 1e-15));
}

TEST_CASE("total-space gradients agree with central differences") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ut(0.15, kPi / 2 - 0.15);
    std::uniform_real_distribution<double> up(0.0, 2 * kPi);
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
        Poly p = random_poly(rng, 4, 2);
        ChartPointS3 q{ut(rng), up(rng), up(rng)};
        PolyGradient g = eval_poly_gradient(p, generator_frame(q));
        CHECK(near(g.value, eval_poly(p, q), 1e-13));
        ChartPointS3 shifted[6] = {
            {q.theta + h, q.phi, q.psi}, {q.theta - h, q.phi, q.psi},
            {q.theta, q.phi + h, q.psi}, {q.theta, q.phi - h, q.psi},
            {q.theta, q.phi, q.psi + h}, {q.theta, q.phi, q.psi - h}};
        for (int k = 0; k < 3; ++k) {
            Complex fd =
                (eval_poly(p, shifted[2 * k]) - eval_poly(p, shifted[2 * k + 1])) / (2 * h);
            CHECK(near(g.d[k], fd, 2e-6));
        }
    }
}

TEST_CASE("coordinate wedges assemble the area form") {
    for (const ChartPointS2& x : s2_grid(12)) {
        Dual2 x1 = dual_x1(x), x2 = dual_x2(x), x3 = dual_x3(x);
        Complex area = x1.v * wedge(x2, x3) + x2.v * wedge(x3, x1) + x3.v * wedge(x1, x2);
        CHECK(near(area, std::sin(x.theta), 1e-13));
    }
}

TEST_CASE("quadrature") {
    SECTION("Gauss-Legendre is exact through degree 2n-1") {
        QuadratureRule rule = gauss_legendre(8);
        for (int k = 0; k < 16; ++k) {
            double sum = 0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
            INFO("degree " << k);
            CHECK(std::abs(sum - exact) < 1e-14);
        }
    }
    SECTION("node sanity at n = 64") {
        QuadratureRule rule = gauss_legendre(64);
        double total = 0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            CHECK(std::abs(rule.nodes[i]) < 1.0);
            CHECK(rule.weights[i] > 0.0);
            total += rule.weights[i];
        }
        CHECK(std::abs(total - 2.0) < 1e-13);
    }
    SECTION("the round sphere has area 4 pi") {
        Complex area = integrate_s2(
            [](const ChartPointS2& x) { return Complex(std::sin(x.theta), 0.0); }, 64, 128);
        CHECK(near(area, 4 * kPi, 1e-12));
    }
    SECTION("pure phi harmonics integrate to zero") {
        Complex val = integrate_s2(
            [](const ChartPointS2& x) {
                return Complex(std::sin(x.theta) * std::cos(3 * x.phi), 0.0);
            },
            16, 16);
        CHECK(near(val, 0.0, 1e-13));
    }
    SECTION("the assembled area form also integrates to 4 pi") {
        Complex area = integrate_s2(
            [](const ChartPointS2& x) {
                Dual2 x1 = dual_x1(x), x2 = dual_x2(x), x3 = dual_x3(x);
                return x1.v * wedge(x2, x3) + x2.v * wedge(x3, x1) + x3.v * wedge(x1, x2);
            },
            32, 64);
        CHECK(near(area, 4 * kPi, 1e-11));
    }
}

TEST_CASE("evaluation grids") {
    auto g3 = s3_grid(12);
    REQUIRE(g3.size() == 1728);
    for (const ChartPointS3& q : g3) {
        CHECK((q.theta > 0 && q.theta < kPi / 2));
        CHECK((q.phi > 0 && q.phi < 2 * kPi));
        CHECK((q.psi > 0 && q.psi < 2 * kPi));
    }
    CHECK(s2_grid(16).size() == 256);
}

TEST_CASE("numeric hermitian idempotents") {
    SECTION("mu = +-1 coincide with the polynomial idempotents") {
        std::mt19937_64 rng(18);
        for (std::int64_t mu : {-1, 1}) {
            HermitianIdempotent e(mu);
            PolyMatrix et = build_E_tilde(mu);
            for (int i = 0; i < 10; ++i) {
                ChartPointS3 q = random_point(rng);
                CHECK((e.eval(q) - eval_matrix(et, q)).max_abs() < 1e-15);
            }
        }
    }
    SECTION("idempotent, hermitian, trace one") {
        for (std::int64_t mu : {-3, -2, -1, 1, 2, 3}) {
            HermitianIdempotent e(mu);
            REQUIRE(e.size() == std::size_t(1 + (mu < 0 ? -mu : mu)));
            for (const ChartPointS3& q : s3_grid(3)) {
                ComplexMatrix m = e.eval(q);
                CHECK((m * m - m).max_abs() < 1e-12);
                CHECK((m - m.adjoint()).max_abs() < 1e-12);
                Complex tr{};
                for (std::size_t k = 0; k < m.rows; ++k) tr += m.at(k, k);
                CHECK(near(tr, 1.0, 1e-12));
            }
        }
    }
    SECTION("dual evaluation matches the section values") {
        HermitianIdempotent e(2);
        for (const ChartPointS2& x : s2_grid(4)) {
            DualMatrix d = e.eval_dual(x);
            ComplexMatrix m = e.eval(section_chart(x));
            for (std::size_t i = 0; i < m.data.size(); ++i)
                CHECK(near(d.data[i].v, m.data[i], 1e-14));
        }
    }
}

TEST_CASE("rational projector evaluation") {
    for (std::int64_t mu : {-5, -3, -2, -1, 1, 2, 4, 5}) {
        RatFnProjector p = build_p(mu);
        INFO("mu = " << mu);
        for (const ChartPointS3& q : s3_grid(3)) {
            CHECK(eval_poly(p.den, q).real() > 0.0);
            ComplexMatrix m = eval_projector(p, q);
            CHECK((m * m - m).max_abs() < 1e-12);
            CHECK((m - m.adjoint()).max_abs() < 1e-13);
            Complex tr = m.at(0, 0) + m.at(1, 1);
            CHECK(near(tr, 1.0, 1e-13));
        }
        for (const ChartPointS2& x : s2_grid(4)) {
            DualMatrix d = eval_projector_dual(p, x);
            ComplexMatrix m = eval_projector(p, section_chart(x));
            for (std::size_t i = 0; i < m.data.size(); ++i)
                CHECK(near(d.data[i].v, m.data[i], 1e-13));
        }
    }
}

TEST_CASE("partial isometries tie the two projector pictures together") {
    CHECK_THROWS_AS(PartialIsometry(0), std::invalid_argument);
    for (std::int64_t mu : {-4, -3, -2, -1, 1, 2, 3, 4}) {
        PartialIsometry f(mu);
        HermitianIdempotent e(mu);
        RatFnProjector p = build_p(mu);
        INFO("mu = " << mu);
        for (const ChartPointS3& q : s3_grid(3)) {
            ComplexMatrix F = f.eval(q);
            REQUIRE(F.rows == 2);
            REQUIRE(F.cols == std::size_t(1 + (mu < 0 ? -mu : mu)));
            ComplexMatrix FFs = F * F.adjoint();
            ComplexMatrix FsF = F.adjoint() * F;
            CHECK((FFs - eval_projector(p, q)).max_abs() < 1e-12);
            CHECK((FsF - e.eval(q)).max_abs() < 1e-12);
            CHECK((F * FsF - F).max_abs() < 1e-12);
        }
    }
}

TEST_CASE("spin coefficients of the rank-one idempotents") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ut(0.1, kPi - 0.1);
    std::uniform_real_distribution<double> up(0.0, 2 * kPi);
    HermitianIdempotent plus(1), minus(-1);
    for (int i = 0; i < 30; ++i) {
        ChartPointS2 x{ut(rng), up(rng)};
        PauliCoefficients sp = pauli_decompose(plus.eval_dual(x));
        CHECK(near(sp.s0.v, 0.5, 1e-13));
        CHECK(near(sp.s1.v, x.x3() / 2, 1e-13));
        CHECK(near(sp.s2.v, x.x1() / 2, 1e-13));
        CHECK(near(sp.s3.v, -x.x2() / 2, 1e-13));
        Complex radius = sp.s1.v * sp.s1.v + sp.s2.v * sp.s2.v + sp.s3.v * sp.s3.v;
        CHECK(near(radius, 0.25, 1e-13));

        PauliCoefficients sm = pauli_decompose(minus.eval_dual(x));
        CHECK(near(sm.s1.v, x.x3() / 2, 1e-13));
        CHECK(near(sm.s2.v, x.x1() / 2, 1e-13));
        CHECK(near(sm.s3.v, x.x2() / 2, 1e-13));
    }
}

TEST_CASE("curvature trace identity for 2x2 idempotents") {
    HermitianIdempotent plus(1), minus(-1);
    RatFnProjector p2 = build_p(2), pm2 = build_p(-2);
    for (const ChartPointS2& x : s2_grid(8)) {
        auto check = [&](const DualMatrix& e) {
            Complex lhs = trace_e_de_de(e);
            Complex rhs = pauli_trace_identity_rhs(pauli_decompose(e));
            CHECK(near(lhs, rhs, 1e-10));
        };
        check(plus.eval_dual(x));
        check(minus.eval_dual(x));
        check(eval_projector_dual(p2, x));
        check(eval_projector_dual(pm2, x));
    }
}
