#include "hopfcalc/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hopfcalc/chern.hpp"
#include "hopfcalc/connections.hpp"
#include "hopfcalc/forms.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/matrices.hpp"
#include "hopfcalc/projector_eval.hpp"
#include "hopfcalc/topology.hpp"

namespace hopfcalc {

namespace {

std::string seed_note(std::uint64_t seed) {
    std::ostringstream os;
    os << " (seed 0x" << std::hex << seed << ")";
    return os.str();
}

void run_check(std::vector<CheckResult>& out, const std::string& name,
               const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.ok = r.detail.empty();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exponent(0, 2), numer(-3, 3);
    std::vector<RawTerm> raw;
    std::size_t n_terms = 1 + rng() % 4;
    for (std::size_t i = 0; i < n_terms; ++i) {
        RawTerm t;
        t.a = std::uint32_t(exponent(rng));
        t.as = std::uint32_t(exponent(rng));
        t.cs = std::uint32_t(exponent(rng));
        t.c = std::uint32_t(exponent(rng));
        t.coeff = Scalar(Rational(numer(rng)), Rational(numer(rng)));
        raw.push_back(std::move(t));
    }
    return Poly::normal_form(std::move(raw));
}

Poly random_section(std::mt19937_64& rng, std::int64_t mu) {
    for (;;) {
        Poly inv = isotypic_project(random_poly(rng), 0);
        if (inv.is_zero()) continue;
        return inv * alpha_power(-mu);
    }
}

std::vector<CheckResult> suite_hopf(std::uint64_t seed) {
    std::vector<CheckResult> out;

    run_check(out, "comultiplication axioms exact through degree 4", [] {
        HopfAxiomReport r = verify_hopf_axioms(4);
        if (r.all_passed()) return std::string();
        for (const AxiomCheck* c :
             {&r.coassociativity, &r.counit_left_law, &r.counit_right_law,
              &r.antipode_left_law, &r.antipode_right_law,
              &r.coaction_coassociativity, &r.coaction_counit_law})
            if (!c->passed) return "first failing monomial: " + c->first_failure;
        return std::string("failed");
    });

    run_check(out, "antipode convolution collapses alpha powers", [] {
        for (unsigned n = 1; n <= 8; ++n)
            if (mul_antipode_left(coproduct(alpha_power(n))) != Poly::one())
                return "power " + std::to_string(n);
        return std::string();
    });

    run_check(out, "circle surjection splits", [] {
        for (std::int64_t n = -6; n <= 6; ++n)
            if (surjection_p(splitting_i(LaurentPoly::u_power(n))) !=
                LaurentPoly::u_power(n))
                return "power " + std::to_string(n);
        return std::string();
    });

    run_check(out, "isotypic components resum", [seed] {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 50; ++i) {
            Poly p = random_poly(rng);
            Poly sum;
            for (const auto& [mu, part] : isotypic_components(p)) {
                if (part != isotypic_project(p, mu))
                    return "component mismatch" + seed_note(seed);
                sum += part;
            }
            if (sum != p) return "components do not resum" + seed_note(seed);
        }
        return std::string();
    });

    return out;
}

std::vector<CheckResult> suite_projectors(std::uint64_t seed) {
    std::vector<CheckResult> out;

    run_check(out, "generator columns pair to one", [] {
        for (std::int64_t mu = -6; mu <= 6; ++mu) {
            IdempotentVectors vw = build_vw(mu);
            Poly pairing;
            for (std::size_t k = 0; k < vw.size(); ++k)
                pairing += vw.v_tilde[k] * vw.w_tilde[k];
            if (pairing != Poly::one()) return "mu " + std::to_string(mu);
        }
        return std::string();
    });

    run_check(out, "polynomial idempotents exact", [] {
        for (std::int64_t mu = -6; mu <= 6; ++mu) {
            PolyMatrix e = build_E_tilde(mu);
            if (!e.is_idempotent() || !(e.trace() == Poly::one()))
                return "mu " + std::to_string(mu);
        }
        return std::string();
    });

    run_check(out, "rational idempotents cross-multiply", [] {
        for (std::int64_t mu : {-4, -3, -2, -1, 1, 2, 3, 4}) {
            RatFnProjector p = build_p(mu);
            if (!p.is_idempotent_cross() || !p.num.is_hermitian() ||
                !(p.num.trace() == p.den))
                return "mu " + std::to_string(mu);
        }
        return std::string();
    });

    run_check(out, "sections decompose and rebuild", [seed] {
        std::mt19937_64 rng(seed ^ 0x70726F6A);
        for (int i = 0; i < 20; ++i) {
            std::int64_t mu = std::int64_t(rng() % 7) - 3;
            Poly f = random_section(rng, mu);
            SectionDecomposition d = decompose_section(f, mu);
            if (d.reconstruct() != f)
                return "mu " + std::to_string(mu) + seed_note(seed);
            for (const Poly& coeff : d.coefficients)
                if (!coeff.is_invariant())
                    return "non-invariant coefficient" + seed_note(seed);
        }
        return std::string();
    });

    run_check(out, "numeric realizations agree on charts", [] {
        for (std::int64_t mu : {-2, 1, 3}) {
            HermitianIdempotent e(mu);
            PartialIsometry f(mu);
            RatFnProjector p = build_p(mu);
            for (const ChartPointS3& q : s3_grid(3)) {
                ComplexMatrix ev = e.eval(q);
                ComplexMatrix sq = ev * ev;
                for (std::size_t i = 0; i < ev.rows; ++i)
                    for (std::size_t j = 0; j < ev.cols; ++j)
                        if (std::abs(sq.at(i, j) - ev.at(i, j)) > 1e-10)
                            return "idempotency drift at mu " + std::to_string(mu);
                ComplexMatrix fv = f.eval(q);
                ComplexMatrix ffs = fv * fv.adjoint();
                ComplexMatrix pv = eval_projector(p, q);
                if ((ffs - pv).max_abs() > 1e-10)
                    return "partial isometry drift at mu " + std::to_string(mu);
            }
        }
        return std::string();
    });

    return out;
}

std::vector<CheckResult> suite_connection(std::uint64_t seed) {
    std::vector<CheckResult> out;

    run_check(out, "monopole form on the circle generator", [] {
        SymbolicOneForm expected;
        expected.c[0] = Poly::gen_as();
        expected.c[2] = Poly::gen_cs();
        if (!(connection_form_value(1) == expected)) return std::string("mismatch");
        return std::string();
    });

    run_check(out, "integer powers scale the form", [] {
        ConnectionForm omega;
        for (std::int64_t n = -6; n <= 6; ++n) {
            const SymbolicOneForm& base = omega(n >= 0 ? 1 : -1);
            std::int64_t k = n >= 0 ? n : -n;
            if (!(omega(n) == base.scaled(Scalar(long(k)))))
                return "power " + std::to_string(n);
        }
        if (!form_equal(omega(-1), omega(1).scaled(Scalar(-1L)), CompareMode::chart))
            return std::string("opposite powers disagree on the sphere");
        return std::string();
    });

    run_check(out, "covariant generators factor horizontally", [] {
        if (!horizontal_factor_check(Poly::gen_a())) return std::string("alpha");
        if (!horizontal_factor_check(Poly::gen_c())) return std::string("gamma");
        if (!horizontal_factor_check(Poly::one())) return std::string("unit");
        return std::string();
    });

    run_check(out, "module connection equals the Grassmann one", [] {
        ModuleConnection nabla = covariant_derivative(-1);
        ModuleConnection grass = grassmann_connection(build_p(-1).num);
        for (std::size_t i = 0; i < nabla.size(); ++i)
            for (std::size_t j = 0; j < nabla.size(); ++j)
                if (!form_equal(nabla.rows[i][j], grass.rows[i][j], CompareMode::exact))
                    return std::string("row mismatch");
        return std::string();
    });

    run_check(out, "curvature trace matches the density trace", [] {
        for (std::int64_t mu : {-1, 1}) {
            PolyMatrix e = build_E_tilde(mu);
            ModuleConnection nabla = grassmann_connection(e);
            SymbolicTwoForm lhs = module_trace(curvature(nabla, e), e);
            if (!(lhs == -trace_form_e_de_de(e))) return "mu " + std::to_string(mu);
        }
        return std::string();
    });

    run_check(out, "vertical vectors are annihilated", [seed] {
        std::mt19937_64 rng(seed ^ 0x636F6E6E);
        std::vector<Poly> samples = {Poly::gen_a(), Poly::gen_c()};
        samples.push_back(random_section(rng, 2));
        samples.push_back(random_section(rng, -1));
        for (const Poly& f : samples) {
            SymbolicOneForm df = covariant_diff(f);
            for (const ChartPointS3& q : s3_grid(4))
                if (std::abs(eval_form_vertical(df, q)) > 1e-10)
                    return "vertical leak" + seed_note(seed);
        }
        return std::string();
    });

    return out;
}

std::vector<CheckResult> suite_topology(std::uint64_t seed) {
    std::vector<CheckResult> out;

    run_check(out, "plane flow satisfies the group law", [seed] {
        std::mt19937_64 rng(seed ^ 0x746F706F);
        std::uniform_real_distribution<double> ux(-7.0, 7.0), ut(-5.0, 5.0);
        for (int i = 0; i < 300; ++i) {
            double x = ux(rng);
            if (on_special_orbit(x, 1e-6)) continue;
            GroupLawReport r = group_law_check({x, ux(rng)}, ut(rng), ut(rng));
            if (!r.ok) return "deviation " + std::to_string(r.max_deviation) + seed_note(seed);
        }
        return std::string();
    });

    run_check(out, "translation times invert the flow", [seed] {
        std::mt19937_64 rng(seed ^ 0x74726E73);
        std::uniform_real_distribution<double> ux(-1.5, 1.5), ut(-4.0, 4.0);
        for (int i = 0; i < 200; ++i) {
            PlanePoint p{ux(rng), ux(rng)};
            double t = ut(rng);
            double back = translation_time(p, flow(p, t));
            if (std::abs(back - t) > 1e-8) return "round trip" + seed_note(seed);
            PlanePoint q = flow(p, t);
            if (std::abs(translation_time(q, p) + back) > 1e-8)
                return "antisymmetry" + seed_note(seed);
        }
        return std::string();
    });

    run_check(out, "non-properness witness flags", [] {
        WitnessReport r = nonproperness_witness(10);
        if (!r.pairs_same_orbit) return std::string("finite pairs not on one orbit");
        if (!r.limit_distinct_special) return std::string("limit pair misclassified");
        if (!r.times_monotone) return std::string("times fail to grow");
        return std::string();
    });

    run_check(out, "Cantor encoding bijective on words", [] {
        if (cantor_encode({0, 2, 0}) != SignSeq{1, -1, 1})
            return std::string("replacement rule");
        for (unsigned mask = 0; mask < 64; ++mask) {
            TernaryDigits d;
            for (unsigned j = 0; j < 6; ++j) d.push_back((mask >> j) & 1 ? 2 : 0);
            if (cantor_decode(cantor_encode(d)) != d) return std::string("round trip");
        }
        return std::string();
    });

    run_check(out, "suspension model round trips", [seed] {
        std::mt19937_64 rng(seed ^ 0x73757370);
        std::uniform_real_distribution<double> u(0.0, 1.0), ph(0.0, 6.28);
        for (int i = 0; i < 100; ++i) {
            double t = u(rng);
            S3Point q(std::sqrt(t) * std::polar(1.0, ph(rng)),
                      std::sqrt(1.0 - t) * std::polar(1.0, ph(rng)));
            S3Point back = suspension_to_s3(s3_to_suspension(q));
            if (std::abs(back.a - q.a) > 1e-12 || std::abs(back.c - q.c) > 1e-12)
                return "sphere round trip" + seed_note(seed);
            auto [z1, z2] = heegaard_maps(q);
            S3Point h = heegaard_inverse(z1, z2);
            if (std::abs(h.a - q.a) > 1e-12 || std::abs(h.c - q.c) > 1e-12)
                return "Heegaard round trip" + seed_note(seed);
        }
        return std::string();
    });

    run_check(out, "transition functions coincide across models", [seed] {
        std::mt19937_64 rng(seed ^ 0x7472616E);
        std::uniform_real_distribution<double> u(0.05, 0.95), ph(0.0, 6.28);
        for (int i = 0; i < 100; ++i) {
            double t = u(rng);
            S3Point q(std::sqrt(t) * std::polar(1.0, ph(rng)),
                      std::sqrt(1.0 - t) * std::polar(1.0, ph(rng)));
            if (std::abs(transition_function(q) - transition_via_suspension(q)) > 1e-12)
                return "mismatch" + seed_note(seed);
        }
        return std::string();
    });

    return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"hopf", "projectors", "connection", "topology"};
}

std::vector<CheckResult> verify_suite(const std::string& suite, std::uint64_t seed) {
    if (suite == "hopf") return suite_hopf(seed);
    if (suite == "projectors") return suite_projectors(seed);
    if (suite == "connection") return suite_connection(seed);
    if (suite == "topology") return suite_topology(seed);
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const std::string& name : verify_suite_names())
            for (CheckResult& r : verify_suite(name, seed)) out.push_back(std::move(r));
        return out;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace hopfcalc
