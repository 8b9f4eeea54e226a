#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/chern.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/matrices.hpp"
#include "hopfcalc/topology.hpp"
#include "hopfcalc/verify.hpp"

using json = nlohmann::ordered_json;
using namespace hopfcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::string format;  // empty = per-command default
    std::string out_path;
    std::string nodes = "64x128";
    std::uint64_t seed = kDefaultSeed;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::pair<unsigned, unsigned> parse_nodes(const std::string& text) {
    std::size_t x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 == text.size())
        throw CLI::ValidationError("--nodes", "expected NthetaxNphi, e.g. 64x128");
    try {
        unsigned nt = unsigned(std::stoul(text.substr(0, x)));
        unsigned np = unsigned(std::stoul(text.substr(x + 1)));
        if (nt == 0 || np == 0) throw std::invalid_argument("zero");
        return {nt, np};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--nodes", "expected NthetaxNphi, e.g. 64x128");
    }
}

template <typename T>
std::pair<T, T> parse_range(const std::string& text, const char* flag) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError(flag, "expected a..b");
    try {
        double lo = std::stod(text.substr(0, dots));
        double hi = std::stod(text.substr(dots + 2));
        if (lo > hi) std::swap(lo, hi);
        return {T(lo), T(hi)};
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected a..b");
    }
}

void emit(const GlobalOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path " + opts.out_path);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
}

std::string resolve_format(const GlobalOptions& opts, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
    std::string format = opts.format.empty() ? fallback : opts.format;
    for (const char* a : allowed)
        if (format == a) return format;
    throw CLI::ValidationError("--format", "format '" + format +
                                               "' is not supported by this subcommand");
}

std::string matrix_text(const PolyMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << render(m.at(i, j));
        }
        os << "]";
        if (i + 1 < m.rows()) os << '\n';
    }
    return os.str();
}

json matrix_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json ratfn_json(const RatFnProjector& p) {
    std::string den = render(p.den);
    json entries = json::array();
    for (std::size_t i = 0; i < p.num.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.num.cols(); ++j)
            row.push_back(json{{"num", render(p.num.at(i, j))}, {"den", den}});
        entries.push_back(std::move(row));
    }
    return {{"rows", p.num.rows()}, {"cols", p.num.cols()}, {"entries", std::move(entries)}};
}

// ------------------------------------------------------------ subcommands

int run_idempotent(const GlobalOptions& opts, std::int64_t mu, const std::string& kind) {
    std::string format = resolve_format(opts, "text", {"text", "json"});
    if (kind == "etilde") {
        PolyMatrix e = build_E_tilde(mu);
        emit(opts, format == "json" ? matrix_json(e).dump(2) : matrix_text(e));
    } else {
        RatFnProjector p = build_p(mu);
        if (format == "json") {
            emit(opts, ratfn_json(p).dump(2));
        } else {
            std::ostringstream os;
            os << "denominator: " << render(p.den) << '\n' << matrix_text(p.num);
            emit(opts, os.str());
        }
    }
    return kExitOk;
}

ProjectorSource parse_source(const std::string& source) {
    return source == "p" ? ProjectorSource::p : ProjectorSource::e_tilde;
}

int run_pairing(const GlobalOptions& opts, const std::string& mu_range,
                const std::string& source) {
    std::string format = resolve_format(opts, "csv", {"csv", "json", "text"});
    auto [lo, hi] = parse_range<std::int64_t>(mu_range, "--mu-range");
    auto [nt, np] = parse_nodes(opts.nodes);
    struct Row {
        std::int64_t mu;
        double integral, residual;
    };
    std::vector<Row> rows;
    bool all_on_integer = true;
    std::int64_t first_bad = 0;
    for (std::int64_t mu = lo; mu <= hi; ++mu) {
        double integral = chern_number(mu, nt, np, parse_source(source));
        double residual = std::abs(integral - std::round(integral));
        if (residual >= 1e-6 && all_on_integer) {
            all_on_integer = false;
            first_bad = mu;
        }
        rows.push_back({mu, integral, residual});
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "mu,integral,residual_to_integer\n";
        for (const Row& r : rows)
            os << r.mu << ',' << fmt_double(r.integral) << ',' << fmt_double(r.residual)
               << '\n';
        emit(opts, os.str());
    } else if (format == "json") {
        json results = json::array();
        for (const Row& r : rows)
            results.push_back({{"mu", r.mu},
                               {"integral", r.integral},
                               {"residual_to_integer", r.residual}});
        emit(opts, json{{"nodes", {nt, np}},
                        {"source", source},
                        {"results", std::move(results)}}
                       .dump(2));
    } else {
        std::ostringstream os;
        for (const Row& r : rows)
            os << "mu=" << r.mu << " integral=" << fmt_double(r.integral)
               << " residual=" << fmt_double(r.residual) << '\n';
        emit(opts, os.str());
    }
    if (!all_on_integer) {
        std::cerr << "pairing failed to reach an integer first at mu=" << first_bad
                  << '\n';
        return kExitVerification;
    }
    return kExitOk;
}

int run_chern(const GlobalOptions& opts, std::int64_t mu, const std::string& source,
              bool density) {
    std::string format = resolve_format(opts, density ? "csv" : "text",
                                        {"text", "json", "csv"});
    auto [nt, np] = parse_nodes(opts.nodes);
    if (density || format == "csv") {
        ChernDensity d = chern_density(mu, parse_source(source));
        QuadratureRule rule = gauss_legendre(nt);
        std::ostringstream os;
        os << "theta,phi,re,im\n";
        constexpr double pi = std::numbers::pi;
        for (unsigned i = 0; i < nt; ++i) {
            double theta = pi * (rule.nodes[i] + 1.0) / 2.0;
            for (unsigned j = 0; j < np; ++j) {
                double phi = 2.0 * pi * double(j) / double(np);
                Complex v = d.evaluator({theta, phi});
                os << fmt_double(theta) << ',' << fmt_double(phi) << ','
                   << fmt_double(v.real()) << ',' << fmt_double(v.imag()) << '\n';
            }
        }
        emit(opts, os.str());
        return kExitOk;
    }
    double integral = chern_number(mu, nt, np, parse_source(source));
    double nearest = std::round(integral);
    double residual = std::abs(integral - nearest);
    if (format == "json") {
        emit(opts, json{{"mu", mu},
                        {"nodes", {nt, np}},
                        {"source", source},
                        {"integral", integral},
                        {"nearest", std::int64_t(nearest)},
                        {"residual", residual}}
                       .dump(2));
    } else {
        std::ostringstream os;
        os << "chern(mu=" << mu << ") = " << fmt_double(integral) << " (nearest "
           << std::int64_t(nearest) << ", residual " << fmt_double(residual) << ")";
        emit(opts, os.str());
    }
    return kExitOk;
}

int run_verify(const GlobalOptions& opts, const std::string& suite) {
    std::string format = resolve_format(opts, "text", {"text", "json"});
    std::vector<CheckResult> results = verify_suite(suite, opts.seed);
    std::size_t failures = 0;
    for (const CheckResult& r : results)
        if (!r.ok) ++failures;
    if (format == "json") {
        json checks = json::array();
        for (const CheckResult& r : results)
            checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        emit(opts, json{{"suite", suite},
                        {"seed", opts.seed},
                        {"failures", failures},
                        {"checks", std::move(checks)}}
                       .dump(2));
    } else {
        std::ostringstream os;
        for (const CheckResult& r : results) {
            if (r.ok)
                os << "ok   " << r.name << '\n';
            else
                os << "FAIL " << r.name << ": " << r.detail << '\n';
        }
        os << "suite " << suite << ": " << results.size() << " checks, " << failures
           << " failures";
        emit(opts, os.str());
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

int run_action_demo(const GlobalOptions& opts, int orbits, const std::string& t_range,
                    int samples, const std::string& emit_kind) {
    resolve_format(opts, "csv", {"csv"});
    if (emit_kind != "csv")
        throw CLI::ValidationError("--emit", "only csv is supported");
    if (orbits < 1 || samples < 2)
        throw CLI::ValidationError("action-demo", "need --orbits >= 1 and --samples >= 2");
    auto [t_lo, t_hi] = parse_range<double>(t_range, "--t-range");
    if (std::abs(t_lo) > kMaxFlowTime || std::abs(t_hi) > kMaxFlowTime)
        throw CLI::ValidationError("--t-range", "|t| must stay within 50");
    constexpr double pi = std::numbers::pi;
    std::vector<PlanePoint> starts;
    for (int i = 0; i < orbits; ++i)
        starts.push_back({-pi / 2.0 + double(i + 1) * pi / double(orbits + 1), 0.0});
    starts.push_back({-pi / 2.0, 0.0});  // bounding special orbits of the strip
    starts.push_back({pi / 2.0, 0.0});
    std::ostringstream os;
    os << "orbit_id,x,y\n";
    for (std::size_t id = 0; id < starts.size(); ++id) {
        for (int k = 0; k < samples; ++k) {
            double t = t_lo + (t_hi - t_lo) * double(k) / double(samples - 1);
            PlanePoint q = flow(starts[id], t);
            os << id << ',' << fmt_double(q.x) << ',' << fmt_double(q.y) << '\n';
        }
    }
    emit(opts, os.str());
    return kExitOk;
}

json plane_point_json(const PlanePoint& p) { return json::array({p.x, p.y}); }

int run_witness(const GlobalOptions& opts, std::int64_t n_max) {
    std::string format = resolve_format(opts, "json", {"json", "text"});
    WitnessReport report = nonproperness_witness(n_max);
    if (format == "json") {
        json entries = json::array();
        for (const WitnessEntry& e : report.entries)
            entries.push_back({{"n", e.n},
                               {"first", plane_point_json(e.first)},
                               {"second", plane_point_json(e.second)},
                               {"time", e.time}});
        emit(opts, json{{"n_max", n_max},
                        {"entries", std::move(entries)},
                        {"limit_first", plane_point_json(report.limit_first)},
                        {"limit_second", plane_point_json(report.limit_second)},
                        {"pairs_same_orbit", report.pairs_same_orbit},
                        {"limit_distinct_special", report.limit_distinct_special},
                        {"times_monotone", report.times_monotone}}
                       .dump(2));
    } else {
        std::ostringstream os;
        for (const WitnessEntry& e : report.entries)
            os << "n=" << e.n << " time=" << fmt_double(e.time) << '\n';
        os << "pairs_same_orbit=" << (report.pairs_same_orbit ? "true" : "false")
           << " limit_distinct_special="
           << (report.limit_distinct_special ? "true" : "false")
           << " times_monotone=" << (report.times_monotone ? "true" : "false");
        emit(opts, os.str());
    }
    bool ok = report.pairs_same_orbit && report.limit_distinct_special &&
              report.times_monotone;
    return ok ? kExitOk : kExitVerification;
}

int run_hopf_check(const GlobalOptions& opts, unsigned max_degree) {
    std::string format = resolve_format(opts, "text", {"text", "json"});
    HopfAxiomReport report = verify_hopf_axioms(max_degree);
    struct Named {
        const char* name;
        const AxiomCheck* check;
    };
    std::vector<Named> axioms = {
        {"coassociativity", &report.coassociativity},
        {"counit_left", &report.counit_left_law},
        {"counit_right", &report.counit_right_law},
        {"antipode_left", &report.antipode_left_law},
        {"antipode_right", &report.antipode_right_law},
        {"coaction_coassociativity", &report.coaction_coassociativity},
        {"coaction_counit", &report.coaction_counit_law},
    };
    if (format == "json") {
        json checks = json::array();
        for (const Named& a : axioms)
            checks.push_back({{"name", a.name},
                              {"ok", a.check->passed},
                              {"first_failure", a.check->first_failure}});
        emit(opts, json{{"max_degree", report.max_degree},
                        {"monomials_checked", report.monomials_checked},
                        {"axioms", std::move(checks)}}
                       .dump(2));
    } else {
        std::ostringstream os;
        for (const Named& a : axioms) {
            if (a.check->passed)
                os << "ok   " << a.name << '\n';
            else
                os << "FAIL " << a.name << " at " << a.check->first_failure << '\n';
        }
        os << report.monomials_checked << " monomials through degree "
           << report.max_degree;
        emit(opts, os.str());
    }
    return report.all_passed() ? kExitOk : kExitVerification;
}

int run_decompose(const GlobalOptions& opts, const std::string& poly_text,
                  std::int64_t mu) {
    std::string format = resolve_format(opts, "text", {"text", "json"});
    Poly f;
    try {
        f = parse_poly(poly_text);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    if (isotypic_project(f, mu) != f) {
        std::cerr << "polynomial is not homogeneous of the requested winding\n";
        return kExitUsage;
    }
    SectionDecomposition d = decompose_section(f, mu);
    bool rebuilt = d.reconstruct() == f;
    if (format == "json") {
        json coeffs = json::array(), monos = json::array(), weights = json::array();
        for (const Poly& c : d.coefficients) coeffs.push_back(render(c));
        for (const Poly& m : d.monomials) monos.push_back(render(m));
        for (const BigInt& w : d.weights) weights.push_back(w.str());
        emit(opts, json{{"mu", mu},
                        {"coefficients", std::move(coeffs)},
                        {"monomials", std::move(monos)},
                        {"weights", std::move(weights)},
                        {"reconstructs", rebuilt}}
                       .dump(2));
    } else {
        std::ostringstream os;
        for (std::size_t k = 0; k < d.coefficients.size(); ++k)
            os << k << ": (" << render(d.coefficients[k]) << ") * ["
               << render(d.monomials[k]) << "]\n";
        os << "reconstructs: " << (rebuilt ? "true" : "false");
        emit(opts, os.str());
    }
    return rebuilt ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric calculator for the circle bundle over the 2-sphere"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format: text, json, or csv");
    app.add_option("--out", opts.out_path, "write output to this path instead of stdout");
    app.add_option("--nodes", opts.nodes, "quadrature sizes NthetaxNphi")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized verification suites")
        ->capture_default_str();

    std::int64_t mu = 0;
    std::string kind = "etilde";
    CLI::App* idem = app.add_subcommand("idempotent", "print a module idempotent");
    idem->add_option("--mu", mu, "winding index")->required();
    idem->add_option("--kind", kind, "etilde or p")
        ->check(CLI::IsMember({"etilde", "p"}));

    std::string mu_range = "-3..3";
    std::string source = "etilde";
    CLI::App* pairing_cmd =
        app.add_subcommand("pairing", "pair the winding modules with the area cocycle");
    pairing_cmd->add_option("--mu-range", mu_range, "inclusive range a..b")
        ->capture_default_str();
    pairing_cmd->add_option("--source", source, "etilde or p")
        ->check(CLI::IsMember({"etilde", "p"}));

    std::int64_t chern_mu = 1;
    std::string chern_source = "etilde";
    bool density = false;
    CLI::App* chern_cmd = app.add_subcommand("chern", "first Chern number of one module");
    chern_cmd->add_option("--mu", chern_mu, "winding index")->required();
    chern_cmd->add_option("--source", chern_source, "etilde or p")
        ->check(CLI::IsMember({"etilde", "p"}));
    chern_cmd->add_flag("--density", density, "emit the integrand field as CSV");

    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "hopf, projectors, connection, topology, all")
        ->check(CLI::IsMember({"hopf", "projectors", "connection", "topology", "all"}))
        ->required();

    int orbits = 7;
    std::string t_range = "-3..3";
    int samples = 200;
    std::string emit_kind = "csv";
    CLI::App* demo = app.add_subcommand("action-demo", "sample plane-flow orbits as CSV");
    demo->add_option("--orbits", orbits, "number of regular orbits")->capture_default_str();
    demo->add_option("--t-range", t_range, "flow-time range a..b")->capture_default_str();
    demo->add_option("--samples", samples, "points per orbit")->capture_default_str();
    demo->add_option("--emit", emit_kind, "emission kind (csv)")->capture_default_str();

    std::int64_t n_max = 12;
    CLI::App* witness_cmd =
        app.add_subcommand("witness", "non-properness witness sequence report");
    witness_cmd->add_option("--n-max", n_max, "largest index in the sequence")
        ->capture_default_str();

    unsigned max_degree = 4;
    CLI::App* hopf_cmd = app.add_subcommand("hopf-check", "verify the comultiplication axioms");
    hopf_cmd->add_option("--max-degree", max_degree, "largest monomial degree")
        ->capture_default_str();

    std::string poly_text;
    std::int64_t dec_mu = 0;
    CLI::App* dec = app.add_subcommand("decompose", "invariant coefficients of a section");
    dec->add_option("--poly", poly_text, "polynomial in a, as, c, cs")->required();
    dec->add_option("--mu", dec_mu, "winding index")->required();

    int rc = kExitOk;
    idem->callback([&] { rc = run_idempotent(opts, mu, kind); });
    pairing_cmd->callback([&] { rc = run_pairing(opts, mu_range, source); });
    chern_cmd->callback([&] { rc = run_chern(opts, chern_mu, chern_source, density); });
    verify_cmd->callback([&] { rc = run_verify(opts, suite); });
    demo->callback([&] { rc = run_action_demo(opts, orbits, t_range, samples, emit_kind); });
    witness_cmd->callback([&] { rc = run_witness(opts, n_max); });
    hopf_cmd->callback([&] { rc = run_hopf_check(opts, max_degree); });
    dec->callback([&] { rc = run_decompose(opts, poly_text, dec_mu); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return rc;
}
