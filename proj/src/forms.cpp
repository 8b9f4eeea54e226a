#include "hopfcalc/forms.hpp"

#include <cmath>

namespace hopfcalc {

namespace {

// form coefficient slot -> generator frame slot (frame order: a, as, cs, c)
constexpr int kFrameIndex[4] = {0, 1, 3, 2};

constexpr const char* kOneSymbols[4] = {"da", "das", "dc", "dcs"};
constexpr const char* kTwoSymbols[6] = {"da^das", "da^dc",   "da^dcs",
                                        "das^dc", "das^dcs", "dc^dcs"};

// slot of the ordered pair (i, j), i < j, over indices da=0, das=1, dc=2, dcs=3
constexpr int kPairSlot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};

template <typename Form>
std::string render_form(const Form& w, const char* const* symbols) {
    std::string out;
    for (std::size_t i = 0; i < w.c.size(); ++i) {
        if (w.c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + render(w.c[i]) + ")*" + symbols[i];
    }
    return out.empty() ? "0" : out;
}

const std::vector<ChartPointS3>& comparison_grid() {
    static const std::vector<ChartPointS3> grid = s3_grid(12);
    return grid;
}

Complex eval_on_frame(const Poly& p, const GeneratorFrame& frame) {
    Complex out{};
    for (const auto& [m, s] : p.terms())
        out += s.to_complex() * cpow(frame.value[0], m.a) * cpow(frame.value[1], m.as) *
               cpow(frame.value[2], m.cs) * cpow(frame.value[3], m.c);
    return out;
}

}  // namespace

bool SymbolicOneForm::is_zero() const {
    for (const Poly& p : c)
        if (!p.is_zero()) return false;
    return true;
}

SymbolicOneForm SymbolicOneForm::operator-() const {
    SymbolicOneForm out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = -c[i];
    return out;
}

SymbolicOneForm& SymbolicOneForm::operator+=(const SymbolicOneForm& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
}

SymbolicOneForm& SymbolicOneForm::operator-=(const SymbolicOneForm& o) {
    for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
}

SymbolicOneForm operator*(const Poly& b, const SymbolicOneForm& w) {
    SymbolicOneForm out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = b * w.c[i];
    return out;
}

SymbolicOneForm SymbolicOneForm::scaled(const Scalar& s) const {
    SymbolicOneForm out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = c[i].scaled(s);
    return out;
}

bool SymbolicTwoForm::is_zero() const {
    for (const Poly& p : c)
        if (!p.is_zero()) return false;
    return true;
}

SymbolicTwoForm SymbolicTwoForm::operator-() const {
    SymbolicTwoForm out;
    for (std::size_t i = 0; i < 6; ++i) out.c[i] = -c[i];
    return out;
}

SymbolicTwoForm& SymbolicTwoForm::operator+=(const SymbolicTwoForm& o) {
    for (std::size_t i = 0; i < 6; ++i) c[i] += o.c[i];
    return *this;
}

SymbolicTwoForm& SymbolicTwoForm::operator-=(const SymbolicTwoForm& o) {
    for (std::size_t i = 0; i < 6; ++i) c[i] -= o.c[i];
    return *this;
}

SymbolicTwoForm operator*(const Poly& b, const SymbolicTwoForm& w) {
    SymbolicTwoForm out;
    for (std::size_t i = 0; i < 6; ++i) out.c[i] = b * w.c[i];
    return out;
}

SymbolicTwoForm SymbolicTwoForm::scaled(const Scalar& s) const {
    SymbolicTwoForm out;
    for (std::size_t i = 0; i < 6; ++i) out.c[i] = c[i].scaled(s);
    return out;
}

SymbolicOneForm differential(const Poly& p) {
    SymbolicOneForm out;
    Poly::TermMap parts[4];
    for (const auto& [m, s] : p.terms()) {
        // decrementing an exponent keeps the monomial PBW
        if (m.a > 0) {
            Monomial n = m;
            --n.a;
            parts[0][n] += s * Scalar(long(m.a));
        }
        if (m.as > 0) {
            Monomial n = m;
            --n.as;
            parts[1][n] += s * Scalar(long(m.as));
        }
        if (m.c > 0) {
            Monomial n = m;
            --n.c;
            parts[2][n] += s * Scalar(long(m.c));
        }
        if (m.cs > 0) {
            Monomial n = m;
            --n.cs;
            parts[3][n] += s * Scalar(long(m.cs));
        }
    }
    for (int i = 0; i < 4; ++i) {
        std::erase_if(parts[i], [](const auto& kv) { return kv.second.is_zero(); });
        out.c[i] = poly_from_terms(std::move(parts[i]));
    }
    return out;
}

SymbolicTwoForm wedge_product(const SymbolicOneForm& x, const SymbolicOneForm& y) {
    SymbolicTwoForm out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            out.c[kPairSlot[i][j]] += x.c[i] * y.c[j] - x.c[j] * y.c[i];
    return out;
}

std::string render(const SymbolicOneForm& w) { return render_form(w, kOneSymbols); }
std::string render(const SymbolicTwoForm& w) { return render_form(w, kTwoSymbols); }

std::array<Complex, 3> eval_form(const SymbolicOneForm& w, const GeneratorFrame& frame) {
    std::array<Complex, 3> out{};
    for (int i = 0; i < 4; ++i) {
        if (w.c[i].is_zero()) continue;
        Complex cv = eval_on_frame(w.c[i], frame);
        for (int k = 0; k < 3; ++k) out[k] += cv * frame.partial[kFrameIndex[i]][k];
    }
    return out;
}

std::array<Complex, 3> eval_form(const SymbolicTwoForm& w, const GeneratorFrame& frame) {
    // tangent pairs (theta,phi), (theta,psi), (phi,psi)
    constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::array<Complex, 3> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Poly& coeff = w.c[kPairSlot[i][j]];
            if (coeff.is_zero()) continue;
            Complex cv = eval_on_frame(coeff, frame);
            const auto& di = frame.partial[kFrameIndex[i]];
            const auto& dj = frame.partial[kFrameIndex[j]];
            for (int t = 0; t < 3; ++t) {
                int u = kPairs[t][0], v = kPairs[t][1];
                out[t] += cv * (di[u] * dj[v] - di[v] * dj[u]);
            }
        }
    return out;
}

Complex eval_form_vertical(const SymbolicOneForm& w, const ChartPointS3& q) {
    Complex i01{0.0, 1.0};
    Complex a = q.alpha(), c = q.gamma();
    // da, das, dc, dcs applied to the orbit direction
    Complex dv[4] = {i01 * a, -i01 * std::conj(a), i01 * c, -i01 * std::conj(c)};
    Complex out{};
    for (int k = 0; k < 4; ++k)
        if (!w.c[k].is_zero()) out += eval_poly(w.c[k], q) * dv[k];
    return out;
}

bool form_equal(const SymbolicOneForm& x, const SymbolicOneForm& y, CompareMode mode,
                double tol) {
    if (mode == CompareMode::exact) return x == y;
    SymbolicOneForm diff = x - y;
    if (diff.is_zero()) return true;
    for (const ChartPointS3& q : comparison_grid()) {
        auto comps = eval_form(diff, generator_frame(q));
        for (Complex z : comps)
            if (std::abs(z) > tol) return false;
    }
    return true;
}

bool form_equal(const SymbolicTwoForm& x, const SymbolicTwoForm& y, CompareMode mode,
                double tol) {
    if (mode == CompareMode::exact) return x == y;
    SymbolicTwoForm diff = x - y;
    if (diff.is_zero()) return true;
    for (const ChartPointS3& q : comparison_grid()) {
        auto comps = eval_form(diff, generator_frame(q));
        for (Complex z : comps)
            if (std::abs(z) > tol) return false;
    }
    return true;
}

}  // namespace hopfcalc
