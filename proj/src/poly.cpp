#include "hopfcalc/poly.hpp"

#include <cctype>

namespace hopfcalc {

Poly Poly::monomial(Monomial m, Scalar coeff) {
    if (!m.in_pbw()) {
        return normal_form({RawTerm{m.a, m.as, m.cs, m.c, std::move(coeff)}});
    }
    Poly p;
    if (!coeff.is_zero()) p.terms_[m] = std::move(coeff);
    return p;
}

void Poly::insert(const Monomial& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, s);
    if (!fresh) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly poly_from_terms(Poly::TermMap terms) {
    Poly p;
    p.terms_ = std::move(terms);
    return p;
}

Poly Poly::normal_form(std::vector<RawTerm> raw, std::mt19937_64* rng) {
    Poly out;
    while (!raw.empty()) {
        std::size_t i = raw.size() - 1;
        if (rng) i = (*rng)() % raw.size();
        RawTerm t = std::move(raw[i]);
        raw[i] = std::move(raw.back());
        raw.pop_back();
        if (t.coeff.is_zero()) continue;
        if (t.a > 0 && t.as > 0) {
            // a^m (as)^m = (1 - cs*c)^m on the overlapping powers
            std::uint32_t m = std::min(t.a, t.as);
            for (std::uint32_t j = 0; j <= m; ++j) {
                Scalar coeff = t.coeff * Scalar(Rational(binomial(m, j)));
                if (j % 2) coeff = -coeff;
                raw.push_back(RawTerm{t.a - m, t.as - m, t.cs + j, t.c + j, std::move(coeff)});
            }
        } else {
            out.insert(Monomial{t.a, t.as, t.cs, t.c}, t.coeff);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly p;
    for (const auto& [m, s] : terms_) p.terms_[m] = -s;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, s] : o.terms_) insert(m, s);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, s] : o.terms_) insert(m, -s);
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    std::vector<RawTerm> raw;
    raw.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& [mx, sx] : x.terms_)
        for (const auto& [my, sy] : y.terms_)
            raw.push_back(RawTerm{mx.a + my.a, mx.as + my.as, mx.cs + my.cs,
                                  mx.c + my.c, sx * sy});
    return Poly::normal_form(std::move(raw));
}

Poly Poly::scaled(const Scalar& s) const {
    Poly p;
    if (s.is_zero()) return p;
    for (const auto& [m, c] : terms_) p.terms_[m] = c * s;
    return p;
}

Poly Poly::star() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_[m.star()] = c.conj();
    return p;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::one();
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

std::optional<std::int64_t> Poly::winding() const {
    std::optional<std::int64_t> d;
    for (const auto& [m, c] : terms_) {
        std::int64_t w = m.winding();
        if (!d)
            d = w;
        else if (*d != w)
            return std::nullopt;
    }
    return d ? d : std::optional<std::int64_t>(0);
}

Poly alpha_power(std::int64_t n) {
    if (n >= 0) return Poly::monomial({std::uint32_t(n), 0, 0, 0});
    return Poly::monomial({0, std::uint32_t(-n), 0, 0});
}

// ---------------------------------------------------------------- rendering

namespace {

std::string factors_string(const Monomial& m) {
    std::string s;
    auto put = [&s](const char* name, std::uint32_t e) {
        if (e == 0) return;
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("a", m.a);
    put("as", m.as);
    put("cs", m.cs);
    put("c", m.c);
    return s;
}

}  // namespace

std::string render(const Scalar& s) {
    if (s.is_real()) return render_rational(s.re);
    std::string out = "(" + render_rational(s.re);
    out += (s.im < 0) ? "-" : "+";
    Rational mag = s.im < 0 ? Rational(-s.im) : s.im;
    out += render_rational(mag) + "i)";
    return out;
}

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, s] : p.terms()) {
        std::string mstr = factors_string(m);
        bool first = out.empty();
        if (s.is_real()) {
            bool neg = s.re < 0;
            Rational mag = neg ? Rational(-s.re) : s.re;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (mstr.empty())
                out += render_rational(mag);
            else if (mag == 1)
                out += mstr;
            else
                out += render_rational(mag) + "*" + mstr;
        } else {
            if (!first) out += " + ";
            out += render(s);
            if (!mstr.empty()) out += "*" + mstr;
        }
    }
    return out;
}

// ------------------------------------------------------------------ parsing

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    enum Kind { End, Number, Gen, Plus, Minus, Times, Caret, Slash, LParen, RParen, Imag };
    Kind kind = End;
    std::string_view number;  // digits, when kind == Number
    int gen = -1;             // 0=a 1=as 2=cs 3=c, when kind == Gen
    std::size_t tok_pos = 0;

    explicit Lexer(std::string_view t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(tok_pos, what); }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            kind = End;
            return;
        }
        char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            kind = Number;
            number = text.substr(start, pos - start);
            return;
        }
        switch (ch) {
            case 'a':
                kind = Gen;
                if (pos + 1 < text.size() && text[pos + 1] == 's') {
                    gen = 1;
                    pos += 2;
                } else {
                    gen = 0;
                    ++pos;
                }
                return;
            case 'c':
                kind = Gen;
                if (pos + 1 < text.size() && text[pos + 1] == 's') {
                    gen = 2;
                    pos += 2;
                } else {
                    gen = 3;
                    ++pos;
                }
                return;
            case 'i': kind = Imag; ++pos; return;
            case '+': kind = Plus; ++pos; return;
            case '-': kind = Minus; ++pos; return;
            case '*': kind = Times; ++pos; return;
            case '^': kind = Caret; ++pos; return;
            case '/': kind = Slash; ++pos; return;
            case '(': kind = LParen; ++pos; return;
            case ')': kind = RParen; ++pos; return;
            default: throw ParseError(pos, std::string("unexpected character '") + ch + "'");
        }
    }
};

BigInt lex_nat(Lexer& lx) {
    if (lx.kind != Lexer::Number) lx.fail("expected a number");
    BigInt n(std::string(lx.number));
    lx.advance();
    return n;
}

Rational lex_rational(Lexer& lx) {
    bool neg = false;
    if (lx.kind == Lexer::Minus) {
        neg = true;
        lx.advance();
    }
    BigInt num = lex_nat(lx);
    BigInt den = 1;
    if (lx.kind == Lexer::Slash) {
        lx.advance();
        std::size_t den_pos = lx.tok_pos;
        den = lex_nat(lx);
        if (den == 0) throw ParseError(den_pos, "zero denominator");
    }
    Rational q(num, den);
    return neg ? Rational(-q) : q;
}

Scalar lex_coef(Lexer& lx) {
    if (lx.kind == Lexer::LParen) {
        lx.advance();
        Rational re = lex_rational(lx);
        if (lx.kind == Lexer::RParen) {
            lx.advance();
            return Scalar(re);
        }
        bool neg;
        if (lx.kind == Lexer::Plus)
            neg = false;
        else if (lx.kind == Lexer::Minus)
            neg = true;
        else
            lx.fail("expected '+', '-' or ')' in complex coefficient");
        lx.advance();
        Rational im = lex_rational(lx);
        if (lx.kind != Lexer::Imag) lx.fail("expected 'i'");
        lx.advance();
        if (lx.kind != Lexer::RParen) lx.fail("expected ')'");
        lx.advance();
        return Scalar(re, neg ? Rational(-im) : im);
    }
    return Scalar(lex_rational(lx));
}

std::uint32_t lex_exponent(Lexer& lx) {
    BigInt n = lex_nat(lx);
    if (n > 1000000) lx.fail("exponent too large");
    return n.convert_to<std::uint32_t>();
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Lexer lx(text);
    Rational q = lex_rational(lx);
    if (lx.kind != Lexer::End) lx.fail("trailing input after rational");
    return q;
}

Poly parse_poly(std::string_view text) {
    Lexer lx(text);
    std::vector<RawTerm> raw;
    bool negate = false;
    if (lx.kind == Lexer::Plus) lx.advance();
    else if (lx.kind == Lexer::Minus) {
        negate = true;
        lx.advance();
    }
    while (true) {
        RawTerm term;
        term.coeff = Scalar(1);
        bool have_any = false;
        if (lx.kind == Lexer::Number || lx.kind == Lexer::LParen) {
            term.coeff = lex_coef(lx);
            have_any = true;
            if (lx.kind == Lexer::Times) {
                lx.advance();
                if (lx.kind != Lexer::Gen) lx.fail("expected a generator after '*'");
            }
        }
        while (lx.kind == Lexer::Gen) {
            int g = lx.gen;
            lx.advance();
            std::uint32_t e = 1;
            if (lx.kind == Lexer::Caret) {
                lx.advance();
                e = lex_exponent(lx);
            }
            switch (g) {
                case 0: term.a += e; break;
                case 1: term.as += e; break;
                case 2: term.cs += e; break;
                case 3: term.c += e; break;
            }
            have_any = true;
            if (lx.kind == Lexer::Times) {
                lx.advance();
                if (lx.kind != Lexer::Gen) lx.fail("expected a generator after '*'");
            }
        }
        if (!have_any) lx.fail("expected a term");
        if (negate) term.coeff = -term.coeff;
        raw.push_back(std::move(term));

        if (lx.kind == Lexer::End) break;
        if (lx.kind == Lexer::Plus)
            negate = false;
        else if (lx.kind == Lexer::Minus)
            negate = true;
        else
            lx.fail("expected '+', '-' or end of input");
        lx.advance();
    }
    return Poly::normal_form(std::move(raw));
}

}  // namespace hopfcalc
