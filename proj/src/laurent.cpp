#include "hopfcalc/laurent.hpp"

#include <cctype>

#include "hopfcalc/poly.hpp"

namespace hopfcalc {

std::string render(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [n, s] : p.terms()) {
        bool first = out.empty();
        std::string coef;
        if (s.is_real()) {
            bool neg = s.re < 0;
            Rational mag = neg ? Rational(-s.re) : s.re;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            coef = render_rational(mag);
        } else {
            if (!first) out += " + ";
            coef = render(s);
        }
        out += coef + "*u^" + std::to_string(n);
    }
    return out;
}

LaurentPoly parse_laurent(std::string_view text) {
    LaurentPoly result;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> std::int64_t {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        std::int64_t v = 0;
        bool any = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
            any = true;
        }
        if (!any) throw ParseError(start, "expected an integer");
        return neg ? -v : v;
    };

    bool negate = false;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negate = text[pos] == '-';
        ++pos;
    }
    while (true) {
        skip_ws();
        std::size_t term_start = pos;
        // coefficient (optional when the term starts with u)
        Scalar coeff(1);
        bool saw_coeff = false;
        if (pos < text.size() && text[pos] != 'u') {
            // reuse the polynomial scalar syntax: rational or (re+imi)
            std::size_t end = pos;
            int depth = 0;
            while (end < text.size()) {
                char ch = text[end];
                if (ch == '(') ++depth;
                if (ch == ')') --depth;
                if (depth == 0 && (ch == '*' || ch == '+' || ch == '-') && end != pos) break;
                ++end;
            }
            std::string_view piece = text.substr(pos, end - pos);
            Poly p = parse_poly(piece);
            if (!p.is_zero() && (p.term_count() != 1 || !p.terms().begin()->first.is_unit()))
                throw ParseError(pos, "expected a scalar coefficient");
            coeff = p.is_zero() ? Scalar(0) : p.terms().begin()->second;
            pos = end;
            saw_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') ++pos;
            skip_ws();
        }
        std::int64_t n = 0;
        if (pos < text.size() && text[pos] == 'u') {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                n = parse_int();
            } else {
                n = 1;
            }
        } else if (!saw_coeff) {
            throw ParseError(term_start, "expected a term");
        }
        result += LaurentPoly::u_power(n, negate ? -coeff : coeff);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+')
            negate = false;
        else if (text[pos] == '-')
            negate = true;
        else
            throw ParseError(pos, "expected '+', '-' or end of input");
        ++pos;
    }
    return result;
}

}  // namespace hopfcalc
