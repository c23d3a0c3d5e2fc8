#include "suspzeta/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace suspzeta {

namespace {

struct IntPoly {
    std::vector<BigInt> coeffs; // degree-indexed, trailing nonzero
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// p = scale * prim with prim integer, primitive, positive leading coefficient.
IntPoly primitive_part(const Poly& p, BigRational& scale) {
    IntPoly out;
    if (p.is_zero()) {
        scale = 0;
        return out;
    }
    BigInt denlcm = 1;
    for (const auto& c : p.coeffs()) denlcm = big_lcm(denlcm, denominator_of(c));
    std::vector<BigInt> ints;
    ints.reserve(p.coeffs().size());
    BigInt content = 0;
    for (const auto& c : p.coeffs()) {
        ints.push_back(numerator_of(c) * (denlcm / denominator_of(c)));
        content = big_gcd(content, ints.back());
    }
    BigInt sign = ints.back() < 0 ? -1 : 1;
    for (auto& c : ints) c /= content * sign;
    out.coeffs = std::move(ints);
    scale = BigRational(content * sign, denlcm);
    return out;
}

std::string render_monomial(const BigInt& coeff, int deg, std::string_view var, RenderMode mode,
                            bool leading) {
    std::ostringstream os;
    BigInt c = coeff;
    if (leading) {
        if (c < 0) {
            os << "-";
            c = -c;
        }
    } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    if (deg == 0) {
        os << c.str();
        return os.str();
    }
    if (c != 1) os << c.str() << (mode == RenderMode::Canonical ? "*" : " ");
    os << var;
    if (deg > 1) {
        if (mode == RenderMode::Canonical)
            os << "^" << deg;
        else
            os << "^{" << deg << "}";
    }
    return os.str();
}

std::string render_int_poly(const IntPoly& p, std::string_view var, RenderMode mode) {
    if (p.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending powers, except ascending when that avoids a leading minus
    // ("2 - 3*s" rather than "-3*s + 2").
    const bool ascending = p.degree() >= 1 && p.coeffs.back() < 0 && p.coeffs.front() > 0;
    for (int i = 0; i <= p.degree(); ++i) {
        const int d = ascending ? i : p.degree() - i;
        const BigInt& c = p.coeffs[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        os << render_monomial(c, d, var, mode, first);
        first = false;
    }
    return os.str();
}

struct LinearFactor {
    BigInt a, b; // a*var + b, a > 0, gcd(a,b) = 1
    BigRational root;
    int multiplicity = 1;
};

std::string render_linear(const LinearFactor& f, std::string_view var, RenderMode mode) {
    IntPoly p;
    p.coeffs = {f.b, f.a};
    std::string out;
    if (f.b == 0 && f.a == 1)
        out = std::string(var); // the bare factor s needs no parentheses
    else
        out = "(" + render_int_poly(p, var, mode) + ")";
    if (f.multiplicity > 1) {
        if (mode == RenderMode::Canonical)
            out += "^" + std::to_string(f.multiplicity);
        else
            out += "^{" + std::to_string(f.multiplicity) + "}";
    }
    return out;
}

} // namespace

std::string format_rational_function(const RationalFunction& x, RenderMode mode, std::string_view var) {
    if (x.is_zero()) return "0";

    BigRational numScale, denScale;
    IntPoly numPrim = primitive_part(x.num(), numScale);
    IntPoly denPrim = primitive_part(x.den(), denScale);
    BigRational scalar = numScale / denScale; // x = scalar * numPrim / denPrim
    BigInt P = numerator_of(scalar), Qc = denominator_of(scalar);

    // Fold |P| (and the sign) into the numerator polynomial.
    for (auto& c : numPrim.coeffs) c *= P;

    // Factor the denominator into rational linear pieces.
    Poly denAsPoly;
    {
        std::vector<BigRational> cs;
        cs.reserve(denPrim.coeffs.size());
        for (const auto& c : denPrim.coeffs) cs.emplace_back(c);
        denAsPoly = Poly(std::move(cs));
    }
    Poly rest;
    const auto roots = rational_roots(denAsPoly, &rest);
    std::vector<LinearFactor> factors;
    for (auto it = roots.begin(); it != roots.end();) {
        LinearFactor f;
        f.root = *it;
        f.a = denominator_of(*it);
        f.b = -numerator_of(*it);
        f.multiplicity = static_cast<int>(roots.count(*it));
        factors.push_back(f);
        std::advance(it, f.multiplicity);
    }
    // Ascending degree (constant, then linear), linear factors by descending root.
    std::sort(factors.begin(), factors.end(),
              [](const LinearFactor& lhs, const LinearFactor& rhs) { return lhs.root > rhs.root; });
    BigRational restScale;
    IntPoly restPrim = primitive_part(rest, restScale);
    const bool hasRest = restPrim.degree() >= 1;

    const std::string mult = mode == RenderMode::Canonical ? "*" : "";
    std::vector<std::string> denAtoms;
    if (Qc != 1) denAtoms.push_back(Qc.str());
    for (const auto& f : factors) denAtoms.push_back(render_linear(f, var, mode));
    if (hasRest) denAtoms.push_back("(" + render_int_poly(restPrim, var, mode) + ")");

    std::string numStr = render_int_poly(numPrim, var, mode);
    if (denAtoms.empty()) return numStr;

    // Count nonzero numerator terms to decide on parentheses.
    int numTerms = 0;
    for (const auto& c : numPrim.coeffs)
        if (c != 0) ++numTerms;
    if (numTerms > 1) numStr = "(" + numStr + ")";

    std::string denStr;
    for (std::size_t i = 0; i < denAtoms.size(); ++i) {
        if (i) denStr += mult;
        denStr += denAtoms[i];
    }
    if (mode == RenderMode::Latex) return "\\frac{" + render_int_poly(numPrim, var, mode) + "}{" + denStr + "}";

    // A single "(...)" factor, a bare integer, or s / s^k stands on its own;
    // anything else (a product, or a "(...)^k") gets outer parens.
    auto standsAlone = [&](const std::string& atom) {
        if (atom.find_first_not_of("0123456789") == std::string::npos) return true;
        if (atom.front() == '(' && atom.back() == ')') return true;
        if (atom.substr(0, var.size()) == var &&
            (atom.size() == var.size() || atom[var.size()] == '^'))
            return true;
        return false;
    };
    if (!(denAtoms.size() == 1 && standsAlone(denAtoms[0]))) denStr = "(" + denStr + ")";
    return numStr + "/" + denStr;
}

std::string format_motivic(const MotivicExpression& x, RenderMode mode) {
    if (!x.has_terms()) return "0";
    const bool latex = mode == RenderMode::Latex;
    auto renderMonomial = [&](const LTExp& e, const BigInt& c, bool leading) {
        std::ostringstream os;
        BigInt coeff = c;
        if (leading) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        std::vector<std::string> parts;
        if (coeff != 1 || (e.l == 0 && e.t == 0)) parts.push_back(coeff.str());
        auto power = [&](const char* sym, long long exp) {
            if (exp == 0) return;
            std::ostringstream ps;
            ps << sym;
            if (exp != 1) {
                if (latex)
                    ps << "^{" << exp << "}";
                else
                    ps << "^" << exp;
            }
            parts.push_back(ps.str());
        };
        power("L", e.l);
        power("T", e.t);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << (latex ? " " : "*");
            os << parts[i];
        }
        return os.str();
    };
    auto renderLaurent = [&](const LaurentLT& p) {
        if (p.is_zero()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
            os << renderMonomial(it->first, it->second, first);
            first = false;
        }
        return os.str();
    };

    std::ostringstream os;
    bool firstTerm = true;
    for (const auto& t : x.terms()) {
        if (!firstTerm) os << " + ";
        firstTerm = false;
        std::string num = renderLaurent(t.numer);
        if (t.numer.coeffs().size() > 1 && !t.denom.empty()) num = "(" + num + ")";
        os << num;
        if (t.denom.empty()) continue;
        os << "/";
        std::ostringstream ds;
        for (std::size_t i = 0; i < t.denom.size(); ++i) {
            if (i) ds << (latex ? " " : "*");
            const auto& f = t.denom[i];
            LaurentLT fp = LaurentLT::one() - LaurentLT::monomial(1, -f.a, f.b);
            ds << "(" << renderLaurent(fp) << ")";
        }
        std::string den = ds.str();
        if (t.denom.size() > 1) den = "(" + den + ")";
        os << den;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ExprParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        while (true) {
            if (eat('*'))
                acc = acc * unary();
            else if (eat('/')) {
                const std::size_t at = pos_;
                RationalFunction d = unary();
                if (d.is_zero()) throw ExprParseError("division by zero", at);
                acc = acc / d;
            } else
                return acc;
        }
    }

    RationalFunction unary() {
        if (eat('-')) return -unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (!eat('^')) return base;
        skip_ws();
        bool negative = eat('-');
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ExprParseError("expected integer exponent", at);
        long long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            e = e * 10 + (text_[pos_++] - '0');
        RationalFunction r = RationalFunction::from_rational(1);
        for (long long i = 0; i < e; ++i) r = r * base;
        if (negative) {
            if (r.is_zero()) throw ExprParseError("zero to a negative power", at);
            r = r.reciprocal();
        }
        return r;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ExprParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (!eat(')')) throw ExprParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                value = value * 10 + (text_[pos_++] - '0');
            return RationalFunction::from_rational(BigRational(value));
        }
        if (text_.substr(pos_, var_.size()) == var_) {
            pos_ += var_.size();
            return RationalFunction::variable();
        }
        throw ExprParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_expr(std::string_view text, std::string_view var) {
    return Parser(text, var).parse();
}

} // namespace suspzeta
