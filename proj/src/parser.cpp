#include "stein/parser.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace stein {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }

    bool peek_alpha() {
        skip_ws();
        return pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]));
    }

    bool peek_number() {
        skip_ws();
        if (pos >= s.size()) return false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) return true;
        return s[pos] == '-' && pos + 1 < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos + 1]));
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error("expected a rational number", pos);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                throw parse_error("expected a denominator", pos);
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return rat_parse(s.substr(start, pos - start));
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }

    std::vector<Rational> arg_list() {
        expect('(');
        std::vector<Rational> args{rational()};
        while (eat(',')) args.push_back(rational());
        expect(')');
        return args;
    }

    AtomKind atom(const std::string& n, std::size_t at) {
        auto args = arg_list();
        auto arity = [&](std::size_t k) {
            if (args.size() != k)
                throw parse_error(n + " takes " + std::to_string(k) + " parameter(s), got " +
                                      std::to_string(args.size()),
                                  at);
        };
        if (n == "Normal") { arity(2); return NormalAtom{args[0], args[1]}; }
        if (n == "Gamma") { arity(2); return GammaAtom{args[0], args[1]}; }
        if (n == "Beta") { arity(2); return BetaAtom{args[0], args[1]}; }
        if (n == "StudentT") { arity(1); return StudentTAtom{args[0]}; }
        if (n == "InverseGamma") { arity(2); return InverseGammaAtom{args[0], args[1]}; }
        if (n == "FDist") { arity(2); return FDistAtom{args[0], args[1]}; }
        if (n == "PRR") { arity(1); return PRRAtom{args[0]}; }
        if (n == "VGSym") { arity(2); return VGSymAtom{args[0], args[1]}; }
        if (n == "VG") { arity(3); return VGAtom{args[0], args[1], args[2]}; }
        if (n == "GenGamma") {
            arity(3);
            if (!is_integer(args[2]))
                throw parse_error("GenGamma power must be an integer", at);
            return GenGammaAtom{args[0], args[1], to_long(args[2])};
        }
        if (n == "Exponential") { arity(1); return ExponentialAtom{args[0]}; }
        if (n == "ChiSq") { arity(1); return ChiSqAtom{args[0]}; }
        throw parse_error("unknown atom name '" + n + "'", at);
    }

    // A factor is either a distribution expression or a plain constant.
    using Factor = std::variant<DistExpr, Rational>;

    Factor factor() {
        skip_ws();
        if (peek_number()) return rational();
        if (eat('(')) {
            Factor inner = expr_impl();
            expect(')');
            return inner;
        }
        if (!peek_alpha()) throw parse_error("expected an atom, number or '('", pos);
        std::size_t at = pos;
        std::string n = name();
        if (n == "shift") {
            expect('(');
            Factor base = expr_impl();
            expect(',');
            Rational mu = rational();
            expect(')');
            if (!std::holds_alternative<DistExpr>(base))
                throw parse_error("shift needs a distribution", at);
            return DistExpr::shift(std::get<DistExpr>(base), mu);
        }
        return DistExpr::atom(atom(n, at));
    }

    Factor term() {
        Factor f = factor();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            Rational e;
            if (eat('(')) {
                e = rational();
                expect(')');
            } else {
                e = rational();
            }
            if (std::holds_alternative<Rational>(f)) {
                if (!is_integer(e)) throw parse_error("fractional power of a constant", pos);
                return pow_rat(std::get<Rational>(f), to_long(e));
            }
            return DistExpr::power(std::get<DistExpr>(f), e);
        }
        return f;
    }

    Factor expr_impl() {
        Rational c = 1;
        std::vector<DistExpr> dists;
        auto absorb = [&](Factor&& f, bool invert) {
            if (std::holds_alternative<Rational>(f)) {
                const Rational& v = std::get<Rational>(f);
                if (invert) {
                    if (v == 0) throw parse_error("division by zero", pos);
                    c /= v;
                } else {
                    c *= v;
                }
            } else {
                DistExpr d = std::get<DistExpr>(std::move(f));
                dists.push_back(invert ? DistExpr::power(std::move(d), -1) : std::move(d));
            }
        };
        absorb(term(), false);
        for (;;) {
            if (eat('*')) absorb(term(), false);
            else if (eat('/')) absorb(term(), true);
            else break;
        }
        if (dists.empty()) return c;
        DistExpr e = DistExpr::product(std::move(dists));
        if (c != 1) e = DistExpr::scale(std::move(e), c);
        return e;
    }
};

} // namespace

DistExpr parse_expression(const std::string& text) {
    Parser p{text};
    Parser::Factor f = p.expr_impl();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    if (!std::holds_alternative<DistExpr>(f))
        throw parse_error("expression is a plain constant, not a distribution", 0);
    return std::get<DistExpr>(f);
}

} // namespace stein
