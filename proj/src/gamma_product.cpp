#include "stein/gamma_product.hpp"

#include <json.hpp>
#include <sstream>

namespace stein {

std::string AffineQ::render() const {
    std::ostringstream os;
    if (a != 0) {
        if (a == -1) os << "-";
        else if (a != 1) os << to_string(a) << " ";
        os << "s";
        if (b > 0) os << " + " << to_string(b);
        else if (b < 0) os << " - " << to_string(-b);
    } else {
        os << to_string(b);
    }
    return os.str();
}

namespace {

std::vector<std::pair<Integer, long>> prime_factorize(Integer n) {
    std::vector<std::pair<Integer, long>> out;
    if (n < 0) n = -n;
    Integer p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
        p += (p == 2 ? 1 : 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

} // namespace

void GammaProductExpr::mul_rational(const Rational& q) {
    if (q == 0) throw invalid_parameter("gamma product: zero factor");
    if (q < 0) sign_ = -sign_;
    for (const auto& [p, e] : prime_factorize(q.get_num())) add_prime_exp(p, {0, Rational(e)});
    for (const auto& [p, e] : prime_factorize(q.get_den())) add_prime_exp(p, {0, Rational(-e)});
}

void GammaProductExpr::add_prime_exp(const Integer& p, const AffineQ& e) {
    auto [it, fresh] = primes_.try_emplace(p, e);
    if (!fresh) {
        it->second.a += e.a;
        it->second.b += e.b;
    }
}

void GammaProductExpr::add_gamma(const AffineQ& arg, long k) {
    if (k == 0) return;
    if (arg.a == 0) {
        // constant argument: fold integers and half-integers
        const Rational& f = arg.b;
        if (is_integer(f)) {
            if (f <= 0) throw invalid_parameter("gamma factor at a non-positive integer");
            Rational v(factorial(static_cast<unsigned long>(to_long(f) - 1)));
            for (long i = 0; i < (k > 0 ? k : -k); ++i) mul_rational(k > 0 ? v : 1 / v);
            return;
        }
        if (is_integer(f * 2)) {
            // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi); also valid for
            // negative half-integers via the reflection-free recursion
            Rational x = f;
            Rational acc = 1;
            while (x < rat(1, 2)) { acc /= x; x += 1; }     // Gamma(x) = Gamma(x+1)/x
            while (x > rat(1, 2)) { x -= 1; acc *= x; }      // Gamma(x+1) = x Gamma(x)
            // now Gamma(f) = acc * Gamma(1/2) = acc * sqrt(pi)
            for (long i = 0; i < (k > 0 ? k : -k); ++i) mul_rational(k > 0 ? acc : 1 / acc);
            pi_exp_ += Rational(k) / 2;
            return;
        }
    }
    auto [it, fresh] = gammas_.try_emplace(arg, k);
    if (!fresh) it->second += k;
}

void GammaProductExpr::add_affine(const AffineQ& arg, long k) {
    if (k == 0) return;
    if (arg.a == 0) {
        for (long i = 0; i < (k > 0 ? k : -k); ++i) mul_rational(k > 0 ? arg.b : 1 / arg.b);
        return;
    }
    // normalize to monic: (a s + b) = a * (s + b/a)
    Rational a = arg.a;
    for (long i = 0; i < (k > 0 ? k : -k); ++i) mul_rational(k > 0 ? a : 1 / a);
    auto [it, fresh] = affines_.try_emplace(arg.b / arg.a, k);
    if (!fresh) it->second += k;
}

void GammaProductExpr::cleanup() {
    std::erase_if(primes_, [](const auto& kv) { return kv.second.a == 0 && kv.second.b == 0; });
    std::erase_if(affines_, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(gammas_, [](const auto& kv) { return kv.second == 0; });
}

GammaProductExpr GammaProductExpr::from_rational(const Rational& q) {
    GammaProductExpr g;
    g.mul_rational(q);
    g.cleanup();
    return g;
}

GammaProductExpr GammaProductExpr::gamma_factor(const AffineQ& arg, long power) {
    GammaProductExpr g;
    g.add_gamma(arg, power);
    g.cleanup();
    return g;
}

GammaProductExpr GammaProductExpr::power_factor(const Rational& base, const AffineQ& exponent) {
    if (base <= 0) throw invalid_parameter("power factor base must be positive");
    GammaProductExpr g;
    for (const auto& [p, e] : prime_factorize(base.get_num()))
        g.add_prime_exp(p, {exponent.a * e, exponent.b * e});
    for (const auto& [p, e] : prime_factorize(base.get_den()))
        g.add_prime_exp(p, {exponent.a * -e, exponent.b * -e});
    g.cleanup();
    return g;
}

GammaProductExpr GammaProductExpr::pi_power(const Rational& e) {
    GammaProductExpr g;
    g.pi_exp_ = e;
    return g;
}

GammaProductExpr GammaProductExpr::affine_factor(const AffineQ& arg, long power) {
    GammaProductExpr g;
    g.add_affine(arg, power);
    g.cleanup();
    return g;
}

GammaProductExpr GammaProductExpr::operator*(const GammaProductExpr& o) const {
    GammaProductExpr g = *this;
    g.sign_ *= o.sign_;
    g.pi_exp_ += o.pi_exp_;
    for (const auto& [p, e] : o.primes_) g.add_prime_exp(p, e);
    for (const auto& [c, k] : o.affines_) {
        auto [it, fresh] = g.affines_.try_emplace(c, k);
        if (!fresh) it->second += k;
    }
    for (const auto& [arg, k] : o.gammas_) g.add_gamma(arg, k);
    g.cleanup();
    return g;
}

GammaProductExpr GammaProductExpr::inverse() const { return pow(-1); }

GammaProductExpr GammaProductExpr::pow(long k) const {
    GammaProductExpr g;
    g.sign_ = (k % 2 == 0) ? 1 : sign_;
    g.pi_exp_ = pi_exp_ * k;
    for (const auto& [p, e] : primes_) g.primes_[p] = {e.a * k, e.b * k};
    for (const auto& [c, n] : affines_) g.affines_[c] = n * k;
    for (const auto& [arg, n] : gammas_) g.gammas_[arg] = n * k;
    g.cleanup();
    return g;
}

GammaProductExpr GammaProductExpr::subst(const Rational& u, const Rational& v) const {
    GammaProductExpr g;
    g.sign_ = sign_;
    g.pi_exp_ = pi_exp_;
    for (const auto& [p, e] : primes_) g.add_prime_exp(p, e.subst(u, v));
    for (const auto& [c, k] : affines_) g.add_affine(AffineQ{1, c}.subst(u, v), k);
    for (const auto& [arg, k] : gammas_) g.add_gamma(arg.subst(u, v), k);
    g.cleanup();
    return g;
}

GammaProductExpr::Eval GammaProductExpr::eval_log(const Rational& s) const {
    Eval out;
    out.sign = sign_;
    Real acc;
    for (const auto& [arg, k] : gammas_) {
        Rational x = arg.eval(s);
        if (x <= 0) {
            out.valid = false;
            out.note = "gamma argument " + arg.render() + " = " + to_string(x) + " at s = " +
                       to_string(s);
            return out;
        }
        acc += Real(k) * log_gamma_rational(x);
    }
    for (const auto& [c, k] : affines_) {
        Rational x = s + c;
        if (x == 0) {
            out.valid = true;
            out.zero = true;
            return out;
        }
        if (x < 0 && k % 2 != 0) out.sign = -out.sign;
        acc += Real(k) * log_rational(x < 0 ? -x : x);
    }
    for (const auto& [p, e] : primes_) acc += Real(e.eval(s)) * log_rational(Rational(p));
    if (pi_exp_ != 0) acc += Real(pi_exp_) * Real::log(Real::pi());
    out.valid = true;
    out.log_abs = acc;
    return out;
}

std::string GammaProductExpr::render() const {
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    bool any = false;
    Rational num = 1, den = 1;
    std::ostringstream top, bot;
    auto emit = [&](std::ostringstream& o, const std::string& s) {
        if (o.tellp() > 0) o << " ";
        o << s;
    };
    for (const auto& [p, e] : primes_) {
        std::string b = p.get_str();
        if (e.a == 0 && is_integer(e.b)) {
            // keep plain rational numbers readable
            long n = to_long(e.b);
            if (n > 0 && n < 64) { num *= pow_rat(Rational(p), n); continue; }
            if (n < 0 && n > -64) { den *= pow_rat(Rational(p), -n); continue; }
        }
        emit(top, b + "^(" + e.render() + ")");
    }
    if (pi_exp_ != 0) emit(top, "pi^(" + to_string(pi_exp_) + ")");
    for (const auto& [c, k] : affines_) {
        std::string f = "(" + AffineQ{1, c}.render() + ")" + (k == 1 || k == -1 ? "" : "^" + std::to_string(std::abs(k)));
        emit(k > 0 ? top : bot, f);
    }
    for (const auto& [arg, k] : gammas_) {
        std::string f = "Gamma(" + arg.render() + ")" + (k == 1 || k == -1 ? "" : "^" + std::to_string(std::abs(k)));
        emit(k > 0 ? top : bot, f);
    }
    if (num != 1 || den != 1) {
        std::string s = to_string(num / den);
        os << s;
        any = true;
    }
    if (top.tellp() > 0) {
        if (any) os << " ";
        os << top.str();
        any = true;
    }
    if (!any) os << "1";
    if (bot.tellp() > 0) os << " / [" << bot.str() << "]";
    return os.str();
}

std::string GammaProductExpr::to_json() const {
    nlohmann::json j;
    j["sign"] = sign_;
    j["pi_exp"] = to_string(pi_exp_);
    j["powers"] = nlohmann::json::array();
    for (const auto& [p, e] : primes_)
        j["powers"].push_back({{"base", p.get_str()},
                               {"exp_s", to_string(e.a)},
                               {"exp_const", to_string(e.b)}});
    j["affine"] = nlohmann::json::array();
    for (const auto& [c, k] : affines_)
        j["affine"].push_back({{"shift", to_string(c)}, {"power", k}});
    j["gammas"] = nlohmann::json::array();
    for (const auto& [arg, k] : gammas_)
        j["gammas"].push_back({{"arg_s", to_string(arg.a)}, {"arg_const", to_string(arg.b)}, {"power", k}});
    return j.dump();
}

GammaEqualityReport gamma_expr_equal(const GammaProductExpr& x, const GammaProductExpr& y,
                                     const std::vector<Rational>& probes) {
    if (x == y) return {GammaEquality::StructurallyEqual, {}, "identical canonical forms"};
    GammaEqualityReport rep{GammaEquality::Different, {}, ""};
    const Rational tol = rat(1, 1000000000);
    int used = 0;
    for (const auto& s : probes) {
        auto ex = x.eval_log(s);
        auto ey = y.eval_log(s);
        if (!ex.valid || !ey.valid) {
            rep.skipped_probes.push_back("s = " + to_string(s) + ": " +
                                         (!ex.valid ? ex.note : ey.note));
            continue;
        }
        if (ex.zero || ey.zero) {
            if (ex.zero != ey.zero) {
                rep.detail = "one side vanishes at s = " + to_string(s);
                return rep;
            }
            ++used;
            continue;
        }
        if (ex.sign != ey.sign) {
            rep.detail = "sign mismatch at s = " + to_string(s);
            return rep;
        }
        Real diff = (ex.log_abs - ey.log_abs).abs();
        if (!(diff < Real(tol))) {
            rep.detail = "numeric mismatch at s = " + to_string(s) + ", |dlog| = " + diff.str(6);
            return rep;
        }
        ++used;
    }
    if (used == 0) {
        rep.detail = "no valid probes";
        return rep;
    }
    rep.verdict = GammaEquality::NumericallyEqual;
    return rep;
}

} // namespace stein
