#include "stein/expanded_op.hpp"

#include <json.hpp>
#include <sstream>

namespace stein {

using json = nlohmann::json;

ExpandedOp ExpandedOp::monomial(int d, int m, const Rational& c) {
    ExpandedOp r;
    r.set(d, m, c);
    return r;
}

ExpandedOp ExpandedOp::t_factor(const Rational& r) {
    ExpandedOp t = monomial(1, 1, 1);
    t.set(0, 0, r);
    return t;
}

Rational ExpandedOp::coeff(int d, int m) const {
    auto it = terms_.find(MonoKey{d, m});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExpandedOp::set(int d, int m, const Rational& c) {
    if (d < 0 || m < 0) throw shape_error("negative monomial exponent");
    if (c == 0)
        terms_.erase(MonoKey{d, m});
    else
        terms_[MonoKey{d, m}] = c;
}

int ExpandedOp::order() const {
    int o = -1;
    for (const auto& [k, c] : terms_) o = std::max(o, k.d);
    return o;
}

int ExpandedOp::degree() const {
    int o = -1;
    for (const auto& [k, c] : terms_) o = std::max(o, k.m);
    return o;
}

std::set<int> ExpandedOp::diag_offsets() const {
    std::set<int> s;
    for (const auto& [k, c] : terms_) s.insert(k.m - k.d);
    return s;
}

ExpandedOp operator+(const ExpandedOp& a, const ExpandedOp& b) {
    ExpandedOp r = a;
    for (const auto& [k, c] : b.terms_) {
        Rational v = r.coeff(k.d, k.m) + c;
        r.set(k.d, k.m, v);
    }
    return r;
}

ExpandedOp operator-(const ExpandedOp& a, const ExpandedOp& b) {
    return a + (Rational(-1) * b);
}

ExpandedOp operator*(const Rational& c, const ExpandedOp& a) {
    ExpandedOp r;
    if (c == 0) return r;
    for (const auto& [k, v] : a.terms_) r.terms_[k] = c * v;
    return r;
}

ExpandedOp ExpandedOp::compose(const ExpandedOp& a, const ExpandedOp& b) {
    ExpandedOp r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            int tmax = std::min(ka.d, kb.m);
            for (int t = 0; t <= tmax; ++t) {
                auto ut = static_cast<unsigned long>(t);
                Rational c = ca * cb *
                             Rational(factorial(ut) * binom(static_cast<unsigned long>(ka.d), ut) *
                                      binom(static_cast<unsigned long>(kb.m), ut));
                MonoKey k{ka.d + kb.d - t, ka.m + kb.m - t};
                Rational v = r.coeff(k.d, k.m) + c;
                r.set(k.d, k.m, v);
            }
        }
    }
    return r;
}

ExpandedOp ExpandedOp::compose_pow(const ExpandedOp& a, unsigned n) {
    ExpandedOp r = identity();
    for (unsigned i = 0; i < n; ++i) r = compose(r, a);
    return r;
}

ExpandedOp ExpandedOp::tau_scale(const Rational& c) const {
    if (c == 0) throw invalid_parameter("scaling by zero");
    ExpandedOp r;
    for (const auto& [k, v] : terms_) r.set(k.d, k.m, v * pow_rat(c, k.d - k.m));
    return r;
}

ExpandedOp ExpandedOp::primitive() const {
    if (terms_.empty()) return {};
    Integer l = 1, g = 0;
    for (const auto& [k, v] : terms_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    Rational s = rat(l, g);
    if (terms_.begin()->second < 0) s = -s;
    return s * (*this);
}

std::optional<Rational> ExpandedOp::scale_between(const ExpandedOp& a, const ExpandedOp& b) {
    if (a.terms_.size() != b.terms_.size() || a.is_zero()) return std::nullopt;
    Rational ref = b.coeff(a.terms_.begin()->first.d, a.terms_.begin()->first.m);
    if (ref == 0) return std::nullopt;
    Rational s = a.terms_.begin()->second / ref;
    for (const auto& [k, v] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || v != s * it->second) return std::nullopt;
    }
    return s;
}

std::string ExpandedOp::render() const {
    if (terms_.empty()) return "0";
    // highest derivative order first, then highest M-degree
    std::map<MonoKey, Rational, std::greater<MonoKey>> sorted(terms_.begin(), terms_.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : sorted) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && (k.d > 0 || k.m > 0);
        if (!unit) os << to_string(a) << ((k.d > 0 || k.m > 0) ? " " : "");
        if (k.m > 0) os << "M" << (k.m > 1 ? "^" + std::to_string(k.m) : "");
        if (k.m > 0 && k.d > 0) os << " ";
        if (k.d > 0) os << "D" << (k.d > 1 ? "^" + std::to_string(k.d) : "");
        if (k.d == 0 && k.m == 0 && unit) os << "I";
    }
    return os.str();
}

std::string ExpandedOp::to_json() const {
    json terms = json::array();
    for (const auto& [k, c] : terms_) {
        terms.push_back({{"d", k.d},
                         {"m", k.m},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return json{{"terms", terms}}.dump();
}

ExpandedOp ExpandedOp::from_json(const std::string& text) {
    json j = json::parse(text);
    ExpandedOp r;
    for (const auto& t : j.at("terms")) {
        Rational c = rat(Integer(t.at("num").get<std::string>()),
                         Integer(t.at("den").get<std::string>()));
        r.set(t.at("d").get<int>(), t.at("m").get<int>(), r.coeff(t.at("d"), t.at("m")) + c);
    }
    return r;
}

} // namespace stein
