#include "stein/euler_poly.hpp"

#include <algorithm>
#include <sstream>

namespace stein {

std::string TFactorization::render() const {
    std::ostringstream os;
    bool printed = false;
    if (lc != 1 || params.empty()) {
        os << to_string(lc);
        printed = true;
    }
    for (std::size_t i = 0; i < params.size();) {
        std::size_t j = i;
        while (j < params.size() && params[j] == params[i]) ++j;
        if (printed) os << " ";
        std::string s = to_string(params[i]);
        os << "T_" << (s.find('/') != std::string::npos || params[i] < 0 ? "{" + s + "}" : s);
        if (j - i > 1) os << "^" << j - i;
        printed = true;
        i = j;
    }
    return os.str();
}

EulerPoly::EulerPoly(const Rational& c) {
    if (c != 0) {
        c_ = {c};
        fac_ = TFactorization{c, {}};
    }
}

EulerPoly::EulerPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

EulerPoly EulerPoly::theta() { return t_factor(0); }

EulerPoly EulerPoly::t_factor(const Rational& r) {
    EulerPoly p;
    p.c_ = {r, 1};
    p.fac_ = TFactorization{1, {r}};
    return p;
}

EulerPoly EulerPoly::from_t_params(const Rational& lc, std::vector<Rational> params) {
    EulerPoly p = lc * EulerPoly::one();
    for (const auto& r : params) p = p * t_factor(r);
    return p;
}

Rational EulerPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational EulerPoly::coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<std::size_t>(i)];
}

Rational EulerPoly::eval(const Rational& x) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

void EulerPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

EulerPoly operator+(const EulerPoly& a, const EulerPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return EulerPoly(std::move(c));
}

EulerPoly operator*(const EulerPoly& a, const EulerPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    EulerPoly r(std::move(c));
    if (a.fac_ && b.fac_) {
        TFactorization f{a.fac_->lc * b.fac_->lc, a.fac_->params};
        f.params.insert(f.params.end(), b.fac_->params.begin(), b.fac_->params.end());
        std::sort(f.params.begin(), f.params.end());
        r.fac_ = std::move(f);
    }
    return r;
}

EulerPoly operator*(const Rational& c, const EulerPoly& a) {
    if (c == 0) return {};
    EulerPoly r = a;
    for (auto& v : r.c_) v *= c;
    if (r.fac_) r.fac_->lc *= c;
    return r;
}

EulerPoly EulerPoly::shift_arg(const Rational& c) const {
    if (c == 0) return *this;
    // Horner: p(theta + c)
    EulerPoly r;
    EulerPoly lin = t_factor(c); // theta + c
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + EulerPoly(*it);
    r.fac_.reset();
    if (fac_) {
        TFactorization f{fac_->lc, fac_->params};
        for (auto& p : f.params) p += c;
        std::sort(f.params.begin(), f.params.end());
        r.fac_ = std::move(f);
    }
    return r;
}

EulerPoly EulerPoly::scale_arg(const Rational& g) const {
    if (g == 0) throw invalid_parameter("argument scale must be nonzero");
    EulerPoly r = *this;
    Rational p = 1;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= p;
        p *= g;
    }
    r.trim();
    r.fac_.reset();
    if (fac_) {
        TFactorization f{fac_->lc * pow_rat(g, static_cast<long>(fac_->params.size())), {}};
        for (const auto& rp : fac_->params) f.params.push_back(rp / g);
        std::sort(f.params.begin(), f.params.end());
        r.fac_ = std::move(f);
    }
    return r;
}

EulerPoly EulerPoly::reflect_arg(const Rational& c) const {
    // p(-theta - c)
    EulerPoly r;
    EulerPoly lin(std::vector<Rational>{-c, -1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + EulerPoly(*it);
    r.fac_.reset();
    if (fac_) {
        int n = static_cast<int>(fac_->params.size());
        TFactorization f{(n % 2 ? -fac_->lc : fac_->lc), {}};
        for (const auto& rp : fac_->params) f.params.push_back(c - rp);
        std::sort(f.params.begin(), f.params.end());
        r.fac_ = std::move(f);
    }
    return r;
}

namespace {

// Divisors of |n|, bailing out (nullopt) when n is too composite to enumerate.
std::optional<std::vector<Integer>> divisors(Integer n, std::size_t limit = 4096) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<Integer, unsigned>> fac;
    Integer p = 2;
    while (p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fac.push_back({p, e});
        }
        p += (p == 2 ? 1 : 2);
        if (p > 1000000 && n > 1) return std::nullopt; // give up on huge factors
    }
    if (n > 1) fac.push_back({n, 1});
    std::vector<Integer> ds{1};
    for (const auto& [q, e] : fac) {
        std::size_t sz = ds.size();
        Integer pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < sz; ++j) {
                ds.push_back(ds[j] * pw);
                if (ds.size() > limit) return std::nullopt;
            }
        }
    }
    return ds;
}

} // namespace

void EulerPoly::ensure_factorization() {
    if (fac_ || is_zero()) return;
    if (degree() == 0) {
        fac_ = TFactorization{c_[0], {}};
        return;
    }
    // Clear denominators to integer coefficients, then apply the rational-root
    // theorem and deflate until either fully split or stuck.
    Integer den = 1;
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Rational> work = c_;
    for (auto& v : work) v *= Rational(den);
    std::vector<Rational> roots;
    while (work.size() > 1) {
        // strip zero roots
        if (work[0] == 0) {
            roots.push_back(0);
            work.erase(work.begin());
            continue;
        }
        auto dn = divisors(work[0].get_num());
        auto dd = divisors(work.back().get_num());
        if (!dn || !dd) { fac_.reset(); return; }
        bool found = false;
        for (const auto& pnum : *dn) {
            for (const auto& pden : *dd) {
                for (int s = 0; s < 2 && !found; ++s) {
                    Rational cand = rat(s ? -pnum : pnum, pden);
                    // evaluate
                    Rational v = 0;
                    for (auto it = work.rbegin(); it != work.rend(); ++it) v = v * cand + *it;
                    if (v == 0) {
                        roots.push_back(cand);
                        // synthetic division by (x - cand)
                        std::vector<Rational> quo(work.size() - 1, Rational(0));
                        Rational carry = 0;
                        for (std::size_t i = work.size(); i-- > 1;) {
                            carry = work[i] + carry * cand;
                            quo[i - 1] = carry;
                        }
                        work = std::move(quo);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return; // irreducible factor remains: no factored view
    }
    TFactorization f{leading(), {}};
    for (const auto& r : roots) f.params.push_back(-r);
    std::sort(f.params.begin(), f.params.end());
    fac_ = std::move(f);
}

ExpandedOp EulerPoly::to_expanded() const {
    // Stirling numbers of the second kind: theta^n = sum_k S(n,k) M^k D^k
    int n = degree();
    ExpandedOp out;
    if (n < 0) return out;
    std::vector<std::vector<Integer>> S(static_cast<std::size_t>(n) + 1);
    S[0] = {1};
    for (int i = 1; i <= n; ++i) {
        S[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 0);
        for (int k = 1; k <= i; ++k) {
            Integer below = (k <= i - 1) ? S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] : Integer(0);
            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                Integer(k) * below + S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
        }
    }
    for (int t = 0; t <= n; ++t) {
        if (coeff(t) == 0) continue;
        if (t == 0) {
            out = out + ExpandedOp::monomial(0, 0, coeff(0));
            continue;
        }
        for (int k = 1; k <= t; ++k) {
            Rational c = coeff(t) * Rational(S[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)]);
            out = out + ExpandedOp::monomial(k, k, c);
        }
    }
    return out;
}

std::string EulerPoly::render() const {
    if (is_zero()) return "0";
    if (fac_) return fac_->render();
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int t = degree(); t >= 0; --t) {
        Rational a = coeff(t);
        if (a == 0) continue;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || t == 0) os << to_string(a) << (t > 0 ? " " : "");
        if (t > 0) os << "theta" << (t > 1 ? "^" + std::to_string(t) : "");
    }
    os << ")";
    return os.str();
}

EulerPoly expanded_group_to_euler(const ExpandedOp& diag) {
    // M^l D^l = theta (theta-1) ... (theta-l+1)
    EulerPoly out;
    for (const auto& [k, c] : diag.terms()) {
        if (k.d != k.m) throw shape_error("non-diagonal term M^" + std::to_string(k.m) +
                                          " D^" + std::to_string(k.d));
        EulerPoly ff = EulerPoly::one();
        for (int t = 0; t < k.d; ++t) ff = ff * EulerPoly::t_factor(Rational(-t));
        out = out + c * ff;
    }
    return out;
}

} // namespace stein
