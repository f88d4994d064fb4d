#include "stein/catalog.hpp"

namespace stein {

namespace {

// prod_{l=0}^{n-1} (x + l)
Rational rising(const Rational& x, long n) {
    Rational v = 1;
    for (long l = 0; l < n; ++l) v *= (x + l);
    return v;
}

Rational double_factorial_odd(long k) { // (k-1)!! for even k: 1*3*...*(k-1)
    Rational v = 1;
    for (long j = k - 1; j >= 1; j -= 2) v *= j;
    return v;
}

MomentValue gamma_like(const Rational& r, const Rational& lambda, const Rational& k) {
    // E X^k = Gamma(r+k) / (lambda^k Gamma(r)), exists iff r + k > 0
    if (r + k <= 0) return MomentValue::does_not_exist();
    if (is_integer(k)) {
        long n = to_long(k);
        if (n >= 0) return MomentValue::exact(rising(r, n) / pow_rat(lambda, n));
        Rational denom = rising(r + k, -n); // (r-|k|)(r-|k|+1)...(r-1)
        return MomentValue::exact(pow_rat(lambda, -n) / denom);
    }
    Real lg = log_gamma_rational(r + k) - log_gamma_rational(r) - Real(k) * log_rational(lambda);
    return MomentValue::approx(Real::exp(lg));
}

MomentValue beta_like(const Rational& a, const Rational& b, const Rational& k) {
    // E X^k = B(a+k, b) / B(a, b), exists iff a + k > 0
    if (a + k <= 0) return MomentValue::does_not_exist();
    if (is_integer(k)) {
        long n = to_long(k);
        if (n >= 0) return MomentValue::exact(rising(a, n) / rising(a + b, n));
        return MomentValue::exact(rising(a + b + k, -n) / rising(a + k, -n));
    }
    Real lg = log_gamma_rational(a + k) + log_gamma_rational(a + b) - log_gamma_rational(a) -
              log_gamma_rational(a + b + k);
    return MomentValue::approx(Real::exp(lg));
}

// E V^p for V ~ Gamma(r/2, 1/2), integer p >= 0: 2^p prod (r/2 + l)
Rational chi_mixing_moment(const Rational& r, long p) {
    return pow_rat(2, p) * rising(r / 2, p);
}

MomentValue atom_moment(const AtomKind& atom, const Rational& k) {
    if (k == 0) return MomentValue::exact(1);
    return std::visit(
        [&](const auto& v) -> MomentValue {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) {
                if (!is_integer(k))
                    throw unsupported_error("fractional moment of a Normal atom");
                long n = to_long(k);
                if (n < 0) return MomentValue::does_not_exist();
                // mu_k = mu mu_{k-1} + (k-1) sigma^2 mu_{k-2}
                Rational m0 = 1, m1 = v.mu;
                for (long j = 2; j <= n; ++j) {
                    Rational m2 = v.mu * m1 + (j - 1) * v.sigma2 * m0;
                    m0 = m1;
                    m1 = m2;
                }
                return MomentValue::exact(n == 0 ? m0 : m1);
            } else if constexpr (std::is_same_v<T, GammaAtom>) {
                return gamma_like(v.r, v.lambda, k);
            } else if constexpr (std::is_same_v<T, ExponentialAtom>) {
                return gamma_like(1, v.lambda, k);
            } else if constexpr (std::is_same_v<T, ChiSqAtom>) {
                return gamma_like(v.d / 2, rat(1, 2), k);
            } else if constexpr (std::is_same_v<T, BetaAtom>) {
                return beta_like(v.a, v.b, k);
            } else if constexpr (std::is_same_v<T, StudentTAtom>) {
                if (!is_integer(k))
                    throw unsupported_error("fractional moment of a StudentT atom");
                long n = to_long(k);
                if (n < 0 || k >= v.nu) return MomentValue::does_not_exist();
                if (n % 2 == 1) return MomentValue::exact(0);
                // prod_{i<=m} (2i-1) nu / (nu - 2i)
                Rational val = 1;
                for (long i = 1; i <= n / 2; ++i) val *= (2 * i - 1) * v.nu / (v.nu - 2 * i);
                return MomentValue::exact(val);
            } else if constexpr (std::is_same_v<T, InverseGammaAtom>) {
                // E X^k = beta^k Gamma(alpha-k)/Gamma(alpha), exists iff k < alpha
                if (k >= v.alpha) return MomentValue::does_not_exist();
                if (is_integer(k)) {
                    long n = to_long(k);
                    if (n >= 0) return MomentValue::exact(pow_rat(v.beta, n) / rising(v.alpha - k, n));
                    return MomentValue::exact(rising(v.alpha, -n) / pow_rat(v.beta, -n));
                }
                Real lg = log_gamma_rational(v.alpha - k) - log_gamma_rational(v.alpha) +
                          Real(k) * log_rational(v.beta);
                return MomentValue::approx(Real::exp(lg));
            } else if constexpr (std::is_same_v<T, FDistAtom>) {
                // (d2/d1)^k Gamma(d1/2+k)Gamma(d2/2-k)/(Gamma(d1/2)Gamma(d2/2))
                if (k >= v.d2 / 2 || k <= -v.d1 / 2) return MomentValue::does_not_exist();
                if (is_integer(k)) {
                    long n = to_long(k);
                    Rational scale = pow_rat(v.d2 / v.d1, n);
                    if (n >= 0)
                        return MomentValue::exact(scale * rising(v.d1 / 2, n) / rising(v.d2 / 2 - k, n));
                    return MomentValue::exact(scale * rising(v.d2 / 2, -n) / rising(v.d1 / 2 + k, -n));
                }
                Real lg = log_gamma_rational(v.d1 / 2 + k) + log_gamma_rational(v.d2 / 2 - k) -
                          log_gamma_rational(v.d1 / 2) - log_gamma_rational(v.d2 / 2) +
                          Real(k) * log_rational(v.d2 / v.d1);
                return MomentValue::approx(Real::exp(lg));
            } else if constexpr (std::is_same_v<T, PRRAtom>) {
                // Z^2 = 2s X Y with X ~ Beta, Y ~ Gamma as in the sqrt(2sXY)
                // representation; E Z^k = (2s)^{k/2} Gamma(1+k/2) Gamma(s) /
                // Gamma(s+k/2) * Gamma((k+1)/2)/Gamma(1/2)
                if (k <= -1) return MomentValue::does_not_exist();
                if (is_integer(k) && to_long(k) % 2 == 0) {
                    long m = to_long(k) / 2;
                    if (m >= 0) {
                        Rational val = pow_rat(2 * v.s, m);
                        for (long l = 0; l < m; ++l)
                            val *= (1 + l) * (rat(1, 2) + l) / (v.s + l);
                        return MomentValue::exact(val);
                    }
                }
                Rational h = k / 2;
                Real lg = Real(h) * log_rational(2 * v.s) + log_gamma_rational(1 + h) +
                          log_gamma_rational(v.s) - log_gamma_rational(v.s + h) +
                          log_gamma_rational(h + rat(1, 2)) - log_gamma_rational(rat(1, 2));
                return MomentValue::approx(Real::exp(lg));
            } else if constexpr (std::is_same_v<T, VGSymAtom>) {
                if (!is_integer(k))
                    throw unsupported_error("fractional moment of a VGSym atom");
                long n = to_long(k);
                if (n < 0) return MomentValue::does_not_exist();
                if (n % 2 == 1) return MomentValue::exact(0);
                // E (X sqrt(V))^n with X ~ N(0, sigma^2), V ~ Gamma(r/2, 1/2)
                return MomentValue::exact(pow_rat(v.sigma, n) * double_factorial_odd(n) *
                                          chi_mixing_moment(v.r, n / 2));
            } else if constexpr (std::is_same_v<T, VGAtom>) {
                if (!is_integer(k))
                    throw unsupported_error("fractional moment of a VG atom");
                long n = to_long(k);
                if (n < 0) return MomentValue::does_not_exist();
                // Z = theta V + sigma sqrt(V) X; binomial expansion over the
                // normal part, odd normal moments vanish.
                Rational total = 0;
                for (long j = 0; j <= n; j += 2) {
                    Rational term = Rational(binom(static_cast<unsigned long>(n),
                                                   static_cast<unsigned long>(j))) *
                                    pow_rat(v.theta, n - j) * pow_rat(v.sigma, j) *
                                    double_factorial_odd(j) * chi_mixing_moment(v.r, n - j / 2);
                    total += term;
                }
                return MomentValue::exact(total);
            } else { // GenGammaAtom
                // E X^k = Gamma((r+k)/q) / (lambda^k Gamma(r/q))
                if (v.r + k <= 0) return MomentValue::does_not_exist();
                Rational t = k / v.q;
                if (is_integer(t)) {
                    long n = to_long(t);
                    if (n >= 0)
                        return MomentValue::exact(rising(v.r / v.q, n) / pow_rat(v.lambda, to_long(k)));
                    return MomentValue::exact(pow_rat(v.lambda, -to_long(k)) / rising(v.r / v.q + t, -n));
                }
                Real lg = log_gamma_rational((v.r + k) / v.q) - log_gamma_rational(v.r / v.q) -
                          Real(k) * log_rational(v.lambda);
                return MomentValue::approx(Real::exp(lg));
            }
        },
        atom);
}

} // namespace

MomentValue moment(const DistExpr& e, const Rational& k) {
    if (const AtomKind* a = e.as_atom()) return atom_moment(*a, k);
    if (const auto* fs = e.as_product()) {
        bool approx = false;
        Rational ex = 1;
        Real ap(1);
        for (const auto& f : *fs) {
            MomentValue m = moment(f, k);
            if (!m.exists()) return MomentValue::does_not_exist();
            if (m.is_exact() && !approx) {
                ex *= m.exact_value();
            } else {
                if (!approx) { ap = Real(ex); approx = true; }
                ap *= m.as_real();
            }
        }
        return approx ? MomentValue::approx(ap) : MomentValue::exact(ex);
    }
    if (auto p = as_power(e)) return moment(p->base, p->gamma * k);
    if (auto s = as_shift(e)) {
        if (!is_integer(k) || k < 0)
            throw unsupported_error("moment of a shifted variable needs a non-negative integer index");
        long n = to_long(k);
        Rational total = 0;
        for (long j = 0; j <= n; ++j) {
            MomentValue m = moment(s->base, Rational(j));
            if (!m.exists()) return MomentValue::does_not_exist();
            total += Rational(binom(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) *
                     pow_rat(s->mu, n - j) * m.exact_value();
        }
        return MomentValue::exact(total);
    }
    if (auto s = as_scale(e)) {
        MomentValue m = moment(s->base, k);
        if (!m.exists()) return MomentValue::does_not_exist();
        if (is_integer(k)) {
            Rational c = pow_rat(s->c, to_long(k));
            return m.is_exact() ? MomentValue::exact(c * m.exact_value())
                                : MomentValue::approx(Real(c) * m.approx_value());
        }
        // c^k for fractional k: exact only when the root is rational
        if (s->c > 0) {
            if (!k.get_den().fits_ulong_p())
                throw unsupported_error("scale moment with an oversized fractional index");
            if (auto root = exact_root(pow_rat(s->c, to_long(k * k.get_den())), k.get_den().get_ui())) {
                if (m.is_exact()) return MomentValue::exact(*root * m.exact_value());
                return MomentValue::approx(Real(*root) * m.approx_value());
            }
            Real c = Real::exp(Real(k) * log_rational(s->c));
            return MomentValue::approx(c * m.as_real());
        }
        throw unsupported_error("fractional moment with a negative scale");
    }
    throw unsupported_error("moment: unhandled expression " + e.render());
}

MomentValue moment(const DistExpr& e, long k) { return moment(e, Rational(k)); }

} // namespace stein
