#include "stein/real.hpp"

#include <cstdio>
#include <cstdlib>
#include <vector>

namespace stein {

namespace {

unsigned env_digits() {
    const char* s = std::getenv("STEIN_PRECISION_DIGITS");
    if (!s) return 30;
    long d = std::atol(s);
    if (d < 30) d = 30; // contract floor
    if (d > 10000) d = 10000;
    return static_cast<unsigned>(d);
}

} // namespace

unsigned Real::precision_digits() {
    static unsigned d = env_digits();
    return d;
}

unsigned Real::precision_bits() {
    // bits ~ digits * log2(10), plus guard bits
    static unsigned b = static_cast<unsigned>(precision_digits() * 3.3219281) + 32;
    return b;
}

Real::Real() { mpfr_init2(v_, precision_bits()); mpfr_set_zero(v_, 1); }
Real::Real(long v) { mpfr_init2(v_, precision_bits()); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(const Rational& q) {
    mpfr_init2(v_, precision_bits());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}
Real::Real(const Real& o) { mpfr_init2(v_, precision_bits()); mpfr_set(v_, o.v_, MPFR_RNDN); }
Real::Real(Real&& o) noexcept { mpfr_init2(v_, precision_bits()); mpfr_swap(v_, o.v_); }
Real& Real::operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::operator+(const Real& o) const { Real r; mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
Real Real::operator-(const Real& o) const { Real r; mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
Real Real::operator*(const Real& o) const { Real r; mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
Real Real::operator/(const Real& o) const { Real r; mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
Real Real::operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

bool Real::operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
bool Real::operator==(const Real& o) const { return mpfr_cmp(v_, o.v_) == 0; }

Real Real::abs() const { Real r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
int Real::sign() const { return mpfr_sgn(v_); }

Real Real::log(const Real& x) { Real r; mpfr_log(r.v_, x.v_, MPFR_RNDN); return r; }
Real Real::exp(const Real& x) { Real r; mpfr_exp(r.v_, x.v_, MPFR_RNDN); return r; }
Real Real::log_gamma(const Real& x) { Real r; mpfr_lngamma(r.v_, x.v_, MPFR_RNDN); return r; }
Real Real::pow(const Real& b, const Real& e) { Real r; mpfr_pow(r.v_, b.v_, e.v_, MPFR_RNDN); return r; }
Real Real::pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::str(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Real log_rational(const Rational& q) { return Real::log(Real(q)); }
Real log_gamma_rational(const Rational& q) { return Real::log_gamma(Real(q)); }

} // namespace stein
