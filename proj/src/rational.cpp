#include "stein/rational.hpp"

namespace stein {

Rational rat(long num, long den) {
    if (den == 0) throw invalid_parameter("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_parameter("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw invalid_parameter("not a rational: '" + text + "'");
    if (q.get_den() == 0) throw invalid_parameter("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw invalid_parameter("expected a small integer, got " + to_string(q));
    return q.get_num().get_si();
}

Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return 1;
    if (base == 0 && e < 0) throw invalid_parameter("0 raised to a negative power");
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), a);
    if (e < 0) r = 1 / r;
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_root(const Rational& x, unsigned long n) {
    if (x < 0 || n == 0) return std::nullopt;
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), x.get_num_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), x.get_den_mpz_t(), n)) return std::nullopt;
    return rat(rn, rd);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binom(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer falling(long k, unsigned long i) {
    Integer r = 1;
    for (unsigned long t = 0; t < i; ++t) {
        r *= Integer(k - static_cast<long>(t));
        if (r == 0) return r;
    }
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace stein
