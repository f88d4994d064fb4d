#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stein/rational.hpp"
#include "stein/real.hpp"

namespace stein {

// a*s + b with rational coefficients.
struct AffineQ {
    Rational a, b;
    bool operator==(const AffineQ& o) const { return a == o.a && b == o.b; }
    bool operator<(const AffineQ& o) const { return a < o.a || (a == o.a && b < o.b); }
    Rational eval(const Rational& s) const { return a * s + b; }
    // substitute s -> u*s + v
    AffineQ subst(const Rational& u, const Rational& v) const { return {a * u, a * v + b}; }
    std::string render() const;
};

// Product of gamma factors, prime powers with affine exponents, a power of pi,
// monic affine polynomial factors and a sign:
//
//   sign * pi^e * prod_p p^(a_p s + b_p) * prod (s + c)^k * prod Gamma(e s + f)^k
//
// Kept canonical: rational constants are folded into the prime map, gamma
// factors at positive integer and half-integer constant arguments are folded
// into rationals and powers of pi, zero exponents are dropped.
class GammaProductExpr {
public:
    GammaProductExpr() = default; // the constant 1

    static GammaProductExpr from_rational(const Rational& q);
    static GammaProductExpr gamma_factor(const AffineQ& arg, long power = 1);
    static GammaProductExpr power_factor(const Rational& base, const AffineQ& exponent);
    static GammaProductExpr pi_power(const Rational& e);
    static GammaProductExpr affine_factor(const AffineQ& arg, long power = 1);

    GammaProductExpr operator*(const GammaProductExpr& o) const;
    GammaProductExpr inverse() const;
    GammaProductExpr pow(long k) const;
    bool operator==(const GammaProductExpr&) const = default;

    // substitute s -> u*s + v
    GammaProductExpr subst(const Rational& u, const Rational& v) const;
    // the constant expression obtained by pinning s (used for normalizations)
    GammaProductExpr at(const Rational& s) const { return subst(0, s); }

    int sign() const { return sign_; }
    const Rational& pi_exponent() const { return pi_exp_; }
    const std::map<Integer, AffineQ>& prime_powers() const { return primes_; }
    const std::map<Rational, long>& affine_factors() const { return affines_; }
    const std::map<AffineQ, long>& gamma_factors() const { return gammas_; }

    struct Eval {
        bool valid = false;   // false when a gamma argument was non-positive
        bool zero = false;    // an affine factor vanished at the probe
        int sign = 1;
        Real log_abs;         // log |value| when valid and nonzero
        std::string note;
    };
    Eval eval_log(const Rational& s) const;

    std::string render() const;
    std::string to_json() const;

private:
    void mul_rational(const Rational& q);
    void add_prime_exp(const Integer& p, const AffineQ& e);
    void add_gamma(const AffineQ& arg, long k);
    void add_affine(const AffineQ& arg, long k);
    void cleanup();

    int sign_ = 1;
    Rational pi_exp_ = 0;
    std::map<Integer, AffineQ> primes_;
    std::map<Rational, long> affines_; // monic: (s + c)^k
    std::map<AffineQ, long> gammas_;
};

enum class GammaEquality { StructurallyEqual, NumericallyEqual, Different };

struct GammaEqualityReport {
    GammaEquality verdict;
    std::vector<std::string> skipped_probes;
    std::string detail;
};

// Structural comparison first; on mismatch, numeric comparison of logs at the
// probe points (relative tolerance 1e-9). Probes where either side hits a
// non-positive gamma argument are skipped and reported.
GammaEqualityReport gamma_expr_equal(const GammaProductExpr& x, const GammaProductExpr& y,
                                     const std::vector<Rational>& probes = {rat(1, 2), rat(1),
                                                                            rat(7, 3), rat(4)});

} // namespace stein
