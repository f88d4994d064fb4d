#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/expanded_op.hpp"
#include "stein/rational.hpp"

namespace stein {

// T_r = MD + rI, or the scaled r -> infinity limit, which acts as the identity.
struct TFactor {
    std::optional<Rational> r; // nullopt = Identity (T_infinity)

    static TFactor finite(const Rational& v) { return TFactor{v}; }
    static TFactor infinite() { return TFactor{std::nullopt}; }
    bool is_identity() const { return !r.has_value(); }
};

// lc * prod_i (theta + params[i]); an empty product is the constant lc.
struct TFactorization {
    Rational lc;
    std::vector<Rational> params; // sorted

    std::string render() const;
};

// Univariate polynomial in the Euler operator theta = MD. The coefficient list
// has no trailing zeros; the zero polynomial is the empty list. A factored view
// is carried whenever it is known (constructed from factors, or recovered by
// rational-root factorization); polynomials that do not split over Q keep only
// the coefficient form.
class EulerPoly {
public:
    EulerPoly() = default;
    explicit EulerPoly(const Rational& c);
    explicit EulerPoly(std::vector<Rational> coeffs);

    static EulerPoly zero() { return {}; }
    static EulerPoly one() { return EulerPoly(Rational(1)); }
    static EulerPoly theta();
    static EulerPoly t_factor(const Rational& r); // theta + r
    static EulerPoly from_t_params(const Rational& lc, std::vector<Rational> params);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational leading() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    friend EulerPoly operator+(const EulerPoly& a, const EulerPoly& b);
    friend EulerPoly operator*(const EulerPoly& a, const EulerPoly& b);
    friend EulerPoly operator*(const Rational& c, const EulerPoly& a);
    bool operator==(const EulerPoly& o) const { return c_ == o.c_; }

    EulerPoly shift_arg(const Rational& c) const;       // p(theta + c)
    EulerPoly scale_arg(const Rational& g) const;       // p(g * theta)
    EulerPoly reflect_arg(const Rational& c) const;     // p(-theta - c)

    // Factored view as T-factors; present only when the polynomial splits over
    // the rationals.
    const std::optional<TFactorization>& factorization() const { return fac_; }
    void ensure_factorization(); // attempts rational-root factorization

    ExpandedOp to_expanded() const; // theta^n = sum_k S(n,k) M^k D^k

    std::string render() const;

private:
    void trim();
    std::vector<Rational> c_;
    std::optional<TFactorization> fac_;
};

// Inverse of EulerPoly::to_expanded on diagonal operators: input must have
// every term with equal M-degree and D-order, else shape_error.
EulerPoly expanded_group_to_euler(const ExpandedOp& diag);

} // namespace stein
