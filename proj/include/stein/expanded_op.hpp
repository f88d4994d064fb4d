#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "stein/rational.hpp"

namespace stein {

// Monomial M^m D^d; d is the derivative order, m the multiplication degree.
struct MonoKey {
    int d = 0;
    int m = 0;
    auto operator<=>(const MonoKey&) const = default;
};

// Canonical sparse normal form sum c_{dm} M^m D^d of a polynomial differential
// operator. No stored coefficient is zero; the zero operator is the empty map.
// Two operators are equal iff their maps are equal.
class ExpandedOp {
public:
    using Terms = std::map<MonoKey, Rational>;

    ExpandedOp() = default;

    static ExpandedOp zero() { return {}; }
    static ExpandedOp identity() { return monomial(0, 0, 1); }
    static ExpandedOp m_power(int m) { return monomial(0, m, 1); }
    static ExpandedOp d_power(int d) { return monomial(d, 0, 1); }
    static ExpandedOp monomial(int d, int m, const Rational& c);
    static ExpandedOp t_factor(const Rational& r); // MD + rI

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coeff(int d, int m) const;
    void set(int d, int m, const Rational& c); // erases on zero

    int order() const;  // max derivative order, -1 for zero operator
    int degree() const; // max M-degree, -1 for zero operator
    std::set<int> diag_offsets() const; // distinct m - d over nonzero terms

    friend ExpandedOp operator+(const ExpandedOp& a, const ExpandedOp& b);
    friend ExpandedOp operator-(const ExpandedOp& a, const ExpandedOp& b);
    friend ExpandedOp operator*(const Rational& c, const ExpandedOp& a);
    bool operator==(const ExpandedOp&) const = default;

    // Normal-form composition a after b (apply b first). Normalization uses
    // D^a M^b = sum_t t! C(a,t) C(b,t) M^{b-t} D^{a-t}.
    static ExpandedOp compose(const ExpandedOp& a, const ExpandedOp& b);
    static ExpandedOp compose_pow(const ExpandedOp& a, unsigned n);

    // Operator for c X given an operator for X: c_{dm} -> c_{dm} c^{d-m}.
    ExpandedOp tau_scale(const Rational& c) const;

    // Integer-primitive multiple with the first nonzero coefficient (in key
    // order) positive. Used when equality is asserted up to documented rescale.
    ExpandedOp primitive() const;

    // If a == s*b for a scalar s != 0, returns s.
    static std::optional<Rational> scale_between(const ExpandedOp& a, const ExpandedOp& b);

    std::string render() const;
    std::string to_json() const;
    static ExpandedOp from_json(const std::string& text);

private:
    Terms terms_;
};

} // namespace stein
