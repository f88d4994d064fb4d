#pragma once

#include <string>

#include "stein/euler_poly.hpp"
#include "stein/expanded_op.hpp"

namespace stein {

// Operator L(theta) - b M^q K(theta) with L, K polynomials in theta = MD.
// Requires q >= 1 and nonzero b, K: a single diagonal band has no genuine M^q
// separation and is rejected at construction.
class AssumptionOneForm {
public:
    AssumptionOneForm(EulerPoly L, Rational b, unsigned q, EulerPoly K);

    const EulerPoly& L() const { return L_; }
    const Rational& b() const { return b_; }
    unsigned q() const { return q_; }
    const EulerPoly& K() const { return K_; }

    ExpandedOp expand() const;
    bool has_factored_views() const {
        return L_.factorization().has_value() && K_.factorization().has_value();
    }

    bool operator==(const AssumptionOneForm& o) const {
        return L_ == o.L_ && b_ == o.b_ && q_ == o.q_ && K_ == o.K_;
    }

    std::string render() const;
    std::string to_json() const;

private:
    EulerPoly L_;
    Rational b_;
    unsigned q_;
    EulerPoly K_;
};

struct DetectResult {
    AssumptionOneForm form;
    // The input equals expand(form) right-multiplied by M^m_power (m_power may
    // be negative: the input was right-multiplied by M^{-m_power} first).
    int m_power;
};

// Groups terms of a nonzero operator by m - d. Exactly two distinct values are
// required; more throws not_assumption_one, one throws degenerate_operator.
DetectResult detect_assumption1(const ExpandedOp& a);

} // namespace stein
