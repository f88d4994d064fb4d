#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/catalog.hpp"
#include "stein/forms.hpp"

namespace stein {

struct TraceStep {
    std::string rule;
    std::vector<std::string> inputs;
    std::string output;
};

// Ordered record of the rules applied while building an operator. Construction
// is deterministic: rebuilding the same expression reproduces the trace.
struct ConstructionTrace {
    std::vector<TraceStep> steps;
    std::string to_json() const;
};

// L'(theta) = prod_{j<k} L(theta + j p), K' likewise, b' = b^k, q' = k p.
AssumptionOneForm raise_power_level(const AssumptionOneForm& a, unsigned k);

// Raises both sides to the lcm of the separation powers, then multiplies:
// L_X L_Y - b_X b_Y M^m K_X K_Y.
AssumptionOneForm product_operator(const AssumptionOneForm& x, const AssumptionOneForm& y);

// Operator for X^gamma: argument scaling theta -> gamma theta on both sides,
// M-power q/gamma (which must be a positive integer).
AssumptionOneForm power_operator(const AssumptionOneForm& a, const Rational& gamma);

// Operator for 1/X: b (-1)^m K(-theta-q) - (-1)^{m+n} lc(L) M^q [(-1)^n L(-theta-q)/lc(L)].
AssumptionOneForm inverse_operator(const AssumptionOneForm& a);

// Operator for a sum of n iid copies: every coefficient must be affine in x;
// constant parts are multiplied by n.
ExpandedOp sum_iid_operator(const ExpandedOp& a, unsigned n);

// Weak operator for the product of two iid variables with common operator
// M - alpha T_a - beta T_b D:
//   (M - alpha^2 T_a^2 - beta^2 T_b^2 T_1 D)(T_{a-1} - beta T_b T_{a+1} D)
//     - 2 alpha^2 beta T_a^2 T_b T_{a+1} D,
// with T_infinity factors (including T_{a +- 1}) replaced by the identity.
ExpandedOp iid_pair_operator(const Rational& alpha, const Rational& beta, const TFactor& a,
                            const TFactor& b);

// Product of independent N(muX, 1) and N(muY, 1):
//   -M D^4 - D^3 + (2M + muX muY I) D^2 + (1 + muX^2 + muY^2) D + muX muY I - M.
ExpandedOp noncentered_normal_product(const Rational& mu_x, const Rational& mu_y);

// Operator for Gamma(r, 1) + mu: T_{r+mu} - mu D - M.
ExpandedOp shifted_gamma_operator(const Rational& r, const Rational& mu);

struct ReduceResult {
    AssumptionOneForm form;
    std::vector<Rational> cancelled; // shared T-parameters removed from both sides
};

// Cancels the multiset intersection of the T-parameters of L and K. Requires
// factored views; empty intersection returns the input unchanged.
ReduceResult reduce_shared_factors(const AssumptionOneForm& a);

struct BuildResult {
    ExpandedOp op;
    std::optional<AssumptionOneForm> form;
    ConstructionTrace trace;
};

// Deterministic bottom-up construction over the expression tree. Products of
// Assumption-1 atoms go through product_operator (folded left to right),
// powers through power_operator / inverse_operator, iid pairs with an
// M - alpha T_a - beta T_b D shaped operator through iid_pair_operator,
// non-iid unit-variance normal pairs through noncentered_normal_product.
// Shared T-factors are cancelled last. Unsupported combinations raise
// unsupported_error naming the blocking subtree.
BuildResult build_for_expression(const DistExpr& e);

} // namespace stein
