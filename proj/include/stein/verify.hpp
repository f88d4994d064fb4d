#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/catalog.hpp"
#include "stein/expanded_op.hpp"

namespace stein {

// sum c_{dm} (k)_d mu_{k+m-d} with (k)_d the falling factorial. Exactly zero
// for a valid Stein operator whenever the needed moments exist; throws
// moment_unavailable naming the first missing index.
MomentValue moment_residual(const ExpandedOp& a, const DistExpr& oracle, long k);

// Forward substitution in the moment recurrence: seeds supply mu_0..mu_m with
// m = max(m-d) - min(m-d) - 1 over nonzero terms; returns mu_{m+1}..mu_{upto}.
// Throws recurrence_breakdown when the leading coefficient vanishes.
std::vector<Rational> derive_moments(const ExpandedOp& a, const std::vector<Rational>& seeds,
                                     long upto);

struct NullSpaceReport {
    long rows = 0;
    long cols = 0;
    std::optional<Rational> determinant; // square systems only
    std::vector<ExpandedOp> basis;       // null-space basis as operators
    bool unique_zero_only() const { return basis.empty(); }
    std::vector<std::vector<Rational>> matrix; // the constraint rows, for reporting

    std::string to_json() const;
};

// Builds the exact constraint matrix from f = x^k, k = 0..rows-1, over unknown
// coefficients c_{dm}, 0 <= d <= max_d_order, 0 <= m <= max_m_degree (columns
// ordered by descending derivative order, then descending M-degree, matching
// how the ansatz is written down). rows defaults to the number of unknowns.
// Exact Gaussian elimination; every basis operator is re-checked to annihilate
// all constraint rows.
NullSpaceReport null_space_search(const DistExpr& oracle, int max_d_order, int max_m_degree,
                                  std::optional<long> rows = std::nullopt);

} // namespace stein
