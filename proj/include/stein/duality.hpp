#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/catalog.hpp"
#include "stein/forms.hpp"
#include "stein/gamma_product.hpp"

namespace stein {

// Differential equation lhs(theta) p(x) - b x^q rhs(theta) p(x) = 0 satisfied
// by the density p, obtained from a Stein operator by integration by parts.
// sign_mn records the (-1)^{deg L + deg K} factor folded into b.
struct DensityODE {
    EulerPoly lhs;
    Rational b;
    unsigned q;
    EulerPoly rhs;
    int sign_mn;

    ExpandedOp expand() const;
    std::string render() const;
};

// L(theta) -> (-1)^{deg L} L(-theta-1), K(theta) -> (-1)^{deg K} K(-theta-q-1).
DensityODE dual_ode(const AssumptionOneForm& a);

// The same reflection applied to an ODE; dual_ode(dual_of(ode)) is the identity
// and dual_of(dual_ode(a)) reproduces a.
AssumptionOneForm dual_of(const DensityODE& ode);

// Meijer G parameter record for G^{m,n}_{p,q}(prefactor * x^power | upper; lower).
struct GParams {
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<Rational> upper, lower;
    Rational prefactor = 1;
    Rational power = 1;

    bool operator==(const GParams&) const = default;
    std::string render() const;
    std::string to_json() const;
};

struct GCandidate {
    GParams params;
    // True when the meidiffeqn sign (-1)^{p-m-n} matches the sign of the ODE's
    // x^q coefficient under the chosen (m, n); otherwise the candidate needs
    // Mellin confirmation with a sign caveat.
    bool sign_consistent = true;
    // True for the two selections pinned by the worked examples (one-sided
    // products and two-sided Student-type products); every other case is a
    // candidate requiring Mellin confirmation.
    bool pinned_selection = false;
};

// Solves the ODE by matching the G-function differential equation: upper
// parameters (a_j - 1)/q, lower parameters (r_i - 1)/q, argument
// (|b|/q^{n-m}) x^q. The (m, n) orders default to (#lower, 0) for one-sided
// support and (#lower, #upper) for two-sided support; override to force a
// different fundamental-system member.
GCandidate gparams_from_ode(const DensityODE& ode, SupportKind support,
                            std::optional<std::pair<int, int>> mn_override = std::nullopt);

// Reconstruction of the ODE a GParams record solves; used as the symbolic
// sanity check of gparams_from_ode.
DensityODE ode_of_gparams(const GParams& g);

enum class GIdentity { Reduce, Shift, Invert };

struct GIdentityResult {
    GParams params;
    bool applied = true;       // Reduce with no matching pair flags false
    Rational emitted_z_power;  // Shift(c): z^c G_old(z|a;b) = G_new(z|a+c;b+c)
};

GIdentityResult g_identities(const GParams& g, GIdentity which, const Rational& c = 0);

// Mellin transform of x -> G(prefactor x^power | params) on (0, inf), doubled
// for symmetric support. Validity requires n = 0, 1 <= p+1 <= m <= q, positive
// prefactor and power, unless overridden.
GammaProductExpr g_mellin(const GParams& g, SupportKind support, bool override_validity = false);

// Mellin transform of the normalized density candidate C G(...), with C fixed
// by total mass one: g_mellin(s) / g_mellin(1).
GammaProductExpr g_density_mellin(const GParams& g, SupportKind support,
                                  bool override_validity = false);

} // namespace stein
