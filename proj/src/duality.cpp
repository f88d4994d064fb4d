#include "stein/duality.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace stein {

ExpandedOp DensityODE::expand() const {
    ExpandedOp mk = ExpandedOp::compose(ExpandedOp::m_power(static_cast<int>(q)), rhs.to_expanded());
    return lhs.to_expanded() - b * mk;
}

std::string DensityODE::render() const {
    std::ostringstream os;
    os << lhs.render() << " p(x)";
    Rational bb = b;
    os << (bb < 0 ? " + " : " - ");
    if (bb < 0) bb = -bb;
    if (bb != 1) os << to_string(bb) << " ";
    os << "x^" << q << " ";
    if (!(rhs.degree() == 0 && rhs.coeff(0) == 1)) os << rhs.render() << " ";
    os << "p(x) = 0";
    return os.str();
}

namespace {

EulerPoly reflect_signed(const EulerPoly& p, const Rational& shift) {
    int deg = p.degree();
    Rational s = (deg % 2 ? -1 : 1);
    return s * p.reflect_arg(shift);
}

} // namespace

DensityODE dual_ode(const AssumptionOneForm& a) {
    int n = a.L().degree();
    int m = a.K().degree();
    int sign = ((n + m) % 2) ? -1 : 1;
    DensityODE ode{reflect_signed(a.L(), 1), a.b() * sign, a.q(),
                   reflect_signed(a.K(), Rational(static_cast<long>(a.q())) + 1), sign};
    return ode;
}

AssumptionOneForm dual_of(const DensityODE& ode) {
    int n = ode.lhs.degree();
    int m = ode.rhs.degree();
    int sign = ((n + m) % 2) ? -1 : 1;
    return AssumptionOneForm(reflect_signed(ode.lhs, 1), ode.b * sign, ode.q,
                             reflect_signed(ode.rhs, Rational(static_cast<long>(ode.q)) + 1));
}

std::string GParams::render() const {
    std::ostringstream os;
    os << "G^{" << m << "," << n << "}_{" << p << "," << q << "}(" << to_string(prefactor)
       << " x^" << to_string(power) << " | ";
    for (std::size_t i = 0; i < upper.size(); ++i) os << (i ? "," : "") << to_string(upper[i]);
    os << " ; ";
    for (std::size_t i = 0; i < lower.size(); ++i) os << (i ? "," : "") << to_string(lower[i]);
    os << ")";
    return os.str();
}

std::string GParams::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["n"] = n;
    j["p"] = p;
    j["q"] = q;
    j["upper"] = nlohmann::json::array();
    for (const auto& a : upper) j["upper"].push_back(to_string(a));
    j["lower"] = nlohmann::json::array();
    for (const auto& b : lower) j["lower"].push_back(to_string(b));
    j["arg"] = {{"prefactor", to_string(prefactor)}, {"power", to_string(power)}};
    return j.dump();
}

GCandidate gparams_from_ode(const DensityODE& ode, SupportKind support,
                            std::optional<std::pair<int, int>> mn_override) {
    EulerPoly L = ode.lhs;
    EulerPoly K = ode.rhs;
    L.ensure_factorization();
    K.ensure_factorization();
    if (!L.factorization() || !K.factorization())
        throw unsupported_error("gparams_from_ode needs both sides to split into T-factors");
    const Rational q(static_cast<long>(ode.q));
    GCandidate out;
    GParams& g = out.params;
    for (const auto& c : L.factorization()->params) g.lower.push_back(-c / q);
    for (const auto& d : K.factorization()->params) g.upper.push_back(1 - d / q);
    std::sort(g.lower.begin(), g.lower.end());
    std::sort(g.upper.begin(), g.upper.end());
    g.p = static_cast<int>(g.upper.size());
    g.q = static_cast<int>(g.lower.size());
    if (mn_override) {
        g.m = mn_override->first;
        g.n = mn_override->second;
    } else {
        g.m = g.q;
        g.n = (support == SupportKind::Symmetric && g.p > 0) ? g.p : 0;
        out.pinned_selection = true;
    }
    if (g.m > g.q || g.n > g.p) throw invalid_parameter("G orders out of range");
    // fold leading constants into the x^q coefficient and positivize
    Rational b_eff = ode.b * K.factorization()->lc / L.factorization()->lc;
    g.power = q;
    g.prefactor = (b_eff < 0 ? -b_eff : b_eff) / pow_rat(q, g.q - g.p);
    int want = ((g.p - g.m - g.n) % 2 == 0) ? 1 : -1;
    out.sign_consistent = (b_eff < 0 ? -1 : 1) == want;
    return out;
}

DensityODE ode_of_gparams(const GParams& g) {
    // The G-function equation (-1)^{p-m-n} z T_{1-a_1}..T_{1-a_p} f = T_{-b_1}..T_{-b_q} f
    // pulled back through z = prefactor x^power.
    if (!is_integer(g.power) || g.power <= 0)
        throw unsupported_error("ode_of_gparams needs a positive integer argument power");
    Rational q = g.power;
    EulerPoly lhs = EulerPoly::one();
    for (const auto& b : g.lower) lhs = lhs * EulerPoly::t_factor(-b * q);
    EulerPoly rhs = EulerPoly::one();
    for (const auto& a : g.upper) rhs = rhs * EulerPoly::t_factor((1 - a) * q);
    int sign = ((g.p - g.m - g.n) % 2 == 0) ? 1 : -1;
    Rational b = Rational(sign) * g.prefactor * pow_rat(q, static_cast<long>(g.lower.size()) -
                                                               static_cast<long>(g.upper.size()));
    return DensityODE{std::move(lhs), b, static_cast<unsigned>(to_long(q)), std::move(rhs), sign};
}

GIdentityResult g_identities(const GParams& g, GIdentity which, const Rational& c) {
    GIdentityResult out{g, true, 0};
    switch (which) {
        case GIdentity::Shift: {
            for (auto& a : out.params.upper) a += c;
            for (auto& b : out.params.lower) b += c;
            out.emitted_z_power = c;
            return out;
        }
        case GIdentity::Invert: {
            GParams r;
            r.m = g.n;
            r.n = g.m;
            r.p = g.q;
            r.q = g.p;
            for (const auto& b : g.lower) r.upper.push_back(1 - b);
            for (const auto& a : g.upper) r.lower.push_back(1 - a);
            std::sort(r.upper.begin(), r.upper.end());
            std::sort(r.lower.begin(), r.lower.end());
            if (g.prefactor == 0) throw invalid_parameter("zero prefactor");
            r.prefactor = 1 / g.prefactor;
            r.power = -g.power;
            out.params = std::move(r);
            return out;
        }
        case GIdentity::Reduce: {
            // an upper parameter in positions n+1..p equal to a lower parameter
            // in positions 1..m cancels
            for (int i = g.n; i < g.p; ++i) {
                for (int j = 0; j < g.m; ++j) {
                    if (g.upper[static_cast<std::size_t>(i)] == g.lower[static_cast<std::size_t>(j)]) {
                        GParams r = g;
                        r.upper.erase(r.upper.begin() + i);
                        r.lower.erase(r.lower.begin() + j);
                        r.p -= 1;
                        r.q -= 1;
                        r.m -= 1;
                        out.params = std::move(r);
                        return out;
                    }
                }
            }
            out.applied = false;
            return out;
        }
    }
    return out;
}

GammaProductExpr g_mellin(const GParams& g, SupportKind support, bool override_validity) {
    bool valid = g.n == 0 && g.p + 1 >= 1 && g.p + 1 <= g.m && g.m <= g.q && g.prefactor > 0 &&
                 g.power > 0;
    if (!valid && !override_validity)
        throw unsupported_error("integration formula conditions violated for " + g.render() +
                                " (require n = 0, 1 <= p+1 <= m <= q, positive argument)");
    // int_0^inf x^{s-1} G(alpha x^gamma) dx
    //   = (alpha^{-s/gamma} / gamma) prod_{j<=m} Gamma(b_j + s/gamma)
    //     prod_{j<=n} Gamma(1 - a_j - s/gamma)
    //     / [ prod_{j>m} Gamma(1 - b_j - s/gamma) prod_{j>n} Gamma(a_j + s/gamma) ]
    Rational ig = 1 / g.power;
    using Gp = GammaProductExpr;
    Gp out = Gp::from_rational(support == SupportKind::Symmetric ? 2 * ig : ig);
    out = out * Gp::power_factor(g.prefactor < 0 ? -g.prefactor : g.prefactor, {-ig, 0});
    for (int j = 0; j < g.m; ++j)
        out = out * Gp::gamma_factor({ig, g.lower[static_cast<std::size_t>(j)]});
    for (int j = g.m; j < g.q; ++j)
        out = out * Gp::gamma_factor({-ig, 1 - g.lower[static_cast<std::size_t>(j)]}, -1);
    for (int j = 0; j < g.n; ++j)
        out = out * Gp::gamma_factor({-ig, 1 - g.upper[static_cast<std::size_t>(j)]});
    for (int j = g.n; j < g.p; ++j)
        out = out * Gp::gamma_factor({ig, g.upper[static_cast<std::size_t>(j)]}, -1);
    return out;
}

GammaProductExpr g_density_mellin(const GParams& g, SupportKind support, bool override_validity) {
    GammaProductExpr full = g_mellin(g, support, override_validity);
    return full * full.at(1).inverse();
}

} // namespace stein
