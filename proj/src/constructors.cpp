#include "stein/constructors.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

namespace stein {

std::string ConstructionTrace::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : steps)
        j.push_back({{"rule", s.rule}, {"inputs", s.inputs}, {"output", s.output}});
    return j.dump();
}

AssumptionOneForm raise_power_level(const AssumptionOneForm& a, unsigned k) {
    if (k == 0) throw invalid_parameter("power level must be raised by k >= 1");
    if (k == 1) return a;
    const Rational p(static_cast<long>(a.q()));
    EulerPoly L = EulerPoly::one(), K = EulerPoly::one();
    for (unsigned j = 0; j < k; ++j) {
        L = L * a.L().shift_arg(Rational(j) * p);
        K = K * a.K().shift_arg(Rational(j) * p);
    }
    return AssumptionOneForm(std::move(L), pow_rat(a.b(), static_cast<long>(k)), a.q() * k,
                             std::move(K));
}

AssumptionOneForm product_operator(const AssumptionOneForm& x, const AssumptionOneForm& y) {
    unsigned m = static_cast<unsigned>(std::lcm(x.q(), y.q()));
    AssumptionOneForm xr = raise_power_level(x, m / x.q());
    AssumptionOneForm yr = raise_power_level(y, m / y.q());
    return AssumptionOneForm(xr.L() * yr.L(), xr.b() * yr.b(), m, xr.K() * yr.K());
}

AssumptionOneForm power_operator(const AssumptionOneForm& a, const Rational& gamma) {
    if (gamma == 0) throw invalid_parameter("power exponent must be nonzero");
    if (gamma == 1) return a;
    Rational qg = Rational(static_cast<long>(a.q())) / gamma;
    if (!is_integer(qg) || qg <= 0)
        throw unsupported_error("power " + to_string(gamma) + " does not divide the M-power " +
                                std::to_string(a.q()) + " into a positive integer");
    return AssumptionOneForm(a.L().scale_arg(gamma), a.b(), static_cast<unsigned>(to_long(qg)),
                             a.K().scale_arg(gamma));
}

AssumptionOneForm inverse_operator(const AssumptionOneForm& a) {
    const int n = a.L().degree();
    const int m = a.K().degree();
    const Rational q(static_cast<long>(a.q()));
    const Rational lcL = a.L().leading();
    Rational sm = (m % 2 ? -1 : 1);
    Rational sn = (n % 2 ? -1 : 1);
    EulerPoly L = (sm * a.b()) * a.K().reflect_arg(q);
    EulerPoly K = (sn / lcL) * a.L().reflect_arg(q);
    Rational b = sm * sn * lcL;
    return AssumptionOneForm(std::move(L), b, a.q(), std::move(K));
}

ExpandedOp sum_iid_operator(const ExpandedOp& a, unsigned n) {
    if (n == 0) throw invalid_parameter("sum of zero copies");
    ExpandedOp out;
    for (const auto& [k, c] : a.terms()) {
        if (k.m > 1)
            throw shape_error("coefficient of D^" + std::to_string(k.d) +
                              " is not affine in x (M-degree " + std::to_string(k.m) + ")");
        out.set(k.d, k.m, k.m == 0 ? Rational(n) * c : c);
    }
    return out;
}

namespace {

ExpandedOp t_or_identity(const TFactor& t) {
    return t.is_identity() ? ExpandedOp::identity() : ExpandedOp::t_factor(*t.r);
}

ExpandedOp t_shifted(const TFactor& t, long delta) {
    return t.is_identity() ? ExpandedOp::identity() : ExpandedOp::t_factor(*t.r + delta);
}

} // namespace

ExpandedOp iid_pair_operator(const Rational& alpha, const Rational& beta, const TFactor& a,
                            const TFactor& b) {
    if (alpha == 0 && beta == 0) throw degenerate_operator("alpha = beta = 0");
    using Op = ExpandedOp;
    Op Ta = t_or_identity(a);
    Op Tb = t_or_identity(b);
    Op Ta1 = t_shifted(a, 1);
    Op Tam1 = t_shifted(a, -1);
    Op D = Op::d_power(1);
    Op Ta2 = Op::compose(Ta, Ta);
    Op first = Op::m_power(1) - (alpha * alpha) * Ta2 -
               (beta * beta) * Op::compose(Op::compose(Op::compose(Tb, Tb), Op::t_factor(1)), D);
    Op mid = Tam1 - beta * Op::compose(Op::compose(Tb, Ta1), D);
    Op last = (2 * alpha * alpha * beta) *
              Op::compose(Op::compose(Op::compose(Ta2, Tb), Ta1), D);
    return Op::compose(first, mid) - last;
}

ExpandedOp noncentered_normal_product(const Rational& mu_x, const Rational& mu_y) {
    using Op = ExpandedOp;
    Op out = Rational(-1) * Op::monomial(4, 1, 1); // -M D^4
    out = out - Op::d_power(3);
    out = out + Op::compose(Rational(2) * Op::m_power(1) + mu_x * mu_y * Op::identity(),
                            Op::d_power(2));
    out = out + (1 + mu_x * mu_x + mu_y * mu_y) * Op::d_power(1);
    out = out + mu_x * mu_y * Op::identity() - Op::m_power(1);
    return out;
}

ExpandedOp shifted_gamma_operator(const Rational& r, const Rational& mu) {
    if (r <= 0) throw invalid_parameter("shifted gamma: r > 0");
    return ExpandedOp::t_factor(r + mu) - mu * ExpandedOp::d_power(1) - ExpandedOp::m_power(1);
}

ReduceResult reduce_shared_factors(const AssumptionOneForm& a) {
    if (!a.has_factored_views())
        throw unsupported_error("reduce_shared_factors needs factored views of L and K");
    std::vector<Rational> lp = a.L().factorization()->params;
    std::vector<Rational> kp = a.K().factorization()->params;
    std::vector<Rational> shared;
    for (const auto& r : lp) {
        auto it = std::find(kp.begin(), kp.end(), r);
        if (it != kp.end()) {
            shared.push_back(r);
            kp.erase(it);
        }
    }
    if (shared.empty()) return {a, {}};
    std::vector<Rational> lp2;
    {
        std::vector<Rational> rem = shared;
        for (const auto& r : lp) {
            auto it = std::find(rem.begin(), rem.end(), r);
            if (it != rem.end()) rem.erase(it);
            else lp2.push_back(r);
        }
    }
    AssumptionOneForm reduced(EulerPoly::from_t_params(a.L().factorization()->lc, lp2), a.b(),
                              a.q(), EulerPoly::from_t_params(a.K().factorization()->lc, kp));
    return {std::move(reduced), std::move(shared)};
}

} // namespace stein
