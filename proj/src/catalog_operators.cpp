#include "stein/catalog.hpp"

namespace stein {

namespace {

AssumptionOneForm form_t(const Rational& lc, std::vector<Rational> lparams, const Rational& b,
                         unsigned q, std::vector<Rational> kparams, const Rational& klc = 1) {
    return AssumptionOneForm(EulerPoly::from_t_params(lc, std::move(lparams)), b, q,
                             EulerPoly::from_t_params(klc, std::move(kparams)));
}

} // namespace

AtomOperator stein_operator(const AtomKind& a) {
    validate(a);
    return std::visit(
        [](const auto& v) -> AtomOperator {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) {
                // sigma^2 T_1 + mu M - M^2
                if (v.mu == 0) {
                    auto f = form_t(v.sigma2, {1}, 1, 2, {});
                    return {f, f.expand()};
                }
                ExpandedOp op = v.sigma2 * ExpandedOp::t_factor(1) +
                                v.mu * ExpandedOp::m_power(1) - ExpandedOp::m_power(2);
                return {std::nullopt, op};
            } else if constexpr (std::is_same_v<T, GammaAtom>) {
                auto f = form_t(1, {v.r}, v.lambda, 1, {});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, ExponentialAtom>) {
                auto f = form_t(1, {1}, v.lambda, 1, {});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, ChiSqAtom>) {
                auto f = form_t(1, {v.d / 2}, rat(1, 2), 1, {});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, BetaAtom>) {
                // T_a - M T_{a+b}
                auto f = form_t(1, {v.a}, 1, 1, {v.a + v.b});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, StudentTAtom>) {
                // nu T_1 + M^2 T_{2-nu}
                auto f = form_t(v.nu, {1}, -1, 2, {2 - v.nu});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, InverseGammaAtom>) {
                // beta I + M T_{1-alpha}
                auto f = AssumptionOneForm(EulerPoly(v.beta), -1, 1,
                                           EulerPoly::t_factor(1 - v.alpha));
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, FDistAtom>) {
                // d2 T_{d1/2} + d1 M T_{1-d2/2}
                auto f = form_t(v.d2, {v.d1 / 2}, -v.d1, 1, {1 - v.d2 / 2});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, PRRAtom>) {
                // s T_1 T_2 - M^2 T_{2s}
                auto f = form_t(v.s, {1, 2}, 1, 2, {2 * v.s});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, VGSymAtom>) {
                // sigma^2 T_1 T_r - M^2
                auto f = form_t(v.sigma * v.sigma, {1, v.r}, 1, 2, {});
                return {f, f.expand()};
            } else if constexpr (std::is_same_v<T, VGAtom>) {
                if (v.theta == 0) {
                    auto f = form_t(v.sigma * v.sigma, {1, v.r}, 1, 2, {});
                    return {f, f.expand()};
                }
                // (sigma^2 T_r D + 2 theta T_{r/2} - M) M
                //   = sigma^2 T_1 T_r + 2 theta M T_{r/2+1} - M^2
                Rational s2 = v.sigma * v.sigma;
                ExpandedOp op =
                    s2 * ExpandedOp::compose(ExpandedOp::t_factor(1), ExpandedOp::t_factor(v.r)) +
                    (2 * v.theta) * ExpandedOp::compose(ExpandedOp::m_power(1),
                                                        ExpandedOp::t_factor(v.r / 2 + 1)) -
                    ExpandedOp::m_power(2);
                return {std::nullopt, op};
            } else { // GenGammaAtom
                // T_r - q lambda^q M^q
                auto f = form_t(1, {v.r}, Rational(v.q) * pow_rat(v.lambda, v.q),
                                static_cast<unsigned>(v.q), {});
                return {f, f.expand()};
            }
        },
        a);
}

ExpandedOp pearson_operator(const Rational& a, const Rational& ell, const Rational& d0,
                            const Rational& d1, const Rational& d2) {
    if (d0 == 0 && d1 == 0 && d2 == 0)
        throw invalid_parameter("pearson: denominator polynomial is zero");
    // The building blocks d T_{c/d} are expanded as d*theta + c so that vanishing
    // d's take their scaled limits.
    auto scaled_t = [](const Rational& d, const Rational& c) {
        EulerPoly p = d * EulerPoly::theta() + EulerPoly(c);
        return p.to_expanded();
    };
    if (d0 == 0) {
        // M d2 T_{2-a/d2} + d1 T_{1+ell/d1}
        return ExpandedOp::compose(ExpandedOp::m_power(1), scaled_t(d2, 2 * d2 - a)) +
               scaled_t(d1, d1 + ell);
    }
    // M^2 d2 T_{3-a/d2} + d1 M T_{1+ell/d1} + d0 T_1
    return ExpandedOp::compose(ExpandedOp::m_power(2), scaled_t(d2, 3 * d2 - a)) +
           ExpandedOp::compose(ExpandedOp::m_power(1), scaled_t(d1, d1 + ell)) +
           d0 * ExpandedOp::t_factor(1);
}

ScoreOperator score_operator(const std::vector<Rational>& num, const std::vector<Rational>& den) {
    bool den_zero = true;
    for (const auto& c : den)
        if (c != 0) den_zero = false;
    if (den_zero) throw invalid_parameter("score: denominator is identically zero");
    ExpandedOp op;
    for (std::size_t j = 0; j < den.size(); ++j)
        op = op + ExpandedOp::compose(ExpandedOp::d_power(1),
                                      ExpandedOp::monomial(0, static_cast<int>(j), den[j]));
    for (std::size_t i = 0; i < num.size(); ++i)
        op = op + ExpandedOp::monomial(0, static_cast<int>(i), num[i]);
    ScoreOperator out{op, std::nullopt};
    try {
        out.assumption1 = detect_assumption1(op);
    } catch (const shape_error&) {
        // stays nullopt: the score is not of the two-band shape
    }
    return out;
}

} // namespace stein
