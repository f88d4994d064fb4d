#include <doctest.h>

#include <random>

#include "stein/constructors.hpp"
#include "stein/parser.hpp"
#include "stein/verify.hpp"

using namespace stein;

namespace {

ExpandedOp T(const Rational& r) { return ExpandedOp::t_factor(r); }
ExpandedOp M(int k = 1) { return ExpandedOp::m_power(k); }
ExpandedOp D(int k = 1) { return ExpandedOp::d_power(k); }
ExpandedOp C(const ExpandedOp& a, const ExpandedOp& b) { return ExpandedOp::compose(a, b); }

ExpandedOp t_product(std::initializer_list<Rational> rs) {
    ExpandedOp out = ExpandedOp::identity();
    for (const auto& r : rs) out = C(out, T(r));
    return out;
}

AssumptionOneForm form_of(const AtomKind& a) {
    auto op = stein_operator(a);
    REQUIRE(op.form.has_value());
    return *op.form;
}

void zero_residuals(const ExpandedOp& op, const DistExpr& oracle, long kmax = 12) {
    long checked = 0;
    for (long k = 0; k <= kmax; ++k) {
        try {
            MomentValue r = moment_residual(op, oracle, k);
            if (r.is_exact()) {
                CHECK(r.exact_value() == 0);
                ++checked;
            }
        } catch (const moment_unavailable&) {
        }
    }
    CHECK(checked > 0);
}

} // namespace

TEST_CASE("raise_power_level") {
    AssumptionOneForm g = form_of(GammaAtom{rat(5, 2), 3});
    AssumptionOneForm g2 = raise_power_level(g, 2);
    CHECK(g2.expand() == t_product({rat(5, 2), rat(7, 2)}) - Rational(9) * M(2));
    CHECK(raise_power_level(g, 1) == g);
    zero_residuals(g2.expand(), DistExpr::atom(GammaAtom{rat(5, 2), 3}));

    // Normal(0,1), p = 2, k = 3 -> T_1 T_3 T_5 - M^6
    AssumptionOneForm n3 = raise_power_level(form_of(NormalAtom{0, 1}), 3);
    CHECK(n3.expand() == t_product({1, 3, 5}) - M(6));
    zero_residuals(n3.expand(), DistExpr::atom(NormalAtom{0, 1}));

    CHECK_THROWS_AS(raise_power_level(g, 0), invalid_parameter);
}

TEST_CASE("product operator: gamma and normal families") {
    Rational r1 = rat(5, 2), l1 = 3, r2 = rat(1, 3), l2 = rat(7, 2);
    // gammas: T_{r1} T_{r2} - l1 l2 M
    AssumptionOneForm gg = product_operator(form_of(GammaAtom{r1, l1}), form_of(GammaAtom{r2, l2}));
    CHECK(gg.expand() == t_product({r1, r2}) - (l1 * l2) * M());

    // centered normals: s1^2 s2^2 T_1^2 - M^2
    Rational s1 = rat(9, 4), s2 = rat(1, 4); // the sigma^2 parameters
    AssumptionOneForm nn = product_operator(form_of(NormalAtom{0, s1}), form_of(NormalAtom{0, s2}));
    CHECK(nn.expand() == (s1 * s2) * t_product({1, 1}) - M(2));

    // mixed: sigma^2 T_1 T_r T_{r+1} - lambda^2 M^2 (lcm of the separations is 2)
    AssumptionOneForm ng = product_operator(form_of(NormalAtom{0, s1}), form_of(GammaAtom{r1, l1}));
    CHECK(ng.expand() == s1 * t_product({1, r1, r1 + 1}) - (l1 * l1) * M(2));
    zero_residuals(ng.expand(),
                   DistExpr::product({DistExpr::atom(NormalAtom{0, s1}), DistExpr::atom(GammaAtom{r1, l1})}));
}

TEST_CASE("product operator: Student and VG families") {
    Rational nu1 = 9, nu2 = 11;
    AssumptionOneForm tt = product_operator(form_of(StudentTAtom{nu1}), form_of(StudentTAtom{nu2}));
    CHECK(tt.expand() == (nu1 * nu2) * t_product({1, 1}) - C(M(2), t_product({2 - nu1, 2 - nu2})));
    zero_residuals(tt.expand(),
                   DistExpr::product({DistExpr::atom(StudentTAtom{nu1}), DistExpr::atom(StudentTAtom{nu2})}), 6);

    Rational r1 = 3, s1 = 2, r2 = rat(7, 2), s2 = 1;
    AssumptionOneForm vv = product_operator(form_of(VGSymAtom{r1, s1}), form_of(VGSymAtom{r2, s2}));
    CHECK(vv.expand() == (s1 * s1 * s2 * s2) * t_product({1, 1, r1, r2}) - M(2));
    zero_residuals(vv.expand(),
                   DistExpr::product({DistExpr::atom(VGSymAtom{r1, s1}), DistExpr::atom(VGSymAtom{r2, s2})}));

    // mixed Student x VG: nu sigma^2 T_1^2 T_r - (-1)^1 M^2 T_{2-nu}
    AssumptionOneForm tv = product_operator(form_of(StudentTAtom{nu1}), form_of(VGSymAtom{r1, s1}));
    CHECK(tv.expand() == (nu1 * s1 * s1) * t_product({1, 1, r1}) + C(M(2), T(2 - nu1)));
}

TEST_CASE("product operator is symmetric") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    std::uniform_int_distribution<int> qd(1, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    int done = 0;
    while (done < 100) {
        auto rnd_poly = [&]() {
            std::vector<Rational> c;
            for (int i = 0, n = deg(rng); i <= n; ++i) c.push_back(rat(num(rng), den(rng)));
            return EulerPoly(c);
        };
        EulerPoly lx = rnd_poly(), kx = rnd_poly(), ly = rnd_poly(), ky = rnd_poly();
        Rational bx = rat(num(rng), den(rng)), by = rat(num(rng), den(rng));
        if (lx.is_zero() || kx.is_zero() || ly.is_zero() || ky.is_zero() || bx == 0 || by == 0)
            continue;
        AssumptionOneForm x(lx, bx, static_cast<unsigned>(qd(rng)), kx);
        AssumptionOneForm y(ly, by, static_cast<unsigned>(qd(rng)), ky);
        CHECK(product_operator(x, y).expand() == product_operator(y, x).expand());
        ++done;
    }
}

TEST_CASE("power operator") {
    // chi^2_1 from the standard normal: T_1 - M^2 -> 2 T_{1/2} - M
    AssumptionOneForm chi1 = power_operator(form_of(NormalAtom{0, 1}), 2);
    CHECK(chi1.expand() == Rational(2) * T(rat(1, 2)) - M());
    auto s = ExpandedOp::scale_between(chi1.expand(), stein_operator(ChiSqAtom{1}).op);
    REQUIRE(s.has_value());
    CHECK(*s == 2);

    AssumptionOneForm g = form_of(GammaAtom{rat(5, 2), 3});
    CHECK(power_operator(g, 1) == g);
    CHECK_THROWS_AS(power_operator(g, 2), unsupported_error); // 1/2 is not an integer

    // round trip: power then inverse power is the identity on forms
    AssumptionOneForm n = form_of(NormalAtom{0, 1});
    AssumptionOneForm back = power_operator(power_operator(n, 2), rat(1, 2));
    CHECK(back == n);
}

TEST_CASE("inverse operator") {
    // Beta(a,b) -> T_{1-a-b} - M T_{1-a}
    Rational a = 2, b = rat(3, 2);
    AssumptionOneForm ib = inverse_operator(form_of(BetaAtom{a, b}));
    CHECK(ib.expand() == T(1 - a - b) - C(M(), T(1 - a)));

    // Gamma(r, lambda) -> lambda I + M T_{1-r}
    Rational r = rat(5, 2), lam = 3;
    AssumptionOneForm ig = inverse_operator(form_of(GammaAtom{r, lam}));
    CHECK(ig.expand() == lam * ExpandedOp::identity() + C(M(), T(1 - r)));
    // which is the InverseGamma(r, lambda) table row
    CHECK(ig.expand() == stein_operator(InverseGammaAtom{r, lam}).op);
    zero_residuals(ig.expand(), DistExpr::atom(InverseGammaAtom{r, lam}), 1);

    // standard normal -> I + M^2 T_1
    AssumptionOneForm in = inverse_operator(form_of(NormalAtom{0, 1}));
    CHECK(in.expand() == ExpandedOp::identity() + C(M(2), T(1)));

    // involution up to the documented sign bookkeeping: double inverse restores
    // the expansion up to scale
    AssumptionOneForm twice = inverse_operator(inverse_operator(form_of(BetaAtom{a, b})));
    CHECK(ExpandedOp::scale_between(twice.expand(), form_of(BetaAtom{a, b}).expand()).has_value());
}

TEST_CASE("inverse and power round trips on random factored forms") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    std::uniform_int_distribution<int> cnt(0, 3);
    std::uniform_int_distribution<int> qd(1, 3);
    int done = 0;
    while (done < 100) {
        auto rnd_t = [&](int n) {
            std::vector<Rational> ps;
            for (int i = 0; i < n; ++i) ps.push_back(rat(num(rng), den(rng)));
            return ps;
        };
        Rational lc = rat(num(rng), den(rng));
        Rational b = rat(num(rng), den(rng));
        if (lc == 0 || b == 0) continue;
        int nl = cnt(rng), nk = cnt(rng);
        if (nl == 0 && nk == 0) continue;
        unsigned q = static_cast<unsigned>(qd(rng));
        AssumptionOneForm f(EulerPoly::from_t_params(lc, rnd_t(nl)), b, q,
                            EulerPoly::from_t_params(1, rnd_t(nk)));
        // inverse of inverse = original up to scale
        auto s = ExpandedOp::scale_between(inverse_operator(inverse_operator(f)).expand(), f.expand());
        CHECK(s.has_value());
        // power round trip through gamma = q (always divides)
        AssumptionOneForm pw = power_operator(f, Rational(static_cast<long>(q)));
        AssumptionOneForm back = power_operator(pw, Rational(1) / Rational(static_cast<long>(q)));
        CHECK(back.expand() == f.expand());
        ++done;
    }
}

TEST_CASE("sum of iid copies") {
    // chi^2_1 summed d times: T_{1/2} - M/2 -> T_{d/2} - M/2
    ExpandedOp chi1 = T(rat(1, 2)) - rat(1, 2) * M();
    CHECK(sum_iid_operator(chi1, 5) == T(rat(5, 2)) - rat(1, 2) * M());
    CHECK(sum_iid_operator(chi1, 1) == chi1);

    // the normal-pair operator summed r times
    Rational mu = 1;
    long rr = 3;
    ExpandedOp pair = iid_pair_operator(mu, 1, TFactor::infinite(), TFactor::infinite());
    ExpandedOp summed = sum_iid_operator(pair, static_cast<unsigned>(rr));
    ExpandedOp want = C(M(), D(3)) + C(Rational(rr) * ExpandedOp::identity() - M(), D(2)) -
                      C(M() + (rr * (1 + mu * mu)) * ExpandedOp::identity(), D()) + M() -
                      (rr * mu * mu) * ExpandedOp::identity();
    CHECK(summed == want);

    CHECK_THROWS_AS(sum_iid_operator(M(2) - T(1), 2), shape_error);
}

TEST_CASE("iid pair: equal-mean normal pair") {
    Rational mu = rat(3, 2);
    ExpandedOp op = iid_pair_operator(mu, 1, TFactor::infinite(), TFactor::infinite());
    ExpandedOp want = C(M(), D(3)) + C(ExpandedOp::identity() - M(), D(2)) -
                      C(M() + (1 + mu * mu) * ExpandedOp::identity(), D()) + M() -
                      (mu * mu) * ExpandedOp::identity();
    CHECK(op == want);
    DistExpr n = DistExpr::atom(NormalAtom{mu, 1});
    zero_residuals(op, DistExpr::product({n, n}), 10);
    CHECK_THROWS_AS(iid_pair_operator(0, 0, TFactor::finite(1), TFactor::infinite()),
                    degenerate_operator);
}

TEST_CASE("iid pair: shifted gamma pair") {
    Rational r = 2, mu = 3;
    ExpandedOp op = iid_pair_operator(1, -mu, TFactor::finite(r + mu), TFactor::infinite());
    ExpandedOp first = M() - C(T(r + mu), T(r + mu)) - (mu * mu) * C(T(1), D());
    ExpandedOp mid = T(r + mu - 1) + mu * C(T(r + mu + 1), D());
    ExpandedOp last = (2 * mu) * C(C(t_product({r + mu, r + mu}), T(r + mu + 1)), D());
    CHECK(op == C(first, mid) + last);
    DistExpr sg = DistExpr::shift(DistExpr::atom(GammaAtom{r, 1}), mu);
    zero_residuals(op, DistExpr::product({sg, sg}), 10);

    // mu = 0 reduces to (M - T_r^2) T_{r-1}
    ExpandedOp zero_mu = iid_pair_operator(1, 0, TFactor::finite(r), TFactor::infinite());
    CHECK(zero_mu == C(M() - t_product({r, r}), T(r - 1)));
}

TEST_CASE("iid pair: VG pair") {
    Rational rr = 3, theta = rat(1, 2), sigma = 2;
    Rational s2 = sigma * sigma;
    ExpandedOp op = iid_pair_operator(2 * theta, s2, TFactor::finite(rr / 2), TFactor::finite(rr));
    ExpandedOp first = M() - (4 * theta * theta) * t_product({rr / 2, rr / 2}) -
                       (s2 * s2) * C(t_product({rr, rr, 1}), D());
    ExpandedOp mid = T(rr / 2 - 1) - s2 * C(t_product({rr, rr / 2 + 1}), D());
    ExpandedOp last = (8 * theta * theta * s2) * C(t_product({rr / 2, rr / 2, rr, rr / 2 + 1}), D());
    CHECK(op == C(first, mid) - last);
    DistExpr vg = DistExpr::atom(VGAtom{rr, theta, sigma});
    zero_residuals(op, DistExpr::product({vg, vg}), 10);
}

TEST_CASE("iid pair with mu, 1, infinity factors through the product-normal operator") {
    // with equal means the pair operator factors through the product-normal one
    ExpandedOp lhs = iid_pair_operator(0, 1, TFactor::infinite(), TFactor::infinite());
    ExpandedOp pn = C(M(), D(2)) + D() - M(); // x g'' + g' - x g
    CHECK(lhs == C(pn, D() - ExpandedOp::identity()));
}

TEST_CASE("noncentered normal product") {
    Rational mx = 1, my = 2;
    ExpandedOp op = noncentered_normal_product(mx, my);
    ExpandedOp want = Rational(-1) * C(M(), D(4)) - D(3) +
                      C(Rational(2) * M() + (mx * my) * ExpandedOp::identity(), D(2)) +
                      (1 + mx * mx + my * my) * D() + (mx * my) * ExpandedOp::identity() - M();
    CHECK(op == want);
    zero_residuals(op, DistExpr::product({DistExpr::atom(NormalAtom{mx, 1}),
                                          DistExpr::atom(NormalAtom{my, 1})}), 10);
    zero_residuals(noncentered_normal_product(0, 0),
                   DistExpr::product({DistExpr::atom(NormalAtom{0, 1}),
                                      DistExpr::atom(NormalAtom{0, 1})}), 12);
    // mu = 0 factorization through the product-normal operator
    ExpandedOp pn = C(M(), D(2)) + D() - M();
    CHECK(noncentered_normal_product(0, 0) ==
          C(pn, ExpandedOp::identity() - D(2)));
}

TEST_CASE("shifted gamma operator") {
    CHECK(shifted_gamma_operator(rat(5, 2), 0) == T(rat(5, 2)) - M());
    CHECK(shifted_gamma_operator(2, 3) == T(5) - Rational(3) * D() - M());
    zero_residuals(shifted_gamma_operator(2, 3), DistExpr::shift(DistExpr::atom(GammaAtom{2, 1}), 3), 10);
}

TEST_CASE("reduce_shared_factors") {
    AssumptionOneForm f(EulerPoly::from_t_params(1, {2, 3}), 1, 1, EulerPoly::from_t_params(1, {3}));
    ReduceResult red = reduce_shared_factors(f);
    CHECK(red.cancelled == std::vector<Rational>{3});
    CHECK(red.form.L() == EulerPoly::t_factor(2));
    CHECK(red.form.K() == EulerPoly::one());

    AssumptionOneForm g(EulerPoly::from_t_params(1, {2}), 1, 1, EulerPoly::from_t_params(1, {5}));
    CHECK(reduce_shared_factors(g).cancelled.empty());
    CHECK(reduce_shared_factors(g).form == g);

    // a normal-gamma product sharing T_1: Normal(0,1) x Gamma(1, lambda)
    // gives sigma^2 T_1 T_1 T_2 - lambda^2 M^2 with no shared factor, but
    // Gamma(1,l)^-1-style constructions can align parameters; build one directly
    AssumptionOneForm shared(EulerPoly::from_t_params(1, {1, rat(5, 2)}), 1, 2,
                             EulerPoly::from_t_params(1, {rat(5, 2)}));
    ReduceResult r2 = reduce_shared_factors(shared);
    CHECK(r2.form.L() == EulerPoly::t_factor(1));
    CHECK(r2.cancelled == std::vector<Rational>{rat(5, 2)});
}

TEST_CASE("build: quotients, Cauchy, F and PRR pipelines") {
    // Cauchy from the ratio of standard normals: (1 + M^2) T_1
    BuildResult cauchy = build_for_expression(parse_expression("Normal(0,1)*Normal(0,1)^-1"));
    CHECK(cauchy.op == C(ExpandedOp::identity() + M(2), T(1)));

    // gamma quotient: lambda1 M T_{1-r2} + lambda2 T_{r1}
    Rational r1 = 2, l1 = 3, r2 = rat(7, 2), l2 = rat(1, 2);
    BuildResult q = build_for_expression(parse_expression("Gamma(2,3)*Gamma(7/2,1/2)^-1"));
    CHECK(q.op == l1 * C(M(), T(1 - r2)) + l2 * T(r1));

    // beta quotient: T_{a1} T_{1-a2-b2} - M T_{a1+b1} T_{1-a2}
    BuildResult bq = build_for_expression(parse_expression("Beta(2,3)/Beta(29/2,2)"));
    Rational a1 = 2, b1 = 3, a2 = rat(29, 2), b2 = 2;
    CHECK(bq.op == t_product({a1, 1 - a2 - b2}) - C(M(), t_product({a1 + b1, 1 - a2})));
    zero_residuals(bq.op, parse_expression("Beta(2,3)/Beta(29/2,2)"), 12);

    // F-distribution via (d2/d1) ChiSq(d1)/ChiSq(d2), up to the documented rescale
    BuildResult f = build_for_expression(parse_expression("(31/3)*ChiSq(3)/ChiSq(31)"));
    CHECK(f.op.primitive() == stein_operator(FDistAtom{3, 31}).op.primitive());
    zero_residuals(f.op, DistExpr::atom(FDistAtom{3, 31}), 12);

    // PRR via sqrt(2s Beta Gamma), s = 3: s T_1 T_2 - M^2 T_{2s}
    BuildResult prr = build_for_expression(parse_expression("(6*Beta(1,2)*Gamma(1/2,1))^(1/2)"));
    CHECK(prr.op.primitive() == stein_operator(PRRAtom{3}).op.primitive());

    // generalized gamma via the power pipeline: GG(3, 2, 2)
    BuildResult gg = build_for_expression(parse_expression("((1/2)*Gamma(3/2,2))^(1/2)"));
    CHECK(gg.op.primitive() == stein_operator(GenGammaAtom{3, 2, 2}).op.primitive());
}

TEST_CASE("build: integer powers pre-raise the separation level") {
    // Gamma(2,1)^2: raise to T_2 T_3 - M^2, then scale the argument:
    // 4 T_1 T_{3/2} - M
    BuildResult sq = build_for_expression(parse_expression("Gamma(2,1)^2"));
    CHECK(sq.op == Rational(4) * t_product({1, rat(3, 2)}) - M());
    zero_residuals(sq.op, parse_expression("Gamma(2,1)^2"), 12);
    bool raised = false;
    for (const auto& s : sq.trace.steps) raised |= s.rule == "raise-power-level";
    CHECK(raised);

    // negative integer power: inverse first, then the positive power
    BuildResult isq = build_for_expression(parse_expression("Gamma(5,1)^-2"));
    CHECK(isq.op == ExpandedOp::identity() - Rational(4) * C(M(), t_product({-2, rat(-3, 2)})));
    zero_residuals(isq.op, parse_expression("Gamma(5,1)^-2"), 1);
}

TEST_CASE("build: three-factor mixed product") {
    // Student x Student x VG: nu1 nu2 s^2 T_1^3 T_r - (-1)^2 M^2 T_{2-nu1} T_{2-nu2}
    BuildResult b = build_for_expression(parse_expression("StudentT(9)*StudentT(11)*VGSym(3,1)"));
    CHECK(b.op == Rational(99) * t_product({1, 1, 1, 3}) - C(M(2), t_product({-7, -9})));
    zero_residuals(b.op, parse_expression("StudentT(9)*StudentT(11)*VGSym(3,1)"), 6);
}

TEST_CASE("build: iid pairs dispatch to the weak-operator rule") {
    BuildResult b = build_for_expression(parse_expression("Normal(1,1)*Normal(1,1)"));
    CHECK(b.op == iid_pair_operator(1, 1, TFactor::infinite(), TFactor::infinite()));

    BuildResult vg = build_for_expression(parse_expression("VG(3,1/2,2)*VG(3,1/2,2)"));
    CHECK(vg.op == iid_pair_operator(1, 4, TFactor::finite(rat(3, 2)), TFactor::finite(3)));

    BuildResult sg = build_for_expression(parse_expression("shift(Gamma(2,1),3)*shift(Gamma(2,1),3)"));
    CHECK(sg.op == iid_pair_operator(1, -3, TFactor::finite(5), TFactor::infinite()));

    // different means use the dedicated fourth-order construction
    BuildResult un = build_for_expression(parse_expression("Normal(1,1)*Normal(2,1)"));
    CHECK(un.op == noncentered_normal_product(1, 2));

    // unsupported: pair with non-unit variance
    CHECK_THROWS_AS(build_for_expression(parse_expression("Normal(1,4)*Normal(2,4)")),
                    unsupported_error);
}

TEST_CASE("build: scaled shifted-gamma pair normalizes the rate first") {
    DistExpr sg = DistExpr::shift(DistExpr::atom(GammaAtom{2, 2}), 3);
    BuildResult b = build_for_expression(DistExpr::product({sg, sg}));
    ExpandedOp want = iid_pair_operator(1, -6, TFactor::finite(8), TFactor::infinite())
                          .tau_scale(rat(1, 4));
    CHECK(b.op == want);
    zero_residuals(b.op, DistExpr::product({sg, sg}), 8);
}

TEST_CASE("build: unsupported combinations name the blocking subtree") {
    try {
        build_for_expression(parse_expression("Normal(1,1)*Gamma(1,1)"));
        FAIL("expected unsupported_error");
    } catch (const unsupported_error& e) {
        CHECK(std::string(e.what()).find("Normal(1,1)") != std::string::npos);
    }
}

TEST_CASE("build trace replays deterministically") {
    std::string expr = "(6*Beta(1,2)*Gamma(1/2,1))^(1/2)";
    BuildResult a = build_for_expression(parse_expression(expr));
    BuildResult b = build_for_expression(parse_expression(expr));
    REQUIRE(a.trace.steps.size() == b.trace.steps.size());
    CHECK(a.trace.steps.size() >= 3);
    for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
        CHECK(a.trace.steps[i].rule == b.trace.steps[i].rule);
        CHECK(a.trace.steps[i].output == b.trace.steps[i].output);
    }
}

TEST_CASE("every constructed corpus operator has exact zero residuals") {
    std::vector<std::string> corpus = {
        "Normal(0,1)*Normal(0,1)",
        "Gamma(2,1)*Gamma(3,1)",
        "Normal(0,1)*Gamma(2,1)",
        "StudentT(13)*StudentT(15)",
        "VGSym(3,1)*VGSym(7/2,2)",
        "Gamma(2,3)*Gamma(7/2,1/2)^-1",
        "Beta(2,3)/Beta(29/2,2)",
        "(31/3)*ChiSq(3)/ChiSq(31)",
        "(6*Beta(1,2)*Gamma(1/2,1))^(1/2)",
        "((1/2)*Gamma(3/2,2))^(1/2)",
        "Normal(1,1)*Normal(1,1)",
        "Normal(1,1)*Normal(2,1)",
        "shift(Gamma(2,1),3)*shift(Gamma(2,1),3)",
        "VG(3,1/2,2)*VG(3,1/2,2)",
    };
    for (const auto& text : corpus) {
        CAPTURE(text);
        DistExpr e = parse_expression(text);
        BuildResult b = build_for_expression(e);
        zero_residuals(b.op, e, 12);
    }
}
