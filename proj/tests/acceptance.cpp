// Acceptance suite: one line per criterion, nonzero exit iff any criterion
// fails. Everything here is exact rational arithmetic unless a tolerance is
// stated next to the check.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "stein/constructors.hpp"
#include "stein/duality.hpp"
#include "stein/parser.hpp"
#include "stein/verify.hpp"

using namespace stein;

namespace {

struct Criterion {
    int failures = 0;
    std::ostringstream log;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            log << "    FAIL: " << what << "\n";
        }
    }
};

int g_total_failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        c.check(false, "time budget exceeded: " + std::to_string(secs) + "s > " +
                           std::to_string(budget_seconds) + "s");
    }
    std::cout << "[criterion " << number << "] " << (c.failures == 0 ? "PASS" : "FAIL") << " - "
              << title << " (" << secs << "s)\n"
              << c.log.str();
    g_total_failures += c.failures;
}

ExpandedOp T(const Rational& r) { return ExpandedOp::t_factor(r); }
ExpandedOp M(int k = 1) { return ExpandedOp::m_power(k); }
ExpandedOp D(int k = 1) { return ExpandedOp::d_power(k); }
ExpandedOp C(const ExpandedOp& a, const ExpandedOp& b) { return ExpandedOp::compose(a, b); }
ExpandedOp I() { return ExpandedOp::identity(); }

ExpandedOp t_product(std::initializer_list<Rational> rs) {
    ExpandedOp out = I();
    for (const auto& r : rs) out = C(out, T(r));
    return out;
}

AssumptionOneForm form_of(const AtomKind& a) { return *stein_operator(a).form; }

struct GoldenCase {
    std::string name;
    std::string expr;
    ExpandedOp want;
    bool up_to_primitive = false; // documented rescale
};

std::vector<GoldenCase> golden_corpus() {
    std::vector<GoldenCase> out;
    // products of centered normals / gammas / mixed
    out.push_back({"product normal, n = 2", "Normal(0,1)*Normal(0,1)", t_product({1, 1}) - M(2)});
    out.push_back({"product normal, n = 3", "Normal(0,1)*Normal(0,1)*Normal(0,1)",
                   t_product({1, 1, 1}) - M(2)});
    out.push_back({"product gamma", "Gamma(2,1)*Gamma(3,1)", t_product({2, 3}) - M()});
    out.push_back({"product gamma, m = 3", "Gamma(1,1)*Gamma(2,1)*Gamma(3,1)",
                   t_product({1, 2, 3}) - M()});
    out.push_back({"mixed normal-gamma", "Normal(0,1)*Gamma(2,1)",
                   t_product({1, 2, 3}) - M(2)});
    // Student / VG products
    out.push_back({"product Student, n = 2", "StudentT(5)*StudentT(7)",
                   Rational(35) * t_product({1, 1}) - C(M(2), t_product({-3, -5}))});
    out.push_back({"product VG", "VGSym(3,1)*VGSym(5,1)", t_product({1, 1, 3, 5}) - M(2)});
    out.push_back({"mixed Student-VG", "StudentT(5)*VGSym(3,1)",
                   Rational(5) * t_product({1, 1, 3}) + C(M(2), T(-3))});
    // PRR
    out.push_back({"PRR via the sqrt(2s Beta Gamma) pipeline", "(6*Beta(1,2)*Gamma(1/2,1))^(1/2)",
                   Rational(3) * t_product({1, 2}) - C(M(2), T(6)), true});
    // inverse / quotient family
    out.push_back({"inverse beta", "Beta(2,3)^-1", T(-4) - C(M(), T(-1))});
    out.push_back({"beta quotient", "Beta(2,3)/Beta(29/2,2)",
                   t_product({2, 1 - rat(29, 2) - 2}) - C(M(), t_product({5, 1 - rat(29, 2)}))});
    out.push_back({"gamma quotient", "Gamma(2,3)*Gamma(7/2,1/2)^-1",
                   Rational(3) * C(M(), T(1 - rat(7, 2))) + rat(1, 2) * T(2)});
    out.push_back({"F-distribution", "(31/3)*ChiSq(3)/ChiSq(31)",
                   Rational(31) * T(rat(3, 2)) + Rational(3) * C(M(), T(rat(-29, 2))), true});
    out.push_back({"Cauchy as a normal ratio", "Normal(0,1)/Normal(0,1)",
                   C(I() + M(2), T(1))});
    // iid and non-iid noncentered pairs, and the summed variant
    ExpandedOp equal1 = C(M(), D(3)) + C(I() - M(), D(2)) - C(M() + Rational(2) * I(), D()) +
                        M() - I();
    out.push_back({"iid noncentered normal pair (equal means)", "Normal(1,1)*Normal(1,1)", equal1});
    ExpandedOp unequal = Rational(-1) * C(M(), D(4)) - D(3) +
                         C(Rational(2) * M() + Rational(2) * I(), D(2)) + Rational(6) * D() +
                         Rational(2) * I() - M();
    out.push_back({"noncentered normal pair (means 1 and 2)", "Normal(1,1)*Normal(2,1)", unequal});
    // shifted-gamma pair
    ExpandedOp sg_first = M() - t_product({5, 5}) - Rational(9) * C(T(1), D());
    ExpandedOp sg_mid = T(4) + Rational(3) * C(T(6), D());
    ExpandedOp sg_last = Rational(6) * C(t_product({5, 5, 6}), D());
    out.push_back({"shifted-gamma pair", "shift(Gamma(2,1),3)*shift(Gamma(2,1),3)",
                   C(sg_first, sg_mid) + sg_last});
    // VG pair with drift
    Rational th = rat(1, 2), s2 = 4, rr = 3;
    ExpandedOp vg_first = M() - (4 * th * th) * t_product({rr / 2, rr / 2}) -
                          (s2 * s2) * C(t_product({rr, rr, 1}), D());
    ExpandedOp vg_mid = T(rr / 2 - 1) - s2 * C(t_product({rr, rr / 2 + 1}), D());
    ExpandedOp vg_last = (8 * th * th * s2) * C(t_product({rr / 2, rr / 2, rr, rr / 2 + 1}), D());
    out.push_back({"VG pair with drift", "VG(3,1/2,2)*VG(3,1/2,2)", C(vg_first, vg_mid) - vg_last});
    return out;
}

} // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic; stated tolerances only)\n";

    run_criterion(1, "brute-force minimal search on Normal(1,1)*Normal(1,1)", 1.0, [](Criterion& c) {
        DistExpr nn = parse_expression("Normal(1,1)*Normal(1,1)");
        std::vector<long> want{1, 4, 16, 100, 676, 5776};
        for (std::size_t i = 0; i < want.size(); ++i) {
            MomentValue m = moment(nn, static_cast<long>(i + 1));
            c.check(m.is_exact() && m.exact_value() == want[i],
                    "moment mu_" + std::to_string(i + 1) + " = " + m.str() + ", expected " +
                        std::to_string(want[i]));
        }
        NullSpaceReport rep = null_space_search(nn, 2, 1, 6);
        c.check(rep.unique_zero_only(), "expected no nonzero operator of this shape");
        bool det_matches_reference = rep.determinant && *rep.determinant == 783360;
        c.check(det_matches_reference,
                "determinant of the faithfully built system is " +
                    (rep.determinant ? to_string(*rep.determinant) : std::string("none")) +
                    "; the reference value 783360 is reproduced only when the (k=4, c_{1,0})"
                    " entry is 48 where the moments force 4*mu_3 = 64 - a transcription slip in"
                    " the reference computation; see tests/test_verify.cpp for the single-entry"
                    " reconciliation");
        // supporting evidence: the reference system's determinant
        auto printed = rep.matrix;
        printed[4][3] = 48;
        NullSpaceReport dummy; // determinant via the library path is exercised above
        Rational det = 1;
        {
            auto m2 = printed;
            int sign = 1;
            for (std::size_t col = 0; col < m2.size(); ++col) {
                std::size_t piv = col;
                while (piv < m2.size() && m2[piv][col] == 0) ++piv;
                if (piv == m2.size()) { det = 0; break; }
                if (piv != col) { std::swap(m2[piv], m2[col]); sign = -sign; }
                det *= m2[col][col];
                for (std::size_t i2 = col + 1; i2 < m2.size(); ++i2) {
                    Rational f = m2[i2][col] / m2[col][col];
                    for (std::size_t j2 = col; j2 < m2.size(); ++j2) m2[i2][j2] -= f * m2[col][j2];
                }
            }
            if (sign < 0) det = -det;
        }
        c.check(det == 783360, "printed-system determinant reconciliation");
        (void)dummy;
    });

    run_criterion(2, "golden operator corpus reproduced exactly", 5.0, [](Criterion& c) {
        for (const auto& g : golden_corpus()) {
            BuildResult b = build_for_expression(parse_expression(g.expr));
            bool ok = g.up_to_primitive ? b.op.primitive() == g.want.primitive() : b.op == g.want;
            c.check(ok, g.name + ": built " + b.op.render() + ", expected " + g.want.render());
        }
        // the summed equal-mean pair: M D^3 + (rI - M) D^2 - (M + r(1+mu^2) I) D + M - r mu^2 I
        ExpandedOp pair = build_for_expression(parse_expression("Normal(1,1)*Normal(1,1)")).op;
        ExpandedOp summed = sum_iid_operator(pair, 3);
        ExpandedOp near = C(M(), D(3)) + C(Rational(3) * I() - M(), D(2)) -
                          C(M() + Rational(6) * I(), D()) + M() - Rational(3) * I();
        c.check(summed == near, "summed pair operator");
        // generalized gamma through the power pipeline
        BuildResult gg = build_for_expression(parse_expression("((1/2)*Gamma(3/2,2))^(1/2)"));
        c.check(gg.op.primitive() == (T(3) - Rational(8) * M(2)).primitive(),
                "generalized gamma pipeline");
    });

    run_criterion(3, "moment residuals vanish exactly for k <= 12 on the corpus", 30.0,
                  [](Criterion& c) {
        std::vector<std::string> exprs = {
            "Normal(0,1)*Normal(0,1)", "Gamma(2,1)*Gamma(3,1)", "Normal(0,1)*Gamma(2,1)",
            "StudentT(17)*StudentT(19)", "VGSym(3,1)*VGSym(5,1)", "StudentT(17)*VGSym(3,1)",
            "(6*Beta(1,2)*Gamma(1/2,1))^(1/2)", "Beta(2,3)^-1", "Beta(2,3)/Beta(29/2,2)",
            "Gamma(2,3)*Gamma(7/2,1/2)^-1", "(31/3)*ChiSq(3)/ChiSq(31)",
            "Normal(1,1)*Normal(1,1)", "Normal(1,1)*Normal(2,1)",
            "shift(Gamma(2,1),3)*shift(Gamma(2,1),3)", "VG(3,1/2,2)*VG(3,1/2,2)",
            "((1/2)*Gamma(3/2,2))^(1/2)",
        };
        for (const auto& text : exprs) {
            DistExpr e = parse_expression(text);
            BuildResult b = build_for_expression(e);
            long checked = 0;
            for (long k = 0; k <= 12; ++k) {
                try {
                    MomentValue r = moment_residual(b.op, e, k);
                    if (!r.is_exact()) continue; // irrational moments are outside exact mode
                    c.check(r.exact_value() == 0,
                            text + ": residual at k = " + std::to_string(k) + " is " + r.str());
                    ++checked;
                } catch (const moment_unavailable&) {
                }
            }
            c.check(checked > 0, text + ": no exact residual was checkable");
        }
    });

    run_criterion(4, "moment derivation from the pair operator", 1.0, [](Criterion& c) {
        ExpandedOp pair = iid_pair_operator(1, 1, TFactor::infinite(), TFactor::infinite());
        std::vector<Rational> out = derive_moments(pair, {1, 1, 4}, 6);
        std::vector<Rational> want{16, 100, 676, 5776};
        c.check(out == want, "derived moments differ");
    });

    run_criterion(5, "operator factorization identities", 1.0, [](Criterion& c) {
        // equal-mean pair at mu = 0 factors through the product-normal operator
        ExpandedOp pn = C(M(), D(2)) + D() - M();
        ExpandedOp pair0 = iid_pair_operator(0, 1, TFactor::infinite(), TFactor::infinite());
        c.check(pair0 == C(pn, D() - I()), "pair operator = (M D^2 + D - M)(D - I)");
        // the fourth-order two-mean operator at zero means factors the same way
        c.check(noncentered_normal_product(0, 0) == C(pn, I() - D(2)),
                "noncentered operator at zero means = (M D^2 + D - M)(I - D^2)");
        // VG reduction: M A = -(B' S) with B' M = M B, B the product-VG operator
        Rational r = 3, s2 = 4;
        ExpandedOp A = iid_pair_operator(0, s2, TFactor::finite(r / 2), TFactor::finite(r));
        ExpandedOp S = T(r / 2 - 1) - s2 * C(t_product({r, r / 2 + 1}), D());
        ExpandedOp B = (s2 * s2) * t_product({1, 1, r, r}) - M(2);
        EulerPoly bc = (s2 * s2) * (EulerPoly::theta() * EulerPoly::theta() *
                                    EulerPoly::t_factor(r - 1) * EulerPoly::t_factor(r - 1));
        ExpandedOp Bc = bc.to_expanded() - M(2);
        c.check(C(Bc, M()) == C(M(), B), "conjugation witness B' M = M B");
        c.check(C(M(), A) == Rational(-1) * C(Bc, S), "substitution identity M A = -(B' S)");
    });

    run_criterion(6, "duality and Mellin verification", 5.0, [](Criterion& c) {
        std::vector<Rational> rs{3, rat(7, 2), 5};
        std::vector<Rational> sg{1, 2, rat(1, 2)};
        for (int n = 1; n <= 3; ++n) {
            std::vector<AssumptionOneForm> fs;
            std::vector<DistExpr> es;
            Rational s2 = 1;
            std::vector<Rational> lhs_params, lower;
            for (int j = 0; j < n; ++j) {
                auto rj = rs[static_cast<std::size_t>(j)];
                auto sj = sg[static_cast<std::size_t>(j)];
                fs.push_back(form_of(VGSymAtom{rj, sj}));
                es.push_back(DistExpr::atom(VGSymAtom{rj, sj}));
                s2 *= sj * sj;
                lhs_params.push_back(0);
                lhs_params.push_back(1 - rj);
                lower.push_back(0);
                lower.push_back((rj - 1) / 2);
            }
            AssumptionOneForm prod = fs.size() == 1 ? fs[0] : product_operator(fs[0], fs[1]);
            for (std::size_t j = 2; j < fs.size(); ++j) prod = product_operator(prod, fs[j]);
            DensityODE ode = dual_ode(prod);
            // T_0^n T_{1-r_1}..T_{1-r_n} p - sigma^{-2} x^2 p = 0
            std::sort(lhs_params.begin(), lhs_params.end());
            bool lhs_ok = ode.lhs.factorization() && ode.lhs.factorization()->params == lhs_params &&
                          ode.lhs.factorization()->lc == s2;
            c.check(lhs_ok && ode.b == 1 && ode.q == 2 && ode.rhs == EulerPoly::one(),
                    "product-VG dual ODE, n = " + std::to_string(n));
            GCandidate cand = gparams_from_ode(ode, SupportKind::Symmetric);
            std::sort(lower.begin(), lower.end());
            c.check(cand.params.m == 2 * n && cand.params.n == 0 && cand.params.p == 0 &&
                        cand.params.q == 2 * n && cand.params.lower == lower &&
                        cand.params.power == 2 &&
                        cand.params.prefactor == 1 / (pow_rat(2, 2 * n) * s2),
                    "product-VG G parameters, n = " + std::to_string(n));
            DistExpr e = n == 1 ? es[0] : DistExpr::product(es);
            auto rep = gamma_expr_equal(mellin(e), g_density_mellin(cand.params, SupportKind::Symmetric));
            // structural equality expected; the numeric fallback (tolerance 1e-9)
            // never has to fire here
            c.check(rep.verdict == GammaEquality::StructurallyEqual,
                    "candidate Mellin transform, n = " + std::to_string(n));
        }
        // product Student: parameters and the shift(1/2) + invert transformation
        std::vector<Rational> nus{5, 7};
        AssumptionOneForm tt = product_operator(form_of(StudentTAtom{nus[0]}), form_of(StudentTAtom{nus[1]}));
        GCandidate cand = gparams_from_ode(dual_ode(tt), SupportKind::Symmetric);
        std::vector<Rational> upper{(1 - nus[0]) / 2, (1 - nus[1]) / 2};
        std::sort(upper.begin(), upper.end());
        c.check(cand.params.m == 2 && cand.params.n == 2 && cand.params.upper == upper &&
                    cand.params.lower == std::vector<Rational>{0, 0} &&
                    cand.params.prefactor == 1 / (nus[0] * nus[1]) && cand.params.power == 2,
                "product-Student G parameters");
        auto sh = g_identities(cand.params, GIdentity::Shift, rat(1, 2));
        auto inv = g_identities(sh.params, GIdentity::Invert);
        c.check(inv.params.upper == std::vector<Rational>{rat(1, 2), rat(1, 2)} &&
                    inv.params.lower == std::vector<Rational>{nus[0] / 2, nus[1] / 2} &&
                    inv.params.prefactor == nus[0] * nus[1] && inv.params.power == -2,
                "shift(1/2) + invert lands on the known product-Student form");
    });

    run_criterion(7, "property suites (>= 100 randomized cases each)", 30.0, [](Criterion& c) {
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> num(-10, 10);
        std::uniform_int_distribution<int> den(1, 10);

        // normal-form confluence on random words
        {
            std::uniform_int_distribution<int> len(1, 8);
            std::uniform_int_distribution<int> bit(0, 1);
            for (int trial = 0; trial < 100; ++trial) {
                int n = len(rng);
                std::vector<ExpandedOp> parts;
                for (int i = 0; i < n; ++i)
                    parts.push_back(bit(rng) ? ExpandedOp::m_power(1) : ExpandedOp::d_power(1));
                ExpandedOp left = I();
                for (const auto& p : parts) left = C(left, p);
                ExpandedOp right = I();
                for (auto it = parts.rbegin(); it != parts.rend(); ++it) right = C(*it, right);
                c.check(left == right, "confluence");
            }
        }
        // commutativity of the theta algebra
        {
            std::uniform_int_distribution<int> deg(0, 4);
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<Rational> a, b;
                for (int i = 0, n = deg(rng); i <= n; ++i) a.push_back(rat(num(rng), den(rng)));
                for (int i = 0, n = deg(rng); i <= n; ++i) b.push_back(rat(num(rng), den(rng)));
                ExpandedOp pa = EulerPoly(a).to_expanded(), pb = EulerPoly(b).to_expanded();
                c.check(C(pa, pb) == C(pb, pa), "theta commutativity");
            }
        }
        // shift identities
        {
            int cases = 0;
            for (int nn = -3; nn <= 3; ++nn)
                for (int dd = 1; dd <= 4; ++dd)
                    for (int n = 1; n <= 3; ++n) {
                        Rational r = rat(nn, dd);
                        c.check(C(T(r), M(n)) == C(M(n), T(r + n)), "T_r M^n identity");
                        c.check(C(T(r), D(n)) == C(D(n), T(r - n)), "T_r D^n identity");
                        ++cases;
                    }
            c.check(cases >= 50, "shift identity case count");
        }
        // dual involution, product symmetry, power and inverse round trips
        {
            std::uniform_int_distribution<int> cnt(0, 3);
            std::uniform_int_distribution<int> qd(1, 3);
            int done = 0;
            while (done < 100) {
                auto ps = [&](int n) {
                    std::vector<Rational> v;
                    for (int i = 0; i < n; ++i) v.push_back(rat(num(rng), den(rng)));
                    return v;
                };
                Rational lc = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
                if (lc == 0 || b == 0) continue;
                int nl = cnt(rng), nk = cnt(rng);
                if (nl + nk == 0) continue;
                unsigned q = static_cast<unsigned>(qd(rng));
                AssumptionOneForm f(EulerPoly::from_t_params(lc, ps(nl)), b, q,
                                    EulerPoly::from_t_params(1, ps(nk)));
                c.check(dual_of(dual_ode(f)) == f, "dual involution");
                AssumptionOneForm g(EulerPoly::from_t_params(1, ps(cnt(rng))), rat(den(rng)),
                                    static_cast<unsigned>(qd(rng)),
                                    EulerPoly::from_t_params(1, ps(cnt(rng))));
                c.check(product_operator(f, g).expand() == product_operator(g, f).expand(),
                        "product symmetry");
                AssumptionOneForm pw = power_operator(f, Rational(static_cast<long>(q)));
                c.check(power_operator(pw, Rational(1) / Rational(static_cast<long>(q))).expand() ==
                            f.expand(),
                        "power round trip");
                c.check(ExpandedOp::scale_between(inverse_operator(inverse_operator(f)).expand(),
                                                  f.expand())
                            .has_value(),
                        "inverse round trip up to scale");
                ++done;
            }
        }
        // euler <-> diagonal round trip
        {
            std::uniform_int_distribution<int> deg(0, 10);
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<Rational> cs;
                for (int i = 0, n = deg(rng); i <= n; ++i) cs.push_back(rat(num(rng), den(rng)));
                EulerPoly p(cs);
                c.check(expanded_group_to_euler(p.to_expanded()) == p, "euler round trip");
            }
        }
    });

    run_criterion(8, "discovery consistency over the catalog", 30.0, [](Criterion& c) {
        struct Row {
            AtomKind atom;
            int order, degree;
        };
        // every table row with rational moments in the needed range; PRR is
        // excluded (odd moments irrational) and GenGamma with q >= 2 (moments
        // rational only on the q-grid)
        std::vector<Row> rows = {
            {NormalAtom{rat(1, 2), rat(3, 2)}, 1, 2}, {NormalAtom{0, 1}, 1, 2},
            {GammaAtom{rat(5, 2), 3}, 1, 1},          {ExponentialAtom{rat(2, 3)}, 1, 1},
            {ChiSqAtom{7}, 1, 1},                     {BetaAtom{rat(3, 2), rat(5, 2)}, 1, 2},
            {StudentTAtom{25}, 1, 3},                 {InverseGammaAtom{rat(41, 2), 2}, 1, 2},
            {FDistAtom{3, 45}, 1, 2},                 {VGSymAtom{3, 2}, 2, 2},
            {VGAtom{3, rat(1, 2), 2}, 2, 2},
        };
        for (const auto& row : rows) {
            ExpandedOp known = stein_operator(row.atom).op;
            NullSpaceReport rep = null_space_search(DistExpr::atom(row.atom), row.order, row.degree);
            c.check(!rep.basis.empty(), atom_name(row.atom) + ": empty null space");
            c.check(known.order() <= row.order && known.degree() <= row.degree,
                    atom_name(row.atom) + ": ansatz too small");
            // membership = all constraint rows annihilate the known operator
            for (long k = 0; k < rep.rows; ++k) {
                MomentValue r = moment_residual(known, DistExpr::atom(row.atom), k);
                c.check(r.is_exact() && r.exact_value() == 0,
                        atom_name(row.atom) + ": row " + std::to_string(k));
            }
        }
    });

    std::cout << (g_total_failures == 0 ? "ALL CRITERIA PASS\n"
                                        : "FAILURES: " + std::to_string(g_total_failures) + "\n");
    return g_total_failures == 0 ? 0 : 1;
}
