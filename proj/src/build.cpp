#include "stein/constructors.hpp"

namespace stein {

namespace {

struct Builder {
    ConstructionTrace trace;

    void step(const std::string& rule, std::vector<std::string> inputs, const std::string& out) {
        trace.steps.push_back({rule, std::move(inputs), out});
    }

    struct Partial {
        ExpandedOp op;
        std::optional<AssumptionOneForm> form;
    };

    static Partial from_form(AssumptionOneForm f) { return {f.expand(), std::move(f)}; }

    // Matches operators of the shape M - alpha T_a - beta T_b D for the iid
    // product rule. Works on normalized expressions (scales folded outside).
    struct PairShape {
        Rational alpha, beta;
        TFactor a, b;
        Rational post_scale = 1; // tau-rescale of the pair product, when the
                                 // common operator was normalized first
    };

    static std::optional<PairShape> pair_shape(const DistExpr& e) {
        if (const AtomKind* atom = e.as_atom()) {
            if (const auto* n = std::get_if<NormalAtom>(atom)) {
                // D - M + mu I rearranged: M - mu I - D (unit variance only)
                if (n->mu != 0 && n->sigma2 == 1)
                    return PairShape{n->mu, 1, TFactor::infinite(), TFactor::infinite()};
                return std::nullopt;
            }
            if (const auto* v = std::get_if<VGAtom>(atom)) {
                // sigma^2 T_r D + 2 theta T_{r/2} - M
                if (v->theta != 0)
                    return PairShape{2 * v->theta, v->sigma * v->sigma,
                                     TFactor::finite(v->r / 2), TFactor::finite(v->r)};
                return std::nullopt;
            }
            return std::nullopt;
        }
        if (auto s = as_shift(e)) {
            // X + mu for X ~ Gamma(r, lambda) is (X' + lambda mu)/lambda with
            // X' ~ Gamma(r, 1), whose operator T_{r+lambda mu} - lambda mu D - M
            // rearranges to M - T_{r+lambda mu} + lambda mu D.
            if (const auto* g = std::get_if<GammaAtom>(s->base.as_atom())) {
                Rational mu = g->lambda * s->mu;
                return PairShape{1, -mu, TFactor::finite(g->r + mu), TFactor::infinite(),
                                 1 / (g->lambda * g->lambda)};
            }
        }
        return std::nullopt;
    }

    Partial build(const DistExpr& e) {
        if (const AtomKind* atom = e.as_atom()) {
            AtomOperator ao = stein_operator(*atom);
            step("catalog", {e.render()}, ao.op.render());
            return {ao.op, ao.form};
        }
        if (auto sc = as_scale(e)) {
            Partial base = build(sc->base);
            Partial out;
            out.op = base.op.tau_scale(sc->c);
            if (base.form)
                out.form = AssumptionOneForm(base.form->L(),
                                             base.form->b() * pow_rat(sc->c, -static_cast<long>(base.form->q())),
                                             base.form->q(), base.form->K());
            step("scale", {base.op.render(), to_string(sc->c)}, out.op.render());
            return out;
        }
        if (auto sh = as_shift(e)) {
            const auto* g = std::get_if<GammaAtom>(sh->base.as_atom());
            if (!g) throw unsupported_error("shift of a non-Gamma base: " + e.render());
            // X + mu for X ~ Gamma(r, lambda): build for Gamma(r,1) + lambda mu,
            // then scale by 1/lambda.
            ExpandedOp op = shifted_gamma_operator(g->r, g->lambda * sh->mu);
            step("shifted-gamma", {e.render()}, op.render());
            if (g->lambda != 1) {
                op = op.tau_scale(1 / g->lambda);
                step("scale", {to_string(1 / g->lambda)}, op.render());
            }
            return {op, std::nullopt};
        }
        if (auto pw = as_power(e)) {
            const Rational& gamma = pw->gamma;
            Partial base = build(pw->base);
            if (!base.form)
                throw unsupported_error("power of an operator without Assumption-1 form: " +
                                        pw->base.render());
            AssumptionOneForm f = *base.form;
            Rational g = gamma;
            if (g < 0) {
                f = inverse_operator(f);
                step("inverse", {base.op.render()}, f.expand().render());
                g = -g;
            }
            if (g != 1) {
                // pre-raise so that q becomes divisible: q' v / u must be integral
                Integer u = g.get_num(), v = g.get_den();
                Integer qv = Integer(f.q()) * v;
                Integer gd;
                mpz_gcd(gd.get_mpz_t(), u.get_mpz_t(), qv.get_mpz_t());
                unsigned k = static_cast<unsigned>(mpz_get_ui(Integer(u / gd).get_mpz_t()));
                if (k > 1) {
                    f = raise_power_level(f, k);
                    step("raise-power-level", {std::to_string(k)}, f.expand().render());
                }
                f = power_operator(f, g);
                step("power", {to_string(g)}, f.expand().render());
            }
            return from_form(std::move(f));
        }
        if (const auto* fs = e.as_product()) {
            // iid pair with the M - alpha T_a - beta T_b D shape
            if (fs->size() == 2 && (*fs)[0] == (*fs)[1]) {
                if (auto ps = pair_shape((*fs)[0])) {
                    ExpandedOp op = iid_pair_operator(ps->alpha, ps->beta, ps->a, ps->b);
                    step("iid-pair", {(*fs)[0].render()}, op.render());
                    if (ps->post_scale != 1) {
                        op = op.tau_scale(ps->post_scale);
                        step("scale", {to_string(ps->post_scale)}, op.render());
                    }
                    return {op, std::nullopt};
                }
            }
            // non-iid pair of unit-variance normals
            if (fs->size() == 2) {
                const auto* nx = (*fs)[0].is_atom() ? std::get_if<NormalAtom>((*fs)[0].as_atom()) : nullptr;
                const auto* ny = (*fs)[1].is_atom() ? std::get_if<NormalAtom>((*fs)[1].as_atom()) : nullptr;
                if (nx && ny && (nx->mu != 0 || ny->mu != 0)) {
                    if (nx->sigma2 != 1 || ny->sigma2 != 1)
                        throw unsupported_error("non-centered normal product needs unit variances: " +
                                                e.render());
                    if (nx->mu == ny->mu) {
                        ExpandedOp op = iid_pair_operator(nx->mu, 1, TFactor::infinite(),
                                                         TFactor::infinite());
                        step("iid-pair", {(*fs)[0].render()}, op.render());
                        return {op, std::nullopt};
                    }
                    ExpandedOp op = noncentered_normal_product(nx->mu, ny->mu);
                    step("noncentered-normal-product", {e.render()}, op.render());
                    return {op, std::nullopt};
                }
            }
            Partial acc = build((*fs)[0]);
            for (std::size_t i = 1; i < fs->size(); ++i) {
                Partial next = build((*fs)[i]);
                if (!acc.form)
                    throw unsupported_error("product factor without Assumption-1 form: " +
                                            (i == 1 ? (*fs)[0].render() : "(partial product)"));
                if (!next.form)
                    throw unsupported_error("product factor without Assumption-1 form: " +
                                            (*fs)[i].render());
                AssumptionOneForm f = product_operator(*acc.form, *next.form);
                step("product", {acc.op.render(), next.op.render()}, f.expand().render());
                acc = from_form(std::move(f));
            }
            return acc;
        }
        throw unsupported_error("unhandled expression: " + e.render());
    }
};

} // namespace

BuildResult build_for_expression(const DistExpr& e) {
    Builder b;
    Builder::Partial p = b.build(e);
    if (p.form && p.form->has_factored_views()) {
        ReduceResult red = reduce_shared_factors(*p.form);
        // a reduction that empties both theta sides leaves a zeroth-order
        // relation, not an operator; keep the unreduced form in that case
        if (std::max(red.form.L().degree(), red.form.K().degree()) < 1)
            red = ReduceResult{*p.form, {}};
        if (!red.cancelled.empty()) {
            std::vector<std::string> cs;
            for (const auto& r : red.cancelled) cs.push_back("T_" + to_string(r));
            b.step("reduce-shared-factors", cs, red.form.expand().render());
            p.form = red.form;
            p.op = red.form.expand();
        }
    }
    return {std::move(p.op), std::move(p.form), std::move(b.trace)};
}

} // namespace stein
