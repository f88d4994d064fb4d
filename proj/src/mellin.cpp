#include "stein/catalog.hpp"

namespace stein {

namespace {

using G = GammaProductExpr;

// lambda^{1-s} Gamma(r + s - 1) / Gamma(r)
G gamma_mellin(const Rational& r, const Rational& lambda) {
    return G::power_factor(lambda, {-1, 1}) * G::gamma_factor({1, r - 1}) *
           G::gamma_factor({0, r}, -1);
}

G atom_mellin(const AtomKind& atom) {
    return std::visit(
        [](const auto& v) -> G {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) {
                if (v.mu != 0)
                    throw unsupported_error("Mellin transform of a non-centered Normal");
                // pi^{-1/2} 2^{(s-1)/2} (sigma^2)^{(s-1)/2} Gamma(s/2)
                return G::pi_power(rat(-1, 2)) *
                       G::power_factor(2 * v.sigma2, {rat(1, 2), rat(-1, 2)}) *
                       G::gamma_factor({rat(1, 2), 0});
            } else if constexpr (std::is_same_v<T, GammaAtom>) {
                return gamma_mellin(v.r, v.lambda);
            } else if constexpr (std::is_same_v<T, ExponentialAtom>) {
                return gamma_mellin(1, v.lambda);
            } else if constexpr (std::is_same_v<T, ChiSqAtom>) {
                return gamma_mellin(v.d / 2, rat(1, 2));
            } else if constexpr (std::is_same_v<T, BetaAtom>) {
                // Gamma(a+s-1) Gamma(a+b) / (Gamma(a) Gamma(a+b+s-1))
                return G::gamma_factor({1, v.a - 1}) * G::gamma_factor({0, v.a + v.b}) *
                       G::gamma_factor({0, v.a}, -1) * G::gamma_factor({1, v.a + v.b - 1}, -1);
            } else if constexpr (std::is_same_v<T, StudentTAtom>) {
                // nu^{(s-1)/2} Gamma(s/2) Gamma((nu+1-s)/2) / (sqrt(pi) Gamma(nu/2))
                return G::power_factor(v.nu, {rat(1, 2), rat(-1, 2)}) * G::pi_power(rat(-1, 2)) *
                       G::gamma_factor({rat(1, 2), 0}) *
                       G::gamma_factor({rat(-1, 2), (v.nu + 1) / 2}) *
                       G::gamma_factor({0, v.nu / 2}, -1);
            } else if constexpr (std::is_same_v<T, InverseGammaAtom>) {
                // beta^{s-1} Gamma(alpha+1-s) / Gamma(alpha)
                return G::power_factor(v.beta, {1, -1}) * G::gamma_factor({-1, v.alpha + 1}) *
                       G::gamma_factor({0, v.alpha}, -1);
            } else if constexpr (std::is_same_v<T, FDistAtom>) {
                return G::power_factor(v.d2 / v.d1, {1, -1}) *
                       G::gamma_factor({1, v.d1 / 2 - 1}) * G::gamma_factor({-1, v.d2 / 2 + 1}) *
                       G::gamma_factor({0, v.d1 / 2}, -1) * G::gamma_factor({0, v.d2 / 2}, -1);
            } else if constexpr (std::is_same_v<T, PRRAtom>) {
                // (2s0)^{(s-1)/2} Gamma(s/2) Gamma((s+1)/2) Gamma(s0) /
                //   (Gamma(1/2) Gamma(s0 + (s-1)/2))
                return G::power_factor(2 * v.s, {rat(1, 2), rat(-1, 2)}) *
                       G::gamma_factor({rat(1, 2), 0}) * G::gamma_factor({rat(1, 2), rat(1, 2)}) *
                       G::gamma_factor({0, v.s}) * G::gamma_factor({0, rat(1, 2)}, -1) *
                       G::gamma_factor({rat(1, 2), v.s - rat(1, 2)}, -1);
            } else if constexpr (std::is_same_v<T, VGSymAtom>) {
                // product of the centered normal and sqrt(Gamma(r/2,1/2)) transforms:
                // pi^{-1/2} 2^{s-1} (sigma^2)^{(s-1)/2} Gamma(s/2) Gamma((r-1+s)/2) / Gamma(r/2)
                return G::pi_power(rat(-1, 2)) * G::power_factor(2, {1, -1}) *
                       G::power_factor(v.sigma * v.sigma, {rat(1, 2), rat(-1, 2)}) *
                       G::gamma_factor({rat(1, 2), 0}) *
                       G::gamma_factor({rat(1, 2), (v.r - 1) / 2}) *
                       G::gamma_factor({0, v.r / 2}, -1);
            } else if constexpr (std::is_same_v<T, VGAtom>) {
                if (v.theta == 0)
                    return atom_mellin(AtomKind(VGSymAtom{v.r, v.sigma}));
                throw unsupported_error("Mellin transform of a skewed VG atom");
            } else { // GenGammaAtom
                // lambda^{1-s} Gamma((r-1+s)/q) / Gamma(r/q)
                Rational q(v.q);
                return G::power_factor(v.lambda, {-1, 1}) *
                       G::gamma_factor({1 / q, (v.r - 1) / q}) *
                       G::gamma_factor({0, v.r / q}, -1);
            }
        },
        atom);
}

} // namespace

GammaProductExpr mellin(const DistExpr& e) {
    if (e.support() == SupportKind::RealLine)
        throw unsupported_error("Mellin transform needs a positive or symmetric variable: " +
                                e.render());
    if (const AtomKind* a = e.as_atom()) return atom_mellin(*a);
    if (const auto* fs = e.as_product()) {
        G out;
        for (const auto& f : *fs) out = out * mellin(f);
        return out;
    }
    if (auto p = as_power(e)) return mellin(p->base).subst(p->gamma, 1 - p->gamma);
    if (auto s = as_scale(e)) {
        Rational c = s->c < 0 ? -s->c : s->c;
        return mellin(s->base) * G::power_factor(c, {1, -1});
    }
    throw unsupported_error("Mellin transform: unhandled expression " + e.render());
}

} // namespace stein
