#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stein/forms.hpp"
#include "stein/gamma_product.hpp"
#include "stein/real.hpp"

namespace stein {

// ----- building-block distributions ------------------------------------------------

struct NormalAtom { Rational mu, sigma2; };            // N(mu, sigma^2)
struct GammaAtom { Rational r, lambda; };              // Gamma(r, lambda), r, lambda > 0
struct BetaAtom { Rational a, b; };                    // Beta(a, b), a, b > 0
struct StudentTAtom { Rational nu; };                  // t(nu), nu > 0
struct InverseGammaAtom { Rational alpha, beta; };     // IG(alpha, beta)
struct FDistAtom { Rational d1, d2; };                 // F(d1, d2)
struct PRRAtom { Rational s; };                        // PRR_s, s > 1/2
struct VGSymAtom { Rational r, sigma; };               // VG(r, 0, sigma, 0)
struct VGAtom { Rational r, theta, sigma; };           // VG(r, theta, sigma, 0)
struct GenGammaAtom { Rational r, lambda; long q; };   // GG(r, lambda, q), integer q >= 1
struct ExponentialAtom { Rational lambda; };           // Exp(lambda) = Gamma(1, lambda)
struct ChiSqAtom { Rational d; };                      // chi^2_d = Gamma(d/2, 1/2)

using AtomKind = std::variant<NormalAtom, GammaAtom, BetaAtom, StudentTAtom, InverseGammaAtom,
                              FDistAtom, PRRAtom, VGSymAtom, VGAtom, GenGammaAtom,
                              ExponentialAtom, ChiSqAtom>;

// Throws invalid_parameter when a parameter constraint is violated.
void validate(const AtomKind& a);
std::string atom_name(const AtomKind& a);
std::vector<Rational> atom_params(const AtomKind& a);
std::vector<std::string> atom_param_names(const AtomKind& a);
bool atom_equal(const AtomKind& a, const AtomKind& b);

enum class SupportKind {
    Positive,  // a.s. positive
    Symmetric, // density symmetric about 0
    RealLine,  // anything else
};

// ----- expression tree --------------------------------------------------------------

// Expression of independent building blocks: atoms combined by independent
// product, rational power, shift by a constant and scaling by a constant.
// Shift is restricted to Gamma atoms. Repeated subtrees denote independent
// copies; a product of two equal subtrees is an iid pair.
class DistExpr {
public:
    enum class Tag { Atom, Product, Power, Shift, Scale };

    static DistExpr atom(AtomKind a);
    static DistExpr product(std::vector<DistExpr> factors);
    static DistExpr power(DistExpr base, const Rational& gamma);
    static DistExpr shift(DistExpr base, const Rational& mu);
    static DistExpr scale(DistExpr base, const Rational& c);

    Tag tag() const;
    bool is_atom() const { return tag() == Tag::Atom; }
    const AtomKind* as_atom() const;
    const std::vector<DistExpr>* as_product() const;
    DistExpr base() const;       // Power / Shift / Scale nodes
    const Rational& value() const; // gamma / mu / c

    SupportKind support() const;
    bool operator==(const DistExpr& o) const;

    std::string render() const;
    // Atom descriptors {"kind":"Gamma","params":{"r":...,"lambda":...}},
    // composite nodes with "kind" in {product, power, shift, scale}.
    std::string to_json() const;

private:
    struct Node;
    explicit DistExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct PowerView { DistExpr base; Rational gamma; };
struct ShiftView { DistExpr base; Rational mu; };
struct ScaleView { DistExpr base; Rational c; };

inline std::optional<PowerView> as_power(const DistExpr& e) {
    if (e.tag() != DistExpr::Tag::Power) return std::nullopt;
    return PowerView{e.base(), e.value()};
}
inline std::optional<ShiftView> as_shift(const DistExpr& e) {
    if (e.tag() != DistExpr::Tag::Shift) return std::nullopt;
    return ShiftView{e.base(), e.value()};
}
inline std::optional<ScaleView> as_scale(const DistExpr& e) {
    if (e.tag() != DistExpr::Tag::Scale) return std::nullopt;
    return ScaleView{e.base(), e.value()};
}

// ----- moments ----------------------------------------------------------------------

class MomentValue {
public:
    enum class Kind { Exact, Approx, DoesNotExist };

    static MomentValue exact(Rational v) { return MomentValue(Kind::Exact, std::move(v), Real()); }
    static MomentValue approx(Real v) { return MomentValue(Kind::Approx, Rational(0), std::move(v)); }
    static MomentValue does_not_exist() { return MomentValue(Kind::DoesNotExist, Rational(0), Real()); }

    Kind kind() const { return kind_; }
    bool exists() const { return kind_ != Kind::DoesNotExist; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    const Rational& exact_value() const;
    const Real& approx_value() const { return approx_; }
    Real as_real() const { return is_exact() ? Real(exact_) : approx_; }

    std::string str() const;

private:
    MomentValue(Kind k, Rational e, Real a) : kind_(k), exact_(std::move(e)), approx_(std::move(a)) {}
    Kind kind_;
    Rational exact_;
    Real approx_;
};

// E[X^k] for rational k (negative and fractional indices supported where the
// closed forms make sense). Exact rationals whenever the closed form is
// rational; extended-precision otherwise; throws unsupported_error for
// combinations with no implemented closed form.
MomentValue moment(const DistExpr& e, const Rational& k);
MomentValue moment(const DistExpr& e, long k);

// Symbolic Mellin transform s -> E X^{s-1} (with the doubled one-sided integral
// for variables symmetric about 0). Every atom must be a.s. positive or
// symmetric; products multiply factorwise, Power(gamma) substitutes
// s -> gamma (s - 1) + 1, Scale(c) contributes c^{s-1}.
GammaProductExpr mellin(const DistExpr& e);

// ----- classical Stein operators ----------------------------------------------------

struct AtomOperator {
    std::optional<AssumptionOneForm> form; // present iff the table row satisfies Assumption 1
    ExpandedOp op;                         // always the expanded normal form
};

AtomOperator stein_operator(const AtomKind& a);

// Pearson family: score p'/p = -(a x - ell)/(d2 x^2 + d1 x + d0).
ExpandedOp pearson_operator(const Rational& a, const Rational& ell, const Rational& d0,
                            const Rational& d1, const Rational& d2);

struct ScoreOperator {
    ExpandedOp op;
    std::optional<DetectResult> assumption1; // set when the duality operator has the two-band shape
};

// Duality operator D den(M) + num(M) built from score p'/p = num/den.
ScoreOperator score_operator(const std::vector<Rational>& num, const std::vector<Rational>& den);

} // namespace stein
