#include "stein/catalog.hpp"

#include <json.hpp>
#include <sstream>

namespace stein {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw invalid_parameter(msg);
}

} // namespace

void validate(const AtomKind& a) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) {
                require(v.sigma2 > 0, "Normal: sigma^2 > 0");
            } else if constexpr (std::is_same_v<T, GammaAtom>) {
                require(v.r > 0 && v.lambda > 0, "Gamma: r, lambda > 0");
            } else if constexpr (std::is_same_v<T, BetaAtom>) {
                require(v.a > 0 && v.b > 0, "Beta: a, b > 0");
            } else if constexpr (std::is_same_v<T, StudentTAtom>) {
                require(v.nu > 0, "StudentT: nu > 0");
            } else if constexpr (std::is_same_v<T, InverseGammaAtom>) {
                require(v.alpha > 0 && v.beta > 0, "InverseGamma: alpha, beta > 0");
            } else if constexpr (std::is_same_v<T, FDistAtom>) {
                require(v.d1 > 0 && v.d2 > 0, "FDist: d1, d2 > 0");
            } else if constexpr (std::is_same_v<T, PRRAtom>) {
                require(v.s > rat(1, 2), "PRR: s > 1/2");
            } else if constexpr (std::is_same_v<T, VGSymAtom>) {
                require(v.r > 0 && v.sigma > 0, "VGSym: r, sigma > 0");
            } else if constexpr (std::is_same_v<T, VGAtom>) {
                require(v.r > 0 && v.sigma > 0, "VG: r, sigma > 0");
            } else if constexpr (std::is_same_v<T, GenGammaAtom>) {
                require(v.r > 0 && v.lambda > 0 && v.q >= 1, "GenGamma: r, lambda > 0, q >= 1");
            } else if constexpr (std::is_same_v<T, ExponentialAtom>) {
                require(v.lambda > 0, "Exponential: lambda > 0");
            } else if constexpr (std::is_same_v<T, ChiSqAtom>) {
                require(v.d > 0, "ChiSq: d > 0");
            }
        },
        a);
}

std::string atom_name(const AtomKind& a) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) return "Normal";
            else if constexpr (std::is_same_v<T, GammaAtom>) return "Gamma";
            else if constexpr (std::is_same_v<T, BetaAtom>) return "Beta";
            else if constexpr (std::is_same_v<T, StudentTAtom>) return "StudentT";
            else if constexpr (std::is_same_v<T, InverseGammaAtom>) return "InverseGamma";
            else if constexpr (std::is_same_v<T, FDistAtom>) return "FDist";
            else if constexpr (std::is_same_v<T, PRRAtom>) return "PRR";
            else if constexpr (std::is_same_v<T, VGSymAtom>) return "VGSym";
            else if constexpr (std::is_same_v<T, VGAtom>) return "VG";
            else if constexpr (std::is_same_v<T, GenGammaAtom>) return "GenGamma";
            else if constexpr (std::is_same_v<T, ExponentialAtom>) return "Exponential";
            else return "ChiSq";
        },
        a);
}

std::vector<Rational> atom_params(const AtomKind& a) {
    return std::visit(
        [](const auto& v) -> std::vector<Rational> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) return {v.mu, v.sigma2};
            else if constexpr (std::is_same_v<T, GammaAtom>) return {v.r, v.lambda};
            else if constexpr (std::is_same_v<T, BetaAtom>) return {v.a, v.b};
            else if constexpr (std::is_same_v<T, StudentTAtom>) return {v.nu};
            else if constexpr (std::is_same_v<T, InverseGammaAtom>) return {v.alpha, v.beta};
            else if constexpr (std::is_same_v<T, FDistAtom>) return {v.d1, v.d2};
            else if constexpr (std::is_same_v<T, PRRAtom>) return {v.s};
            else if constexpr (std::is_same_v<T, VGSymAtom>) return {v.r, v.sigma};
            else if constexpr (std::is_same_v<T, VGAtom>) return {v.r, v.theta, v.sigma};
            else if constexpr (std::is_same_v<T, GenGammaAtom>) return {v.r, v.lambda, Rational(v.q)};
            else if constexpr (std::is_same_v<T, ExponentialAtom>) return {v.lambda};
            else return {v.d};
        },
        a);
}

std::vector<std::string> atom_param_names(const AtomKind& a) {
    return std::visit(
        [](const auto& v) -> std::vector<std::string> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NormalAtom>) return {"mu", "sigma2"};
            else if constexpr (std::is_same_v<T, GammaAtom>) return {"r", "lambda"};
            else if constexpr (std::is_same_v<T, BetaAtom>) return {"a", "b"};
            else if constexpr (std::is_same_v<T, StudentTAtom>) return {"nu"};
            else if constexpr (std::is_same_v<T, InverseGammaAtom>) return {"alpha", "beta"};
            else if constexpr (std::is_same_v<T, FDistAtom>) return {"d1", "d2"};
            else if constexpr (std::is_same_v<T, PRRAtom>) return {"s"};
            else if constexpr (std::is_same_v<T, VGSymAtom>) return {"r", "sigma"};
            else if constexpr (std::is_same_v<T, VGAtom>) return {"r", "theta", "sigma"};
            else if constexpr (std::is_same_v<T, GenGammaAtom>) return {"r", "lambda", "q"};
            else if constexpr (std::is_same_v<T, ExponentialAtom>) return {"lambda"};
            else return {"d"};
        },
        a);
}

bool atom_equal(const AtomKind& a, const AtomKind& b) {
    return a.index() == b.index() && atom_params(a) == atom_params(b);
}

// ----- DistExpr ---------------------------------------------------------------------

struct DistExpr::Node {
    enum class Tag { Atom, Product, Power, Shift, Scale } tag;
    AtomKind atom{NormalAtom{0, 1}};
    std::vector<DistExpr> factors;
    std::shared_ptr<const Node> base;
    Rational value; // gamma / mu / c
};

DistExpr DistExpr::atom(AtomKind a) {
    validate(a);
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Atom;
    n->atom = std::move(a);
    return DistExpr(std::move(n));
}

DistExpr DistExpr::product(std::vector<DistExpr> factors) {
    if (factors.empty()) throw invalid_parameter("empty product");
    if (factors.size() == 1) return factors.front();
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Product;
    n->factors = std::move(factors);
    return DistExpr(std::move(n));
}

DistExpr DistExpr::power(DistExpr base, const Rational& gamma) {
    if (gamma == 0) throw invalid_parameter("power exponent must be nonzero");
    if (!is_integer(gamma) && base.support() != SupportKind::Positive)
        throw unsupported_error("non-integer power of a base that is not a.s. positive: " +
                                base.render());
    if (gamma < 0 && base.support() == SupportKind::RealLine)
        throw unsupported_error("negative power requires a base avoiding 0 a.s.: " + base.render());
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Power;
    n->base = base.node_;
    n->value = gamma;
    return DistExpr(std::move(n));
}

DistExpr DistExpr::shift(DistExpr base, const Rational& mu) {
    if (!base.is_atom() || !std::holds_alternative<GammaAtom>(*base.as_atom()))
        throw unsupported_error("shift is only supported on Gamma atoms: " + base.render());
    if (mu == 0) return base;
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Shift;
    n->base = base.node_;
    n->value = mu;
    return DistExpr(std::move(n));
}

DistExpr DistExpr::scale(DistExpr base, const Rational& c) {
    if (c == 0) throw invalid_parameter("scale constant must be nonzero");
    if (c == 1) return base;
    if (c < 0 && base.support() == SupportKind::Positive)
        throw unsupported_error("negative scaling of a positive variable is not represented");
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Scale;
    n->base = base.node_;
    n->value = c;
    return DistExpr(std::move(n));
}

DistExpr::Tag DistExpr::tag() const {
    switch (node_->tag) {
        case Node::Tag::Atom: return Tag::Atom;
        case Node::Tag::Product: return Tag::Product;
        case Node::Tag::Power: return Tag::Power;
        case Node::Tag::Shift: return Tag::Shift;
        case Node::Tag::Scale: return Tag::Scale;
    }
    return Tag::Atom;
}

const AtomKind* DistExpr::as_atom() const {
    return is_atom() ? &node_->atom : nullptr;
}

const std::vector<DistExpr>* DistExpr::as_product() const {
    return node_->tag == Node::Tag::Product ? &node_->factors : nullptr;
}

DistExpr DistExpr::base() const {
    if (!node_->base) throw error("expression node has no base");
    return DistExpr(node_->base);
}

const Rational& DistExpr::value() const { return node_->value; }

SupportKind DistExpr::support() const {
    switch (node_->tag) {
        case Node::Tag::Atom:
            return std::visit(
                [](const auto& v) -> SupportKind {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, NormalAtom>)
                        return v.mu == 0 ? SupportKind::Symmetric : SupportKind::RealLine;
                    else if constexpr (std::is_same_v<T, StudentTAtom> || std::is_same_v<T, VGSymAtom>)
                        return SupportKind::Symmetric;
                    else if constexpr (std::is_same_v<T, VGAtom>)
                        return v.theta == 0 ? SupportKind::Symmetric : SupportKind::RealLine;
                    else
                        return SupportKind::Positive;
                },
                node_->atom);
        case Node::Tag::Product: {
            SupportKind s = SupportKind::Positive;
            for (const auto& f : node_->factors) {
                SupportKind fs = f.support();
                if (fs == SupportKind::RealLine) return SupportKind::RealLine;
                if (fs == SupportKind::Symmetric) s = SupportKind::Symmetric;
            }
            return s;
        }
        case Node::Tag::Power: {
            SupportKind bs = DistExpr(node_->base).support();
            if (bs == SupportKind::Positive) return SupportKind::Positive;
            if (bs == SupportKind::Symmetric && is_integer(node_->value))
                return to_long(node_->value) % 2 == 0 ? SupportKind::Positive : SupportKind::Symmetric;
            return SupportKind::RealLine;
        }
        case Node::Tag::Shift: {
            SupportKind bs = DistExpr(node_->base).support();
            if (bs == SupportKind::Positive && node_->value > 0) return SupportKind::Positive;
            return SupportKind::RealLine;
        }
        case Node::Tag::Scale:
            return DistExpr(node_->base).support(); // negative scaling of positives rejected earlier
    }
    return SupportKind::RealLine;
}

bool DistExpr::operator==(const DistExpr& o) const {
    if (node_ == o.node_) return true;
    if (node_->tag != o.node_->tag) return false;
    switch (node_->tag) {
        case Node::Tag::Atom:
            return atom_equal(node_->atom, o.node_->atom);
        case Node::Tag::Product: {
            if (node_->factors.size() != o.node_->factors.size()) return false;
            for (std::size_t i = 0; i < node_->factors.size(); ++i)
                if (!(node_->factors[i] == o.node_->factors[i])) return false;
            return true;
        }
        default:
            return node_->value == o.node_->value && DistExpr(node_->base) == DistExpr(o.node_->base);
    }
}

std::string DistExpr::render() const {
    switch (node_->tag) {
        case Node::Tag::Atom: {
            std::ostringstream os;
            os << atom_name(node_->atom) << "(";
            auto ps = atom_params(node_->atom);
            for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << to_string(ps[i]);
            os << ")";
            return os.str();
        }
        case Node::Tag::Product: {
            std::ostringstream os;
            for (std::size_t i = 0; i < node_->factors.size(); ++i) {
                if (i) os << " * ";
                const DistExpr& f = node_->factors[i];
                bool paren = f.node_->tag == Node::Tag::Product || f.node_->tag == Node::Tag::Scale;
                os << (paren ? "(" : "") << f.render() << (paren ? ")" : "");
            }
            return os.str();
        }
        case Node::Tag::Power: {
            DistExpr b(node_->base);
            bool paren = !b.is_atom();
            std::string e = to_string(node_->value);
            bool pe = !is_integer(node_->value) || node_->value < 0;
            return (paren ? "(" : "") + b.render() + (paren ? ")" : "") + "^" +
                   (pe ? "(" + e + ")" : e);
        }
        case Node::Tag::Shift:
            return "shift(" + DistExpr(node_->base).render() + "," + to_string(node_->value) + ")";
        case Node::Tag::Scale: {
            DistExpr b(node_->base);
            bool paren = b.node_->tag == Node::Tag::Product || b.node_->tag == Node::Tag::Scale;
            return to_string(node_->value) + " * " + (paren ? "(" : "") + b.render() +
                   (paren ? ")" : "");
        }
    }
    return "?";
}

std::string DistExpr::to_json() const {
    nlohmann::json j;
    switch (node_->tag) {
        case Node::Tag::Atom: {
            j["kind"] = atom_name(node_->atom);
            nlohmann::json params;
            auto names = atom_param_names(node_->atom);
            auto values = atom_params(node_->atom);
            for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = to_string(values[i]);
            j["params"] = params;
            break;
        }
        case Node::Tag::Product: {
            j["kind"] = "product";
            j["factors"] = nlohmann::json::array();
            for (const auto& f : node_->factors) j["factors"].push_back(nlohmann::json::parse(f.to_json()));
            break;
        }
        case Node::Tag::Power:
            j["kind"] = "power";
            j["gamma"] = to_string(node_->value);
            j["base"] = nlohmann::json::parse(DistExpr(node_->base).to_json());
            break;
        case Node::Tag::Shift:
            j["kind"] = "shift";
            j["mu"] = to_string(node_->value);
            j["base"] = nlohmann::json::parse(DistExpr(node_->base).to_json());
            break;
        case Node::Tag::Scale:
            j["kind"] = "scale";
            j["c"] = to_string(node_->value);
            j["base"] = nlohmann::json::parse(DistExpr(node_->base).to_json());
            break;
    }
    return j.dump();
}

// ----- MomentValue ------------------------------------------------------------------

const Rational& MomentValue::exact_value() const {
    if (!is_exact()) throw error("moment is not exact");
    return exact_;
}

std::string MomentValue::str() const {
    switch (kind_) {
        case Kind::Exact: return to_string(exact_);
        case Kind::Approx: return approx_.str(static_cast<int>(Real::precision_digits()));
        default: return "does not exist";
    }
}

} // namespace stein
