#include "stein/forms.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

namespace stein {

AssumptionOneForm::AssumptionOneForm(EulerPoly L, Rational b, unsigned q, EulerPoly K)
    : L_(std::move(L)), b_(std::move(b)), q_(q), K_(std::move(K)) {
    if (b_ == 0 || K_.is_zero())
        throw degenerate_operator("form requires a nonzero M^q side");
    if (q_ == 0)
        throw degenerate_operator("q = 0 has no M^q separation");
    if (L_.is_zero())
        throw degenerate_operator("form requires a nonzero theta side");
}

ExpandedOp AssumptionOneForm::expand() const {
    ExpandedOp mk = ExpandedOp::compose(ExpandedOp::m_power(static_cast<int>(q_)), K_.to_expanded());
    return L_.to_expanded() - b_ * mk;
}

std::string AssumptionOneForm::render() const {
    std::ostringstream os;
    os << L_.render();
    // fold K's leading coefficient into the displayed constant so the factor
    // list prints monic
    Rational b = b_;
    EulerPoly k = K_;
    if (k.factorization()) {
        b *= k.factorization()->lc;
        k = (1 / k.factorization()->lc) * k;
    }
    os << (b < 0 ? " + " : " - ");
    if (b < 0) b = -b;
    if (b != 1) os << to_string(b) << " ";
    os << "M" << (q_ > 1 ? "^" + std::to_string(q_) : "");
    if (!(k.degree() == 0 && k.coeff(0) == 1)) os << " " << k.render();
    return os.str();
}

std::string AssumptionOneForm::to_json() const {
    nlohmann::json j;
    auto poly = [](const EulerPoly& p) {
        nlohmann::json o;
        o["coeffs"] = nlohmann::json::array();
        for (int i = 0; i <= p.degree(); ++i) o["coeffs"].push_back(to_string(p.coeff(i)));
        if (p.factorization()) {
            o["lc"] = to_string(p.factorization()->lc);
            o["t_params"] = nlohmann::json::array();
            for (const auto& r : p.factorization()->params) o["t_params"].push_back(to_string(r));
        }
        return o;
    };
    j["L"] = poly(L_);
    j["b"] = to_string(b_);
    j["q"] = q_;
    j["K"] = poly(K_);
    j["expanded"] = nlohmann::json::parse(expand().to_json());
    return j.dump();
}

DetectResult detect_assumption1(const ExpandedOp& a) {
    if (a.is_zero()) throw shape_error("zero operator");
    std::map<int, ExpandedOp> groups; // offset m-d -> diagonal part M^i D^i
    for (const auto& [k, c] : a.terms()) {
        int off = k.m - k.d;
        ExpandedOp& g = groups[off];
        g.set(k.d, k.d, g.coeff(k.d, k.d) + c);
    }
    if (groups.size() > 2)
        throw not_assumption_one("operator has " + std::to_string(groups.size()) +
                                 " diagonal bands, need exactly 2");
    if (groups.size() < 2)
        throw degenerate_operator("operator has a single diagonal band");
    auto it = groups.begin();
    const int d2 = it->first;        // lower offset -> L side
    EulerPoly e2 = expanded_group_to_euler(it->second);
    ++it;
    const int d1 = it->first;        // upper offset -> M^q side
    EulerPoly e1 = expanded_group_to_euler(it->second);

    // A = M^{d2} E2(theta) + M^{d1} E1(theta) = [E2(theta-d2) + M^{d1-d2} E1(theta-d2)] M^{d2}
    EulerPoly L = e2.shift_arg(Rational(-d2));
    EulerPoly bk = Rational(-1) * e1.shift_arg(Rational(-d2));
    Rational b = bk.leading();
    EulerPoly K = (1 / b) * bk;
    L.ensure_factorization();
    K.ensure_factorization();
    return DetectResult{AssumptionOneForm(std::move(L), b, static_cast<unsigned>(d1 - d2), std::move(K)),
                        d2};
}

} // namespace stein
