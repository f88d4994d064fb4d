#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "stein/cli.hpp"

namespace {

std::vector<stein::Rational> parse_list(const std::string& s) {
    std::vector<stein::Rational> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!piece.empty()) out.push_back(stein::rat_parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stein - polynomial Stein operators for products, powers and sums of classical distributions"};
    app.require_subcommand(1);

    std::string expr;
    stein::CommandOptions opt;
    std::string seeds_arg, probes_arg, orders_arg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("expression", expr, "distribution expression, e.g. \"Gamma(2,1)*Gamma(3,1)\"")
            ->required();
        cmd->add_flag("--json", opt.json, "emit JSON");
        cmd->add_flag("--explain", opt.explain, "append the construction trace");
        return cmd;
    };

    auto* c_op = add_common(app.add_subcommand("operator", "construct the Stein operator"));
    auto* c_verify = add_common(app.add_subcommand("verify", "check moment residuals"));
    c_verify->add_option("--kmax", opt.kmax, "largest residual index (default 12)");
    auto* c_moments = add_common(app.add_subcommand("moments", "exact moments"));
    c_moments->add_option("--kmax", opt.kmax, "largest moment index (default 12)");
    c_moments->add_option("--seeds", seeds_arg, "seed moments mu_0,mu_1,...: derive the rest from the operator");
    auto* c_ode = add_common(app.add_subcommand("density-ode", "dual ODE satisfied by the density"));
    auto* c_gd = add_common(app.add_subcommand("g-density", "Meijer-G density candidate + Mellin check"));
    c_gd->add_option("--probes", probes_arg, "probe points s1,s2,... for the numeric comparison");
    c_gd->add_option("--g-orders", orders_arg, "override the (m,n) order selection, as m,n");
    auto* c_mellin = add_common(app.add_subcommand("mellin", "symbolic Mellin transform"));
    auto* c_min = add_common(app.add_subcommand("minimal-search", "exact null-space search for operators of a fixed shape"));
    long rows = -1;
    c_min->add_option("--order", opt.order, "max derivative order of the ansatz (default 2)");
    c_min->add_option("--degree", opt.degree, "max M-degree of the ansatz (default 1)");
    c_min->add_option("--rows", rows, "number of constraint rows (default: number of unknowns)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seeds_arg.empty()) opt.seeds = parse_list(seeds_arg);
        if (!probes_arg.empty()) opt.probes = parse_list(probes_arg);
        if (!orders_arg.empty()) {
            auto v = parse_list(orders_arg);
            if (v.size() != 2) throw stein::invalid_parameter("--g-orders wants m,n");
            opt.g_orders = {static_cast<int>(stein::to_long(v[0])),
                            static_cast<int>(stein::to_long(v[1]))};
        }
        if (rows >= 0) opt.rows = rows;
    } catch (const stein::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    stein::CommandResult res;
    if (c_op->parsed()) res = stein::run_operator(expr, opt);
    else if (c_verify->parsed()) res = stein::run_verify(expr, opt);
    else if (c_moments->parsed()) res = stein::run_moments(expr, opt);
    else if (c_ode->parsed()) res = stein::run_density_ode(expr, opt);
    else if (c_gd->parsed()) res = stein::run_g_density(expr, opt);
    else if (c_mellin->parsed()) res = stein::run_mellin(expr, opt);
    else if (c_min->parsed()) res = stein::run_minimal_search(expr, opt);

    (res.exit_code == 0 ? std::cout : std::cerr) << res.output;
    return res.exit_code;
}
