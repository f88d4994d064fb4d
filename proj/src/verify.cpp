#include "stein/verify.hpp"

#include <algorithm>
#include <json.hpp>

namespace stein {

MomentValue moment_residual(const ExpandedOp& a, const DistExpr& oracle, long k) {
    if (k < 0) throw invalid_parameter("residual index must be non-negative");
    bool approx = false;
    Rational ex = 0;
    Real ap;
    for (const auto& [key, c] : a.terms()) {
        Integer ff = falling(k, static_cast<unsigned long>(key.d));
        if (ff == 0) continue;
        long idx = k + key.m - key.d;
        MomentValue mu = moment(oracle, idx);
        if (!mu.exists())
            throw moment_unavailable("moment of index " + std::to_string(idx) + " of " +
                                         oracle.render() + " does not exist",
                                     idx);
        if (mu.is_exact() && !approx) {
            ex += c * Rational(ff) * mu.exact_value();
        } else {
            if (!approx) { ap = Real(ex); approx = true; }
            ap += Real(c * Rational(ff)) * mu.as_real();
        }
    }
    return approx ? MomentValue::approx(ap) : MomentValue::exact(ex);
}

std::vector<Rational> derive_moments(const ExpandedOp& a, const std::vector<Rational>& seeds,
                                     long upto) {
    if (a.is_zero()) throw shape_error("zero operator");
    auto offsets = a.diag_offsets();
    long dmax = *offsets.rbegin();
    long dmin = *offsets.begin();
    if (dmax == dmin)
        throw unsupported_error("single diagonal band carries no moment recurrence");
    long m = dmax - dmin - 1;
    if (static_cast<long>(seeds.size()) != m + 1)
        throw invalid_parameter("need exactly " + std::to_string(m + 1) + " seeds mu_0..mu_" +
                                std::to_string(m));
    if (dmin > 0)
        throw unsupported_error("recurrence cannot reach mu_" + std::to_string(m + 1) +
                                ": every term raises the moment index");
    std::vector<Rational> mu = seeds;
    // Row k relates mu_{k+dmin}..mu_{k+dmax} and determines mu_{k+dmax}; the
    // first productive row is k = -dmin, which references exactly mu_0..mu_m.
    for (long k = -dmin; static_cast<long>(mu.size()) <= upto; ++k) {
        Rational lead = 0, rest = 0;
        for (const auto& [key, c] : a.terms()) {
            Integer ff = falling(k, static_cast<unsigned long>(key.d));
            if (ff == 0) continue;
            long idx = k + key.m - key.d;
            if (key.m - key.d == dmax) {
                lead += c * Rational(ff);
            } else {
                if (idx < 0 || idx >= static_cast<long>(mu.size()))
                    throw invalid_parameter("recurrence references unavailable mu_" +
                                            std::to_string(idx));
                rest += c * Rational(ff) * mu[static_cast<std::size_t>(idx)];
            }
        }
        if (lead == 0) throw recurrence_breakdown(k);
        mu.push_back(-rest / lead);
    }
    return {mu.begin() + (m + 1), mu.end()};
}

namespace {

// Column order: descending derivative order, then descending M-degree.
std::vector<MonoKey> ansatz_columns(int max_d, int max_m) {
    std::vector<MonoKey> cols;
    for (int d = max_d; d >= 0; --d)
        for (int m = max_m; m >= 0; --m) cols.push_back(MonoKey{d, m});
    return cols;
}

} // namespace

NullSpaceReport null_space_search(const DistExpr& oracle, int max_d_order, int max_m_degree,
                                  std::optional<long> rows_opt) {
    if (max_d_order < 0 || max_m_degree < 0) throw invalid_parameter("negative ansatz bounds");
    std::vector<MonoKey> cols = ansatz_columns(max_d_order, max_m_degree);
    long ncols = static_cast<long>(cols.size());
    long nrows = rows_opt.value_or(ncols);
    if (nrows < 1) throw invalid_parameter("need at least one constraint row");

    NullSpaceReport rep;
    rep.rows = nrows;
    rep.cols = ncols;
    rep.matrix.assign(static_cast<std::size_t>(nrows), {});
    for (long k = 0; k < nrows; ++k) {
        auto& row = rep.matrix[static_cast<std::size_t>(k)];
        row.reserve(static_cast<std::size_t>(ncols));
        for (const auto& key : cols) {
            Integer ff = falling(k, static_cast<unsigned long>(key.d));
            if (ff == 0) {
                row.push_back(0);
                continue;
            }
            long idx = k + key.m - key.d;
            MomentValue mu = moment(oracle, idx);
            if (!mu.exists())
                throw moment_unavailable("constraint row " + std::to_string(k) +
                                             " needs nonexistent moment mu_" + std::to_string(idx),
                                         idx);
            if (!mu.is_exact())
                throw unsupported_error("constraint row " + std::to_string(k) +
                                        " needs a non-rational moment mu_" + std::to_string(idx));
            row.push_back(Rational(ff) * mu.exact_value());
        }
    }

    // Exact Gaussian elimination with partial pivoting by numerator magnitude.
    std::vector<std::vector<Rational>> a = rep.matrix;
    std::vector<long> pivot_col_of_row;
    std::vector<bool> col_is_pivot(static_cast<std::size_t>(ncols), false);
    long r = 0;
    Rational det = 1;
    long swaps = 0;
    for (long c = 0; c < ncols && r < nrows; ++c) {
        long best = -1;
        Integer best_num = 0;
        for (long i = r; i < nrows; ++i) {
            const Rational& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (v == 0) continue;
            Integer an = v.get_num();
            if (an < 0) an = -an;
            if (best < 0 || an > best_num) {
                best = i;
                best_num = an;
            }
        }
        if (best < 0) continue;
        if (best != r) {
            std::swap(a[static_cast<std::size_t>(best)], a[static_cast<std::size_t>(r)]);
            ++swaps;
        }
        col_is_pivot[static_cast<std::size_t>(c)] = true;
        pivot_col_of_row.push_back(c);
        const Rational p = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        det *= p;
        for (long i = 0; i < nrows; ++i) {
            if (i == r) continue;
            Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / p;
            if (f == 0) continue;
            for (long j = c; j < ncols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    if (nrows == ncols) {
        rep.determinant = (r < ncols) ? Rational(0) : (swaps % 2 ? -det : det);
    }

    // null-space basis from the reduced system
    for (long c = 0; c < ncols; ++c) {
        if (col_is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(ncols), Rational(0));
        v[static_cast<std::size_t>(c)] = 1;
        for (long i = 0; i < static_cast<long>(pivot_col_of_row.size()); ++i) {
            long pc = pivot_col_of_row[static_cast<std::size_t>(i)];
            const auto& row = a[static_cast<std::size_t>(i)];
            v[static_cast<std::size_t>(pc)] =
                -row[static_cast<std::size_t>(c)] / row[static_cast<std::size_t>(pc)];
        }
        ExpandedOp op;
        for (long j = 0; j < ncols; ++j)
            if (v[static_cast<std::size_t>(j)] != 0)
                op.set(cols[static_cast<std::size_t>(j)].d, cols[static_cast<std::size_t>(j)].m,
                       v[static_cast<std::size_t>(j)]);
        // re-check: every basis operator annihilates all constraint rows
        for (long k = 0; k < nrows; ++k) {
            MomentValue res = moment_residual(op, oracle, k);
            if (!res.is_exact() || res.exact_value() != 0)
                throw error("internal: null-space vector fails residual re-check");
        }
        rep.basis.push_back(std::move(op));
    }
    return rep;
}

std::string NullSpaceReport::to_json() const {
    nlohmann::json j;
    j["rows"] = rows;
    j["cols"] = cols;
    if (determinant) {
        j["determinant"] = is_integer(*determinant) ? determinant->get_num().get_str()
                                                    : to_string(*determinant);
    } else {
        j["determinant"] = nullptr;
    }
    j["verdict"] = basis.empty() ? "UniqueZeroOnly" : "FoundOperators";
    j["basis"] = nlohmann::json::array();
    for (const auto& op : basis) j["basis"].push_back(nlohmann::json::parse(op.to_json()));
    j["matrix"] = nlohmann::json::array();
    for (const auto& row : matrix) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        j["matrix"].push_back(r);
    }
    return j.dump();
}

} // namespace stein
