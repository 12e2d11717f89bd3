#include "wheelsym/charseries.hpp"

#include <algorithm>
#include <numeric>

#include "wheelsym/error.hpp"
#include "wheelsym/parallel.hpp"

namespace wheelsym {

namespace series {

Series one(int v_max)
{
    Series out(static_cast<std::size_t>(v_max) + 1, 0);
    out[0] = 1;
    return out;
}

Series multiply(const Series& a, const Series& b)
{
    const std::size_t len = std::min(a.size(), b.size());
    Series out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Series geometric(int step, int v_max)
{
    if (step < 1)
        throw DomainError("geometric series step must be positive");
    Series out(static_cast<std::size_t>(v_max) + 1, 0);
    for (int e = 0; e <= v_max; e += step)
        out[e] = 1;
    return out;
}

Series one_minus(int step, int v_max)
{
    Series out = one(v_max);
    if (step <= v_max)
        out[step] -= 1;
    return out;
}

Series stretch(const Series& a, int m, int v_max)
{
    Series out(static_cast<std::size_t>(v_max) + 1, 0);
    for (std::size_t i = 0; i < a.size() && static_cast<long>(i) * m <= v_max; ++i)
        out[i * m] = a[i];
    return out;
}

} // namespace series

CharSeries::CharSeries(int z_max, int v_max)
    : z_max_(z_max), v_max_(v_max),
      rows_(static_cast<std::size_t>(z_max) + 1, Series(static_cast<std::size_t>(v_max) + 1, 0))
{
    if (z_max < 0 || v_max < 0)
        throw DomainError("truncation orders must be nonnegative");
}

CharSeries chi_k2(int k, int z_max, int v_max)
{
    if (k < 1)
        throw DomainError("k must be positive");
    CharSeries chi(z_max, v_max);
    chi.row(0)[0] = 1;
    // A factor with s > v_max contributes v^{s j} z^j, j >= 1, beyond v_max.
    for (int s = 0; s <= v_max; ++s) {
        CharSeries next(z_max, v_max);
        for (int n = 0; n <= z_max; ++n) {
            for (int j = 0; j <= k && n + j <= z_max; ++j) {
                const int shift = s * j;
                if (shift > v_max)
                    break;
                const Series& src = chi.row(n);
                Series& dst = next.row(n + j);
                for (int d = 0; d + shift <= v_max; ++d)
                    dst[d + shift] += src[d];
            }
        }
        chi = std::move(next);
    }
    return chi;
}

Series b_n_formula(int k, int n, int v_max)
{
    Series total(static_cast<std::size_t>(v_max) + 1, 0);
    for (int a = 0; (k + 1) * a <= n; ++a) {
        const int b = n - (k + 1) * a;
        const long lead = static_cast<long>(k + 1) * a * (a - 1) / 2;
        if (lead > v_max)
            continue;
        Series term = series::one(v_max);
        for (int i = 1; i <= a; ++i)
            term = series::multiply(term, series::geometric((k + 1) * i, v_max));
        for (int j = 1; j <= b; ++j)
            term = series::multiply(term, series::geometric(j, v_max));
        const int sign = a % 2 ? -1 : 1;
        for (int d = 0; d + lead <= v_max; ++d)
            total[d + lead] += sign * term[d];
    }
    return total;
}

Series b_n_k1_closed(int n, int v_max)
{
    Series out(static_cast<std::size_t>(v_max) + 1, 0);
    const long lead = static_cast<long>(n) * (n - 1) / 2;
    if (lead > v_max)
        return out;
    Series denom_inv = series::one(v_max);
    for (int i = 1; i <= n; ++i)
        denom_inv = series::multiply(denom_inv, series::geometric(i, v_max));
    for (int d = 0; d + lead <= v_max; ++d)
        out[d + lead] = denom_inv[d];
    return out;
}

Series slim_factor(int n, int r_minus_1, int v_max)
{
    Series out = series::one(v_max);
    for (int s = 1; s <= n; ++s) {
        out = series::multiply(out, series::one_minus(s * r_minus_1, v_max));
        out = series::multiply(out, series::geometric(s, v_max));
    }
    return out;
}

CharSeries chi_kr(int k, int r, int z_max, int v_max)
{
    if (r < 2 || std::gcd(k + 1, r - 1) != 1)
        throw DomainError("chi_kr needs r >= 2 and gcd(k+1, r-1) = 1");
    CharSeries chi(z_max, v_max);
    const int step = r - 1;
    for (int n = 0; n <= z_max; ++n) {
        const Series b = series::stretch(b_n_formula(k, n, v_max / step), step, v_max);
        chi.row(n) = series::multiply(b, slim_factor(n, step, v_max));
    }
    return chi;
}

bool OracleComparison::all_match() const
{
    return std::all_of(cells.begin(), cells.end(), [](const OracleCell& c) { return c.match; });
}

OracleComparison compare_with_oracle(const CharSeries& chi, const WheelSpec& spec, int n_max,
                                     int d_max, int jobs)
{
    if (n_max > chi.z_max() || d_max > chi.v_max())
        throw DomainError("comparison range exceeds the series truncation");
    OracleComparison cmp{spec.k(), spec.r(), {}};
    for (int n = 0; n <= n_max; ++n)
        for (int d = 0; d <= d_max; ++d)
            cmp.cells.push_back({n, d, chi.coefficient(n, d), 0, false});
    parallel_for(cmp.cells.size(), jobs, [&](std::size_t i) {
        auto& cell = cmp.cells[i];
        cell.oracle = dimension_oracle(spec, cell.n, cell.d);
        cell.match = cell.formula == mpz_class(static_cast<unsigned long>(cell.oracle));
    });
    return cmp;
}

nlohmann::json to_json(const OracleComparison& cmp)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : cmp.cells)
        cells.push_back({{"n", c.n}, {"d", c.d}, {"formula", c.formula.get_str()},
                         {"oracle", c.oracle}, {"match", c.match}});
    return {{"schema", "1"}, {"k", cmp.k}, {"r", cmp.r}, {"cells", cells}, {"pass", cmp.all_match()}};
}

} // namespace wheelsym
