#pragma once

#include <gmpxx.h>

#include <vector>

#include "json.hpp"
#include "wheelsym/wheel.hpp"

namespace wheelsym {

/// Univariate series in v truncated after v^{size()-1}, integer coefficients.
using Series = std::vector<mpz_class>;

namespace series {

Series one(int v_max);
Series multiply(const Series& a, const Series& b);
/// 1 / (1 - v^step), truncated.
Series geometric(int step, int v_max);
/// 1 - v^step (for step > v_max this is just 1).
Series one_minus(int step, int v_max);
/// a(v^m), truncated to v_max.
Series stretch(const Series& a, int m, int v_max);

} // namespace series

/// sum_{n,d} g_{n,d} z^n v^d with n <= z_max, d <= v_max.
class CharSeries {
public:
    CharSeries(int z_max, int v_max);

    int z_max() const { return z_max_; }
    int v_max() const { return v_max_; }
    const Series& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
    Series& row(int n) { return rows_.at(static_cast<std::size_t>(n)); }
    const mpz_class& coefficient(int n, int d) const { return row(n).at(static_cast<std::size_t>(d)); }

    friend bool operator==(const CharSeries&, const CharSeries&) = default;

private:
    int z_max_;
    int v_max_;
    std::vector<Series> rows_;
};

/// prod_{s>=0} (1 - (v^s z)^{k+1}) / (1 - v^s z), expanded as
/// prod_{s=0}^{v_max} (1 + v^s z + ... + v^{ks} z^k).
CharSeries chi_k2(int k, int z_max, int v_max);

/// sum_{(k+1)a + b = n} (-1)^a v^{(k+1)a(a-1)/2} /
///   (prod_{i<=a} (1 - v^{(k+1)i}) prod_{j<=b} (1 - v^j)).
Series b_n_formula(int k, int n, int v_max);

/// v^{n(n-1)/2} / prod_{i=1}^n (1 - v^i), the k = 1 closed form.
Series b_n_k1_closed(int n, int v_max);

/// prod_{s=1}^n (1 - v^{s(r-1)}) / (1 - v^s).
Series slim_factor(int n, int r_minus_1, int v_max);

/// Row n: b_n^{(k)}(v^{r-1}) * slim_factor(n, r-1). Requires gcd(k+1, r-1) = 1.
CharSeries chi_kr(int k, int r, int z_max, int v_max);

struct OracleCell {
    int n = 0;
    int d = 0;
    mpz_class formula;
    std::size_t oracle = 0;
    bool match = false;
};

struct OracleComparison {
    int k = 0;
    int r = 0;
    std::vector<OracleCell> cells;

    bool all_match() const;
};

/// Per-(n, d) comparison with dimension_oracle for n <= n_max, d <= d_max;
/// cells may run in parallel.
OracleComparison compare_with_oracle(const CharSeries& chi, const WheelSpec& spec, int n_max,
                                     int d_max, int jobs = 1);

nlohmann::json to_json(const OracleComparison& cmp);

} // namespace wheelsym
