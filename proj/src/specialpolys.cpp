#include "wheelsym/specialpolys.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "wheelsym/error.hpp"
#include "wheelsym/linalg.hpp"

namespace wheelsym {

namespace {

MPoly linear(int n, int i, const CycNum& ci, int j, const CycNum& cj)
{
    MPoly out(n, ci.field());
    Exponents e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    out.add_term(e, ci);
    e[i] = 0;
    e[j] = 1;
    out.add_term(e, cj);
    return out;
}

} // namespace

CycNum hall_littlewood_normalization(const Partition& lambda, const CycNum& t)
{
    const FieldRef& field = t.field();
    const CycNum one = CycNum::rational(field, 1);
    CycNum norm = one;
    for (int i = 0; i < lambda.length();) {
        int j = i;
        while (j < lambda.length() && lambda[j] == lambda[i])
            ++j;
        const int mult = j - i;
        for (int e = 1; e <= mult; ++e) {
            const CycNum den = one - t.pow(e);
            if (den.is_zero())
                throw NormalizationPole(lambda[i], mult, e);
            norm *= (one - t) / den;
        }
        i = j;
    }
    return norm;
}

SymPoly hall_littlewood(const Partition& lambda, const CycNum& t)
{
    const CycNum norm = hall_littlewood_normalization(lambda, t);
    const int n = lambda.length();
    const FieldRef& field = t.field();
    const CycNum one = CycNum::rational(field, 1);

    MPoly base = MPoly::monomial(lambda.parts(), one);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            base = base * linear(n, i, one, j, -t);
    MPoly result = divide_by_vandermonde(antisymmetrize(base)) * norm;
    return SymPoly(std::move(result));
}

SymPoly macdonald_operator(int r, const MacParams& p, const SymPoly& f)
{
    const int n = f.nvars();
    if (r < 0 || r > n)
        throw DomainError("Macdonald operator index r must lie in 0..n");
    const FieldRef& field = f.field();
    const CycNum one = CycNum::rational(field, 1);

    // (t x_i - x_j) and (x_a - x_b) for every ordered pair
    std::vector<std::vector<MPoly>> twisted(n), plain(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            twisted[i].push_back(i == j ? MPoly(n, field) : linear(n, i, p.t, j, -one));
            plain[i].push_back(i == j ? MPoly(n, field) : linear(n, i, one, j, -one));
        }

    MPoly total(n, field);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != r)
            continue;
        std::vector<CycNum> scale(static_cast<std::size_t>(n), one);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                scale[i] = p.q;
        MPoly term = f.poly().scale_variables(scale);
        bool negate = false;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const bool in_a = mask & (1u << a);
                const bool in_b = mask & (1u << b);
                if (in_a == in_b) {
                    // pair absent from this term's denominator: multiply up to
                    // the common Vandermonde denominator
                    term = term * plain[a][b];
                } else if (in_a) {
                    term = term * twisted[a][b];
                } else {
                    // denominator (x_b - x_a) = -(x_a - x_b)
                    term = term * twisted[b][a];
                    negate = !negate;
                }
            }
        }
        if (negate)
            total -= term;
        else
            total += term;
    }
    MPoly quotient = divide_by_vandermonde(total) * p.t.pow(r * (r - 1) / 2);
    if (!quotient.is_symmetric())
        throw Fault("Macdonald operator produced a non-symmetric polynomial");
    return SymPoly(std::move(quotient));
}

std::vector<CycNum> eigen_parameters(const Partition& lambda, const MacParams& p)
{
    const int n = lambda.length();
    std::vector<CycNum> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(p.q.pow(lambda[i]) * p.t.pow(n - 1 - i));
    return out;
}

CycNum elementary_symmetric(int r, const std::vector<CycNum>& values)
{
    if (values.empty())
        throw DomainError("elementary_symmetric needs at least one value for its field");
    // coefficients of prod (1 + X v)
    std::vector<CycNum> e(values.size() + 1, CycNum(values[0].field()));
    e[0] = CycNum::rational(values[0].field(), 1);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k-- > 0;)
            e[k + 1] += e[k] * values[i];
    if (r < 0 || r > static_cast<int>(values.size()))
        return CycNum(values[0].field());
    return e[r];
}

EigenReport verify_eigen(const Partition& lambda, const MacParams& p, const SymPoly& poly)
{
    if (poly.is_zero())
        throw DomainError("verify_eigen needs a nonzero polynomial");
    const auto params = eigen_parameters(lambda, p);
    EigenReport report;
    for (int r = 0; r <= lambda.length(); ++r) {
        EigenCheck check{r, elementary_symmetric(r, params), false};
        check.pass = macdonald_operator(r, p, poly) == poly * check.eigenvalue;
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

SymPoly macdonald_poly(const Partition& lambda, const MacParams& p)
{
    const int n = lambda.length();
    const FieldRef& field = p.t.field();

    std::vector<Partition> below;  // lambda first, then descending lex
    for (const auto& mu : partitions_of(lambda.weight(), n)) {
        const auto cmp = compare_dominance(mu, lambda);
        if (cmp == Dominance::less || cmp == Dominance::equal)
            below.push_back(mu);
    }
    std::reverse(below.begin(), below.end());

    std::map<Partition, SymPoly> image;  // D_n^1 m_nu
    for (const auto& nu : below)
        image.emplace(nu, macdonald_operator(1, p, monomial_sym(nu, field)));

    const CycNum eigen = image.at(lambda).m_coefficient(lambda);
    std::map<Partition, CycNum> u;
    u.emplace(lambda, CycNum::rational(field, 1));
    for (std::size_t idx = 1; idx < below.size(); ++idx) {
        const Partition& mu = below[idx];
        CycNum rhs(field);
        for (std::size_t prev = 0; prev < idx; ++prev)
            rhs += u.at(below[prev]) * image.at(below[prev]).m_coefficient(mu);
        const CycNum gap = eigen - image.at(mu).m_coefficient(mu);
        if (gap.is_zero())
            throw NonGenericParameters("eigenvalue collision between " + lambda.key() + " and " +
                                       mu.key() + " (D_n^1 eigenvalue " + eigen.to_string() + ")");
        u.emplace(mu, rhs / gap);
    }

    SymPoly result = SymPoly::from_m_basis(n, field, u);
    if (!verify_eigen(lambda, p, result).pass)
        throw Fault("constructed Macdonald polynomial " + lambda.key() + " fails the eigen-identity");
    return result;
}

namespace {

// Truncated power series in q: coefficients of q^0..q^{size-1}.
using QSeries = std::vector<CycNum>;

QSeries series_mul(const QSeries& a, const QSeries& b, std::size_t prec)
{
    QSeries out(prec, CycNum(a.at(0).field()));
    for (std::size_t i = 0; i < prec && i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < prec && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Coefficients in q of the m_mu coefficient of D_n^1(q) m_nu, a polynomial in
// q of degree <= nu_1, recovered by interpolation at q = 0..nu_1.
std::map<Partition, QSeries> operator_in_q(const Partition& nu, const CycNum& t)
{
    const FieldRef& field = t.field();
    const int n = nu.length();
    const int deg = n ? nu[0] : 0;
    const std::size_t npts = static_cast<std::size_t>(deg) + 1;
    std::vector<SymPoly> values;
    Matrix vander(npts, Row(npts, CycNum(field)));
    for (std::size_t i = 0; i < npts; ++i) {
        const CycNum q = CycNum::rational(field, static_cast<long>(i));
        for (std::size_t j = 0; j < npts; ++j)
            vander[i][j] = q.pow(static_cast<long>(j));
        values.push_back(macdonald_operator(1, MacParams{q, t}, monomial_sym(nu, field)));
    }
    std::set<Partition> support;
    for (const auto& v : values)
        for (const auto& [mu, c] : v.m_expansion())
            support.insert(mu);
    std::map<Partition, QSeries> out;
    for (const auto& mu : support) {
        Row rhs;
        for (const auto& v : values)
            rhs.push_back(v.m_coefficient(mu));
        auto coeffs = solve_square(vander, std::move(rhs));
        if (!coeffs)
            throw Fault("interpolation nodes for the q-expansion are not distinct");
        out.emplace(mu, std::move(*coeffs));
    }
    return out;
}

} // namespace

SymPoly macdonald_poly_q_limit(const Partition& lambda, const CycNum& t)
{
    const int n = lambda.length();
    const FieldRef& field = t.field();
    const CycNum zero(field);

    std::vector<Partition> below;  // lambda first, then descending lex
    for (const auto& mu : partitions_of(lambda.weight(), n)) {
        const auto cmp = compare_dominance(mu, lambda);
        if (cmp == Dominance::less || cmp == Dominance::equal)
            below.push_back(mu);
    }
    std::reverse(below.begin(), below.end());

    // Each division loses at most lambda_1 orders of precision, and a chain
    // of divisions is no longer than the number of partitions involved.
    const std::size_t lead = n ? static_cast<std::size_t>(lambda[0]) : 0;
    const std::size_t prec0 = lead * below.size() + 1;

    std::map<Partition, std::map<Partition, QSeries>> image;
    for (const auto& nu : below)
        image.emplace(nu, operator_in_q(nu, t));
    auto entry = [&](const Partition& nu, const Partition& mu) -> const QSeries* {
        const auto& col = image.at(nu);
        auto it = col.find(mu);
        return it == col.end() ? nullptr : &it->second;
    };

    const QSeries* eigen = entry(lambda, lambda);
    if (!eigen)
        throw Fault("D_n^1 m_lambda has no m_lambda term");

    std::map<Partition, std::pair<QSeries, std::size_t>> u;  // series, precision
    {
        QSeries one(prec0, zero);
        one[0] = CycNum::rational(field, 1);
        u.emplace(lambda, std::make_pair(std::move(one), prec0));
    }
    for (std::size_t idx = 1; idx < below.size(); ++idx) {
        const Partition& mu = below[idx];
        std::size_t prec = prec0;
        QSeries rhs(prec0, zero);
        for (std::size_t prev = 0; prev < idx; ++prev) {
            const QSeries* a = entry(below[prev], mu);
            if (!a)
                continue;
            const auto& [un, pn] = u.at(below[prev]);
            prec = std::min(prec, pn);
            const QSeries prod = series_mul(un, *a, prec0);
            for (std::size_t j = 0; j < prec0; ++j)
                rhs[j] += prod[j];
        }
        QSeries gap(std::max(eigen->size(), std::size_t{1}), zero);
        for (std::size_t j = 0; j < eigen->size(); ++j)
            gap[j] = (*eigen)[j];
        if (const QSeries* self = entry(mu, mu))
            for (std::size_t j = 0; j < self->size(); ++j) {
                if (j >= gap.size())
                    gap.resize(j + 1, zero);
                gap[j] -= (*self)[j];
            }
        std::size_t val = 0;
        while (val < gap.size() && gap[val].is_zero())
            ++val;
        if (val == gap.size())
            throw NonGenericParameters("eigenvalue collision between " + lambda.key() + " and " +
                                       mu.key() + " identically in q");
        if (val >= prec)
            throw Fault("q-series precision exhausted for " + lambda.key());
        for (std::size_t j = 0; j < val; ++j)
            if (!rhs[j].is_zero())
                throw Fault("coefficient of " + mu.key() + " in P_" + lambda.key() +
                            " has a pole at q = 0");
        // (rhs / q^val) / (gap / q^val), valid below prec - val
        const std::size_t out_prec = prec - val;
        QSeries num(rhs.begin() + static_cast<std::ptrdiff_t>(val),
                    rhs.begin() + static_cast<std::ptrdiff_t>(prec));
        QSeries den(gap.begin() + static_cast<std::ptrdiff_t>(val), gap.end());
        den.resize(std::max(den.size(), out_prec), zero);
        const CycNum inv0 = den[0].inverse();
        QSeries quo(out_prec, zero);
        for (std::size_t j = 0; j < out_prec; ++j) {
            CycNum acc = num[j];
            for (std::size_t i = 1; i <= j; ++i)
                acc -= den[i] * quo[j - i];
            quo[j] = acc * inv0;
        }
        quo.resize(prec0, zero);
        u.emplace(mu, std::make_pair(std::move(quo), out_prec));
    }

    MExpansion coeffs;
    for (const auto& [mu, entry_u] : u)
        if (!entry_u.first[0].is_zero())
            coeffs.emplace(mu, entry_u.first[0]);
    SymPoly result = SymPoly::from_m_basis(n, field, coeffs);
    if (!verify_eigen(lambda, MacParams{zero, t}, result).pass)
        throw Fault("q -> 0 limit of P_" + lambda.key() + " fails the eigen-identity at q = 0");
    return result;
}

} // namespace wheelsym
