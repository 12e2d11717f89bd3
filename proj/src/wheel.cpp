#include "wheelsym/wheel.hpp"

#include <map>
#include <numeric>

#include "wheelsym/error.hpp"
#include "wheelsym/parallel.hpp"

namespace wheelsym {

namespace {

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

// u^0 .. u^{M-1}
std::vector<CycNum> root_table(const FieldRef& field)
{
    std::vector<CycNum> out;
    const long m = static_cast<long>(field->conductor());
    out.reserve(static_cast<std::size_t>(m));
    for (long e = 0; e < m; ++e)
        out.push_back(CycNum::root_of_unity(field, e));
    return out;
}

// Every tuple in {0..base-1}^len, lexicographic.
std::vector<std::vector<int>> all_tuples(int len, int base)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(len), 0);
    while (true) {
        out.push_back(cur);
        int pos = len - 1;
        while (pos >= 0 && cur[pos] == base - 1)
            cur[pos--] = 0;
        if (pos < 0)
            break;
        ++cur[pos];
    }
    return out;
}

} // namespace

WheelSpec::WheelSpec(int k, int r, FieldRef field, long t_exp, long q_exp)
    : k_(k), r_(r), field_(std::move(field)), t_exp_(t_exp), q_exp_(q_exp)
{
}

WheelSpec WheelSpec::make(int k, int r)
{
    if (k < 1)
        throw DomainError("wheel: k must be positive");
    if (r < 2)
        throw DomainError("wheel: r must be at least 2");
    if (std::gcd(k + 1, r - 1) != 1)
        throw DomainError("wheel: k+1 = " + std::to_string(k + 1) + " and r-1 = " +
                          std::to_string(r - 1) + " must be coprime");
    const long m = static_cast<long>(k + 1) * (r - 1);
    return WheelSpec(k, r, make_field(static_cast<unsigned>(m)), mod(r - 1, m), mod(-(k + 1), m));
}

std::vector<CycNum> WheelSpec::wheel_set() const
{
    std::vector<CycNum> out;
    for (int s = 0; s <= r_ - 2; ++s)
        out.push_back(CycNum::root_of_unity(field_, t_exp_ + s * q_exp_));
    return out;
}

WheelSpec WheelSpec::r2_companion() const
{
    return WheelSpec(k_, 2, field_, t_exp_, 0);
}

std::vector<WheelPlane> wheel_planes(const WheelSpec& spec)
{
    const long m = static_cast<long>(spec.field()->conductor());
    std::vector<WheelPlane> out;
    for (auto& shifts : all_tuples(spec.k(), spec.r() - 1)) {
        WheelPlane plane;
        plane.zeta_power.push_back(0);
        for (int i = 1; i <= spec.k(); ++i)
            plane.zeta_power.push_back(mod(i * spec.t_exponent() + shifts[i - 1] * spec.q_exponent(), m));
        plane.shifts = std::move(shifts);
        out.push_back(std::move(plane));
    }
    return out;
}

namespace {

MPoly restrict_with_table(const MPoly& f, const WheelPlane& plane, const std::vector<CycNum>& roots)
{
    const std::size_t span = plane.zeta_power.size();
    if (static_cast<std::size_t>(f.nvars()) < span)
        throw DomainError("plane restriction needs at least k+1 variables");
    const long m = static_cast<long>(roots.size());
    MPoly out(f.nvars(), f.field());
    Exponents img(static_cast<std::size_t>(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        long power = 0;
        int merged = 0;
        for (std::size_t i = 0; i < span; ++i) {
            merged += e[i];
            power += e[i] * plane.zeta_power[i];
            img[i] = 0;
        }
        img[0] = merged;
        for (std::size_t i = span; i < e.size(); ++i)
            img[i] = e[i];
        out.add_term(img, c * roots[static_cast<std::size_t>(mod(power, m))]);
    }
    return out;
}

} // namespace

MPoly restrict_to_plane(const MPoly& f, const WheelPlane& plane, const WheelSpec& spec)
{
    return restrict_with_table(f.embedded(spec.field()), plane, root_table(spec.field()));
}

Membership is_member(const MPoly& f, const WheelSpec& spec)
{
    Membership out;
    if (f.nvars() < spec.k() + 1)
        return out;
    const MPoly g = f.embedded(spec.field());
    const auto roots = root_table(spec.field());
    for (const auto& plane : wheel_planes(spec)) {
        const MPoly res = restrict_with_table(g, plane, roots);
        if (res.is_zero())
            continue;
        out.member = false;
        out.shifts = plane.shifts;
        out.residual_exps = res.terms().rbegin()->first;
        out.residual_coeff = res.terms().rbegin()->second;
        return out;
    }
    return out;
}

Membership is_member(const SymPoly& f, const WheelSpec& spec)
{
    return is_member(f.poly(), spec);
}

ConstraintSystem constraint_system(const WheelSpec& spec, int n, int d)
{
    ConstraintSystem sys;
    sys.columns = partitions_of(d, n);
    if (n < spec.k() + 1)
        return sys;
    const auto planes = wheel_planes(spec);
    const auto roots = root_table(spec.field());
    const std::size_t ncols = sys.columns.size();

    std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, CycNum>>> sparse;
    for (std::size_t col = 0; col < ncols; ++col) {
        const MPoly m = monomial_sym(sys.columns[col], spec.field()).poly();
        for (std::size_t p = 0; p < planes.size(); ++p) {
            const MPoly restricted = restrict_with_table(m, planes[p], roots);
            for (const auto& [e, c] : restricted.terms()) {
                auto [it, fresh] = row_of.try_emplace({p, e}, sparse.size());
                if (fresh)
                    sparse.emplace_back();
                sparse[it->second].emplace_back(col, c);
            }
        }
    }
    sys.rows.assign(sparse.size(), Row(ncols, CycNum(spec.field())));
    for (std::size_t i = 0; i < sparse.size(); ++i)
        for (auto& [col, c] : sparse[i])
            sys.rows[i][col] = c;
    return sys;
}

std::size_t dimension_oracle(const WheelSpec& spec, int n, int d)
{
    ConstraintSystem sys = constraint_system(spec, n, d);
    const std::size_t ncols = sys.columns.size();
    return ncols - rank_fraction_free(std::move(sys.rows), ncols);
}

std::vector<SymPoly> oracle_basis(const WheelSpec& spec, int n, int d)
{
    const ConstraintSystem sys = constraint_system(spec, n, d);
    std::vector<SymPoly> out;
    for (const auto& v : nullspace(sys.rows, sys.columns.size(), spec.field())) {
        MExpansion coeffs;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero())
                coeffs.emplace(sys.columns[j], v[j]);
        out.push_back(SymPoly::from_m_basis(n, spec.field(), coeffs));
    }
    return out;
}

DimensionTable dimension_table(const WheelSpec& spec, int n, int max_degree, int jobs)
{
    DimensionTable table{spec.k(), spec.r(), {}};
    table.entries.resize(static_cast<std::size_t>(max_degree) + 1);
    parallel_for(table.entries.size(), jobs, [&](std::size_t d) {
        table.entries[d] = {n, static_cast<int>(d), dimension_oracle(spec, n, static_cast<int>(d))};
    });
    return table;
}

nlohmann::json to_json(const DimensionTable& table)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries)
        entries.push_back({{"n", e.n}, {"d", e.d}, {"dim", e.dim}});
    return {{"schema", "1"}, {"k", table.k}, {"r", table.r}, {"entries", entries}};
}

std::optional<Violation> find_violation(const SymPoly& g, const WheelSpec& spec, int trials)
{
    const int n = g.nvars();
    const int k = spec.k();
    if (n <= k)
        throw DomainError("find_violation needs more than k variables");
    const FieldRef& field = spec.field();
    const MPoly f = g.poly().embedded(field);
    const int free_count = n - k - 1;

    for (const auto& shifts : all_tuples(k + 1, spec.r() - 1)) {
        for (int attempt = 0; attempt < trials; ++attempt) {
            const mpq_class c = attempt + 1;
            std::vector<mpq_class> ys;
            std::vector<CycNum> point;
            for (int i = 0; i <= k; ++i)
                point.push_back(CycNum::root_of_unity(
                                    field, i * spec.t_exponent() + shifts[i] * spec.q_exponent()) *
                                c);
            for (int j = 0; j < free_count; ++j) {
                mpq_class y(2 * (j + attempt) + 3, j + attempt + 2);
                y.canonicalize();
                ys.push_back(y);
                point.push_back(CycNum::rational(field, y));
            }
            CycNum value = f.evaluate(point);
            if (!value.is_zero())
                return Violation{shifts, c, std::move(ys), std::move(value)};
        }
    }
    return std::nullopt;
}

} // namespace wheelsym
