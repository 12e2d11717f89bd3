#include "wheelsym/frobenius.hpp"

#include <algorithm>
#include <set>

#include "wheelsym/error.hpp"
#include "wheelsym/linalg.hpp"
#include "wheelsym/parallel.hpp"
#include "wheelsym/specialpolys.hpp"

namespace wheelsym {

SymPoly frobenius_map(const SymPoly& f, int r_minus_1)
{
    return SymPoly(f.poly().frobenius(r_minus_1));
}

FrobeniusPreimage in_frobenius_image(const SymPoly& f, int r_minus_1)
{
    if (r_minus_1 < 1)
        throw DomainError("Frobenius exponent must be positive");
    MExpansion pre;
    for (const auto& [lambda, c] : f.m_expansion()) {
        if (!lambda.divisible_by(r_minus_1))
            return {std::nullopt, lambda};
        pre.emplace(lambda.divided(r_minus_1), c);
    }
    return {SymPoly::from_m_basis(f.nvars(), f.field(), pre), std::nullopt};
}

std::vector<ProductBasisElement> build_basis(const WheelSpec& spec, int n, int max_degree)
{
    const int step = spec.r() - 1;
    const FieldRef& field = spec.field();
    const CycNum t = spec.t();
    const auto slims = slim_partitions(n, step);

    std::vector<ProductBasisElement> out;
    for (const auto& lambda : enumerate(n, max_degree / step, PartitionFilter::admissible(spec.k(), 1))) {
        const SymPoly f = frobenius_map(hall_littlewood(lambda, t), step);
        for (const auto& mu : slims) {
            const int degree = step * lambda.weight() + mu.weight();
            if (degree > max_degree)
                continue;
            out.push_back({lambda, mu, degree, f * monomial_sym(mu, field)});
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.total_degree != b.total_degree)
            return a.total_degree < b.total_degree;
        if (a.lambda != b.lambda)
            return a.lambda < b.lambda;
        return a.mu < b.mu;
    });
    return out;
}

bool BasisReport::pass() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeReport& d) { return d.pass(); });
}

BasisReport verify_basis(const std::vector<ProductBasisElement>& elements, const WheelSpec& spec,
                         int n, int max_degree, int jobs)
{
    BasisReport report{spec.k(), spec.r(), n, {}};
    report.degrees.resize(static_cast<std::size_t>(max_degree) + 1);
    parallel_for(report.degrees.size(), jobs, [&](std::size_t idx) {
        const int d = static_cast<int>(idx);
        DegreeReport dr;
        dr.degree = d;
        const auto columns = partitions_of(d, n);
        Matrix rows;
        for (const auto& el : elements) {
            if (el.total_degree != d)
                continue;
            ++dr.count;
            if (!el.value.poly().is_homogeneous() || el.value.degree() != d)
                throw Fault("basis element " + el.lambda.key() + "*" + el.mu.key() +
                            " is not homogeneous of its stated degree");
            if (!is_member(el.value, spec).member)
                ++dr.membership_failures;
            Row row;
            for (const auto& lambda : columns)
                row.push_back(embed(el.value.m_coefficient(lambda), spec.field()));
            rows.push_back(std::move(row));
        }
        dr.independent = rank_fraction_free(std::move(rows), columns.size()) == dr.count;
        dr.oracle_dim = dimension_oracle(spec, n, d);
        report.degrees[idx] = dr;
    });
    return report;
}

nlohmann::json to_json(const BasisReport& report)
{
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& d : report.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"count", d.count},
                           {"oracle_dim", d.oracle_dim},
                           {"membership_failures", d.membership_failures},
                           {"independence", d.independent},
                           {"pass", d.pass()}});
    return {{"schema", "1"}, {"k", report.k}, {"r", report.r}, {"n", report.n},
            {"degrees", degrees}, {"pass", report.pass()}};
}

SlimSplit split_by_slim(const SymPoly& h, const WheelSpec& spec, const CycNum& generic_t)
{
    const int n = h.nvars();
    const int step = spec.r() - 1;
    const FieldRef& field = spec.field();
    const MacParams params{spec.q(), embed(generic_t, field)};
    const auto slims = slim_partitions(n, step);

    std::set<int> degrees;
    for (const auto& [lambda, c] : h.m_expansion())
        degrees.insert(lambda.weight());

    std::map<Partition, SymPoly> macdonald;
    auto macdonald_of = [&](const Partition& mu) -> const SymPoly& {
        auto it = macdonald.find(mu);
        if (it == macdonald.end())
            it = macdonald.emplace(mu, macdonald_poly(mu, params)).first;
        return it->second;
    };

    std::map<Partition, MExpansion> pre;
    for (int d : degrees) {
        const auto rows = partitions_of(d, n);
        std::vector<std::pair<Partition, Partition>> cols;  // (mu, nu)
        std::vector<SymPoly> generators;
        for (const auto& mu : slims) {
            if (mu.weight() > d || (d - mu.weight()) % step != 0)
                continue;
            for (const auto& nu : partitions_of((d - mu.weight()) / step, n)) {
                cols.emplace_back(mu, nu);
                generators.push_back(macdonald_of(mu) * frobenius_map(monomial_sym(nu, field), step));
            }
        }
        if (cols.size() != rows.size())
            throw Fault("slim splitting: " + std::to_string(cols.size()) + " generators for " +
                        std::to_string(rows.size()) + " monomials in degree " + std::to_string(d));
        Matrix a(rows.size(), Row(cols.size(), CycNum(field)));
        Row b;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j)
                a[i][j] = generators[j].m_coefficient(rows[i]);
            b.push_back(embed(h.m_coefficient(rows[i]), field));
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x)
            throw NonGenericParameters("slim splitting system is singular in degree " +
                                       std::to_string(d) + " at t = " + generic_t.to_string());
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!(*x)[j].is_zero())
                pre[cols[j].first].emplace(cols[j].second, (*x)[j]);
    }

    SlimSplit out{params.t, {}, {}};
    for (const auto& [mu, coeffs] : pre) {
        SymPoly tilde = SymPoly::from_m_basis(n, field, coeffs);
        out.cofactors.emplace(mu, frobenius_map(tilde, step));
        out.preimages.emplace(mu, std::move(tilde));
    }
    return out;
}

SlimSplit split_by_slim(const SymPoly& h, const WheelSpec& spec)
{
    for (int value : {2, 3}) {
        try {
            return split_by_slim(h, spec, CycNum::rational(spec.field(), value));
        } catch (const NonGenericParameters&) {
        }
    }
    return split_by_slim(h, spec, CycNum::rational(spec.field(), 5));
}

} // namespace wheelsym
