#include "doctest.h"

#include <random>

#include "wheelsym/error.hpp"
#include "wheelsym/specialpolys.hpp"
#include "wheelsym/wheel.hpp"

using namespace wheelsym;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SymPoly pair_product(int n, const FieldRef& f)
{
    const CycNum one = CycNum::rational(f, 1);
    MPoly g = MPoly::constant(n, one);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g = g * (MPoly::variable(n, i, f) + MPoly::variable(n, j, f));
    return SymPoly(g);
}

} // namespace

TEST_CASE("wheel spec")
{
    CHECK_THROWS_AS(WheelSpec::make(1, 3), DomainError);
    CHECK_THROWS_AS(WheelSpec::make(0, 2), DomainError);
    CHECK_THROWS_AS(WheelSpec::make(1, 1), DomainError);
    for (auto [k, r] : {std::pair{1, 2}, {2, 2}, {1, 4}, {2, 3}, {3, 2}}) {
        const auto spec = WheelSpec::make(k, r);
        CHECK(spec.field()->conductor() == static_cast<unsigned>(r == 2 ? k + 1 : (k + 1) * (r - 1)));
        CHECK(spec.t().pow(k + 1).is_one());
        for (int j = 1; j <= k; ++j)
            CHECK_FALSE(spec.t().pow(j).is_one());
        CHECK(spec.q().pow(r - 1).is_one());
        for (int j = 1; j < r - 1; ++j)
            CHECK_FALSE(spec.q().pow(j).is_one());
        const auto ws = spec.wheel_set();
        CHECK(ws.size() == static_cast<std::size_t>(r - 1));
        CHECK(ws[0] == spec.t());
        const auto comp = spec.r2_companion();
        CHECK(comp.r() == 2);
        CHECK(comp.t() == spec.t());
        CHECK(comp.q().is_one());
    }
}

TEST_CASE("wheel planes")
{
    const auto s12 = WheelSpec::make(1, 2);
    const auto p12 = wheel_planes(s12);
    REQUIRE(p12.size() == 1);
    CHECK(CycNum::root_of_unity(s12.field(), p12[0].zeta_power[1]) == CycNum::rational(s12.field(), -1));

    const auto s14 = WheelSpec::make(1, 4);
    const auto p14 = wheel_planes(s14);
    REQUIRE(p14.size() == 3);
    for (int s = 0; s < 3; ++s) {
        CHECK(p14[s].shifts == std::vector<int>{s});
        CHECK(CycNum::root_of_unity(s14.field(), p14[s].zeta_power[1]) == -s14.q().pow(s));
    }

    const auto s22 = WheelSpec::make(2, 2);
    const auto p22 = wheel_planes(s22);
    REQUIRE(p22.size() == 1);
    CHECK(CycNum::root_of_unity(s22.field(), p22[0].zeta_power[1]) == s22.t());
    CHECK(CycNum::root_of_unity(s22.field(), p22[0].zeta_power[2]) == s22.t().pow(2));
    CHECK(wheel_planes(WheelSpec::make(2, 3)).size() == 4);
}

TEST_CASE("membership")
{
    const auto spec = WheelSpec::make(1, 2);
    const FieldRef f = spec.field();
    CHECK(is_member(monomial_sym(P({1, 0}), f), spec).member);
    const auto bad = is_member(monomial_sym(P({1, 1}), f), spec);
    CHECK_FALSE(bad.member);
    CHECK(bad.residual_exps == Exponents{2, 0});
    REQUIRE(bad.residual_coeff);
    CHECK(*bad.residual_coeff == CycNum::rational(f, -1));
    CHECK(is_member(pair_product(3, f), spec).member);
    CHECK(is_member(SymPoly::constant(1, CycNum::rational(f, 1)), spec).member);

    // restriction is a pure substitution
    const auto planes = wheel_planes(spec);
    const MPoly g = pair_product(3, f).poly() + MPoly::variable(3, 0, f);
    const MPoly r = restrict_to_plane(g, planes[0], spec);
    const std::vector<MPoly> img{MPoly::variable(3, 0, f), -MPoly::variable(3, 0, f), MPoly::variable(3, 2, f)};
    CHECK(r == g.substitute(img));
}

TEST_CASE("ideal property")
{
    std::mt19937 rng(4);
    for (auto [k, r] : {std::pair{1, 2}, {2, 2}, {1, 4}}) {
        const auto spec = WheelSpec::make(k, r);
        for (int n = k + 1; n <= 3; ++n)
            for (int d = 0; d <= 4; ++d) {
                const auto basis = oracle_basis(spec, n, d);
                CHECK(basis.size() == dimension_oracle(spec, n, d));
                for (const auto& f : basis) {
                    CHECK(is_member(f, spec).member);
                    const auto hs = enumerate(n, 2);
                    const auto& h = hs[rng() % hs.size()];
                    CHECK(is_member(f * monomial_sym(h, spec.field()), spec).member);
                }
            }
    }
}

TEST_CASE("dimension oracle")
{
    const auto spec = WheelSpec::make(1, 2);
    CHECK(dimension_oracle(spec, 2, 0) == 0);
    CHECK(dimension_oracle(spec, 2, 1) == 1);
    CHECK(dimension_oracle(spec, 2, 2) == 1);
    CHECK(dimension_oracle(spec, 2, 3) == 2);
    CHECK(dimension_oracle(spec, 1, 3) == 1);
    CHECK(dimension_oracle(spec, 0, 0) == 1);

    // Bareiss rank against RREF rank
    for (auto [k, r] : {std::pair{1, 2}, {2, 3}, {1, 4}})
        for (int n = 2; n <= 3; ++n)
            for (int d = 0; d <= 5; ++d) {
                const auto sys = constraint_system(WheelSpec::make(k, r), n, d);
                CHECK(rank_fraction_free(sys.rows, sys.columns.size()) ==
                      row_reduce(sys.rows, sys.columns.size()).rows.size());
            }

    const auto table = dimension_table(spec, 2, 3, 4);
    REQUIRE(table.entries.size() == 4);
    CHECK(table.entries[3].dim == 2);
    CHECK(to_json(table).dump() == to_json(dimension_table(spec, 2, 3, 1)).dump());
}

TEST_CASE("two-step cycles follow from the k+1 condition")
{
    const auto spec = WheelSpec::make(1, 2);
    const FieldRef f = spec.field();
    for (int d = 0; d <= 4; ++d)
        for (const auto& g : oracle_basis(spec, 4, d)) {
            const MPoly x1 = MPoly::variable(4, 0, f);
            const std::vector<MPoly> cycle{x1, -x1, x1, -x1};
            CHECK(g.poly().substitute(cycle).is_zero());
        }
}

TEST_CASE("violations")
{
    const auto s12 = WheelSpec::make(1, 2);
    auto w = find_violation(SymPoly::constant(2, CycNum::rational(s12.field(), 1)), s12);
    REQUIRE(w);
    CHECK(w->shifts == std::vector<int>{0, 0});
    CHECK_FALSE(find_violation(monomial_sym(P({1, 0}), s12.field()), s12));

    const auto s14 = WheelSpec::make(1, 4);
    auto v = find_violation(monomial_sym(P({2, 1}), s14.field()), s14);
    REQUIRE(v);
    CHECK_FALSE(v->value.is_zero());
    CHECK_THROWS_AS(find_violation(SymPoly::constant(1, CycNum::rational(s14.field(), 1)), s14),
                    DomainError);
}

TEST_CASE("oracle independent of column order")
{
    const auto spec = WheelSpec::make(2, 3);
    for (int d = 0; d <= 5; ++d) {
        auto sys = constraint_system(spec, 3, d);
        const std::size_t rank = rank_fraction_free(sys.rows, sys.columns.size());
        for (auto& row : sys.rows)
            std::reverse(row.begin(), row.end());
        std::reverse(sys.rows.begin(), sys.rows.end());
        CHECK(rank_fraction_free(sys.rows, sys.columns.size()) == rank);
    }
}

TEST_CASE("Hall-Littlewood polynomials satisfy the r = 2 wheel condition")
{
    for (int k = 1; k <= 2; ++k) {
        const auto spec = WheelSpec::make(k, 2);
        for (int n = 1; n <= 4; ++n)
            for (const auto& l : enumerate(n, 5, PartitionFilter::admissible(k, 1)))
                CHECK(is_member(hall_littlewood(l, spec.t()), spec).member);
    }
}

TEST_CASE("Macdonald operators preserve the wheel condition")
{
    // r = 2 has q = 1, where T_q is the identity; (1,4) exercises a genuine q
    for (auto [k, r] : {std::pair{1, 2}, std::pair{1, 4}}) {
        const auto spec = WheelSpec::make(k, r);
        for (int d = 0; d <= 4; ++d)
            for (const auto& f : oracle_basis(spec, 3, d))
                for (int tt : {2, 3})
                    for (int op = 1; op <= 3; ++op) {
                        const MacParams p{spec.q(), CycNum::rational(spec.field(), tt)};
                        CHECK(is_member(macdonald_operator(op, p, f), spec).member);
                    }
    }
}
