#include "doctest.h"

#include <random>

#include "wheelsym/error.hpp"
#include "wheelsym/polyring.hpp"

using namespace wheelsym;

namespace {

FieldRef Q() { return make_field(1); }
CycNum c(long v, const FieldRef& f = Q()) { return CycNum::rational(f, v); }
MPoly x(int n, int i, const FieldRef& f = Q()) { return MPoly::variable(n, i, f); }
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

MPoly random_poly(int n, int max_deg, int nterms, std::mt19937& rng, const FieldRef& f)
{
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_deg);
    MPoly out(n, f);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(static_cast<std::size_t>(n), 0);
        int left = deg(rng);
        for (int i = 0; i < n && left > 0; ++i) {
            std::uniform_int_distribution<int> take(0, left);
            e[i] = take(rng);
            left -= e[i];
        }
        out.add_term(e, c(coeff(rng), f));
    }
    return out;
}

} // namespace

TEST_CASE("monomial symmetric functions")
{
    CHECK(monomial_sym(P({1, 0}), Q()).poly() == x(2, 0) + x(2, 1));
    CHECK(monomial_sym(P({1, 1}), Q()).poly() == x(2, 0) * x(2, 1));
    const auto m210 = monomial_sym(P({2, 1, 0}), Q());
    CHECK(m210.poly().size() == 6);
    for (const auto& [e, v] : m210.poly().terms())
        CHECK(v.is_one());
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate(n, 8))
            CHECK(monomial_sym(l, Q()).poly().is_symmetric());
}

TEST_CASE("ring arithmetic")
{
    const MPoly s = x(2, 0) + x(2, 1);
    CHECK((s * MPoly(2, Q())).is_zero());
    CHECK(s * s == x(2, 0) * x(2, 0) + x(2, 0) * x(2, 1) * c(2) + x(2, 1) * x(2, 1));
    CHECK(s.pow(2) == s * s);
    const SymPoly m10 = monomial_sym(P({1, 0}), Q());
    const SymPoly sq = m10 * m10;
    CHECK(sq.m_expansion() == MExpansion{{P({1, 1}), c(2)}, {P({2, 0}), c(1)}});
    CHECK(MPoly(3, Q()).degree() == -1);
}

TEST_CASE("substitution")
{
    const MPoly s = x(2, 0) + x(2, 1);
    const std::vector<MPoly> img{x(2, 0), -x(2, 0)};
    CHECK(s.substitute(img).is_zero());
    CHECK((x(2, 0) * x(2, 1)).substitute(img) == -(x(2, 0) * x(2, 0)));
    const MPoly cube = x(1, 0).pow(3);
    const std::vector<MPoly> id{x(1, 0)};
    CHECK(cube.substitute(id) == cube);
    CHECK(x(1, 0).frobenius(3) == cube);
    const std::vector<CycNum> pt{c(2), c(5)};
    CHECK((s * s).evaluate(pt) == c(49));
}

TEST_CASE("exact division")
{
    const MPoly num = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    CHECK(exact_divide(num, x(2, 0) - x(2, 1)) == x(2, 0) + x(2, 1));
    CHECK(exact_divide(num, MPoly::constant(2, c(1))) == num);
    CHECK_THROWS_AS(exact_divide(num + x(2, 0), x(2, 0) - x(2, 1)), NotDivisible);
    CHECK_THROWS_AS(exact_divide(num, MPoly(2, Q())), DivisionByZero);

    const MPoly v3 = vandermonde(3, Q());
    CHECK(exact_divide(v3, (x(3, 0) - x(3, 1)) * (x(3, 0) - x(3, 2)) * (x(3, 1) - x(3, 2))) ==
          MPoly::constant(3, c(1)));
    CHECK(divide_by_vandermonde(v3) == MPoly::constant(3, c(1)));

    std::mt19937 rng(11);
    for (unsigned m : {1u, 3u, 6u}) {
        const FieldRef f = make_field(m);
        for (int n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 8; ++trial) {
                const MPoly a = random_poly(n, 3, 4, rng, f);
                MPoly b = random_poly(n, 3, 3, rng, f);
                if (b.is_zero())
                    continue;
                b *= CycNum::root_of_unity(f, 1);
                CHECK(exact_divide(a * b, b) == a);
            }
    }
}

TEST_CASE("antisymmetrization")
{
    CHECK(antisymmetrize(monomial_sym(P({2, 1}), Q()).poly()).is_zero());
    CHECK(antisymmetrize(x(2, 0)) == x(2, 0) - x(2, 1));
    const MPoly a = antisymmetrize(x(3, 0).pow(2) * x(3, 1));
    CHECK(a.size() == 6);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(a.swapped(i, j) == -a);
    CHECK(divide_by_vandermonde(a) == MPoly::constant(3, c(1)));
}

TEST_CASE("m-basis views")
{
    const FieldRef f = make_field(2);
    const CycNum t = CycNum::root_of_unity(f, 1);
    const auto hl = SymPoly::from_m_basis(2, f, {{P({2, 0}), c(1, f)}, {P({1, 1}), c(1, f) - t}});
    CHECK(hl.highest_partition() == P({2, 0}));
    const auto five = monomial_sym(P({1, 1}), Q()) * c(5);
    CHECK(to_m_basis(five.poly()) == MExpansion{{P({1, 1}), c(5)}});
    CHECK(to_m_basis(x(2, 0) * x(2, 1)) == MExpansion{{P({1, 1}), c(1)}});
    CHECK_THROWS_AS(SymPoly(x(2, 0)), DomainError);
    CHECK_THROWS_AS(to_m_basis(x(2, 0)), DomainError);

    std::mt19937 rng(5);
    for (int n = 1; n <= 4; ++n) {
        const auto parts = enumerate(n, 4);
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        for (int trial = 0; trial < 6; ++trial) {
            SymPoly s = monomial_sym(parts[pick(rng)], Q()) * monomial_sym(parts[pick(rng)], Q()) +
                        monomial_sym(parts[pick(rng)], Q()) * c(3);
            CHECK(to_m_basis(s.poly()) == s.m_expansion());
            CHECK(SymPoly::from_m_basis(n, Q(), s.m_expansion()) == s);
        }
    }
}

TEST_CASE("json round trip")
{
    std::mt19937 rng(2);
    const FieldRef f = make_field(12);
    for (int trial = 0; trial < 5; ++trial) {
        MPoly p = random_poly(3, 4, 5, rng, f) * CycNum::root_of_unity(f, 5);
        const auto j = to_json(p);
        CHECK(mpoly_from_json(j) == p);
        CHECK(to_json(mpoly_from_json(j)).dump() == j.dump());
    }
}
