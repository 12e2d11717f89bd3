#include "doctest.h"

#include <random>

#include "wheelsym/error.hpp"
#include "wheelsym/specialpolys.hpp"

using namespace wheelsym;

namespace {

FieldRef Q() { return make_field(1); }
CycNum c(const mpq_class& v, const FieldRef& f = Q()) { return CycNum::rational(f, v); }
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
SymPoly m(std::vector<int> v, const FieldRef& f = Q()) { return monomial_sym(P(std::move(v)), f); }

} // namespace

TEST_CASE("Hall-Littlewood small cases")
{
    const CycNum t = c(3);
    CHECK(hall_littlewood(P({1, 0}), t) == m({1, 0}));
    CHECK(hall_littlewood(P({1, 1}), t) == m({1, 1}));
    CHECK(hall_littlewood(P({2, 0}), t) == m({2, 0}) + m({1, 1}) * (c(1) - t));

    const FieldRef f2 = make_field(2);
    const CycNum minus1 = CycNum::root_of_unity(f2, 1);
    CHECK_THROWS_AS(hall_littlewood(P({1, 1}), minus1), NormalizationPole);
    CHECK(hall_littlewood(P({1, 0}), minus1) == m({1, 0}, f2));
}

TEST_CASE("Hall-Littlewood triangularity at roots of unity")
{
    for (int k = 1; k <= 2; ++k) {
        const FieldRef f = make_field(static_cast<unsigned>(k + 1));
        const CycNum t = CycNum::root_of_unity(f, 1);
        for (int n = 1; n <= 4; ++n)
            for (const auto& l : enumerate(n, 6)) {
                CAPTURE(l.key());
                if (!l.is_admissible(k, 1)) {
                    CHECK_THROWS_AS(hall_littlewood(l, t), NormalizationPole);
                    continue;
                }
                const SymPoly hl = hall_littlewood(l, t);
                CHECK(hl.m_coefficient(l).is_one());
                for (const auto& [mu, v] : hl.m_expansion()) {
                    const auto d = compare_dominance(mu, l);
                    CHECK((d == Dominance::less || d == Dominance::equal));
                }
            }
    }
}

TEST_CASE("Macdonald operators")
{
    const MacParams p{c(2), c(3)};
    const SymPoly s = m({1, 0});
    CHECK(macdonald_operator(0, p, s) == s);
    CHECK(macdonald_operator(1, p, s) == s * c(7));
    CHECK(macdonald_operator(2, p, SymPoly::constant(2, c(1))) == SymPoly::constant(2, c(3)));

    auto rep = verify_eigen(P({1, 0}), p, s);
    CHECK(rep.pass);
    REQUIRE(rep.checks.size() == 3);
    CHECK(rep.checks[1].eigenvalue == c(7));
    auto rep11 = verify_eigen(P({1, 1}), p, m({1, 1}));
    CHECK(rep11.pass);
    CHECK(rep11.checks[1].eigenvalue == c(8));
    auto rep0 = verify_eigen(P({0, 0, 0}), p, SymPoly::constant(3, c(1)));
    CHECK(rep0.pass);
    CHECK(rep0.checks[1].eigenvalue == c(13));
    CHECK(rep0.checks[2].eigenvalue == c(39));
    CHECK(rep0.checks[3].eigenvalue == c(27));
    CHECK_FALSE(verify_eigen(P({2, 0}), p, m({2, 0})).pass);
}

TEST_CASE("Macdonald polynomials")
{
    const MacParams p{c(2), c(3)};
    CHECK(macdonald_poly(P({1, 0}), p) == m({1, 0}));
    const SymPoly p20 = macdonald_poly(P({2, 0}), p);
    CHECK(p20.m_coefficient(P({2, 0})).is_one());
    // D^1 eigen-system by hand: u = (1+q)(1-t)/(1-qt) = 3*(-2)/(-5)
    CHECK(p20.m_coefficient(P({1, 1})) == c(mpq_class(6, 5)));
    CHECK(verify_eigen(P({2, 0}), p, p20).pass);

    const MacParams hl{c(0), c(3)};
    CHECK(macdonald_poly(P({2, 0}), hl) == hall_littlewood(P({2, 0}), c(3)));
    for (int n = 1; n <= 3; ++n)
        for (const auto& l : enumerate(n, 4)) {
            CAPTURE(l.key());
            CHECK(macdonald_poly_q_limit(l, c(3)) == hall_littlewood(l, c(3)));
            const SymPoly pl = macdonald_poly(l, p);
            CHECK(verify_eigen(l, p, pl).pass);
            for (const auto& [mu, v] : pl.m_expansion()) {
                const auto d = compare_dominance(mu, l);
                CHECK((d == Dominance::less || d == Dominance::equal));
            }
        }
    CHECK_THROWS_AS(macdonald_poly(P({2, 0}), MacParams{c(1), c(1)}), NonGenericParameters);
}

TEST_CASE("Macdonald triangularity on admissible partitions")
{
    const MacParams p{c(2), c(3)};
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 4; ++n)
            for (const auto& l : enumerate(n, 6, PartitionFilter::admissible(k, 1))) {
                CAPTURE(l.key());
                const SymPoly pl = macdonald_poly(l, p);
                CHECK(pl.m_coefficient(l).is_one());
                for (const auto& [mu, v] : pl.m_expansion()) {
                    const auto d = compare_dominance(mu, l);
                    CHECK((d == Dominance::less || d == Dominance::equal));
                }
            }
}

TEST_CASE("Macdonald operators commute")
{
    std::mt19937 rng(9);
    const MacParams p{c(2), c(3)};
    const auto parts = enumerate(3, 4);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 4; ++trial) {
        SymPoly f = SymPoly::zero(3, Q());
        for (int j = 0; j < 3; ++j)
            f = f + monomial_sym(parts[pick(rng)], Q()) * c(coef(rng));
        CHECK(macdonald_operator(1, p, macdonald_operator(2, p, f)) ==
              macdonald_operator(2, p, macdonald_operator(1, p, f)));
    }
}
