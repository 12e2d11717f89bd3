#include "doctest.h"

#include <map>
#include <set>

#include "wheelsym/error.hpp"
#include "wheelsym/partitions.hpp"

using namespace wheelsym;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Every (mu, nu) with lambda = m*mu + nu componentwise, mu a partition, nu slim.
std::vector<std::pair<Partition, Partition>> all_slim_decompositions(const Partition& lambda, int m)
{
    std::vector<std::pair<Partition, Partition>> out;
    const int n = lambda.length();
    std::vector<int> mu(static_cast<std::size_t>(n));
    auto rec = [&](auto& self, int i) -> void {
        if (i == n) {
            std::vector<int> nu(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                nu[j] = lambda[j] - m * mu[j];
            for (int j = 0; j + 1 < n; ++j)
                if (mu[j] < mu[j + 1] || nu[j] < nu[j + 1])
                    return;
            for (int x : nu)
                if (x < 0)
                    return;
            Partition nup(nu);
            if (nup.is_slim(m))
                out.emplace_back(Partition(mu), nup);
            return;
        }
        for (int x = 0; m * x <= lambda[i]; ++x) {
            mu[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

TEST_CASE("construction")
{
    CHECK_THROWS_AS(P({1, 2}), DomainError);
    CHECK_THROWS_AS(P({1, -1}), DomainError);
    CHECK(Partition::parse("3,1,0") == P({3, 1, 0}));
    CHECK(Partition::parse("(3,1,0)") == P({3, 1, 0}));
    CHECK(Partition::parse("").length() == 0);
    CHECK_THROWS_AS(Partition::parse("1,x"), DomainError);
    CHECK(Partition::from_unsorted({0, 2, 1}) == P({2, 1, 0}));
    CHECK(P({3, 1, 0}).key() == "(3,1,0)");
    CHECK(P({3, 1, 0}).weight() == 4);
}

TEST_CASE("multiplicity")
{
    CHECK(P({3, 0}).multiplicity(0) == 1);
    CHECK(P({1, 1, 0}).multiplicity(1) == 2);
    CHECK(P({2, 2, 2}).multiplicity(2) == 3);
}

TEST_CASE("admissible and slim")
{
    CHECK(P({1, 0}).is_admissible(1, 1));
    CHECK_FALSE(P({1, 1}).is_admissible(1, 1));
    CHECK(P({4, 2, 0}).is_admissible(1, 2));
    CHECK(P({0, 0, 0}).is_slim(1));
    CHECK(P({2, 1}).is_slim(3));
    CHECK_FALSE(P({3, 0}).is_slim(3));

    for (int n = 1; n <= 6; ++n)
        for (const auto& l : enumerate(n, 10))
            for (int k = 1; k <= 3; ++k)
                CHECK(l.is_admissible(k, 1) == (l.max_multiplicity() <= k));
}

TEST_CASE("divide_by")
{
    auto a = divide_by(P({6, 1}), 3);
    CHECK(a.quotient == P({1, 0}));
    CHECK(a.remainder == P({3, 1}));
    auto b = divide_by(P({5, 3, 2}), 3);
    CHECK(b.quotient == P({0, 0, 0}));
    CHECK(b.remainder == P({5, 3, 2}));
    auto c = divide_by(P({0, 0}), 4);
    CHECK(c.quotient == P({0, 0}));
    CHECK(c.remainder == P({0, 0}));

    for (int m = 2; m <= 4; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const auto& l : enumerate(n, 12)) {
                const auto dec = divide_by(l, m);
                CHECK(dec.quotient.scaled(m) + dec.remainder == l);
                CHECK(dec.remainder.is_slim(m));
                const auto all = all_slim_decompositions(l, m);
                REQUIRE(all.size() == 1);
                CHECK(all[0].first == dec.quotient);
                CHECK(all[0].second == dec.remainder);
            }
}

TEST_CASE("enumeration")
{
    const auto slim = enumerate(2, 10, PartitionFilter::slim(2));
    CHECK(slim == std::vector<Partition>{P({0, 0}), P({1, 0}), P({1, 1}), P({2, 1})});
    CHECK(partitions_of(3, 2, PartitionFilter::admissible(1, 1)) ==
          std::vector<Partition>{P({2, 1}), P({3, 0})});
    CHECK(enumerate(0, 5) == std::vector<Partition>{Partition()});
    CHECK(count_by_weight(2, 3, PartitionFilter::admissible(1, 1)) ==
          std::vector<std::size_t>{0, 1, 1, 2});

    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 5; ++n) {
            const auto direct = slim_partitions(n, m);
            std::size_t expect = 1;
            for (int i = 0; i < n; ++i)
                expect *= static_cast<std::size_t>(m);
            CHECK(direct.size() == expect);
            const int bound = (m - 1) * n * (n + 1) / 2;
            CHECK(direct == enumerate(n, bound, PartitionFilter::slim(m)));
        }

    // ascending lex and weight bookkeeping
    const auto all = enumerate(4, 7);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] < all[i]);
    std::size_t total = 0;
    for (auto c : count_by_weight(4, 7))
        total += c;
    CHECK(total == all.size());
}

TEST_CASE("orders")
{
    CHECK(compare_dominance(P({2, 0}), P({1, 1})) == Dominance::greater);
    CHECK(compare_dominance(P({2, 2, 0}), P({3, 1, 0})) == Dominance::less);
    CHECK(compare_dominance(P({3, 0, 0, 0}), P({3, 0, 0, 0})) == Dominance::equal);
    CHECK(compare_dominance(P({3, 1, 1, 1, 0, 0}), P({2, 2, 2, 0, 0, 0})) == Dominance::incomparable);
    CHECK_THROWS_AS(compare_dominance(P({2, 0}), P({1, 0})), DomainError);
    CHECK(compare_lex(P({1, 1}), P({2, 0})) == std::strong_ordering::less);

    for (int n = 1; n <= 5; ++n)
        for (int w = 0; w <= 8; ++w) {
            const auto ps = partitions_of(w, n);
            for (const auto& a : ps)
                for (const auto& b : ps)
                    if (compare_dominance(a, b) == Dominance::greater)
                        CHECK(a > b);
        }
}

TEST_CASE("join, without and sum")
{
    CHECK(P({3, 1}).join(P({2, 0})) == P({3, 2, 1, 0}));
    CHECK(P({2, 2, 1}).without(2, 2) == P({1}));
    CHECK(P({2, 1}) + P({1, 1, 1}) == P({3, 2, 1}));
    CHECK(P({4, 2}).divided(2) == P({2, 1}));
    CHECK_FALSE(P({4, 1}).divisible_by(2));
}
