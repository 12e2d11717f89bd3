#include "wheelsym/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wheelsym/error.hpp"

namespace wheelsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw DomainError("partition parts must be nonnegative");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be nonincreasing");
    }
}

Partition Partition::zeros(int length)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(length), 0));
}

Partition Partition::from_unsorted(std::vector<int> entries)
{
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return Partition(std::move(entries));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw DomainError("bad partition '" + std::string(text) + "'");
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(cur, &used));
            if (used != cur.size())
                throw DomainError("bad partition '" + std::string(text) + "'");
        } catch (const std::logic_error&) {
            throw DomainError("bad partition '" + std::string(text) + "'");
        }
        cur.clear();
    };
    std::string_view body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    if (body.empty())
        return Partition();
    for (char c : body) {
        if (c == ',')
            flush();
        else if (c != ' ')
            cur.push_back(c);
    }
    flush();
    return Partition(std::move(parts));
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::max_multiplicity() const
{
    int best = 0;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        best = std::max(best, static_cast<int>(j - i));
        i = j;
    }
    return best;
}

bool Partition::is_admissible(int k, int r) const
{
    const int n = length();
    for (int i = 0; i + k < n; ++i)
        if (parts_[i] - parts_[i + k] < r)
            return false;
    return true;
}

bool Partition::is_slim(int r_minus_1) const
{
    const int n = length();
    for (int i = 0; i + 1 < n; ++i)
        if (parts_[i] - parts_[i + 1] >= r_minus_1)
            return false;
    return n == 0 || parts_[n - 1] < r_minus_1;
}

bool Partition::divisible_by(int m) const
{
    return std::all_of(parts_.begin(), parts_.end(), [m](int p) { return p % m == 0; });
}

Partition Partition::scaled(int m) const
{
    Partition out = *this;
    for (auto& p : out.parts_)
        p *= m;
    return out;
}

Partition Partition::divided(int m) const
{
    if (!divisible_by(m))
        throw DomainError("partition " + to_string() + " is not divisible by " + std::to_string(m));
    Partition out = *this;
    for (auto& p : out.parts_)
        p /= m;
    return out;
}

Partition Partition::join(const Partition& other) const
{
    std::vector<int> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged), std::greater<>());
    return Partition(std::move(merged));
}

Partition Partition::without(int value, int count) const
{
    std::vector<int> rest;
    rest.reserve(parts_.size());
    int removed = 0;
    for (int p : parts_) {
        if (p == value && removed < count)
            ++removed;
        else
            rest.push_back(p);
    }
    if (removed != count)
        throw DomainError("partition " + to_string() + " has fewer than " + std::to_string(count) +
                          " parts equal to " + std::to_string(value));
    return Partition(std::move(rest));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::key() const
{
    return "(" + to_string() + ")";
}

Partition operator+(const Partition& a, const Partition& b)
{
    std::vector<int> sum(static_cast<std::size_t>(std::max(a.length(), b.length())), 0);
    for (int i = 0; i < a.length(); ++i)
        sum[i] += a[i];
    for (int i = 0; i < b.length(); ++i)
        sum[i] += b[i];
    return Partition(std::move(sum));
}

Dominance compare_dominance(const Partition& a, const Partition& b)
{
    if (a.weight() != b.weight())
        throw DomainError("dominance order needs equal weights: " + a.key() + " vs " + b.key());
    bool a_ahead = false;
    bool b_ahead = false;
    int sa = 0;
    int sb = 0;
    const int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        sa += i < a.length() ? a[i] : 0;
        sb += i < b.length() ? b[i] : 0;
        if (sa > sb)
            a_ahead = true;
        if (sb > sa)
            b_ahead = true;
    }
    if (a_ahead && b_ahead)
        return Dominance::incomparable;
    if (a_ahead)
        return Dominance::greater;
    if (b_ahead)
        return Dominance::less;
    return Dominance::equal;
}

std::strong_ordering compare_lex(const Partition& a, const Partition& b)
{
    return a <=> b;
}

SlimDecomposition divide_by(const Partition& lambda, int r_minus_1)
{
    if (r_minus_1 < 1)
        throw DomainError("divisor must be positive");
    const int n = lambda.length();
    std::vector<int> nu(static_cast<std::size_t>(n), 0);
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    int floor = 0;
    for (int i = n - 1; i >= 0; --i) {
        // unique value in [floor, floor + r_minus_1 - 1] congruent to lambda_i
        const int shift = ((lambda[i] - floor) % r_minus_1 + r_minus_1) % r_minus_1;
        nu[i] = floor + shift;
        if (nu[i] > lambda[i])
            throw Fault("slim division: remainder exceeds part");
        mu[i] = (lambda[i] - nu[i]) / r_minus_1;
        floor = nu[i];
    }
    return {Partition(std::move(mu)), Partition(std::move(nu)), r_minus_1};
}

bool PartitionFilter::accepts(const Partition& p) const
{
    switch (kind) {
    case Kind::all:
        return true;
    case Kind::admissible:
        return p.is_admissible(k, r);
    case Kind::slim:
        return p.is_slim(r_minus_1);
    }
    return false;
}

namespace {

// Parts filled left to right with each part <= cap; emits in descending lex
// order of the prefix, reversed by the caller.
void fill(std::vector<int>& cur, int pos, int remaining, int cap,
          const std::function<void(const std::vector<int>&)>& emit)
{
    const int n = static_cast<int>(cur.size());
    if (pos == n) {
        if (remaining == 0)
            emit(cur);
        return;
    }
    if (static_cast<long>(cap) * (n - pos) < remaining)
        return;
    for (int p = std::min(cap, remaining); p >= 0; --p) {
        cur[pos] = p;
        fill(cur, pos + 1, remaining - p, p, emit);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Partition> partitions_of(int weight, int length, PartitionFilter filter)
{
    if (weight < 0 || length < 0)
        throw DomainError("weight and length must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    fill(cur, 0, weight, weight, [&](const std::vector<int>& parts) {
        Partition p(parts);
        if (filter.accepts(p))
            out.push_back(std::move(p));
    });
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate(int length, int max_weight, PartitionFilter filter)
{
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d) {
        auto part = partitions_of(d, length, filter);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> count_by_weight(int length, int max_weight, PartitionFilter filter)
{
    std::vector<std::size_t> tally(static_cast<std::size_t>(max_weight) + 1, 0);
    for (int d = 0; d <= max_weight; ++d)
        tally[d] = partitions_of(d, length, filter).size();
    return tally;
}

std::vector<Partition> slim_partitions(int length, int r_minus_1)
{
    if (r_minus_1 < 1)
        throw DomainError("slim divisor must be positive");
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(length), 0);
    std::function<void(int, int)> build = [&](int pos, int floor) {
        if (pos < 0) {
            out.emplace_back(cur);
            return;
        }
        for (int gap = 0; gap < r_minus_1; ++gap) {
            cur[pos] = floor + gap;
            build(pos - 1, cur[pos]);
        }
    };
    build(length - 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wheelsym
