#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wheelsym {

/// A nonincreasing sequence of nonnegative integers of fixed length n.
/// Zero parts are kept, so m_0 counts zeros within the length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition zeros(int length);
    /// Sorts arbitrary nonnegative entries into nonincreasing order.
    static Partition from_unsorted(std::vector<int> entries);
    /// "3,1,0" form; an empty string gives the empty partition.
    static Partition parse(std::string_view text);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }

    /// m_i: number of positions equal to value.
    int multiplicity(int value) const;
    int max_multiplicity() const;

    /// lambda_i - lambda_{i+k} >= r for i = 1..n-k.
    bool is_admissible(int k, int r) const;
    /// Consecutive gaps and the last part are all < r_minus_1.
    bool is_slim(int r_minus_1) const;
    bool divisible_by(int m) const;

    Partition scaled(int m) const;
    /// Exact division of every part; requires divisible_by(m).
    Partition divided(int m) const;
    /// Multiset union of parts, sorted.
    Partition join(const Partition& other) const;
    /// Removes count copies of value; requires multiplicity(value) >= count.
    Partition without(int value, int count) const;

    std::string to_string() const;
    /// "(3,1,0)", the form used as a JSON object key.
    std::string key() const;

    // Lexicographic on parts: lambda < mu iff lambda_i < mu_i at the first
    // difference.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Componentwise sum after padding the shorter one with zeros.
Partition operator+(const Partition& a, const Partition& b);

enum class Dominance { less, greater, equal, incomparable };

/// Throws DomainError on unequal weights.
Dominance compare_dominance(const Partition& a, const Partition& b);
std::strong_ordering compare_lex(const Partition& a, const Partition& b);

struct SlimDecomposition {
    Partition quotient;
    Partition remainder;
    int divisor = 1;
};

/// lambda = divisor * quotient + remainder with remainder divisor-slim.
SlimDecomposition divide_by(const Partition& lambda, int r_minus_1);

struct PartitionFilter {
    enum class Kind { all, admissible, slim };
    Kind kind = Kind::all;
    int k = 0;
    int r = 0;
    int r_minus_1 = 0;

    static PartitionFilter any() { return {}; }
    static PartitionFilter admissible(int k, int r) { return {Kind::admissible, k, r, 0}; }
    static PartitionFilter slim(int r_minus_1) { return {Kind::slim, 0, 0, r_minus_1}; }

    bool accepts(const Partition& p) const;
};

/// Partitions in pi_n of weight exactly d, ascending lexicographic order.
std::vector<Partition> partitions_of(int weight, int length,
                                     PartitionFilter filter = PartitionFilter::any());

/// Partitions in pi_n of weight <= max_weight, ascending lexicographic order.
std::vector<Partition> enumerate(int length, int max_weight,
                                 PartitionFilter filter = PartitionFilter::any());

/// Tally per weight 0..max_weight.
std::vector<std::size_t> count_by_weight(int length, int max_weight,
                                         PartitionFilter filter = PartitionFilter::any());

/// All r_minus_1-slim partitions of the given length, built directly from
/// the gap description.
std::vector<Partition> slim_partitions(int length, int r_minus_1);

} // namespace wheelsym
