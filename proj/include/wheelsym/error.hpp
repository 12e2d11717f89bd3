#pragma once

#include <stdexcept>
#include <string>

namespace wheelsym {

// Invalid input: bad parameters, mismatched fields, non-symmetric polynomial
// where a symmetric one is required, and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

// An internal invariant did not hold (e.g. a division that must be exact left
// a remainder). Always a bug or a violated mathematical claim.
class Fault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotDivisible : public Fault {
public:
    using Fault::Fault;
};

// Hall-Littlewood normalization 1/(1 - t^j) hit a zero denominator.
class NormalizationPole : public std::domain_error {
public:
    NormalizationPole(int part_value, int multiplicity, int exponent)
        : std::domain_error("normalization pole: part " + std::to_string(part_value) +
                            " has multiplicity " + std::to_string(multiplicity) +
                            " and 1 - t^" + std::to_string(exponent) + " = 0"),
          part_value(part_value), multiplicity(multiplicity), exponent(exponent) {}

    int part_value;
    int multiplicity;
    int exponent;
};

// Eigenvalue collision or singular solve at the chosen parameter values.
class NonGenericParameters : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace wheelsym
