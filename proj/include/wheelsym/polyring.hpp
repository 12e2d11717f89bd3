#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "wheelsym/cycfield.hpp"
#include "wheelsym/partitions.hpp"

namespace wheelsym {

using Exponents = std::vector<int>;

/// Graded lexicographic: total degree first, ties broken lexicographically.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in x_1..x_n over a cyclotomic field. No zero
/// coefficients are ever stored.
class MPoly {
public:
    using TermMap = std::map<Exponents, CycNum, GrlexLess>;

    MPoly(int nvars, FieldRef field);

    static MPoly constant(int nvars, const CycNum& c);
    /// x_i, zero-based index.
    static MPoly variable(int nvars, int i, FieldRef field);
    static MPoly monomial(Exponents exps, const CycNum& c);

    int nvars() const { return nvars_; }
    const FieldRef& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Maximum total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    CycNum coefficient(const Exponents& exps) const;
    /// Adds c * x^exps, dropping the term if it cancels.
    void add_term(const Exponents& exps, const CycNum& c);

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const CycNum& c);
    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    friend MPoly operator*(MPoly lhs, const CycNum& c) { return lhs *= c; }
    MPoly operator-() const;
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& lhs, const MPoly& rhs);

    /// Replaces x_i by images[i]; all images share a variable count, which
    /// becomes the variable count of the result.
    MPoly substitute(std::span<const MPoly> images) const;
    CycNum evaluate(std::span<const CycNum> point) const;
    /// x_i -> factors[i] * x_i.
    MPoly scale_variables(std::span<const CycNum> factors) const;
    /// Variable i of the input becomes variable perm[i].
    MPoly permuted(std::span<const int> perm) const;
    MPoly swapped(int i, int j) const;
    /// x_i -> x_i^m.
    MPoly frobenius(int m) const;
    /// Same polynomial with coefficients mapped into a larger cyclotomic field.
    MPoly embedded(const FieldRef& target) const;

    bool is_symmetric() const;

    std::string to_string() const;

private:
    void check_compatible(const MPoly& rhs) const;

    int nvars_;
    FieldRef field_;
    TermMap terms_;
};

/// Sum over all permutations w of sign(w) * w(f).
MPoly antisymmetrize(const MPoly& f);

/// h with f = g * h. Throws NotDivisible if g does not divide f.
MPoly exact_divide(const MPoly& f, const MPoly& g);

/// prod_{i<j} (x_i - x_j)
MPoly vandermonde(int nvars, FieldRef field);

/// f / prod_{i<j} (x_i - x_j), one linear factor at a time.
MPoly divide_by_vandermonde(const MPoly& f);

nlohmann::json to_json(const MPoly& f);
MPoly mpoly_from_json(const nlohmann::json& j);

using MExpansion = std::map<Partition, CycNum>;

/// Symmetric polynomial together with its monomial symmetric expansion
/// f = sum_lambda c_lambda m_lambda.
class SymPoly {
public:
    /// Throws DomainError if f is not symmetric.
    explicit SymPoly(MPoly f);

    static SymPoly from_m_basis(int nvars, const FieldRef& field, const MExpansion& coeffs);
    static SymPoly zero(int nvars, const FieldRef& field);
    static SymPoly constant(int nvars, const CycNum& c);

    const MPoly& poly() const { return poly_; }
    const MExpansion& m_expansion() const { return m_; }
    CycNum m_coefficient(const Partition& lambda) const;

    int nvars() const { return poly_.nvars(); }
    const FieldRef& field() const { return poly_.field(); }
    bool is_zero() const { return poly_.is_zero(); }
    int degree() const { return poly_.degree(); }

    /// Lexicographically greatest partition with a nonzero coefficient.
    Partition highest_partition() const;

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) { return SymPoly(a.poly_ + b.poly_); }
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) { return SymPoly(a.poly_ - b.poly_); }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) { return SymPoly(a.poly_ * b.poly_); }
    friend SymPoly operator*(const SymPoly& a, const CycNum& c) { return SymPoly(a.poly_ * c); }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.poly_ == b.poly_; }

private:
    MPoly poly_;
    MExpansion m_;
};

/// m_lambda: every distinct permutation of lambda as an exponent vector,
/// each with coefficient 1.
SymPoly monomial_sym(const Partition& lambda, const FieldRef& field);

/// m-expansion by repeatedly stripping the lex-leading monomial. Independent
/// of the orbit bookkeeping SymPoly uses; throws DomainError if f is not
/// symmetric.
MExpansion to_m_basis(const MPoly& f);

nlohmann::json m_expansion_to_json(const MExpansion& m);

} // namespace wheelsym
