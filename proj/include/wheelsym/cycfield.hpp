#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace wheelsym {

/// The cyclotomic field Q(z) with z a primitive M-th root of unity, realized
/// as Q[z]/(Phi_M). Elements are stored in the power basis 1, z, ..., z^{d-1}
/// with d = deg Phi_M = totient(M).
class CycField {
public:
    explicit CycField(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    int degree() const { return static_cast<int>(phi_.size()) - 1; }

    /// Phi_M, low degree first, monic.
    const std::vector<mpz_class>& phi() const { return phi_; }

    /// Reduce a polynomial in z (low degree first) modulo Phi_M in place;
    /// on return it has exactly degree() coordinates.
    void reduce(std::vector<mpq_class>& poly) const;

private:
    unsigned conductor_;
    std::vector<mpz_class> phi_;
};

using FieldRef = std::shared_ptr<const CycField>;

FieldRef make_field(unsigned conductor);

/// Phi_M by exact division of z^M - 1 by Phi_d for every proper divisor d.
std::vector<mpz_class> cyclotomic_polynomial(unsigned conductor);

unsigned euler_totient(unsigned m);

/// Exact element of a cyclotomic field.
class CycNum {
public:
    /// Zero of the given field.
    explicit CycNum(FieldRef field);
    CycNum(FieldRef field, std::vector<mpq_class> coords);

    static CycNum rational(FieldRef field, const mpq_class& value);
    static CycNum root_of_unity(FieldRef field, long exponent);

    const FieldRef& field() const { return field_; }
    const std::vector<mpq_class>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// All coordinates are integers, i.e. the element lies in Z[z].
    bool is_integral() const;
    /// Least common multiple of the coordinate denominators.
    mpz_class denominator_lcm() const;

    CycNum inverse() const;
    /// Negative exponents invert; 0^0 = 1.
    CycNum pow(long exponent) const;

    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);
    CycNum& operator*=(const mpq_class& rhs);

    friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
    friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
    friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
    friend CycNum operator/(const CycNum& lhs, const CycNum& rhs) { return lhs * rhs.inverse(); }
    friend CycNum operator*(CycNum lhs, const mpq_class& rhs) { return lhs *= rhs; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& lhs, const CycNum& rhs);

    /// Human readable form in the power basis, e.g. "-1 + 2*z".
    std::string to_string() const;

private:
    void check_same_field(const CycNum& rhs) const;

    FieldRef field_;
    std::vector<mpq_class> coords_;
};

/// Image of x in a field whose conductor is a multiple of x's conductor.
CycNum embed(const CycNum& x, const FieldRef& target);

nlohmann::json to_json(const CycNum& x);
CycNum cycnum_from_json(const nlohmann::json& j, const FieldRef& field);
CycNum cycnum_from_json(const nlohmann::json& j);

/// Parses "3", "-1/2", "z^5" (a power of the field generator) or "-z^2".
CycNum parse_scalar(const std::string& text, const FieldRef& field);

} // namespace wheelsym
