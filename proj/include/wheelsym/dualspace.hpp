#pragma once

#include <map>

#include "json.hpp"
#include "wheelsym/cycfield.hpp"
#include "wheelsym/partitions.hpp"
#include "wheelsym/polyring.hpp"

namespace wheelsym {

/// Element of E_n: a combination of products e_lambda = e_{lambda_1} ... e_{lambda_n}
/// of exactly n generators. e_0 is a generator, not the unit.
class EElement {
public:
    EElement(int factors, FieldRef field);

    /// e_lambda with coefficient 1.
    static EElement basis(const Partition& lambda, const FieldRef& field);

    int factors() const { return factors_; }
    const FieldRef& field() const { return field_; }
    const std::map<Partition, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycNum coefficient(const Partition& lambda) const;

    void add_term(const Partition& lambda, const CycNum& c);

    EElement& operator+=(const EElement& rhs);
    EElement& operator-=(const EElement& rhs);
    friend EElement operator+(EElement a, const EElement& b) { return a += b; }
    friend EElement operator-(EElement a, const EElement& b) { return a -= b; }
    friend EElement operator*(EElement a, const CycNum& c);
    /// Product in E: factor counts add, index partitions join.
    friend EElement operator*(const EElement& a, const EElement& b);
    friend bool operator==(const EElement& a, const EElement& b);

private:
    int factors_;
    FieldRef field_;
    std::map<Partition, CycNum> terms_;
};

/// <e, f> with <e_lambda, m_mu> = delta.
CycNum pairing(const EElement& e, const SymPoly& f);

/// Coefficient of z^{i(k+1)} in prod_{j=0}^k e(t^j z); an element of E_{k+1}.
EElement epsilon(int i, int k, const CycNum& t);

/// Class of e in E_n / (J E_{n-k-1}) written in admissible e_lambda
/// (all multiplicities <= k, zeros included). Rewrites always move to
/// lexicographically larger index partitions.
EElement straighten(const EElement& e, int k, const CycNum& t);

/// dim of the degree-d part of J * E_{n-k-1}, the span of
/// epsilon_i * e_mu with (k+1) i + |mu| = d, mu in pi_{n-k-1}.
std::size_t complement_dimension(int k, const CycNum& t, int n, int d);

nlohmann::json to_json(const EElement& e);

} // namespace wheelsym
