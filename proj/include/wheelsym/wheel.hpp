#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "wheelsym/cycfield.hpp"
#include "wheelsym/linalg.hpp"
#include "wheelsym/partitions.hpp"
#include "wheelsym/polyring.hpp"

namespace wheelsym {

/// Root-of-unity wheel data: t of order k+1 and q of order r-1 inside
/// Q(u), u = z_M, M = (k+1)(r-1), with t = u^{r-1} and q = u^{-(k+1)}.
class WheelSpec {
public:
    /// Throws DomainError unless k >= 1, r >= 2 and gcd(k+1, r-1) = 1.
    static WheelSpec make(int k, int r);

    int k() const { return k_; }
    int r() const { return r_; }
    const FieldRef& field() const { return field_; }
    /// t = u^{t_exponent()}, q = u^{q_exponent()}.
    long t_exponent() const { return t_exp_; }
    long q_exponent() const { return q_exp_; }
    CycNum t() const { return CycNum::root_of_unity(field_, t_exp_); }
    CycNum q() const { return CycNum::root_of_unity(field_, q_exp_); }

    /// {t, tq, ..., tq^{r-2}}
    std::vector<CycNum> wheel_set() const;

    /// The r = 2 condition with the same field and the same t (q = 1); the
    /// target of Frobenius preimages.
    WheelSpec r2_companion() const;

private:
    WheelSpec(int k, int r, FieldRef field, long t_exp, long q_exp);

    int k_;
    int r_;
    FieldRef field_;
    long t_exp_;
    long q_exp_;
};

/// x_1 fixed, x_i -> t^{i-1} q^{s_i} x_1 for i = 2..k+1, the rest free.
struct WheelPlane {
    std::vector<int> shifts;        // s_2..s_{k+1}
    std::vector<long> zeta_power;   // x_{i+1} -> u^{zeta_power[i]} x_1, i = 0..k
};

/// All (r-1)^k planes, shifts in lexicographic order.
std::vector<WheelPlane> wheel_planes(const WheelSpec& spec);

/// f restricted to a plane, written in the same n variables (x_2..x_{k+1}
/// no longer occur).
MPoly restrict_to_plane(const MPoly& f, const WheelPlane& plane, const WheelSpec& spec);

struct Membership {
    bool member = true;
    std::vector<int> shifts;   // violating plane
    Exponents residual_exps;   // leading term of the restriction
    std::optional<CycNum> residual_coeff;
};

/// Vacuously true with fewer than k+1 variables.
Membership is_member(const MPoly& f, const WheelSpec& spec);
Membership is_member(const SymPoly& f, const WheelSpec& spec);

/// Rows: (plane, residual monomial); columns: partitions of weight d in pi_n;
/// entry: coefficient of the residual monomial in m_lambda restricted to the
/// plane.
struct ConstraintSystem {
    std::vector<Partition> columns;
    Matrix rows;
};

ConstraintSystem constraint_system(const WheelSpec& spec, int n, int d);

/// dim of the degree-d part of F_n^(k,r): #columns - rank.
std::size_t dimension_oracle(const WheelSpec& spec, int n, int d);

/// A basis of the degree-d part of F_n^(k,r) from the nullspace of the
/// constraint system.
std::vector<SymPoly> oracle_basis(const WheelSpec& spec, int n, int d);

struct DimensionEntry {
    int n = 0;
    int d = 0;
    std::size_t dim = 0;
};

struct DimensionTable {
    int k = 0;
    int r = 0;
    std::vector<DimensionEntry> entries;
};

/// g_{n,d} for d = 0..max_degree; cells may run in parallel.
DimensionTable dimension_table(const WheelSpec& spec, int n, int max_degree, int jobs = 1);

nlohmann::json to_json(const DimensionTable& table);

struct Violation {
    std::vector<int> shifts;              // s_1..s_{k+1}
    mpq_class c;
    std::vector<mpq_class> free_values;   // x_{k+2}..x_n
    CycNum value;
};

/// Deterministic search for g(c q^{s_1}, c t q^{s_2}, ..., c t^k q^{s_{k+1}},
/// y_1, ..., y_m) != 0 over all shift tuples and `trials` choices of
/// (c, y). Requires n > k.
std::optional<Violation> find_violation(const SymPoly& g, const WheelSpec& spec, int trials = 8);

} // namespace wheelsym
