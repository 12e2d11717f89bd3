#pragma once

#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "wheelsym/partitions.hpp"
#include "wheelsym/polyring.hpp"
#include "wheelsym/wheel.hpp"

namespace wheelsym {

/// x_i -> x_i^{r-1}; in the m-basis c m_lambda -> c m_{(r-1) lambda}.
SymPoly frobenius_map(const SymPoly& f, int r_minus_1);

struct FrobeniusPreimage {
    std::optional<SymPoly> preimage;
    std::optional<Partition> witness;  // m-support partition not divisible by r-1
};

FrobeniusPreimage in_frobenius_image(const SymPoly& f, int r_minus_1);

/// f_lambda g_mu with f_lambda the Frobenius image of the Hall-Littlewood
/// P_lambda(x; t) and g_mu = m_mu.
struct ProductBasisElement {
    Partition lambda;  // (k,1)-admissible
    Partition mu;      // (r-1)-slim
    int total_degree = 0;
    SymPoly value;
};

/// Elements of total degree <= max_degree, ordered by (degree, lambda, mu).
std::vector<ProductBasisElement> build_basis(const WheelSpec& spec, int n, int max_degree);

struct DegreeReport {
    int degree = 0;
    std::size_t count = 0;
    std::size_t oracle_dim = 0;
    std::size_t membership_failures = 0;
    bool independent = true;

    bool pass() const { return membership_failures == 0 && independent && count == oracle_dim; }
};

struct BasisReport {
    int k = 0;
    int r = 0;
    int n = 0;
    std::vector<DegreeReport> degrees;

    bool pass() const;
};

/// Membership of every element, linear independence per degree, and count
/// against dimension_oracle, for degrees 0..max_degree.
BasisReport verify_basis(const std::vector<ProductBasisElement>& elements, const WheelSpec& spec,
                         int n, int max_degree, int jobs = 1);

nlohmann::json to_json(const BasisReport& report);

struct SlimSplit {
    CycNum generic_t;
    /// mu -> f_mu, the Frobenius-side cofactor of P_mu(q, generic_t); zero
    /// cofactors are omitted.
    std::map<Partition, SymPoly> cofactors;
    /// mu -> preimage of f_mu under the Frobenius map.
    std::map<Partition, SymPoly> preimages;
};

/// h = sum_mu P_mu(q, generic_t) f_mu over slim mu, with f_mu in the
/// Frobenius image, by an exact solve in m-coordinates. Throws
/// NonGenericParameters if generic_t is not generic enough.
SlimSplit split_by_slim(const SymPoly& h, const WheelSpec& spec, const CycNum& generic_t);

/// Tries generic_t = 2, then 3, then 5.
SlimSplit split_by_slim(const SymPoly& h, const WheelSpec& spec);

} // namespace wheelsym
