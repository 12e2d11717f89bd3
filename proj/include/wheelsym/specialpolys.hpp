#pragma once

#include <vector>

#include "wheelsym/cycfield.hpp"
#include "wheelsym/partitions.hpp"
#include "wheelsym/polyring.hpp"

namespace wheelsym {

/// prod over part values i of prod_{j=1}^{m_i} (1 - t) / (1 - t^j), zero
/// parts included. Throws NormalizationPole when some 1 - t^j vanishes.
CycNum hall_littlewood_normalization(const Partition& lambda, const CycNum& t);

/// Hall-Littlewood P_lambda(x_1..x_n; t), n = lambda.length(), computed as
/// normalization * antisymmetrize(x^lambda prod_{i<j}(x_i - t x_j)) / Vandermonde.
SymPoly hall_littlewood(const Partition& lambda, const CycNum& t);

struct MacParams {
    CycNum q;
    CycNum t;
};

/// D_n^r f = sum_{|I|=r} A_I(x;t) T_I f with
/// A_I = t^{r(r-1)/2} prod_{i in I, j not in I} (t x_i - x_j) / (x_i - x_j).
SymPoly macdonald_operator(int r, const MacParams& p, const SymPoly& f);

/// q^{lambda_i} t^{n-i}, i = 1..n.
std::vector<CycNum> eigen_parameters(const Partition& lambda, const MacParams& p);

/// e_r of the given values.
CycNum elementary_symmetric(int r, const std::vector<CycNum>& values);

struct EigenCheck {
    int r = 0;
    CycNum eigenvalue;
    bool pass = false;
};

struct EigenReport {
    bool pass = true;
    std::vector<EigenCheck> checks;
};

/// Checks D_n^r P = e_r(q^{lambda_1} t^{n-1}, ..., q^{lambda_n}) P for r = 0..n.
EigenReport verify_eigen(const Partition& lambda, const MacParams& p, const SymPoly& poly);

/// P_lambda(q, t): the D_n^1 eigenvector m_lambda + sum_{mu < lambda} u m_mu
/// (dominance). Throws NonGenericParameters on an eigenvalue collision and
/// Fault if the result fails verify_eigen.
SymPoly macdonald_poly(const Partition& lambda, const MacParams& p);

/// lim_{q -> 0} P_lambda(q, t). At q = 0 the D_n^1 eigenvalues only see the
/// zero parts, so the triangular system is solved over power series in q,
/// truncated deep enough to survive every division, and the constant terms
/// are kept. The result is checked with verify_eigen at q = 0.
SymPoly macdonald_poly_q_limit(const Partition& lambda, const CycNum& t);

} // namespace wheelsym
