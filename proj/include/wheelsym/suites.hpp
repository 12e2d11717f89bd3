#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wheelsym {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    nlohmann::json detail;
};

CriterionResult check_char_r2(int jobs, std::vector<int> ks = {1, 2});
CriterionResult check_char_kr(int jobs);
CriterionResult check_bn_expressions(int jobs);
CriterionResult check_hl_basis(int jobs);
CriterionResult check_k1_product(int jobs);
CriterionResult check_dual_space(int jobs);
CriterionResult check_macdonald(int jobs);
CriterionResult check_basis_theorem(int jobs);
CriterionResult check_separating(int jobs);
CriterionResult check_mac_stability(int jobs);

struct SuiteReport {
    std::string name;
    std::vector<CriterionResult> criteria;

    bool pass() const;
};

/// char-k1r2, char-r2, char-kr, bn, hl-basis, k1-product, dual, macdonald,
/// basis-thm, separating, mac-stability, all.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, int jobs = 1);

/// Contains no timing or environment data, so equal inputs give equal bytes.
nlohmann::json to_json(const SuiteReport& report);

} // namespace wheelsym
