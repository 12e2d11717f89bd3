#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wheelsym/suites.hpp"

using namespace wheelsym;

namespace {

std::string verify_output(const std::string& suite, int jobs)
{
    const std::string j = std::to_string(jobs);
    const char* argv[] = {"wheelsym", "verify", "--suite", suite.c_str(), "--jobs", j.c_str()};
    std::ostringstream out, err;
    run_cli(6, argv, out, err);
    return out.str() + err.str();
}

} // namespace

int main()
{
    using Check = CriterionResult (*)(int);
    const std::vector<Check> checks{
        [](int j) { return check_char_r2(j); }, check_char_kr, check_bn_expressions, check_hl_basis,
        check_k1_product, check_dual_space, check_macdonald, check_basis_theorem, check_separating,
        check_mac_stability};

    bool all = true;
    int id = 1;
    for (const Check check : checks) {
        bool pass = false;
        std::string title, note;
        try {
            const CriterionResult r = check(4);
            pass = r.pass;
            title = r.title;
            if (!pass)
                note = r.detail.dump();
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
        if (!note.empty())
            std::cout << " | " << note;
        std::cout << '\n';
        all = all && pass;
        ++id;
    }

    bool same = true;
    std::string first;
    try {
        first = verify_output("all", 1);
        same = first == verify_output("all", 1) && first == verify_output("all", 4) &&
               first == verify_output("all", 3);
    } catch (const std::exception& e) {
        same = false;
    }
    std::cout << (same ? "PASS" : "FAIL") << " criterion 11: verify reports are byte-identical across runs and worker counts\n";
    all = all && same;
    return all ? 0 : 1;
}
