#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wheelsym/charseries.hpp"
#include "wheelsym/dualspace.hpp"
#include "wheelsym/error.hpp"
#include "wheelsym/frobenius.hpp"
#include "wheelsym/specialpolys.hpp"
#include "wheelsym/suites.hpp"
#include "wheelsym/wheel.hpp"

namespace wheelsym {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

MPoly read_poly(const std::string& path)
{
    const json j = read_json_file(path);
    try {
        return mpoly_from_json(j);
    } catch (const json::exception& e) {
        throw UsageError("'" + path + "' is not a polynomial file: " + e.what());
    }
}

// Moves f into target when the conductors allow it.
MPoly into_field(const MPoly& f, const FieldRef& target)
{
    if (f.field()->conductor() == target->conductor())
        return f;
    return f.embedded(target);
}

json partition_array(const Partition& p) { return p.parts(); }

json m_expansion_text(const MExpansion& m)
{
    json out = json::object();
    for (const auto& [lambda, c] : m)
        out[lambda.key()] = c.to_string();
    return out;
}

json sym_json(const SymPoly& f)
{
    return {{"n", f.nvars()},
            {"M", f.field()->conductor()},
            {"m_expansion", m_expansion_to_json(f.m_expansion())},
            {"m_expansion_text", m_expansion_text(f.m_expansion())}};
}

json envelope(const std::string& command)
{
    return {{"schema", "1"}, {"command", command}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_positive(int value, const char* name)
{
    if (value <= 0)
        throw UsageError(std::string(name) + " must be positive");
}

Partition padded(const Partition& lambda, int n)
{
    if (n < 0 || lambda.length() == n)
        return lambda;
    if (lambda.length() > n)
        throw UsageError("partition " + lambda.key() + " has more than " + std::to_string(n) + " parts");
    std::vector<int> parts = lambda.parts();
    parts.resize(static_cast<std::size_t>(n), 0);
    return Partition(parts);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Symmetric polynomials with the root-of-unity wheel condition"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    int code = exit_pass;
    std::function<void()> action;

    // partitions
    auto* c_part = app.add_subcommand("partitions", "enumerate partitions of fixed length");
    int p_n = 0, p_max = 0, p_k = 1, p_r = 1, p_rm1 = 1, p_weight = -1;
    std::string p_filter = "all";
    bool p_count = false;
    c_part->add_option("--n", p_n, "length")->required();
    c_part->add_option("--max-weight", p_max, "largest weight")->default_val(0);
    c_part->add_option("--weight", p_weight, "exact weight (overrides --max-weight)");
    c_part->add_option("--filter", p_filter, "all | admissible | slim")
        ->check(CLI::IsMember({"all", "admissible", "slim"}));
    c_part->add_option("--k", p_k, "admissibility k")->default_val(1);
    c_part->add_option("--r", p_r, "admissibility r")->default_val(1);
    c_part->add_option("--rm1", p_rm1, "slimness bound r-1")->default_val(1);
    c_part->add_flag("--count", p_count, "per-weight tallies only");
    c_part->callback([&] {
        action = [&] {
            if (p_n < 0 || p_max < 0)
                throw UsageError("--n and --max-weight must be nonnegative");
            PartitionFilter filter = PartitionFilter::any();
            if (p_filter == "admissible")
                filter = PartitionFilter::admissible(p_k, p_r);
            else if (p_filter == "slim") {
                require_positive(p_rm1, "--rm1");
                filter = PartitionFilter::slim(p_rm1);
            }
            json j = envelope("partitions");
            j["n"] = p_n;
            j["filter"] = p_filter;
            if (p_count) {
                j["counts"] = count_by_weight(p_n, p_weight >= 0 ? p_weight : p_max, filter);
            } else {
                const auto ps = p_weight >= 0 ? partitions_of(p_weight, p_n, filter) : enumerate(p_n, p_max, filter);
                json arr = json::array();
                for (const auto& p : ps)
                    arr.push_back(partition_array(p));
                j["partitions"] = arr;
                j["count"] = ps.size();
            }
            emit(out, j);
        };
    });

    // hl
    auto* c_hl = app.add_subcommand("hl", "Hall-Littlewood polynomial at a primitive root of unity");
    std::string hl_lambda, hl_t;
    int hl_n = -1, hl_order = 2;
    c_hl->add_option("--lambda", hl_lambda, "partition, e.g. 2,0")->required();
    c_hl->add_option("--n", hl_n, "number of variables (pads with zeros)");
    c_hl->add_option("--t-order", hl_order, "order of the primitive root t")->default_val(2);
    c_hl->add_option("--t", hl_t, "explicit t (rational or z^e in Q(z), z of order --t-order)");
    c_hl->callback([&] {
        action = [&] {
            require_positive(hl_order, "--t-order");
            const Partition lambda = padded(Partition::parse(hl_lambda), hl_n);
            const FieldRef field = make_field(static_cast<unsigned>(hl_order));
            const CycNum t = hl_t.empty() ? CycNum::root_of_unity(field, 1) : parse_scalar(hl_t, field);
            const SymPoly p = hall_littlewood(lambda, t);
            json j = envelope("hl");
            j["lambda"] = partition_array(lambda);
            j["t_order"] = hl_order;
            j.update(sym_json(p));
            emit(out, j);
        };
    });

    // macop
    auto* c_mac = app.add_subcommand("macop", "apply the Macdonald operator D_n^r");
    int mac_r = 1;
    std::string mac_q = "2", mac_t = "3", mac_poly;
    c_mac->add_option("--r", mac_r, "operator index")->required();
    c_mac->add_option("--q", mac_q, "q: rational or z^e")->default_val("2");
    c_mac->add_option("--t", mac_t, "t: rational or z^e")->default_val("3");
    c_mac->add_option("--poly", mac_poly, "polynomial JSON file")->required();
    c_mac->callback([&] {
        action = [&] {
            const MPoly f = read_poly(mac_poly);
            const MacParams p{parse_scalar(mac_q, f.field()), parse_scalar(mac_t, f.field())};
            const SymPoly g = macdonald_operator(mac_r, p, SymPoly(f));
            json j = envelope("macop");
            j["r"] = mac_r;
            j.update(sym_json(g));
            emit(out, j);
        };
    });

    // member
    auto* c_mem = app.add_subcommand("member", "wheel-condition membership (exit 1 if not a member)");
    int mem_k = 1, mem_r = 2;
    std::string mem_poly;
    c_mem->add_option("--k", mem_k)->required();
    c_mem->add_option("--r", mem_r)->required();
    c_mem->add_option("--poly", mem_poly, "polynomial JSON file")->required();
    c_mem->callback([&] {
        action = [&] {
            const auto spec = WheelSpec::make(mem_k, mem_r);
            const MPoly f = into_field(read_poly(mem_poly), spec.field());
            const Membership m = is_member(f, spec);
            json j = envelope("member");
            j["k"] = mem_k;
            j["r"] = mem_r;
            j["member"] = m.member;
            if (!m.member) {
                j["plane_shifts"] = m.shifts;
                j["residual"] = {{"exps", m.residual_exps},
                                 {"coeff", m.residual_coeff ? to_json(*m.residual_coeff) : json()}};
            }
            emit(out, j);
            code = m.member ? exit_pass : exit_failure;
        };
    });

    // dim
    auto* c_dim = app.add_subcommand("dim", "dimension table of F_n^(k,r) from the nullspace oracle");
    int dim_k = 1, dim_r = 2, dim_n = 1, dim_max = 0, dim_jobs = 1;
    std::string dim_out;
    c_dim->add_option("--k", dim_k)->required();
    c_dim->add_option("--r", dim_r)->required();
    c_dim->add_option("--n", dim_n)->required();
    c_dim->add_option("--max-deg", dim_max)->required();
    c_dim->add_option("--out", dim_out, "write the table to this file instead of stdout");
    c_dim->add_option("--jobs", dim_jobs)->default_val(1);
    c_dim->callback([&] {
        action = [&] {
            const auto spec = WheelSpec::make(dim_k, dim_r);
            if (dim_n < 0 || dim_max < 0)
                throw UsageError("--n and --max-deg must be nonnegative");
            const json j = to_json(dimension_table(spec, dim_n, dim_max, dim_jobs));
            if (dim_out.empty()) {
                emit(out, j);
            } else {
                std::ofstream file(dim_out);
                if (!file)
                    throw UsageError("cannot write '" + dim_out + "'");
                emit(file, j);
            }
        };
    });

    // char
    auto* c_char = app.add_subcommand("char", "character coefficients g_{n,d}");
    int ch_k = 1, ch_r = 2, ch_z = 1, ch_v = 1, ch_jobs = 1;
    std::string ch_method = "formula", ch_out = "json";
    c_char->add_option("--k", ch_k)->required();
    c_char->add_option("--r", ch_r)->required();
    c_char->add_option("--zmax", ch_z)->required();
    c_char->add_option("--vmax", ch_v)->required();
    c_char->add_option("--method", ch_method)->check(CLI::IsMember({"formula", "oracle", "both"}));
    c_char->add_option("--out", ch_out, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    c_char->add_option("--jobs", ch_jobs)->default_val(1);
    c_char->callback([&] {
        action = [&] {
            require_positive(ch_z, "--zmax");
            require_positive(ch_v, "--vmax");
            const auto spec = WheelSpec::make(ch_k, ch_r);
            const CharSeries chi = ch_r == 2 ? chi_k2(ch_k, ch_z, ch_v) : chi_kr(ch_k, ch_r, ch_z, ch_v);
            const bool want_formula = ch_method != "oracle";
            const bool want_oracle = ch_method != "formula";
            std::optional<OracleComparison> cmp;
            if (want_oracle)
                cmp = compare_with_oracle(chi, spec, ch_z, ch_v, ch_jobs);

            struct Line {
                int n, d;
                std::string formula, oracle, match;
            };
            std::vector<Line> lines;
            std::size_t idx = 0;
            bool all_match = true;
            for (int n = 0; n <= ch_z; ++n)
                for (int d = 0; d <= ch_v; ++d, ++idx) {
                    Line line{n, d, "", "", ""};
                    if (want_formula)
                        line.formula = chi.coefficient(n, d).get_str();
                    if (cmp) {
                        line.oracle = std::to_string(cmp->cells[idx].oracle);
                        if (want_formula) {
                            line.match = cmp->cells[idx].match ? "true" : "false";
                            all_match = all_match && cmp->cells[idx].match;
                        }
                    }
                    lines.push_back(line);
                }
            if (ch_out == "csv") {
                out << "n,d,formula,oracle,match\n";
                for (const auto& l : lines)
                    out << l.n << ',' << l.d << ',' << l.formula << ',' << l.oracle << ',' << l.match << '\n';
            } else {
                json j = envelope("char");
                j["k"] = ch_k;
                j["r"] = ch_r;
                j["method"] = ch_method;
                json cells = json::array();
                for (const auto& l : lines) {
                    json c = {{"n", l.n}, {"d", l.d}};
                    if (want_formula)
                        c["formula"] = l.formula;
                    if (want_oracle)
                        c["oracle"] = std::stoul(l.oracle);
                    if (ch_method == "both")
                        c["match"] = l.match == "true";
                    cells.push_back(c);
                }
                j["cells"] = cells;
                if (ch_method == "both")
                    j["pass"] = all_match;
                emit(out, j);
            }
            code = all_match ? exit_pass : exit_failure;
        };
    });

    // epsilon
    auto* c_eps = app.add_subcommand("epsilon", "the relation epsilon_i in E_{k+1}");
    int eps_k = 1, eps_i = 0;
    c_eps->add_option("--k", eps_k)->required();
    c_eps->add_option("--i", eps_i)->required();
    c_eps->callback([&] {
        action = [&] {
            const auto spec = WheelSpec::make(eps_k, 2);
            if (eps_i < 0)
                throw UsageError("--i must be nonnegative");
            json j = envelope("epsilon");
            j["k"] = eps_k;
            j["i"] = eps_i;
            j["element"] = to_json(epsilon(eps_i, eps_k, spec.t()));
            emit(out, j);
        };
    });

    // straighten
    auto* c_str = app.add_subcommand("straighten", "rewrite e_lambda in the admissible basis of E_n^(k,2)");
    int st_k = 1;
    std::string st_e;
    c_str->add_option("--k", st_k)->required();
    c_str->add_option("--e", st_e, "index partition, e.g. 1,1")->required();
    c_str->callback([&] {
        action = [&] {
            const auto spec = WheelSpec::make(st_k, 2);
            const Partition lambda = Partition::parse(st_e);
            json j = envelope("straighten");
            j["k"] = st_k;
            j["input"] = partition_array(lambda);
            j["element"] = to_json(straighten(EElement::basis(lambda, spec.field()), st_k, spec.t()));
            emit(out, j);
        };
    });

    // basis
    auto* c_basis = app.add_subcommand("basis", "product basis f_lambda g_mu of F_n^(k,r)");
    int b_k = 1, b_r = 2, b_n = 1, b_max = 0, b_jobs = 1;
    bool b_verify = false;
    c_basis->add_option("--k", b_k)->required();
    c_basis->add_option("--r", b_r)->required();
    c_basis->add_option("--n", b_n)->required();
    c_basis->add_option("--max-deg", b_max)->required();
    c_basis->add_flag("--verify", b_verify, "check membership, independence and counts");
    c_basis->add_option("--jobs", b_jobs)->default_val(1);
    c_basis->callback([&] {
        action = [&] {
            const auto spec = WheelSpec::make(b_k, b_r);
            if (b_n < 0 || b_max < 0)
                throw UsageError("--n and --max-deg must be nonnegative");
            const auto elements = build_basis(spec, b_n, b_max);
            if (b_verify) {
                const BasisReport rep = verify_basis(elements, spec, b_n, b_max, b_jobs);
                emit(out, to_json(rep));
                code = rep.pass() ? exit_pass : exit_failure;
                return;
            }
            json j = envelope("basis");
            j["k"] = b_k;
            j["r"] = b_r;
            j["n"] = b_n;
            json arr = json::array();
            for (const auto& el : elements) {
                json e = {{"lambda", partition_array(el.lambda)},
                          {"mu", partition_array(el.mu)},
                          {"degree", el.total_degree}};
                e.update(sym_json(el.value));
                arr.push_back(e);
            }
            j["elements"] = arr;
            emit(out, j);
        };
    });

    // split
    auto* c_split = app.add_subcommand("split", "split h over slim Macdonald polynomials P_mu(q, t~)");
    int sp_k = 1, sp_r = 2;
    std::string sp_poly, sp_t;
    c_split->add_option("--k", sp_k)->required();
    c_split->add_option("--r", sp_r)->required();
    c_split->add_option("--poly", sp_poly, "polynomial JSON file")->required();
    c_split->add_option("--t-tilde", sp_t, "generic t~ (default: 2, then 3, then 5)");
    c_split->callback([&] {
        action = [&] {
            const auto spec = WheelSpec::make(sp_k, sp_r);
            const SymPoly h(into_field(read_poly(sp_poly), spec.field()));
            const SlimSplit split = sp_t.empty() ? split_by_slim(h, spec)
                                                 : split_by_slim(h, spec, parse_scalar(sp_t, spec.field()));
            const auto companion = spec.r2_companion();
            json j = envelope("split");
            j["k"] = sp_k;
            j["r"] = sp_r;
            j["t_tilde"] = to_json(split.generic_t);
            json cof = json::array();
            bool all_members = true;
            for (const auto& [mu, pre] : split.preimages) {
                const bool member = is_member(pre, companion).member;
                all_members = all_members && member;
                cof.push_back({{"mu", partition_array(mu)},
                               {"preimage", sym_json(pre)},
                               {"preimage_in_F_k2", member}});
            }
            j["cofactors"] = cof;
            j["all_preimages_in_F_k2"] = all_members;
            emit(out, j);
        };
    });

    // verify
    auto* c_ver = app.add_subcommand("verify", "run a named acceptance suite");
    std::string v_suite;
    int v_jobs = 1;
    c_ver->add_option("--suite", v_suite)->required()->check(CLI::IsMember(suite_names()));
    c_ver->add_option("--jobs", v_jobs)->default_val(1);
    c_ver->callback([&] {
        action = [&] {
            if (v_jobs < 1)
                throw UsageError("--jobs must be positive");
            const SuiteReport rep = run_suite(v_suite, v_jobs);
            emit(out, to_json(rep));
            code = rep.pass() ? exit_pass : exit_failure;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_pass;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (action)
            action();
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NormalizationPole& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NonGenericParameters& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DivisionByZero& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Fault& e) {
        err << "internal fault: " << e.what() << '\n';
        return exit_fault;
    } catch (const std::exception& e) {
        err << "internal fault: " << e.what() << '\n';
        return exit_fault;
    }
}

} // namespace wheelsym
