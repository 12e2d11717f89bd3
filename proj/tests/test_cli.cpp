#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "wheelsym/polyring.hpp"

using namespace wheelsym;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "wheelsym");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_poly(const std::string& name, const MPoly& f)
{
    const auto path = std::filesystem::temp_directory_path() / ("wheelsym_" + name + ".json");
    std::ofstream(path) << to_json(f).dump();
    return path.string();
}

} // namespace

TEST_CASE("dim")
{
    const Run r = run({"dim", "--k", "1", "--r", "2", "--n", "2", "--max-deg", "3"});
    REQUIRE(r.code == exit_pass);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == "1");
    std::vector<std::size_t> dims;
    for (const auto& e : j["entries"])
        dims.push_back(e["dim"].get<std::size_t>());
    CHECK(dims == std::vector<std::size_t>{0, 1, 1, 2});

    const auto path = (std::filesystem::temp_directory_path() / "wheelsym_table.json").string();
    CHECK(run({"dim", "--k", "1", "--r", "4", "--n", "2", "--max-deg", "4", "--out", path}).code == exit_pass);
    std::ifstream in(path);
    CHECK(json::parse(in)["k"] == 1);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"bogus"}).code == exit_usage);
    CHECK(run({"dim", "--k", "1"}).code == exit_usage);
    const Run gcd = run({"dim", "--k", "1", "--r", "3", "--n", "2", "--max-deg", "2"});
    CHECK(gcd.code == exit_usage);
    CHECK(gcd.err.find("coprime") != std::string::npos);
    CHECK(run({"char", "--k", "1", "--r", "2", "--zmax", "0", "--vmax", "3"}).code == exit_usage);
    CHECK(run({"verify", "--suite", "nope"}).code == exit_usage);
    CHECK(run({"member", "--k", "1", "--r", "2", "--poly", "/nonexistent.json"}).code == exit_usage);
    CHECK(run({"hl", "--lambda", "1,1", "--n", "2", "--t-order", "2"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_pass);
}

TEST_CASE("hl")
{
    const Run r = run({"hl", "--lambda", "1,1", "--n", "2", "--t-order", "3"});
    REQUIRE(r.code == exit_pass);
    CHECK(json::parse(r.out)["m_expansion_text"] == json{{"(1,1)", "1"}});
    const Run r2 = run({"hl", "--lambda", "2", "--n", "2", "--t-order", "1", "--t", "3"});
    REQUIRE(r2.code == exit_pass);
    CHECK(json::parse(r2.out)["m_expansion_text"] == json{{"(1,1)", "-2"}, {"(2,0)", "1"}});
}

TEST_CASE("macop and member")
{
    const FieldRef q = make_field(1);
    const MPoly s = monomial_sym(Partition({1, 0}), q).poly();
    const Run m = run({"macop", "--r", "1", "--q", "2", "--t", "3", "--poly", write_poly("s", s)});
    REQUIRE(m.code == exit_pass);
    CHECK(json::parse(m.out)["m_expansion_text"] == json{{"(1,0)", "7"}});

    const MPoly x1 = MPoly::variable(2, 0, q);
    CHECK(run({"macop", "--r", "1", "--poly", write_poly("x1", x1)}).code == exit_usage);

    CHECK(run({"member", "--k", "1", "--r", "2", "--poly", write_poly("s", s)}).code == exit_pass);
    const MPoly prod = monomial_sym(Partition({1, 1}), q).poly();
    const Run bad = run({"member", "--k", "1", "--r", "2", "--poly", write_poly("p", prod)});
    CHECK(bad.code == exit_failure);
    const json j = json::parse(bad.out);
    CHECK(j["member"] == false);
    CHECK(j["residual"]["exps"] == json{2, 0});
}

TEST_CASE("char")
{
    const Run csv = run({"char", "--k", "2", "--r", "3", "--zmax", "3", "--vmax", "8", "--method", "both",
                         "--out", "csv"});
    REQUIRE(csv.code == exit_pass);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,d,formula,oracle,match");
    std::size_t rows = 0;
    for (std::string line; std::getline(lines, line);) {
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "true");
    }
    CHECK(rows == 36);

    const Run js = run({"char", "--k", "1", "--r", "2", "--zmax", "2", "--vmax", "3", "--method", "formula"});
    REQUIRE(js.code == exit_pass);
    const json j = json::parse(js.out);
    CHECK(j["cells"].size() == 12);
    CHECK(j["cells"][9]["formula"] == "1");  // n=2, d=1
}

TEST_CASE("dual space commands")
{
    const Run e = run({"epsilon", "--k", "1", "--i", "1"});
    REQUIRE(e.code == exit_pass);
    const json terms = json::parse(e.out)["element"]["terms"];
    CHECK(terms["(2,0)"]["num"] == json{"2"});
    CHECK(terms["(1,1)"]["num"] == json{"-1"});

    const Run s = run({"straighten", "--k", "1", "--e", "1,1"});
    REQUIRE(s.code == exit_pass);
    const json st = json::parse(s.out)["element"]["terms"];
    CHECK(st.size() == 1);
    CHECK(st["(2,0)"]["num"] == json{"2"});
}

TEST_CASE("basis and split")
{
    const Run b = run({"basis", "--k", "1", "--r", "4", "--n", "2", "--max-deg", "8", "--verify", "--jobs", "2"});
    REQUIRE(b.code == exit_pass);
    const json rep = json::parse(b.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["degrees"].size() == 9);

    const Run list = run({"basis", "--k", "1", "--r", "2", "--n", "2", "--max-deg", "1"});
    REQUIRE(list.code == exit_pass);
    CHECK(json::parse(list.out)["elements"].size() == 1);

    const FieldRef q = make_field(1);
    const MPoly one = MPoly::constant(2, CycNum::rational(q, 1));
    const Run sp = run({"split", "--k", "1", "--r", "4", "--poly", write_poly("one", one)});
    REQUIRE(sp.code == exit_pass);
    CHECK(json::parse(sp.out)["all_preimages_in_F_k2"] == false);
}

TEST_CASE("partitions")
{
    const Run r = run({"partitions", "--n", "2", "--weight", "3", "--filter", "admissible", "--k", "1", "--r", "1"});
    REQUIRE(r.code == exit_pass);
    CHECK(json::parse(r.out)["partitions"] == json{{2, 1}, {3, 0}});
    const Run s = run({"partitions", "--n", "2", "--max-weight", "10", "--filter", "slim", "--rm1", "2"});
    CHECK(json::parse(s.out)["count"] == 4);
}

TEST_CASE("verify is deterministic")
{
    const Run a = run({"verify", "--suite", "char-k1r2"});
    CHECK(a.code == exit_pass);
    const Run b = run({"verify", "--suite", "char-k1r2", "--jobs", "4"});
    CHECK(a.out == b.out);
}
