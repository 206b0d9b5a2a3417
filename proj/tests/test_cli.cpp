#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = comaj::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::vector<nlohmann::json> json_lines(const std::string& text)
{
    std::vector<nlohmann::json> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("stat reproduces the worked examples")
{
    auto r = run({"stat", "--shape", "4,2,1", "--tableau", "1,2,4,5/3,6/7", "--perms", "3651274,6523417,1423567"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Z^1 = (1,1,0,2,0,0,1)"));
    CHECK(contains(r.out, "Z^2 = (21,01,10,12,00,00,21)"));
    CHECK(contains(r.out, "Z^3 = (021,201,210,112,300,400,421)"));
    CHECK(contains(r.out, "Z^4 = (0021,0201,0210,1112,1300,1400,1421)"));
    CHECK(contains(r.out, "components 5,6,16,4"));
    CHECK(contains(r.out, "weight q_1^5*q_2^6*q_3^16*q_4^4"));
    CHECK(contains(r.out, "total 31"));

    r = run({"stat", "--shape", "2,2,1,1", "--tableau", "1,3/2,4/5/6", "--perms", "631254,365412"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Z^3 = (021,022,100,112,212,310)"));
    CHECK(contains(r.out, "total 21"));

    r = run({"stat", "--shape", "1", "--perms", ""});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "total 0"));
}

TEST_CASE("stat json output")
{
    auto r = run({"stat", "--shape", "4,2,1", "--tableau", "1,2,4,5/3,6/7", "--perms", "3651274,6523417,1423567",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["total"] == 31);
    CHECK(j["des"] == "{2,5,6}");
    CHECK(j["components"] == nlohmann::json::array({5, 6, 16, 4}));
    CHECK(j["steps"][2]["des"] == "{1,2,4,5}");
}

TEST_CASE("stat usage errors")
{
    CHECK(run({"stat", "--shape", "2", "--perms", "11"}).code == 2);
    CHECK(run({"stat", "--shape", "3", "--perms", "12"}).code == 2);
    CHECK(run({"stat", "--shape", "2,1", "--tableau", "1,2/3,4"}).code == 2);
    CHECK(run({"stat", "--shape", "1,2"}).code == 2);
    CHECK(run({"stat"}).code == 2);
    CHECK(run({"stat", "--shape", "2,1", "--tableau", "2,1/3"}).code == 2);
}

TEST_CASE("evaluate")
{
    auto r = run({"evaluate", "schur", "--lambda", "2,1", "--k", "1", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "q + q^2\n");
    CHECK(run({"evaluate", "schur", "--lambda", "1", "--k", "3", "--format", "text"}).out == "1\n");
    CHECK(run({"evaluate", "fundamental", "--n", "2", "--r-set", "1", "--k", "1", "--format", "text"}).out == "q\n");

    r = run({"evaluate", "schur", "--lambda", "2,1", "--k", "1"});
    CHECK(r.out == R"({"D":3,"k":1,"terms":[{"c":"1","e":[1]},{"c":"1","e":[2]}]})"
                   "\n");
    r = run({"evaluate", "schur", "--lambda", "2,1", "--k", "1", "--format", "csv"});
    CHECK(r.out == "e_1,coeff\n0,0\n1,1\n2,1\n3,0\n");

    r = run({"evaluate", "schur", "--lambda", "1,1", "--k", "1", "--mode", "series", "--D", "4", "--format", "text"});
    CHECK(r.out == "q + q^2 + 2*q^3 + 2*q^4\n");
    r = run({"evaluate", "schur", "--lambda", "2,1", "--k", "2", "--collapse", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "q"));
}

TEST_CASE("evaluate usage errors")
{
    CHECK(run({"evaluate", "schur", "--lambda", "2,1", "--k", "2", "--D", "3"}).code == 2);
    CHECK(run({"evaluate", "schur", "--k", "2"}).code == 2);
    CHECK(run({"evaluate", "fundamental", "--n", "3", "--r-set", "3"}).code == 2);
    CHECK(run({"evaluate", "plethysm", "--lambda", "2"}).code == 2);
    CHECK(run({"evaluate", "schur", "--lambda", "2", "--format", "xml"}).code == 2);
}

TEST_CASE("multiplicity tables")
{
    auto r = run({"multiplicity", "--n", "2", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"2\",1,0,1,"));
    CHECK(contains(r.out, "\"1,1\",0,2,0,"));
    r = run({"multiplicity", "--n", "1", "--k", "4"});
    CHECK(contains(r.out, "\"1\",1,1,1\n"));
    r = run({"multiplicity", "--n", "3", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "total,1,4,8,10,8,4,1,36,36\n"));
    CHECK(run({"multiplicity", "--n", "0", "--k", "2"}).code == 2);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "finite", "--lambda", "1", "--k", "1"});
    CHECK(r.code == 0);
    auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["status"] == "pass");

    r = run({"verify", "prop41", "--n", "3", "--r", "2", "--bound", "4"});
    CHECK(r.code == 0);
    lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["status"] == "pass");

    r = run({"verify", "prop41", "--sigma", "1234", "--r-set", "2", "--d-set", "2", "--r", "1", "--bound", "6"});
    CHECK(r.code == 0);
    r = run({"verify", "quasi", "--n", "3", "--k", "2", "--D", "6"});
    CHECK(r.code == 0);
    CHECK(json_lines(r.out).size() == 4);
    CHECK(run({"verify", "row", "--n", "3", "--k", "3"}).code == 0);
    CHECK(run({"verify", "kronecker", "--lambda", "2,1", "--k", "2"}).code == 0);
    CHECK(run({"verify", "reindex", "--lambda", "2,1", "--m", "2"}).code == 0);

    r = run({"verify", "all", "--max-n", "3", "--max-k", "2"});
    CHECK(r.code == 0);
    for (const auto& j : json_lines(r.out)) {
        CHECK(j["status"] == "pass");
        CHECK_FALSE(j.contains("elapsed_ms"));
    }
    r = run({"verify", "finite", "--lambda", "2", "--k", "1", "--timing"});
    CHECK(json_lines(r.out)[0].contains("elapsed_ms"));
}

TEST_CASE("verify usage errors")
{
    CHECK(run({"verify", "everything"}).code == 2);
    CHECK(run({"verify", "finite", "--lambda", "2,1"}).code == 2);
    CHECK(run({"verify", "finite", "--lambda", "2,1", "--k", "2", "--D", "3"}).code == 2);
    CHECK(run({"verify", "all", "--max-n", "0"}).code == 2);
    CHECK(run({"verify", "prop41", "--n", "3"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("help exits cleanly")
{
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "verify"));
}

TEST_CASE("output is identical across job counts and the environment fallback")
{
    const auto one = run({"verify", "all", "--max-n", "3", "--max-k", "2", "--jobs", "1"});
    const auto eight = run({"verify", "all", "--max-n", "3", "--max-k", "2", "--jobs", "8"});
    CHECK(one.out == eight.out);

    ::setenv("COMAJ_JOBS", "4", 1);
    const auto env = run({"multiplicity", "--n", "4", "--k", "2"});
    ::unsetenv("COMAJ_JOBS");
    CHECK(env.out == run({"multiplicity", "--n", "4", "--k", "2", "--jobs", "1"}).out);

    ::setenv("COMAJ_JOBS", "many", 1);
    CHECK(run({"multiplicity", "--n", "2", "--k", "2"}).code == 2);
    ::unsetenv("COMAJ_JOBS");
}

TEST_CASE("output files")
{
    const auto path = std::filesystem::temp_directory_path() / "comaj_cli_test.json";
    auto r = run({"evaluate", "schur", "--lambda", "2,1", "--k", "2", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"evaluate", "schur", "--lambda", "2,1", "--k", "2"}).out);
    std::filesystem::remove(path);
    CHECK(run({"evaluate", "schur", "--lambda", "1", "--output", "/nonexistent/dir/x.json"}).code == 2);
}
