#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "compirr/cli.hpp"
#include "support.hpp"

using compirr::cli::run_command;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("certify with Corollary 2")
{
    Run r = run({"certify", "--field", "Q", "--f", "1 + X*Y + X^2*Y^2 + (X^4+5*X+5)*Y^3", "--rule", "cor2", "--p",
                 "X^4+5*X+5", "--q", "1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rule"] == "Cor2");
    CHECK(j["verdict"] == "Irreducible");
    CHECK(r.err.find("irreducible") != std::string::npos);
}

TEST_CASE("examples reproduce the sharpness construction")
{
    Run r = run({"examples", "--name", "sharpness-1", "--m", "2", "--d", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    auto QQ = support::Q();
    CHECK(support::B(QQ, j["f"].get<std::string>()) == support::B(QQ, "1 + (-X^2-5*X-6)*Y + (X^2+5*X+5)*Y^2"));
    CHECK(j["divisible_by_Y_minus_1"] == true);
    CHECK(j["certificate"]["verdict"] == "NotApplicable");
    CHECK(j["certificate"]["failing"]["lhs"] == "2");
    CHECK(j["certificate"]["failing"]["rhs"] == "2");

    r = run({"examples", "--name", "sharpness-2"});
    j = json::parse(r.out);
    CHECK(j["field"] == "GF(3)");
    CHECK(j["divisible_by_Y2_minus_1"] == true);
    CHECK(std::stol(j["oracle"]["omega_bi"].get<std::string>()) >= 3);

    r = run({"examples", "--name", "eisenstein", "--m", "3", "--d", "4", "--seed", "9"});
    CHECK(json::parse(r.out)["certificate"]["verdict"] == "Irreducible");

    r = run({"examples", "--name", "two-factor", "--seed", "2"});
    j = json::parse(r.out);
    CHECK(j["certificate"]["bound"] == "2");
    CHECK(std::stol(j["oracle"]["omega_bi"].get<std::string>()) <= 2);

    CHECK(run({"examples", "--name", "nope"}).code == 2);
    CHECK(run({"examples", "--name", "eisenstein", "--field", "GF(3)"}).code == 2);
}

TEST_CASE("verify compares bound and exact count")
{
    Run r = run({"verify", "--field", "GF(3)", "--f", "(X^3+1) + X*Y + (X^2+1)^2*Y^2", "--g", "Y^2 + X*Y + 1",
                 "--budget", "1000000", "--seed", "7"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["sound"] == true);
    CHECK(j["bound"] == "2");
    CHECK(std::stol(j["omega_bi"].get<std::string>()) <= 2);
}

TEST_CASE("identical arguments give identical output")
{
    std::vector<std::string> args{"verify", "--field", "GF(2)", "--f", "1 + Y + (X^5+X^2+1)*Y^2", "--g", "X + Y^2",
                                  "--seed", "3"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> ex{"examples", "--name", "two-factor", "--seed", "11"};
    CHECK(run(ex).out == run(ex).out);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"certify"}).code == 2);
    CHECK(run({"certify", "--f", "Y", "--rule", "cor9"}).code == 2);
    CHECK(run({"certify", "--f", "2Y + 1"}).code == 2);
    CHECK(run({"certify", "--field", "GF(6)", "--f", "Y + 1"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    std::vector<std::string> na{"certify", "--field", "Q", "--f", "1 + X^3*Y + X*Y^2", "--rule", "thm1"};
    CHECK(run(na).code == 0);
    na.push_back("--strict");
    CHECK(run(na).code == 3);

    Run b = run({"oracle", "--field", "GF(3)", "--f", "Y^6 + X^4*Y^3 + (X^3 + 2)*Y + X^5 + 1", "--budget", "3"});
    CHECK(b.code == 4);
    CHECK(b.err.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("caller assertions are surfaced")
{
    Run r = run({"certify", "--field", "GF(3)", "--f", "1 + Y + (X^2+1)^2*Y^2", "--g", "Y + X", "--d1", "X^2+1",
                 "--rule", "thm1", "--assert-f-irreducible"});
    json j = json::parse(r.out);
    CHECK(j["rule"] == "Thm1Wider");
    CHECK(j["assumptions"][0]["provenance"] == "CallerAsserted");

    r = run({"certify", "--field", "Q", "--f", "1 + (X^2+1)*Y^2", "--rule", "cor2", "--p", "X^2+1",
             "--assert-p-prime"});
    j = json::parse(r.out);
    CHECK(j["assumptions"].size() == 2);
    CHECK(j["assumptions"][1]["provenance"] == "CallerAsserted");
}

TEST_CASE("every rule is reachable")
{
    auto rule_of = [](std::vector<std::string> args) { return json::parse(run(args).out)["rule"]; };
    std::string const f = "1 + Y + (X^5+X^2+1)*Y^2";
    CHECK(rule_of({"certify", "--field", "GF(2)", "--f", f, "--rule", "cor1"}) == "Cor1");
    CHECK(rule_of({"certify", "--field", "GF(2)", "--f", f, "--g", "X + Y^2", "--rule", "cor3", "--p",
                   "X^5+X^2+1"}) == "Cor3");
    CHECK(rule_of({"certify", "--field", "GF(2)", "--f", f, "--g", "X + Y^2", "--rule", "cor4", "--p",
                   "X^5+X^2+1"}) == "Cor4");
    CHECK(rule_of({"certify", "--field", "GF(2)", "--f", f, "--g", "X + Y^2", "--rule", "auto"}) == "Thm1Strong");
    CHECK(rule_of({"certify", "--field", "GF(2)", "--f", f, "--g", "X + Y^2", "--rule", "cor6", "--p",
                   "X^5+X^2+1"}) == "Cor6");
    CHECK(rule_of({"certify", "--field", "GF(3)", "--f", "1 + X1^5*X2*X3 + X1*X2^4*X3^2", "--g", "X3", "--rule",
                   "cor5", "--j", "2", "--omega-a", "1", "--omega-b", "0"}) == "Cor5Strong");
    CHECK(rule_of({"certify", "--field", "GF(3)", "--f", "1 + X1*X3 + (X1^5 + X2)*X3^2", "--g", "X3^2 + X2*X3",
                   "--rule", "cor6", "--p", "X1^5 + X2", "--assert-p-prime"}) == "Cor6");
    CHECK(run({"certify", "--field", "GF(3)", "--f", "1 + X1*X3 + (X1^5 + X2)*X3^2", "--g", "X3^2 + X2*X3",
               "--rule", "cor6", "--p", "X1^5 + X2"})
              .code == 2);
    Run b = run({"bound", "--field", "GF(3)", "--f", "1 + (X^2+1)^2*Y^2", "--g", "Y + X^5"});
    CHECK(json::parse(b.out)["bound"] == "2");
}

TEST_CASE("factor command")
{
    Run r = run({"factor", "--field", "Q", "--poly", "X^6 - 1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["omega"] == "4");
    CHECK(j["factors"].size() == 4);

    r = run({"factor", "--field", "Q", "--poly=-X^2 + 2"});
    CHECK(json::parse(r.out)["unit"] == "-1");

    auto path = std::filesystem::temp_directory_path() / "compirr_factor_input.txt";
    {
        std::ofstream f(path);
        f << "X^4 + X\n\nX^2 + 1\n";
    }
    r = run({"factor", "--field", "GF(2)", "--from-file", path.string()});
    std::filesystem::remove(path);
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string l1, l2;
    std::getline(lines, l1);
    std::getline(lines, l2);
    CHECK(json::parse(l1)["omega"] == "3");
    CHECK(json::parse(l2)["omega"] == "2");
    CHECK(run({"factor", "--field", "GF(2)", "--from-file", "/nonexistent/file"}).code == 2);
}

TEST_CASE("oracle command")
{
    Run r = run({"oracle", "--field", "GF(3)", "--f", "(Y - 1)*(Y^2 - X)"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["omega_bi"] == "2");
    CHECK(j["yfactors"][0]["factor"] == "Y + 2");
    CHECK(run({"oracle", "--field", "Q", "--f", "Y^2 - 1"}).code == 2);
}
