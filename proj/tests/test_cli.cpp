#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <wpbailey/cli.hpp>
#include <wpbailey/errors.hpp>

using namespace wpb;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parameter grammar")
{
    auto [name, v] = cli::parse_param("a=[2/1,0/1]q^1");
    CHECK(name == "a");
    CHECK(v == QMonomial(Coefficient(2), 1));
    auto [n2, v2] = cli::parse_param("rho1=[-3/4,1/2]q^-2");
    CHECK(n2 == "rho1");
    CHECK(v2 == QMonomial(Coefficient(mpq_class(-3, 4), mpq_class(1, 2)), -2));
    for (const char *bad : {"a=2q", "a=[1/0,0/1]q^1", "a=[0/1,0/1]q^1", "=[1/1,0/1]q^1", "a=[1/1,0/1]q^999999",
                            "a=[1/1,0/1]q^", "a=[1/1]q^1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(cli::parse_param(bad), ParameterError);
    }
    CHECK(cli::parse_point("0.3") == CPoint(0.3, 0.0));
    CHECK(cli::parse_point("0.2,-0.1") == CPoint(0.2, -0.1));
    CHECK_THROWS_AS(cli::parse_point("x"), ParameterError);
}

TEST_CASE("verify exit codes")
{
    Run r = run({"verify", "--id", "cor4.1", "--order", "40"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("cor4.1 exact 40 PASS") != std::string::npos);
    CHECK(run({"verify", "--id", "thm3", "--param", "a=[2/1,0/1]q^0", "--param", "b=[3/1,0/1]q^0", "--pair",
               "trivial*"})
              .code == cli::kPass);
    CHECK(run({"verify", "--id", "cor4.1", "--order", "2"}).code == cli::kOperational);
    CHECK(run({"verify", "--id", "nope"}).code == cli::kOperational);
    CHECK(run({"verify"}).code == cli::kOperational);
    CHECK(run({"verify", "--id", "eq25", "--backend", "numeric", "--q", "0.25,0.1"}).code == cli::kPass);
    CHECK(run({"verify", "--id", "eq25", "--backend", "numeric", "--q", "1.5"}).code == cli::kOperational);
}

TEST_CASE("a pole in the parameters is an operational error naming the factor")
{
    Run r = run({"verify", "--id", "cor2", "--param", "a=[1/1,0/1]q^0"});
    CHECK(r.code == cli::kOperational);
    CHECK(r.err.find("vanishes") != std::string::npos);
    CHECK(r.err.find("(1)q^0") != std::string::npos);
}

TEST_CASE("expand prints exponent and coefficient rows")
{
    Run a = run({"expand", "--series", "a_of_q", "--order", "8"});
    CHECK(a.code == cli::kPass);
    CHECK(a.out == "0 1/1 0/1\n1 6/1 0/1\n2 0/1 0/1\n3 6/1 0/1\n4 6/1 0/1\n5 0/1 0/1\n6 0/1 0/1\n7 12/1 0/1\n");
    Run p = run({"expand", "--series", "psi", "--order", "7"});
    CHECK(p.out == "0 1/1 0/1\n1 1/1 0/1\n2 0/1 0/1\n3 1/1 0/1\n4 0/1 0/1\n5 0/1 0/1\n6 1/1 0/1\n");
    Run f = run({"expand", "--series", "f2", "--order", "6", "--param", "a=[2/1,0/1]q^1"});
    CHECK(f.out == "0 0/1 0/1\n1 0/1 0/1\n2 -4/1 0/1\n3 -4/1 0/1\n4 -4/1 0/1\n5 -4/1 0/1\n");
    Run g = run({"expand", "--series", "f1", "--order", "5", "--param", "a=[2/1,0/1]q^1", "--format", "json"});
    json j = json::parse(g.out);
    CHECK(j["coefficients"][2]["re"] == "-2/1");
    CHECK(j["coefficients"][3]["re"] == "2/1");
    CHECK(run({"expand", "--series", "zeta"}).code == cli::kOperational);
    CHECK(run({"expand", "--series", "f2"}).code == cli::kOperational);
}

TEST_CASE("json report shape")
{
    Run r = run({"verify", "--id", "cor6", "--format", "json"});
    REQUIRE(r.code == cli::kPass);
    json j = json::parse(r.out);
    CHECK(j["id"] == "cor6");
    CHECK(j["backend"] == "exact");
    CHECK(j["order"] == 60);
    CHECK(j["outcome"] == "pass");
    CHECK(j["first_mismatch"].is_null());
    CHECK(j["millis"].is_number());
}

TEST_CASE("text and json agree across the whole registry")
{
    Run t = run({"verify", "--id", "all", "--jobs", "4"});
    Run j = run({"verify", "--id", "all", "--format", "json", "--jobs", "4"});
    CHECK(t.code == cli::kPass);
    CHECK(j.code == cli::kPass);
    json arr = json::parse(j.out);
    REQUIRE(arr.is_array());
    std::istringstream lines(t.out);
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line)) {
        REQUIRE(i < arr.size());
        CHECK(line.rfind(arr[i]["id"].get<std::string>() + " ", 0) == 0);
        CHECK((line.find(" PASS") != std::string::npos) == (arr[i]["outcome"] == "pass"));
        ++i;
    }
    CHECK(i == arr.size());
    CHECK(i == 21);
}

TEST_CASE("list and pairs-check")
{
    Run l = run({"list"});
    CHECK(l.code == cli::kPass);
    CHECK(l.out.find("psi2lambert") != std::string::npos);
    CHECK(run({"pairs-check", "--n-max", "6", "--order", "24"}).code == cli::kPass);
    CHECK(run({"pairs-check", "--pair", "trivial", "--chain", "--n-max", "5", "--order", "24"}).code == cli::kPass);
    CHECK(run({"pairs-check", "--pair", "sqrtk", "--param", "k=[9/1,0/1]q^2", "--n-max", "3"}).code ==
          cli::kOperational);
}
