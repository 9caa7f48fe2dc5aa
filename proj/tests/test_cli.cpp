#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "overcubic/cli.hpp"

using overcubic::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeffs") {
  auto r = cli({"coeffs", "--expr", "f4^(c-1)/(f1^2*f2^(2*c-3))", "--set", "c=2", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3\t12\n") != std::string::npos);
  r = cli({"coeffs", "--expr", "f2/f1^2", "--n", "4", "--format", "csv"});
  CHECK(r.out == "n,coefficient\n0,1\n1,2\n2,4\n3,8\n");
  r = cli({"coeffs", "--expr", "f1", "--n", "8", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"] == nlohmann::json::parse("[1,-1,-1,0,0,1,0,1]"));
  r = cli({"coeffs", "--expr", "f2/f1^2", "--n", "6", "--mod", "4", "--format", "csv"});
  CHECK(r.out == "n,coefficient\n0,1\n1,2\n2,0\n3,0\n4,2\n5,0\n");
}

TEST_CASE("coeffs input errors exit 2") {
  CHECK(cli({"coeffs", "--expr", "f1*"}).code == 2);
  CHECK(cli({"coeffs", "--expr", "f(k)"}).code == 2);
  CHECK(cli({"coeffs", "--expr", "f1", "--set", "k"}).code == 2);
  CHECK(cli({"coeffs"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("verify") {
  auto r = cli({"verify", "--claim", "Thm3.1", "--nmax", "500"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 27);
  const auto& first = j[0];
  CHECK(first["claim"] == "Thm3.1");
  CHECK(first["params"]["lambda"] == 1);
  CHECK(first["modulus"] == 4);
  CHECK(first["checked_terms"] == 501);
  CHECK(first["status"] == "pass");
  CHECK(first["first_failure"].is_null());

  CHECK(cli({"verify", "--claim", "Cor3.8", "--nmax", "2000"}).code == 0);
  r = cli({"verify", "--claim", "Thm3.3", "--p", "7", "--alpha", "0", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Thm3.3,alpha=0;m=0;p=7,8,50,pass,") != std::string::npos);

  CHECK(cli({"verify", "--claim", "Nope"}).code == 2);
  CHECK(cli({"verify", "--claim", "Thm3.2.ii", "--nmax", "100"}).code == 2);
  CHECK(cli({"verify", "--list"}).out.find("Cor3.6") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across runs") {
  const std::vector<std::string> args{"verify", "--claim", "Cor3.6", "--claim", "Id3.3h"};
  CHECK(cli(args).out == cli(args).out);
  auto timed = cli({"verify", "--claim", "Cor3.6", "--timing"});
  const auto j = nlohmann::json::parse(timed.out);
  CHECK(j.contains("meta"));
  CHECK(j["reports"] == nlohmann::json::parse(cli({"verify", "--claim", "Cor3.6"}).out));
}

TEST_CASE("claims file and failing claims") {
  const std::string path = "cli_test_claims.txt";
  {
    std::ofstream f(path);
    f << "# user claims\n";
    f << "id=Good family=2*m+2 A=8 B=5 mod=8 domain=m=0..1\n";
    f << "id=Bad family=2 A=8 B=1 mod=8\n";
  }
  auto r = cli({"verify", "--claims-file", path, "--claim", "Good"});
  CHECK(r.code == 0);
  r = cli({"verify", "--claims-file", path, "--format", "text"});
  CHECK(r.code == 1);
  CHECK(r.out.find("Bad mod 8: fail") != std::string::npos);
  std::remove(path.c_str());
  CHECK(cli({"verify", "--claims-file", "does-not-exist.txt"}).code == 2);
}

TEST_CASE("lemma") {
  CHECK(cli({"lemma", "--id", "2.3", "--n", "500"}).code == 0);
  CHECK(cli({"lemma", "--id", "2.5", "--n", "500"}).code == 0);
  CHECK(cli({"lemma", "--id", "2.1", "--p", "7", "--n", "300"}).code == 0);
  CHECK(cli({"lemma", "--id", "2.2", "--p", "4"}).code == 2);
  CHECK(cli({"lemma", "--id", "2.2"}).code == 2);
  CHECK(cli({"lemma", "--id", "9.9"}).code == 2);
}

TEST_CASE("scan, oracle, sanity") {
  auto r = cli({"scan", "--c", "2", "--amax", "8", "--mod", "8", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2,8,5,8,125,empirical") != std::string::npos);
  CHECK(r.out.find("2,8,7,8,125,empirical") != std::string::npos);
  r = cli({"scan", "--c", "1", "--amax", "2", "--mod", "1000000", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).empty());
  CHECK(cli({"scan", "--c", "2", "--amax", "8", "--n", "10"}).code == 2);

  r = cli({"oracle", "--c", "2", "--nmax", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3\t12\t12\tyes") != std::string::npos);
  CHECK(cli({"oracle", "--c", "4", "--nmax", "15"}).code == 0);
  CHECK(cli({"oracle", "--c", "2", "--nmax", "30"}).code == 2);
  r = cli({"oracle", "--c", "2", "--nmax", "3", "--list"});
  CHECK(r.out.find("n=3 (12)") != std::string::npos);

  r = cli({"sanity", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("--out writes a file") {
  const std::string path = "cli_test_out.json";
  CHECK(cli({"sanity", "--n", "200", "--out", path}).code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j[0]["claim"] == "Classical");
  std::remove(path.c_str());
}
