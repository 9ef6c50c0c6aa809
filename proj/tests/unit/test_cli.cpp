#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "faithrep/cli.hpp"
#include "faithrep/families.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = faithrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("heisenberg endpoints") {
    auto r = run({"minfaith", "heisenberg", "--p", "2", "--f", "1", "--e", "inf", "--n", "2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
    r = run({"minfaith", "heisenberg", "--p", "2", "--f", "2", "--e", "1", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "32\n");
  }

  TEST_CASE("affine") {
    const auto r = run({"minfaith", "affine", "--p", "3", "--f", "1", "--e", "1", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
  }

  TEST_CASE("all modes as json") {
    const auto r = run({"minfaith", "heisenberg", "--p", "2", "--n", "2", "--mode", "all", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["m_faithful"] == 4);
    CHECK(j["family"] == "heisenberg");
    CHECK(j["values"]["oracle"] == 4);
    CHECK(j["values"]["construct"] == 4);
  }

  TEST_CASE("unitriangular") {
    auto r = run({"minfaith", "unitriangular", "--p", "3", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "9\n");
    r = run({"minfaith", "unitriangular", "--p", "2", "--k", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("char2_unsupported") != std::string::npos);
  }

  TEST_CASE("two-step from a table file") {
    const auto path = std::string("faithrep_cli_test_table.json");
    {
      std::ofstream f(path);
      f << faithrep::dihedral(4).to_json().dump();
    }
    auto r = run({"minfaith", "two-step", "--table", path});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    std::remove(path.c_str());
    r = run({"minfaith", "two-step", "--group", "heis:p=2,e=inf,n=2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("commutator_not_cyclic") != std::string::npos);
  }

  TEST_CASE("oracle") {
    auto r = run({"oracle", "minfaith", "--group", "gl2:p=3"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    r = run({"oracle", "table", "--group", "dihedral:n=4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["dims"].size() == 5);
    r = run({"oracle", "table", "--group", "dihedral:n=4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }

  TEST_CASE("irreps listing") {
    auto r = run({"irreps", "list", "--p", "2", "--n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("orbit_rep,level,dim,multiplicity", 0) == 0);
    r = run({"irreps", "list", "--p", "3", "--n", "3", "--k", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }

  TEST_CASE("ring description") {
    const auto r = run({"ring", "--p", "2", "--e", "2", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).is_object());
  }

  TEST_CASE("verify with a custom suite") {
    const auto path = std::string("faithrep_cli_test_suite.json");
    {
      std::ofstream f(path);
      f << R"([{"name": "D4", "group": "dihedral:n=4", "expect": 2}])";
    }
    CHECK(run({"verify", "--suite", path}).code == 0);
    {
      std::ofstream f(path);
      f << R"([{"name": "D4", "group": "dihedral:n=4", "expect": 3}])";
    }
    CHECK(run({"verify", "--suite", path}).code == 1);
    {
      std::ofstream f(path);
      f << "not json";
    }
    CHECK(run({"verify", "--suite", path}).code == 2);
    std::remove(path.c_str());
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"minfaith", "heisenberg", "--p", "4"}).code == 2);
    CHECK(run({"minfaith", "heisenberg"}).code == 2);
    CHECK(run({"minfaith", "heisenberg", "--p", "2", "--format", "xml"}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
    CHECK(run({"oracle", "minfaith", "--group", "heis:p"}).code == 2);
  }
}
