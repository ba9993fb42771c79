#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divdmt/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using divdmt::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "divdmt_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("dmt-curve reproduces the n = 2, m = 1 curves") {
  const Outcome o = invoke({"dmt-curve", "--n", "2", "--m", "1", "--step", "0.01"});
  REQUIRE(o.code == 0);
  const auto rows = lines(o.out);
  CHECK(rows.front() == "r,d_star,d1,d2,cond_slnc,cond_slnr,cond_slnh");
  CHECK(rows.size() == 102);
  CHECK(rows[1] == "0,2,2,2,1,1,1");
  CHECK(rows[51] == "0.5,1,0.5,1,1,1,1");
  CHECK(rows[101] == "1,0,0,0,1,0,1");  // slnr needs m >= 2 at r = 1
  const auto summary = nlohmann::json::parse(o.err);
  CHECK(summary["command"] == "dmt-curve");
  CHECK(summary["results"]["breakpoints"]["slnr"] == nlohmann::json::parse("[[0,2],[0.5,0.5],[1,0]]"));
  CHECK(summary["results"]["breakpoints"]["slnh"] == nlohmann::json::parse("[[0,2],[1,0]]"));
}

TEST_CASE("chamber-min") {
  const Outcome o = invoke({"chamber-min", "--group", "slnc", "--n", "4", "--m", "4", "--s", "2"});
  REQUIRE(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "group,n,m,s,min_exact,min_grid,closed_form,condition_held,argmin_label");
  CHECK(rows[1].rfind("slnc,4,4,2,4,", 0) == 0);
  CHECK(rows[1].find(",4,1,V2") != std::string::npos);

  const Outcome multi =
      invoke({"chamber-min", "--group", "slnr", "--n", "3", "--m", "2", "--s", "0.5,1", "--no-grid"});
  REQUIRE(multi.code == 0);
  const auto mrows = lines(multi.out);
  REQUIRE(mrows.size() == 3);
  CHECK(mrows[1].find(",,") != std::string::npos);  // empty grid column

  CHECK(invoke({"chamber-min", "--group", "slnc", "--n", "7", "--m", "2", "--s", "1"}).code == 2);
  CHECK(invoke({"chamber-min", "--group", "slnh", "--n", "3", "--m", "2", "--s", "1"}).code == 1);
  CHECK(invoke({"chamber-min", "--group", "slnq", "--n", "3", "--m", "2", "--s", "1"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"dmt-curve", "--n", "2"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"dmt-curve", "--n", "2", "--m", "1", "--bogus", "1"}).code == 2);
  CHECK(invoke({"dmt-curve", "--help"}).code == 0);
  CHECK(invoke({"codebook", "--preset", "LIPSCHITZ_RAMIFIED", "--rho-db", "0"}).code == 1);
  CHECK(invoke({"codebook", "--preset", "NOPE", "--radius", "2"}).code == 2);
  CHECK(invoke({"codebook", "--preset", "LIPSCHITZ_RAMIFIED", "--radius", "100", "--cap", "10"}).code == 1);
  CHECK(invoke({"count", "--preset", "QUATERNION_UNRAMIFIED", "--a-max", "5", "--ideals",
                "--frobenius-cap", "5"})
            .code == 1);
  CHECK(invoke({"simulate", "--rho-db", "10", "--trials", "10"}).code == 2);
}

TEST_CASE("codebook and count") {
  const Outcome cb = invoke({"codebook", "--preset", "LIPSCHITZ_RAMIFIED", "--radius", "1.4142136"});
  REQUIRE(cb.code == 0);
  CHECK(lines(cb.out).size() == 10);

  const Outcome ct = invoke({"count", "--preset", "lipschitz", "--a-max", "2", "--ideals"});
  REQUIRE(ct.code == 0);
  CHECK(ct.out == "A,element_count,ideal_count\n1,8,1\n2,32,4\n");

  const Outcome radius = invoke({"count", "--preset", "lipschitz", "--by", "radius",
                                 "--thresholds", "1.5,2"});
  REQUIRE(radius.code == 0);
  CHECK(radius.out == "M,element_count,ideal_count\n1.5,8,\n2,32,\n");
}

TEST_CASE("pep-check and simulate") {
  const Outcome pep = invoke({"pep-check", "--samples", "2", "--draws", "2000", "--c", "1,5"});
  REQUIRE(pep.code == 0);
  CHECK(lines(pep.out).size() == 5);

  const Outcome sim = invoke({"simulate", "--radius", "1.4142136", "--rho-db", "0,10",
                              "--trials", "200", "--seed", "3"});
  REQUIRE(sim.code == 0);
  const auto rows = lines(sim.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "rho_db,trials,errors,pe_hat,ci_low,ci_high,union_bound_mean,codebook_size");
  CHECK(rows[1].rfind("0,200,", 0) == 0);
  CHECK(sim.err.find("slope") != std::string::npos);
}

TEST_CASE("output files and config round trip") {
  const auto csv = scratch("sim.csv");
  std::filesystem::remove(csv);
  const Outcome first = invoke({"simulate", "--radius", "2", "--rho-db", "5,10", "--trials", "300",
                                "--seed", "11", "--out", csv.string()});
  REQUIRE(first.code == 0);
  CHECK(first.out.empty());
  const std::string data = slurp(csv);
  const auto summary_path = csv.string() + ".json";
  const auto summary = nlohmann::json::parse(slurp(summary_path));
  CHECK(summary["seed"] == 11);
  CHECK(summary["config"]["trials"] == 300);
  CHECK(summary.contains("wall_time_s"));
  CHECK(summary["versions"].contains("eigen"));

  // the summary alone reproduces the run
  const Outcome again = invoke({"simulate", "--config", summary_path});
  REQUIRE(again.code == 0);
  CHECK(again.out == data);

  // flags override the config file
  const Outcome override = invoke({"simulate", "--config", summary_path, "--seed", "12"});
  REQUIRE(override.code == 0);
  CHECK(override.out != data);

  const auto toml = scratch("curve.toml");
  {
    std::ofstream f(toml);
    f << "n = 2\nm = 1\nstep = 0.5\n";
  }
  const Outcome from_toml = invoke({"dmt-curve", "--config", toml.string()});
  REQUIRE(from_toml.code == 0);
  CHECK(lines(from_toml.out).size() == 4);

  const auto bad = scratch("bad.json");
  {
    std::ofstream f(bad);
    f << "{\"n\": 2, \"m\": 1, \"colour\": \"blue\"}";
  }
  CHECK(invoke({"dmt-curve", "--config", bad.string()}).code == 2);
}

TEST_CASE("same seed, same bytes") {
  const std::vector<std::vector<std::string>> commands = {
      {"dmt-curve", "--n", "4", "--m", "3"},
      {"chamber-min", "--group", "slnh", "--n", "6", "--m", "3", "--s", "0.5,1.2"},
      {"codebook", "--preset", "GOLDEN_GAUSSIAN", "--radius", "2.5"},
      {"count", "--preset", "LIPSCHITZ_RAMIFIED", "--a-max", "10", "--ideals"},
      {"pep-check", "--samples", "2", "--draws", "1000", "--seed", "5"},
      {"simulate", "--radius", "2", "--rho-db", "5,10", "--trials", "200", "--seed", "8"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd.front());
    const Outcome a = invoke(cmd);
    const Outcome b = invoke(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}
