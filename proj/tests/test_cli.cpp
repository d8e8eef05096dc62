#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = modrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct") {
  const auto r = run({"construct", "--n", "24", "--m", "6"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["d"] == 4);
  CHECK(j["case"] == "A");
  CHECK(j["a"] == 1);
  CHECK(j["b"] == 1);
  CHECK(j["p"] == 2);
  CHECK(j["shift"] == 0);
  CHECK(j["accept_residue"] == 3);
  CHECK(j["reject_residue"] == 0);
  CHECK(j["verified"] == true);

  const auto b = run({"construct", "--n", "20", "--m", "6"}).json();
  CHECK(b["case"] == "B");
  CHECK(b["c"] == 5);
  CHECK(b["p"].is_null());
}

TEST_CASE("construct sweep as csv") {
  const auto r = run({"construct", "--n", "4:16", "--m", "6", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header.rfind("n,m,case,", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("search") {
  const auto r = run({"search", "--n", "8", "--m", "2", "--dmax", "1"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["outcome"] == "none_below");
  CHECK(j["d_max"] == 1);
  CHECK(j["bound"] == "2/1");
  CHECK(j["falsifies_bound"] == false);
  CHECK_FALSE(j.contains("elapsed_ms"));

  const auto d = run({"search", "--n", "12", "--m", "3"}).json();
  CHECK(d["d_max"] == 1);
  CHECK(d["bound"] == "3/2");

  const auto t = run({"search", "--n", "8", "--m", "2", "--timing"}).json();
  CHECK(t.contains("elapsed_ms"));

  const auto f = run({"search", "--n", "4", "--m", "6", "--dmax", "1"});
  CHECK(f.code == 0);
  CHECK(f.json()["bound"].is_null());

  CHECK(run({"search", "--n", "12", "--m", "6"}).code == 2);
}

TEST_CASE("search budget") {
  const auto r = run({"search", "--n", "24", "--m", "2", "--dmax", "3"});
  CHECK(r.code == 2);
  CHECK(r.json().contains("log10_candidates"));
  CHECK(run({"search", "--n", "12", "--m", "3", "--budget", "100"}).code == 2);

  ::setenv("MODREP_BUDGET", "100", 1);
  CHECK(run({"search", "--n", "12", "--m", "3"}).code == 2);
  CHECK(run({"search", "--n", "12", "--m", "3", "--budget", "1e8"}).code == 0);
  ::unsetenv("MODREP_BUDGET");
}

TEST_CASE("grover") {
  const auto r = run({"grover", "--n", "8", "--fraction", "3/4"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["marked_probability"] == "0/1");
  CHECK(j["decision"] == "3/4");
  CHECK(j["seed"] == 1);
  CHECK(j["quantum_queries"] == 1);
  CHECK(j["classical_checks"] == 1);
  const auto q = run({"grover", "--n", "1024", "--fraction", "1/4", "--seed", "5"}).json();
  CHECK(q["marked_probability"] == "1/1");
  CHECK(q["decision"] == "1/4");
  CHECK(run({"grover", "--n", "8", "--fraction", "1/2"}).code == 2);
  CHECK(run({"grover", "--n", "6", "--fraction", "1/4"}).code == 2);
}

TEST_CASE("identical inputs give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"grover", "--n", "64", "--fraction", "1/4", "--seed", "17"},
           {"search", "--n", "12", "--m", "3", "--jobs", "1"},
           {"construct", "--n", "4:400", "--m", "30", "--format", "csv"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"search", "--n", "12", "--m", "3", "--jobs", "1"}).out ==
        run({"search", "--n", "12", "--m", "3", "--jobs", "4"}).out);
}

TEST_CASE("binom and identities") {
  const auto b = run({"binom", "--n", "15", "--k", "5", "--m", "5"});
  CHECK(b.code == 0);
  CHECK(b.json()["residue"] == 3);
  CHECK(run({"binom", "--n", "48", "--k", "3", "--m", "6"}).json()["method"] == "lucas+crt");
  CHECK(run({"binom", "--n", "1", "--k", "1", "--m", "1"}).code == 2);

  const auto i = run({"identities", "--p", "3", "--r", "1"});
  CHECK(i.code == 0);
  CHECK(i.json()["contradiction_closes"] == false);
  CHECK(run({"identities", "--p", "5", "--n", "8"}).code == 0);
  CHECK(run({"identities", "--p", "4"}).code == 2);
}

TEST_CASE("fool") {
  const auto path = temp_file("modrep_cli_machine.txt", "m=2 n=8\naccept: 1=1\n");
  const auto r = run({"fool", "--machine", path});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["oracle"] == "00000011");
  CHECK(j["weight"] == 2);
  CHECK(j["machine_says"] == false);
  CHECK(j["truth"] == true);

  std::string body = "m=2 n=4\n";
  for (int i = 1; i <= 4; ++i) {
    body += "accept: " + std::to_string(i) + "=1\n";
    for (int k = i + 1; k <= 4; ++k) body += "accept: " + std::to_string(i) + "=1," + std::to_string(k) + "=1\n";
  }
  CHECK(run({"fool", "--machine", temp_file("modrep_cli_exact.txt", body)}).code == 1);
  CHECK(run({"fool", "--machine", temp_file("modrep_cli_bad.txt", "m=2 n=4\naccept: 9=1\n")}).code == 2);
  CHECK(run({"fool", "--machine", "/nonexistent/machine.txt"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"construct", "--m", "6"}).code == 2);
  CHECK(run({"construct", "--n", "24", "--m", "7"}).code == 2);
  CHECK(run({"construct", "--n", "22", "--m", "6"}).code == 2);
  CHECK(run({"construct", "--n", "24", "--m", "6", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("plain format") {
  const auto r = run({"construct", "--n", "24", "--m", "6", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d: 4\n") != std::string::npos);
}

TEST_CASE("selftest") {
  const auto r = run({"selftest", "--jobs", "2"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j["passed"] == true);
  std::set<std::string> modules;
  for (const auto& c : j["checks"]) modules.insert(c["module"].get<std::string>());
  CHECK(modules == std::set<std::string>{"numtheory", "boolpoly", "transforms", "construct", "search", "qsim",
                                         "separation"});
}

}  // TEST_SUITE
