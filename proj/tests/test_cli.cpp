#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latquot/cli.hpp"

using namespace latquot;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("info") {
  const auto r = run({"info", "catalog:n5"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "size=5 distributive=no modular=no |Con|=5\ncovers=5\n");

  const auto j = nlohmann::json::parse(run({"info", "catalog:m3", "--json"}).out);
  CHECK(j["size"] == 5);
  CHECK(j["modular"] == true);
  CHECK(j["distributive"] == false);
  CHECK(j["congruences"] == 2);

  CHECK(nlohmann::json::parse(run({"info", "catalog:fm-3", "--json"}).out)["congruences"].is_null());
}

TEST_CASE("delta") {
  const auto r = run({"delta", "catalog:n5"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out ==
        "class: distributive\n"
        "kappa: {0}{a,b}{c}{1}\n"
        "blocks: 4\n"
        "quotient-size: 4\n"
        "principal: (a,b)\n");

  const auto fm = run({"delta", "catalog:fm-3"});
  CHECK(fm.out.find("blocks: 18\n") != std::string::npos);
  CHECK(fm.out.find("quotient-size: 18\n") != std::string::npos);
  CHECK(fm.out.find(" = (u,v)\n") != std::string::npos);

  const auto m3 = run({"kappa", "catalog:m3"});
  CHECK(m3.out.find("quotient-size: 1\n") != std::string::npos);
  CHECK(m3.out.find("note: the quotient collapses") != std::string::npos);
  CHECK(run({"kappa", "catalog:m3", "--class", "modular"}).out.find("blocks: 5\n") !=
        std::string::npos);

  const auto j = nlohmann::json::parse(run({"delta", "catalog:chain-3", "--json"}).out);
  CHECK(j["kappa"] == "{0}{1}{2}");
  CHECK(j["principal"] == nlohmann::json::array({"0", "0"}));
}

TEST_CASE("identities file") {
  const auto path = temp_file("latquot_trivial.txt", "# everything collapses\nx = y\n");
  const auto r = run({"kappa", "catalog:boolean-2", "--identities", path});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("quotient-size: 1\n") != std::string::npos);

  const auto bad = temp_file("latquot_bad.txt", "x = \n");
  CHECK(run({"kappa", "catalog:n5", "--identities", bad}).code == cli::kInputError);
  CHECK(run({"kappa", "catalog:n5", "--identities", path, "--class", "modular"}).code ==
        cli::kInputError);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("quotient, product and congruences") {
  CHECK(run({"quotient", "catalog:n5", "delta"}).out ==
        "elements: [0] [a] [c] [1]\ncovers: [0]<[a] [0]<[c] [a]<[1] [c]<[1]\n");
  CHECK(run({"quotient", "catalog:n5", "{0,a,b}{c,1}"}).out ==
        "elements: [0] [c]\ncovers: [0]<[c]\n");
  const auto bad = run({"quotient", "catalog:n5", "{0,b}{a}{c}{1}"});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.starts_with("error: "));

  const auto p = run({"product", "catalog:chain-2", "catalog:chain-2"});
  CHECK(p.out.starts_with("elements: (0,0) (0,1) (1,0) (1,1)\n"));

  const auto c = run({"congruences", "catalog:n5"});
  CHECK(c.out.starts_with("count=5\n{0}{a}{b}{c}{1}\n"));
  const auto j = nlohmann::json::parse(run({"congruences", "catalog:chain-4", "--json"}).out);
  CHECK(j["count"] == 8);
}

TEST_CASE("stdin input") {
  const auto r = run({"info", "-"}, "elements: 0 1\ncovers: 0<1\n");
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.starts_with("size=2 distributive=yes"));
}

TEST_CASE("check") {
  const auto t1 = run({"check", "--theorem", "1", "catalog:n5"});
  CHECK(t1.code == cli::kSuccess);
  CHECK(t1.out.ends_with("theorem 1: PASS (1 run)\n"));

  const auto t2 = run({"check", "--theorem", "2", "catalog:n5", "--class", "modular"});
  CHECK(t2.code == cli::kSuccess);
  CHECK(t2.out.ends_with("theorem 2: PASS (5 runs)\n"));

  const auto t3 = run({"check", "--theorem", "3", "catalog:m3", "catalog:n5", "--max-con", "25"});
  CHECK(t3.code == cli::kSuccess);
  CHECK(t3.out.find("checked on 10") != std::string::npos);

  const auto j = nlohmann::json::parse(
      run({"check", "--theorem", "3", "catalog:chain-2", "catalog:m3", "--json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 1);

  CHECK(run({"check", "--theorem", "4", "catalog:n5"}).code == cli::kInputError);
  CHECK(run({"check", "--theorem", "3", "catalog:n5"}).code == cli::kInputError);
}

TEST_CASE("dot and catalog") {
  const auto d = run({"dot", "catalog:n5", "--highlight", "delta"});
  CHECK(d.code == cli::kSuccess);
  CHECK(d.out.find("subgraph cluster_") != std::string::npos);

  const auto list = run({"catalog", "list"});
  CHECK(list.out.find("fm-3\n") != std::string::npos);
  const auto dump = run({"catalog", "dump", "m3", "--json"});
  const auto j = nlohmann::json::parse(dump.out);
  CHECK(j["distinguished"]["p"] == "p");
  CHECK(j["elements"].size() == 5);
  CHECK(run({"catalog", "dump"}).code == cli::kInputError);
  CHECK(run({"catalog", "frobnicate"}).code == cli::kInputError);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"info"}).code == cli::kInputError);
  CHECK(run({"info", "/nonexistent/lattice.txt"}).code == cli::kInputError);
  CHECK(run({"info", "catalog:octagon"}).code == cli::kInputError);
  CHECK(run({"info", "-"}, "elements: 0 a b 1\ncovers: 0<a 0<b\n").code == cli::kInputError);
  CHECK(run({"congruences", "catalog:chain-13"}).code == cli::kSizeLimit);
  CHECK(run({"congruences", "catalog:chain-13", "--max-con", "13"}).code == cli::kSuccess);
  CHECK(run({"--help"}).code == cli::kSuccess);
}
