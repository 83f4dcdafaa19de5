#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "connsets/cli.hpp"
#include "connsets/graph_io.hpp"

using connsets::cli::run;
namespace exit_code = connsets::cli;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "connsets");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count") {
  auto r = invoke({"count", "--graph6", "Bw"});
  CHECK(r.status == exit_code::ok);
  CHECK(r.out == "7\n");

  r = invoke({"count", "--family", "E8", "--root", "0", "--pair", "0,1"});
  CHECK(r.status == exit_code::ok);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "100");
  CHECK(ls[1].rfind("rooted 0 ", 0) == 0);
  CHECK(ls[2].rfind("pair 0,1 ", 0) == 0);

  r = invoke({"count", "--family", "B:40", "--format", "json"});
  CHECK(r.status == exit_code::ok);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"].get<std::uint64_t>() == 40 + 2 + (std::uint64_t{1} << 39));
  CHECK(r.out.find("e+") == std::string::npos);
}

TEST_CASE("count reads files") {
  auto g6 = temp_file("connsets_cli_test.g6", "# two graphs\nBw\nA_\n");
  auto r = invoke({"count", "--file", g6.string()});
  CHECK(r.status == exit_code::ok);
  CHECK(r.out == "7\n3\n");
  auto el = temp_file("connsets_cli_test.txt", "4 3\n0 1\n1 2\n2 3\n");
  r = invoke({"count", "--file", el.string(), "--format", "csv"});
  CHECK(r.status == exit_code::ok);
  CHECK(lines(r.out).at(1) == "Ch,4,3,10");
}

TEST_CASE("family") {
  auto r = invoke({"family", "L:9", "--count"});
  CHECK(r.status == exit_code::ok);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(connsets::from_graph6(ls[0]).order() == 9);
  CHECK(ls[1] == "60");
  r = invoke({"family", "theta:2,3,4", "--format", "json", "--count"});
  CHECK(nlohmann::json::parse(r.out)["count"] == 24);
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "--n", "5", "--count"});
  CHECK(r.status == exit_code::ok);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls.back() == "# done n=5 graphs=5");
  r = invoke({"enumerate", "--n", "6"});
  ls = lines(r.out);
  REQUIRE(ls.size() == 20);
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(connsets::to_graph6(connsets::from_graph6(ls[i])) == ls[i]);
  CHECK(invoke({"enumerate", "--n", "7", "--workers", "0"}).out == invoke({"enumerate", "--n", "7"}).out);
}

TEST_CASE("transform") {
  auto r = invoke({"transform", "tadpole", "--family", "typeII:3,4", "--cycle", "0,3,4,5", "--anchor", "0"});
  CHECK(r.status == exit_code::ok);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count_before"] == 37);
  CHECK(j["count_after"] == 30);
  CHECK(j["predicted_delta"] == -7);
  CHECK(j["family"] == "L:6");

  r = invoke({"transform", "star", "--family", "D:5", "--root", "0"});
  CHECK(nlohmann::json::parse(r.out)["count_after"] == 21);
  r = invoke({"transform", "q", "--family", "typeII:3,5", "--cycle", "0,1,2", "--anchor", "0"});
  CHECK(nlohmann::json::parse(r.out)["observed_delta"] == 15);
  r = invoke({"transform", "branch", "--left", "A_", "--l", "0", "--mid", "Bg", "--u", "0", "--v", "2", "--right",
              "A_", "--r", "0"});
  CHECK(r.status == exit_code::ok);
  j = nlohmann::json::parse(r.out);
  CHECK(j["predicted_delta_u"] == j["observed_delta_u"]);
  CHECK(j["predicted_delta_u"] == 2);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "min", "--n", "5"});
  CHECK(r.status == exit_code::ok);
  CHECK(r.out.find("minimum n=5: pass") == 0);
  CHECK(r.out.find("A:5, L:5") != std::string::npos);
  CHECK(r.out.find("observed 22") != std::string::npos);

  r = invoke({"verify", "max", "--n", "5..7", "--format", "csv"});
  CHECK(r.status == exit_code::ok);
  CHECK(r.out.find("informational") != std::string::npos);

  r = invoke({"verify", "lemma", "--trials", "20", "--seed", "3", "--format", "json"});
  CHECK(r.status == exit_code::ok);
  CHECK(nlohmann::json::parse(r.out)[0]["status"] == "pass");
}

TEST_CASE("output file") {
  auto p = std::filesystem::temp_directory_path() / "connsets_cli_out.json";
  auto r = invoke({"verify", "tree", "--n", "6", "--format", "json", "--out", p.string()});
  CHECK(r.status == exit_code::ok);
  CHECK(r.out.empty());
  std::ifstream in(p);
  CHECK(nlohmann::json::parse(in)[0]["claim"] == "tree-bound");
  CHECK(invoke({"count", "--graph6", "Bw", "--out", "/nonexistent/dir/x"}).status == exit_code::io);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"verify", "lemma", "--trials", "25", "--seed", "8", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("errors map to distinct exit codes") {
  CHECK(invoke({}).status == exit_code::usage);
  CHECK(invoke({"count", "--graph6", "Bw", "--bogus"}).status == exit_code::usage);
  CHECK(invoke({"count", "--graph6", "Bw", "--family", "L:5"}).status == exit_code::usage);
  CHECK(invoke({"count"}).status == exit_code::usage);
  CHECK(invoke({"verify", "everything"}).status == exit_code::usage);
  CHECK(invoke({"count", "--graph6", "B"}).status == exit_code::parse);
  CHECK(invoke({"family", "L:x"}).status == exit_code::parse);
  auto r = invoke({"family", "L:3"});
  CHECK(r.status == exit_code::parameter);
  CHECK(r.err.find("n >= 5") != std::string::npos);
  CHECK(invoke({"count", "--family", "P:30"}).status == exit_code::ok);
  CHECK(invoke({"count", "--family", "B:30"}).status == exit_code::ok);
  CHECK(invoke({"count", "--family", "E8", "--root", "0", "--cap", "5"}).status == exit_code::resource);
  CHECK(invoke({"enumerate", "--n", "13"}).status == exit_code::resource);
  CHECK(invoke({"enumerate", "--n", "3"}).status == exit_code::contract);
  CHECK(invoke({"count", "--file", "/nonexistent/file.g6"}).status == exit_code::io);
  CHECK(invoke({"transform", "star", "--family", "L:7", "--root", "0"}).status == exit_code::contract);
  CHECK(invoke({"--help"}).status == exit_code::ok);
}

}  // TEST_SUITE
