#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "surdbits/cli.hpp"
#include "surdbits/config.hpp"

using namespace surdbits;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("surdbits_test_" + name);
}
}  // namespace

TEST_CASE("nr subcommand") {
  const Result r = invoke({"nr", "--s", "2", "--r", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"op\":\"Nr\",\"s\":2,\"r\":4,\"result\":7}\n");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"digits", "--s", "4", "--bits", "8"}).code == kExitUsage);
  CHECK(invoke({"nosuchcommand"}).code == kExitUsage);
  CHECK(invoke({"nr", "--s", "2"}).code == kExitUsage);
  CHECK(invoke({"nr", "--s", "2", "--r", "4", "--cap", "6"}).code == kExitSearch);
  CHECK(invoke({"lemma-points", "--s", "2", "--l", "1"}).code == kExitUsage);
  CHECK(invoke({"pair", "--s", "2", "--flip", "2:+1"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);

  // (3 - 2 sqrt 2)^8 is about 2^-20: the floor at scale 0 needs more than 2 guard bits.
  const auto cfg = temp_file("tight.conf");
  std::ofstream(cfg) << "guard_bit_cap = 2\n";
  const Result r = invoke({"--config", cfg.string(), "digits", "--surd", "665857,-470832,2,0", "--bits", "4"});
  CHECK(r.code == kExitPrecision);
}

TEST_CASE("digits and lemma points") {
  const Result d = invoke({"digits", "--s", "2", "--bits", "16"});
  CHECK(d.code == 0);
  const auto j = nlohmann::json::parse(d.out);
  CHECK(j["digits"] == "0110101000001001");
  CHECK(j["exactness"] == "TruncatedIrrational");
  const Result sq = invoke({"digits", "--s", "2", "--bits", "8", "--square"});
  CHECK(nlohmann::json::parse(sq.out)["digits"] == "00101011");
  const Result q = invoke({"digits", "--surd", "1,0,2,2", "--bits", "8"});
  CHECK(nlohmann::json::parse(q.out)["exactness"] == "TerminatingDyadic");

  const Result lp = invoke({"lemma-points", "--s", "2"});
  const auto l = nlohmann::json::parse(lp.out);
  CHECK(l["l"] == 2);
  CHECK(l["omega_s1"]["p"] == "16");
  CHECK(l["omega_s1"]["q"] == "-1");
  CHECK(l["omega_s1"]["t"] == 4);
  const Result tm = invoke({"tailmatch", "--s", "2", "--bits", "64"});
  const auto t = nlohmann::json::parse(tm.out);
  CHECK(t["first_agreement"] == 8);
  CHECK(t["within_bound"] == true);
}

TEST_CASE("mn and xprefix") {
  CHECK(nlohmann::json::parse(invoke({"mn", "--s", "2", "--n", "3"}).out)["result"] == 5);
  CHECK(nlohmann::json::parse(invoke({"mn", "--surd", "4,-2,3,0", "--n", "1"}).out)["result"] == 1);
  const auto x = nlohmann::json::parse(invoke({"xprefix", "--u", "00101", "--n", "3"}).out);
  CHECK(x["determined"] == true);
  CHECK(x["x_prefix"] == "011");
  const auto y = nlohmann::json::parse(invoke({"xprefix", "--u", "0010", "--n", "3"}).out);
  CHECK(y["determined"] == false);
}

TEST_CASE("freq CSV shape") {
  const Result r = invoke({"freq", "--s", "2", "--n", "1050", "--stride", "100"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,ones,f_num,f_den");
  int rows = 0;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 10);
  CHECK(last.rfind("1000,", 0) == 0);
  CHECK(r.err.find("freq:") != std::string::npos);

  const Result j = invoke({"--format", "json", "freq", "--s", "2", "--n", "8"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["points"][0]["ones"] == 4);
  CHECK(parsed["points"][0]["f"]["num"] == "1");
}

TEST_CASE("pair and difference reports") {
  const auto p = nlohmann::json::parse(invoke({"pair", "--s", "2", "--flip", "1", "--bits", "8"}).out);
  CHECK(p["nu1"]["p"] == "9");
  CHECK(p["u1"] == "11010101");
  CHECK(p["delta_u"] == nlohmann::json::parse("[1,1,-1,1,-1,1,-1,0]"));
  CHECK(p["pair"]["flips"] == nlohmann::json::parse("[[1,1]]"));

  const auto t = nlohmann::json::parse(invoke({"totaldiff", "--s", "2", "--flip", "1:+1", "--n", "2"}).out);
  CHECK(t["total"]["num"] == "1");
  CHECK(t["total"]["den"] == "2");
  CHECK(t["entries"].size() == 12);  // 4 * max(n = 2, predicted support = 3)
  CHECK(t["verdict"] == "match");

  const auto c = nlohmann::json::parse(invoke({"chain", "--s", "2", "--flip", "1", "--n", "2", "--j", "1"}).out);
  CHECK(c["claim"]["source"] == "chain_rule_sum");
  CHECK(c["computed"]["den"] == "2");

  const auto d = nlohmann::json::parse(invoke({"decay", "--s", "2", "--flip", "1", "--k", "1"}).out);
  CHECK(d["n_list"].size() == 6);
  CHECK(d["entries"][5][2]["num"] == "0");

  const auto v = nlohmann::json::parse(invoke({"invariance", "--s", "2", "--flip", "1", "--k", "2", "--n", "16"}).out);
  CHECK(v["variants"].size() == 4);
}

TEST_CASE("every subcommand is deterministic and its JSON round-trips") {
  const std::vector<std::vector<std::string>> commands{
      {"digits", "--s", "3", "--bits", "200"},
      {"freq", "--s", "5", "--n", "3000", "--stride", "250"},
      {"--format", "json", "freq", "--s", "5", "--n", "300", "--stride", "25"},
      {"lemma-points", "--s", "7"},
      {"tailmatch", "--s", "7"},
      {"nr", "--s", "3", "--r", "9"},
      {"mn", "--s", "3", "--n", "9"},
      {"xprefix", "--u", "0010111", "--n", "2"},
      {"pair", "--s", "3", "--flip", "2", "--flip", "4"},
      {"totaldiff", "--s", "3", "--flip", "2", "--n", "8"},
      {"chain", "--s", "3", "--flip", "2", "--n", "8", "--j", "2"},
      {"decay", "--s", "3", "--flip", "2", "--k", "2"},
      {"invariance", "--s", "3", "--flip", "2", "--k", "3", "--n", "24"},
  };
  for (const auto& cmd : commands) {
    const Result a = invoke(cmd);
    const Result b = invoke(cmd);
    CAPTURE(cmd[0]);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    if (a.out.front() == '{') {
      CHECK(nlohmann::ordered_json::parse(a.out).dump() + "\n" == a.out);
    }
  }
}

TEST_CASE("config file from the environment and output path") {
  const auto cfg = temp_file("env.conf");
  const auto out = temp_file("out.csv");
  std::filesystem::remove(out);
  std::ofstream(cfg) << "output_path = " << out.string() << "\noutput_format = json\n";
  ::setenv(kConfigEnvVar, cfg.string().c_str(), 1);
  const Result r = invoke({"freq", "--s", "2", "--n", "8"});
  ::unsetenv(kConfigEnvVar);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(nlohmann::json::parse(body.str())["op"] == "freq");
}
