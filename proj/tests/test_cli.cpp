#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamcert/cli.hpp"
#include "hamcert/graph.hpp"
#include "hamcert/graph6.hpp"

using namespace hamcert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "hamcert");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("extremal subcommand") {
  const auto r = run({"extremal", "--n", "6", "--kind", "v"});
  CHECK(r.code == kExitSuccess);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() > 2);
  CHECK(graph6_decode(lines[0]) == make_named(NamedKind::clique_plus_isolated, 6));
  CHECK(r.out.find("thm1_path: exceptional") != std::string::npos);
  CHECK(r.out.find("thm2_path: exceptional") != std::string::npos);
  CHECK(r.out.find("oracle_path: false") != std::string::npos);
  CHECK(r.out.find("consistent: true") != std::string::npos);

  const auto e = run({"extremal", "--n", "7", "--kind", "e", "--json"});
  CHECK(e.code == kExitSuccess);
  const auto elines = lines_of(e.out);
  REQUIRE(elines.size() == 2);
  CHECK(graph6_decode(elines[0]) == make_named(NamedKind::clique_plus_pendant, 7));
  const auto j = nlohmann::json::parse(elines[1]);
  CHECK(j["thm1_cycle"] == "exceptional");
  CHECK(j["thm2_cycle"] == "exceptional");
  CHECK(j["extremal"] == "K_{n-1}+e");

  CHECK(run({"extremal", "--n", "6", "--kind", "x"}).code == kExitUsage);
  CHECK(run({"extremal"}).code == kExitUsage);
}

TEST_CASE("check subcommand") {
  const std::string k6 = graph6_encode(make_named(NamedKind::complete, 6));
  const auto r = run({"check", k6.c_str()});
  CHECK(r.code == kExitSuccess);
  CHECK(r.out.find("thm1_cycle: guaranteed") != std::string::npos);
  CHECK(r.out.find("n: 6") != std::string::npos);

  const auto j = run({"check", k6.c_str(), "--json"});
  CHECK(j.code == kExitSuccess);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["n"] == 6);
  CHECK(doc["m"] == 15);
  CHECK(doc["thm2_cycle"] == "guaranteed");

  const auto capped = run({"check", k6.c_str(), "--json", "--oracle-cap", "4"});
  CHECK(nlohmann::json::parse(capped.out)["oracle_path"].is_null());

  CHECK(run({"check", "D?"}).code == kExitUsage);
  CHECK(run({"check", "A_", "--tolerance", "0"}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--n", "4", "--jobs", "2"});
  CHECK(r.code == kExitSuccess);
  const auto lines = lines_of(r.out);
  REQUIRE_FALSE(lines.empty());
  const auto summary = nlohmann::json::parse(lines.back());
  CHECK(summary["type"] == "summary");
  CHECK(summary["graphs_checked"] == 64);

  const auto subset = run({"verify", "--n", "4", "--properties", "stanley,hofmeister"});
  CHECK(subset.code == kExitSuccess);

  CHECK(run({"verify", "--n", "9"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "0"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "4", "--jobs", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "4", "--properties", "nonsense"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "4", "--file", "x.g6"}).code == kExitUsage);
  CHECK(run({"verify", "--file", "/nonexistent/corpus.g6"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitSuccess);
  CHECK(r.out.find("verify") != std::string::npos);
}
