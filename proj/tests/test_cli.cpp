#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tqasm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("asm-table prints the rows") {
  const auto r = run({"asm-table", "7"});
  CHECK(r.code == 0);
  for (const char* v : {"7436", "26026", "47320", "56784", "135", "2002"}) CHECK(r.out.find(v) != std::string::npos);
}

TEST_CASE("asm-table JSON") {
  const auto r = run({"asm-table", "4", "--json"});
  REQUIRE(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  CHECK(j.dump().find("\"14\"") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"groundstate", "1"}).code == 2);
  CHECK(run({"groundstate", "4"}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"oracle", "15"}).code == 2);
  CHECK(run({"groundstate", "5", "--json", "--table"}).code == 2);
  CHECK_FALSE(run({"groundstate", "1"}).err.empty());
}

TEST_CASE("groundstate table") {
  const auto r = run({"groundstate", "11", "--table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Psi^{1,2,3,4,5} = 1") != std::string::npos);
  CHECK(r.out.find("Psi^{1,3,5,7,9} = 429") != std::string::npos);
  CHECK(r.out.find("Psi^{1,3,4,5,6} = 5") < r.out.find("Psi^{1,2,4,5,6} = 10"));
}

TEST_CASE("verify 11 passes and reports the sums") {
  const auto r = run({"verify", "11"});
  CHECK(r.code == 0);
  for (const char* v : {"429", "1287", "2002", "all checks passed"}) CHECK(r.out.find(v) != std::string::npos);
}

TEST_CASE("JSON output is deterministic and parses") {
  for (std::vector<std::string> args : {std::vector<std::string>{"phi", "3", "--json"},
                                        {"chi", "5", "--json"},
                                        {"esym", "6", "--json"},
                                        {"groundstate", "7", "--json"},
                                        {"sums", "9", "--json"},
                                        {"bethe-roots", "4", "--json"},
                                        {"verify-tq", "3", "--json"},
                                        {"verify", "5", "--json"}}) {
    CAPTURE(args[0]);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = ordered_json::parse(a.out);
    CHECK(j.dump(2) + "\n" == a.out);
  }
}

TEST_CASE("chi JSON carries rational strings") {
  const auto j = ordered_json::parse(run({"chi", "5", "--json"}).out);
  const std::string s = j.dump();
  CHECK(s.find("\"14/3\"") != std::string::npos);
  CHECK(s.find("\"-14/3\"") != std::string::npos);
}

TEST_CASE("precision flag selects the number type") {
  const auto r = run({"bethe-roots", "3", "--precision", "113", "--json"});
  REQUIRE(r.code == 0);
  CHECK(ordered_json::parse(r.out).dump().find("113") != std::string::npos);
  CHECK(run({"bethe-roots", "3", "--precision", "4096"}).code == 2);
}

TEST_CASE("oracle subcommand") {
  CHECK(run({"oracle", "7"}).code == 0);
}
