#include <doctest.h>

#include <json.hpp>

#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "ghsurf/cli.hpp"
#include "ghsurf/moves.hpp"

using nlohmann::json;
using ghsurf::cli::run;
using ghsurf::cli::run_batch;

TEST_CASE("dispatch and JSON schema") {
  SUBCASE("equiv emits the move path") {
    const auto resp = run(json{{"command", "equiv"},
                               {"n", 7},
                               {"s1", json::array({1, 3, 1})},
                               {"s2", json::array({1, 3, 7})}});
    CHECK(resp.exit_code == 0);
    CHECK(resp.payload["result"]["status"] == "equivalent");
    REQUIRE(resp.payload["result"]["path"].size() == 1);
    CHECK(resp.payload["result"]["path"][0]["kind"] == "c6");
    CHECK(resp.payload["result"]["path"][0]["r_target"] == 7);
    CHECK(resp.payload.contains("citations"));
    CHECK(resp.payload["input"]["s1"] == json::array({7, 1, 3, 1}));
  }
  SUBCASE("obstruction table output") {
    const auto resp = run(json{{"command", "obstruction"}, {"n", 7}, {"a", 3}, {"b", 1}, {"r", 11}});
    CHECK(resp.table == "obstructed");
    const auto resp2 = run(json{{"command", "obstruction"}, {"n", 7}, {"a", 1}, {"b", 3}, {"r", 1}});
    CHECK(resp2.table == "unobstructed (u=1, a=3)");
  }
  SUBCASE("conic verdict") {
    const auto resp = run(json{{"command", "conic"}, {"g", 1}});
    CHECK(resp.table == "minimal as topological G-manifold");
    CHECK(resp.payload["result"]["singular_fibers"] == 4);
  }
  SUBCASE("index with a point list computes the full virtual dimension") {
    const auto resp = run(json{{"command", "index"},
                               {"n", 7},
                               {"c1_square", -1},
                               {"c1_dot_k", -1},
                               {"points", json::array({json::array({1, 3, 3}), json::array({-1, 4, 4})})}});
    CHECK(resp.exit_code == 0);
    CHECK(resp.payload["result"]["value"] == 0);
  }
  SUBCASE("rationals are integers or p/q strings, never floats") {
    const auto resp = run(json{{"command", "index"}, {"n", 7}, {"p", 1}, {"q", 3}, {"w", 1}});
    CHECK(resp.payload["result"]["value"] == "-4/7");
    const auto resp2 = run(json{{"command", "index"}, {"n", 7}, {"p", 1}, {"q", 3}, {"w", 3}});
    CHECK(resp2.payload["result"]["value"] == 0);
    CHECK(resp2.payload["result"]["value"].is_number_integer());
  }
  SUBCASE("sum-oracle tags its decimal") {
    const auto resp = run(json{{"command", "sum-oracle"}, {"n", 7}, {"k", 0}});
    CHECK(resp.payload["result"]["exact"] == 3);
    CHECK(resp.payload["result"]["tag"] == "approximate");
    const std::string dec = resp.payload["result"]["approximate"];
    CHECK(dec.substr(0, 4) == "3.00");
  }
  SUBCASE("dimension accepts either route") {
    const auto r1 = run(json{{"command", "dimension"}, {"n", 7}, {"k_dot_c0", -1}, {"m", json::array({1, 3, 1, 3})}});
    const auto r2 = run(json{{"command", "dimension"}, {"n", 7}, {"c0_square", -1}, {"m", json::array({1, 3, 1, 3})}});
    CHECK(r1.payload["result"]["value"] == 0);
    CHECK(r1.payload["result"] == r2.payload["result"]);
  }
  SUBCASE("cases with filter") {
    const auto resp = run(json{{"command", "cases"}, {"n", 4}, {"variant", "minus-one"}, {"a", 1}});
    CHECK(resp.payload["result"]["filter"]["survivor_c0_square"] == -1);
  }
}

TEST_CASE("exit codes and validation messages") {
  SUBCASE("unknown command") {
    const auto resp = run(json{{"command", "frobnicate"}});
    CHECK(resp.exit_code == 1);
    CHECK(resp.payload["code"] == 1);
  }
  SUBCASE("precondition violations name the constraint") {
    const auto resp = run(json{{"command", "surface"}, {"n", 4}, {"a", 2}, {"b", 2}, {"r", 1}});
    CHECK(resp.exit_code == 1);
    CHECK(std::string(resp.payload["error"]).find("gcd(a,b,n) must be 1") != std::string::npos);
  }
  SUBCASE("orbit order cap") {
    const auto resp = run(json{{"command", "orbit"}, {"n", 100}, {"a", 1}, {"b", 1}, {"r", 0}});
    CHECK(resp.exit_code == 1);
    const auto ok = run(json{{"command", "orbit"}, {"n", 100}, {"a", 1}, {"b", 1}, {"r", 0}, {"cap", 128}});
    CHECK(ok.exit_code == 0);
  }
}

TEST_CASE("determinism: identical requests render identical bytes") {
  const json req{{"command", "orbit"}, {"n", 6}, {"a", 1}, {"b", 5}, {"r", 2}};
  const auto a = run(req);
  const auto b = run(req);
  CHECK(a.payload.dump() == b.payload.dump());
  CHECK(ghsurf::cli::render(a, true) == ghsurf::cli::render(b, true));
}

TEST_CASE("batch mode") {
  SUBCASE("order preserving, one line per request") {
    std::istringstream in(
        R"({"command":"equiv","n":7,"s1":[1,3,1],"s2":[1,3,7]})"
        "\n"
        R"({"command":"equiv","n":7,"s1":[7,1,3,7],"s2":[1,3,7]})"
        "\n"
        R"({"command":"conic","g":2})"
        "\n");
    std::ostringstream out;
    CHECK(run_batch(in, out) == 0);
    std::istringstream lines(out.str());
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(json::parse(line)["result"]["status"] == "equivalent");
    REQUIRE(std::getline(lines, line));
    CHECK(json::parse(line).contains("error"));  // malformed triple
    REQUIRE(std::getline(lines, line));
    CHECK(json::parse(line)["result"]["minimal"] == true);
    CHECK_FALSE(std::getline(lines, line));
  }
  SUBCASE("census of all (a,b,r mod 2n) at n=4: one normal-form line per request") {
    std::ostringstream requests;
    std::vector<json> expected;
    for (long long a = 0; a < 4; ++a)
      for (long long b = 0; b < 4; ++b) {
        if (std::gcd(std::gcd(a, b), 4LL) != 1) continue;
        for (long long r = 0; r < 8; ++r) {
          requests << json{{"command", "normal-form"}, {"n", 4}, {"a", a}, {"b", b}, {"r", r}}.dump()
                   << "\n";
          const auto nf = ghsurf::normal_form(ghsurf::make_surface(4, a, b, r));
          expected.push_back(json{{"a", nf.a}, {"b", nf.b}, {"exact", nf.exact}, {"r", nf.r}});
        }
      }
    std::istringstream in(requests.str());
    std::ostringstream out;
    run_batch(in, out);
    std::istringstream lines(out.str());
    std::string line;
    std::size_t i = 0;
    std::set<std::string> classes;
    while (std::getline(lines, line)) {
      REQUIRE(i < expected.size());
      json state = json::parse(line)["result"]["state"];
      state.erase("surface");
      CHECK(state == expected[i]);
      classes.insert(state.dump());
      ++i;
    }
    CHECK(i == expected.size());
    CHECK(classes.size() > 1);
    // the two order-4 surfaces with equal fixed-point data land in distinct classes
    const auto nf1 = ghsurf::normal_form(ghsurf::make_surface(4, 1, 3, 1));
    const auto nf5 = ghsurf::normal_form(ghsurf::make_surface(4, 1, 3, 5));
    CHECK_FALSE(nf1 == nf5);
  }

  SUBCASE("a violating line yields an error record and the stream continues") {
    std::istringstream in(
        R"({"command":"surface","n":4,"a":2,"b":2,"r":0})"
        "\nnot json at all\n"
        R"({"command":"conic","g":1})"
        "\n");
    std::ostringstream out;
    run_batch(in, out);
    std::istringstream lines(out.str());
    std::string l1, l2, l3;
    REQUIRE(std::getline(lines, l1));
    REQUIRE(std::getline(lines, l2));
    REQUIRE(std::getline(lines, l3));
    CHECK(json::parse(l1)["code"] == 1);
    CHECK(json::parse(l2)["error"] == "malformed request line");
    CHECK(json::parse(l3)["result"]["minimal"] == true);
  }
}
