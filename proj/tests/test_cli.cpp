#include "cellres/cli.hpp"
#include "cellres/io.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace cellres;

namespace {

const std::string kExample = R"({"n": 3, "generators": [[2,0,0],[1,1,0],[1,0,1],[0,2,0],[0,1,1],[0,0,2]]})";
const std::string kStaircase = R"({"n": 2, "generators": [[2,0],[1,1],[0,2]]})";

CliOutcome run(const std::vector<std::string>& args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  return run_cli(args, in);
}

Json result_of(const CliOutcome& o) {
  const Json j = Json::parse(o.output);
  REQUIRE(j.contains("schema"));
  CHECK(j["schema"] == "cellres/1");
  return j.contains("result") ? j["result"] : j["error"];
}

std::string fixture(const std::string& name) { return std::string(CELLRES_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("residue of the example ideal") {
    const auto o = run({"residue", "--complex", "hull"}, kExample);
    CHECK(o.exit_code == kExitOk);
    const Json r = result_of(o);
    REQUIRE(r.size() == 4);
    std::set<std::vector<int>> alphas;
    for (const auto& e : r) {
      CHECK(e["sign"] == 1);
      alphas.insert(e["alpha"].get<std::vector<int>>());
    }
    CHECK(alphas.contains({1, 1, 1}));
    CHECK(alphas.contains({1, 1, 2}));
  }

  TEST_CASE("verdict commands and exit codes") {
    CHECK(result_of(run({"multiplicity"}, kExample))["multiplicity"] == 4);
    const auto exact = run({"check-exact", "--complex", "taylor"}, kExample);
    CHECK(exact.exit_code == kExitOk);
    CHECK(result_of(exact)["ok"] == true);
    const auto minimal = run({"check-minimal"}, kExample);
    CHECK(minimal.exit_code == kExitFalseVerdict);
    CHECK(result_of(minimal)["ok"] == false);
    CHECK(result_of(minimal).contains("witness"));
    CHECK(run({"check-minimal", "--complex", "file:" + fixture("maxsquare_minimal.json")}, "").exit_code == kExitOk);
    CHECK(run({"duality-check"}, kExample).exit_code == kExitOk);
    const auto kills = run({"annihilator", "--beta", "1,1,0"}, kExample);
    CHECK(kills.exit_code == kExitOk);
    CHECK(result_of(kills)["annihilates"] == true);
    const auto spares = run({"annihilator", "--beta", "1,0,0"}, kExample);
    CHECK(spares.exit_code == kExitFalseVerdict);
    CHECK(result_of(spares)["in_ideal"] == false);
    const auto compare = run({"compare"}, kExample);
    CHECK(compare.exit_code == kExitOk);
    CHECK(result_of(compare)["routes_agree"] == true);
    CHECK(result_of(compare)["maps"].size() == 4);
  }

  TEST_CASE("generators, hull and scarf") {
    const Json g = result_of(run({"generators"}, R"({"n": 2, "generators": [[2,0],[2,1],[0,3]]})"));
    CHECK(g["generators"].size() == 2);
    CHECK(g["artinian"] == true);
    CHECK(g["generic"] == true);
    const Json h = result_of(run({"hull"}, kExample));
    CHECK(h["t"] == 25);
    CHECK(h["stable_at_t_plus_1"] == true);
    CHECK(h["complex"]["f_vector"] == Json::array({6, 9, 4}));
    const Json e = result_of(run({"hull", "--embed", "--t", "26"}, kExample));
    CHECK(e["t"] == 26);
    CHECK(e["embedded"] == true);
    const Json s = result_of(run({"scarf"}, kExample));
    CHECK(s["complex"]["f_vector"] == Json::array({6, 6}));  // only boundary edges have unique lcms
    const Json resolve = result_of(run({"resolve"}, kStaircase));
    CHECK(resolve["levels"].size() == 3);
    CHECK(resolve["differentials"].size() == 2);
  }

  TEST_CASE("fundamental cycle") {
    const auto o = run({"fundamental-cycle"}, kExample);
    CHECK(o.exit_code == kExitOk);
    const Json r = result_of(o);
    CHECK(r["lhs"] == 24);
    CHECK(r["n_factorial_times_m"] == 24);
    CHECK(r["per_permutation"]["c_n"] == 1);
    CHECK(r["per_permutation"]["asserted"] == false);
    CHECK(r["per_permutation"]["results"].size() == 6);
    const Json two = result_of(run({"fundamental-cycle", "--perm", "2,1"}, kStaircase));
    REQUIRE(two["per_permutation"]["results"].size() == 1);
    CHECK(two["per_permutation"]["results"][0]["s"] == Json::array({2, 1}));
    CHECK(two["per_permutation"]["results"][0]["lhs"] == -3);
    CHECK(two["per_permutation"]["asserted"] == true);
    CHECK(run({"fundamental-cycle", "--perm", "1,3"}, kStaircase).exit_code == kExitInputError);
  }

  TEST_CASE("partition") {
    const Json p = result_of(run({"partition", "--order", "Q"}, kStaircase));
    CHECK(p["ok"] == true);
    CHECK(p["total_area"] == 3);
    CHECK(p["rectangles"].size() == 2);
    CHECK(run({"partition", "--order", "R"}, kStaircase).exit_code == kExitInputError);
    CHECK(run({"partition"}, kExample).exit_code == kExitInputError);
  }

  TEST_CASE("job objects") {
    const std::string job = R"({"ideal": )" + kExample + R"(, "complex": "scarf", "jobs": 2})";
    // The Scarf complex of this non-generic ideal is not a resolution.
    const auto o = run({"check-exact"}, job);
    CHECK(o.exit_code == kExitFalseVerdict);
    CHECK(result_of(o)["witness"] == Json::array({1, 1, 1}));
    CHECK(run({"check-exact", "--complex", "hull"}, job).exit_code == kExitOk);
    const std::string beta_job = R"({"ideal": )" + kExample + R"(, "beta": [0, 0, 2]})";
    CHECK(result_of(run({"annihilator"}, beta_job))["annihilates"] == true);
    const auto unknown = run({"multiplicity"}, R"({"ideal": )" + kExample + R"(, "colour": 1})");
    CHECK(unknown.exit_code == kExitInputError);
    CHECK(result_of(unknown)["kind"] == "precondition");
    // Flags override job fields.
    const std::string taylor_job = R"({"ideal": )" + kStaircase + R"(, "complex": "taylor"})";
    CHECK(run({"check-minimal"}, taylor_job).exit_code == kExitFalseVerdict);
    CHECK(run({"check-minimal", "--complex", "hull"}, taylor_job).exit_code == kExitOk);
  }

  TEST_CASE("input errors") {
    const auto bad = run({"multiplicity"}, R"({"n": 2, "generators": [[1, 0)");
    CHECK(bad.exit_code == kExitInputError);
    CHECK(result_of(bad)["kind"] == "malformed_json");
    CHECK(result_of(bad)["message"].get<std::string>().find("byte") != std::string::npos);
    const auto missing = run({"multiplicity", "--input", fixture("nonexistent.json")}, "");
    CHECK(missing.exit_code == kExitInputError);
    CHECK(result_of(missing)["kind"] == "io");
    const auto nonartinian = run({"residue"}, R"({"n": 2, "generators": [[1, 1]]})");
    CHECK(nonartinian.exit_code == kExitInputError);
    CHECK(result_of(nonartinian)["precondition"] == "Artinian");
    CHECK(run({"hull", "--t", "6"}, kStaircase).exit_code == kExitInputError);
    CHECK(run({"bogus"}, kExample).exit_code == kExitInputError);
    CHECK(run({}, kExample).exit_code == kExitInputError);
    CHECK(run({"residue", "--complex", "cube"}, kExample).exit_code == kExitInputError);
    CHECK(run({"annihilator"}, kExample).exit_code == kExitInputError);
    CHECK(run({"annihilator", "--beta", "1,1"}, kExample).exit_code == kExitInputError);
    const auto malformed_file = run({"residue", "--input", fixture("malformed.json")}, "");
    CHECK(malformed_file.exit_code == kExitInputError);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"residue"}, {"compare"}, {"fundamental-cycle"}, {"check-exact", "--jobs", "3"},
        {"resolve", "--reorient", "--seed", "9"}};
    for (const auto& args : commands) {
      const auto first = run(args, kExample);
      const auto second = run(args, kExample);
      CHECK(first.output == second.output);
      CHECK(first.exit_code == second.exit_code);
    }
    CHECK(run({"check-exact", "--jobs", "1"}, kExample).output == run({"check-exact", "--jobs", "4"}, kExample).output);
    // Re-orienting lower faces leaves the current unchanged.
    CHECK(run({"residue", "--reorient", "--seed", "3"}, kExample).output == run({"residue"}, kExample).output);
    CHECK(run({"fundamental-cycle", "--reorient", "--seed", "5"}, kExample).output ==
          run({"fundamental-cycle"}, kExample).output);
  }
}
