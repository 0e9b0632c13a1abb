#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "wph/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = wph::cli::run(args, out, err, wph::Budgets{});
  return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_status = 0) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.status == expected_status);
  return nlohmann::json::parse(r.out);  // strict: throws on any malformed input
}

}  // namespace

TEST_CASE("analyze the smallest volume threefold") {
  const auto doc = run_json({"analyze", "--weights", "4,5,6,7,23", "--degree", "46", "--plurigenera", "4"});
  CHECK(doc["command"] == "analyze");
  CHECK(doc["version"] == wph::cli::kVersion);
  CHECK(doc["status"] == "pass");
  const auto& res = doc["results"];
  CHECK(res["volume"] == "1/420");
  CHECK(res["quasi_smooth"] == true);
  CHECK(res["well_formed"] == true);
  CHECK(res["amplitude"] == 1);
  CHECK(res["dimension"] == 3);
  CHECK(res["plurigenera"]["P_1"] == "0");
  CHECK(res["plurigenera"]["P_2"] == "0");
  CHECK(res["plurigenera"]["P_3"] == "0");
  CHECK(res["plurigenera"]["P_4"] == "1");
  CHECK(res["member_class"] == "Terminal");
  bool saw_line = false;
  for (const auto& s : res["singularities"]) {
    if (s["stratum"] == nlohmann::json::array({0, 2})) {
      saw_line = true;
      CHECK(s["incidence"] == "meets");
      CHECK(s["member_type"] == "1/2(5,7,23)");
    }
  }
  CHECK(saw_line);
}

TEST_CASE("analyze with a decimal approximation") {
  const auto doc = run_json({"analyze", "--weights", "4,5,6,7,23", "--degree", "46", "--decimal", "5"});
  CHECK(doc["results"]["volume"] == "1/420");
  CHECK(doc["results"]["volume_decimal_approx"] == "0.00238 (approx)");
}

TEST_CASE("reid-tai") {
  const auto doc = run_json({"reid-tai", "1/3(1,1)"});
  CHECK(doc["results"]["class"] == "NotCanonical");
  CHECK(doc["results"]["min"] == "2/3");
  CHECK(doc["results"]["j"] == 1);
  CHECK(run_json({"reid-tai", "1/2(1,1,1)"})["results"]["class"] == "Terminal");
  CHECK(run({"reid-tai", "1/3(1,"}).status == 2);
}

TEST_CASE("plurigenera") {
  const auto doc = run_json({"plurigenera", "--weights", "1,1,1,1", "--degree", "5", "--up-to", "3"});
  CHECK(doc["results"]["plurigenera"]["P_3"] == "20");
  CHECK(run({"plurigenera", "--weights", "1,1,1,1", "--degree", "4", "--up-to", "3"}).status == 2);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--family", "prop", "--k", "1", "--l", "0"}).status == 2);
  const auto doc = run_json({"verify", "--family", "prop", "--k", "2..3", "--l", "0"});
  CHECK(doc["status"] == "pass");
  CHECK(doc["results"]["reports"].size() == 2);
  CHECK(doc["results"]["reports"][0]["volume"] == "1/24");
  CHECK(run_json({"verify", "--family", "thm3", "--n", "5..7"})["status"] == "pass");
  CHECK(run_json({"verify", "--family", "thm4", "--n", "9"})["status"] == "pass");
  CHECK(run_json({"verify", "--family", "ample", "--n", "1..4"})["status"] == "pass");
  CHECK(run_json({"verify", "--family", "volume", "--q", "1/2,22/7"})["status"] == "pass");
  CHECK(run({"verify", "--family", "nope"}).status == 2);
  CHECK(run({"verify"}).status == 2);
}

TEST_CASE("construct-volume") {
  const auto doc = run_json({"construct-volume", "5/7"});
  const auto& report = doc["results"]["reports"][0];
  CHECK(report["volume"] == "5/7");
  CHECK(report["passed"] == true);
  CHECK(run({"construct-volume", "2/4"}).status == 2);
  CHECK(run({"construct-volume", "1/2", "--a", "4"}).status == 2);
}

TEST_CASE("search") {
  const auto doc = run_json({"search", "--dim", "3", "--max-sum", "45", "--vanishing", "3", "--min"});
  const auto& rec = doc["results"]["records"][0];
  CHECK(rec["weights"] == "4,5,6,7,23");
  CHECK(rec["volume"] == "1/420");

  const auto csv = run({"search", "--dim", "2", "--max-sum", "5", "--plurigenera", "1", "--csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out ==
        "weights,d,volume,P_1,well_formed,quasi_smooth,canonical,ambient_canonical\n"
        "\"1,1,1,2\",6,3,3,true,true,true,true\n"
        "\"1,1,1,1\",5,5,4,true,true,true,true\n");

  CHECK(run({"search", "--dim", "3", "--max-sum", "0", "--min"}).status == 1);
  wph::Budgets tight;
  tight.search_sum_cap = 10;
  std::ostringstream out, err;
  CHECK(wph::cli::run({"search", "--dim", "3", "--max-sum", "45"}, out, err, tight) == 3);
  CHECK(run({"search", "--dim", "3", "--max-sum", "10", "--json", "--csv"}).status == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"analyze", "--weights", "1,1,1"}).status == 2);
  CHECK(run({"analyze", "--weights", "1,x", "--degree", "3"}).status == 2);
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"--version"}).status == 0);
}

TEST_CASE("output is byte-identical across invocations") {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", "--weights", "1^4,5,2,3", "--degree", "15", "--plurigenera", "3", "--json"},
      {"verify", "--family", "volume", "--q", "355/113"},
      {"search", "--dim", "3", "--max-sum", "20", "--plurigenera", "2", "--json"},
  };
  for (const auto& args : commands) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json round-trips through a strict parser") {
  const auto r = run({"verify", "--family", "ample", "--n", "1..3", "--json"});
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc.dump(2) + "\n" == r.out);
  const auto parse_trailing = [&] { const auto bad = nlohmann::json::parse(r.out + ","); };
  CHECK_THROWS_AS(parse_trailing(), nlohmann::json::parse_error);
}
