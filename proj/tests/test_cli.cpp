#include "surdeq/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = surdeq::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand prints the continued fraction") {
  const auto r = run_cli({"expand", "--v", "7", "--q", "12", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pre-period:    [2]") != std::string::npos);
  CHECK(r.out.find("[1, 2, 1, 2, 4, 5, 16, 47, 1, 1, 3, 1, 1, 4]") !=
        std::string::npos);
  CHECK(r.out.find("period length: 14") != std::string::npos);
}

TEST_CASE("expand --json emits one parseable record with string integers") {
  const auto r =
      run_cli({"expand", "--v", "7", "--q", "12", "--m", "1", "--json"});
  CHECK(r.code == 0);
  const json record = json::parse(r.out);
  CHECK(record["command"] == "expand");
  CHECK(record["inputs"]["v"] == "7");
  CHECK(record["inputs"]["q"] == "12");
  CHECK(record["inputs"]["m"] == "1");
  CHECK(record["result"]["preperiod"] == json::array({"2"}));
  CHECK(record["result"]["period"].size() == 14);
  CHECK(record["result"]["period"][0] == "1");
  CHECK(record["result"]["period_length"] == "14");

  // Round-trip: re-serializing the parsed record preserves the payload.
  CHECK(json::parse(record.dump()) == record);
}

TEST_CASE("equiv and inverse report the decision and the invariants") {
  auto r = run_cli({"equiv", "--v", "7", "--q", "12", "--m", "1", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("equivalent: yes") != std::string::npos);

  r = run_cli({"equiv", "--v", "979", "--q", "12", "--m", "1", "--n", "5",
               "--json"});
  CHECK(r.code == 0);
  json record = json::parse(r.out);
  CHECK(record["result"]["equivalent"] == false);
  CHECK(record["result"]["q0"] == "12");
  CHECK(record["result"]["q1"] == "4");

  r = run_cli({"inverse", "--v", "979", "--q", "12", "--m", "7", "--n", "5",
               "--json"});
  CHECK(r.code == 0);
  record = json::parse(r.out);
  CHECK(record["result"]["inverse_periods"] == true);
  CHECK(record["result"]["q1_prime"] == "12");
}

TEST_CASE("out-of-range m is reduced and the reduction is echoed") {
  const auto r =
      run_cli({"equiv", "--v", "7", "--q", "12", "--m", "13", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m reduced to 1 (mod 12)") != std::string::npos);
  CHECK(r.out.find("equivalent: yes") != std::string::npos);

  const auto j = run_cli({"equiv", "--v", "7", "--q", "12", "--m", "13", "--n",
                          "5", "--json"});
  const json record = json::parse(j.out);
  CHECK(record["inputs"]["m"] == "13");
  CHECK(record["inputs"]["m_reduced"] == "1");
}

TEST_CASE("selfinv and classes") {
  auto r = run_cli({"selfinv", "--v", "979", "--q", "9", "--m", "1", "--json"});
  CHECK(r.code == 0);
  json record = json::parse(r.out);
  CHECK(record["result"]["self_inverse"] == true);
  CHECK(record["result"]["q1_prime"] == "1");

  r = run_cli({"classes", "--v", "979", "--q", "12", "--json"});
  CHECK(r.code == 0);
  record = json::parse(r.out);
  CHECK(record["result"]["q0"] == "12");
  CHECK(record["result"]["num_classes"] == "4");
  CHECK(record["result"]["classes"] ==
        json::array({json::array({"1"}), json::array({"5"}),
                     json::array({"7"}), json::array({"11"})}));
}

TEST_CASE("matrix emits a verified witness") {
  const auto r = run_cli(
      {"matrix", "--v", "7", "--q", "12", "--m", "1", "--n", "5", "--json"});
  CHECK(r.code == 0);
  const json record = json::parse(r.out);
  CHECK(record["result"]["verified"] == true);
  const std::string det = record["result"]["det"];
  CHECK((det == "1" || det == "-1"));
}

TEST_CASE("unitdata reports the fundamental unit and q0") {
  const auto r = run_cli({"unitdata", "--v", "979", "--q", "12", "--json"});
  CHECK(r.code == 0);
  const json record = json::parse(r.out);
  CHECK(record["result"]["s"] == "360449");
  CHECK(record["result"]["t"] == "11520");
  CHECK(record["result"]["norm"] == "1");
  CHECK(record["result"]["k0"] == "1");
  CHECK(record["result"]["q0"] == "12");
}

TEST_CASE("oracle-check agrees on pairs and whole cells") {
  auto r = run_cli({"oracle-check", "--v", "7", "--q", "12", "--m", "1", "--n",
                    "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 disagreement(s)") != std::string::npos);

  r = run_cli({"oracle-check", "--v", "10", "--q", "6", "--json"});
  CHECK(r.code == 0);
  const json record = json::parse(r.out);
  CHECK(record["result"]["agree"] == true);
  CHECK(record["result"]["disagreements"] == "0");
}

TEST_CASE("domain errors exit 1, usage errors exit 2") {
  auto r = run_cli({"expand", "--v", "4", "--q", "12", "--m", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("square") != std::string::npos);

  r = run_cli({"equiv", "--v", "7", "--q", "12", "--m", "2", "--n", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("coprime") != std::string::npos);

  r = run_cli({"matrix", "--v", "979", "--q", "12", "--m", "1", "--n", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not equivalent") != std::string::npos);

  r = run_cli({"expand", "--v", "7", "--q", "12"});
  CHECK(r.code == 2);

  r = run_cli({"nonsense"});
  CHECK(r.code == 2);

  r = run_cli({"expand", "--v", "abc", "--q", "12", "--m", "1"});
  CHECK(r.code == 2);

  // --m without --n on oracle-check is a usage error.
  r = run_cli({"oracle-check", "--v", "7", "--q", "12", "--m", "1"});
  CHECK(r.code == 2);

  r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("expand") != std::string::npos);
}
