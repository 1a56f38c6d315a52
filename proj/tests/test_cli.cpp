#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "dedesum/cli.hpp"
#include "dedesum/dedekind.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dedesum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sum prints the exact rational") {
  RunResult r = run_cli({"sum", "2", "13"});
  CHECK(r.code == 0);
  CHECK(r.out == "4/13\n");

  RunResult neg = run_cli({"sum", "-1", "5"});
  CHECK(neg.code == 0);
  CHECK(neg.out == "-1/5\n");
}

TEST_CASE("sum oracles agree") {
  RunResult saw = run_cli({"sum", "2", "13", "--oracle", "sawtooth"});
  CHECK(saw.code == 0);
  CHECK(saw.out.find("(agree)") != std::string::npos);

  RunResult cot = run_cli({"sum", "2", "13", "--oracle", "cotangent"});
  CHECK(cot.code == 0);
  CHECK(cot.out.find("(agree)") != std::string::npos);
}

TEST_CASE("sum JSON round-trips and is deterministic") {
  RunResult a = run_cli({"sum", "2", "13", "--json", "--oracle", "sawtooth"});
  RunResult b = run_cli({"sum", "2", "13", "--json", "--oracle", "sawtooth"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  json j = json::parse(a.out);
  CHECK(j["command"] == "sum");
  CHECK(j["inputs"]["c"] == 2);
  CHECK(j["inputs"]["d"] == 13);
  CHECK(j["exact"] == "4/13");
  CHECK(j["oracle"]["agree"] == true);
  CHECK(dedesum::Rational::from_string(j["exact"].get<std::string>()) ==
        dedesum::dedekind_sum(2, 13));
  CHECK(j.contains("version"));
}

TEST_CASE("domain errors exit 1") {
  CHECK(run_cli({"sum", "2", "4"}).code == 1);       // gcd != 1
  CHECK(run_cli({"sum", "1", "0"}).code == 1);       // d <= 0
  CHECK(run_cli({"classnum", "5"}).code == 1);       // not fundamental
  CHECK(run_cli({"relclassnum"}).code == 1);         // nothing specified
  CHECK(run_cli({"verify", "nonsense"}).code == 1);  // unknown suite
  CHECK(run_cli({"sum", "2", "13", "--bogus"}).code == 1);
  CHECK(run_cli({}).code == 1);
}

TEST_CASE("chars table") {
  RunResult r = run_cli({"chars", "5", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["characters"].size() == 4);
  std::multiset<long long> orders;
  for (const auto& c : j["characters"]) orders.insert(c["order"].get<long long>());
  CHECK(orders == std::multiset<long long>{1, 2, 4, 4});
  CHECK(j["characters"][0]["values"][0] == "1");
  CHECK(j["unit_group"][0]["generator"] == 2);

  RunResult odd = run_cli({"chars", "5", "--odd-only", "--json"});
  json jo = json::parse(odd.out);
  CHECK(jo["characters"].size() == 2);
  for (const auto& c : jo["characters"]) CHECK(c["parity"] == "odd");

  RunResult text = run_cli({"chars", "5"});
  CHECK(text.code == 0);
  CHECK(text.out.find("zeta_4") != std::string::npos);
}

TEST_CASE("classnum with oracles") {
  RunResult r = run_cli({"classnum", "23", "--oracle", "all", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["h"] == 3);
  CHECK(j["forms_oracle"] == 3);
  CHECK(j["oracles_agree"] == true);
  CHECK(j["exact_sum"] == "9");
  // exact strings reconstruct the original values
  CHECK(dedesum::Rational::from_string(j["exact_sum"].get<std::string>()) ==
        dedesum::Rational(9));

  RunResult r4 = run_cli({"classnum", "4", "--json"});
  json j4 = json::parse(r4.out);
  CHECK(dedesum::Rational::from_string(j4["exact_sum"].get<std::string>()) ==
        dedesum::Rational(1, 4));
}

TEST_CASE("relclassnum") {
  RunResult z5 = run_cli({"relclassnum", "--cyclotomic", "5", "--json"});
  CHECK(z5.code == 0);
  json j = json::parse(z5.out);
  CHECK(j["h_minus"] == 1);
  CHECK(j["w"] == 10);
  CHECK(j["hasse_q"] == 1);
  CHECK(dedesum::Rational::from_string(j["exact_value"].get<std::string>()) ==
        dedesum::Rational(1));
  CHECK(j["contributions"][0]["exact"] == "1/10");

  RunResult q13 = run_cli({"relclassnum", "--modulus", "13", "--char", "3"});
  CHECK(q13.code == 0);
  CHECK(q13.out.find("h_minus = 1") != std::string::npos);

  RunResult biquad = run_cli({"relclassnum", "--modulus", "28", "--char", "1,0",
                              "--char", "0,3", "--hasse-q", "2", "--json"});
  CHECK(biquad.code == 0);
  json jb = json::parse(biquad.out);
  CHECK(jb["h_minus"] == 1);
  CHECK(jb["hasse_provenance"] == "user-supplied");

  // same field without the override: no rule applies
  CHECK(run_cli({"relclassnum", "--modulus", "28", "--char", "1,0", "--char", "0,3"})
            .code == 1);
}

TEST_CASE("sweep CSV is ordered and stable across jobs") {
  RunResult one = run_cli({"sweep", "--max-d", "60"});
  CHECK(one.code == 0);
  CHECK(one.out.rfind("D,h,exact_sum,forms_oracle,analytic_oracle,agree\n", 0) == 0);

  RunResult two = run_cli({"sweep", "--max-d", "60", "--jobs", "3"});
  CHECK(two.out == one.out);

  std::istringstream lines(one.out);
  std::string header, line;
  std::getline(lines, header);
  long long prev = 0;
  int rows = 0;
  while (std::getline(lines, line)) {
    long long D = std::stoll(line.substr(0, line.find(',')));
    CHECK(D > prev);
    prev = D;
    CHECK(line.find("true") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 21);  // fundamental discriminants up to 60
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli({"verify", "reciprocity", "--max-d", "150", "--samples", "150"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[ok]") != std::string::npos);
  CHECK(r.out.find("0 violations") != std::string::npos);

  RunResult v = run_cli({"verify", "vanishing", "--max-f", "30", "--json"});
  CHECK(v.code == 0);
  json j = json::parse(v.out);
  CHECK(j["results"][0]["violations"] == 0);
}
