#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using qkloc::cli::run_command;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return json::parse(r.out);
}

void check_qfunction_schema(const json& f) {
  REQUIRE(f.is_object());
  REQUIRE(f["num"].is_array());
  for (const auto& term : f["num"]) {
    CHECK(term.size() == 2);
    CHECK(term[0].is_number_integer());
    CHECK(term[1]["num"].is_array());
    for (const auto& t : term[1]["num"]) {
      CHECK(t["coeff"]["order"].is_number_integer());
      for (const auto& c : t["coeff"]["coeffs"]) CHECK(c.is_string());
      for (const auto& e : t["mono"]) CHECK(e.is_string());
    }
  }
  for (const auto& factor : f["den"]) {
    CHECK(factor["a"].is_number_integer());
    CHECK(factor["mult"].is_number_integer());
    for (const auto& e : factor["mu"]) CHECK(e.is_string());
  }
}

}  // namespace

TEST_CASE("j component as JSON") {
  const json doc = run_json({"j", "--n", "1", "--max-degree", "2", "--fixed-point", "0"});
  CHECK(doc["session"] == json{{"n", 1}, {"d", 2}, {"m", 2}});
  CHECK(doc["result"]["fixed_point"] == 0);
  REQUIRE(doc["result"]["coeffs"].size() == 3);
  for (const auto& c : doc["result"]["coeffs"]) check_qfunction_schema(c);
  const json& d1 = doc["result"]["coeffs"][1];
  CHECK(d1["den"] == json::array({{{"a", 1}, {"mu", {"1", "-1"}}, {"mult", 1}}}));
  CHECK(doc["checks"][0]["pass"] == true);
}

TEST_CASE("verify-recursion passes") {
  const Run r = run({"verify-recursion", "--n", "1", "--i", "0", "--j", "1", "--m", "2", "--max-degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("check leg 01(2) d=3: PASS") != std::string::npos);
  const json doc = run_json({"verify-recursion", "--n", "2", "--max-degree", "2"});
  CHECK(doc["result"]["legs"].size() == 12);
  for (const auto& c : doc["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("c-coeff reports both values and a verdict") {
  const json doc = run_json({"c-coeff", "--n", "2", "--i", "0", "--j", "1", "--m", "2", "--method", "both"});
  CHECK(doc["result"].contains("product"));
  CHECK(doc["result"].contains("tangent"));
  CHECK(doc["result"]["agree"] == true);
  CHECK(doc["session"]["m"] == 2);
  const json only = run_json({"c-coeff", "--n", "1", "--i", "1", "--j", "0", "--m", "3", "--method", "tangent"});
  CHECK_FALSE(only["result"].contains("product"));
  CHECK(only["session"]["m"] == 6);
  CHECK(only["checks"].empty());
}

TEST_CASE("verification failures exit 1") {
  CHECK(run({"verify-degree2"}).code == 0);
  const Run tampered = run({"verify-degree2", "--tamper", "2"});
  CHECK(tampered.code == 1);
  CHECK(tampered.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"j", "--format", "xml"}).code == 2);
  CHECK(run({"j", "--n", "0"}).code == 2);
  CHECK(run({"j", "--fixed-point", "2"}).code == 2);
  CHECK(run({"c-coeff", "--i", "0"}).code == 2);
  CHECK(run({"c-coeff", "--i", "0", "--j", "0", "--m", "1"}).code == 2);
  CHECK(run({"j", "--max-degree", "3", "--root-order", "4"}).code == 2);
  CHECK(run({"verify-degree2", "--tamper", "7"}).code == 2);
  CHECK(run({"residue", "--at", "1", "1/(1 - q)^2"}).code == 2);
  const Run bad = run({"parse", "(1 - q"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 6") != std::string::npos);
  CHECK(run({"parse", "x"}).code == 2);
  CHECK(run({"parse", "q^1.5"}).code == 2);
  CHECK(run({"parse", "q*P"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("expression subcommands") {
  const json pf = run_json({"partial-fractions", "1/((1 - q^2)*(1 - q*L0/L1))"});
  CHECK(pf["result"]["terms"].size() == 3);
  check_qfunction_schema(pf["result"]["laurent_part"]);
  CHECK(pf["checks"][0]["pass"] == true);

  const json kpm = run_json({"split-kpm", "q^-1/(1 - q*L0)"});
  check_qfunction_schema(kpm["result"]["kplus"]);
  CHECK(kpm["result"]["kplus"]["den"].empty());
  for (const auto& c : kpm["checks"]) CHECK(c["pass"] == true);

  const json res = run_json({"residue", "--at", "L0/L1", "1/((1 - q)*(1 - q*L0/L1))"});
  REQUIRE(res["result"]["residues"].size() == 1);
  CHECK(res["result"]["residues"][0]["locus"]["zeta_exp"] == 0);

  const json parsed = run_json({"parse", "1/(1 - q*L0/L1)"});
  CHECK(parsed["result"]["kind"] == "qfunction");
  CHECK(parsed["result"]["value"]["den"][0]["mu"] == json::array({"1", "-1"}));
}

TEST_CASE("lefschetz, tangent eigenvalues and reconstruct") {
  const json lef = run_json({"lefschetz", "--n", "2"});
  CHECK(lef["result"]["values"].size() == 9);
  for (const auto& c : lef["checks"]) CHECK(c["pass"] == true);
  const json lk = run_json({"lefschetz", "--k", "-1"});
  CHECK(lk["result"]["values"][0]["k"] == -1);

  const json tan = run_json({"tangent-eigenvalues", "--n", "1", "--i", "0", "--j", "1", "--m", "2", "--k", "1"});
  CHECK(tan["result"]["eigenvalues"].size() == 4);
  CHECK(tan["result"]["branch"] == 1);

  const json rec = run_json({"reconstruct", "--n", "1", "--max-degree", "2"});
  CHECK(rec["result"]["components"].size() == 2);
  for (const auto& c : rec["checks"]) CHECK(c["pass"] == true);

  const json pform = run_json({"j-pform", "--n", "1", "--max-degree", "1"});
  CHECK(pform["result"]["degree"] == 1);
  CHECK(pform["checks"][0]["pass"] == true);
}

TEST_CASE("output is deterministic and --out writes the report") {
  const std::vector<std::string> args{"j", "--n", "2", "--max-degree", "2", "--format", "latex"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\\Lambda_{0}") != std::string::npos);

  const std::string path = "qkloc_cli_out.txt";
  std::vector<std::string> with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  const Run c = run(with_out);
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == a.out);
  std::remove(path.c_str());
  CHECK(run({"j", "--out", "/nonexistent-dir/x"}).code == 2);
}
