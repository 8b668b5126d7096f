#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semigraph/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::vector<const char*> argv = {"semigraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = semigraph::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kMixed7 =
    "v w1 w2 w3 w4 w5 w6 w7\n"
    "e w1 w2 w3 w4\n"
    "e w2 w5 w6\n"
    "e w3 w7 w6\n"
    "e w5 w7\n";

}  // namespace

TEST_CASE("validate accepts a correct file from stdin") {
  const CliResult r = run({"validate", "-"}, kMixed7);
  CHECK(r.code == 0);
  CHECK(r.out == "valid semigraph: n=7, m=4\n");
  CHECK(r.err.empty());
}

TEST_CASE("validate reads a file path") {
  const std::string path = "cli_validate_input.sg";
  std::ofstream(path) << kMixed7;
  const CliResult r = run({"validate", path});
  CHECK(r.code == 0);
  CHECK(r.out == "valid semigraph: n=7, m=4\n");
}

TEST_CASE("exit code 2 on invalid input with a diagnostic") {
  const CliResult r = run({"validate", "-"}, "e a b c\ne a b d\n");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(r.err.find("share {a, b}") != std::string::npos);
}

TEST_CASE("exit code 1 on a missing file") {
  const CliResult r = run({"report", "no_such_file.sg"});
  CHECK(r.code == 1);
  CHECK(r.err.find("no_such_file.sg") != std::string::npos);
}

TEST_CASE("exit code 3 when the eigensolver budget is exhausted") {
  const CliResult r = run({"spectrum", "-", "--max-sweeps", "0"}, kMixed7);
  CHECK(r.code == 3);
  CHECK(r.err.find("did not converge") != std::string::npos);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"gen", "pentagram", "--n", "3"}).code == 2);
  CHECK(run({"spectrum", "-", "--frobnicate"}, kMixed7).code == 2);
  CHECK(run({}).code == 2);  // a subcommand is required
}

TEST_CASE("help exits zero") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("validate") != std::string::npos);
  CHECK(r.out.find("spectrum") != std::string::npos);
}

TEST_CASE("report json carries the full summary") {
  const CliResult r = run({"report", "-"}, kMixed7);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["semigraph"]["n"] == 7);
  CHECK(j["semigraph"]["m"] == 4);
  CHECK(j["semigraph"]["census"]["m1"] == 1);
  CHECK(j["semigraph"]["census"]["m2"] == 1);
  CHECK(j["semigraph"]["census"]["m3"] == 2);
  CHECK(j["semigraph"]["census"]["m4"] == 0);
  CHECK(j["degrees"][4] == "7/4");
  CHECK(j["laplacian"]["entries"][0][1] == "-4/4");
  CHECK(j["connectivity"]["combinatorial"] == true);
  CHECK(j["connectivity"]["spectral"] == true);
  CHECK(j["bounds"]["lower"] == "15/2");
  CHECK(j["bounds"]["upper_proof"] == "25/2");
  CHECK(j["bounds"]["argmax_pair"][0] == "w1");
  CHECK(j["spectrum"]["values"].size() == 7);
}

TEST_CASE("repeated reports are byte-identical") {
  const CliResult a = run({"report", "-"}, kMixed7);
  const CliResult b = run({"report", "-"}, kMixed7);
  CHECK(a.out == b.out);
  const CliResult c = run({"report", "--csv", "-"}, kMixed7);
  const CliResult d = run({"report", "--csv", "-"}, kMixed7);
  CHECK(c.out == d.out);
  CHECK(a.out != c.out);
}

TEST_CASE("report csv is flat key-value rows") {
  const CliResult r = run({"report", "--csv", "-"}, kMixed7);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n,7\n") != std::string::npos);
  CHECK(r.out.find("m1,1\n") != std::string::npos);
  CHECK(r.out.find("degree,w5,1.75\n") != std::string::npos);  // csv uses the real view
  CHECK(r.out.find("connected,true\n") != std::string::npos);
  const CliResult both = run({"report", "--csv", "--json", "-"}, kMixed7);
  CHECK(both.code == 2);
}

TEST_CASE("report respects a disconnected input") {
  const CliResult r = run({"report", "-"}, "e a b c\ne d f\n");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["connectivity"]["combinatorial"] == false);
  CHECK(j["connectivity"]["spectral"] == false);
  CHECK(j["bounds"].is_null());  // the upper bound needs connectivity
}

TEST_CASE("spectrum json has values, tol and clusters") {
  const CliResult r = run({"spectrum", "-"}, kMixed7);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["values"].size() == 7);
  CHECK(std::abs(j["values"][0].get<double>()) < 1e-9);
  CHECK(j["values"][6].get<double>() == doctest::Approx(9.50673224131));
  CHECK(j["tol"] == 1e-12);
  CHECK(j["multiplicity_clusters"].size() == 7);
}

TEST_CASE("bounds json on the tight tree") {
  const CliResult gen = run({"gen", "tree3", "--n", "1"});
  REQUIRE(gen.code == 0);
  const CliResult r = run({"bounds", "-"}, gen.out);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lower"] == "4");
  CHECK(j["upper_proof"] == "5");
  CHECK(j["upper_literal"] == "5");
  CHECK(j["lambda_n"].get<double>() == doctest::Approx(5.0));
  CHECK(j["lower_ok"] == true);
  CHECK(j["upper_ok"] == true);
}

TEST_CASE("bounds rejects a disconnected semigraph") {
  const CliResult r = run({"bounds", "-"}, "e a b\ne c d\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("connected") != std::string::npos);
}

TEST_CASE("charpoly emits exact lowest-term coefficients") {
  const CliResult gen = run({"gen", "tree3", "--n", "2"});
  const CliResult r = run({"charpoly", "-"}, gen.out);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["order"] == 5);
  const std::vector<std::string> want = {"0", "125", "-180", "85", "-16", "1"};
  REQUIRE(j["coefficients"].size() == 6);
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(j["coefficients"][k] == want[k]);
}

TEST_CASE("gen emits the file format and round-trips") {
  const CliResult star = run({"gen", "star", "--n", "3"});
  REQUIRE(star.code == 0);
  CHECK(star.out ==
        "v v1 v2 v3 v4 v5 v6\n"
        "e v2 v1 v3\n"
        "e v1 v4\n"
        "e v1 v5\n"
        "e v1 v6\n");
  // parse -> emit is the identity on generated output
  const CliResult again = run({"gen", "star", "--n", "3"});
  CHECK(star.out == again.out);
  const CliResult check = run({"validate", "-"}, star.out);
  CHECK(check.code == 0);
  CHECK(check.out == "valid semigraph: n=6, m=4\n");
}

TEST_CASE("gen rejects a nonpositive parameter") {
  const CliResult r = run({"gen", "star", "--n", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n") != std::string::npos);
}

TEST_CASE("gen can emit closed, numeric or both spectra") {
  const CliResult closed = run({"gen", "star", "--n", "2", "--spectrum", "closed"});
  REQUIRE(closed.code == 0);
  const json c = json::parse(closed.out);
  CHECK(c["family"] == "star");
  CHECK(c["n"] == 2);
  CHECK(c["order"] == 5);
  CHECK(c["fixed"][0][0] == "0");
  CHECK(c["fixed"][1][0] == "1/2");
  CHECK(c["residual"].size() == 4);

  const CliResult numeric = run({"gen", "star", "--n", "2", "--spectrum", "numeric"});
  const json v = json::parse(numeric.out);
  CHECK(v["values"].size() == 5);

  const CliResult both = run({"gen", "star", "--n", "2", "--spectrum", "both"});
  const json b = json::parse(both.out);
  CHECK(b.contains("closed"));
  CHECK(b.contains("numeric"));
  CHECK(b["closed"]["fixed"][1][1] == 1);

  const CliResult tree = run({"gen", "tree3", "--n", "2", "--spectrum", "closed"});
  const json t = json::parse(tree.out);
  CHECK(t["fixed"][1][0] == "5/2 - 1/2*sqrt(5)");
}
