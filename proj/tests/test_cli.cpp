#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "repst/serialize.hpp"
#include "repst/snoracle.hpp"

using namespace repst;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "repst");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(std::move(args));
  REQUIRE(r.code == cli::kExitOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("dim") {
  const auto r = run({"dim", "--lambda", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/2*t^2 - 3/2*t") != std::string::npos);
  CHECK(r.out.find("C(t,2) - C(t,1)") != std::string::npos);
  const Json j = run_json({"dim", "--lambda", "2", "--t-eval", "5"});
  CHECK(polynomial_from_json(j["monomial"]) == dim_x(Partition({2})));
  CHECK(rational_from_json(j["tEval"]["value"]) == 5);
}

TEST_CASE("t-eval matches the classical oracle") {
  for (const auto& lambda : partitions_up_to(4)) {
    for (int n = lambda.size() + lambda.first_row(); n <= 9; ++n) {
      const Json j = run_json({"dim", "--lambda", lambda.to_string(), "--t-eval", std::to_string(n)});
      CHECK(rational_from_json(j["tEval"]["value"]) == Rational(hook_dim(pad(lambda, n))));
    }
  }
  const Json half = run_json({"omega-m", "--rho", "1", "--lambda", "1", "--t-eval", "1/2"});
  CHECK(rational_from_json(half["tEval"]["value"]) == make_rational(-5, 8));
}

TEST_CASE("pieri, omega, omega-m, class-size, character") {
  CHECK(run_json({"pieri", "--lambda", ""}) == Json::parse(R"([{"partition":"1","mult":1}])"));
  CHECK(decomposition_from_json(run_json({"pieri", "--lambda", "2,1"})) == pieri_h0(Partition({2, 1})));
  const Polynomial jm = polynomial_from_json(run_json({"omega", "--lambda", "1"})["monomial"]);
  const Polynomial om = polynomial_from_json(run_json({"omega-m", "--rho", "1", "--lambda", "1"})["monomial"]);
  CHECK(jm == om);
  CHECK(om == Polynomial::t() * (Polynomial::t() - Polynomial(3)) * Polynomial(make_rational(1, 2)));
  const Json cs = run_json({"class-size", "--rho", "0,1", "--t-eval", "5"});
  CHECK(rational_from_json(cs["tEval"]["value"]) == 20);
  const Json ch = run_json({"character", "--lambda", "1", "--rho", "1"});
  CHECK(polynomial_from_json(ch["monomial"]) == Polynomial::t() - Polynomial(3));
}

TEST_CASE("hilbert, verma, branch, stirling, bounds, lemma") {
  const auto series = series_from_json(run_json({"hilbert", "--h", "1,1", "--deg", "4"}));
  for (int k = 0; k <= 4; ++k) CHECK(series.coefficient({k}) == Polynomial::binomial(0, static_cast<unsigned>(k)));
  CHECK(run_json({"verma", "--lambda", "", "--N", "4", "--t-max", "5"})["t"] == Json::array({0, 1, 2, 3, 4, 5}));
  CHECK(run_json({"verma", "--lambda", "1", "--N", "3", "--t-max", "5"})["t"] == Json::array({0, 2, 3, 4, 5}));
  const Json br = run_json({"branch", "--lambda", "1", "--N", "2", "--max-size", "2"});
  CHECK(br["mu"].size() == 2);
  const auto table = hilbert_table_from_json(run_json({"stirling", "--max-m", "3"}));
  CHECK(table.size() == 4);
  CHECK(run({"stirling", "--help"}).out.find("Gamma(1 + t)") != std::string::npos);
  CHECK(run_json({"bounds", "--max-n", "10"})["pass"] == true);
  CHECK(run_json({"lemma", "--c", "1", "--k", "0", "--max-n", "12"})["threshold"] == 1);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--suite", "oracle", "--max-size", "3", "--max-n", "8"}).code == cli::kExitOk);
  CHECK(run({"verify", "--suite", "bounds", "--max-n", "12"}).code == cli::kExitOk);
  const auto bad = run({"verify", "--suite", "oracle", "--max-size", "4", "--max-n", "10", "--content-convention",
                        "row-minus-col"});
  CHECK(bad.code == cli::kExitVerifyFailed);
  const Json report = Json::parse(bad.out);
  CHECK(report["pass"] == false);
  CHECK_FALSE(report["suites"][0]["failures"].empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"dim", "--lambda", "1,2"}).code == cli::kExitUsage);
  CHECK(run({"dim", "--lambda", "x"}).code == cli::kExitUsage);
  CHECK(run({"omega-m", "--lambda", "1"}).code == cli::kExitUsage);
  CHECK(run({"dim", "--lambda", "1", "--t-eval", "1/0"}).code == cli::kExitUsage);
  CHECK(run({"hilbert", "--h", "2,1"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--content-convention", "sideways"}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
