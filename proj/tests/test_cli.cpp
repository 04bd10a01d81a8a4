#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "pentablock/pentablock.hpp"
#include "pentablock/records.hpp"
#include "pentablock/text.hpp"

using namespace pentablock;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

Complex cx(const json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

}  // namespace

TEST_CASE("classify reference points") {
  auto r = run({"--json", "classify", "--point", "0,0,0"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "Interior");
  CHECK(j["minkowski"] == 0.0);

  j = json::parse(run({"--json", "classify", "--point", "1,0,0"}).out);
  CHECK(j["verdict"] == "SmoothBoundary");
  CHECK(std::abs(j["minkowski"].get<double>() - 1.0) < 1e-12);

  j = json::parse(run({"classify", "--point", "0.3,1,0", "--json"}).out);
  CHECK(j["verdict"] == "LeviFlatBoundary");
  CHECK(j["base_verdict"] == "Boundary");

  j = json::parse(run({"--json", "classify", "--point", "1,0"}).out);
  CHECK(j["verdict"] == "Boundary");
  CHECK(j["royal_lambda"].is_null());
  j = json::parse(run({"--json", "classify", "--point", "1,0.25"}).out);
  CHECK(std::abs(cx(j["royal_lambda"]) - 0.5) < 1e-15);

  r = run({"classify", "--point", "0.1,0.2,0.05"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: Interior") != std::string::npos);
}

TEST_CASE("apply") {
  auto r = run({"--json", "apply", "--params", "omega=1; eta=1; alpha=0.5", "--point", "0,0,0"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  const auto img = j["image"];
  CHECK(std::abs(cx(img[0])) < 1e-15);
  CHECK(std::abs(cx(img[1]) + 1.0) < 1e-15);
  CHECK(std::abs(cx(img[2]) - 0.25) < 1e-15);
  CHECK(j["agreement"] == true);

  j = json::parse(run({"--json", "apply", "--params", "", "--point", "0.1,0,0"}).out);
  CHECK(cx(j["image"][0]) == Complex(0.1));
  CHECK(cx(j["image"][1]) == Complex(0));

  r = run({"apply", "--params", "alpha=0.5", "--point", "2,0,0"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--point", "0.5x,0,0"}).code == 2);
  CHECK(run({"classify", "--point", "1,2,3,4"}).code == 2);
  CHECK(run({"--tol", "-1", "classify", "--point", "0,0,0"}).code == 2);
  CHECK(run({"--seed", "abc", "verify", "--suite", "all"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"sample", "--region", "nowhere"}).code == 2);
  CHECK(run({"apply", "--params", "omega=3", "--point", "0,0,0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "royal-identity", "--samples", "1000", "--seed", "7"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["max_deviation"].get<double>() < 1e-10);
  CHECK(j["seed"] == 7);

  j = json::parse(run({"verify", "--suite", "wirtinger-eq0000"}).out);
  CHECK(j["passed"] == true);

  r = run({"verify", "--suite", "all", "--samples", "0"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 11);
  for (const auto& l : ls) {
    const json s = json::parse(l);
    CHECK(s["cases_run"] == 0);
    CHECK(s["passed"] == true);
  }

  CHECK(run({"--tol", "1e-300", "verify", "--suite", "royal-identity"}).code == 1);
}

TEST_CASE("verify output is deterministic apart from timing") {
  auto strip = [](const std::string& text) {
    std::string out;
    for (const auto& l : lines(text)) {
      json j = json::parse(l);
      j.erase("wall_time");
      out += j.dump() + "\n";
    }
    return out;
  };
  const std::vector<std::string> cmd{"verify", "--suite", "all", "--samples", "20", "--seed", "5"};
  CHECK(strip(run(cmd).out) == strip(run(cmd).out));
}

TEST_CASE("sample") {
  auto r = run({"sample", "--region", "royal", "--samples", "3", "--seed", "1"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  for (const auto& l : ls) {
    const SampleRecord rec = parse_sample_record(l);
    const auto& pt = std::get<Point2>(rec.point);
    CHECK(std::abs(pt.s * pt.s - 4.0 * pt.p) < 1e-15);
  }

  r = run({"sample", "--region", "penta-d1", "--samples", "10"});
  ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  for (const auto& l : ls) {
    const auto pt = std::get<Point3>(parse_sample_record(l).point);
    CHECK(std::abs(std::norm(pt.a) - std::exp(-u_potential(pt.base()))) < 1e-8);
  }

  r = run({"sample", "--region", "g2-interior", "--samples", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  const std::vector<std::string> cmd{"sample", "--region", "penta-d2", "--samples", "5", "--seed",
                                     "9"};
  CHECK(run(cmd).out == run(cmd).out);
}

TEST_CASE("sampled records re-classify to their declared verdict") {
  for (const char* region : {"penta-interior", "penta-d1", "penta-d2", "g2-interior",
                             "g2-boundary", "g2-shilov", "royal"}) {
    const auto r = run({"sample", "--region", region, "--samples", "25", "--seed", "4"});
    for (const auto& l : lines(r.out)) {
      const SampleRecord rec = parse_sample_record(l);
      CHECK(rec.region == region);
      const std::string literal = std::visit(
          [](const auto& pt) {
            if constexpr (std::is_same_v<std::decay_t<decltype(pt)>, Point2>) {
              return format_complex(pt.s) + "," + format_complex(pt.p);
            } else {
              return format_complex(pt.a) + "," + format_complex(pt.s) + "," + format_complex(pt.p);
            }
          },
          rec.point);
      const auto c = run({"--json", "--tol", "1e-8", "classify", "--point", literal});
      REQUIRE(c.code == 0);
      CHECK(json::parse(c.out)["verdict"] == rec.verdict);
    }
  }
}
