#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "preper/app/classify.hpp"
#include "preper/app/survey.hpp"
#include "preper/claims/claims.hpp"
#include "preper/p1dyn/parse_map.hpp"

using namespace preper;

namespace {

std::string tmp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::vector<std::string> lines_without_timestamps(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) {
    auto j = nlohmann::json::parse(l);
    j.erase("timestamp");
    out.push_back(j.dump());
  }
  return out;
}

}  // namespace

TEST_CASE("survey parameters") {
  CHECK(survey_parameters(1) == std::vector<Rational>{Rational(1)});
  auto p2 = survey_parameters(2);
  CHECK(p2 == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(1, 2), Rational(2)});
  auto p7 = survey_parameters(7);
  CHECK(std::find(p7.begin(), p7.end(), Rational(-5, 6)) != p7.end());
  for (const auto& a : p7) {
    CHECK(parameter_height(a) <= 7);
    CHECK_FALSE(a == Rational(0));
    CHECK_FALSE(a == Rational(-1));
    CHECK_FALSE(a == Rational(-2));
  }
  for (std::size_t i = 1; i < p7.size(); ++i) CHECK(parameter_height(p7[i - 1]) <= parameter_height(p7[i]));
  // Count oracle: reduced p/q with max(|p|, q) <= 7, minus the three exclusions.
  std::size_t n = 0;
  for (long q = 1; q <= 7; ++q)
    for (long p = -7; p <= 7; ++p) n += std::gcd(std::labs(p), q) == 1;
  CHECK(p7.size() == n - 3);
}

TEST_CASE("survey records") {
  auto r = survey_record(Rational(-5, 6), 4);
  CHECK(r.classification == "R3P2");
  CHECK(r.vertices == 7);
  CHECK(r.periodic.at(3) == 3);
  CHECK(r.extra_long_periodic == 0);
  CHECK(survey_record(Rational(1), 4).classification == "R3P1");
  auto back = SurveyRecord::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
}

TEST_CASE("survey is resumable and deterministic") {
  const auto a = tmp_path("preper_survey_a.jsonl"), b = tmp_path("preper_survey_b.jsonl");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  SurveyOptions o;
  o.height = 6;
  o.path = a;
  auto s1 = run_survey(o);
  CHECK(s1.computed == s1.parameters);
  auto s2 = run_survey(o);
  CHECK(s2.computed == 0);
  CHECK(s2.resumed == s1.parameters);
  CHECK(s2.histogram == s1.histogram);

  // A torn final line is dropped and recomputed.
  std::filesystem::copy_file(a, b);
  std::filesystem::resize_file(b, std::filesystem::file_size(b) - 10);
  o.path = b;
  o.jobs = 3;
  auto s3 = run_survey(o);
  CHECK(s3.computed == 1);
  CHECK(lines_without_timestamps(a) == lines_without_timestamps(b));

  o.kernel = Kernel::serial;
  o.path.clear();
  auto s4 = run_survey(o);
  CHECK(s4.histogram == s1.histogram);
  CHECK(s4.findings.empty());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("a corrupt survey file is an error, not a silent skip") {
  const auto a = tmp_path("preper_survey_bad.jsonl");
  {
    std::ofstream out(a);
    out << "{\"a\": \"1\"}\n";
  }
  SurveyOptions o;
  o.height = 2;
  o.path = a;
  CHECK_THROWS_AS(run_survey(o), std::runtime_error);
  std::filesystem::remove(a);
}

TEST_CASE("classify_map") {
  auto c = classify_map(parse_map("(5*z^2-11*z+6)/(5*z^2)"));
  CHECK(c.in_family);
  CHECK(c.classification.exact_id == "R3P5");
  CHECK(c.graph.graph.size() == 11);
  CHECK(c.extra_long_periodic().empty());
  CHECK(c.to_json().at("vertices") == 11);
  auto outside = classify_map(parse_map("z^2"));
  CHECK_FALSE(outside.in_family);
  CHECK(outside.to_json().at("status") == "outside family");
  CHECK(classify_map(parse_map("(z^2+5*z-6)/z^2")).classification.exact_id == "R3P2");
}

TEST_CASE("claims manifest") {
  CHECK(valid_claim_selector("all"));
  CHECK(valid_claim_selector("hasse"));
  CHECK(valid_claim_selector("app.D_F5"));
  CHECK_FALSE(valid_claim_selector("nothing"));
  auto r = verify_claims("hasse");
  REQUIRE(r.results.size() == 1);
  CHECK(r.ok());
  auto d = verify_claims("dynatomic", 2);
  CHECK(d.ok());
  for (const auto& c : d.results) CHECK(c.status == claim_status::pass);
  auto j = d.to_json();
  CHECK(j.at("claims").at(0).contains("provenance"));
  auto x = verify_claims("app.singular.99563").results.at(0);
  CHECK(x.status == claim_status::budget);
  CHECK_FALSE(x.failed());
  auto inv = verify_claims("app.involution").results.at(0);
  CHECK(inv.status == claim_status::fail);
  CHECK(verify_claims("app.involution_root_sum").results.at(0).status == claim_status::pass);
}

TEST_CASE("every claim runs without an internal error") {
  auto r = verify_claims("all");
  for (const auto& c : r.results) {
    CAPTURE(c.id);
    CAPTURE(c.detail);
    CHECK(c.status != claim_status::error);
  }
}
