#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "preper/algebra/kernel.hpp"
#include "preper/algebra/rational.hpp"

namespace preper {

/// Reduced p/q with max(|p|, q) <= height, a not in {0, -1, -2}, ordered by
/// height, then numerator, then denominator.
std::vector<Rational> survey_parameters(int height);
int parameter_height(const Rational& a);

struct SurveyRecord {
  Rational a;
  std::string classification;
  int vertices = 0;
  std::map<int, int> periodic;  // period -> number of rational periodic points
  int extra_long_periodic = 0;  // period >= 3 points outside the critical cycle
  std::string timestamp;
  std::string version;

  nlohmann::json to_json() const;
  static SurveyRecord from_json(const nlohmann::json& j);
};

SurveyRecord survey_record(const Rational& a, int max_period);

struct SurveyOptions {
  int height = 1;
  int max_period = 4;
  int vertex_alarm = 11;
  int jobs = 1;
  Kernel kernel = Kernel::openmp;
  std::string path;  // JSON lines; empty keeps records in memory only
};

struct SurveySummary {
  std::size_t parameters = 0;
  std::size_t computed = 0;  // new this run
  std::size_t resumed = 0;   // already in the file
  std::map<std::string, std::size_t> histogram;
  int max_vertices = 0;
  std::vector<std::string> findings;  // unknown classes, long cycles, vertex alarms
  std::vector<SurveyRecord> records;  // in parameter order

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Computes the missing records, appends them to opts.path in parameter
/// order, and summarises every record in range.
SurveySummary run_survey(const SurveyOptions& opts);

extern const char* const kToolVersion;

}  // namespace preper
