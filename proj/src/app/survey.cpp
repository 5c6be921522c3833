#include "preper/app/survey.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "preper/app/classify.hpp"

namespace preper {

const char* const kToolVersion = "0.1.0";

namespace {

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool is_catalog_class(const std::string& id) {
  static const std::set<std::string> ok{"R3P0", "R3P1", "R3P2", "R3P3", "R3P4", "R3P5"};
  return ok.count(id) > 0;
}

// Existing records keyed by parameter; a torn last line (interrupted write) is cut off.
std::map<std::string, SurveyRecord> load_existing(const std::string& path) {
  std::map<std::string, SurveyRecord> out;
  if (path.empty() || !std::filesystem::exists(path)) return out;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::size_t keep = text.size();
  if (!text.empty() && text.back() != '\n') {
    keep = text.rfind('\n');
    keep = keep == std::string::npos ? 0 : keep + 1;
  }
  std::istringstream lines(text.substr(0, keep));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto r = SurveyRecord::from_json(nlohmann::json::parse(line));
      out.emplace(r.a.to_string(), std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad record: " + e.what());
    }
  }
  in.close();
  if (keep != text.size()) std::filesystem::resize_file(path, keep);
  return out;
}

}  // namespace

int parameter_height(const Rational& a) {
  Integer n = abs(a.num());
  Integer d = a.den();
  return static_cast<int>((n > d ? n : d).get_si());
}

std::vector<Rational> survey_parameters(int height) {
  std::vector<Rational> out;
  for (long q = 1; q <= height; ++q)
    for (long p = -height; p <= height; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      if (q == 1 && (p == 0 || p == -1 || p == -2)) continue;
      out.emplace_back(Integer(p), Integer(q));
    }
  std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) {
    int hx = parameter_height(x), hy = parameter_height(y);
    if (hx != hy) return hx < hy;
    if (x.num() != y.num()) return x.num() < y.num();
    return x.den() < y.den();
  });
  return out;
}

nlohmann::json SurveyRecord::to_json() const {
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [k, n] : periodic) per[std::to_string(k)] = n;
  return {{"a", a.to_string()},         {"classification", classification},
          {"vertices", vertices},       {"periodic", per},
          {"extra_long_periodic", extra_long_periodic},
          {"timestamp", timestamp},     {"version", version}};
}

SurveyRecord SurveyRecord::from_json(const nlohmann::json& j) {
  SurveyRecord r;
  r.a = Rational::parse(j.at("a").get<std::string>());
  r.classification = j.at("classification").get<std::string>();
  r.vertices = j.at("vertices").get<int>();
  for (const auto& [k, n] : j.at("periodic").items()) r.periodic[std::stoi(k)] = n.get<int>();
  r.extra_long_periodic = j.value("extra_long_periodic", 0);
  r.timestamp = j.value("timestamp", "");
  r.version = j.value("version", "");
  return r;
}

SurveyRecord survey_record(const Rational& a, int max_period) {
  SurveyRecord r;
  r.a = a;
  auto c = classify_parameter(a, max_period);
  r.classification = c.in_family ? c.classification.describe() : "outside family";
  r.vertices = c.graph.graph.size();
  for (const auto& p : c.graph.periodic) ++r.periodic[p.period];
  r.extra_long_periodic = static_cast<int>(c.extra_long_periodic().size());
  r.timestamp = utc_now();
  r.version = kToolVersion;
  return r;
}

SurveySummary run_survey(const SurveyOptions& opts) {
  if (opts.height < 1) throw std::invalid_argument("height must be at least 1");
  SurveySummary s;
  const auto params = survey_parameters(opts.height);
  s.parameters = params.size();
  auto existing = load_existing(opts.path);

  std::vector<std::size_t> missing;
  std::vector<std::optional<SurveyRecord>> slot(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto it = existing.find(params[i].to_string());
    if (it != existing.end()) {
      slot[i] = it->second;
      ++s.resumed;
    } else {
      missing.push_back(i);
    }
  }

  std::ofstream out;
  if (!opts.path.empty()) {
    out.open(opts.path, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opts.path);
  }
  // Blocks are computed in parallel, then appended in parameter order, so an
  // interrupted run loses at most one block and the file order is fixed.
  const std::size_t block = 256;
  for (std::size_t b = 0; b < missing.size(); b += block) {
    const std::size_t e = std::min(missing.size(), b + block);
    std::vector<std::string> errors(e - b);
    auto work = [&](std::size_t k) {
      const std::size_t i = missing[b + k];
      try {
        slot[i] = survey_record(params[i], opts.max_period);
      } catch (const std::exception& ex) {
        errors[k] = ex.what();
      }
    };
    if (opts.kernel == Kernel::openmp) {
      const long n = static_cast<long>(e - b);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.jobs))
      for (long k = 0; k < n; ++k) work(static_cast<std::size_t>(k));
    } else {
      for (std::size_t k = 0; k < e - b; ++k) work(k);
    }
    for (std::size_t k = 0; k < e - b; ++k) {
      const std::size_t i = missing[b + k];
      if (!errors[k].empty()) {
        s.findings.push_back("a = " + params[i].to_string() + ": error: " + errors[k]);
        continue;
      }
      ++s.computed;
      if (out) out << slot[i]->to_json().dump() << "\n";
    }
    if (out) {
      out.flush();
      if (!out) throw std::runtime_error("write failed: " + opts.path);
    }
  }

  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!slot[i]) continue;
    const auto& r = *slot[i];
    ++s.histogram[r.classification];
    s.max_vertices = std::max(s.max_vertices, r.vertices);
    const std::string who = "a = " + r.a.to_string() + ": ";
    if (!is_catalog_class(r.classification)) s.findings.push_back(who + "classification " + r.classification);
    if (r.extra_long_periodic > 0)
      s.findings.push_back(who + std::to_string(r.extra_long_periodic) + " periodic points of period >= 3 off the critical cycle");
    if (r.vertices > opts.vertex_alarm) s.findings.push_back(who + std::to_string(r.vertices) + " preperiodic points");
    s.records.push_back(r);
  }
  return s;
}

nlohmann::json SurveySummary::to_json() const {
  return {{"parameters", parameters}, {"computed", computed},         {"resumed", resumed},
          {"histogram", histogram},   {"max_vertices", max_vertices}, {"findings", findings}};
}

std::string SurveySummary::to_text() const {
  std::ostringstream os;
  os << parameters << " parameters (" << computed << " computed, " << resumed << " resumed)\n";
  for (const auto& [k, n] : histogram) os << "  " << k << ": " << n << "\n";
  os << "max vertices: " << max_vertices << "\n";
  if (findings.empty()) os << "findings: none\n";
  for (const auto& f : findings) os << "FINDING " << f << "\n";
  return os.str();
}

}  // namespace preper
