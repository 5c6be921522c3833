// preper: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "preper/algebra/parser.hpp"
#include "preper/app/classify.hpp"
#include "preper/app/survey.hpp"
#include "preper/claims/claims.hpp"
#include "preper/dynatomic/families.hpp"
#include "preper/graphcat/canonical.hpp"
#include "preper/graphcat/catalog.hpp"
#include "preper/graphcat/graph_io.hpp"
#include "preper/p1dyn/parse_map.hpp"

using namespace preper;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kClaimFailure = 1, kUsage = 2;

struct Globals {
  int max_period = 4;
  std::string format = "text";
  int jobs = 1;
  bool json() const { return format == "json"; }
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_classify(const Globals& g, const std::string& text, bool dot) {
  auto c = classify_map(parse_map(text), g.max_period);
  if (dot) {
    if (!c.in_family) {
      std::cerr << "outside family: no graph to draw\n";
      return kUsage;
    }
    std::cout << to_dot(c.graph.graph, c.classification.describe());
    return kOk;
  }
  emit(g, c.to_json(), c.to_text());
  return kOk;
}

int cmd_dynatomic(const Globals& g, char fam_id, int n, const std::string& at) {
  if (n < 1 || n > g.max_period) throw CLI::ValidationError("n", "must be in 1.." + std::to_string(g.max_period));
  const auto& fam = family(fam_id);
  auto d = family_dynatomic(fam, n);
  json j{{"family", std::string(1, fam_id)}, {"parameter", fam.param}, {"n", n}, {"degree", d.form.degree}};
  std::ostringstream os;
  if (at.empty()) {
    j["polynomial"] = to_string(d.poly(), "z", fam.param);
    os << "Phi*_" << n << " (family " << fam_id << ", parameter " << fam.param << "), formal degree " << d.form.degree
       << ":\n" << j["polynomial"].get<std::string>() << "\n";
  } else {
    Rational v = Rational::parse(at);
    QPoly s = specialize_inner(d.poly(), v);
    j["at"] = v.to_string();
    j["polynomial"] = to_string(s, "z");
    os << "Phi*_" << n << " at " << fam.param << " = " << v.to_string() << ":\n" << to_string(s, "z") << "\n";
  }
  emit(g, j, os.str());
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& selector) {
  if (!valid_claim_selector(selector)) throw CLI::ValidationError("selector", "unknown selector " + selector);
  auto r = verify_claims(selector, g.jobs);
  emit(g, r.to_json(), r.to_text());
  return r.ok() ? kOk : kClaimFailure;
}

int cmd_survey(const Globals& g, int height, const std::string& out, int alarm) {
  SurveyOptions o;
  o.height = height;
  o.max_period = g.max_period;
  o.jobs = g.jobs;
  o.path = out;
  o.vertex_alarm = alarm;
  auto s = run_survey(o);
  emit(g, s.to_json(), s.to_text());
  return kOk;
}

int cmd_dot(const std::string& input, const std::string& graph_file, const std::string& entry) {
  int given = !input.empty() + !graph_file.empty() + !entry.empty();
  if (given != 1) throw CLI::ValidationError("dot", "give exactly one of MAP, --graph, --catalog");
  if (!entry.empty()) {
    std::cout << to_dot(catalog_entry(entry).graph, entry);
    return kOk;
  }
  if (!graph_file.empty()) {
    std::ifstream in(graph_file);
    if (!in) throw std::runtime_error("cannot read " + graph_file);
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str().find_first_not_of(" \t\r\n") == std::string::npos) throw std::invalid_argument(graph_file + ": empty graph file");
    std::cout << to_dot(graph_from_json(json::parse(ss.str())), graph_file);
    return kOk;
  }
  auto c = classify_map(parse_map(input), 4);
  if (!c.in_family) throw std::invalid_argument("outside family: no graph to draw");
  std::cout << to_dot(c.graph.graph, c.classification.describe());
  return kOk;
}

int cmd_catalog(const Globals& g, const std::string& id) {
  json j;
  std::ostringstream os;
  j["checksum"] = catalog_checksum();
  j["checksum_ok"] = catalog_checksum() == catalog_recorded_checksum();
  json es = json::array();
  for (const auto& e : catalog()) {
    if (!id.empty() && e.id != id) continue;
    json x{{"id", e.id}, {"realized", e.realized}, {"vertices", e.graph.size()}, {"code", e.code}};
    if (e.genus) x["genus"] = *e.genus;
    if (!e.example_map.empty()) x["example_map"] = e.example_map;
    if (!id.empty()) x["graph"] = graph_to_json(e.graph);
    es.push_back(x);
    os << e.id << "  " << (e.realized ? "realized" : "not realized") << ", " << e.graph.size() << " vertices";
    if (e.genus) os << ", genus " << *e.genus;
    if (!e.example_map.empty()) os << ", e.g. " << e.example_map;
    os << "\n";
  }
  if (!id.empty() && es.empty()) throw CLI::ValidationError("id", "no catalog entry " + id);
  j["entries"] = es;
  os << "checksum " << catalog_checksum() << (j["checksum_ok"].get<bool>() ? " (matches record)" : " (MISMATCH)") << "\n";
  emit(g, j, os.str());
  return j["checksum_ok"].get<bool>() ? kOk : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preperiodic points of quadratic maps with a rational critical 3-cycle"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-period", g.max_period, "Largest period searched")->check(CLI::Range(1, 6));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string map_text, selector = "all", out_path, graph_file, entry, at, fam = "A";
  bool dot = false;
  int n = 1, height = 1, alarm = 11;

  auto* classify = app.add_subcommand("classify", "Classify the preperiodicity graph of a map");
  classify->add_option("map", map_text, "Rational function in z")->required();
  classify->add_flag("--dot", dot, "Print the graph as DOT");

  auto* dyn = app.add_subcommand("dynatomic", "Print a dynatomic polynomial of a family");
  dyn->add_option("n", n, "Period")->required();
  dyn->add_option("--family", fam, "Family A, B, C, D or T")->check(CLI::IsMember({"A", "B", "C", "D", "T"}));
  dyn->add_option("--at", at, "Specialise the parameter");

  auto* verify = app.add_subcommand("verify", "Run the claims manifest");
  verify->add_option("selector", selector, "all, dynatomic, curves, appendix, hasse, classify or a claim id");

  auto* survey = app.add_subcommand("survey", "Classify phi_a for every a up to a height bound");
  survey->add_option("--height,-H", height, "Height bound")->required()->check(CLI::PositiveNumber);
  survey->add_option("--out,-o", out_path, "JSON lines file (resumable)");
  survey->add_option("--alarm", alarm, "Vertex count that is reported as a finding when exceeded");

  auto* dotcmd = app.add_subcommand("dot", "Emit a graph in DOT");
  dotcmd->add_option("map", map_text, "Rational function in z");
  dotcmd->add_option("--graph", graph_file, "Graph JSON file");
  dotcmd->add_option("--catalog", entry, "Catalog entry id");

  auto* cat = app.add_subcommand("catalog", "List the graph catalog");
  cat->add_option("id", entry, "Show one entry");

  for (auto* s : {classify, dyn, verify, survey, dotcmd, cat}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(g, map_text, dot);
    if (*dyn) return cmd_dynatomic(g, fam.at(0), n, at);
    if (*verify) return cmd_verify(g, selector);
    if (*survey) return cmd_survey(g, height, out_path, alarm);
    if (*dotcmd) return cmd_dot(map_text, graph_file, entry);
    if (*cat) return cmd_catalog(g, entry);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClaimFailure;
  }
  return kUsage;
}
