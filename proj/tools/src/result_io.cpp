#include "picknorm_cli/result_io.hpp"

#include <cmath>
#include <sstream>

#include "picknorm_cli/problem_io.hpp"

namespace picknorm::cli {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json certificate_to_json(const Certificate& cert) {
  json c;
  c["kind"] = cert.kind;
  c["scope"] = std::string(to_string(cert.scope));
  json dual = json::array();
  for (const Complex& b : cert.dual) dual.push_back(complex_to_json(b));
  c["dual"] = dual;
  c["certified_sup"] = number_or_null(cert.certified_sup);
  c["dual_bound"] = number_or_null(cert.dual_bound);
  json primal = json::array();
  for (const Atom& a : cert.primal) {
    primal.push_back({{"location", a.location}, {"coefficient", complex_to_json(a.coefficient)}});
  }
  c["primal"] = primal;
  json stats = json::object();
  for (const auto& [k, v] : cert.stats) stats[k] = number_or_null(v);
  c["stats"] = stats;
  return c;
}

json result_to_json(const InterpolationProblem& problem, const NormResult& result,
                    const ResultConfig& config) {
  json doc;
  doc["norm_lower"] = result.lower;
  doc["norm_upper"] = result.upper;
  doc["sup_floor"] = sup_lower_bound(problem.targets);
  doc["iterations"] = result.iterations;
  doc["certificate"] = certificate_to_json(result.certificate);
  doc["backend_echo"] = problem_to_json(problem);
  doc["timing_ms"] = config.timing_ms ? json(*config.timing_ms) : json(nullptr);
  doc["config_echo"] = {{"tolerance", problem.tolerance},
                        {"tolerance_overridden", config.tolerance_overridden},
                        {"format", config.format}};
  return doc;
}

namespace {

double number_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(key) + ": missing field");
  if (!it->is_number()) throw ParseError(std::string(key) + ": expected a number");
  return it->get<double>();
}

const json& object_field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string(key) + ": missing field");
  if (!it->is_object()) throw ParseError(std::string(key) + ": expected an object");
  return *it;
}

}  // namespace

ResultDocument parse_result_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("(root): expected an object");
  ResultDocument r;
  r.norm_lower = number_field(doc, "norm_lower");
  r.norm_upper = number_field(doc, "norm_upper");
  r.sup_floor = number_field(doc, "sup_floor");
  r.certificate = object_field(doc, "certificate");
  r.backend_echo = object_field(doc, "backend_echo");
  r.config_echo = object_field(doc, "config_echo");
  if (const auto t = doc.find("timing_ms"); t == doc.end()) {
    throw ParseError("timing_ms: missing field");
  } else if (t->is_number()) {
    r.timing_ms = t->get<double>();
  } else if (!t->is_null()) {
    throw ParseError("timing_ms: expected a number or null");
  }
  r.tolerance = number_field(r.config_echo, "tolerance");
  // The echoed problem must itself be a valid problem document.
  const InterpolationProblem echoed = parse_problem(r.backend_echo);
  if (std::abs(sup_lower_bound(echoed.targets) - r.sup_floor) > 1e-15 * std::max(1.0, r.sup_floor)) {
    throw ParseError("sup_floor: does not match the echoed targets");
  }
  return r;
}

void validate_result_document(const ResultDocument& doc) {
  if (doc.norm_lower < doc.sup_floor - doc.tolerance) {
    throw ParseError("norm_lower: below sup_floor - tolerance");
  }
  if (doc.norm_upper < doc.norm_lower) throw ParseError("norm_upper: below norm_lower");
  if (doc.norm_lower < 0.0) throw ParseError("norm_lower: negative");
}

std::string result_csv_header() {
  return "backend,n,norm_lower,norm_upper,sup_floor,gap,iterations,certificate_kind,scope";
}

std::string result_to_csv_row(const InterpolationProblem& problem, const NormResult& result) {
  std::ostringstream os;
  os.precision(17);
  os << backend_name(problem.backend) << ',' << problem.sites.size() << ',' << result.lower << ','
     << result.upper << ',' << sup_lower_bound(problem.targets) << ',' << result.gap() << ','
     << result.iterations << ',' << result.certificate.kind << ','
     << to_string(result.certificate.scope);
  return os.str();
}

json gleason_to_json(const gleason::GleasonReport& report, const gleason::Theorem4Report* t4) {
  json doc;
  doc["backend"] = std::string(backend_name(report.backend));
  json sites = json::array();
  for (const Site& s : report.sites) sites.push_back(site_to_json(s));
  doc["sites"] = sites;
  json dist = json::array();
  json rel = json::array();
  for (std::size_t i = 0; i < report.distances.size(); ++i) {
    json row = json::array();
    json rrow = json::array();
    for (std::size_t j = 0; j < report.distances[i].size(); ++j) {
      row.push_back(json::array({report.distances[i][j].lower, report.distances[i][j].upper}));
      rrow.push_back(i == j ? "self" : std::string(gleason::to_string(report.relation[i][j])));
    }
    dist.push_back(row);
    rel.push_back(rrow);
  }
  doc["distances"] = dist;
  doc["relation"] = rel;
  doc["partition"] = report.partition;
  doc["part_slack"] = report.part_slack;
  doc["search_stall"] = report.search_stall;
  if (t4 != nullptr) {
    json pairs = json::array();
    for (const auto& p : t4->pairs) {
      json jp;
      jp["sites"] = json::array({p.i, p.j});
      jp["np_lower"] = p.np.lower;
      jp["np_upper"] = p.np.upper;
      jp["witness"] = p.witness;
      jp["certified"] = p.certified;
      jp["certified_distance"] = number_or_null(p.certified ? p.certified_distance : NAN);
      if (p.distance) jp["distance"] = json::array({p.distance->lower, p.distance->upper});
      jp["consistent"] = p.consistent;
      pairs.push_back(jp);
    }
    doc["theorem4"] = {{"pairs", pairs},
                       {"any_witness", t4->any_witness},
                       {"all_certified", t4->all_certified},
                       {"passed", t4->passed},
                       {"message", t4->message}};
  }
  return doc;
}

}  // namespace picknorm::cli
