#include "picknorm_cli/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace picknorm::cli {

using nlohmann::json;

namespace {

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(path + ": expected a finite number");
  return d;
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
  return v.get<long long>();
}

const json& require(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + key + ": missing field");
  return *it;
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path + ": expected an array");
  return v;
}

Site parse_site(Backend backend, const json& v, const std::string& path) {
  switch (site_kind_for(backend)) {
    case SiteKind::kDiscPoint: return DiscPoint{parse_complex(v, path)};
    case SiteKind::kCircleAngle: return CircleAngle{as_number(v, path)};
    case SiteKind::kIntegerCharacter: return IntegerCharacter{as_integer(v, path)};
    case SiteKind::kCoordinateIndex: {
      const long long i = as_integer(v, path);
      if (i < 1 || i > 1'000'000) throw ParseError(path + ": coordinate index must be ≥ 1");
      return CoordinateIndex{static_cast<int>(i)};
    }
  }
  throw ParseError(path + ": unsupported site kind");
}

FiniteAlgebra parse_algebra(Backend backend, const json& doc) {
  const std::string base = "backend_params.";
  const auto pit = doc.find("backend_params");
  const json params = pit == doc.end() ? json::object() : *pit;
  if (!params.is_object()) throw ParseError("backend_params: expected an object");

  std::vector<double> weights;
  if (const auto w = params.find("weights"); w != params.end()) {
    require_array(*w, base + "weights");
    for (std::size_t i = 0; i < w->size(); ++i) {
      weights.push_back(as_number((*w)[i], base + "weights[" + std::to_string(i) + "]"));
    }
  }
  std::size_t n = weights.size();
  if (const auto d = params.find("dimension"); d != params.end()) {
    const long long dim = as_integer(*d, base + "dimension");
    if (dim < 1) throw ParseError(base + "dimension: must be at least 1");
    if (!weights.empty() && weights.size() != static_cast<std::size_t>(dim)) {
      throw ParseError(base + "weights: length differs from dimension");
    }
    n = static_cast<std::size_t>(dim);
  }
  if (n == 0) throw ParseError(base + "weights: give weights or a dimension");
  if (weights.empty()) weights.assign(n, 1.0);

  std::vector<std::vector<Complex>> basis;
  if (const auto b = params.find("basis"); b != params.end()) {
    require_array(*b, base + "basis");
    for (std::size_t j = 0; j < b->size(); ++j) {
      const std::string bp = base + "basis[" + std::to_string(j) + "]";
      require_array((*b)[j], bp);
      std::vector<Complex> vec;
      for (std::size_t k = 0; k < (*b)[j].size(); ++k) {
        vec.push_back(parse_complex((*b)[j][k], bp + "[" + std::to_string(k) + "]"));
      }
      basis.push_back(std::move(vec));
    }
  }

  FiniteAlgebra alg;
  alg.weights = std::move(weights);
  alg.basis = std::move(basis);
  switch (backend) {
    case Backend::kFiniteSup: alg.norm_kind = NormKind::kWeightedSup; break;
    case Backend::kFiniteL1: alg.norm_kind = NormKind::kWeightedL1; break;
    default: {
      alg.norm_kind = NormKind::kLp;
      alg.p = as_number(require(params, "p", base), base + "p");
      break;
    }
  }
  return alg;
}

}  // namespace

Complex parse_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {as_number(v, path), 0.0};
  if (!v.is_array() || v.size() != 2) throw ParseError(path + ": expected [re, im]");
  return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

InterpolationProblem parse_problem(const json& doc, bool require_targets) {
  if (!doc.is_object()) throw ParseError("(root): expected an object");
  InterpolationProblem p;
  const json& b = require(doc, "backend", "");
  if (!b.is_string()) throw ParseError("backend: expected a string");
  const auto backend = parse_backend(b.get<std::string>());
  if (!backend) throw ParseError("backend: unknown backend '" + b.get<std::string>() + "'");
  p.backend = *backend;

  const json& sites = require_array(require(doc, "sites", ""), "sites");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    p.sites.push_back(parse_site(p.backend, sites[i], "sites[" + std::to_string(i) + "]"));
  }
  if (const auto t = doc.find("targets"); t != doc.end()) {
    require_array(*t, "targets");
    for (std::size_t i = 0; i < t->size(); ++i) {
      p.targets.push_back(parse_complex((*t)[i], "targets[" + std::to_string(i) + "]"));
    }
  } else if (require_targets) {
    throw ParseError("targets: missing field");
  } else {
    p.targets.assign(p.sites.size(), Complex{});
  }
  if (const auto t = doc.find("tolerance"); t != doc.end()) {
    p.tolerance = as_number(*t, "tolerance");
  }
  if (is_finite_backend(p.backend)) p.algebra = parse_algebra(p.backend, doc);
  return p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("(document): ") + e.what());
  }
}

InterpolationProblem load_problem_file(const std::string& path, bool require_targets) {
  return parse_problem(read_json_file(path), require_targets);
}

json site_to_json(const Site& site) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DiscPoint>) return complex_to_json(s.value);
        if constexpr (std::is_same_v<T, CircleAngle>) return s.radians;
        if constexpr (std::is_same_v<T, IntegerCharacter>) return s.k;
        if constexpr (std::is_same_v<T, CoordinateIndex>) return s.index;
      },
      site);
}

json problem_to_json(const InterpolationProblem& p) {
  json doc;
  doc["backend"] = std::string(backend_name(p.backend));
  json sites = json::array();
  for (const Site& s : p.sites) sites.push_back(site_to_json(s));
  doc["sites"] = sites;
  json targets = json::array();
  for (const Complex& z : p.targets) targets.push_back(complex_to_json(z));
  doc["targets"] = targets;
  doc["tolerance"] = p.tolerance;
  if (p.algebra) {
    json params;
    params["dimension"] = p.algebra->dimension();
    params["weights"] = p.algebra->weights;
    if (p.algebra->norm_kind == NormKind::kLp) params["p"] = p.algebra->p;
    if (!p.algebra->is_full()) {
      json basis = json::array();
      for (const auto& v : p.algebra->basis) {
        json vec = json::array();
        for (const Complex& z : v) vec.push_back(complex_to_json(z));
        basis.push_back(vec);
      }
      params["basis"] = basis;
    }
    doc["backend_params"] = params;
  }
  return doc;
}

}  // namespace picknorm::cli
