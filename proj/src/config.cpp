#include "chemo/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace chemo {

namespace {

using json = nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!keys.count(key)) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

const json& require_object(const json& parent, const char* key, const std::string& where) {
  if (!parent.contains(key)) throw ConfigError(where + ": missing required section '" + key + "'");
  const json& obj = parent.at(key);
  if (!obj.is_object()) throw ConfigError(where + "." + key + ": expected an object");
  return obj;
}

double get_number(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing required field '" + key + "'");
  const json& value = obj.at(key);
  if (!value.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return value.get<double>();
}

double get_number_or(const json& obj, const char* key, const std::string& where, double fallback) {
  return obj.contains(key) ? get_number(obj, key, where) : fallback;
}

int get_int_or(const json& obj, const char* key, const std::string& where, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!value.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return value.get<int>();
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing required field '" + key + "'");
  const json& value = obj.at(key);
  if (!value.is_string()) throw ConfigError(where + "." + key + ": expected a string");
  return value.get<std::string>();
}

DiffusionSpec parse_diffusion(const json& obj) {
  const std::string where = "diffusion";
  reject_unknown_keys(obj, where, {"kind", "p"});
  const std::string kind = get_string(obj, "kind", where);
  const bool needs_p = kind == "power_one_plus_u" || kind == "power_u";
  if (needs_p && !obj.contains("p")) throw ConfigError(where + ": kind '" + kind + "' needs exponent 'p'");
  if (!needs_p && obj.contains("p")) throw ConfigError(where + ": kind '" + kind + "' takes no exponent 'p'");
  try {
    return DiffusionSpec::from_name(kind, needs_p ? get_number(obj, "p", where) : -1.0);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ".kind: " + e.what());
  }
}

ICSpec parse_initial_condition(const json& obj) {
  const std::string where = "initial_condition";
  const std::string kind = get_string(obj, "kind", where);
  const double mass = get_number(obj, "mass", where);
  if (kind == "constant") {
    reject_unknown_keys(obj, where, {"kind", "mass"});
    return ConstantIC{mass};
  }
  if (kind == "cosine_bump") {
    reject_unknown_keys(obj, where, {"kind", "mass", "amplitude", "frequency"});
    return CosineBumpIC{mass, get_number(obj, "amplitude", where), get_number_or(obj, "frequency", where, 1.0)};
  }
  if (kind == "gaussian_bump") {
    reject_unknown_keys(obj, where, {"kind", "mass", "center", "width", "floor"});
    return GaussianBumpIC{mass, get_number(obj, "center", where), get_number(obj, "width", where),
                          get_number(obj, "floor", where)};
  }
  throw ConfigError(where + ".kind: unknown initial condition '" + kind +
                    "' (expected constant, cosine_bump or gaussian_bump)");
}

SolverConfig parse_solver(const json& obj) {
  const std::string where = "solver";
  reject_unknown_keys(obj, where,
                      {"cfl_diff", "cfl_adv", "dt_min", "blowup_threshold", "record_every", "v_norm_exponent"});
  SolverConfig s;
  s.cfl_diff = get_number_or(obj, "cfl_diff", where, s.cfl_diff);
  s.cfl_adv = get_number_or(obj, "cfl_adv", where, s.cfl_adv);
  s.dt_min = get_number_or(obj, "dt_min", where, s.dt_min);
  s.blowup_threshold = get_number_or(obj, "blowup_threshold", where, s.blowup_threshold);
  s.record_every = get_int_or(obj, "record_every", where, s.record_every);
  s.v_norm_exponent = get_number_or(obj, "v_norm_exponent", where, s.v_norm_exponent);
  return s;
}

}  // namespace

void RunManifest::validate() const {
  try {
    problem.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("problem: ") + e.what());
  }
  try {
    solver.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("solver: ") + e.what());
  }
  if (n_cells < 4) throw ConfigError("grid.n_cells: must be >= 4");
  if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
    throw ConfigError("output.snapshot_times: must be sorted ascending");
  }
  for (double t : snapshot_times) {
    if (!(t >= 0.0 && t <= problem.t_end)) {
      throw ConfigError("output.snapshot_times: every time must lie in [0, t_end]");
    }
  }
  const Field u0 = realize_initial_condition(problem.initial_condition, Grid(n_cells));
  if (!(solver.blowup_threshold > u0.max())) {
    std::ostringstream msg;
    msg << "solver.blowup_threshold: must exceed max u0 = " << u0.max();
    throw ConfigError(msg.str());
  }
}

RunManifest parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("document: expected a JSON object at top level");
  reject_unknown_keys(doc, "document",
                      {"scenario", "variant", "diffusion", "initial_condition", "t_end", "grid", "solver", "output"});

  RunManifest m;
  if (doc.contains("scenario")) m.scenario = get_string(doc, "scenario", "document");
  if (doc.contains("variant")) {
    try {
      m.problem.variant = variant_from_string(get_string(doc, "variant", "document"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("variant: ") + e.what());
    }
  }
  m.problem.diffusion = parse_diffusion(require_object(doc, "diffusion", "document"));
  m.problem.initial_condition = parse_initial_condition(require_object(doc, "initial_condition", "document"));
  m.problem.t_end = get_number(doc, "t_end", "document");
  if (doc.contains("grid")) {
    const json& grid = require_object(doc, "grid", "document");
    reject_unknown_keys(grid, "grid", {"n_cells"});
    m.n_cells = get_int_or(grid, "n_cells", "grid", m.n_cells);
  }
  if (doc.contains("solver")) m.solver = parse_solver(require_object(doc, "solver", "document"));
  if (doc.contains("output")) {
    const json& out = require_object(doc, "output", "document");
    reject_unknown_keys(out, "output", {"directory", "snapshot_times"});
    if (out.contains("directory")) m.output_dir = get_string(out, "directory", "output");
    if (out.contains("snapshot_times")) {
      const json& times = out.at("snapshot_times");
      if (!times.is_array()) throw ConfigError("output.snapshot_times: expected an array of numbers");
      for (const json& t : times) {
        if (!t.is_number()) throw ConfigError("output.snapshot_times: expected an array of numbers");
        m.snapshot_times.push_back(t.get<double>());
      }
    }
  }
  if (m.output_dir.empty()) m.output_dir = std::filesystem::path("out") / m.scenario;
  m.validate();
  return m;
}

RunManifest load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  // The file stem names the scenario unless the document says otherwise.
  json probe = json::parse(text, nullptr, false, true);
  if (probe.is_object() && !probe.contains("scenario")) {
    probe["scenario"] = path.stem().string();
    text = probe.dump();
  }
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace chemo
