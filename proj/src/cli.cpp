#include "toric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/fan.hpp"
#include "toric/json_io.hpp"
#include "toric/mirror.hpp"
#include "toric/polytope.hpp"
#include "toric/secondary.hpp"

namespace toric {

namespace {

using json_io::Json;
using json_io::to_json;

struct Job {
  std::string input;
  std::string rays_file;
  std::string heights_file;
  std::string divisor_file;
  std::string out_file;
  std::uint64_t seed = 0;
  bool chambers = false;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// A list file is either a bare array or an object holding the array under `key`.
const Json& list_field(const Json& j, const char* key, const std::string& path) {
  if (j.is_array()) return j;
  if (j.is_object() && j.contains(key)) return j.at(key);
  throw InputError(path + ": expected a list or an object with \"" + key + "\"");
}

std::optional<std::vector<IntVector>> load_rays(const Job& job, std::size_t dim) {
  if (job.rays_file.empty()) return std::nullopt;
  Json j = load_json(job.rays_file);
  return json_io::int_vectors_from_json(list_field(j, "rays", job.rays_file), dim);
}

std::optional<RatVector> load_heights(const Job& job) {
  if (job.heights_file.empty()) return std::nullopt;
  Json j = load_json(job.heights_file);
  return json_io::rat_vector_from_json(list_field(j, "heights", job.heights_file));
}

LatticePolytope load_polytope(const Job& job) { return json_io::polytope_from_json(load_json(job.input)); }

// Fan input, or the normal fan of a polytope input.
Fan load_fan(const Job& job) {
  Json j = load_json(job.input);
  if (json_io::is_fan_json(j)) return json_io::fan_from_json(j);
  return normal_fan(json_io::polytope_from_json(j));
}

IntVector load_divisor(const Job& job, const Fan& fan) {
  if (job.divisor_file.empty()) return anticanonical(fan).coefficients;
  return json_io::divisor_from_json(load_json(job.divisor_file), fan.rays.size());
}

PointConfiguration load_configuration(const Job& job) {
  Json j = load_json(job.input);
  if (j.is_object() && j.contains("points") && !j.contains("vertices")) {
    const auto& p = j.at("points");
    if (!p.is_array() || p.empty() || !p[0].is_array()) throw InputError("points must be a nonempty list of vectors");
    return lift(json_io::int_vectors_from_json(p, p[0].size()), true);
  }
  return lift(reduced_points(json_io::polytope_from_json(j)), true);
}

MirrorPair load_pair(const Job& job) {
  auto P = load_polytope(job);
  return make_mirror_pair(P, load_rays(job, P.dim()), load_heights(job), job.seed);
}

Json cone_json(const CplCone& c) {
  Json j;
  j["rank"] = c.ambient.free_rank;
  j["torsion"] = to_json(IntVector(c.ambient.torsion.begin(), c.ambient.torsion.end()));
  j["inequalities"] = to_json(c.inequalities);
  j["equations"] = to_json(c.equations);
  j["full_dimensional"] = c.full_dimensional;
  return j;
}

Json cmd_reflexive(const Job& job) {
  Json j;
  j["reflexive"] = is_reflexive(load_polytope(job));
  return j;
}

Json cmd_polar(const Job& job) { return json_io::polytope_to_json(polar(load_polytope(job)), true); }

Json cmd_points(const Job& job) {
  auto pts = lattice_points(load_polytope(job));
  Json j;
  j["count"] = pts.size();
  j["points"] = to_json(pts);
  return j;
}

Json cmd_classify(const Job& job) {
  auto P = load_polytope(job);
  auto c = classify_points(P);
  Json j;
  j["origin_interior"] = c.origin_interior;
  j["vertices"] = to_json(c.vertices);
  j["interior"] = to_json(c.interior_points);
  j["facet_interior"] = to_json(c.facet_interior_points);
  j["boundary_other"] = to_json(c.boundary_nonfacet_points);
  j["reduced"] = to_json(reduced_points(P));
  return j;
}

Json cmd_normalfan(const Job& job) { return json_io::fan_to_json(normal_fan(load_polytope(job))); }

Json cmd_subdivide(const Job& job) {
  Json j = load_json(job.input);
  Fan fan;
  std::vector<IntVector> ray_set;
  if (json_io::is_fan_json(j)) {
    fan = json_io::fan_from_json(j);
    ray_set = fan.rays;
  } else {
    auto P = json_io::polytope_from_json(j);
    fan = normal_fan(P);
    if (is_reflexive(P)) {
      for (const auto& a : reduced_points(polar(P)))
        if (!is_zero(a)) ray_set.push_back(a);
      std::sort(ray_set.begin(), ray_set.end());
    } else {
      ray_set = fan.rays;
    }
  }
  if (auto r = load_rays(job, fan.dim())) ray_set = *r;
  return json_io::fan_to_json(subdivide(fan, ray_set, load_heights(job), job.seed));
}

Json cmd_classgroup(const Job& job) {
  Fan fan = load_fan(job);
  auto pres = class_group(fan);
  if (!job.divisor_file.empty()) return json_io::class_to_json(class_of_coefficients(pres, load_divisor(job, fan)));
  Json j;
  j["rank"] = pres.free_rank();
  j["torsion"] = to_json(IntVector(pres.torsion().begin(), pres.torsion().end()));
  Json classes = Json::array();
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    IntVector e(fan.rays.size(), 0);
    e[i] = 1;
    classes.push_back(json_io::class_to_json(class_of_coefficients(pres, e)));
  }
  j["ray_classes"] = classes;
  return j;
}

Json cmd_roots(const Job& job) {
  Fan fan = load_fan(job);
  auto r = roots(fan);
  Json j;
  j["count"] = r.size();
  j["roots"] = to_json(r);
  j["aut_dimension"] = aut_dimension(fan);
  j["dominance"] = to_string(dominance_status(fan));
  return j;
}

Json cmd_sections(const Job& job) {
  Fan fan = load_fan(job);
  auto s = sections(make_divisor(fan, load_divisor(job, fan)));
  Json j;
  j["divisor"] = json_io::divisor_to_json(s.divisor.coefficients);
  j["count"] = s.points.size();
  j["points"] = to_json(s.points);
  j["exponents"] = to_json(s.exponents);
  j["polytope"] = s.polytope ? json_io::polytope_to_json(*s.polytope, false) : Json(nullptr);
  return j;
}

Json cmd_mdmm(const Job& job) { return json_io::correspondence_to_json(correspondence(load_pair(job))); }

Json cmd_hodge(const Job& job) {
  auto pair = load_pair(job);
  auto mirror = swapped(pair, job.seed);
  Json j;
  j["h11_toric"] = h11_toric(pair);
  j["hd11_poly"] = hd11_poly(pair);
  Json m;
  m["h11_toric"] = h11_toric(mirror);
  m["hd11_poly"] = hd11_poly(mirror);
  j["mirror"] = m;
  return j;
}

Json cmd_cpl(const Job& job) {
  Json j = load_json(job.input);
  if (json_io::is_fan_json(j)) return cone_json(cpl_cone(json_io::fan_from_json(j)));
  auto k = kaehler_moduli(load_pair(job));
  Json out = cone_json(k.cpl);
  out["torus_rank"] = k.torus_rank;
  out["large_radius"] = k.large_radius;
  return out;
}

Json cmd_secondary(const Job& job) {
  auto config = load_configuration(job);
  auto chambers = enumerate_chambers(config);
  Json j;
  j["points"] = to_json(config.points);
  j["count"] = chambers.size();
  j["geometric"] = std::count_if(chambers.begin(), chambers.end(),
                                 [](const Chamber& c) { return c.phase == Phase::Geometric; });
  if (job.chambers) {
    Json cs = Json::array();
    for (const auto& c : chambers) cs.push_back(json_io::chamber_to_json(c));
    j["chambers"] = cs;
  }
  return j;
}

Json cmd_phase(const Job& job) {
  auto config = load_configuration(job);
  auto h = load_heights(job);
  if (!h) throw InputError("phase requires --heights");
  return json_io::chamber_to_json(chamber_of(config, *h));
}

struct Command {
  const char* name;
  const char* help;
  Json (*run)(const Job&);
  bool rays_heights_seed;
  bool divisor;
  bool chambers;
  bool heights_only;
};

const Command kCommands[] = {
    {"reflexive", "Test whether a polytope is reflexive", cmd_reflexive, false, false, false, false},
    {"polar", "Polar polytope with its facets", cmd_polar, false, false, false, false},
    {"points", "Lattice points of a polytope", cmd_points, false, false, false, false},
    {"classify", "Classify lattice points by the faces containing them", cmd_classify, false, false, false, false},
    {"normalfan", "Normal fan of a polytope", cmd_normalfan, false, false, false, false},
    {"subdivide", "Simplicial regular refinement of a fan", cmd_subdivide, true, false, false, false},
    {"classgroup", "Divisor class group of a fan", cmd_classgroup, false, true, false, false},
    {"roots", "Roots of a complete fan", cmd_roots, false, false, false, false},
    {"sections", "Global sections of a divisor", cmd_sections, false, true, false, false},
    {"mdmm", "Monomial-divisor mirror correspondence", cmd_mdmm, true, false, false, false},
    {"hodge", "Toric and polynomial (1,1) counts of a mirror pair", cmd_hodge, true, false, false, false},
    {"cpl", "Cone of convex piecewise linear functions", cmd_cpl, true, false, false, false},
    {"secondary", "Chambers of the secondary fan", cmd_secondary, false, false, true, false},
    {"phase", "Chamber and phase of a height vector", cmd_phase, false, false, false, true},
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric mirror-symmetry computations on JSON inputs", "toric-mirror"};
  app.require_subcommand(1);
  Job job;
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", job.input, "Input JSON file")->required();
    sub->add_option("--out", job.out_file, "Write the result here instead of standard output");
    if (c.rays_heights_seed) {
      sub->add_option("--rays", job.rays_file, "JSON list of ray generators");
      sub->add_option("--heights", job.heights_file, "JSON list of heights, one per ray");
      sub->add_option("--seed", job.seed, "Seed for generic heights");
    }
    if (c.heights_only) sub->add_option("--heights", job.heights_file, "JSON list of heights, one per point")->required();
    if (c.divisor) sub->add_option("--divisor", job.divisor_file, "Divisor JSON (default anticanonical)");
    if (c.chambers) sub->add_flag("--chambers", job.chambers, "List every chamber");
    by_app[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const Command* cmd = by_app.at(app.get_subcommands().front());
  try {
    std::string text = json_io::render(cmd->run(job));
    if (job.out_file.empty()) {
      out << text;
    } else {
      std::ofstream f(job.out_file, std::ios::binary);
      if (!f) throw InputError("cannot write " + job.out_file);
      f << text;
    }
    return 0;
  } catch (const InputError& e) {
    err << "toric-mirror " << cmd->name << ": " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "toric-mirror " << cmd->name << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "toric-mirror " << cmd->name << ": internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace toric
