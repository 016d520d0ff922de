#include "toric/json_io.hpp"

#include <cctype>
#include <limits>

#include "toric/error.hpp"

namespace toric::json_io {

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const std::vector<std::vector<std::size_t>>& index_lists) {
  Json a = Json::array();
  for (const auto& l : index_lists) a.push_back(l);
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!is_decimal(s)) throw InputError("not an integer: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_decimal(num) || !is_decimal(den)) throw InputError("not a rational: " + s);
    Integer d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw InputError("zero denominator: " + s);
    Rational q(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
  }
  return Rational(integer_from_json(j));
}

IntVector int_vector_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array()) throw InputError("expected an integer vector, got " + j.dump());
  if (j.size() != expected_size)
    throw InputError("vector " + j.dump() + " should have " + std::to_string(expected_size) + " entries");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

std::vector<IntVector> int_vectors_from_json(const Json& j, std::size_t expected_size) {
  if (!j.is_array()) throw InputError("expected a list of vectors");
  std::vector<IntVector> out;
  for (const auto& v : j) out.push_back(int_vector_from_json(v, expected_size));
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of numbers");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json polytope_to_json(const LatticePolytope& P, bool with_facets) {
  Json j;
  j["lattice"] = to_string(P.lattice().name);
  j["rank"] = P.dim();
  j["vertices"] = to_json(P.vertices());
  if (with_facets) {
    Json fs = Json::array();
    for (const auto& f : P.facets()) {
      Json fj;
      fj["normal"] = to_json(f.normal);
      fj["offset"] = to_json(f.offset);
      fs.push_back(fj);
    }
    j["facets"] = fs;
  }
  return j;
}

namespace {

LatticeTag lattice_from_json(const Json& j, LatticeName fallback) {
  LatticeTag tag{fallback, size_from_json(field(j, "rank"), "rank")};
  if (j.contains("lattice")) {
    const auto& l = j.at("lattice");
    if (l == "M")
      tag.name = LatticeName::M;
    else if (l == "N")
      tag.name = LatticeName::N;
    else
      throw InputError("lattice must be \"M\" or \"N\"");
  }
  return tag;
}

}  // namespace

LatticePolytope polytope_from_json(const Json& j) {
  LatticeTag tag = lattice_from_json(j, LatticeName::M);
  auto vs = int_vectors_from_json(field(j, "vertices"), tag.rank);
  if (vs.empty()) throw InputError("no vertices");
  return hull(vs, tag);
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["lattice"] = to_string(fan.lattice.name);
  j["rank"] = fan.dim();
  j["rays"] = to_json(fan.rays);
  j["max_cones"] = to_json(fan.max_cones);
  return j;
}

bool is_fan_json(const Json& j) { return j.is_object() && j.contains("max_cones"); }

Fan fan_from_json(const Json& j) {
  LatticeTag tag = lattice_from_json(j, LatticeName::N);
  auto rays = int_vectors_from_json(field(j, "rays"), tag.rank);
  const auto& cj = field(j, "max_cones");
  if (!cj.is_array()) throw InputError("max_cones must be a list");
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : cj) {
    if (!c.is_array()) throw InputError("each cone must be a list of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& i : c) idx.push_back(size_from_json(i, "ray index"));
    cones.push_back(idx);
  }
  return make_fan(tag, rays, cones);
}

IntVector divisor_from_json(const Json& j, std::size_t ray_count) {
  const auto& cj = field(j, "coefficients");
  IntVector d(ray_count, 0);
  if (cj.is_array()) return int_vector_from_json(cj, ray_count);
  if (!cj.is_object()) throw InputError("coefficients must be an object keyed by ray index");
  for (const auto& [key, value] : cj.items()) {
    if (!is_decimal(key) || key[0] == '-' || key[0] == '+') throw InputError("bad ray index \"" + key + "\"");
    std::size_t i = std::stoull(key);
    if (i >= ray_count) throw InputError("ray index " + key + " out of range");
    d[i] = integer_from_json(value);
  }
  return d;
}

Json divisor_to_json(const IntVector& coefficients) {
  Json c = Json::object();
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) c[std::to_string(i)] = to_json(coefficients[i]);
  Json j;
  j["coefficients"] = c;
  return j;
}

Json class_to_json(const DivisorClass& c) {
  Json j;
  j["free"] = to_json(c.free);
  j["torsion"] = to_json(c.torsion);
  return j;
}

Json correspondence_to_json(const Correspondence& c) {
  Json j;
  Json points = Json::array(), coords = Json::array();
  for (const auto& e : c.entries) {
    points.push_back(to_json(e.point));
    IntVector v = e.divisor_class.free;
    v.insert(v.end(), e.divisor_class.torsion.begin(), e.divisor_class.torsion.end());
    coords.push_back(to_json(v));
  }
  j["points"] = points;
  j["class_coords"] = coords;
  j["rank"] = c.rank;
  j["torsion"] = to_json(IntVector(c.torsion.begin(), c.torsion.end()));
  j["dominance"] = to_string(c.dominance);
  return j;
}

Json chamber_to_json(const Chamber& c) {
  Json j;
  j["cells"] = to_json(c.triangulation.cells);
  Json cone;
  cone["inequalities"] = to_json(c.cone.inequalities);
  j["cone"] = cone;
  j["phase"] = to_string(c.phase);
  return j;
}

std::string render(const Json& j) { return j.dump() + "\n"; }

}  // namespace toric::json_io
