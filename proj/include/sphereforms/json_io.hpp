#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sphereforms/groups.hpp"
#include "sphereforms/isochrony.hpp"
#include "sphereforms/isotropy.hpp"
#include "sphereforms/oneform.hpp"
#include "sphereforms/polyhedra.hpp"
#include "sphereforms/portrait.hpp"

namespace sphereforms {

using nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::domain_error("json: expected a two-element [re, im] array");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace detail {

inline double nudge(double v, int steps) {
  double t = v;
  for (; steps > 0; --steps) t = std::nextafter(t, 1e308);
  for (; steps < 0; ++steps) t = std::nextafter(t, -1e308);
  return t;
}

inline bool same_pair(const SpherePoint& a, const SpherePoint& b) {
  return a.num() == b.num() && a.den() == b.den();
}

/// Planar value whose re-parse reproduces the projective pair bitwise. For
/// points stored as [1 : 1/z] the rounded reciprocal is not involutive, so
/// search the ulp neighborhood of value() for an exact preimage; two chained
/// complex reciprocals drift by several ulps per component, hence the radius.
inline Complex planar_exact(const SpherePoint& p) {
  const Complex z0 = p.value();
  if (same_pair(SpherePoint::from_complex(z0), p)) return z0;
  for (int ring = 1; ring <= 16; ++ring)
    for (int dr = -ring; dr <= ring; ++dr)
      for (int di = -ring; di <= ring; ++di) {
        if (std::max(std::abs(dr), std::abs(di)) != ring) continue;
        const Complex z(nudge(z0.real(), dr), nudge(z0.imag(), di));
        if (same_pair(SpherePoint::from_complex(z), p)) return z;
      }
  return z0;
}

}  // namespace detail

inline json point_to_json(const SpherePoint& p) {
  if (p.is_infinity()) return json("inf");
  return complex_to_json(detail::planar_exact(p));
}

inline SpherePoint point_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return SpherePoint::infinity();
    throw std::domain_error("json: unknown point string \"" + j.get<std::string>() + "\"");
  }
  return SpherePoint::from_complex(complex_from_json(j));
}

inline json points_to_json(const PointMultiset& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

inline PointMultiset points_from_json(const json& j) {
  if (!j.is_array()) throw std::domain_error("json: expected an array of points");
  PointMultiset out;
  for (const auto& e : j) out.push_back(point_from_json(e));
  return out;
}

inline json map_to_json(const MobiusMap& T) {
  return json{{"a", complex_to_json(T.a())},
              {"b", complex_to_json(T.b())},
              {"c", complex_to_json(T.c())},
              {"d", complex_to_json(T.d())}};
}

inline MobiusMap map_from_json(const json& j) {
  for (const char* k : {"a", "b", "c", "d"})
    if (!j.contains(k)) throw std::domain_error("json: map needs keys a, b, c, d");
  return MobiusMap::from_coefficients(complex_from_json(j["a"]), complex_from_json(j["b"]),
                                      complex_from_json(j["c"]), complex_from_json(j["d"]));
}

inline json group_to_json(const FiniteMobiusGroup& G, bool with_elements = true) {
  const GroupTypeTag tag = identify_type(G);
  json out{{"type", type_name(tag)}, {"n", tag.n}};
  if (with_elements) {
    json elems = json::array();
    for (const auto& g : G.elements) elems.push_back(map_to_json(g));
    out["elements"] = elems;
  }
  return out;
}

/// Accepts {"type","n","elements"?}; without elements the canonical group of
/// the tag is regenerated.
inline FiniteMobiusGroup group_from_json(const json& j) {
  if (!j.contains("type")) throw std::domain_error("json: group needs a type");
  const GroupTypeTag tag = tag_from_name(j["type"].get<std::string>(), j.value("n", 0));
  if (!j.contains("elements")) return canonical_group(tag);
  FiniteMobiusGroup G;
  for (const auto& e : j["elements"]) G.elements.push_back(map_from_json(e));
  if (identify_type(G) != tag)
    throw std::domain_error("json: group elements do not match the declared type");
  return G;
}

inline json polyhedron_to_json(const MobiusPolyhedron& P) {
  json out{{"kind", kind_name(P.kind)},
           {"V", points_to_json(P.vertices)},
           {"E", points_to_json(P.edge_midpoints)},
           {"F", points_to_json(P.face_centers)}};
  if (P.n > 0) out["n"] = P.n;
  return out;
}

inline json form_to_json(const RationalOneForm& f) {
  return json{{"lambda", complex_to_json(f.lambda())},
              {"zeros", points_to_json(f.zeros())},
              {"poles", points_to_json(f.poles())}};
}

/// Accepts both schemas: {"lambda","zeros","poles"} with explicit points, or
/// {"numer","denom"} coefficient lists in ascending degree order.
inline RationalOneForm form_from_json(const json& j) {
  if (j.contains("numer") || j.contains("denom")) {
    if (!j.contains("numer") || !j.contains("denom"))
      throw std::domain_error("json: coefficient form needs both numer and denom");
    std::vector<Complex> num, den;
    for (const auto& e : j["numer"]) num.push_back(complex_from_json(e));
    for (const auto& e : j["denom"]) den.push_back(complex_from_json(e));
    return from_rational_coefficients(num, den);
  }
  if (!j.contains("lambda") || !j.contains("zeros") || !j.contains("poles"))
    throw std::domain_error("json: form needs lambda, zeros, poles");
  return RationalOneForm(complex_from_json(j["lambda"]), points_from_json(j["zeros"]),
                         points_from_json(j["poles"]));
}

inline json residues_to_json(const std::vector<Residue>& rs) {
  json out = json::array();
  for (const auto& r : rs)
    out.push_back(json{{"at", point_to_json(r.at)}, {"value", complex_to_json(r.value)}});
  return out;
}

inline json orbit_report_to_json(const OrbitReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back(json{{"representative", point_to_json(e.representative)},
                           {"size", e.size},
                           {"full", e.full},
                           {"is_pole", e.is_pole}});
  return json{{"entries", entries}, {"l1", rep.l1}, {"l2", rep.l2}};
}

inline json isotropy_to_json(const IsotropyResult& res) {
  if (res.kind == IsotropyKind::continuous_cstar) {
    json out{{"kind", "continuous_cstar"}};
    if (res.conjugator) out["conjugator"] = map_to_json(*res.conjugator);
    return out;
  }
  const GroupTypeTag tag = identify_type(res.group);
  json gens = json::array();
  for (const auto& g : generating_set(res.group)) gens.push_back(map_to_json(g));
  json out{{"kind", "finite"},          {"group_type", type_name(tag)},
           {"n", tag.n},                {"generators", gens},
           {"orbit_report", orbit_report_to_json(res.orbits)},
           {"l1", res.orbits.l1},       {"l2", res.orbits.l2}};
  if (!res.warnings.empty()) {
    json warns = json::array();
    for (const auto& w : res.warnings)
      warns.push_back(json{{"candidate", map_to_json(w.candidate)}, {"residual", w.residual}});
    out["warnings"] = warns;
  }
  return out;
}

inline json isochrony_to_json(const IsochronyReport& rep, bool mirror_found) {
  return json{{"residues", residues_to_json(rep.residues)},
              {"is_isochronous", rep.is_isochronous},
              {"rotatable", rep.rotatable},
              {"theta", rep.theta ? json(*rep.theta) : json(nullptr)},
              {"mirror_found", mirror_found}};
}

inline json field_samples_to_json(const std::vector<FieldSample>& samples) {
  json out = json::array();
  for (const auto& s : samples)
    out.push_back(json{{"at", complex_to_json(s.at)}, {"value", complex_to_json(s.value)}});
  return out;
}

/// Throws std::ios_base::failure when the file cannot be read; json parse
/// errors propagate as nlohmann exceptions.
inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return json::parse(in);
}

inline void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace sphereforms
