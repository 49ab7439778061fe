#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "sphereforms/detail/rng.hpp"
#include "sphereforms/isochrony.hpp"
#include "sphereforms/json_io.hpp"
#include "sphereforms/polyhedra.hpp"
#include "test_support.hpp"

using namespace sphereforms;
using nlohmann::json;

namespace {

SpherePoint random_point(detail::Rng& rng) {
  const double pick = rng.u01();
  if (pick < 0.05) return SpherePoint::infinity();
  if (pick < 0.10) return SpherePoint::from_complex(Complex(0.0));
  if (pick < 0.20) return SpherePoint::from_complex(rng.in_disk(1e6));
  if (pick < 0.30) return SpherePoint::from_complex(rng.in_disk(1e-4));
  return rng.on_sphere();
}

std::string file_text(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("points round-trip to the identical projective pair") {
  detail::Rng rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const SpherePoint p = random_point(rng);
    const json j = point_to_json(p);
    const SpherePoint back = point_from_json(j);
    CHECK(back.num() == p.num());
    CHECK(back.den() == p.den());
    // A second trip through text changes nothing at all.
    CHECK(point_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("infinity is encoded as the string inf") {
  const json j = point_to_json(SpherePoint::infinity());
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "inf");
  CHECK(point_from_json(json("inf")).is_infinity());
  CHECK(point_from_json(json::parse("[1.5,-2.0]")).value() == Complex(1.5, -2.0));
}

TEST_CASE("maps round-trip through their coefficient object") {
  detail::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Complex a = rng.in_disk(2.0), b = rng.in_disk(2.0);
    Complex c = rng.in_disk(2.0), d = rng.in_disk(2.0);
    if (std::abs(a * d - b * c) < 0.1) continue;
    const MobiusMap T = MobiusMap::from_coefficients(a, b, c, d);
    const json j = map_to_json(T);
    for (const char* key : {"a", "b", "c", "d"}) REQUIRE(j.contains(key));
    const MobiusMap back = map_from_json(j);
    CHECK(maps_equal(T, back, 1e-12));
    // The stored coefficients have determinant 1.
    const Complex det = complex_from_json(j["a"]) * complex_from_json(j["d"]) -
                        complex_from_json(j["b"]) * complex_from_json(j["c"]);
    CHECK(std::abs(det - 1.0) < 1e-12);
  }
}

TEST_CASE("groups round-trip and a bare tag regenerates the canonical group") {
  const FiniteMobiusGroup G = canonical_group({GroupType::dihedral, 3});
  const json full = group_to_json(G);
  CHECK(full["type"] == "dihedral");
  CHECK(full["n"] == 3);
  REQUIRE(full.contains("elements"));
  CHECK(full["elements"].size() == 6);
  CHECK(groups_equal(group_from_json(full), G));

  const json bare{{"type", "icosa"}};
  const FiniteMobiusGroup icosa = group_from_json(bare);
  CHECK(icosa.size() == 60);
  CHECK(identify_type(icosa).type == GroupType::icosa);

  const json named{{"type", "Z5"}};
  CHECK(group_from_json(named).size() == 5);
}

TEST_CASE("declared group type must match the listed elements") {
  json mislabeled = group_to_json(canonical_group({GroupType::cyclic, 3}));
  mislabeled["type"] = "dihedral";
  mislabeled["n"] = 3;
  CHECK_THROWS_WITH_AS(group_from_json(mislabeled),
                       "json: group elements do not match the declared type", std::domain_error);
  CHECK_THROWS_AS(group_from_json(json{{"n", 3}}), std::domain_error);
  CHECK_THROWS_AS(group_from_json(json{{"type", "frieze"}}), std::domain_error);
}

TEST_CASE("forms round-trip through the point schema") {
  for (const char* name : {"d2_quartic", "z4_no_mirror", "two_pole", "icosahedral"}) {
    CAPTURE(name);
    const RationalOneForm f = test_support::bundled(name);
    const json j = form_to_json(f);
    REQUIRE(j.contains("lambda"));
    REQUIRE(j.contains("zeros"));
    REQUIRE(j.contains("poles"));
    const RationalOneForm back = form_from_json(j);
    CHECK(back.lambda() == f.lambda());
    CHECK(form_equal(back, f, 1e-12));
  }
}

TEST_CASE("the coefficient schema is ascending and interchangeable") {
  // z dz / (z^4 - 1) as ascending coefficient lists.
  const json j{{"numer", json::array({json::array({0.0, 0.0}), json::array({1.0, 0.0})})},
               {"denom", json::array({json::array({-1.0, 0.0}), json::array({0.0, 0.0}),
                                      json::array({0.0, 0.0}), json::array({0.0, 0.0}),
                                      json::array({1.0, 0.0})})}};
  const RationalOneForm f = form_from_json(j);
  CHECK(form_equal(f, test_support::bundled("d2_quartic"), 1e-9));

  CHECK_THROWS_WITH_AS(form_from_json(json{{"numer", json::array()}}),
                       "json: coefficient form needs both numer and denom", std::domain_error);
  CHECK_THROWS_WITH_AS(form_from_json(json{{"lambda", json::array({1.0, 0.0})}}),
                       "json: form needs lambda, zeros, poles", std::domain_error);
}

TEST_CASE("polyhedron serialization reports the three point classes") {
  const json j = polyhedron_to_json(canonical_polyhedron(PolyKind::octahedron));
  CHECK(j["kind"] == "octahedron");
  CHECK(j["V"].size() == 6);
  CHECK(j["E"].size() == 12);
  CHECK(j["F"].size() == 8);
  CHECK_FALSE(j.contains("n"));

  const json d = polyhedron_to_json(canonical_polyhedron(PolyKind::dihedron, 6));
  CHECK(d["n"] == 6);
  CHECK(d["V"].size() == 6);
}

TEST_CASE("isotropy serialization distinguishes the continuous case") {
  const json cont = isotropy_to_json(isotropy(test_support::bundled("two_pole")));
  CHECK(cont["kind"] == "continuous_cstar");
  CHECK(cont.contains("conjugator"));
  CHECK_FALSE(cont.contains("group_type"));

  const json fin = isotropy_to_json(isotropy(test_support::bundled("z3_threefold")));
  CHECK(fin["kind"] == "finite");
  CHECK(fin["group_type"] == "cyclic");
  CHECK(fin["n"] == 3);
  CHECK(fin["l1"] == 2);
  CHECK(fin["l2"] == 2);
  CHECK(fin["generators"].size() >= 1);
  CHECK(fin["orbit_report"]["entries"].size() == 6);  // zero orbits 3+3, pole orbits 1+1+3+3
  CHECK_FALSE(fin.contains("warnings"));
}

TEST_CASE("isochrony serialization carries flags, theta, and the mirror verdict") {
  const RationalOneForm f = test_support::bundled("d2_quartic");
  const json j = isochrony_to_json(isochrony_report(f), true);
  CHECK(j["is_isochronous"] == false);
  CHECK(j["rotatable"] == true);
  CHECK(j["theta"].get<double>() == doctest::Approx(kPi / 2));
  CHECK(j["mirror_found"] == true);
  CHECK(j["residues"].size() == 4);
  for (const auto& r : j["residues"]) {
    CHECK(r.contains("at"));
    CHECK(r.contains("value"));
  }

  const json none = isochrony_to_json(isochrony_report(test_support::bundled("trivial_quartic")),
                                      false);
  CHECK(none["theta"].is_null());
  CHECK(none["mirror_found"] == false);
}

TEST_CASE("field samples serialize position and value pairs") {
  const std::vector<FieldSample> samples{{Complex(1.0, 2.0), Complex(-0.5, 0.25)}};
  const json j = field_samples_to_json(samples);
  REQUIRE(j.size() == 1);
  CHECK(complex_from_json(j[0]["at"]) == Complex(1.0, 2.0));
  CHECK(complex_from_json(j[0]["value"]) == Complex(-0.5, 0.25));
}

TEST_CASE("bundled form texts match the data files on disk") {
  for (const auto& entry : bundled_forms()) {
    const std::string name(entry.name);
    CAPTURE(name);
    const std::string path = std::string(DATA_DIR) + "/forms/" + name + ".json";
    CHECK(file_text(path) == std::string(entry.text));
  }
}

TEST_CASE("file loading reports missing paths as io failures") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/forms.json"), std::ios_base::failure);

  const std::string path = "/tmp/sphereforms_json_io_test.json";
  save_text_file(path, "{\"type\": \"octa\"}\n");
  const json j = load_json_file(path);
  CHECK(j["type"] == "octa");
  std::remove(path.c_str());
}
