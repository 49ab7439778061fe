#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sphereforms/bundled_forms.hpp"
#include "sphereforms/isochrony.hpp"
#include "sphereforms/isotropy.hpp"
#include "sphereforms/json_io.hpp"

namespace sphereforms {

namespace detail {

struct ReferenceExpectation {
  std::string_view name;
  std::string_view group;  // short group name; "C*" for the two-pole case
  int l1 = 0, l2 = 0;
  std::vector<int> pole_orbits, zero_orbits;  // sorted orbit sizes
  bool is_isochronous = false, rotatable = false;
  std::optional<double> theta;
  int mirror = -1;  // 1 expect a certificate, 0 expect none, -1 not applicable
};

inline const std::vector<ReferenceExpectation>& reference_expectations() {
  static const std::vector<ReferenceExpectation> rows = {
      {"d2_quartic", "D2", 0, 0, {2, 2}, {2}, false, true, kPi / 2, 1},
      {"trivial_quartic", "1", 2, 4, {1, 1, 1, 1}, {1, 1}, false, false, std::nullopt, -1},
      {"z3_threefold", "Z3", 2, 2, {1, 1, 3, 3}, {3, 3}, false, true, kPi / 2, 1},
      {"d2_sextic", "D2", 1, 0, {2, 2, 2}, {4}, false, false, std::nullopt, 0},
      {"a4_octic", "A4", 0, 0, {4, 4}, {6}, true, true, 0.0, 1},
      {"tetrahedral", "A4", 0, 0, {4, 4}, {6}, true, true, 0.0, 1},
      {"octahedral", "S4", 0, 0, {6, 8}, {12}, true, true, 0.0, 1},
      {"icosahedral", "A5", 0, 0, {12, 20}, {30}, true, true, 0.0, 1},
      {"dihedral5", "D5", 0, 0, {2, 5}, {5}, true, true, 0.0, 1},
      {"cyclic5", "Z5", 1, 1, {1, 1, 5}, {5}, true, true, 0.0, 1},
      {"z4_no_mirror", "Z4", 3, 3, {1, 1, 4, 4, 4}, {4, 4, 4}, true, true, 0.0, 0},
  };
  return rows;
}

inline std::vector<int> orbit_sizes(const OrbitReport& rep, bool poles) {
  std::vector<int> out;
  for (const auto& e : rep.entries)
    if (e.is_pole == poles) out.push_back(e.size);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool residue_multiset_matches(const std::vector<Residue>& rs,
                                     std::vector<Complex> expected, double eps) {
  if (rs.size() != expected.size()) return false;
  for (const auto& r : rs) {
    bool found = false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (std::abs(r.value - expected[i]) <= eps) {
        expected.erase(expected.begin() + static_cast<long>(i));
        found = true;
        break;
      }
    if (!found) return false;
  }
  return expected.empty();
}

}  // namespace detail

/// Runs every bundled reference form through parsing, JSON round-trip,
/// isotropy, isochrony, and mirror search, comparing against the frozen
/// expectations; prints one row per check and returns true when all pass.
inline bool run_reference_suite(std::ostream& os) {
  bool all = true;
  auto row = [&](const std::string& label, bool pass, const std::string& note = "") {
    os << (pass ? "PASS  " : "FAIL  ") << label;
    if (!note.empty()) os << "  [" << note << "]";
    os << "\n";
    all = all && pass;
  };

  for (const auto& exp : detail::reference_expectations()) {
    RationalOneForm f = form_from_json(json::parse(bundled_form_text(exp.name)));

    {  // canonical serialization round-trip
      const RationalOneForm f2 = form_from_json(form_to_json(f));
      row(std::string(exp.name) + ": json round-trip", form_equal(f, f2));
    }

    const IsotropyResult iso = isotropy(f);
    const std::string got = iso.kind == IsotropyKind::continuous_cstar
                                ? "C*"
                                : short_name(identify_type(iso.group));
    row(std::string(exp.name) + ": isotropy " + std::string(exp.group),
        got == exp.group && iso.warnings.empty(),
        got != exp.group ? "computed " + got : "");
    const bool counts_ok = iso.orbits.l1 == exp.l1 && iso.orbits.l2 == exp.l2;
    row(std::string(exp.name) + ": interior orbit counts (" + std::to_string(exp.l1) + "," +
            std::to_string(exp.l2) + ")",
        counts_ok,
        counts_ok ? "" : "computed (" + std::to_string(iso.orbits.l1) + "," +
                             std::to_string(iso.orbits.l2) + ")");
    row(std::string(exp.name) + ": orbit size profile",
        detail::orbit_sizes(iso.orbits, true) == exp.pole_orbits &&
            detail::orbit_sizes(iso.orbits, false) == exp.zero_orbits);

    const IsochronyReport rep = isochrony_report(f);
    bool flags = rep.is_isochronous == exp.is_isochronous && rep.rotatable == exp.rotatable;
    if (exp.theta) {
      flags = flags && rep.theta &&
              std::abs(*rep.theta - *exp.theta) <= 1e-6;
    } else {
      flags = flags && !rep.theta;
    }
    row(std::string(exp.name) + ": isochrony flags", flags);

    if (exp.mirror >= 0) {
      bool found = false;
      std::string note;
      try {
        found = mirror_search(f, iso.group).has_value();
      } catch (const std::exception& e) {
        note = e.what();
      }
      row(std::string(exp.name) + ": mirror " + (exp.mirror ? "present" : "absent"),
          found == (exp.mirror == 1), note);
    }
  }

  {  // the quartic transforms as computed under the acting rotations
    RationalOneForm f = form_from_json(json::parse(bundled_form_text("d2_quartic")));
    const MobiusMap rot4 = MobiusMap::from_coefficients({0, 1}, {0, 0}, {0, 0}, {1, 0});
    const MobiusMap rot2 = MobiusMap::from_coefficients({-1, 0}, {0, 0}, {0, 0}, {1, 0});
    row("d2_quartic: pushforward under z -> iz negates the form",
        form_equal(pushforward(rot4, f), f.scaled(-1.0)));
    row("d2_quartic: pushforward under z -> -z preserves the form",
        form_equal(pushforward(rot2, f), f));
  }

  {  // the counterexample: isochronous residues yet no mirror certificate
    RationalOneForm f = form_from_json(json::parse(bundled_form_text("z4_no_mirror")));
    std::vector<Complex> expected;
    for (int i = 0; i < 9; ++i) expected.push_back({0, 1});
    for (int i = 0; i < 4; ++i) expected.push_back({0, -1});
    expected.push_back({0, -5});
    row("z4_no_mirror: residue multiset {i x9, -i x4, -5i}",
        detail::residue_multiset_matches(residues(f), expected, 1e-6));
  }

  {  // the two-pole form: continuous isotropy, opposite imaginary residues
    RationalOneForm f = form_from_json(json::parse(bundled_form_text("two_pole")));
    const IsotropyResult iso = isotropy(f);
    row("two_pole: continuous isotropy", iso.kind == IsotropyKind::continuous_cstar);
    row("two_pole: residues are +-i",
        detail::residue_multiset_matches(residues(f), {{0, 1}, {0, -1}}, 1e-9));
    row("two_pole: isochronous", isochrony_report(f).is_isochronous);
  }

  os << (all ? "reference suite: all checks passed\n"
             : "reference suite: FAILURES above\n");
  return all;
}

}  // namespace sphereforms
