#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphereforms/detail/rng.hpp"
#include "sphereforms/groups.hpp"
#include "sphereforms/isotropy.hpp"
#include "sphereforms/oneform.hpp"
#include "sphereforms/polyhedra.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

/// Construction recipe for a G-invariant form: which legal cell
/// (group, dif = l1 - l2) plus one representative per full interior orbit.
struct SynthesisSpec {
  GroupTypeTag group;
  int dif = 0;  // l1 - l2, in {-2, -1, 0, 1}
  PointMultiset interior_poles;  // l2 representatives
  PointMultiset interior_zeros;  // l1 representatives
  Complex lambda = Complex(0.0, -1.0);
  /// Cyclic dif=-1 only: the two fixed points split one pole / one zero;
  /// false puts the pole at 0, true puts it at infinity.
  bool swap_fixed = false;
};

namespace detail {

inline PolyKind polyhedron_kind_for(const GroupTypeTag& tag) {
  switch (tag.type) {
    case GroupType::tetra:
      return PolyKind::tetrahedron;
    case GroupType::octa:
      return PolyKind::octahedron;
    case GroupType::icosa:
      return PolyKind::icosahedron;
    case GroupType::dihedral:
      return PolyKind::dihedron;
    default:
      throw std::logic_error("no polyhedron for this group type");
  }
}

/// The populated cells: platonic groups allow dif in {0, 1}; dihedral adds
/// dif=-1 (and -2 for D2, whose axes are all order 2); cyclic groups allow
/// only dif=0 except Z2, whose fixed points are order-2 axes (dif -1, -2).
/// Interior-count lower bounds come with the cells: dif=-1 needs l2 >= 1,
/// dif=-2 needs l2 >= 2 (else l1 < 0), and cyclic dif=0 needs l2 >= 1
/// (with none, the form degenerates to lambda dz/z whose isotropy is C*).
inline bool cell_is_legal(const GroupTypeTag& tag, int dif, int l2) {
  if (l2 < 0 || l2 + dif < 0) return false;
  switch (tag.type) {
    case GroupType::trivial:
      return false;
    case GroupType::cyclic:
      if (tag.n < 2) return false;
      if (dif == 0) return l2 >= 1;
      if (tag.n == 2) return (dif == -1 && l2 >= 1) || (dif == -2 && l2 >= 2);
      return false;
    case GroupType::dihedral:
      if (tag.n < 2) return false;
      if (dif == 0 || dif == 1) return true;
      if (dif == -1) return l2 >= 1;
      return tag.n == 2 && dif == -2 && l2 >= 2;
    case GroupType::tetra:
    case GroupType::octa:
    case GroupType::icosa:
      return dif == 0 || dif == 1;
  }
  return false;
}

}  // namespace detail

/// Pole count of the cell: l2 full orbits plus the special points placed as
/// poles (dihedral/platonic rows read off the polyhedron counts; cyclic rows
/// count fixed points).
inline int pole_count(const GroupTypeTag& tag, int dif, int l2) {
  if (!detail::cell_is_legal(tag, dif, l2)) throw std::domain_error("illegal table cell");
  const int base = l2 * group_order(tag);
  if (tag.type == GroupType::cyclic) return base + (dif + 2);
  const auto [v, e, f] = expected_counts(detail::polyhedron_kind_for(tag), tag.n);
  switch (dif) {
    case -2:
      return base;
    case -1:
      return base + f;
    case 0:
      return base + v + f;
    default:
      return base + v + e + f;
  }
}

inline int pole_count(const SynthesisSpec& spec) {
  return pole_count(spec.group, spec.dif, static_cast<int>(spec.interior_poles.size()));
}

/// Moduli-stratum descriptor: pole count, complex dimension, and the fiber
/// of the bundle over the stratum.
struct StratumDescriptor {
  GroupTypeTag group;
  int l1 = 0, l2 = 0;
  int k = 0;
  int dim = 0;
  std::string fiber = "PSL(2,C)/G × C*";
};

inline StratumDescriptor stratum(const GroupTypeTag& tag, int l1, int l2) {
  StratumDescriptor d;
  d.group = tag;
  d.l1 = l1;
  d.l2 = l2;
  d.k = pole_count(tag, l1 - l2, l2);
  d.dim = l1 + l2 + 4;
  return d;
}

inline StratumDescriptor stratum(const SynthesisSpec& spec) {
  return stratum(spec.group, static_cast<int>(spec.interior_zeros.size()),
                 static_cast<int>(spec.interior_poles.size()));
}

struct SynthesisResult {
  RationalOneForm form;
  IsotropyResult achieved;
};

/// Build the G-invariant form of the requested cell: special points go to
/// poles/zeros per the cell row, interior representatives are expanded to
/// their full orbits, and the result's isotropy is recomputed and must equal
/// G exactly (larger: "accidental extra symmetry").
inline SynthesisResult synthesize(const SynthesisSpec& spec, double eps = kEps) {
  const int l2 = static_cast<int>(spec.interior_poles.size());
  const int l1 = static_cast<int>(spec.interior_zeros.size());
  if (l1 - l2 != spec.dif) throw std::domain_error("interior counts disagree with dif");
  if (!detail::cell_is_legal(spec.group, spec.dif, l2)) throw std::domain_error("illegal table cell");

  FiniteMobiusGroup G;
  PointMultiset zeros, poles;
  if (spec.group.type == GroupType::cyclic) {
    G = canonical_group(spec.group);
    const SpherePoint x = SpherePoint::from_complex(0.0), y = SpherePoint::infinity();
    if (spec.dif == 0) {
      poles.push_back(x);
      poles.push_back(y);
    } else if (spec.dif == -1) {
      poles.push_back(spec.swap_fixed ? y : x);
      zeros.push_back(spec.swap_fixed ? x : y);
    } else {
      zeros.push_back(x);
      zeros.push_back(y);
    }
  } else {
    const MobiusPolyhedron A = canonical_polyhedron(detail::polyhedron_kind_for(spec.group),
                                                    spec.group.n);
    G = A.group;
    auto add = [](PointMultiset& dst, const PointMultiset& src) {
      dst.insert(dst.end(), src.begin(), src.end());
    };
    switch (spec.dif) {
      case 1:
        add(poles, A.vertices);
        add(poles, A.edge_midpoints);
        add(poles, A.face_centers);
        break;
      case 0:
        add(poles, A.vertices);
        add(poles, A.face_centers);
        add(zeros, A.edge_midpoints);
        break;
      case -1:
        add(poles, A.face_centers);
        add(zeros, A.vertices);
        add(zeros, A.edge_midpoints);
        break;
      default:
        add(zeros, A.vertices);
        add(zeros, A.edge_midpoints);
        add(zeros, A.face_centers);
        break;
    }
  }

  auto expand = [&](PointMultiset& dst, const PointMultiset& reps, const char* what) {
    for (const auto& rep : reps) {
      const PointMultiset orb = orbit(G, rep, eps);
      if (orb.size() != G.size())
        throw std::domain_error(std::string("interior ") + what +
                                " representative does not have a full orbit");
      dst.insert(dst.end(), orb.begin(), orb.end());
    }
  };
  expand(poles, spec.interior_poles, "pole");
  expand(zeros, spec.interior_zeros, "zero");

  {
    PointMultiset all = poles;
    all.insert(all.end(), zeros.begin(), zeros.end());
    if (!pairwise_separated(all, eps))
      throw std::domain_error("synthesis placement violates disjointness");
  }

  RationalOneForm form(spec.lambda, std::move(zeros), std::move(poles), eps);
  if (static_cast<int>(form.poles().size()) != pole_count(spec))
    throw std::logic_error("synthesized pole count disagrees with the table");
  for (const auto& g : canonical_generators(spec.group))
    if (!form_equal(pushforward(g, form, eps), form, kProbeGuardFactor * eps))
      throw std::logic_error("synthesized form is not invariant under its own group");

  IsotropyResult achieved = isotropy(form, eps);
  if (achieved.kind == IsotropyKind::continuous_cstar)
    throw std::domain_error("accidental extra symmetry: continuous C*");
  if (achieved.group.size() > G.size())
    throw std::domain_error("accidental extra symmetry: " + type_name(achieved.group.tag));
  if (achieved.group.size() < G.size() || !groups_equal(achieved.group, G, kProbeGuardFactor * eps))
    throw std::logic_error("synthesized form does not achieve the requested isotropy");
  return {std::move(form), std::move(achieved)};
}

/// Random witness of a stratum: representatives drawn uniformly on the
/// sphere, redrawn until full-orbit, disjointness (with a 1e-3 working
/// margin), and exact-isotropy conditions hold. Deterministic under seed.
inline SynthesisResult sample_stratum(const GroupTypeTag& tag, int l1, int l2,
                                      std::uint64_t seed, Complex lambda = Complex(0.0, -1.0),
                                      double eps = kEps) {
  const int dif = l1 - l2;
  if (!detail::cell_is_legal(tag, dif, l2)) throw std::domain_error("illegal table cell");
  detail::Rng rng(seed);
  const double margin = 1e-3;

  for (int attempt = 0; attempt < 10000; ++attempt) {
    SynthesisSpec spec;
    spec.group = tag;
    spec.dif = dif;
    spec.lambda = lambda;
    for (int m = 0; m < l2; ++m) spec.interior_poles.push_back(rng.on_sphere());
    for (int m = 0; m < l1; ++m) spec.interior_zeros.push_back(rng.on_sphere());

    try {
      SynthesisResult r = synthesize(spec, eps);
      // Reject cramped draws: the full configuration must clear the working
      // margin so downstream tolerance checks operate far above eps.
      PointMultiset all = r.form.poles();
      all.insert(all.end(), r.form.zeros().begin(), r.form.zeros().end());
      if (!pairwise_separated(all, margin)) continue;
      return r;
    } catch (const std::domain_error&) {
      continue;  // non-full orbit, collision, or accidental symmetry: redraw
    }
  }
  throw std::domain_error("could not sample");
}

}  // namespace sphereforms
