#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphereforms/mobius.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

enum class GroupType { trivial, cyclic, dihedral, tetra, octa, icosa };

/// Isomorphism-type tag; n is the parameter for cyclic/dihedral, 0 otherwise.
struct GroupTypeTag {
  GroupType type = GroupType::trivial;
  int n = 0;

  bool operator==(const GroupTypeTag&) const = default;
};

inline int group_order(const GroupTypeTag& tag) {
  switch (tag.type) {
    case GroupType::trivial: return 1;
    case GroupType::cyclic: return tag.n;
    case GroupType::dihedral: return 2 * tag.n;
    case GroupType::tetra: return 12;
    case GroupType::octa: return 24;
    case GroupType::icosa: return 60;
  }
  throw std::logic_error("unreachable group type");
}

inline std::string type_name(const GroupTypeTag& tag) {
  switch (tag.type) {
    case GroupType::trivial: return "trivial";
    case GroupType::cyclic: return "cyclic";
    case GroupType::dihedral: return "dihedral";
    case GroupType::tetra: return "tetra";
    case GroupType::octa: return "octa";
    case GroupType::icosa: return "icosa";
  }
  throw std::logic_error("unreachable group type");
}

/// Short display form, e.g. "Z5", "D3", "A4", "S4", "A5".
inline std::string short_name(const GroupTypeTag& tag) {
  switch (tag.type) {
    case GroupType::trivial: return "1";
    case GroupType::cyclic: return "Z" + std::to_string(tag.n);
    case GroupType::dihedral: return "D" + std::to_string(tag.n);
    case GroupType::tetra: return "A4";
    case GroupType::octa: return "S4";
    case GroupType::icosa: return "A5";
  }
  throw std::logic_error("unreachable group type");
}

struct FiniteMobiusGroup {
  std::vector<MobiusMap> elements;  // includes the identity
  GroupTypeTag tag;

  std::size_t size() const { return elements.size(); }
};

inline bool group_contains(const FiniteMobiusGroup& G, const MobiusMap& T, double eps = kEps) {
  for (const auto& g : G.elements)
    if (maps_equal(g, T, eps)) return true;
  return false;
}

inline bool groups_equal(const FiniteMobiusGroup& A, const FiniteMobiusGroup& B,
                         double eps = kEps) {
  if (A.size() != B.size()) return false;
  for (const auto& g : A.elements)
    if (!group_contains(B, g, eps)) return false;
  return true;
}

/// Smallest composition-closed set containing the generators and identity.
/// Duplicate detection always tests both PSL sign representatives; a missed
/// duplicate would make the worklist diverge.
inline FiniteMobiusGroup closure(const std::vector<MobiusMap>& generators, int cap = 200) {
  if (cap < 1) throw std::domain_error("closure: cap must be >= 1");
  FiniteMobiusGroup G;
  G.elements.push_back(MobiusMap::identity());
  auto add_if_new = [&](const MobiusMap& m) {
    for (const auto& g : G.elements)
      if (maps_equal(g, m)) return false;
    if (static_cast<int>(G.elements.size()) >= cap)
      throw std::domain_error("not finite within cap");
    G.elements.push_back(m);
    return true;
  };
  for (const auto& gen : generators) add_if_new(gen);
  std::size_t next = 0;
  while (next < G.elements.size()) {
    const MobiusMap head = G.elements[next++];
    for (const auto& gen : generators) add_if_new(compose(head, gen));
  }
  return G;
}

/// Order of each element, capped by |G| (Lagrange) with floor 100.
inline std::map<int, int> order_histogram(const FiniteMobiusGroup& G) {
  std::map<int, int> hist;
  const int cap = std::max<int>(100, static_cast<int>(G.size()));
  for (const auto& g : G.elements) {
    const auto k = rotation_order(g, cap);
    if (!k) throw std::domain_error("not a Moebius finite-subgroup signature");
    ++hist[*k];
  }
  return hist;
}

/// Deterministic identification: trivial, then cyclic, then dihedral, then
/// the three polyhedral signatures by maximum element order.
inline GroupTypeTag identify_type(const FiniteMobiusGroup& G) {
  const int n = static_cast<int>(G.size());
  if (n == 1) return {GroupType::trivial, 0};
  const auto hist = order_histogram(G);
  const int max_order = hist.rbegin()->first;
  if (hist.count(n)) return {GroupType::cyclic, n};
  if (n % 2 == 0 && n / 2 >= 2 && hist.count(n / 2)) return {GroupType::dihedral, n / 2};
  if (n == 12 && max_order == 3) return {GroupType::tetra, 0};
  if (n == 24 && max_order == 4) return {GroupType::octa, 0};
  if (n == 60 && max_order == 5) return {GroupType::icosa, 0};
  throw std::domain_error("not a Moebius finite-subgroup signature");
}

/// The explicit generator pairs realizing each finite-subgroup type.
inline std::vector<MobiusMap> canonical_generators(const GroupTypeTag& tag) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s6 = std::sqrt(6.0);
  switch (tag.type) {
    case GroupType::trivial:
      return {};
    case GroupType::cyclic:
      if (tag.n < 2) throw std::domain_error("cyclic group needs n >= 2");
      return {MobiusMap::rotation(tag.n)};
    case GroupType::dihedral: {
      if (tag.n < 2) throw std::domain_error("dihedral group needs n >= 2");
      const MobiusMap swap01 = MobiusMap::from_coefficients(0.0, 1.0, 1.0, 0.0);  // 1/z
      return {MobiusMap::rotation(tag.n), swap01};
    }
    case GroupType::tetra: {
      const MobiusMap t2 = MobiusMap::from_coefficients(
          Complex(s2, s6), Complex(2.0, 2.0 * s3), Complex(-4.0, 0.0), Complex(2.0 * s2, 0.0));
      return {MobiusMap::rotation(3), t2};
    }
    case GroupType::octa: {
      const MobiusMap t4 = MobiusMap::from_coefficients(1.0, 1.0, -1.0, 1.0);
      return {MobiusMap::rotation(4), t4};
    }
    case GroupType::icosa: {
      const Complex w = std::polar(1.0, 2.0 * kPi / 5);
      const MobiusMap t6 = MobiusMap::from_coefficients(
          Complex(s5 + 1.0, 0.0), -2.0 * w, (1.0 - w + w * w) * (3.0 + s5), -w * w * (1.0 + s5));
      return {MobiusMap::rotation(5), t6};
    }
  }
  throw std::logic_error("unreachable group type");
}

inline FiniteMobiusGroup canonical_group(const GroupTypeTag& tag) {
  FiniteMobiusGroup G = closure(canonical_generators(tag));
  if (static_cast<int>(G.size()) != group_order(tag))
    throw std::logic_error("canonical group has wrong order");
  G.tag = tag;
  return G;
}

inline FiniteMobiusGroup conjugate(const FiniteMobiusGroup& G, const MobiusMap& T) {
  FiniteMobiusGroup out;
  out.tag = G.tag;
  out.elements.reserve(G.size());
  const MobiusMap Tinv = T.inverse();
  for (const auto& g : G.elements) out.elements.push_back(compose(compose(T, g), Tinv));
  return out;
}

/// A rotation axis of the group: the shared fixed pair, the largest element
/// order on it, and one element realizing that order.
struct GroupAxis {
  SpherePoint x, y;
  int order = 0;
  MobiusMap representative;
};

/// Fixed pairs of all non-identity elements, deduplicated (g and g^{-1} share
/// an axis) keeping the maximum order per axis.
inline std::vector<GroupAxis> nontrivial_fixed_points(const FiniteMobiusGroup& G) {
  std::vector<GroupAxis> axes;
  const int cap = std::max<int>(100, static_cast<int>(G.size()));
  for (const auto& g : G.elements) {
    if (is_identity(g)) continue;
    const auto fp = fixed_points(g);
    if (fp.size() != 2)
      throw std::logic_error("non-elliptic element in a finite group");
    const auto k = rotation_order(g, cap);
    if (!k) throw std::domain_error("not a Moebius finite-subgroup signature");
    bool found = false;
    for (auto& ax : axes) {
      const bool same = (points_equal(ax.x, fp[0]) && points_equal(ax.y, fp[1])) ||
                        (points_equal(ax.x, fp[1]) && points_equal(ax.y, fp[0]));
      if (same) {
        if (*k > ax.order) {
          ax.order = *k;
          ax.representative = g;
        }
        found = true;
        break;
      }
    }
    if (!found) axes.push_back({fp[0], fp[1], *k, g});
  }
  return axes;
}

/// Orbit of a point: images under all elements, deduplicated at eps.
inline PointMultiset orbit(const FiniteMobiusGroup& G, const SpherePoint& p, double eps = kEps) {
  PointMultiset out;
  for (const auto& g : G.elements) {
    const SpherePoint q = g.apply(p);
    if (!contains_point(out, q, eps)) out.push_back(q);
  }
  return out;
}

enum class OrbitSizeClass { full, special };

inline OrbitSizeClass orbit_size_class(const FiniteMobiusGroup& G, const SpherePoint& p,
                                       double eps = kEps) {
  return orbit(G, p, eps).size() == G.size() ? OrbitSizeClass::full : OrbitSizeClass::special;
}

/// Parse a tag from either a short name ("1", "Z5", "D3", "A4", "S4", "A5")
/// or a long name ("trivial", "cyclic", "dihedral", "tetra", "octa",
/// "icosa"); long parametric names take n from the second argument.
inline GroupTypeTag tag_from_name(const std::string& name, int n = 0) {
  if (name == "1" || name == "trivial") return {GroupType::trivial, 0};
  if (name == "A4" || name == "tetra") return {GroupType::tetra, 0};
  if (name == "S4" || name == "octa") return {GroupType::octa, 0};
  if (name == "A5" || name == "icosa") return {GroupType::icosa, 0};
  if (name == "cyclic") return {GroupType::cyclic, n};
  if (name == "dihedral") return {GroupType::dihedral, n};
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D')) {
    int m = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') throw std::domain_error("unknown group name: " + name);
      m = m * 10 + (name[i] - '0');
    }
    if (m < 2) throw std::domain_error("group parameter must be at least 2: " + name);
    return {name[0] == 'Z' ? GroupType::cyclic : GroupType::dihedral, m};
  }
  throw std::domain_error("unknown group name: " + name);
}

/// Small generating subset: grown greedily until its closure is all of G.
inline std::vector<MobiusMap> generating_set(const FiniteMobiusGroup& G, double eps = kEps) {
  std::vector<MobiusMap> gens;
  if (G.size() <= 1) return gens;
  FiniteMobiusGroup span = closure({});
  for (const auto& g : G.elements) {
    if (group_contains(span, g, eps)) continue;
    gens.push_back(g);
    span = closure(gens);
    if (span.size() == G.size()) break;
  }
  return gens;
}

}  // namespace sphereforms
