#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphereforms/isotropy.hpp"
#include "sphereforms/oneform.hpp"
#include "sphereforms/sphere_point.hpp"

namespace sphereforms {

struct Window {
  double x0 = -3.0, x1 = 3.0, y0 = -3.0, y1 = 3.0;
  bool contains(Complex z) const {
    return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
  }
};

/// One sample of the dual field X = e^{-i theta} (1/f) d/dz.
struct FieldSample {
  Complex at;
  Complex value;
};

enum class TrajectoryKind { streamline, separatrix };

enum class TrajectoryStatus {
  max_length,      // arc-length budget exhausted
  hit_guard,       // entered the guard radius of a pole or zero
  left_window,     // exited the integration window
  closed,          // returned to the start after escaping it
  step_underflow,  // step size collapsed near a singularity
  step_cap         // step-count safety limit
};

inline std::string status_name(TrajectoryStatus s) {
  switch (s) {
    case TrajectoryStatus::max_length:
      return "max_length";
    case TrajectoryStatus::hit_guard:
      return "hit_guard";
    case TrajectoryStatus::left_window:
      return "left_window";
    case TrajectoryStatus::closed:
      return "closed";
    case TrajectoryStatus::step_underflow:
      return "step_underflow";
    default:
      return "step_cap";
  }
}

/// A numerically integrated curve of the dual field. Points are plane-chart
/// values even for the stretch integrated in the w = 1/z chart; psi_drift is
/// the worst |Im(e^{i theta}(Psi - Psi_start))| seen along the way, which the
/// horizontal-trajectory property keeps near zero.
struct Trajectory {
  std::vector<Complex> points;
  TrajectoryKind kind = TrajectoryKind::streamline;
  std::optional<SpherePoint> origin;  // separatrices: the zero they emanate from
  TrajectoryStatus status = TrajectoryStatus::step_cap;
  bool closed = false;
  double arc_length = 0.0;  // plane metric
  double psi_drift = 0.0;
};

struct PortraitOptions {
  Window window;
  bool use_window = true;
  double theta = 0.0;
  int grid_nx = 0, grid_ny = 0;  // 0: no field samples
  int seeds_per_axis = 10;
  double max_arc_length = 40.0;
  double tol = 1e-8;
  double guard_scale = 1e-3;
  int max_steps = 200000;
  bool sphere_panel = false;
};

/// Chordal guard radius: a fixed fraction of the closest special-point pair.
inline double guard_radius(const RationalOneForm& f, double scale = 1e-3) {
  PointMultiset all = f.poles();
  all.insert(all.end(), f.zeros().begin(), f.zeros().end());
  if (all.size() < 2) return scale;
  return scale * min_pairwise_chordal(all);
}

namespace detail {

struct FlowContext {
  const RationalOneForm* f;
  Complex phase;  // direction * e^{-i theta}

  Complex velocity(bool inverted, Complex y) const {
    if (!inverted) return phase / f->evaluate_unchecked(y);
    return -y * y * phase / f->evaluate_unchecked(1.0 / y);
  }

  /// Integrand of Psi in the active chart: f(z), or -f(1/w)/w^2.
  Complex form_value(bool inverted, Complex y) const {
    if (!inverted) return f->evaluate_unchecked(y);
    return -f->evaluate_unchecked(1.0 / y) / (y * y);
  }
};

inline Complex rk4_step(const FlowContext& ctx, bool inv, Complex y, double h) {
  const Complex k1 = ctx.velocity(inv, y);
  const Complex k2 = ctx.velocity(inv, y + 0.5 * h * k1);
  const Complex k3 = ctx.velocity(inv, y + 0.5 * h * k2);
  const Complex k4 = ctx.velocity(inv, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct IntegrationSetup {
  double theta = 0.0;
  int direction = 1;  // -1 integrates the reversed field
  double max_arc = 40.0;
  double tol = 1e-8;
  int max_steps = 200000;
  const Window* window = nullptr;  // null: whole sphere, 1/z chart beyond |z| = 1e3
  double guard = 1e-3;             // chordal
  std::optional<Complex> exempt;   // separatrix origin, guard-exempt until escaped
  double exempt_radius = 0.0;      // plane metric
  bool detect_closure = true;
  double closure_tol = 1e-3;
  double closure_escape = 1e-2;
};

inline Trajectory integrate_flow(const RationalOneForm& f, Complex start,
                                 const IntegrationSetup& s) {
  FlowContext ctx{&f, std::polar(1.0, -s.theta) * static_cast<double>(s.direction)};
  PointMultiset specials = f.poles();
  specials.insert(specials.end(), f.zeros().begin(), f.zeros().end());
  const SpherePoint exempt_sp =
      s.exempt ? SpherePoint::from_complex(*s.exempt) : SpherePoint::infinity();

  Trajectory tr;
  tr.points.push_back(start);
  bool inv = false;
  Complex y = start;
  Complex psi = 0.0;
  const Complex rot = std::polar(1.0, s.theta);
  double h = 1e-3 / (std::abs(ctx.velocity(false, start)) + 1e-12);
  h = std::clamp(h, 1e-12, 0.5);
  bool escaped_closure = false;
  bool exempt_active = s.exempt.has_value();

  for (int step = 0; step < s.max_steps; ++step) {
    Complex ynew = y, ymid = y;
    bool accepted = false;
    for (int halving = 0; halving < 60 && !accepted; ++halving) {
      const Complex full = rk4_step(ctx, inv, y, h);
      const Complex half = rk4_step(ctx, inv, y, 0.5 * h);
      const Complex two = rk4_step(ctx, inv, half, 0.5 * h);
      const double err = std::abs(full - two);
      const double scale = s.tol * (1.0 + std::abs(two));
      if (std::isfinite(err) && std::isfinite(std::abs(two)) && err <= scale) {
        ynew = two;
        ymid = half;
        accepted = true;
        if (err < scale / 64.0) h = std::min(h * 2.0, 0.5);
      } else {
        h *= 0.5;
        if (h < 1e-14) break;
      }
    }
    if (!accepted) {
      tr.status = TrajectoryStatus::step_underflow;
      break;
    }

    // Psi increment: Simpson on the parabolic arc through (y, ymid, ynew).
    {
      const Complex d0 = -3.0 * y + 4.0 * ymid - ynew;
      const Complex dm = ynew - y;
      const Complex d1 = y - 4.0 * ymid + 3.0 * ynew;
      psi += (ctx.form_value(inv, y) * d0 + 4.0 * ctx.form_value(inv, ymid) * dm +
              ctx.form_value(inv, ynew) * d1) /
             6.0;
      tr.psi_drift = std::max(tr.psi_drift, std::abs(std::imag(rot * psi)));
    }

    const Complex prev_plane = inv ? 1.0 / y : y;
    y = ynew;
    const Complex plane = inv ? 1.0 / y : y;
    tr.arc_length += std::abs(plane - prev_plane);
    if (std::isfinite(plane.real()) && std::isfinite(plane.imag())) tr.points.push_back(plane);
    const SpherePoint sp = inv ? SpherePoint::from_pair(1.0, y) : SpherePoint::from_complex(y);

    if (exempt_active && std::abs(plane - *s.exempt) > s.exempt_radius) exempt_active = false;
    bool hit = false;
    for (const auto& spc : specials) {
      if (exempt_active && points_equal(spc, exempt_sp, 1e-12)) continue;
      if (chordal_distance(sp, spc) < s.guard) {
        hit = true;
        break;
      }
    }
    if (hit) {
      tr.status = TrajectoryStatus::hit_guard;
      break;
    }
    if (s.window && !s.window->contains(plane)) {
      tr.status = TrajectoryStatus::left_window;
      break;
    }
    if (s.detect_closure) {
      if (!escaped_closure) {
        if (std::abs(plane - start) > s.closure_escape) escaped_closure = true;
      } else {
        // Steps can straddle the start, so test the whole segment.
        const Complex seg = plane - prev_plane;
        const double len2 = std::norm(seg);
        const double t =
            len2 > 0.0 ? std::clamp(std::real((start - prev_plane) * std::conj(seg)) / len2, 0.0, 1.0)
                       : 0.0;
        const Complex nearest = prev_plane + t * seg;
        if (std::abs(nearest - start) < s.closure_tol) {
          tr.points.back() = nearest;
          tr.arc_length -= std::abs(plane - nearest);  // drop the overshoot
          tr.status = TrajectoryStatus::closed;
          tr.closed = true;
          break;
        }
      }
    }
    if (tr.arc_length >= s.max_arc) {
      tr.status = TrajectoryStatus::max_length;
      break;
    }
    if (!inv && std::abs(y) > 1e3) {
      inv = true;
      y = 1.0 / y;
    } else if (inv && std::abs(y) > 2e-3) {
      inv = false;
      y = 1.0 / y;
    }
  }
  return tr;
}

}  // namespace detail

/// Field samples on an inclusive nx x ny lattice over the window; samples
/// within the guard radius of a special point are omitted.
inline std::vector<FieldSample> sample_grid(const RationalOneForm& f, const Window& window,
                                            int nx, int ny, double theta = 0.0,
                                            double guard_scale = 1e-3) {
  if (nx < 2 || ny < 2) throw std::domain_error("grid needs nx, ny >= 2");
  const double guard = guard_radius(f, guard_scale);
  PointMultiset specials = f.poles();
  specials.insert(specials.end(), f.zeros().begin(), f.zeros().end());
  const Complex phase = std::polar(1.0, -theta);

  std::vector<FieldSample> out;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const Complex z(window.x0 + ix * (window.x1 - window.x0) / (nx - 1),
                      window.y0 + iy * (window.y1 - window.y0) / (ny - 1));
      const SpherePoint zp = SpherePoint::from_complex(z);
      bool skip = false;
      for (const auto& spc : specials)
        if (chordal_distance(zp, spc) <= guard) {
          skip = true;
          break;
        }
      if (!skip) out.push_back({z, phase / f.evaluate_unchecked(z)});
    }
  return out;
}

/// Integrate z' = e^{-i theta}/f(z) from a regular start point.
inline Trajectory integrate_streamline(const RationalOneForm& f, Complex start, double theta = 0.0,
                                       double max_len = 40.0, double tol = 1e-8,
                                       const Window* window = nullptr, double guard_scale = 1e-3,
                                       int max_steps = 200000, int direction = 1) {
  detail::IntegrationSetup s;
  s.theta = theta;
  s.direction = direction;
  s.max_arc = max_len;
  s.tol = tol;
  s.max_steps = max_steps;
  s.window = window;
  s.guard = guard_radius(f, guard_scale);
  Trajectory tr = detail::integrate_flow(f, start, s);
  tr.kind = TrajectoryKind::streamline;
  return tr;
}

/// Four separatrices per finite simple zero q: with c = f'(q), the local model
/// e^{i theta} Psi ~ e^{i theta} c (z-q)^2 / 2 is real along the rays
/// arg(z-q) = (-theta - arg c + m pi)/2; seeds sit at radius
/// r0 = 1e-3 min-distance-to-other-specials and integrate outward.
inline std::vector<Trajectory> separatrices(const RationalOneForm& f, double theta = 0.0,
                                            double max_len = 60.0, double tol = 1e-8,
                                            const Window* window = nullptr,
                                            double guard_scale = 1e-3, int max_steps = 200000) {
  std::vector<Trajectory> out;
  const double guard = guard_radius(f, guard_scale);

  std::vector<Complex> finite_specials = f.finite_zeros();
  finite_specials.insert(finite_specials.end(), f.finite_poles().begin(), f.finite_poles().end());

  for (std::size_t m = 0; m < f.finite_zeros().size(); ++m) {
    const Complex q = f.finite_zeros()[m];
    const Complex c = f.derivative_at_finite_zero(m);
    double nearest = 1.0;
    for (const Complex& s : finite_specials)
      if (std::abs(s - q) > 0.0) nearest = std::min(nearest, std::abs(s - q));
    const double r0 = 1e-3 * nearest;

    for (int ray = 0; ray < 4; ++ray) {
      const double alpha = (-theta - std::arg(c) + ray * kPi) / 2.0;
      const Complex dir = std::polar(1.0, alpha);
      const Complex seed = q + r0 * dir;

      detail::IntegrationSetup s;
      s.theta = theta;
      s.max_arc = max_len;
      s.tol = tol;
      s.max_steps = max_steps;
      s.window = window;
      s.guard = guard;
      s.exempt = q;
      s.exempt_radius = 5.0 * r0;
      s.detect_closure = false;
      const Complex v = std::polar(1.0, -theta) / f.evaluate_unchecked(seed);
      s.direction = std::real(std::conj(dir) * v) >= 0.0 ? 1 : -1;

      Trajectory tr = detail::integrate_flow(f, seed, s);
      tr.kind = TrajectoryKind::separatrix;
      tr.origin = SpherePoint::from_complex(q);
      out.push_back(std::move(tr));
    }
  }
  return out;
}

namespace detail {

inline void svg_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  out += buf;
}

struct PanelMap {
  double mx, my, sx, sy;
  Window win;
  double px(double x) const { return mx + (x - win.x0) * sx; }
  double py(double y) const { return my + (win.y1 - y) * sy; }
};

/// Polyline with display-level thinning: a vertex is kept once it moves at
/// least a quarter pixel, keeping files small without changing trajectories.
inline void svg_polyline(std::string& out, const std::vector<Complex>& pts, const PanelMap& map) {
  std::string coords;
  double lx = 1e300, ly = 1e300;
  int kept = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x = map.px(pts[i].real()), y = map.py(pts[i].imag());
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    if (i + 1 < pts.size() && std::hypot(x - lx, y - ly) < 0.25) continue;
    if (!coords.empty()) coords += ' ';
    svg_num(coords, x);
    coords += ',';
    svg_num(coords, y);
    lx = x;
    ly = y;
    ++kept;
  }
  if (kept < 2) return;
  out += "<polyline points=\"" + coords + "\"/>\n";
}

inline void svg_marker(std::string& out, double x, double y, int shape, const std::string& color,
                       const char* cls) {
  char buf[256];
  if (shape == 0) {  // triangle
    std::snprintf(buf, sizeof buf,
                  "<path class=\"%s\" d=\"M %.3f %.3f L %.3f %.3f L %.3f %.3f Z\" fill=\"%s\"/>\n",
                  cls, x, y - 4.2, x - 3.8, y + 2.8, x + 3.8, y + 2.8, color.c_str());
  } else if (shape == 1) {  // square
    std::snprintf(buf, sizeof buf,
                  "<rect class=\"%s\" x=\"%.3f\" y=\"%.3f\" width=\"6.2\" height=\"6.2\" fill=\"%s\"/>\n",
                  cls, x - 3.1, y - 3.1, color.c_str());
  } else if (shape == 2) {  // circle
    std::snprintf(buf, sizeof buf, "<circle class=\"%s\" cx=\"%.3f\" cy=\"%.3f\" r=\"3.1\" fill=\"%s\"/>\n",
                  cls, x, y, color.c_str());
  } else {  // cross
    std::snprintf(buf, sizeof buf,
                  "<path class=\"%s\" d=\"M %.3f %.3f L %.3f %.3f M %.3f %.3f L %.3f %.3f\" "
                  "stroke=\"%s\" stroke-width=\"1.6\" fill=\"none\"/>\n",
                  cls, x - 3.2, y - 3.2, x + 3.2, y + 3.2, x - 3.2, y + 3.2, x + 3.2, y - 3.2,
                  color.c_str());
  }
  out += buf;
}

}  // namespace detail

/// Deterministic SVG phase portrait: lattice-seeded streamlines, the
/// separatrix skeleton, orbit-colored pole markers (first orbit triangles,
/// second squares, later orbits discs), black crosses for zeros, a note when
/// a special point sits at infinity, and an optional orthographic sphere
/// panel. Identical inputs produce byte-identical output.
inline std::string render_svg(const RationalOneForm& f, const PortraitOptions& opts) {
  const Window& win = opts.window;
  const double guard = guard_radius(f, opts.guard_scale);
  const Window* iwin = opts.use_window ? &win : nullptr;

  // Orbit ids for pole coloring; isotropy failures fall back to one orbit per pole.
  std::vector<int> pole_orbit(f.poles().size(), -1);
  try {
    const IsotropyResult iso = isotropy(f);
    int next = 0;
    for (std::size_t i = 0; i < f.poles().size(); ++i) {
      if (pole_orbit[i] >= 0) continue;
      const PointMultiset orb = orbit(iso.group, f.poles()[i]);
      for (std::size_t j = i; j < f.poles().size(); ++j)
        if (pole_orbit[j] < 0 && contains_point(orb, f.poles()[j])) pole_orbit[j] = next;
      ++next;
    }
  } catch (const std::exception&) {
    for (std::size_t i = 0; i < pole_orbit.size(); ++i) pole_orbit[i] = static_cast<int>(i);
  }

  // Trajectories: separatrix skeleton plus bidirectional lattice streamlines.
  std::vector<Trajectory> seps = separatrices(f, opts.theta, opts.max_arc_length, opts.tol, iwin,
                                              opts.guard_scale, opts.max_steps);
  std::vector<Trajectory> streams;
  PointMultiset specials = f.poles();
  specials.insert(specials.end(), f.zeros().begin(), f.zeros().end());
  for (int iy = 0; iy < opts.seeds_per_axis; ++iy)
    for (int ix = 0; ix < opts.seeds_per_axis; ++ix) {
      const Complex seed(win.x0 + (ix + 0.5) * (win.x1 - win.x0) / opts.seeds_per_axis,
                         win.y0 + (iy + 0.5) * (win.y1 - win.y0) / opts.seeds_per_axis);
      const SpherePoint sp = SpherePoint::from_complex(seed);
      bool near = false;
      for (const auto& spc : specials)
        if (chordal_distance(sp, spc) < 3.0 * guard) {
          near = true;
          break;
        }
      if (near) continue;
      Trajectory fwd = integrate_streamline(f, seed, opts.theta, opts.max_arc_length, opts.tol,
                                            iwin, opts.guard_scale, opts.max_steps, 1);
      Trajectory bwd = integrate_streamline(f, seed, opts.theta, opts.max_arc_length, opts.tol,
                                            iwin, opts.guard_scale, opts.max_steps, -1);
      Trajectory merged;
      merged.kind = TrajectoryKind::streamline;
      merged.status = fwd.status;
      merged.closed = fwd.closed;
      merged.arc_length = fwd.arc_length + bwd.arc_length;
      merged.psi_drift = std::max(fwd.psi_drift, bwd.psi_drift);
      merged.points.assign(bwd.points.rbegin(), bwd.points.rend());
      merged.points.insert(merged.points.end(), fwd.points.begin() + 1, fwd.points.end());
      streams.push_back(std::move(merged));
    }

  const double margin = 20.0, panel = 560.0;
  const bool sphere = opts.sphere_panel;
  const double width = margin * 2 + panel + (sphere ? panel * 0.62 + margin : 0.0);
  const double height = margin * 2 + panel;
  detail::PanelMap map{margin, margin, panel / (win.x1 - win.x0), panel / (win.y1 - win.y0), win};

  std::string svg;
  svg.reserve(1 << 20);
  char head[512];
  std::snprintf(head, sizeof head,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n"
                "<rect width=\"%.0f\" height=\"%.0f\" fill=\"#ffffff\"/>\n"
                "<defs><clipPath id=\"win\"><rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" "
                "height=\"%.3f\"/></clipPath></defs>\n",
                width, height, width, height, width, height, margin, margin, panel, panel);
  svg += head;

  svg += "<g clip-path=\"url(#win)\">\n";
  svg += "<g stroke=\"#6688bb\" stroke-width=\"0.8\" fill=\"none\" opacity=\"0.85\">\n";
  for (const auto& tr : streams) detail::svg_polyline(svg, tr.points, map);
  svg += "</g>\n<g stroke=\"#111111\" stroke-width=\"1.4\" fill=\"none\">\n";
  for (const auto& tr : seps) detail::svg_polyline(svg, tr.points, map);
  svg += "</g>\n</g>\n";

  static const std::array<const char*, 7> palette = {"#c0392b", "#d35400", "#8e44ad", "#16a085",
                                                     "#2c3e50", "#b7950b", "#884ea0"};
  bool pole_at_inf = false, zero_at_inf = false;
  svg += "<g class=\"poles\">\n";
  for (std::size_t i = 0; i < f.poles().size(); ++i) {
    if (f.poles()[i].is_infinity()) {
      pole_at_inf = true;
      continue;
    }
    const Complex z = f.poles()[i].value();
    const int orb = pole_orbit[i];
    detail::svg_marker(svg, map.px(z.real()), map.py(z.imag()), orb > 2 ? 2 : orb,
                       palette[static_cast<std::size_t>(orb) % palette.size()], "pole-marker");
  }
  svg += "</g>\n<g class=\"zeros\">\n";
  for (const auto& q : f.zeros()) {
    if (q.is_infinity()) {
      zero_at_inf = true;
      continue;
    }
    detail::svg_marker(svg, map.px(q.value().real()), map.py(q.value().imag()), 3, "#000000",
                       "zero-marker");
  }
  svg += "</g>\n";

  svg += "<rect x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(margin) +
         "\" width=\"" + std::to_string(panel) + "\" height=\"" + std::to_string(panel) +
         "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  if (pole_at_inf || zero_at_inf) {
    std::string note = pole_at_inf && zero_at_inf ? "pole and zero at infinity"
                       : pole_at_inf              ? "pole at infinity"
                                                  : "zero at infinity";
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.3f\" y=\"%.3f\" font-family=\"monospace\" font-size=\"12\" "
                  "fill=\"#333333\">%s</text>\n",
                  margin + 4.0, margin + panel + 14.0, note.c_str());
    svg += buf;
  }

  if (sphere) {
    // Orthographic view from -y: infinity is the top of the disc, the front
    // hemisphere (embed y <= 0) is visible.
    const double r = panel * 0.31;
    const double cx = margin * 2 + panel + r, cy = margin + panel / 2;
    auto project = [&](const SpherePoint& p, double& x, double& y) {
      const auto e = p.embed3();
      x = cx + r * e[0];
      y = cy - r * e[2];
      return e[1] <= 0.0;
    };
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"#333333\"/>\n",
                  cx, cy, r);
    svg += buf;
    auto draw_runs = [&](const std::vector<Trajectory>& trs) {
      for (const auto& tr : trs) {
        std::string coords;
        int kept = 0;
        auto flush = [&] {
          if (kept >= 2) svg += "<polyline points=\"" + coords + "\"/>\n";
          coords.clear();
          kept = 0;
        };
        for (const Complex& z : tr.points) {
          double x, y;
          if (project(SpherePoint::from_complex(z), x, y)) {
            if (!coords.empty()) coords += ' ';
            detail::svg_num(coords, x);
            coords += ',';
            detail::svg_num(coords, y);
            ++kept;
          } else {
            flush();
          }
        }
        flush();
      }
    };
    svg += "<g stroke=\"#6688bb\" stroke-width=\"0.6\" fill=\"none\" opacity=\"0.85\">\n";
    draw_runs(streams);
    svg += "</g>\n<g stroke=\"#111111\" stroke-width=\"1.1\" fill=\"none\">\n";
    draw_runs(seps);
    svg += "</g>\n";
    for (std::size_t i = 0; i < f.poles().size(); ++i) {
      double x, y;
      if (!project(f.poles()[i], x, y)) continue;
      const int orb = pole_orbit[i];
      detail::svg_marker(svg, x, y, orb > 2 ? 2 : orb,
                         palette[static_cast<std::size_t>(orb) % palette.size()], "pole-marker-s");
    }
    for (const auto& q : f.zeros()) {
      double x, y;
      if (project(q, x, y)) detail::svg_marker(svg, x, y, 3, "#000000", "zero-marker-s");
    }
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace sphereforms
