// Command-line surface: isotropy, check, synth, sample, isochrony, render,
// verify-paper. Exit codes: 0 success, 1 domain errors (bad form, illegal
// table cell, failed sampling), 2 I/O errors.
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphereforms/json_io.hpp"
#include "sphereforms/reference_suite.hpp"
#include "sphereforms/synthesis.hpp"

using namespace sphereforms;

namespace {

Complex parse_complex_pair(const std::string& s) {
  double re = 0, im = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) != 2)
    throw std::domain_error("expected re,im but got \"" + s + "\"");
  return {re, im};
}

Window parse_window(const std::string& s) {
  Window w;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf,%lf", &w.x0, &w.x1, &w.y0, &w.y1) != 4)
    throw std::domain_error("expected x0,x1,y0,y1 but got \"" + s + "\"");
  if (!(w.x0 < w.x1 && w.y0 < w.y1)) throw std::domain_error("window must have x0<x1, y0<y1");
  return w;
}

RationalOneForm load_form(const std::string& path) { return form_from_json(load_json_file(path)); }

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    save_text_file(out_path, content);
}

struct Args {
  std::string form_path, out_path, json_path, group = "1", group_file, window = "-3,3,-3,3";
  std::string lambda = "0,-1", grid = "25,25";
  int n = 0, l1 = 0, l2 = 0, seeds = 10;
  std::optional<int> dif;
  unsigned long long seed = 1;
  double eps = kEps, theta = 0.0, max_arc = 40.0, tol = 1e-8;
  bool strict_two_pole = false, sphere = false, swap_fixed = false;
  std::vector<std::string> poles, zeros;
};

int run(const std::string& cmd, const Args& a) {
  if (cmd == "isotropy") {
    const RationalOneForm f = load_form(a.form_path);
    std::cout << isotropy_to_json(isotropy(f, a.eps)).dump(1) << "\n";
    return 0;
  }

  if (cmd == "check") {
    const RationalOneForm f = load_form(a.form_path);
    const FiniteMobiusGroup G = a.group_file.empty()
                                    ? canonical_group(tag_from_name(a.group, a.n))
                                    : group_from_json(load_json_file(a.group_file));
    const CharacterizationReport rep = check_characterization(f, G, a.eps);
    json fails = json::array();
    for (const auto& c : rep.cond3_failures)
      fails.push_back(json{{"element", map_to_json(c.element)},
                           {"order", c.order},
                           {"fixed_point", point_to_json(c.fixed_point)},
                           {"reason", c.reason}});
    std::cout << json{{"cond1", rep.cond1},
                      {"cond2", rep.cond2},
                      {"cond3_failures", fails},
                      {"maximal", rep.maximal},
                      {"all", rep.all()}}
                     .dump(1)
              << "\n";
    return 0;
  }

  if (cmd == "synth" || cmd == "sample") {
    const GroupTypeTag tag = tag_from_name(a.group, a.n);
    int l1 = a.l1;
    if (a.dif) {
      if (a.l1 != 0 && a.l1 != a.l2 + *a.dif)
        throw std::domain_error("--l1 contradicts --dif (dif = l1 - l2)");
      l1 = a.l2 + *a.dif;
    }
    RationalOneForm form = [&] {
      if (cmd == "sample")
        return sample_stratum(tag, l1, a.l2, a.seed, parse_complex_pair(a.lambda), a.eps).form;
      SynthesisSpec spec;
      spec.group = tag;
      spec.dif = l1 - a.l2;
      spec.lambda = parse_complex_pair(a.lambda);
      spec.swap_fixed = a.swap_fixed;
      for (const auto& s : a.poles)
        spec.interior_poles.push_back(SpherePoint::from_complex(parse_complex_pair(s)));
      for (const auto& s : a.zeros)
        spec.interior_zeros.push_back(SpherePoint::from_complex(parse_complex_pair(s)));
      if (static_cast<int>(spec.interior_poles.size()) != a.l2 ||
          static_cast<int>(spec.interior_zeros.size()) != l1)
        throw std::domain_error(
            "synth needs explicit --pole/--zero representatives matching --l1/--l2 "
            "(use sample for random interior orbits)");
      return synthesize(spec, a.eps).form;
    }();
    emit(a.out_path, form_to_json(form).dump(1) + "\n");
    return 0;
  }

  if (cmd == "isochrony") {
    const RationalOneForm f = load_form(a.form_path);
    const IsochronyReport rep = isochrony_report(f, a.strict_two_pole, kAngularEps);
    bool mirror_found = false;
    try {
      mirror_found = mirror_search(f, isotropy(f, a.eps).group, a.eps).has_value();
    } catch (const std::exception&) {
      mirror_found = false;  // two-pole forms and trivial groups have no candidate triples
    }
    std::cout << isochrony_to_json(rep, mirror_found).dump(1) << "\n";
    return 0;
  }

  if (cmd == "render") {
    const RationalOneForm f = load_form(a.form_path);
    PortraitOptions opts;
    opts.window = parse_window(a.window);
    opts.theta = a.theta;
    opts.seeds_per_axis = a.seeds;
    opts.max_arc_length = a.max_arc;
    opts.tol = a.tol;
    opts.sphere_panel = a.sphere;
    emit(a.out_path.empty() ? "portrait.svg" : a.out_path, render_svg(f, opts));
    if (!a.json_path.empty()) {
      int nx = 0, ny = 0;
      if (std::sscanf(a.grid.c_str(), "%d,%d", &nx, &ny) != 2)
        throw std::domain_error("expected nx,ny but got \"" + a.grid + "\"");
      save_text_file(a.json_path,
                     field_samples_to_json(sample_grid(f, opts.window, nx, ny, a.theta)).dump(1) +
                         "\n");
    }
    return 0;
  }

  // verify-paper
  return run_reference_suite(std::cout) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational 1-forms on the sphere: symmetry, moduli strata, phase portraits"};
  app.require_subcommand(1);
  Args a;

  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--form", a.form_path, "input form JSON")->required();
  };
  auto add_eps = [&](CLI::App* sub) {
    sub->add_option("--eps", a.eps, "matching tolerance")->capture_default_str();
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", a.group, "group tag: 1, Zn, Dn, A4, S4, A5")->required();
    sub->add_option("--n", a.n, "parameter for long names cyclic/dihedral")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub, const char* what) {
    sub->add_option("--out", a.out_path, what);
  };

  CLI::App* iso = app.add_subcommand("isotropy", "symmetry group of a form");
  add_form(iso);
  add_eps(iso);

  CLI::App* chk = app.add_subcommand("check", "invariance + maximality against a given group");
  add_form(chk);
  add_group(chk);
  chk->add_option("--group-file", a.group_file, "group JSON overriding --group");
  add_eps(chk);

  CLI::App* syn = app.add_subcommand("synth", "build an invariant form on a table cell");
  add_group(syn);
  syn->add_option("--dif", [&a](const std::vector<std::string>& v) {
       a.dif = std::stoi(v[0]);
       return true;
     }, "cell difference l1 - l2")->type_name("INT");
  syn->add_option("--l1", a.l1, "interior zero orbits")->capture_default_str();
  syn->add_option("--l2", a.l2, "interior pole orbits")->capture_default_str();
  syn->add_option("--lambda", a.lambda, "scale as re,im")->capture_default_str();
  syn->add_option("--pole", a.poles, "interior pole representative re,im (repeatable)");
  syn->add_option("--zero", a.zeros, "interior zero representative re,im (repeatable)");
  syn->add_flag("--swap-fixed", a.swap_fixed,
                "Z2 dif=-1: put the fixed-point pole at infinity instead of 0");
  add_out(syn, "output form JSON path (stdout if absent)");
  add_eps(syn);

  CLI::App* smp = app.add_subcommand("sample", "random form on a stratum, deterministic by seed");
  add_group(smp);
  smp->add_option("--l1", a.l1, "interior zero orbits")->capture_default_str();
  smp->add_option("--l2", a.l2, "interior pole orbits")->capture_default_str();
  smp->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
  smp->add_option("--lambda", a.lambda, "scale as re,im")->capture_default_str();
  add_out(smp, "output form JSON path (stdout if absent)");
  add_eps(smp);

  CLI::App* iso2 = app.add_subcommand("isochrony", "residues, rotatability, mirror existence");
  add_form(iso2);
  iso2->add_flag("--strict-two-pole", a.strict_two_pole,
                 "do not call two-pole forms isochronous");
  add_eps(iso2);

  CLI::App* ren = app.add_subcommand("render", "SVG phase portrait of the dual field");
  add_form(ren);
  ren->add_option("--window", a.window, "plane window x0,x1,y0,y1")->capture_default_str();
  ren->add_option("--theta", a.theta, "field rotation angle")->capture_default_str();
  add_out(ren, "output SVG path (default portrait.svg)");
  ren->add_flag("--sphere", a.sphere, "add an orthographic sphere panel");
  ren->add_option("--json", a.json_path, "also write grid field samples as JSON");
  ren->add_option("--grid", a.grid, "sample grid nx,ny for --json")->capture_default_str();
  ren->add_option("--seeds", a.seeds, "streamline seeds per axis")->capture_default_str();
  ren->add_option("--max-arc", a.max_arc, "arc-length budget per trajectory")
      ->capture_default_str();
  ren->add_option("--tol", a.tol, "integrator tolerance")->capture_default_str();

  app.add_subcommand("verify-paper", "run the bundled reference forms against expectations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), a);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad json: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
