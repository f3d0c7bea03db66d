#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "torva/blowup.hpp"
#include "torva/io.hpp"
#include "torva/semigroup.hpp"
#include "torva/svg.hpp"

namespace {

using namespace torva;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& output_path, const std::string& payload) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
  out << payload;
}

struct CommonOpts {
  std::string input;
  std::string output;
  HeaderOverrides overrides;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_output = true) {
  cmd->add_option("file", opts.input, "input file")->required();
  if (with_output) cmd->add_option("--output", opts.output, "write the result to this file");
  cmd->add_option("--field", opts.overrides.field, "override the header field (Q or Qsqrt:D)");
  cmd->add_option("--gamma", opts.overrides.gamma,
                  "override the value group (comma separated generators or 'all')");
  cmd->add_flag_callback(
      "--discrete", [&opts]() { opts.overrides.discrete = true; },
      "treat the valuation as discrete");
}

std::string datum_lines(const SemigroupGens& gens) {
  std::string out;
  for (const auto& d : gens.elems) {
    for (const auto& x : d.u) out += x.str() + " ";
    out += "| " + d.gamma.to_string() + "\n";
  }
  return out;
}

int cmd_check(const CommonOpts& opts) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  const FanCheck& check = doc.fan.validation();
  if (!check.ok) {
    std::cout << "valid: no\n";
    std::cerr << check.message << "\n";
    return 2;
  }
  std::cout << "valid: yes\n";
  std::cout << "complete: " << (is_complete(doc.fan) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_slice(const CommonOpts& opts, const std::string& level) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  const Scalar r = Scalar::parse(level);
  std::ostringstream out;
  const auto& cones = doc.fan.maximal_cones();
  for (size_t i = 0; i < cones.size(); ++i) {
    out << "cone " << i << "\n";
    const HPolyhedron p = cones[i].slice(r);
    if (p.is_empty()) {
      out << "  empty\n";
      continue;
    }
    for (const auto& v : p.vertices()) out << "  vertex " << vec_to_string(v) << "\n";
    for (const auto& ray : p.rays()) out << "  ray " << vec_to_string(ray) << "\n";
    for (const auto& l : p.lineality()) out << "  line " << vec_to_string(l) << "\n";
  }
  emit(opts.output, out.str());
  return 0;
}

int cmd_dual(const CommonOpts& opts) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  std::ostringstream out;
  const auto& cones = doc.fan.maximal_cones();
  for (size_t i = 0; i < cones.size(); ++i) {
    out << "cone " << i << " dual\n";
    const HCone dual = cones[i].as_cone().dual();
    for (const auto& ray : dual.generators().rays) out << "  ray " << vec_to_string(ray) << "\n";
    for (const auto& l : dual.generators().lineality) out << "  line " << vec_to_string(l) << "\n";
  }
  emit(opts.output, out.str());
  return 0;
}

int cmd_hilbert(const CommonOpts& opts) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  if (doc.ctx.disc != 0)
    throw DomainError("hilbert needs the plain rational field");
  if (!doc.ctx.gamma.is_discrete_cyclic())
    throw DomainError("hilbert needs a value group with a single positive rational generator");
  const Scalar g = doc.ctx.gamma.generators().front();
  const GammaCone& chart = doc.fan.maximal_cones().front();
  // Generators of the dual-cone semigroup over M x (gZ), computed in the
  // rescaled lattice M x Z.
  const HCone dual = chart.as_cone().dual();
  std::vector<ScalarVec> rays, lines;
  const int n = chart.rank();
  for (auto r : dual.generators().rays) {
    r[size_t(n)] = r[size_t(n)] / g;
    rays.push_back(r);
  }
  for (auto l : dual.generators().lineality) {
    l[size_t(n)] = l[size_t(n)] / g;
    lines.push_back(l);
  }
  const HCone scaled = HCone::from_generators(n + 1, rays, lines);
  std::vector<MonomialDatum> elems;
  for (const auto& v : cone_semigroup_generators(scaled)) {
    IntVec u(v.begin(), v.end() - 1);
    elems.push_back({std::move(u), Scalar(v.back()) * g});
  }
  std::sort(elems.begin(), elems.end());
  emit(opts.output, datum_lines(SemigroupGens{n, std::move(elems)}));
  return 0;
}

int cmd_algebra_gens(const CommonOpts& opts) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  const SemigroupGens gens = algebra_generators(doc.fan.maximal_cones().front(), doc.ctx);
  emit(opts.output, datum_lines(gens));
  return 0;
}

std::string census_report(const OrbitCensus& census) {
  auto section = [](const std::string& name, const std::vector<int>& dims) {
    std::map<int, int> by_dim;
    for (int d : dims) ++by_dim[d];
    std::string out = name + ": " + std::to_string(dims.size()) + "\n";
    for (const auto& [d, k] : by_dim)
      out += "  dim " + std::to_string(d) + ": " + std::to_string(k) + "\n";
    return out;
  };
  std::vector<int> gd, sd;
  for (const auto& f : census.generic_faces) gd.push_back(f.dim());
  for (const auto& f : census.special_faces) sd.push_back(f.dim);
  return section("generic orbits", gd) + section("special orbits", sd) +
         "components: " + std::to_string(census.components) + "\n";
}

int cmd_orbits(const CommonOpts& opts) {
  const ConfigDocument doc = parse_config_file(slurp(opts.input), opts.overrides);
  emit(opts.output, census_report(orbit_census(doc.cfg)));
  return 0;
}

int cmd_complete(const CommonOpts& opts) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  const GammaFan done = complete_extension(doc.fan, doc.ctx.gamma);
  emit(opts.output, serialize_fan(done, doc.ctx));
  return 0;
}

int cmd_refine_complete(const CommonOpts& opts) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  emit(opts.output, serialize_fan(refine_to_complete(doc.fan), doc.ctx));
  return 0;
}

int cmd_normalize_projective(const CommonOpts& opts) {
  const ConfigDocument doc = parse_config_file(slurp(opts.input), opts.overrides);
  const GammaFan fan = normalization_fan(doc.cfg, doc.ctx);
  const std::string report = census_report(orbit_census(doc.cfg));
  emit(opts.output, serialize_fan(fan, doc.ctx));
  if (opts.output.empty())
    std::cerr << report;
  else
    std::cout << report;
  return 0;
}

int cmd_blowup(const CommonOpts& opts, const std::string& ideal_path,
               const std::string& subfan_path) {
  const FanDocument chart_doc = parse_fan_file(slurp(opts.input), opts.overrides);
  const IdealDocument ideal_doc = parse_ideal_file(slurp(ideal_path), opts.overrides);
  if (!same_session(chart_doc.ctx, ideal_doc.ctx))
    throw DomainError("chart and ideal files disagree on field, value group, rank or valuation");
  const InvariantIdeal ideal =
      make_invariant_ideal(chart_doc.fan.maximal_cones().front(), ideal_doc.gens);
  const BlowupSubdivision sub = blowup_subdivision(ideal);
  emit(opts.output, serialize_fan(sub.fan, chart_doc.ctx));
  if (!subfan_path.empty()) {
    const FanDocument sub_doc = parse_fan_file(slurp(subfan_path), opts.overrides);
    if (!same_session(chart_doc.ctx, sub_doc.ctx))
      throw DomainError("chart and subfan files disagree on the session header");
    const bool ok = is_u_admissible(ideal, sub_doc.fan.maximal_cones());
    const std::string report = std::string("admissible: ") + (ok ? "yes" : "no") + "\n";
    if (opts.output.empty())
      std::cerr << report;
    else
      std::cout << report;
  }
  return 0;
}

int cmd_svg(const CommonOpts& opts, const std::string& level) {
  const FanDocument doc = parse_fan_file(slurp(opts.input), opts.overrides);
  emit(opts.output, render_slice_svg(doc.fan, Scalar::parse(level)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polyhedral toolkit for toric data over rank-one valuations"};
  app.require_subcommand(1);

  CommonOpts check_o, slice_o, dual_o, hilbert_o, gens_o, orbits_o, complete_o, refine_o,
      normalize_o, blowup_o, svg_o;
  std::string slice_level = "1/1", svg_level = "1/1", ideal_path, subfan_path;

  auto* check = app.add_subcommand("check", "validate a fan and test completeness");
  add_common(check, check_o, false);
  auto* slice = app.add_subcommand("slice", "level-r slices of every maximal cone");
  add_common(slice, slice_o);
  slice->add_option("--level", slice_level, "slice level (scalar literal)");
  auto* dual = app.add_subcommand("dual", "dual cone generators of every maximal cone");
  add_common(dual, dual_o);
  auto* hilbert =
      app.add_subcommand("hilbert", "semigroup generators of the dual cone lattice points");
  add_common(hilbert, hilbert_o);
  auto* gens = app.add_subcommand("algebra-gens", "weight algebra generators per vertex");
  add_common(gens, gens_o);
  auto* orbits = app.add_subcommand("orbits", "orbit census of a weighted configuration");
  add_common(orbits, orbits_o);
  auto* complete = app.add_subcommand("complete", "extend a fan to a complete fan");
  add_common(complete, complete_o);
  auto* refine = app.add_subcommand("refine-complete", "complete arrangement refinement");
  add_common(refine, refine_o);
  auto* normalize =
      app.add_subcommand("normalize-projective", "normalization fan of a weighted configuration");
  add_common(normalize, normalize_o);
  auto* blowup = app.add_subcommand("blowup", "subdivision induced by an invariant ideal");
  add_common(blowup, blowup_o);
  blowup->add_option("--ideal", ideal_path, "ideal file")->required();
  blowup->add_option("--subfan", subfan_path, "fan file naming the subfan to test");
  auto* svg = app.add_subcommand("svg", "render a level slice of a rank-2 fan");
  add_common(svg, svg_o);
  svg->add_option("--level", svg_level, "slice level (scalar literal)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_o);
    if (slice->parsed()) return cmd_slice(slice_o, slice_level);
    if (dual->parsed()) return cmd_dual(dual_o);
    if (hilbert->parsed()) return cmd_hilbert(hilbert_o);
    if (gens->parsed()) return cmd_algebra_gens(gens_o);
    if (orbits->parsed()) return cmd_orbits(orbits_o);
    if (complete->parsed()) return cmd_complete(complete_o);
    if (refine->parsed()) return cmd_refine_complete(refine_o);
    if (normalize->parsed()) return cmd_normalize_projective(normalize_o);
    if (blowup->parsed()) return cmd_blowup(blowup_o, ideal_path, subfan_path);
    if (svg->parsed()) return cmd_svg(svg_o, svg_level);
  } catch (const ExtensionFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& c : e.conflicts) std::cerr << "conflict: " << c << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error";
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << ": " << e.what() << "\n";
    return 1;
  } catch (const GammaViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ModeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
