// Command-line front end for .rcx documents.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbon/betti.hpp"
#include "ribbon/document.hpp"
#include "ribbon/error.hpp"
#include "ribbon/homology.hpp"
#include "ribbon/nerve.hpp"
#include "ribbon/plane_division.hpp"
#include "ribbon/proximity.hpp"
#include "ribbon/svg.hpp"

namespace {

using namespace ribbon;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaViolation, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_error(std::string_view code, const std::string& message) {
  nlohmann::json j = {{"error", code}, {"message", message}};
  std::cerr << j.dump() << "\n";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string_view kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::cycle: return "cycle";
    case TargetKind::ribbon: return "ribbon";
    case TargetKind::ribbon_complex: return "ribbon_complex";
    case TargetKind::ribbon_nerve: return "ribbon_nerve";
    case TargetKind::vortex_nerve: return "vortex_nerve";
  }
  return "?";
}

struct Loaded {
  ComplexDocument doc;
  TargetRef ref;
  BuiltComplex built;
};

Loaded load_target(const std::string& file, const std::string& target) {
  ComplexDocument doc = parse_document(read_file(file));
  TargetRef ref = resolve_target(doc, target);
  BuiltComplex built = build_complex(ref.complex, doc.complexes.at(ref.complex));
  return {std::move(doc), std::move(ref), std::move(built)};
}

int cmd_validate(const std::string& file) {
  ComplexDocument doc = parse_document(read_file(file));
  if (doc.complexes.empty()) {
    std::cout << "valid=false\nreason=document contains no complexes\n";
    return exit_validation;
  }
  bool all_valid = true;
  for (const auto& [name, entry] : doc.complexes) {
    BuiltComplex built = build_complex(name, entry);
    ValidityReport report = validate_cw(built.cells);
    all_valid = all_valid && report.valid();
    std::cout << "complex=" << name << "\n"
              << "cells=" << built.cells.cells().size() << "\n"
              << "nonempty=" << (report.nonempty ? "true" : "false") << "\n";
    for (const auto& v : report.containment)
      std::cout << "containment_violation=" << v.cell << " missing " << v.missing_face << "\n";
    for (const auto& v : report.intersection)
      std::cout << "intersection_violation=" << v.first << " " << v.second << ": " << v.detail << "\n";
    std::cout << "valid=" << (report.valid() ? "true" : "false") << "\n";
  }
  return all_valid ? exit_ok : exit_validation;
}

int cmd_betti(const std::string& file, const std::string& target) {
  Loaded l = load_target(file, target);
  Structure s = structure_of(l.built, l.ref);
  BettiTriple t = betti_triple(s);
  std::cout << "target=" << l.ref.complex << "/" << l.ref.name << "\n"
            << "kind=" << kind_name(l.ref.kind) << "\n"
            << "b0=" << t.b0 << "\nb1=" << t.b1 << "\nb2=" << t.b2 << "\n";
  if (const auto* rb = std::get_if<Ribbon>(&s)) std::cout << "betti_rb=" << betti_rb(*rb) << "\n";
  if (const auto* rc = std::get_if<RibbonComplex>(&s)) {
    ComplexBetti b = betti_rbx(*rc);
    std::cout << "betti_rbx_count=" << b.count_variant << "\nbetti_rbx_sum=" << b.sum_variant << "\n";
  }
  if (const auto* rn = std::get_if<RibbonNerve>(&s)) std::cout << "betti_rbnrv=" << betti_rbnrv(*rn) << "\n";
  if (const auto* vn = std::get_if<VortexNerve>(&s)) {
    std::cout << "betti_rb_vnrv=" << betti_rb_vnrv(*vn) << "\n";
    if (vn->cycles().size() >= 3) std::cout << "betti_rbnrv_vnrv=" << betti_rbnrv_vnrv(*vn) << "\n";
  }
  return exit_ok;
}

void print_nerve(const std::string& complex, const std::string& name, const RibbonComplex& rc) {
  std::vector<Region> regions;
  std::vector<std::string> labels;
  for (const auto& rb : rc.ribbons()) {
    regions.push_back(Region::from_ribbon(rb));
    labels.push_back(rb.label());
  }
  std::cout << "ribbon_complex=" << complex << "/" << name << "\n";
  for (const auto& group : ribbon_nerve(rc)) {
    std::vector<std::string> members;
    for (const auto& rb : group.ribbons) members.push_back(rb.label());
    std::cout << "group={" << join(members, ",") << "}\n";
  }
  for (const auto& s : nerve(regions).simplices) {
    std::vector<std::string> members;
    for (std::size_t i : s) members.push_back(labels[i]);
    std::cout << "simplex={" << join(members, ",") << "}\n";
  }
}

int cmd_nerve(const std::string& file, const std::string& target) {
  ComplexDocument doc = parse_document(read_file(file));
  if (!target.empty()) {
    TargetRef ref = resolve_target(doc, target);
    BuiltComplex built = build_complex(ref.complex, doc.complexes.at(ref.complex));
    if (ref.kind != TargetKind::ribbon_complex)
      throw Error(ErrorCode::UnsupportedEntityKind, "'" + target + "' is not a ribbon complex");
    print_nerve(ref.complex, ref.name, built.ribbon_complexes.at(ref.name));
    return exit_ok;
  }
  for (const auto& [name, entry] : doc.complexes) {
    BuiltComplex built = build_complex(name, entry);
    for (const auto& [rc_name, rc] : built.ribbon_complexes) print_nerve(name, rc_name, rc);
  }
  return exit_ok;
}

int cmd_near(const std::string& file, const std::string& a, const std::string& b,
             const std::string& probes_arg, const std::string& th_arg) {
  ComplexDocument doc = parse_document(read_file(file));
  std::vector<std::string> names = probes_arg.empty() ? doc.probes : split(probes_arg, ',');
  if (names.empty()) throw Error(ErrorCode::SchemaViolation, "no probes given and none in the document");
  std::optional<Rational> th = doc.threshold;
  if (!th_arg.empty()) th = parse_rational(th_arg);
  if (!th) throw Error(ErrorCode::SchemaViolation, "no threshold given and none in the document");
  Threshold threshold(*th);
  std::vector<Probe> probes = find_probes(names);

  auto entity = [&doc](const std::string& target) {
    TargetRef ref = resolve_target(doc, target);
    return structure_of(build_complex(ref.complex, doc.complexes.at(ref.complex)), ref);
  };
  Entity ea = entity(a), eb = entity(b);
  std::cout << "probes=" << join(names, ",") << "\n"
            << "threshold=" << to_string(threshold.value()) << "\n"
            << "distance2=" << to_string(description_distance2(ea, eb, probes)) << "\n"
            << "near=" << (dx_near(ea, eb, probes, threshold) ? "true" : "false") << "\n";
  return exit_ok;
}

int cmd_divide(const std::string& file, const std::string& target, std::size_t grid,
               const std::string& margin_arg) {
  Loaded l = load_target(file, target);
  if (l.ref.kind != TargetKind::ribbon)
    throw Error(ErrorCode::UnsupportedEntityKind, "'" + target + "' is not a ribbon");
  const Ribbon& rb = l.built.ribbons.at(l.ref.name);
  Frame frame = frame_around(rb, margin_arg.empty() ? Rational(1) : parse_rational(margin_arg));
  PartitionReport r = verify_partition(rb, frame, grid);
  std::cout << "target=" << l.ref.complex << "/" << l.ref.name << "\n"
            << "frame=" << to_string(frame.min.x) << "," << to_string(frame.min.y) << ","
            << to_string(frame.max.x) << "," << to_string(frame.max.y) << "\n"
            << "samples=" << r.samples << "\n"
            << "multi_labeled=" << r.multi_labeled << "\n"
            << "unlabeled=" << r.unlabeled << "\n"
            << "mismatched=" << r.mismatched << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    std::string_view label = to_string(static_cast<RegionLabel>(i));
    std::cout << "count." << label << "=" << r.counts[i] << "\n";
    if (const auto& w = r.witnesses[i])
      std::cout << "witness." << label << "=" << to_string(w->point.x) << "," << to_string(w->point.y)
                << " radius=" << to_string(w->radius) << "\n";
  }
  std::cout << "ok=" << (r.ok() ? "true" : "false") << "\n";
  return r.ok() ? exit_ok : exit_validation;
}

int cmd_nervecheck(const std::string& file, long resolution, const std::string& target) {
  ComplexDocument doc = parse_document(read_file(file));
  std::vector<std::string> complexes;
  if (target.empty()) {
    for (const auto& [name, _] : doc.complexes) complexes.push_back(name);
  } else {
    if (!doc.complexes.contains(target))
      throw Error(ErrorCode::UnknownTarget, "no complex named '" + target + "'");
    complexes.push_back(target);
  }
  bool all_pass = true;
  for (const auto& name : complexes) {
    BuiltComplex built = build_complex(name, doc.complexes.at(name));
    std::vector<Region> regions;
    for (const auto& [id, cycle] : built.cycles) {
      if (!is_convex(cycle.points()))
        throw Error(ErrorCode::NonConvexRegion, "cycle '" + id + "' is not convex");
      regions.push_back(Region::from_cycle(cycle));
    }
    if (regions.empty()) throw Error(ErrorCode::EmptyCollection, "complex '" + name + "' has no cycles");
    Point2 lo = regions.front().outer().front().min_corner();
    Point2 hi = regions.front().outer().front().max_corner();
    for (const auto& r : regions) {
      const Polygon& p = r.outer().front();
      lo = {std::min(lo.x, p.min_corner().x), std::min(lo.y, p.min_corner().y)};
      hi = {std::max(hi.x, p.max_corner().x), std::max(hi.y, p.max_corner().y)};
    }
    Frame frame({lo.x - 1, lo.y - 1}, {hi.x + 1, hi.y + 1});
    NerveCheckReport report = nerve_theorem_check(regions, frame, resolution);
    all_pass = all_pass && report.pass();
    std::cout << "complex=" << name << "\n"
              << "regions=" << regions.size() << "\n"
              << "nerve_b0=" << report.nerve_ranks.b0 << "\nnerve_b1=" << report.nerve_ranks.b1 << "\n"
              << "union_b0=" << report.union_ranks.b0 << "\nunion_b1=" << report.union_ranks.b1 << "\n";
    if (report.clearance_pixels) std::cout << "clearance_pixels=" << to_string(*report.clearance_pixels) << "\n";
    std::cout << "pass=" << (report.pass() ? "true" : "false") << "\n";
  }
  return all_pass ? exit_ok : exit_validation;
}

int cmd_render(const std::string& file, const std::string& target, const std::string& out) {
  ComplexDocument doc = parse_document(read_file(file));
  std::string svg = render_svg(doc, target);
  if (out.empty() || out == "-") {
    std::cout << svg;
    return exit_ok;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::SchemaViolation, "cannot write '" + out + "'");
  f << svg;
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar ribbon complexes: validation, Betti counters, nerves, proximity and rendering"};
  app.require_subcommand(1);

  std::string file, target, a, b, probes, th, out, margin;
  std::size_t grid = 40;
  long resolution = 16;

  auto* validate = app.add_subcommand("validate", "check the cell-complex conditions of every complex");
  validate->add_option("file", file, ".rcx document")->required();

  auto* betti = app.add_subcommand("betti", "print the Betti counters of a structure");
  betti->add_option("file", file, ".rcx document")->required();
  betti->add_option("--target", target, "structure name or complex/name")->required();

  auto* nerve_cmd = app.add_subcommand("nerve", "print ribbon-nerve groups and nerve simplices");
  nerve_cmd->add_option("file", file, ".rcx document")->required();
  nerve_cmd->add_option("--target", target, "ribbon complex (default: all)");

  auto* near = app.add_subcommand("near", "approximate descriptive nearness of two structures");
  near->add_option("file", file, ".rcx document")->required();
  near->add_option("--a", a, "first structure")->required();
  near->add_option("--b", b, "second structure")->required();
  near->add_option("--probes", probes, "comma-separated probe names (default: document probes)");
  near->add_option("--th", th, "threshold as num/den (default: document threshold)");

  auto* divide = app.add_subcommand("divide", "verify the three-region division by a ribbon");
  divide->add_option("file", file, ".rcx document")->required();
  divide->add_option("--target", target, "ribbon")->required();
  divide->add_option("--grid", grid, "lattice density")->required()->check(CLI::PositiveNumber);
  divide->add_option("--margin", margin, "frame margin around the outer loop as num/den (default 1/1)");

  auto* nervecheck = app.add_subcommand("nervecheck", "compare nerve and union homology of convex cycles");
  nervecheck->add_option("file", file, ".rcx document")->required();
  nervecheck->add_option("--resolution", resolution, "pixels per unit")->required();
  nervecheck->add_option("--target", target, "complex name (default: all)");

  auto* render = app.add_subcommand("render", "write an SVG drawing");
  render->add_option("file", file, ".rcx document")->required();
  render->add_option("--target", target, "structure to draw")->required();
  render->add_option("-o,--output", out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return exit_schema;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*betti) return cmd_betti(file, target);
    if (*nerve_cmd) return cmd_nerve(file, target);
    if (*near) return cmd_near(file, a, b, probes, th);
    if (*divide) return cmd_divide(file, target, grid, margin);
    if (*nervecheck) return cmd_nervecheck(file, resolution, target);
    if (*render) return cmd_render(file, target, out);
  } catch (const Error& e) {
    print_error(to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return exit_computation;
  }
  return exit_schema;
}
