#include "ribbon/document.hpp"

#include <initializer_list>
#include <set>

#include <json.hpp>

#include "ribbon/error.hpp"
#include "ribbon/nerve.hpp"
#include "ribbon/proximity.hpp"

namespace ribbon {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::SchemaViolation, (path.empty() ? "/" : path) + ": " + message);
}

[[noreturn]] void unresolved(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::UnresolvedReference, path + ": unknown " + what);
}

std::string child(const std::string& path, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& expect_object(const json& j, const std::string& path,
                          std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema_error(child(path, key), "unexpected key");
  }
  return j;
}

const json& expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& required_field(const json& obj, const char* key, const std::string& path) {
  const json* f = optional_field(obj, key);
  if (!f) schema_error(child(path, key), "missing required key");
  return *f;
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::string read_name(const json& j, const std::string& path) {
  std::string s = read_string(j, path);
  if (s.empty()) schema_error(path, "identifiers must be nonempty");
  return s;
}

void check_key_name(const std::string& key, const std::string& path) {
  if (key.empty()) schema_error(path, "identifiers must be nonempty");
  if (key.find('/') != std::string::npos) schema_error(path, "identifiers must not contain '/'");
}

Rational read_rational(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  schema_error(path, "expected a rational \"num/den\" string");
}

Point2 read_point(const json& j, const std::string& path) {
  expect_array(j, path);
  if (j.size() != 2) schema_error(path, "expected [x, y]");
  return {read_rational(j[0], child(path, 0)), read_rational(j[1], child(path, 1))};
}

std::vector<std::string> read_names(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_name(j[i], child(path, i)));
  return out;
}

template <std::size_t N>
std::array<std::string, N> read_tuple(const json& j, const std::string& path) {
  std::vector<std::string> names = read_names(j, path);
  if (names.size() != N) schema_error(path, "expected " + std::to_string(N) + " ids");
  std::array<std::string, N> out;
  std::copy(names.begin(), names.end(), out.begin());
  return out;
}

std::vector<Filament> read_filaments(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<Filament> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto ends = read_tuple<2>(j[i], child(path, i));
    out.push_back({ends[0], ends[1]});
  }
  return out;
}

template <class F>
void for_each_entry(const json& obj, const char* key, const std::string& path, F&& f) {
  const json* section = optional_field(obj, key);
  if (!section) return;
  const std::string p = child(path, key);
  if (!section->is_object()) schema_error(p, "expected an object");
  for (const auto& [name, value] : section->items()) {
    check_key_name(name, child(p, name));
    f(name, value, child(p, name));
  }
}

RibbonSpec read_ribbon(const json& j, const std::string& path) {
  expect_object(j, path, {"allow_concentric", "filaments", "holes", "inner", "outer"});
  RibbonSpec spec;
  spec.outer = read_name(required_field(j, "outer", path), child(path, "outer"));
  spec.inner = read_name(required_field(j, "inner", path), child(path, "inner"));
  if (const json* f = optional_field(j, "filaments"))
    spec.filaments = read_filaments(*f, child(path, "filaments"));
  if (const json* h = optional_field(j, "holes")) {
    const std::string hp = child(path, "holes");
    expect_array(*h, hp);
    for (std::size_t i = 0; i < h->size(); ++i) {
      const std::string ip = child(hp, i);
      expect_object((*h)[i], ip, {"at", "label"});
      Hole hole;
      hole.marker = read_point(required_field((*h)[i], "at", ip), child(ip, "at"));
      if (const json* l = optional_field((*h)[i], "label")) hole.label = read_string(*l, child(ip, "label"));
      spec.holes.push_back(std::move(hole));
    }
  }
  if (const json* a = optional_field(j, "allow_concentric")) {
    if (!a->is_boolean()) schema_error(child(path, "allow_concentric"), "expected a boolean");
    spec.allow_concentric = a->get<bool>();
  }
  return spec;
}

std::vector<std::string> read_group(const json& j, const std::string& path) {
  expect_object(j, path, {"ribbons"});
  return read_names(required_field(j, "ribbons", path), child(path, "ribbons"));
}

ComplexEntry read_entry(const json& j, const std::string& path) {
  expect_object(j, path,
                {"cycles", "edges", "ribbon_complexes", "ribbon_nerves", "ribbons", "triangles",
                 "vertices", "vortex_nerves"});
  ComplexEntry e;
  for_each_entry(j, "vertices", path, [&](const std::string& id, const json& v, const std::string& p) {
    e.vertices.emplace(id, read_point(v, p));
  });
  for_each_entry(j, "edges", path, [&](const std::string& id, const json& v, const std::string& p) {
    e.edges.emplace(id, read_tuple<2>(v, p));
  });
  for_each_entry(j, "triangles", path, [&](const std::string& id, const json& v, const std::string& p) {
    e.triangles.emplace(id, read_tuple<3>(v, p));
  });
  for_each_entry(j, "cycles", path, [&](const std::string& id, const json& v, const std::string& p) {
    e.cycles.emplace(id, read_names(v, p));
  });
  for_each_entry(j, "ribbons", path, [&](const std::string& id, const json& v, const std::string& p) {
    e.ribbons.emplace(id, read_ribbon(v, p));
  });
  for_each_entry(j, "ribbon_complexes", path,
                 [&](const std::string& id, const json& v, const std::string& p) {
                   e.ribbon_complexes.emplace(id, read_group(v, p));
                 });
  for_each_entry(j, "ribbon_nerves", path,
                 [&](const std::string& id, const json& v, const std::string& p) {
                   e.ribbon_nerves.emplace(id, read_group(v, p));
                 });
  for_each_entry(j, "vortex_nerves", path,
                 [&](const std::string& id, const json& v, const std::string& p) {
                   expect_object(v, p, {"cycles", "filaments"});
                   VortexSpec spec;
                   spec.cycles = read_names(required_field(v, "cycles", p), child(p, "cycles"));
                   if (const json* f = optional_field(v, "filaments"))
                     spec.filaments = read_filaments(*f, child(p, "filaments"));
                   e.vortex_nerves.emplace(id, std::move(spec));
                 });
  return e;
}

void check_references(const ComplexEntry& e, const std::string& path) {
  auto vertex = [&](const std::string& id, const std::string& p) {
    if (!e.vertices.contains(id)) unresolved(p, "vertex '" + id + "'");
  };
  auto cycle = [&](const std::string& id, const std::string& p) {
    if (!e.cycles.contains(id)) unresolved(p, "cycle '" + id + "'");
  };
  auto ribbon = [&](const std::string& id, const std::string& p) {
    if (!e.ribbons.contains(id)) unresolved(p, "ribbon '" + id + "'");
  };
  auto filaments = [&](const std::vector<Filament>& fs, const std::string& p) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      vertex(fs[i].outer_vertex, child(child(p, i), 0));
      vertex(fs[i].inner_vertex, child(child(p, i), 1));
    }
  };

  for (const auto& [id, ends] : e.edges)
    for (std::size_t i = 0; i < 2; ++i) vertex(ends[i], child(child(child(path, "edges"), id), i));
  for (const auto& [id, corners] : e.triangles)
    for (std::size_t i = 0; i < 3; ++i)
      vertex(corners[i], child(child(child(path, "triangles"), id), i));
  for (const auto& [id, loop] : e.cycles)
    for (std::size_t i = 0; i < loop.size(); ++i)
      vertex(loop[i], child(child(child(path, "cycles"), id), i));
  for (const auto& [id, spec] : e.ribbons) {
    const std::string p = child(child(path, "ribbons"), id);
    cycle(spec.outer, child(p, "outer"));
    cycle(spec.inner, child(p, "inner"));
    filaments(spec.filaments, child(p, "filaments"));
  }
  for (const char* section : {"ribbon_complexes", "ribbon_nerves"}) {
    const auto& groups = std::string(section) == "ribbon_complexes" ? e.ribbon_complexes : e.ribbon_nerves;
    for (const auto& [id, members] : groups)
      for (std::size_t i = 0; i < members.size(); ++i)
        ribbon(members[i], child(child(child(child(path, section), id), "ribbons"), i));
  }
  for (const auto& [id, spec] : e.vortex_nerves) {
    const std::string p = child(child(path, "vortex_nerves"), id);
    for (std::size_t i = 0; i < spec.cycles.size(); ++i) cycle(spec.cycles[i], child(child(p, "cycles"), i));
    filaments(spec.filaments, child(p, "filaments"));
  }

  std::set<std::string> names;
  auto claim = [&](const std::string& name, const char* section) {
    if (!names.insert(name).second)
      schema_error(child(child(path, section), name), "name already used in this complex");
  };
  for (const auto& [n, _] : e.cycles) claim(n, "cycles");
  for (const auto& [n, _] : e.ribbons) claim(n, "ribbons");
  for (const auto& [n, _] : e.ribbon_complexes) claim(n, "ribbon_complexes");
  for (const auto& [n, _] : e.ribbon_nerves) claim(n, "ribbon_nerves");
  for (const auto& [n, _] : e.vortex_nerves) claim(n, "vortex_nerves");
}

json rational_json(const Rational& r) { return to_string(r); }

json point_json(const Point2& p) { return json::array({rational_json(p.x), rational_json(p.y)}); }

json filaments_json(const std::vector<Filament>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(json::array({f.outer_vertex, f.inner_vertex}));
  return out;
}

json entry_json(const ComplexEntry& e) {
  json j = json::object();
  json& vertices = j["vertices"] = json::object();
  for (const auto& [id, p] : e.vertices) vertices[id] = point_json(p);
  json& edges = j["edges"] = json::object();
  for (const auto& [id, ends] : e.edges) edges[id] = json::array({ends[0], ends[1]});
  json& triangles = j["triangles"] = json::object();
  for (const auto& [id, c] : e.triangles) triangles[id] = json::array({c[0], c[1], c[2]});
  json& cycles = j["cycles"] = json::object();
  for (const auto& [id, loop] : e.cycles) cycles[id] = loop;
  json& ribbons = j["ribbons"] = json::object();
  for (const auto& [id, spec] : e.ribbons) {
    json holes = json::array();
    for (const auto& h : spec.holes) holes.push_back({{"at", point_json(h.marker)}, {"label", h.label}});
    ribbons[id] = {{"allow_concentric", spec.allow_concentric},
                   {"filaments", filaments_json(spec.filaments)},
                   {"holes", std::move(holes)},
                   {"inner", spec.inner},
                   {"outer", spec.outer}};
  }
  json& rcs = j["ribbon_complexes"] = json::object();
  for (const auto& [id, members] : e.ribbon_complexes) rcs[id] = {{"ribbons", members}};
  json& rns = j["ribbon_nerves"] = json::object();
  for (const auto& [id, members] : e.ribbon_nerves) rns[id] = {{"ribbons", members}};
  json& vns = j["vortex_nerves"] = json::object();
  for (const auto& [id, spec] : e.vortex_nerves)
    vns[id] = {{"cycles", spec.cycles}, {"filaments", filaments_json(spec.filaments)}};
  return j;
}

}  // namespace

ComplexDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error("", std::string("malformed JSON: ") + e.what());
  }
  expect_object(root, "", {"complexes", "format_version", "probes", "threshold"});

  ComplexDocument doc;
  const json& version = required_field(root, "format_version", "");
  if (!version.is_number_integer() || version.get<long long>() != document_format_version)
    schema_error("/format_version", "expected format_version " + std::to_string(document_format_version));

  const json& complexes = required_field(root, "complexes", "");
  if (!complexes.is_object()) schema_error("/complexes", "expected an object");
  for (const auto& [name, value] : complexes.items()) {
    const std::string path = child("/complexes", name);
    check_key_name(name, path);
    ComplexEntry entry = read_entry(value, path);
    check_references(entry, path);
    doc.complexes.emplace(name, std::move(entry));
  }

  if (const json* probes = optional_field(root, "probes")) {
    doc.probes = read_names(*probes, "/probes");
    for (const auto& p : doc.probes) find_probe(p);
  }
  if (const json* th = optional_field(root, "threshold"); th && !th->is_null()) {
    doc.threshold = read_rational(*th, "/threshold");
    Threshold check(*doc.threshold);
  }
  return doc;
}

std::string serialize_document(const ComplexDocument& doc) {
  json root = json::object();
  root["format_version"] = doc.format_version;
  json& complexes = root["complexes"] = json::object();
  for (const auto& [name, entry] : doc.complexes) complexes[name] = entry_json(entry);
  root["probes"] = doc.probes;
  root["threshold"] = doc.threshold ? rational_json(*doc.threshold) : json(nullptr);
  return root.dump() + "\n";
}

BuiltComplex build_complex(const std::string& name, const ComplexEntry& e) {
  BuiltComplex b{CellComplex(name), {}, {}, {}, {}, {}};
  for (const auto& [id, p] : e.vertices) b.cells.add_vertex(id, p);
  for (const auto& [id, ends] : e.edges) b.cells.add_edge(ends[0], ends[1], id);
  for (const auto& [id, c] : e.triangles) b.cells.add_triangle(c[0], c[1], c[2], id);
  for (const auto& [id, loop] : e.cycles) b.cycles.emplace(id, make_filled_cycle(b.cells, loop, id));

  for (const auto& [id, spec] : e.ribbons) {
    Ribbon rb(b.cycles.at(spec.outer), b.cycles.at(spec.inner), spec.filaments, spec.holes,
              id, RibbonOptions{.allow_concentric = spec.allow_concentric});
    for (const auto& f : spec.filaments) b.cells.add_edge(f.outer_vertex, f.inner_vertex);
    b.ribbons.emplace(id, std::move(rb));
  }
  auto members = [&b](const std::vector<std::string>& names) {
    std::vector<Ribbon> out;
    for (const auto& n : names) out.push_back(b.ribbons.at(n));
    return out;
  };
  for (const auto& [id, names] : e.ribbon_complexes)
    b.ribbon_complexes.emplace(id, RibbonComplex(members(names), id));
  for (const auto& [id, names] : e.ribbon_nerves)
    b.ribbon_nerves.emplace(id, make_ribbon_nerve(members(names), id));
  for (const auto& [id, spec] : e.vortex_nerves) {
    std::vector<FilledCycle> chain;
    for (const auto& c : spec.cycles) chain.push_back(b.cycles.at(c));
    VortexNerve vn(std::move(chain), spec.filaments, id);
    for (const auto& f : spec.filaments) b.cells.add_edge(f.outer_vertex, f.inner_vertex);
    b.vortex_nerves.emplace(id, std::move(vn));
  }
  return b;
}

TargetRef resolve_target(const ComplexDocument& doc, std::string_view target) {
  auto kind_in = [](const ComplexEntry& e, const std::string& name) -> std::optional<TargetKind> {
    if (e.cycles.contains(name)) return TargetKind::cycle;
    if (e.ribbons.contains(name)) return TargetKind::ribbon;
    if (e.ribbon_complexes.contains(name)) return TargetKind::ribbon_complex;
    if (e.ribbon_nerves.contains(name)) return TargetKind::ribbon_nerve;
    if (e.vortex_nerves.contains(name)) return TargetKind::vortex_nerve;
    return std::nullopt;
  };
  const std::string t(target);
  if (auto slash = t.find('/'); slash != std::string::npos) {
    const std::string complex = t.substr(0, slash), name = t.substr(slash + 1);
    auto it = doc.complexes.find(complex);
    if (it != doc.complexes.end())
      if (auto k = kind_in(it->second, name)) return {complex, name, *k};
    throw Error(ErrorCode::UnknownTarget, "no structure named '" + t + "'");
  }
  std::vector<TargetRef> found;
  for (const auto& [complex, entry] : doc.complexes)
    if (auto k = kind_in(entry, t)) found.push_back({complex, t, *k});
  if (found.empty()) throw Error(ErrorCode::UnknownTarget, "no structure named '" + t + "'");
  if (found.size() > 1)
    throw Error(ErrorCode::AmbiguousTarget,
                "'" + t + "' exists in several complexes; use complex/name");
  return found.front();
}

Structure structure_of(const BuiltComplex& b, const TargetRef& ref) {
  switch (ref.kind) {
    case TargetKind::ribbon: return b.ribbons.at(ref.name);
    case TargetKind::ribbon_complex: return b.ribbon_complexes.at(ref.name);
    case TargetKind::ribbon_nerve: return b.ribbon_nerves.at(ref.name);
    case TargetKind::vortex_nerve: return b.vortex_nerves.at(ref.name);
    case TargetKind::cycle: break;
  }
  throw Error(ErrorCode::UnsupportedEntityKind,
              "'" + ref.name + "' is a cycle; expected a ribbon, ribbon complex, ribbon nerve or vortex nerve");
}

}  // namespace ribbon
