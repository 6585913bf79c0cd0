#include "ribbon/proximity.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ribbon/error.hpp"
#include "ribbon/fixed_point.hpp"

namespace ribbon {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

Rational count(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

std::size_t distinct_vertices(const std::vector<Ribbon>& ribbons) {
  std::set<CellId> ids;
  for (const auto& rb : ribbons) {
    ids.insert(rb.outer().loop.begin(), rb.outer().loop.end());
    ids.insert(rb.inner().loop.begin(), rb.inner().loop.end());
  }
  return ids.size();
}

std::vector<Probe> build_registry() {
  std::vector<Probe> probes;
  probes.push_back({"b0_filaments", [](const Entity& e) -> std::optional<Rational> {
                      return count(betti_triple(e).b0);
                    }});
  probes.push_back({"b1_cycles", [](const Entity& e) -> std::optional<Rational> {
                      return count(betti_triple(e).b1);
                    }});
  probes.push_back({"b2_holes", [](const Entity& e) -> std::optional<Rational> {
                      return count(betti_triple(e).b2);
                    }});
  probes.push_back({"betti_rb", [](const Entity& e) -> std::optional<Rational> {
                      if (const auto* rb = std::get_if<Ribbon>(&e)) return count(betti_rb(*rb));
                      return std::nullopt;
                    }});
  probes.push_back({"ribbon_count", [](const Entity& e) -> std::optional<Rational> {
                      return std::visit(
                          overloaded{
                              [](const Ribbon&) { return count(1); },
                              [](const RibbonComplex& x) { return count(x.ribbons().size()); },
                              [](const RibbonNerve& x) { return count(x.ribbons.size()); },
                              [](const VortexNerve& x) { return count(x.cycles().size() - 1); },
                          },
                          e);
                    }});
  probes.push_back({"fixed_point_gradient_angle", [](const Entity& e) -> std::optional<Rational> {
                      const auto* rb = std::get_if<Ribbon>(&e);
                      if (!rb || rb->filaments().empty()) return std::nullopt;
                      return gradient_angle(*rb, rb->filaments().front().inner_vertex);
                    }});
  probes.push_back({"vertex_count", [](const Entity& e) -> std::optional<Rational> {
                      return std::visit(
                          overloaded{
                              [](const Ribbon& x) { return count(distinct_vertices({x})); },
                              [](const RibbonComplex& x) {
                                return count(distinct_vertices(x.ribbons()));
                              },
                              [](const RibbonNerve& x) { return count(distinct_vertices(x.ribbons)); },
                              [](const VortexNerve& x) {
                                std::set<CellId> ids;
                                for (const auto& c : x.cycles()) ids.insert(c.loop.begin(), c.loop.end());
                                return count(ids.size());
                              },
                          },
                          e);
                    }});
  return probes;
}

const char* kind_name(const Entity& e) {
  return std::visit(overloaded{
                        [](const Ribbon&) { return "ribbon"; },
                        [](const RibbonComplex&) { return "ribbon complex"; },
                        [](const RibbonNerve&) { return "ribbon nerve"; },
                        [](const VortexNerve&) { return "vortex nerve"; },
                    },
                    e);
}

Rational squared_gap(const ProbeVector& a, const ProbeVector& b) {
  Rational total;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    Rational d = a.values[i] - b.values[i];
    total += d * d;
  }
  return total;
}

std::string show(const std::vector<std::size_t>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i)
    out += (i ? "," : "") + std::to_string(members[i]);
  return out + "}";
}

}  // namespace

const std::vector<Probe>& probe_registry() {
  static const std::vector<Probe> registry = build_registry();
  return registry;
}

const Probe& find_probe(const std::string& name) {
  for (const auto& p : probe_registry())
    if (p.name == name) return p;
  throw Error(ErrorCode::UnknownProbe, "unknown probe '" + name + "'");
}

std::vector<Probe> find_probes(const std::vector<std::string>& names) {
  std::vector<Probe> out;
  for (const auto& n : names) out.push_back(find_probe(n));
  return out;
}

Threshold::Threshold(Rational value) : value_(std::move(value)) {
  if (value_ <= 0)
    throw Error(ErrorCode::InvalidThreshold, "threshold must be positive, got " + to_string(value_));
}

ProbeVector describe(const Entity& entity, const std::vector<Probe>& probes) {
  if (probes.empty()) throw Error(ErrorCode::EmptyCollection, "probe list is empty");
  ProbeVector out;
  for (const auto& probe : probes) {
    std::optional<Rational> v = probe.evaluate(entity);
    if (!v)
      throw Error(ErrorCode::UnsupportedEntityKind,
                  "probe '" + probe.name + "' does not apply to a " + kind_name(entity));
    out.names.push_back(probe.name);
    out.values.push_back(std::move(*v));
  }
  return out;
}

Rational description_distance2(const Entity& a, const Entity& b,
                               const std::vector<Probe>& probes) {
  return squared_gap(describe(a, probes), describe(b, probes));
}

bool dx_near(const Entity& a, const Entity& b, const std::vector<Probe>& probes,
             const Threshold& th) {
  return description_distance2(a, b, probes) < th.value() * th.value();
}

bool d_near(const Entity& a, const Entity& b, const std::vector<Probe>& probes) {
  return description_distance2(a, b, probes) == 0;
}

std::vector<std::pair<std::size_t, std::size_t>> dx_intersection(
    const std::vector<Entity>& first, const std::vector<Entity>& second,
    const std::vector<Probe>& probes, const Threshold& th) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (first.empty() || second.empty()) return out;
  std::vector<ProbeVector> right;
  for (const auto& e : second) right.push_back(describe(e, probes));
  const Rational limit = th.value() * th.value();
  for (std::size_t i = 0; i < first.size(); ++i) {
    ProbeVector left = describe(first[i], probes);
    for (std::size_t j = 0; j < second.size(); ++j)
      if (squared_gap(left, right[j]) < limit) out.emplace_back(i, j);
  }
  return out;
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.violations == 0; });
}

const AxiomCheck& AxiomReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error(ErrorCode::UnknownProbe, "no axiom check named '" + name + "'");
}

AxiomReport check_axioms(const std::vector<Entity>& universe, const std::vector<Probe>& probes,
                         const Threshold& th, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = universe.size();
  // pairwise dx_near table, one call per ordered pair
  std::vector<std::vector<bool>> near(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) near[i][j] = dx_near(universe[i], universe[j], probes, th);

  auto collections_near = [&near](const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
    for (std::size_t i : a)
      for (std::size_t j : b)
        if (near[i][j]) return true;
    return false;
  };
  auto pick = [&universe](const std::vector<std::size_t>& members) {
    std::vector<Entity> out;
    for (std::size_t i : members) out.push_back(universe[i]);
    return out;
  };

  auto named = [](const char* name) {
    AxiomCheck c;
    c.name = name;
    return c;
  };
  AxiomCheck p0 = named("xdP0"), p1 = named("xdP1"), p2 = named("xdP2");
  AxiomCheck lemma = named("lemma_converse"), p3 = named("xdP3");
  auto record = [](AxiomCheck& c, bool ok, const std::string& witness) {
    ++c.cases;
    if (ok) return;
    ++c.violations;
    if (!c.witness) c.witness = witness;
  };

  std::mt19937_64 rng(seed);
  auto random_subset = [&rng, n]() {
    std::vector<std::size_t> members;
    std::bernoulli_distribution coin(0.4);
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) members.push_back(i);
    return members;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    auto a = random_subset(), b = random_subset(), c = random_subset();

    record(p0, !collections_near({}, a) && !collections_near(a, {}) &&
                   dx_intersection({}, pick(a), probes, th).empty(),
           "empty collection near " + show(a));

    record(p1, collections_near(a, b) == collections_near(b, a),
           show(a) + " vs " + show(b));

    bool meet = !dx_intersection(pick(a), pick(b), probes, th).empty();
    bool is_near = collections_near(a, b);
    record(p2, !meet || is_near, show(a) + " dxcap " + show(b) + " nonempty but not near");
    record(lemma, !is_near || meet, show(a) + " near " + show(b) + " but dxcap empty");

    std::vector<std::size_t> bc = b;
    bc.insert(bc.end(), c.begin(), c.end());
    std::sort(bc.begin(), bc.end());
    bc.erase(std::unique(bc.begin(), bc.end()), bc.end());
    record(p3,
           collections_near(a, bc) == (collections_near(a, b) || collections_near(a, c)),
           show(a) + " vs " + show(b) + " u " + show(c));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      record(p1, near[i][j] == near[j][i],
             "entities " + std::to_string(i) + " and " + std::to_string(j));

  return AxiomReport{{p0, p1, p2, lemma, p3}};
}

}  // namespace ribbon
