#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/betti.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

using Entity = Structure;

/// Named scalar feature. The evaluator returns nullopt for entity kinds the
/// probe does not describe.
struct Probe {
  std::string name;
  std::function<std::optional<Rational>(const Entity&)> evaluate;
};

struct ProbeVector {
  std::vector<std::string> names;
  std::vector<Rational> values;

  friend bool operator==(const ProbeVector&, const ProbeVector&) = default;
};

/// Built-in probes in registry order: b0_filaments, b1_cycles, b2_holes,
/// betti_rb, ribbon_count, fixed_point_gradient_angle, vertex_count.
const std::vector<Probe>& probe_registry();

/// Throws UnknownProbe.
const Probe& find_probe(const std::string& name);
std::vector<Probe> find_probes(const std::vector<std::string>& names);

/// Positive approximation threshold. Throws InvalidThreshold for th <= 0.
class Threshold {
 public:
  explicit Threshold(Rational value);
  const Rational& value() const noexcept { return value_; }

 private:
  Rational value_;
};

/// Componentwise evaluation. Throws UnsupportedEntityKind, or
/// EmptyCollection for an empty probe list.
ProbeVector describe(const Entity& entity, const std::vector<Probe>& probes);

/// Squared Euclidean distance between feature vectors.
Rational description_distance2(const Entity& a, const Entity& b, const std::vector<Probe>& probes);

/// ||describe(a) - describe(b)|| < th, decided exactly on squares.
bool dx_near(const Entity& a, const Entity& b, const std::vector<Probe>& probes,
             const Threshold& th);

/// Plain descriptive overlap: identical descriptions.
bool d_near(const Entity& a, const Entity& b, const std::vector<Probe>& probes);

/// Index pairs (i, j) with dx_near(first[i], second[j]).
std::vector<std::pair<std::size_t, std::size_t>> dx_intersection(
    const std::vector<Entity>& first, const std::vector<Entity>& second,
    const std::vector<Probe>& probes, const Threshold& th);

struct AxiomCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::optional<std::string> witness;  // first counterexample
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;  // xdP0, xdP1, xdP2, lemma_converse, xdP3

  bool passed() const;
  const AxiomCheck& check(const std::string& name) const;
};

/// Randomised check of the nearness axioms over sub-collections of the
/// universe. Two collections are near when some member pair is dx_near;
/// nearness here is computed directly, separately from dx_intersection.
AxiomReport check_axioms(const std::vector<Entity>& universe, const std::vector<Probe>& probes,
                         const Threshold& th, std::size_t trials, std::uint64_t seed = 1);

}  // namespace ribbon
