#include "ribbon/betti.hpp"

#include <algorithm>

namespace ribbon {

namespace {

BettiTriple count_ribbons(const std::vector<Ribbon>& ribbons) {
  BettiTriple t;
  std::vector<const FilledCycle*> cycles;
  auto note_cycle = [&cycles](const FilledCycle& c) {
    bool seen = std::any_of(cycles.begin(), cycles.end(),
                            [&c](const FilledCycle* known) { return *known == c; });
    if (!seen) cycles.push_back(&c);
  };
  for (const auto& rb : ribbons) {
    t.b0 += rb.filaments().size();
    t.b2 += rb.holes().size();
    note_cycle(rb.outer());
    note_cycle(rb.inner());
  }
  t.b1 = cycles.size();
  return t;
}

}  // namespace

BettiTriple betti_triple(const Ribbon& ribbon) { return count_ribbons({ribbon}); }

BettiTriple betti_triple(const RibbonComplex& complex) { return count_ribbons(complex.ribbons()); }

BettiTriple betti_triple(const RibbonNerve& nerve) { return count_ribbons(nerve.ribbons); }

BettiTriple betti_triple(const VortexNerve& nerve) {
  return {nerve.filaments().size(), nerve.cycles().size(), 0};
}

BettiTriple betti_triple(const Structure& s) {
  return std::visit([](const auto& x) { return betti_triple(x); }, s);
}

std::size_t betti_rb(const Ribbon& ribbon) {
  return ribbon.filaments().size() + ribbon.holes().size() + 2;
}

ComplexBetti betti_rbx(const RibbonComplex& complex) {
  ComplexBetti out;
  out.count_variant = complex.ribbons().size();
  for (const auto& rb : complex.ribbons()) out.sum_variant += betti_rb(rb);
  return out;
}

std::size_t betti_rbnrv(const RibbonNerve& nerve) {
  std::size_t total = nerve.ribbons.size();
  for (const auto& rb : nerve.ribbons) total += rb.filaments().size() + rb.holes().size();
  return total;
}

std::size_t betti_rb_vnrv(const VortexNerve& nerve) {
  std::size_t total = 0;
  for (const auto& rb : ribbons_of_vortex_nerve(nerve)) total += betti_rb(rb);
  return total;
}

std::size_t betti_rbnrv_vnrv(const VortexNerve& nerve) {
  std::size_t total = 0;
  for (const auto& n : ribbon_nerves_of_vortex_nerve(nerve)) total += betti_rbnrv(n);
  return total;
}

}  // namespace ribbon
