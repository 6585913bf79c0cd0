#pragma once

#include <cstddef>
#include <variant>

#include "ribbon/ribbon_model.hpp"

namespace ribbon {

/// Object counts: filaments, filled cycles and hole markers. These are
/// counters over explicit model objects, not homology ranks.
struct BettiTriple {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  std::size_t b2 = 0;

  friend bool operator==(const BettiTriple&, const BettiTriple&) = default;
};

/// Any entity the counters apply to.
using Structure = std::variant<Ribbon, RibbonComplex, RibbonNerve, VortexNerve>;

/// Cycles shared between ribbons (equal FilledCycle values) are counted once.
BettiTriple betti_triple(const Ribbon& ribbon);
BettiTriple betti_triple(const RibbonComplex& complex);
BettiTriple betti_triple(const RibbonNerve& nerve);
BettiTriple betti_triple(const VortexNerve& nerve);
BettiTriple betti_triple(const Structure& s);

/// Filaments plus holes plus the ribbon's two cycles.
std::size_t betti_rb(const Ribbon& ribbon);

struct ComplexBetti {
  std::size_t count_variant = 0;  // number of ribbons
  std::size_t sum_variant = 0;    // sum of betti_rb over ribbons

  friend bool operator==(const ComplexBetti&, const ComplexBetti&) = default;
};

ComplexBetti betti_rbx(const RibbonComplex& complex);

/// Filaments plus member ribbons plus holes.
std::size_t betti_rbnrv(const RibbonNerve& nerve);

/// Sum of betti_rb over the ribbons between adjacent cycles.
std::size_t betti_rb_vnrv(const VortexNerve& nerve);

/// Sum of betti_rbnrv over consecutive ribbon pairs. Throws TooFewCycles
/// for fewer than three cycles.
std::size_t betti_rbnrv_vnrv(const VortexNerve& nerve);

}  // namespace ribbon
