#pragma once
// Passing from a form on M to a form on the smaller lattice K of a cusp frame:
// f_{K+g} = sum of f_{M+d} over the classes d restricting to g.

#include "thetalift/lattice/frame.hpp"
#include "thetalift/weilrep/vvf.hpp"

namespace thetalift {

inline VectorValuedForm reduce_to_smaller(const CuspFrame& frame, const VectorValuedForm& f) {
  if (f.disc()->order() != frame.disc()->order() || f.disc()->invariants() != frame.disc()->invariants())
    throw InputError("form and frame live on different discriminant groups");
  std::map<DiscElement, FracPowerSeries> out;
  for (const auto& [d, s] : f.components()) {
    auto g = frame.restrict_class(d);
    if (!g) continue;
    auto it = out.find(*g);
    if (it == out.end()) out.emplace(*g, s);
    else it->second += s;
  }
  return VectorValuedForm(frame.reduced_disc(), f.weight_plus(), f.weight_minus(), out, f.parity_plus(),
                          f.parity_minus());
}

}  // namespace thetalift
