#pragma once

#include <string>
#include <vector>

#include "ctkit/elliott.hpp"

namespace ctkit {

// Planar picture of trace norm maps over two extreme traces. Profiles must
// have exactly two extreme points.
struct DiagramSpec {
  std::vector<InvariantProfile> profiles;
  std::vector<int> highlight;  // indices into profiles
};

// Standalone SVG: coordinates are the per-trace ratios f_j / c_j squashed by
// s -> s/(1+s) with infinity at 1. The locus of equal ratios is the solid
// diagonal, the two infinity edges are bold, the removed axes dotted; each
// profile is a dot colored by the AI decision.
std::string diagram_svg(const DiagramSpec& spec);

}  // namespace ctkit
