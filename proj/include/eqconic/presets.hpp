#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqconic/nodal.hpp"

namespace eqconic {

struct GroupPreset {
  std::string name;
  std::string generators;  ///< e.g. "<(1234),(13)>"
};

/// One preset per conjugacy class of subgroups of S4, ordered by group order.
const std::vector<GroupPreset>& group_presets();

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// A preset name ("D8", "Z2d", "V'", "A3", ...) or a generator list such as
/// "<(12),(34)>", always as a subgroup of S4. Throws InputError naming the token.
NamedGroup parse_group(std::string_view spec);

/// Sigma mini-language: "+"-separated orbit terms "k*", "*", "{*}", "[G]",
/// "[G/G]", "[G/<gens>]", "[G/A3]" (a preset name), each with an optional multiplier "2*" or "2".
/// The result must be a genuine four-point G-set.
BurnsideElement parse_sigma(std::string_view spec, const RingPtr& ring);

/// The canonical labelled realization of a four-point element of A(G).
SigmaConfig realize_sigma(const BurnsideElement& sigma);

}  // namespace eqconic
