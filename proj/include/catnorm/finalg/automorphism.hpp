#pragma once

#include <vector>

#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/hom.hpp"

namespace catnorm {

/// Aut(G) as a finite group: element i stands for autos[i], autos[0] is the
/// identity, and i·j is the index of autos[i] ∘ autos[j] (apply j first).
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<GroupHom> autos;

  elem_t index_of(std::vector<elem_t> const& map) const;
};

AutomorphismGroup automorphism_group(FiniteGroup const& g);

}  // namespace catnorm
