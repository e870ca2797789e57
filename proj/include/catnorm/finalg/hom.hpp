#pragma once

#include <vector>

#include "catnorm/finalg/group.hpp"

namespace catnorm {

class Subgroup;

/// A group homomorphism, stored as the image of every source element.
class GroupHom {
 public:
  /// Throws Error{NotHomomorphism} unless `map` is a homomorphism.
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<elem_t> map);

  static GroupHom identity(FiniteGroup const& g);
  static GroupHom zero(FiniteGroup const& source, FiniteGroup const& target);
  /// Trusted constructor for maps that are homomorphisms by construction.
  static GroupHom unchecked(FiniteGroup source, FiniteGroup target, std::vector<elem_t> map);

  FiniteGroup const& source() const { return source_; }
  FiniteGroup const& target() const { return target_; }
  std::vector<elem_t> const& map() const { return map_; }
  elem_t operator()(elem_t a) const { return map_[a]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(GroupHom const& a, GroupHom const& b) {
    return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  struct Unchecked {};
  GroupHom(Unchecked, FiniteGroup source, FiniteGroup target, std::vector<elem_t> map);

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<elem_t> map_;
};

/// g ∘ f. Throws Error{CodomainMismatch} when f.target != g.source.
GroupHom compose(GroupHom const& g, GroupHom const& f);

/// True iff `map` (indexed by elements of `source`) respects multiplication.
bool is_homomorphism(FiniteGroup const& source, FiniteGroup const& target,
                     std::vector<elem_t> const& map);

/// Every homomorphism A -> B. Images are assigned to the generators of A
/// (pruned by element order) and extended along the Cayley graph.
std::vector<GroupHom> homs(FiniteGroup const& a, FiniteGroup const& b);

/// Same enumeration, returning bare image arrays.
std::vector<std::vector<elem_t>> hom_maps(FiniteGroup const& a, FiniteGroup const& b);

/// Bijective homomorphisms A -> B.
std::vector<GroupHom> isomorphisms(FiniteGroup const& a, FiniteGroup const& b);
bool is_isomorphic(FiniteGroup const& a, FiniteGroup const& b);

}  // namespace catnorm
