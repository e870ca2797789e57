#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/hom.hpp"
#include "catnorm/finalg/subgroup.hpp"

namespace catnorm {

FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n: rotations r^i are 0..n-1, reflections r^i s are n..2n-1.
FiniteGroup dihedral_group(int n);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(int degree);
FiniteGroup alternating_group(int degree);
/// Dicyclic group of order 4n (n = 3 gives Z3 ⋊ Z4).
FiniteGroup dicyclic_group(int n);

/// Group generated by permutations of {0..degree-1}; elements are the
/// permutations in lexicographic order, so the identity is 0.
FiniteGroup permutation_group(int degree, std::vector<std::vector<int>> const& gens,
                              std::string name = {});
/// The permutations behind permutation_group's labels, in label order.
std::vector<std::vector<int>> permutation_group_elements(int degree,
                                                         std::vector<std::vector<int>> const& gens);

/// A × B with (a, b) labelled a * |B| + b.
struct DirectProduct {
  FiniteGroup a, b, group;
  elem_t pair(elem_t x, elem_t y) const { return x * b.order() + y; }
  elem_t first(elem_t p) const { return p / b.order(); }
  elem_t second(elem_t p) const { return p % b.order(); }
  GroupHom p0() const;
  GroupHom p1() const;
  GroupHom in0() const;  // x -> (x, e)
  GroupHom in1() const;  // y -> (e, y)
  GroupHom diagonal() const;  // requires a == b
};
DirectProduct direct_product(FiniteGroup const& a, FiniteGroup const& b);

/// A subgroup of A × B materialized from its list of pairs, without building
/// the full product table. Pairs are kept sorted, so (e, e) is label 0.
struct PairGroup {
  FiniteGroup a, b, group;
  std::vector<std::pair<elem_t, elem_t>> pairs;

  /// -1 when (x, y) is not a member.
  elem_t index_of(elem_t x, elem_t y) const;
  GroupHom p0() const;
  GroupHom p1() const;

  std::vector<elem_t> lookup;  // x * |B| + y -> label or -1
};
/// `pairs` must be closed under componentwise multiplication.
PairGroup pair_group(FiniteGroup const& a, FiniteGroup const& b,
                     std::vector<std::pair<elem_t, elem_t>> pairs, std::string name = {});

/// The built-in catalog of named groups with order <= max_order: Z1..Z16,
/// Z2×Z2, Z2×Z4, Z2×Z2×Z2, S3, D4, Q8, D5, D6, A4, Q12 (= Z3 ⋊ Z4).
std::vector<FiniteGroup> builtin_groups(int max_order);
FiniteGroup builtin_group(std::string const& name);

}  // namespace catnorm
