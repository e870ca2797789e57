#pragma once

#include <utility>
#include <vector>

#include "catnorm/finalg/construct.hpp"
#include "catnorm/finalg/subgroup.hpp"
#include "catnorm/ptcat/cartesian.hpp"
#include "catnorm/ptcat/catalog.hpp"
#include "catnorm/report.hpp"

namespace catnorm {

/// The universal decomposition v = w ∘ u with u normal to R_v.
struct NormalizerResult {
  Subgroup v;      // U ≤ T
  Subgroup N;      // ≤ T
  Congruence R_v;  // on N.as_group()
  GroupHom u;      // U.as_group() -> N.as_group()
  GroupHom w;      // N.as_group() -> T

  /// U as a subgroup of N.as_group().
  Subgroup const& u_in_N() const { return R_v.normal_subgroup(); }
};

NormalizerResult normalizer(Subgroup const& v);

/// The relation R ⇄ X of a congruence: d0 with section s0 (the diagonal), and
/// chosen kernel M → R, m ↦ (e, m), with M = normalization(R).
struct RelationExtension {
  Congruence r;
  PairGroup pairs;
  SplitExtension ext;
  GroupHom d1;
};
RelationExtension relation_extension(Congruence const& r);

/// Builds the congruence from a relation given as related pairs. Throws
/// Error{NotReflexive} when some (x, x) is missing and Error{NotSubgroup} when
/// the pairs are not closed under multiplication in X × X.
Congruence congruence_from_relation(FiniteGroup const& x,
                                    std::vector<std::pair<elem_t, elem_t>> const& pairs);

/// (d0, d1) : relation extension of R -> J(X), over the identity of X.
SEMorphism relation_into_J(RelationExtension const& rel);

/// The map (w, (w d0, w d1), v) : (R_v ⇄ N) -> J(T) above v.
SEMorphism k_cartesian_lift(Subgroup const& v);
SEMorphism k_cartesian_lift(NormalizerResult const& res);

/// Decompositions v = h ∘ u' with u' normal to S on a catalog group X', and
/// the intermediate-subgroup and maximality checks.
Report verify_normalizer_universal(Subgroup const& v, NormalizerResult const& res,
                                   Catalog const& cat);

/// Pullback of m along the mono t into m's target. Throws
/// Error{NoFactorization} when K(m) does not factor through K(t), and
/// Error{CodomainMismatch} when t does not land in m's target.
SEMorphism restrict_lift(SEMorphism const& m, SEMorphism const& t);

/// The mono E -> J(X) given by (k, x ↦ (s f x, x), s).
SEMorphism embed_in_J(SplitExtension const& e);

/// A lift above the subgroup v of K(E) into E: lift into J(X), then restrict.
SEMorphism lift_into(SplitExtension const& e, Subgroup const& v);

/// Every extension in `cat` and every subgroup of its kernel: lift and certify.
Report fibrancy_suite(Catalog const& cat);

/// The relation extension of R into J(X) is K-cartesian, and R is the only
/// congruence with its normalization.
bool reflexive_cartesian_check(Congruence const& r, Catalog const& cat);

}  // namespace catnorm
