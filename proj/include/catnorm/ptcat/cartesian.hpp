#pragma once

#include <string>

#include "catnorm/ptcat/catalog.hpp"
#include "catnorm/ptcat/split_extension.hpp"

namespace catnorm {

struct KCartesianReport {
  bool cartesian = true;
  int extensions_checked = 0;
  long long queries = 0;  // (ψ, κ) factorization problems posed
  std::string witness;    // first failure, empty when cartesian
};

/// Which kernel factorizations κ pose a problem.
enum class KernelFactorization {
  Iso,  // κ an isomorphism: the problems over identities on kernels
  Any,  // every κ
};

/// K-cartesian test for m: E -> E', relative to `cat`. For every catalog
/// extension E'', every ψ: E'' -> E' and every κ: K(E'') -> K(E) with
/// K(m)∘κ = K(ψ), there must be exactly one χ: E'' -> E with K(χ) = κ and
/// m∘χ = ψ.
KCartesianReport k_cartesian_report(SEMorphism const& m, Catalog const& cat,
                                    KernelFactorization mode = KernelFactorization::Iso);
bool is_K_cartesian(SEMorphism const& m, Catalog const& cat,
                    KernelFactorization mode = KernelFactorization::Iso);

/// True iff the square of `square` is a pullback: x ↦ (α x, f' x) is a
/// bijection X' -> X ×_Y Y'.
bool is_P_cartesian(PtMorphism const& square);

struct PointPullback {
  Point point;         // X ×_Y Y' ⇄ Y'
  PtMorphism cartesian;  // the projection square into the original point
};

/// Pulls `pt` back along p: Y' -> Y. Throws Error{CodomainMismatch} unless
/// p lands in pt's base.
PointPullback pullback_point(GroupHom const& p, Point const& pt);

struct SEPullback {
  SplitExtension extension;
  SEMorphism to_first;
  SEMorphism to_second;
};

/// Levelwise pullback of a cospan E1 --m--> E <--t-- E2 in SE.
SEPullback pullback_se(SEMorphism const& m, SEMorphism const& t);

/// Pulls m back along a P-cartesian map into m's target point; the result
/// is the induced morphism into cart's source. Throws
/// Error{NotCartesianInput} unless `cart` is P-cartesian into m.target().
SEMorphism pullback_se_along_cartesian(SEMorphism const& m, PtMorphism const& cart);

}  // namespace catnorm
