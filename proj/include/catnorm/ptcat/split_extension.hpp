#pragma once

#include <string>
#include <vector>

#include "catnorm/finalg/automorphism.hpp"
#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/hom.hpp"
#include "catnorm/finalg/subgroup.hpp"

namespace catnorm {

/// A split epimorphism f: X -> Y with a chosen section s (an object of Pt).
class Point {
 public:
  /// Throws Error{NotSplit} unless f ∘ s = 1_Y.
  Point(GroupHom f, GroupHom s);

  GroupHom const& f() const { return f_; }
  GroupHom const& s() const { return s_; }
  FiniteGroup const& total() const { return f_.source(); }
  FiniteGroup const& base() const { return f_.target(); }

 private:
  GroupHom f_;
  GroupHom s_;
};

/// A point together with a chosen kernel k: K -> X (an object of SE).
class SplitExtension {
 public:
  /// Throws Error{NotMorphism} unless k is injective with image ker f.
  SplitExtension(Point point, GroupHom k);

  Point const& point() const { return point_; }
  GroupHom const& f() const { return point_.f(); }
  GroupHom const& s() const { return point_.s(); }
  GroupHom const& k() const { return k_; }
  FiniteGroup const& total() const { return point_.total(); }
  FiniteGroup const& base() const { return point_.base(); }
  /// K(E), the domain of the chosen kernel.
  FiniteGroup const& kernel_group() const { return k_.source(); }
  Subgroup kernel() const { return image(k_); }

  /// Label in K(E) of x · s(f(x))^-1, the kernel part of x.
  elem_t kernel_part(elem_t x) const {
    return k_index_[total().mul(x, total().inv(s()(f()(x))))];
  }
  /// K(E) label of a total element already in the kernel, -1 otherwise.
  elem_t kernel_label(elem_t x) const { return k_index_[x]; }

 private:
  Point point_;
  GroupHom k_;
  std::vector<elem_t> k_index_;
};

/// A map of split extensions: three homs making the f-, s- and k-squares commute.
class SEMorphism {
 public:
  /// Throws Error{NotMorphism} when a square fails to commute.
  SEMorphism(SplitExtension source, SplitExtension target, GroupHom on_kernel,
             GroupHom on_total, GroupHom on_base);

  /// Builds the morphism from its kernel and base components; the total
  /// component is forced because k(K) and s(Y) generate X. Throws
  /// Error{NotMorphism} when the forced map is not a homomorphism.
  static SEMorphism from_components(SplitExtension const& source, SplitExtension const& target,
                                    GroupHom const& on_kernel, GroupHom const& on_base);
  /// Builds the morphism from total and base components; the kernel
  /// component is the restriction.
  static SEMorphism from_total(SplitExtension const& source, SplitExtension const& target,
                               GroupHom const& on_total, GroupHom const& on_base);
  static SEMorphism identity(SplitExtension const& e);

  SplitExtension const& source() const { return source_; }
  SplitExtension const& target() const { return target_; }
  GroupHom const& on_kernel() const { return on_kernel_; }
  GroupHom const& on_total() const { return on_total_; }
  GroupHom const& on_base() const { return on_base_; }

  bool is_mono() const { return on_total_.is_injective() && on_base_.is_injective(); }

 private:
  SplitExtension source_;
  SplitExtension target_;
  GroupHom on_kernel_;
  GroupHom on_total_;
  GroupHom on_base_;
};

SEMorphism compose(SEMorphism const& g, SEMorphism const& f);

/// A map of points: the f- and s-squares commute.
class PtMorphism {
 public:
  /// Throws Error{NotMorphism} when a square fails to commute.
  PtMorphism(Point source, Point target, GroupHom on_total, GroupHom on_base);

  Point const& source() const { return source_; }
  Point const& target() const { return target_; }
  GroupHom const& on_total() const { return on_total_; }
  GroupHom const& on_base() const { return on_base_; }

 private:
  Point source_;
  Point target_;
  GroupHom on_total_;
  GroupHom on_base_;
};

/// An action of Y on K by automorphisms, act: Y -> Aut(K).
struct Action {
  FiniteGroup base;
  FiniteGroup kernel_group;
  AutomorphismGroup aut;
  GroupHom act;

  /// Throws Error{NotHomomorphism} unless act is a hom Y -> aut.group.
  Action(FiniteGroup base, FiniteGroup kernel_group, AutomorphismGroup aut, GroupHom act);
  Action(FiniteGroup base, FiniteGroup kernel_group, GroupHom act);

  elem_t apply(elem_t y, elem_t k) const { return aut.autos[act(y)](k); }
  static Action trivial(FiniteGroup const& base, FiniteGroup const& kernel_group);
};

/// Kernel computed as the preimage of the identity; k is its inclusion.
/// Throws Error{NotSurjective} if f is not onto.
SplitExtension make_split_extension(Point const& p);

/// K ⋊ Y on pairs (k, y) labelled k + |K|·y, with
/// (k1, y1)(k2, y2) = (k1 · y1(k2), y1 y2); f is the second projection and
/// the kernel K × {e} carries the labels 0..|K|-1.
SplitExtension semidirect(Action const& act);

/// One split extension per hom Y -> Aut(K).
std::vector<SplitExtension> enumerate_points_with_kernel(FiniteGroup const& kernel,
                                                         FiniteGroup const& base);

/// J(T): T --(0,1)--> T×T --p0--> T with section the diagonal; K(J(T)) is T
/// itself.
SplitExtension J(FiniteGroup const& t);
/// J on arrows: (h, h×h, h).
SEMorphism J(GroupHom const& h);

/// The product point (p_T, (1,0)): T × X ⇄ T, with kernel X.
SplitExtension product_extension(FiniteGroup const& t, FiniteGroup const& x);

/// The conjugation action Y -> Aut(K[f]) of a split extension, y ↦ (k ↦ s(y) k s(y)^-1).
GroupHom conjugation_action(SplitExtension const& e, AutomorphismGroup const& aut);

/// Kernel and base images of an SE morphism, the data that determine it.
struct SEComponents {
  std::vector<elem_t> on_kernel;
  std::vector<elem_t> on_base;
  friend auto operator<=>(SEComponents const&, SEComponents const&) = default;
};

/// Every SE morphism E1 -> E2, as components (kernel hom × base hom pairs
/// whose forced total map is a hom).
std::vector<SEComponents> se_morphism_components(SplitExtension const& e1,
                                                 SplitExtension const& e2);
std::vector<SEMorphism> se_morphisms(SplitExtension const& e1, SplitExtension const& e2);

}  // namespace catnorm
