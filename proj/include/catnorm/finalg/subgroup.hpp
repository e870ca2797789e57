#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/hom.hpp"

namespace catnorm {

/// A subgroup, kept canonically as a sorted element set of its ambient group.
class Subgroup {
 public:
  /// Throws Error{NotSubgroup} unless `elements` is a subgroup.
  Subgroup(FiniteGroup ambient, std::vector<elem_t> elements);

  static Subgroup trivial(FiniteGroup const& g);
  static Subgroup whole(FiniteGroup const& g);
  static Subgroup generated_by(FiniteGroup const& g, std::span<elem_t const> gens);
  static Subgroup from_mask(FiniteGroup const& g, std::vector<bool> const& mask);
  /// Skips the closure check; `mask` must already describe a subgroup.
  static Subgroup from_closed_mask(FiniteGroup const& g, std::vector<bool> mask);

  FiniteGroup const& ambient() const { return ambient_; }
  std::vector<elem_t> const& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(elem_t x) const { return mask_[x]; }
  std::vector<bool> const& mask() const { return mask_; }

  bool is_subset_of(Subgroup const& other) const;
  bool is_normal() const;
  /// t U t^-1 == U.
  bool normalized_by(elem_t t) const;

  /// The subgroup materialized as a group (labels follow the sorted element
  /// order, so the identity stays 0) plus its inclusion.
  FiniteGroup as_group() const;
  GroupHom inclusion() const;
  /// Label of ambient element x inside as_group(); -1 when x is not a member.
  elem_t local_index(elem_t x) const;

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.elements_ == b.elements_ && a.ambient_ == b.ambient_;
  }
  friend bool operator<(Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  struct Trusted {};
  Subgroup(Trusted, FiniteGroup ambient, std::vector<bool> mask);

  FiniteGroup ambient_;
  std::vector<elem_t> elements_;
  std::vector<bool> mask_;
  struct Materialized {
    std::once_flag once;
    std::optional<FiniteGroup> group;
    std::vector<elem_t> local;  // ambient label -> local label, -1 outside
  };
  std::shared_ptr<Materialized> cache_ = std::make_shared<Materialized>();
  Materialized& materialized() const;
};

Subgroup intersection(Subgroup const& a, Subgroup const& b);
Subgroup join(Subgroup const& a, Subgroup const& b);
Subgroup image(GroupHom const& h);
Subgroup image(GroupHom const& h, Subgroup const& of);
Subgroup kernel(GroupHom const& h);
Subgroup preimage(GroupHom const& h, Subgroup const& s);

/// Every subgroup of G, sorted by (order, elements). Grown by joining cyclic
/// subgroups onto known ones, starting from the trivial subgroup.
std::vector<Subgroup> subgroups(FiniteGroup const& g);
std::vector<Subgroup> normal_subgroups(FiniteGroup const& g);

/// N_G(U) = { t : t U t^-1 = U }.
Subgroup classical_normalizer(Subgroup const& u);
/// C_G(U) = { t : t u = u t for all u in U }.
Subgroup classical_centralizer(Subgroup const& u);
Subgroup center(FiniteGroup const& g);

/// An internal equivalence relation on a group: in Gp every one is the coset
/// partition of a normal subgroup, which is how it is stored.
class Congruence {
 public:
  /// Throws Error{NotNormal} unless `normal` is closed under conjugation.
  explicit Congruence(Subgroup normal);

  static Congruence discrete(FiniteGroup const& g);    // Δ
  static Congruence indiscrete(FiniteGroup const& g);  // ∇

  FiniteGroup const& ambient() const { return normal_.ambient(); }
  Subgroup const& normal_subgroup() const { return normal_; }
  std::vector<int> const& class_of() const { return class_of_; }
  int num_classes() const { return num_classes_; }
  bool related(elem_t a, elem_t b) const { return class_of_[a] == class_of_[b]; }

  bool is_discrete() const { return normal_.order() == 1; }
  bool is_indiscrete() const { return normal_.order() == ambient().order(); }
  /// Number of related pairs, |R| as a subobject of X×X.
  int size() const { return ambient().order() * normal_.order(); }

  friend bool operator==(Congruence const& a, Congruence const& b) {
    return a.normal_ == b.normal_;
  }

 private:
  Subgroup normal_;
  std::vector<int> class_of_;
  int num_classes_ = 0;
};

std::vector<Congruence> congruences(FiniteGroup const& g);

/// Normal-monomorphism test, element-wise: (i) U is inside one R-class and
/// (ii) R-classes of U-elements do not leave U (discrete-fibration condition).
/// Throws Error{AmbientMismatch}.
bool is_normal_to(Subgroup const& u, Congruence const& r);

/// The identity class of R as a subgroup.
Subgroup normalization(Congruence const& r);

/// Quotient group X/R; class ids are the labels, the identity class is 0.
FiniteGroup quotient(Congruence const& r);
GroupHom quotient_map(Congruence const& r, FiniteGroup const& q);

/// Inverse image of a congruence along a hom: x ~ y iff h(x) R h(y).
Congruence inverse_image(GroupHom const& h, Congruence const& r);

}  // namespace catnorm
