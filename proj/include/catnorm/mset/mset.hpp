#pragma once

#include <string>
#include <vector>

#include "catnorm/finalg/group.hpp"
#include "catnorm/finalg/subgroup.hpp"
#include "catnorm/report.hpp"

namespace catnorm {

/// A finite monoid on 0..n-1 with identity 0.
class FiniteMonoid {
 public:
  FiniteMonoid();  // trivial
  /// Throws Error{MalformedTable}, Error{NoIdentity} or Error{NotAssociative};
  /// the identity is relabelled to 0.
  static FiniteMonoid from_table(std::vector<std::vector<elem_t>> const& rows, std::string name = {});

  int order() const { return order_; }
  std::string const& name() const { return name_; }
  elem_t mul(elem_t a, elem_t b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  std::vector<elem_t> const& flat_table() const { return table_; }

  friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
    return a.table_ == b.table_;
  }

 private:
  int order_ = 1;
  std::vector<elem_t> table_{0};
  std::string name_;
};

/// Every monoid table of the given order with identity 0, one per
/// isomorphism class.
std::vector<FiniteMonoid> monoids_of_order(int order);

/// A group with an action of M by endomorphisms; act is indexed m * |T| + t.
class InternalGroup {
 public:
  /// Throws Error{NotMonoidAction} unless act(0, -) = id, act(mn, t) =
  /// act(m, act(n, t)) and each act(m, -) is an endomorphism.
  InternalGroup(FiniteMonoid monoid, FiniteGroup group, std::vector<elem_t> act);
  static InternalGroup trivial_action(FiniteMonoid const& monoid, FiniteGroup const& group);

  FiniteMonoid const& monoid() const { return monoid_; }
  FiniteGroup const& group() const { return group_; }
  std::vector<elem_t> const& action() const { return act_; }
  elem_t apply(elem_t m, elem_t t) const {
    return act_[static_cast<std::size_t>(m) * group_.order() + t];
  }
  bool is_stable(std::vector<bool> const& subset) const;

 private:
  FiniteMonoid monoid_;
  FiniteGroup group_;
  std::vector<elem_t> act_;
};

/// Every action of `monoid` on `group` by endomorphisms.
std::vector<InternalGroup> internal_groups_over(FiniteMonoid const& monoid, FiniteGroup const& group);

/// An M-stable subgroup.
class MSubgroup {
 public:
  /// Throws Error{NotStable} unless `sub` is closed under every act(m, -).
  MSubgroup(InternalGroup parent, Subgroup sub);

  InternalGroup const& parent() const { return parent_; }
  Subgroup const& subgroup() const { return sub_; }

 private:
  InternalGroup parent_;
  Subgroup sub_;
};

std::vector<MSubgroup> m_subgroups(InternalGroup const& g);

/// { t : for all m and all u in U, (act(m, t), u) ∈ S }, with S ⊆ T × U indexed
/// t * |U| + (position of u in U). Throws Error{NotStable} unless S is M-stable.
std::vector<bool> pi_along_projection(InternalGroup const& parent, Subgroup const& u,
                                      std::vector<bool> const& s);

/// For every M-stable V ⊆ T: V ⊆ π(S) iff V × U ⊆ S.
Report verify_adjunction(InternalGroup const& parent, Subgroup const& u,
                         std::vector<bool> const& s);

struct InternalNormalizer {
  MSubgroup v;
  std::vector<bool> X_v;        // π(c_v), c_v = { (t, u) : t u t^-1 ∈ U }
  std::vector<bool> X_tilde_v;  // π of { (t, u) : t^-1 u t ∈ U }
  MSubgroup X;
  Congruence R_v;  // on X.as_group()
  GroupHom u;      // U.as_group() -> X.as_group()
  GroupHom w;      // X.as_group() -> T
};
InternalNormalizer internal_normalizer(MSubgroup const& v);

/// X_v and X̃_v are submonoids, X is an M-stable subgroup containing U as a
/// normal subgroup, and U is normal to R_v.
Report verify_internal_lemma(MSubgroup const& v);

/// X is the largest M-stable subgroup normalizing U, and every equivariant
/// decomposition v = h ∘ u' from `sources` factors uniquely through w.
Report verify_internal_universal(InternalNormalizer const& res,
                                 std::vector<InternalGroup> const& sources);

}  // namespace catnorm
