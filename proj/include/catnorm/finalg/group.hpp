#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace catnorm {

using elem_t = std::int32_t;
constexpr elem_t kIdentity = 0;

/// A finite group given by its Cayley table over elements 0..n-1, with the
/// identity canonicalized to 0.
///
/// FiniteGroup is an immutable handle: copies share the same table, so groups
/// can be passed around by value and stored inside subgroups, homs and split
/// extensions without cost. Two handles compare equal when their tables do.
class FiniteGroup {
 public:
  /// Trivial group.
  FiniteGroup();

  /// Validates `table` (row-major, n*n entries) and relabels so the identity
  /// is 0. Throws Error{MalformedTable, NoIdentity, NoInverse, NotAssociative}.
  static FiniteGroup from_table(std::vector<std::vector<elem_t>> const& rows,
                                std::string name = {});
  static FiniteGroup from_flat_table(int order, std::vector<elem_t> flat,
                                     std::string name = {});
  /// Skips validation. Only for tables produced by constructions on
  /// already-valid groups (products, subgroups, quotients); identity must be 0.
  static FiniteGroup from_trusted_table(int order, std::vector<elem_t> flat,
                                        std::string name = {});

  int order() const { return impl_->order; }
  std::string const& name() const { return impl_->name; }

  elem_t mul(elem_t a, elem_t b) const {
    return impl_->table[static_cast<std::size_t>(a) * impl_->order + b];
  }
  elem_t inv(elem_t a) const { return impl_->inverse[a]; }
  elem_t conj(elem_t t, elem_t a) const { return mul(mul(t, a), inv(t)); }  // t a t^-1
  bool commute(elem_t a, elem_t b) const { return mul(a, b) == mul(b, a); }

  int element_order(elem_t a) const { return impl_->elem_order[a]; }
  /// A small generating set, chosen greedily (largest element order first).
  std::span<elem_t const> generators() const { return impl_->generators; }
  std::span<elem_t const> flat_table() const { return impl_->table; }
  bool is_abelian() const;

  std::vector<std::vector<elem_t>> rows() const;
  FiniteGroup renamed(std::string name) const;

  /// True when both handles share storage (cheap identity test).
  bool same_object(FiniteGroup const& other) const { return impl_ == other.impl_; }
  void const* id() const { return impl_.get(); }

  friend bool operator==(FiniteGroup const& a, FiniteGroup const& b);

 private:
  struct Impl {
    int order = 1;
    std::vector<elem_t> table;
    std::vector<elem_t> inverse;
    std::vector<int> elem_order;
    std::vector<elem_t> generators;
    std::string name;
  };
  explicit FiniteGroup(std::shared_ptr<Impl const> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<Impl const> build(int order, std::vector<elem_t> table, std::string name);

  std::shared_ptr<Impl const> impl_;
};

/// Closure of `seed` under multiplication (the generated subgroup), as a
/// membership mask over the group.
std::vector<bool> closure(FiniteGroup const& g, std::span<elem_t const> seed);

}  // namespace catnorm
