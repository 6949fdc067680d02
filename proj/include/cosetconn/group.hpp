#ifndef COSETCONN_GROUP_HPP
#define COSETCONN_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cosetconn/kernels.hpp"
#include "cosetconn/permutation.hpp"

namespace cosetconn {

class GroupContext;
using GroupPtr = std::shared_ptr<const GroupContext>;

// A finite permutation group with every element enumerated.
//
// Elements are stored in breadth-first discovery order of the closure under
// right multiplication by the generators; element 0 is the identity.
class GroupContext {
public:
  static constexpr std::size_t default_cap = 50'000;

  // Closure of `generators` (all of degree `degree`). Throws CapExceeded once
  // more than `cap` elements are discovered.
  static GroupPtr enumerate(std::size_t degree, std::vector<Permutation> generators,
                            std::size_t cap = default_cap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::span<const kernels::Image16> images() const noexcept { return images_; }
  const Permutation& element(std::uint32_t i) const { return elements_.at(i); }

  std::optional<std::uint32_t> index_of(const Permutation& p) const;
  // Throws InputError if p is not in the group.
  std::uint32_t require_index(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

private:
  GroupContext() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<kernels::Image16> images_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

// A subgroup of an enumerated parent group, stored as parent indices.
class SubgroupHandle {
public:
  static SubgroupHandle trivial(GroupPtr parent);
  static SubgroupHandle whole(GroupPtr parent);

  const GroupContext& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }

  std::size_t order() const noexcept { return members_.size(); }
  // Generators used to build the subgroup (possibly redundant).
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  // Parent indices in discovery order; members()[0] is the identity.
  const std::vector<std::uint32_t>& members() const noexcept { return members_; }
  std::span<const kernels::Image16> images() const noexcept { return images_; }
  std::vector<Permutation> elements() const;

  bool contains_index(std::uint32_t i) const { return i < in_.size() && in_[i] != 0; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const SubgroupHandle& other) const;

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b);

private:
  friend SubgroupHandle subgroup_generated(const GroupPtr&, const SubgroupHandle&,
                                           std::span<const Permutation>);
  SubgroupHandle(GroupPtr parent, std::vector<Permutation> generators,
                 std::vector<std::uint32_t> members);

  GroupPtr parent_;
  std::vector<Permutation> generators_;
  std::vector<std::uint32_t> members_;
  std::vector<kernels::Image16> images_;
  std::vector<std::uint8_t> in_;
};

// Smallest subgroup of ctx containing seed and extra. Throws InputError if an
// extra element lies outside ctx.
SubgroupHandle subgroup_generated(const GroupPtr& ctx, const SubgroupHandle& seed,
                                  std::span<const Permutation> extra);
SubgroupHandle subgroup_generated(const GroupPtr& ctx, std::span<const Permutation> gens);

// Lexicographically least element of gH.
Permutation canonical_coset_rep(const Permutation& g, const SubgroupHandle& h);

// Left cosets of H in G: canonical representatives in order of first discovery
// while scanning G's elements, and for every element of G the index of its coset.
struct LeftCosets {
  std::vector<Permutation> reps;
  std::vector<std::uint32_t> coset_of;
};
LeftCosets left_cosets(const GroupContext& g, const SubgroupHandle& h);
std::vector<Permutation> left_coset_reps(const GroupContext& g, const SubgroupHandle& h);

// HsH = { h1 s h2 }, distinct elements in discovery order.
std::vector<Permutation> double_coset(const SubgroupHandle& h, const Permutation& s);
bool in_double_coset(const SubgroupHandle& h, const Permutation& s, const Permutation& x);
// Canonical representatives of the left cosets of H inside HsH, in discovery order.
std::vector<Permutation> double_coset_left_reps(const SubgroupHandle& h, const Permutation& s);
// d_s = |HsH/H|. Counted from the enumerated double coset and checked
// against |H| / |H ∩ sHs^-1|; throws InconsistencyError on disagreement.
std::size_t double_coset_index(const SubgroupHandle& h, const Permutation& s);
// |H| / |H ∩ sHs^-1| on its own.
std::size_t coset_index_formula(const SubgroupHandle& h, const Permutation& s);

// g H g^-1 == H
bool normalizes(const Permutation& g, const SubgroupHandle& h);

} // namespace cosetconn

#endif // COSETCONN_GROUP_HPP
