#pragma once

// Brute-force ground truth inside Sz(2) and Sz(8), where every element can
// be listed. Elements are addressed by their Bruhat rank.

#include "szm/catalog.hpp"
#include "szm/construct.hpp"
#include "szm/group.hpp"
#include "szm/moebius.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace szm {

using ElementIndex = std::uint32_t;

struct SubgroupSet {
  std::vector<ElementIndex> elements;  // sorted
  std::vector<ElementIndex> generators;
  std::optional<ClassLabel> label;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(ElementIndex x) const;
  /// Elements equal; generators and label are ignored.
  friend bool operator==(SubgroupSet const& a, SubgroupSet const& b) {
    return a.elements == b.elements;
  }
};

/// The whole group as a multiplication oracle: every element stored as a
/// permutation of the ovoid, with products looked up from the images of
/// three points (no non-identity element fixes three points).
class ExplicitGroup {
 public:
  /// e must be 1 or 3.
  explicit ExplicitGroup(unsigned e);

  SuzukiGroup const& group() const noexcept { return group_; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t degree() const noexcept { return degree_; }

  ElementIndex identity() const noexcept { return identity_; }
  ElementIndex index(GroupElement const& g) const;
  GroupElement element(ElementIndex i) const { return group_.unrank(i); }
  std::uint32_t image(ElementIndex g, std::uint32_t point) const {
    return images_[std::size_t{g} * degree_ + point];
  }
  /// Apply g, then h.
  ElementIndex mul(ElementIndex g, ElementIndex h) const;
  ElementIndex inv(ElementIndex g) const { return inverse_[g]; }
  /// g^-1 x g
  ElementIndex conj(ElementIndex x, ElementIndex g) const {
    return mul(mul(inverse_[g], x), g);
  }
  std::uint32_t order(ElementIndex g) const { return order_[g]; }
  Perm perm(ElementIndex g) const;

  SubgroupSet closure(std::vector<ElementIndex> generators) const;
  SubgroupSet subgroup(SubgroupInstance const& instance) const;
  SubgroupSet conjugate(SubgroupSet const& h, ElementIndex g) const;
  /// {g : H^g = H}, by scanning the whole group.
  SubgroupSet normalizer(SubgroupSet const& h) const;
  /// All distinct conjugates of H, one per right coset of its normaliser.
  std::vector<SubgroupSet> conjugates(SubgroupSet const& h) const;

 private:
  std::uint32_t key(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return (a * degree_ + b) * degree_ + c;
  }

  SuzukiGroup group_;
  std::uint32_t size_;
  std::uint32_t degree_;
  ElementIndex identity_;
  std::vector<std::uint8_t> images_;
  std::vector<ElementIndex> by_key_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint32_t> order_;
};

struct Eq2Row {
  ClassLabel h;
  BigInt sum;
  BigInt expected;
  bool pass;
};

/// Class representatives, their conjugates and containment counts for
/// Sz(8), cached on first use. Not thread-safe.
class Oracle {
 public:
  Oracle();

  ExplicitGroup const& group() const noexcept { return group_; }
  SubgroupBuilder const& builder() const noexcept { return builder_; }

  SubgroupSet const& representative(ClassLabel label);
  std::vector<SubgroupSet> const& class_members(ClassLabel label);

  /// Number of conjugates of the class K containing H.
  std::uint64_t count_containing(SubgroupSet const& h, ClassLabel k);
  /// Number of conjugates of the class H contained in the representative of K.
  std::uint64_t count_contained(ClassLabel h, ClassLabel k);

  /// sum over canonical K of count_containing(rep H, K) mu(K), for each H.
  std::vector<Eq2Row> verify_eq2(MoebiusTable const& table);

  /// Pairs (x, y), |x| = 2, |y| = order_y, generating G. Fixes x to the
  /// involution (0, 1) and scales by the number of involutions, which form
  /// a single class. Throws
  /// std::logic_error if the count is not divisible by e|G|.
  BigInt pair_census(std::uint32_t order_y, unsigned jobs = 1);
  /// The same count over every pair, without the single-class shortcut.
  BigInt pair_census_unoptimized(std::uint32_t order_y, unsigned jobs = 1);

 private:
  ExplicitGroup group_;
  SubgroupBuilder builder_;
  std::map<ClassLabel, SubgroupSet> reps_;
  std::map<ClassLabel, std::vector<SubgroupSet>> members_;
};

}  // namespace szm
