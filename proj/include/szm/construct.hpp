#pragma once

// Concrete representatives of the subgroup classes inside an explicit
// Sz(2^e), e in {1, 3, 5}.

#include "szm/catalog.hpp"
#include "szm/group.hpp"
#include "szm/perm_group.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace szm {

struct SubgroupInstance {
  ClassLabel label;
  std::vector<GroupElement> generators;
  PermGroup perm_group;
};

/// Builds subgroups by label. Labels are taken literally (G(1) is the group
/// of matrices over GF(2), not its canonical stand-in B1(1)), so any label
/// whose level divides e is accepted. Representatives come from
/// deterministic searches in Bruhat rank order and are identical on every
/// run. Safe to share between threads.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(unsigned e);

  SuzukiGroup const& group() const noexcept { return group_; }

  /// Throws std::invalid_argument if the level does not divide e, and
  /// std::logic_error if the result does not have the expected order.
  SubgroupInstance construct(ClassLabel label) const;

  /// The first element of order a_i(e) in rank order; generates A_i.
  GroupElement const& a_i_generator(int i) const;
  /// The first element c of order 4 in rank order with
  /// c^-1 a c = a^(2^e) for a = a_i_generator(i).
  GroupElement const& c_i(int i) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroupElement> value;
  };

  std::vector<GroupElement> raw_generators(ClassLabel label) const;

  SuzukiGroup group_;
  std::unique_ptr<Cache[]> a_cache_;
  std::unique_ptr<Cache[]> c_cache_;
};

}  // namespace szm
