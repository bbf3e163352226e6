#pragma once

// The Moebius function of the subgroup lattice of Sz(2^e), restricted to the
// classes that can carry a non-zero value.

#include "szm/catalog.hpp"
#include "szm/numtheory.hpp"

#include <cstdint>
#include <map>

namespace szm {

/// Classical Moebius function on the positive integers.
int classical_mu(std::uint64_t n);

/// N(H;K): the number of conjugates of K containing a fixed copy of H.
/// Defined for every ordered pair of canonical labels; pairs that are never
/// nested give 0. Throws std::invalid_argument for non-canonical labels.
BigInt n_count(ClassLabel h, ClassLabel k, unsigned e);

class MoebiusTable {
 public:
  MoebiusTable(unsigned e, std::map<ClassLabel, BigInt> values)
      : e_(e), values_(std::move(values)) {}

  unsigned e() const noexcept { return e_; }
  std::map<ClassLabel, BigInt> const& values() const noexcept { return values_; }
  /// Throws std::out_of_range for labels that are not canonical classes.
  BigInt const& operator[](ClassLabel label) const;

 private:
  unsigned e_;
  std::map<ClassLabel, BigInt> values_;
};

/// mu_G(H) = -sum over H < K of N(H;K) mu_G(K), processing the canonical
/// classes by decreasing order. e odd and > 1.
MoebiusTable mu_table(unsigned e);

/// The closed-form value of mu_G on a canonical class.
BigInt closed_form_mu(ClassLabel label, unsigned e);

}  // namespace szm
