#pragma once

// Counting homomorphisms onto Sz(2^e) by Hall inversion over the classes
// carrying non-zero Moebius values.

#include "szm/catalog.hpp"
#include "szm/numtheory.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace szm {

struct GammaDescriptor {
  enum class Variant { Free, HeckeSmooth, HeckeAll };
  Variant variant;
  unsigned k;

  friend bool operator==(GammaDescriptor const&, GammaDescriptor const&) = default;
};

/// "free:k", "hecke:k" or "hecke-all:k". Throws std::invalid_argument on
/// malformed text, k < 1 for free groups or k < 3 for Hecke groups.
GammaDescriptor parse_gamma(std::string_view text);
std::string to_string(GammaDescriptor const& gamma);

struct OrderCensus {
  ClassLabel label;
  std::map<std::uint64_t, BigInt> counts;  // only non-zero entries
};

/// |H|_n, the number of elements of order n in a subgroup of the class.
/// Throws std::invalid_argument for non-canonical labels.
BigInt order_count(ClassLabel label, std::uint64_t n, unsigned e);

/// Every non-zero |H|_n. Needs the element orders to fit in 64 bits, so the
/// level of the class must be at most 61.
OrderCensus census(ClassLabel label, unsigned e);

BigInt hom_count(GammaDescriptor const& gamma, ClassLabel label, unsigned e);

/// (1/e) sum over the support classes of mu_G(H) |Hom(Gamma, H)| / |N_G(H)|.
/// Throws std::logic_error if the sum is not a non-negative integer.
BigInt n_gamma(GammaDescriptor const& gamma, unsigned e);

BigInt closed_form_h4(unsigned e);
BigInt closed_form_h5(unsigned e);
BigInt closed_form_h7(unsigned e);
BigInt closed_form_d2(unsigned e);

}  // namespace szm
