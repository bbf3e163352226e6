#pragma once

// Exact arithmetic in GF(2^e) for odd e, polynomial basis.
//
// A Field is obtained from Field::get(e); instances are cached for the
// lifetime of the program, so FieldElement may hold a plain pointer to its
// field. The modulus is the smallest irreducible polynomial of degree e
// (reading the coefficient vector as a binary number).

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace szm {

class FieldElement;

class Field {
 public:
  using Raw = std::uint32_t;

  static constexpr unsigned max_degree = 25;

  /// The field of 2^e elements. Throws std::invalid_argument unless e is odd
  /// and 1 <= e <= max_degree.
  static const Field& get(unsigned e);

  Field(Field const&) = delete;
  Field& operator=(Field const&) = delete;

  unsigned degree() const noexcept { return e_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << e_; }
  /// theta is x -> x^(2^theta_exponent()).
  unsigned theta_exponent() const noexcept { return (e_ + 1) / 2; }

  // Raw arithmetic on coefficient vectors. Arguments must be < size().
  static Raw add(Raw x, Raw y) noexcept { return x ^ y; }
  Raw mul(Raw x, Raw y) const noexcept;
  Raw square(Raw x) const noexcept { return mul(x, x); }
  Raw pow(Raw x, std::uint64_t k) const noexcept;
  Raw inv(Raw x) const;
  Raw theta(Raw x) const noexcept;
  Raw theta_inv(Raw x) const noexcept;
  Raw phi(Raw x) const noexcept { return x ^ theta(x); }
  /// x lies in GF(2^f); throws std::invalid_argument unless f | e.
  bool in_subfield(Raw x, unsigned f) const;

  /// Smallest element (as an integer) generating the multiplicative group of
  /// the subfield GF(2^f).
  Raw subfield_primitive(unsigned f) const;
  /// GF(2)-basis 1, w, ..., w^(f-1) of GF(2^f), w = subfield_primitive(f).
  std::vector<Raw> subfield_basis(unsigned f) const;

  FieldElement element(Raw x) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// All elements in increasing coefficient order.
  std::vector<FieldElement> elements() const;

  std::string to_string(Raw x) const;

 private:
  explicit Field(unsigned e);

  unsigned e_;
  std::uint64_t modulus_;
};

/// Smallest irreducible polynomial of degree e over GF(2), found by
/// exhaustive search.
std::uint64_t smallest_irreducible(unsigned e);

/// Irreducibility over GF(2) by trial division.
bool is_irreducible(std::uint64_t poly);

class FieldElement {
 public:
  using Raw = Field::Raw;

  FieldElement(Raw value, const Field& field);

  Raw value() const noexcept { return value_; }
  const Field& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(FieldElement const& x, FieldElement const& y) {
    return x.field_ == y.field_ && x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(FieldElement const& x,
                                          FieldElement const& y);

  FieldElement& operator+=(FieldElement const& y);
  FieldElement& operator*=(FieldElement const& y);

 private:
  Raw value_;
  const Field* field_;
};

FieldElement add(FieldElement const& x, FieldElement const& y);
FieldElement mul(FieldElement const& x, FieldElement const& y);
FieldElement inv(FieldElement const& x);
FieldElement pow(FieldElement const& x, std::uint64_t k);
FieldElement theta(FieldElement const& x);
FieldElement phi(FieldElement const& x);
bool in_subfield(FieldElement const& x, unsigned f);

inline FieldElement operator+(FieldElement x, FieldElement const& y) {
  return x += y;
}
inline FieldElement operator*(FieldElement x, FieldElement const& y) {
  return x *= y;
}

std::string to_string(FieldElement const& x);

}  // namespace szm

template <>
struct std::hash<szm::FieldElement> {
  std::size_t operator()(szm::FieldElement const& x) const noexcept {
    return std::hash<std::uint64_t>{}(
        (std::uint64_t{x.field().degree()} << 32) | x.value());
  }
};
