#pragma once

// Permutations of {0, ..., n-1} acting on the right: p^(gh) = (p^g)^h.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace szm {

class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images) : Perm(std::vector<Point>(images)) {}

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator[](Point p) const noexcept { return img_[p]; }
  std::span<Point const> images() const noexcept { return img_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  /// First point moved, or degree() when the permutation is the identity.
  Point first_moved() const noexcept;

  /// Apply *this, then h.
  friend Perm operator*(Perm const& g, Perm const& h);

  friend bool operator==(Perm const&, Perm const&) = default;
  friend auto operator<=>(Perm const&, Perm const&) = default;

 private:
  std::vector<Point> img_;
};

}  // namespace szm
