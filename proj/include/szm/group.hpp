#pragma once

// The Suzuki group Sz(2^e) as a group of 4x4 matrices over GF(2^e).
//
// Generators: the lower unitriangular matrices (alpha, beta) forming the
// Sylow 2-subgroup Q, the diagonal matrices a_kappa forming A0, and the
// anti-diagonal permutation matrix tau. Every element has exactly one Bruhat
// form
//     (alpha, beta) a_kappa                          (stabiliser F of infinity)
//     (alpha, beta) a_kappa tau (gamma, delta)       (the big cell)
// which is what GroupElement stores.
//
// The group acts on the ovoid Omega of q^2 + 1 projective points by
// [v] -> [v g]. Points are numbered 0 = infinity = [1,0,0,0] and
// 1 + alpha*q + beta for [alpha^(theta+2) + alpha beta + beta^theta, beta,
// alpha, 1], so 1 is omega = [0,0,0,1].

#include "szm/field.hpp"
#include "szm/numtheory.hpp"
#include "szm/perm.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace szm {

/// Thrown by canonicalize() for matrices outside Sz(2^e).
class NotInGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QPair {
  FieldElement alpha;
  FieldElement beta;

  friend bool operator==(QPair const&, QPair const&) = default;
};

/// (alpha, beta)(gamma, delta) = (alpha + gamma, alpha gamma^theta + beta + delta).
QPair mul_q(QPair const& p1, QPair const& p2);
/// a_kappa^-1 (alpha, beta) a_kappa = (alpha kappa, beta kappa^(1 + theta)).
/// Throws std::invalid_argument for kappa = 0.
QPair conj_by_a(QPair const& p, FieldElement const& kappa);

class Matrix4 {
 public:
  using Raw = Field::Raw;

  explicit Matrix4(const Field& field) : field_(&field), a_{} {}
  static Matrix4 identity(const Field& field);

  const Field& field() const noexcept { return *field_; }
  Raw operator()(int i, int j) const noexcept { return a_[4 * i + j]; }
  Raw& operator()(int i, int j) noexcept { return a_[4 * i + j]; }

  friend Matrix4 operator*(Matrix4 const& x, Matrix4 const& y);
  friend bool operator==(Matrix4 const& x, Matrix4 const& y) {
    return x.field_ == y.field_ && x.a_ == y.a_;
  }

 private:
  const Field* field_;
  std::array<Raw, 16> a_;
};

class GroupElement {
 public:
  struct InF {
    FieldElement alpha, beta, kappa;
    friend bool operator==(InF const&, InF const&) = default;
  };
  struct BigCell {
    FieldElement alpha, beta, kappa, gamma, delta;
    friend bool operator==(BigCell const&, BigCell const&) = default;
  };

  /// Throws std::invalid_argument for kappa = 0 or mixed fields.
  explicit GroupElement(InF form);
  explicit GroupElement(BigCell form);

  bool in_f() const noexcept { return std::holds_alternative<InF>(form_); }
  std::variant<InF, BigCell> const& form() const noexcept { return form_; }
  const Field& field() const noexcept;

  friend bool operator==(GroupElement const&, GroupElement const&) = default;

 private:
  std::variant<InF, BigCell> form_;
};

struct OvoidPoint {
  std::uint32_t index;
  friend bool operator==(OvoidPoint const&, OvoidPoint const&) = default;
  friend auto operator<=>(OvoidPoint const&, OvoidPoint const&) = default;
};

inline constexpr OvoidPoint infinity_point{0};
inline constexpr OvoidPoint omega_point{1};

class SuzukiGroup {
 public:
  /// Any odd e supported by Field. Exhaustive enumeration is only sensible
  /// for small e.
  explicit SuzukiGroup(unsigned e);

  unsigned e() const noexcept { return field_->degree(); }
  const Field& field() const noexcept { return *field_; }
  std::uint64_t q() const noexcept { return field_->size(); }
  std::uint64_t degree() const noexcept { return q() * q() + 1; }
  std::uint64_t order() const noexcept { return f_size() * (q() * q() + 1); }
  /// |F| = q^2 (q - 1), the number of elements in the first Bruhat cell.
  std::uint64_t f_size() const noexcept { return q() * q() * (q() - 1); }

  GroupElement identity() const;
  GroupElement q_element(FieldElement alpha, FieldElement beta) const;
  GroupElement q_element(Field::Raw alpha, Field::Raw beta) const;
  GroupElement a(FieldElement kappa) const;
  GroupElement a(Field::Raw kappa) const;
  GroupElement tau() const;

  Matrix4 q_matrix(Field::Raw alpha, Field::Raw beta) const;
  Matrix4 a_matrix(Field::Raw kappa) const;
  Matrix4 tau_matrix() const;

  Matrix4 to_matrix(GroupElement const& g) const;
  /// Throws NotInGroup if m is not an element of Sz(2^e).
  GroupElement canonicalize(Matrix4 const& m) const;

  GroupElement mul(GroupElement const& g, GroupElement const& h) const;
  GroupElement inverse(GroupElement const& g) const;
  GroupElement power(GroupElement const& g, std::uint64_t k) const;
  std::uint64_t element_order(GroupElement const& g) const;

  /// Rank in Bruhat-lexicographic order: the F cell first, ordered by
  /// (alpha, beta, kappa), then the big cell by (alpha, beta, kappa, gamma,
  /// delta). rank and unrank are inverse bijections onto [0, order()).
  std::uint64_t rank(GroupElement const& g) const;
  GroupElement unrank(std::uint64_t r) const;

  OvoidPoint act(GroupElement const& g, OvoidPoint p) const;
  Perm perm(GroupElement const& g) const;
  /// Whether both coordinates of an affine point lie in GF(2^f); infinity is
  /// defined over every subfield.
  bool point_in_subfield(OvoidPoint p, unsigned f) const;

  /// Q generators (b, 0) and (0, b) over a GF(2)-basis b of the field, the
  /// generator a_w of A0 for the smallest primitive w, and tau.
  std::vector<GroupElement> generators() const;

 private:
  void require_own(GroupElement const& g) const;
  std::array<Field::Raw, 4> point_vector(OvoidPoint p) const;
  OvoidPoint point_index(std::array<Field::Raw, 4> v) const;

  const Field* field_;
};

}  // namespace szm
