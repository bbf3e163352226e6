#pragma once

// Symbolic descriptors for the conjugacy classes of the distinguished
// subgroups of Sz(2^e): the subfield subgroups G(f), F(f), Q(f), Z(f), the
// cyclic groups A_i(f) and their normalising extensions B_i(f), i = 0, 1, 2.
//
// Several of these coincide or are conjugate when f = 1 (and, when 3 | e,
// B1(1) = B1(3) and A1(1) = A1(3)). canonicalize() maps every label to the
// single representative label of its conjugacy class; the rest of the library
// only ever works with canonical labels.
//
// Orders here are exact integers and never require an explicit field, so
// any odd e is accepted.

#include "szm/numtheory.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace szm {

/// Declaration order is the tie-break order used by canonical_classes().
enum class Kind : std::uint8_t { G, F, Q, B1, B2, B0, Z, A1, A2, A0 };

std::string_view kind_name(Kind k);

struct ClassLabel {
  Kind kind;
  unsigned level;

  friend bool operator==(ClassLabel const&, ClassLabel const&) = default;
  friend auto operator<=>(ClassLabel const&, ClassLabel const&) = default;
};

/// The classes of cyclic subgroups of order 4, 2 and 1. Their canonical
/// labels are B2(1), B0(1) and A0(1).
inline constexpr ClassLabel C4{Kind::B2, 1};
inline constexpr ClassLabel C2{Kind::B0, 1};
inline constexpr ClassLabel C1{Kind::A0, 1};

/// "G(3)", "B1(1)", and "C4"/"C2"/"C1" for the three cyclic classes.
std::string to_string(ClassLabel const& label);
/// Inverse of to_string; also accepts non-canonical spellings such as
/// "F(1)". Throws std::invalid_argument on malformed input.
ClassLabel parse_label(std::string_view text);

/// +1 if e = +-1 mod 8, -1 if e = +-3 mod 8. Throws for even e.
int chi(unsigned e);

/// a_1(f) = 2^f + chi(f) 2^((f+1)/2) + 1, a_2(f) = 2^f - chi(f) 2^((f+1)/2) + 1.
BigInt a_i_order(int i, unsigned f);

/// |Sz(2^f)| = 2^(2f) (2^(2f) + 1) (2^f - 1).
BigInt suzuki_order(unsigned f);

/// Throws std::invalid_argument unless e is odd and positive.
void require_odd(unsigned e);

/// Alias resolution. Throws std::invalid_argument if level does not divide e.
ClassLabel canonicalize(ClassLabel label, unsigned e);
bool is_canonical(ClassLabel label, unsigned e);

/// Level to use in divisibility tests for containment. Equals the level
/// except for the merged classes B1(3) and A1(3) when 3 | e, which are the
/// level-1 subgroups and therefore lie below every level.
unsigned containment_level(ClassLabel label, unsigned e);

/// |H| for the subgroup named by label, canonical or not.
BigInt subgroup_order(ClassLabel label);

struct ClassData {
  ClassLabel label;
  BigInt order;
  BigInt normalizer_order;
  BigInt class_size;
};

/// |H| for a canonical label; throws std::invalid_argument otherwise.
BigInt class_order(ClassLabel label, unsigned e);
/// |N_G(H)| for a canonical label; throws std::invalid_argument otherwise.
BigInt normalizer_order(ClassLabel label, unsigned e);
/// |G| / |N_G(H)|.
BigInt class_size(ClassLabel label, unsigned e);
ClassData class_data(ClassLabel label, unsigned e);

/// All canonical labels for e (odd, > 1), by decreasing |H|; ties broken by
/// Kind order, then by level descending.
std::vector<ClassLabel> canonical_classes(unsigned e);

/// Whether the class can carry a non-zero Moebius value: G, F, B0, A0, B1,
/// B2 at levels f > 1, and the cyclic classes C4, C2, C1.
bool in_support_set(ClassLabel label, unsigned e);

/// The classes of in_support_set() in the conventional table layout: kinds
/// G, F, B0, A0, B1, B2 (level descending within a kind), then C4, C2, C1.
std::vector<ClassLabel> support_classes(unsigned e);

}  // namespace szm
