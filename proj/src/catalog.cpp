#include "szm/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace szm {

namespace {

constexpr std::string_view kind_names[] = {"G",  "F",  "Q",  "B1", "B2",
                                           "B0", "Z",  "A1", "A2", "A0"};

BigInt two_pow_minus_one(unsigned f) { return pow2(f) - 1; }

void require_divides(unsigned f, unsigned e) {
  if (f == 0 || e % f != 0) {
    throw std::invalid_argument("level " + std::to_string(f) +
                                " does not divide e = " + std::to_string(e));
  }
}

void require_canonical(ClassLabel label, unsigned e) {
  if (!is_canonical(label, e)) {
    throw std::invalid_argument("label " + to_string(label) +
                                " is not canonical for e = " + std::to_string(e));
  }
}

}  // namespace

std::string_view kind_name(Kind k) {
  return kind_names[static_cast<std::size_t>(k)];
}

std::string to_string(ClassLabel const& label) {
  if (label == C4) {
    return "C4";
  }
  if (label == C2) {
    return "C2";
  }
  if (label == C1) {
    return "C1";
  }
  return std::string(kind_name(label.kind)) + "(" + std::to_string(label.level) +
         ")";
}

ClassLabel parse_label(std::string_view text) {
  if (text == "C4") {
    return C4;
  }
  if (text == "C2") {
    return C2;
  }
  if (text == "C1") {
    return C1;
  }
  auto const open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 ||
      text.back() != ')') {
    throw std::invalid_argument("malformed class label '" + std::string(text) +
                                "'");
  }
  auto const name = text.substr(0, open);
  auto const it = std::find(std::begin(kind_names), std::end(kind_names), name);
  if (it == std::end(kind_names)) {
    throw std::invalid_argument("unknown subgroup kind '" + std::string(name) +
                                "'");
  }
  unsigned level = 0;
  auto const digits = text.substr(open + 1, text.size() - open - 2);
  auto const [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), level);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || level == 0) {
    throw std::invalid_argument("malformed level in '" + std::string(text) + "'");
  }
  return ClassLabel{static_cast<Kind>(it - std::begin(kind_names)), level};
}

void require_odd(unsigned e) {
  if (e == 0 || e % 2 == 0) {
    throw std::invalid_argument("e must be an odd positive integer, got " +
                                std::to_string(e));
  }
}

int chi(unsigned e) {
  require_odd(e);
  unsigned const r = e % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

BigInt a_i_order(int i, unsigned f) {
  if (i != 1 && i != 2) {
    throw std::invalid_argument("a_i_order: i must be 1 or 2");
  }
  int const sign = (i == 1 ? 1 : -1) * chi(f);
  BigInt const r = pow2((f + 1) / 2);
  return sign > 0 ? pow2(f) + r + 1 : pow2(f) - r + 1;
}

BigInt suzuki_order(unsigned f) {
  return pow2(2 * f) * (pow2(2 * f) + 1) * two_pow_minus_one(f);
}

ClassLabel canonicalize(ClassLabel label, unsigned e) {
  require_odd(e);
  require_divides(label.level, e);
  if (label.level == 1) {
    switch (label.kind) {
      case Kind::A0:
      case Kind::A2:
        label = C1;
        break;
      case Kind::Z:
      case Kind::B0:
        label = C2;
        break;
      case Kind::F:
      case Kind::Q:
      case Kind::B2:
        label = C4;
        break;
      case Kind::G:
        label = ClassLabel{Kind::B1, 1};
        break;
      default:
        break;
    }
    if (e % 3 == 0 && (label.kind == Kind::B1 || label.kind == Kind::A1)) {
      label.level = 3;
    }
  }
  return label;
}

bool is_canonical(ClassLabel label, unsigned e) {
  return canonicalize(label, e) == label;
}

unsigned containment_level(ClassLabel label, unsigned e) {
  if (e % 3 == 0 && label.level == 3 &&
      (label.kind == Kind::B1 || label.kind == Kind::A1)) {
    return 1;
  }
  return label.level;
}

BigInt subgroup_order(ClassLabel label) {
  unsigned const f = label.level;
  switch (label.kind) {
    case Kind::G:
      return suzuki_order(f);
    case Kind::F:
      return pow2(2 * f) * two_pow_minus_one(f);
    case Kind::Q:
      return pow2(2 * f);
    case Kind::Z:
      return pow2(f);
    case Kind::B0:
      return 2 * two_pow_minus_one(f);
    case Kind::A0:
      return two_pow_minus_one(f);
    case Kind::B1:
      return 4 * a_i_order(1, f);
    case Kind::B2:
      return 4 * a_i_order(2, f);
    case Kind::A1:
      return a_i_order(1, f);
    case Kind::A2:
      return a_i_order(2, f);
  }
  throw std::logic_error("subgroup_order: bad kind");
}

BigInt class_order(ClassLabel label, unsigned e) {
  require_canonical(label, e);
  return subgroup_order(label);
}

BigInt normalizer_order(ClassLabel label, unsigned e) {
  require_canonical(label, e);
  unsigned const f = label.level;
  if (label == C4) {
    return pow2(e + 1);
  }
  if (label == C2) {
    return pow2(2 * e);
  }
  if (label == C1) {
    return suzuki_order(e);
  }
  switch (label.kind) {
    case Kind::Q:
      return pow2(e + f) * two_pow_minus_one(f);
    case Kind::Z:
      return pow2(2 * e) * two_pow_minus_one(f);
    case Kind::A0:
      return 2 * two_pow_minus_one(e);
    case Kind::A1:
      return 4 * a_i_order(1, e);
    case Kind::A2:
      return 4 * a_i_order(2, e);
    default:
      // G(f), F(f), B0(f), B1(f), B2(f) are self-normalising.
      return subgroup_order(label);
  }
}

BigInt class_size(ClassLabel label, unsigned e) {
  return suzuki_order(e) / normalizer_order(label, e);
}

ClassData class_data(ClassLabel label, unsigned e) {
  BigInt normalizer = normalizer_order(label, e);
  BigInt size = suzuki_order(e) / normalizer;
  return ClassData{label, class_order(label, e), std::move(normalizer),
                   std::move(size)};
}

std::vector<ClassLabel> canonical_classes(unsigned e) {
  require_odd(e);
  if (e == 1) {
    throw std::invalid_argument("canonical_classes: e must exceed 1");
  }
  std::vector<ClassLabel> result;
  for (std::uint64_t f : divisors(e)) {
    for (std::size_t k = 0; k < std::size(kind_names); ++k) {
      ClassLabel const label =
          canonicalize(ClassLabel{static_cast<Kind>(k), static_cast<unsigned>(f)}, e);
      if (std::find(result.begin(), result.end(), label) == result.end()) {
        result.push_back(label);
      }
    }
  }
  std::vector<std::pair<BigInt, ClassLabel>> keyed;
  for (auto const& label : result) {
    keyed.emplace_back(subgroup_order(label), label);
  }
  std::sort(keyed.begin(), keyed.end(), [](auto const& x, auto const& y) {
    if (x.first != y.first) {
      return x.first > y.first;
    }
    if (x.second.kind != y.second.kind) {
      return x.second.kind < y.second.kind;
    }
    return x.second.level > y.second.level;
  });
  result.clear();
  for (auto const& [order, label] : keyed) {
    result.push_back(label);
  }
  return result;
}

bool in_support_set(ClassLabel label, unsigned e) {
  if (!is_canonical(label, e)) {
    return false;
  }
  if (label == C4 || label == C2 || label == C1) {
    return true;
  }
  if (label.level == 1) {
    return false;
  }
  switch (label.kind) {
    case Kind::G:
    case Kind::F:
    case Kind::B0:
    case Kind::A0:
    case Kind::B1:
    case Kind::B2:
      return true;
    default:
      return false;
  }
}

std::vector<ClassLabel> support_classes(unsigned e) {
  require_odd(e);
  auto divs = divisors(e);
  std::reverse(divs.begin(), divs.end());
  std::vector<ClassLabel> result;
  for (Kind k : {Kind::G, Kind::F, Kind::B0, Kind::A0, Kind::B1, Kind::B2}) {
    for (std::uint64_t f : divs) {
      ClassLabel const label{k, static_cast<unsigned>(f)};
      if (f > 1 && in_support_set(label, e)) {
        result.push_back(label);
      }
    }
  }
  result.push_back(C4);
  result.push_back(C2);
  result.push_back(C1);
  return result;
}

}  // namespace szm
