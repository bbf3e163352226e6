#include "szm/moebius.hpp"

#include <stdexcept>

namespace szm {

namespace {

bool is_cyclic_class(ClassLabel label) {
  return label == C4 || label == C2 || label == C1;
}

void require_canonical(ClassLabel label, unsigned e) {
  if (!is_canonical(label, e)) {
    throw std::invalid_argument("label " + to_string(label) +
                                " is not canonical for e = " + std::to_string(e));
  }
}

// Rows for the order-4 and order-2 cyclic classes.
BigInt n_count_c4(ClassLabel k, unsigned e) {
  unsigned const h = k.level;
  switch (k.kind) {
    case Kind::G:
    case Kind::F:
      return pow2(e - h);
    case Kind::Q:
      return 1;
    case Kind::B1:
      return pow2(e - 1);
    case Kind::B2:
      return h > 1 ? pow2(e - 1) : BigInt(0);
    default:
      return 0;
  }
}

BigInt n_count_c2(ClassLabel k, unsigned e) {
  unsigned const h = k.level;
  if (k == C4) {
    return pow2(e - 1);
  }
  switch (k.kind) {
    case Kind::G:
    case Kind::F:
      return pow2(2 * (e - h));
    case Kind::Q:
      return pow2(e - h);
    case Kind::Z:
      return 1;
    case Kind::B0:
      return h > 1 ? pow2(2 * e - 1) : BigInt(0);
    case Kind::B1:
      return pow2(2 * (e - 1));
    case Kind::B2:
      return h > 1 ? pow2(2 * (e - 1)) : BigInt(0);
    default:
      return 0;
  }
}

}  // namespace

int classical_mu(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("classical_mu: n must be positive");
  }
  int sign = 1;
  for (auto [p, k] : factorize(n)) {
    if (k > 1) {
      return 0;
    }
    sign = -sign;
  }
  return sign;
}

BigInt n_count(ClassLabel hl, ClassLabel kl, unsigned e) {
  require_canonical(hl, e);
  require_canonical(kl, e);
  if (hl == kl) {
    return 1;
  }
  if (hl == C1) {
    return class_size(kl, e);
  }
  if (kl == C1) {
    return 0;
  }
  unsigned const f = containment_level(hl, e);
  unsigned const h = containment_level(kl, e);
  if (h % f != 0) {
    return 0;
  }
  if (hl == C4) {
    return n_count_c4(kl, e);
  }
  if (hl == C2) {
    return n_count_c2(kl, e);
  }
  if (is_cyclic_class(kl)) {
    return 0;
  }
  Kind const k = kl.kind;
  switch (hl.kind) {
    case Kind::G:
      return k == Kind::G ? 1 : 0;
    case Kind::F:
      return (k == Kind::G || k == Kind::F) ? 1 : 0;
    case Kind::Q:
      if (k == Kind::G || k == Kind::F) {
        return pow2(e - h);
      }
      return k == Kind::Q ? 1 : 0;
    case Kind::Z:
      if (k == Kind::G || k == Kind::F) {
        return pow2(2 * (e - h));
      }
      if (k == Kind::Q) {
        return pow2(e - h);
      }
      return k == Kind::Z ? 1 : 0;
    case Kind::B0:
      return (k == Kind::G || k == Kind::B0) ? 1 : 0;
    case Kind::A0: {
      BigInt const c = (pow2(e) - 1) / (pow2(h) - 1);
      if (k == Kind::G || k == Kind::B0) {
        return c;
      }
      if (k == Kind::F) {
        return 2 * c;
      }
      return k == Kind::A0 ? 1 : 0;
    }
    case Kind::B1:
      return (k == Kind::G || k == Kind::B1) ? 1 : 0;
    case Kind::B2:
      return (k == Kind::G || k == Kind::B2) ? 1 : 0;
    case Kind::A1:
      if (k == Kind::G || k == Kind::B1) {
        return a_i_order(1, e) / a_i_order(1, kl.level);
      }
      return k == Kind::A1 ? 1 : 0;
    case Kind::A2:
      if (k == Kind::G || k == Kind::B2) {
        return a_i_order(2, e) / a_i_order(2, kl.level);
      }
      return k == Kind::A2 ? 1 : 0;
  }
  throw std::logic_error("n_count: bad kind");
}

BigInt const& MoebiusTable::operator[](ClassLabel label) const {
  auto const it = values_.find(label);
  if (it == values_.end()) {
    throw std::out_of_range("no Moebius value for " + to_string(label));
  }
  return it->second;
}

MoebiusTable mu_table(unsigned e) {
  auto const classes = canonical_classes(e);
  std::map<ClassLabel, BigInt> values;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ClassLabel const h = classes[i];
    if (i == 0) {
      values[h] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      ClassLabel const k = classes[j];
      BigInt const n = n_count(h, k, e);
      if (n == 0) {
        continue;
      }
      if (subgroup_order(k) == subgroup_order(h)) {
        throw std::logic_error("mu_table: classes " + to_string(h) + " and " +
                               to_string(k) + " of equal order are nested");
      }
      sum += n * values.at(k);
    }
    values[h] = -sum;
  }
  return MoebiusTable(e, std::move(values));
}

BigInt closed_form_mu(ClassLabel label, unsigned e) {
  require_canonical(label, e);
  if (!in_support_set(label, e)) {
    return 0;
  }
  int const m = classical_mu(e / label.level);
  if (label == C4) {
    return -pow2(e) * classical_mu(e);
  }
  if (label == C2) {
    return -pow2(2 * e - 1) * classical_mu(e);
  }
  if (label == C1) {
    return suzuki_order(e) * classical_mu(e);
  }
  switch (label.kind) {
    case Kind::G:
      return m;
    case Kind::F:
    case Kind::B0:
    case Kind::B1:
    case Kind::B2:
      return -m;
    case Kind::A0:
      return 2 * (pow2(e) - 1) / (pow2(label.level) - 1) * m;
    default:
      return 0;
  }
}

}  // namespace szm
