#include "szm/enumeration.hpp"

#include "szm/moebius.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace szm {

namespace {

bool divides(std::uint64_t n, BigInt const& m) { return m % n == 0; }

// Elements of order n in a cyclic group of order m.
BigInt cyclic_count(std::uint64_t n, BigInt const& m) {
  return divides(n, m) ? BigInt(totient(n)) : BigInt(0);
}

// (1/e) sum_{f | e, pred(f)} mu(e/f) term(f), checked to be integral.
template <class Term>
BigInt divisor_sum(unsigned e, BigInt scale, Term term, unsigned step = 1) {
  require_odd(e);
  BigInt sum = 0;
  for (auto f : divisors(e)) {
    if (f % step == 0) {
      sum += classical_mu(e / f) * term(static_cast<unsigned>(f));
    }
  }
  sum *= scale;
  if (sum % e != 0) {
    throw std::logic_error("closed form is not integral");
  }
  return sum / e;
}

}  // namespace

GammaDescriptor parse_gamma(std::string_view text) {
  auto const colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("gamma must look like free:k, hecke:k or hecke-all:k");
  }
  auto const name = text.substr(0, colon);
  auto const digits = text.substr(colon + 1);
  unsigned k = 0;
  auto const [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed k in gamma '" + std::string(text) + "'");
  }
  GammaDescriptor g{GammaDescriptor::Variant::Free, k};
  if (name == "free") {
    if (k < 1) {
      throw std::invalid_argument("free group rank must be at least 1");
    }
    return g;
  }
  if (name == "hecke") {
    g.variant = GammaDescriptor::Variant::HeckeSmooth;
  } else if (name == "hecke-all") {
    g.variant = GammaDescriptor::Variant::HeckeAll;
  } else {
    throw std::invalid_argument("unknown gamma '" + std::string(name) + "'");
  }
  if (k < 3) {
    throw std::invalid_argument("Hecke group needs k >= 3");
  }
  return g;
}

std::string to_string(GammaDescriptor const& gamma) {
  switch (gamma.variant) {
    case GammaDescriptor::Variant::Free:
      return "free:" + std::to_string(gamma.k);
    case GammaDescriptor::Variant::HeckeSmooth:
      return "hecke:" + std::to_string(gamma.k);
    case GammaDescriptor::Variant::HeckeAll:
      return "hecke-all:" + std::to_string(gamma.k);
  }
  throw std::logic_error("bad gamma variant");
}

BigInt order_count(ClassLabel label, std::uint64_t n, unsigned e) {
  if (!is_canonical(label, e)) {
    throw std::invalid_argument("label " + to_string(label) +
                                " is not canonical for e = " + std::to_string(e));
  }
  if (n == 0) {
    throw std::invalid_argument("element order must be positive");
  }
  if (n == 1) {
    return 1;
  }
  unsigned const f = label.level;
  BigInt const m = pow2(f) - 1;
  bool const odd = n % 2 == 1;
  switch (label.kind) {
    case Kind::G: {
      BigInt const order = subgroup_order(label);
      if (n == 2) {
        return m * (pow2(2 * f) + 1);
      }
      if (n == 4) {
        return pow2(f) * (pow2(2 * f) + 1) * m;
      }
      if (!odd) {
        return 0;
      }
      if (divides(n, m)) {
        return totient(n) * order / (2 * m);
      }
      for (int i : {1, 2}) {
        BigInt const a = a_i_order(i, f);
        if (divides(n, a)) {
          return totient(n) * order / (4 * a);
        }
      }
      return 0;
    }
    case Kind::F:
      if (n == 2) {
        return m;
      }
      if (n == 4) {
        return pow2(f) * m;
      }
      return odd && divides(n, m) ? totient(n) * pow2(2 * f) : BigInt(0);
    case Kind::Q:
      if (n == 2) {
        return m;
      }
      return n == 4 ? pow2(f) * m : BigInt(0);
    case Kind::Z:
      return n == 2 ? m : BigInt(0);
    case Kind::B0:
      if (n == 2) {
        return m;
      }
      return odd ? cyclic_count(n, m) : BigInt(0);
    case Kind::A0:
      return cyclic_count(n, m);
    case Kind::B1:
    case Kind::B2: {
      BigInt const a = a_i_order(label.kind == Kind::B1 ? 1 : 2, f);
      if (n == 2) {
        return a;
      }
      if (n == 4) {
        return 2 * a;
      }
      return odd ? cyclic_count(n, a) : BigInt(0);
    }
    case Kind::A1:
      return cyclic_count(n, a_i_order(1, f));
    case Kind::A2:
      return cyclic_count(n, a_i_order(2, f));
  }
  throw std::logic_error("order_count: bad kind");
}

OrderCensus census(ClassLabel label, unsigned e) {
  if (!is_canonical(label, e)) {
    throw std::invalid_argument("label " + to_string(label) +
                                " is not canonical for e = " + std::to_string(e));
  }
  unsigned const f = label.level;
  if (f > 61) {
    throw std::invalid_argument("census: level too large for 64-bit orders");
  }
  std::set<std::uint64_t> candidates{1, 2, 4};
  for (BigInt const& m : {pow2(f) - 1, a_i_order(1, f), a_i_order(2, f)}) {
    for (auto d : divisors(to_u64(m))) {
      candidates.insert(d);
    }
  }
  OrderCensus result{label, {}};
  for (auto n : candidates) {
    BigInt c = order_count(label, n, e);
    if (c != 0) {
      result.counts.emplace(n, std::move(c));
    }
  }
  return result;
}

BigInt hom_count(GammaDescriptor const& gamma, ClassLabel label, unsigned e) {
  switch (gamma.variant) {
    case GammaDescriptor::Variant::Free:
      return pow(class_order(label, e), gamma.k);
    case GammaDescriptor::Variant::HeckeSmooth:
      return order_count(label, 2, e) * order_count(label, gamma.k, e);
    case GammaDescriptor::Variant::HeckeAll: {
      BigInt k_part = 0;
      for (auto d : divisors(gamma.k)) {
        k_part += order_count(label, d, e);
      }
      return (1 + order_count(label, 2, e)) * k_part;
    }
  }
  throw std::logic_error("hom_count: bad gamma variant");
}

BigInt n_gamma(GammaDescriptor const& gamma, unsigned e) {
  auto const table = mu_table(e);
  Rational sum = 0;
  for (auto const& label : support_classes(e)) {
    BigInt const& mu = table[label];
    if (mu == 0) {
      continue;
    }
    sum += Rational(mu * hom_count(gamma, label, e), normalizer_order(label, e));
  }
  sum /= e;
  if (denominator(sum) != 1 || sum < 0) {
    throw std::logic_error("n_gamma: result is not a non-negative integer");
  }
  return numerator(sum);
}

BigInt closed_form_h4(unsigned e) {
  return divisor_sum(e, 1, [](unsigned f) { return pow2(f) * (pow2(f) - 2); });
}

BigInt closed_form_h5(unsigned e) {
  return divisor_sum(e, 1, [](unsigned f) { return (pow2(f) - 1) * a_i_order(2, f); });
}

BigInt closed_form_h7(unsigned e) {
  return divisor_sum(e, 3, [](unsigned f) { return pow2(2 * f) - 2; }, 3);
}

BigInt closed_form_d2(unsigned e) {
  return divisor_sum(e, 1, [](unsigned f) {
    return pow2(f) * (pow2(4 * f) - pow2(3 * f) - 9);
  });
}

}  // namespace szm
