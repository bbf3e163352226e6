#include "szm/field.hpp"

#include "szm/numtheory.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>

namespace szm {

namespace {

// Remainder of a modulo b, both as GF(2)[x] bitvectors.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  int const db = std::bit_width(b) - 1;
  for (int da = std::bit_width(a) - 1; da >= db; da = std::bit_width(a) - 1) {
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint64_t poly) {
  int const degree = std::bit_width(poly) - 1;
  if (degree < 1) {
    return false;
  }
  for (std::uint64_t d = 2; static_cast<int>(std::bit_width(d)) - 1 <= degree / 2; ++d) {
    if (poly_mod(poly, d) == 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t smallest_irreducible(unsigned e) {
  if (e == 0 || e > 62) {
    throw std::invalid_argument("smallest_irreducible: degree out of range");
  }
  std::uint64_t const top = std::uint64_t{1} << e;
  for (std::uint64_t low = 0; low < top; ++low) {
    if (is_irreducible(top | low)) {
      return top | low;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Field(unsigned e) : e_(e), modulus_(smallest_irreducible(e)) {}

const Field& Field::get(unsigned e) {
  if (e == 0 || e > max_degree || e % 2 == 0) {
    throw std::invalid_argument("Field::get: e must be odd with 1 <= e <= " +
                                std::to_string(max_degree) + ", got " +
                                std::to_string(e));
  }
  static std::array<std::once_flag, max_degree + 1> flags;
  static std::array<std::unique_ptr<Field>, max_degree + 1> fields;
  std::call_once(flags[e], [e] { fields[e].reset(new Field(e)); });
  return *fields[e];
}

Field::Raw Field::mul(Raw x, Raw y) const noexcept {
  std::uint64_t prod = 0;
  std::uint64_t a = x;
  while (y != 0) {
    if (y & 1) {
      prod ^= a;
    }
    a <<= 1;
    y >>= 1;
  }
  for (int i = std::bit_width(prod) - 1; i >= static_cast<int>(e_); --i) {
    if ((prod >> i) & 1) {
      prod ^= modulus_ << (i - e_);
    }
  }
  return static_cast<Raw>(prod);
}

Field::Raw Field::pow(Raw x, std::uint64_t k) const noexcept {
  Raw r = 1;
  while (k != 0) {
    if (k & 1) {
      r = mul(r, x);
    }
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

Field::Raw Field::inv(Raw x) const {
  if (x == 0) {
    throw std::domain_error("Field::inv: inversion of zero");
  }
  return pow(x, size() - 2);
}

Field::Raw Field::theta(Raw x) const noexcept {
  for (unsigned i = 0; i < theta_exponent(); ++i) {
    x = square(x);
  }
  return x;
}

Field::Raw Field::theta_inv(Raw x) const noexcept {
  for (unsigned i = 0; i < e_ - theta_exponent(); ++i) {
    x = square(x);
  }
  return x;
}

bool Field::in_subfield(Raw x, unsigned f) const {
  if (f == 0 || e_ % f != 0) {
    throw std::invalid_argument("in_subfield: " + std::to_string(f) +
                                " does not divide " + std::to_string(e_));
  }
  Raw y = x;
  for (unsigned i = 0; i < f; ++i) {
    y = square(y);
  }
  return y == x;
}

Field::Raw Field::subfield_primitive(unsigned f) const {
  if (f == 0 || e_ % f != 0) {
    throw std::invalid_argument("subfield_primitive: f must divide e");
  }
  std::uint64_t const order = (std::uint64_t{1} << f) - 1;
  if (order == 1) {
    return 1;
  }
  auto const factors = factorize(order);
  for (Raw x = 2; x < size(); ++x) {
    if (!in_subfield(x, f) || pow(x, order) != 1) {
      continue;
    }
    bool primitive = true;
    for (auto [p, k] : factors) {
      if (pow(x, order / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      return x;
    }
  }
  throw std::logic_error("subfield_primitive: none found");
}

std::vector<Field::Raw> Field::subfield_basis(unsigned f) const {
  Raw const w = subfield_primitive(f);
  std::vector<Raw> basis;
  Raw p = 1;
  for (unsigned i = 0; i < f; ++i) {
    basis.push_back(p);
    p = mul(p, w);
  }
  return basis;
}

FieldElement Field::element(Raw x) const {
  if (x >= size()) {
    throw std::invalid_argument("Field::element: value out of range");
  }
  return FieldElement(x, *this);
}

FieldElement Field::zero() const { return FieldElement(0, *this); }
FieldElement Field::one() const { return FieldElement(1, *this); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> all;
  all.reserve(size());
  for (std::uint64_t x = 0; x < size(); ++x) {
    all.emplace_back(static_cast<Raw>(x), *this);
  }
  return all;
}

std::string Field::to_string(Raw x) const {
  if (x == 0) {
    return "0";
  }
  std::string s;
  for (int i = static_cast<int>(e_) - 1; i >= 0; --i) {
    if (((x >> i) & 1) == 0) {
      continue;
    }
    if (!s.empty()) {
      s += '+';
    }
    if (i == 0) {
      s += '1';
    } else if (i == 1) {
      s += 't';
    } else {
      s += "t^" + std::to_string(i);
    }
  }
  return s;
}

FieldElement::FieldElement(Raw value, const Field& field)
    : value_(value), field_(&field) {}

namespace {

void require_same(FieldElement const& x, FieldElement const& y) {
  if (&x.field() != &y.field()) {
    throw std::invalid_argument("field mismatch: GF(2^" +
                                std::to_string(x.field().degree()) +
                                ") vs GF(2^" +
                                std::to_string(y.field().degree()) + ")");
  }
}

}  // namespace

std::strong_ordering operator<=>(FieldElement const& x, FieldElement const& y) {
  if (auto c = x.field().degree() <=> y.field().degree(); c != 0) {
    return c;
  }
  return x.value() <=> y.value();
}

FieldElement& FieldElement::operator+=(FieldElement const& y) {
  require_same(*this, y);
  value_ ^= y.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(FieldElement const& y) {
  require_same(*this, y);
  value_ = field_->mul(value_, y.value_);
  return *this;
}

FieldElement add(FieldElement const& x, FieldElement const& y) { return x + y; }
FieldElement mul(FieldElement const& x, FieldElement const& y) { return x * y; }

FieldElement inv(FieldElement const& x) {
  return FieldElement(x.field().inv(x.value()), x.field());
}

FieldElement pow(FieldElement const& x, std::uint64_t k) {
  return FieldElement(x.field().pow(x.value(), k), x.field());
}

FieldElement theta(FieldElement const& x) {
  return FieldElement(x.field().theta(x.value()), x.field());
}

FieldElement phi(FieldElement const& x) {
  return FieldElement(x.field().phi(x.value()), x.field());
}

bool in_subfield(FieldElement const& x, unsigned f) {
  return x.field().in_subfield(x.value(), f);
}

std::string to_string(FieldElement const& x) {
  return x.field().to_string(x.value());
}

}  // namespace szm
