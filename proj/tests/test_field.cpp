#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szm/field.hpp"

#include <bit>
#include <cstdint>

using szm::Field;
using szm::FieldElement;

namespace {

// Independent GF(2)[x] helpers for the Rabin irreducibility test.
std::uint64_t pmod(std::uint64_t a, std::uint64_t m) {
  int const dm = std::bit_width(m) - 1;
  while (a != 0 && static_cast<int>(std::bit_width(a)) - 1 >= dm) {
    a ^= m << (std::bit_width(a) - 1 - dm);
  }
  return a;
}

std::uint64_t pmulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  for (; b != 0; b >>= 1, a = pmod(a << 1, m)) {
    if (b & 1) {
      r ^= a;
    }
  }
  return pmod(r, m);
}

std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = pmod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod m
std::uint64_t frob_x(unsigned k, std::uint64_t m) {
  std::uint64_t x = pmod(2, m);
  for (unsigned i = 0; i < k; ++i) {
    x = pmulmod(x, x, m);
  }
  return x;
}

bool rabin_irreducible(std::uint64_t m) {
  unsigned const n = std::bit_width(m) - 1;
  if (frob_x(n, m) != pmod(2, m)) {
    return false;
  }
  for (unsigned r = 2; r <= n; ++r) {
    bool prime = true;
    for (unsigned d = 2; d * d <= r; ++d) {
      prime = prime && r % d != 0;
    }
    if (!prime || n % r != 0) {
      continue;
    }
    if (pgcd(m, frob_x(n / r, m) ^ 2) != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("modulus is the smallest irreducible polynomial") {
  CHECK(Field::get(3).modulus() == 0b1011);
  CHECK(Field::get(5).modulus() == 0b100101);
  for (unsigned e : {1u, 3u, 5u, 7u, 9u, 11u, 13u}) {
    std::uint64_t const m = Field::get(e).modulus();
    CHECK(std::bit_width(m) - 1 == e);
    CHECK(rabin_irreducible(m));
    for (std::uint64_t smaller = std::uint64_t{1} << e; smaller < m; ++smaller) {
      CHECK_FALSE(rabin_irreducible(smaller));
    }
  }
}

TEST_CASE("addition") {
  Field const& k = Field::get(3);
  for (auto const& x : k.elements()) {
    CHECK((x + x).is_zero());
    CHECK(k.zero() + x == x);
  }
  // t + t^2 = t^2 + t
  CHECK((k.element(0b010) + k.element(0b100)).value() == 0b110);
}

TEST_CASE("multiplication and inversion") {
  Field const& k = Field::get(3);
  auto const t = k.element(0b010);
  CHECK(pow(t, 3).value() == 0b011);
  for (auto const& y : k.elements()) {
    CHECK(mul(k.one(), y) == y);
  }
  int checked = 0;
  for (auto const& x : k.elements()) {
    if (!x.is_zero()) {
      CHECK(inv(x) * x == k.one());
      ++checked;
    }
  }
  CHECK(checked == 7);
  CHECK_THROWS_AS(inv(k.zero()), std::domain_error);
}

TEST_CASE("multiplicative group is cyclic of order q - 1") {
  for (unsigned e : {3u, 5u, 7u, 9u}) {
    Field const& k = Field::get(e);
    auto const w = k.element(k.subfield_primitive(e));
    auto x = w;
    std::uint64_t order = 1;
    while (x != k.one()) {
      x *= w;
      ++order;
    }
    CHECK(order == k.size() - 1);
  }
}

TEST_CASE("theta squares to the Frobenius") {
  for (unsigned e : {1u, 3u, 5u, 7u, 9u}) {
    Field const& k = Field::get(e);
    for (auto const& x : k.elements()) {
      CHECK(theta(theta(x)) == x * x);
      CHECK(k.theta_inv(k.theta(x.value())) == x.value());
    }
  }
  Field const& k = Field::get(3);
  CHECK(theta(k.zero()) == k.zero());
  CHECK(theta(k.one()) == k.one());
  for (auto const& x : k.elements()) {
    CHECK(theta(x) == pow(x, 4));
    for (auto const& y : k.elements()) {
      CHECK(theta(x * y) == theta(x) * theta(y));
    }
  }
}

TEST_CASE("phi preserves subfields in both directions") {
  CHECK(phi(Field::get(3).zero()).is_zero());
  for (unsigned e : {3u, 5u, 7u, 9u}) {
    Field const& k = Field::get(e);
    for (auto const& x : k.elements()) {
      CHECK(phi(phi(x)) == x + x * x);
      for (unsigned f = 1; f <= e; ++f) {
        if (e % f != 0) {
          continue;
        }
        CHECK(in_subfield(phi(x), f) == in_subfield(x, f));
      }
    }
  }
}

TEST_CASE("subfield membership") {
  for (unsigned e : {1u, 3u, 5u, 7u, 9u, 15u}) {
    Field const& k = Field::get(e);
    for (unsigned f = 1; f <= e; ++f) {
      if (e % f != 0) {
        continue;
      }
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < k.size(); ++x) {
        count += k.in_subfield(static_cast<Field::Raw>(x), f) ? 1 : 0;
      }
      CHECK(count == (std::uint64_t{1} << f));
      CHECK(k.subfield_basis(f).size() == f);
    }
  }
  Field const& k3 = Field::get(3);
  CHECK(in_subfield(k3.zero(), 1));
  CHECK(in_subfield(k3.one(), 3));
  CHECK_THROWS_AS(in_subfield(k3.one(), 2), std::invalid_argument);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Field::get(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(27), std::invalid_argument);
  auto const x = Field::get(3).one();
  auto const y = Field::get(5).one();
  CHECK_THROWS_AS(add(x, y), std::invalid_argument);
  CHECK_THROWS_AS(mul(x, y), std::invalid_argument);
  CHECK(x != y);
  CHECK(to_string(Field::get(3).element(0b110)) == "t^2+t");
}
