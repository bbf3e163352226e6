#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szm/group.hpp"

#include <map>
#include <random>
#include <set>

using namespace szm;

namespace {

using Raw = Field::Raw;

GroupElement random_element(SuzukiGroup const& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, g.order() - 1);
  return g.unrank(dist(rng));
}

}  // namespace

TEST_CASE("mul_q") {
  Field const& k = Field::get(3);
  auto const z = k.zero();
  auto const o = k.one();
  for (auto const& c : k.elements()) {
    for (auto const& d : k.elements()) {
      CHECK(mul_q({z, z}, {c, d}) == QPair{c, d});
      CHECK(mul_q({z, c}, {z, d}) == QPair{z, c + d});
    }
  }
  for (unsigned e : {1u, 3u, 5u}) {
    Field const& f = Field::get(e);
    CHECK(mul_q({f.one(), f.zero()}, {f.one(), f.zero()}) == QPair{f.zero(), f.one()});
  }
  CHECK(mul_q({o, z}, {o, z}) == QPair{z, o});
}

TEST_CASE("conj_by_a") {
  Field const& k = Field::get(3);
  auto const z = k.zero();
  auto const o = k.one();
  std::set<Raw> orbit;
  for (auto const& kappa : k.elements()) {
    if (kappa.is_zero()) {
      continue;
    }
    CHECK(conj_by_a({z, z}, kappa) == QPair{z, z});
    auto const img = conj_by_a({z, o}, kappa);
    CHECK(img.alpha.is_zero());
    orbit.insert(img.beta.value());
  }
  CHECK(orbit.size() == 7);
  auto const p = QPair{k.element(3), k.element(5)};
  CHECK(conj_by_a(p, o) == p);
  CHECK_THROWS_AS(conj_by_a(p, z), std::invalid_argument);
}

TEST_CASE("conj_by_a agrees with matrix conjugation") {
  SuzukiGroup const g(3);
  Field const& k = g.field();
  for (Raw kappa = 1; kappa < 8; ++kappa) {
    auto const a = g.a(kappa);
    for (Raw al = 0; al < 8; ++al) {
      for (Raw be = 0; be < 8; ++be) {
        auto const lhs = g.mul(g.mul(g.inverse(a), g.q_element(al, be)), a);
        auto const p = conj_by_a({k.element(al), k.element(be)}, k.element(kappa));
        CHECK(lhs == g.q_element(p.alpha, p.beta));
      }
    }
  }
}

TEST_CASE("Q multiplication matches matrices") {
  SuzukiGroup const g(3);
  Field const& k = g.field();
  for (Raw a1 = 0; a1 < 8; ++a1) {
    for (Raw b1 = 0; b1 < 8; b1 += 3) {
      for (Raw a2 = 0; a2 < 8; ++a2) {
        for (Raw b2 = 0; b2 < 8; b2 += 5) {
          auto const p = mul_q({k.element(a1), k.element(b1)},
                               {k.element(a2), k.element(b2)});
          CHECK(g.mul(g.q_element(a1, b1), g.q_element(a2, b2)) ==
                g.q_element(p.alpha, p.beta));
        }
      }
    }
  }
}

TEST_CASE("canonicalize") {
  SuzukiGroup const g(3);
  Field const& k = g.field();
  CHECK(g.canonicalize(Matrix4::identity(k)) == g.identity());
  auto const z = k.zero();
  CHECK(g.canonicalize(g.tau_matrix()) ==
        GroupElement(GroupElement::BigCell{z, z, k.one(), z, z}));
  CHECK(g.mul(g.tau(), g.tau()) == g.identity());

  Matrix4 bad = Matrix4::identity(k);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(g.canonicalize(bad), NotInGroup);
  Matrix4 zero(k);
  CHECK_THROWS_AS(g.canonicalize(zero), NotInGroup);
  Matrix4 scaled = Matrix4::identity(k);
  scaled(2, 2) = 2;
  CHECK_THROWS_AS(g.canonicalize(scaled), NotInGroup);
}

TEST_CASE("element construction errors") {
  Field const& k = Field::get(3);
  CHECK_THROWS_AS(GroupElement(GroupElement::InF{k.one(), k.one(), k.zero()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      GroupElement(GroupElement::InF{k.one(), Field::get(5).one(), k.one()}),
      std::invalid_argument);
  SuzukiGroup const g(3);
  SuzukiGroup const h(5);
  CHECK_THROWS_AS(g.to_matrix(h.identity()), std::invalid_argument);
  CHECK_THROWS_AS(g.unrank(g.order()), std::out_of_range);
}

TEST_CASE("Sz(8) by exhaustive enumeration") {
  SuzukiGroup const g(3);
  REQUIRE(g.order() == 29120);
  std::map<std::uint64_t, std::uint64_t> census;
  std::uint64_t in_f = 0;
  bool round_trip = true;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    auto const x = g.unrank(r);
    round_trip = round_trip && g.rank(x) == r &&
                 g.canonicalize(g.to_matrix(x)) == x;
    in_f += x.in_f() ? 1 : 0;
    ++census[g.element_order(x)];
  }
  CHECK(round_trip);
  CHECK(in_f == 448);
  std::map<std::uint64_t, std::uint64_t> const expected{
      {1, 1}, {2, 455}, {4, 3640}, {5, 5824}, {7, 12480}, {13, 6720}};
  CHECK(census == expected);
  CHECK(census.rbegin()->first == 13);
}

TEST_CASE("closure: products of generators stay in the canonical set") {
  // Breadth-first closure from the generators, keyed by canonical rank.
  SuzukiGroup const g(3);
  auto const gens = g.generators();
  std::vector<bool> seen(g.order(), false);
  std::vector<GroupElement> frontier{g.identity()};
  seen[g.rank(g.identity())] = true;
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (auto const& x : frontier) {
      for (auto const& s : gens) {
        auto const y = g.mul(x, s);
        auto const r = g.rank(y);
        if (!seen[r]) {
          seen[r] = true;
          ++count;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  CHECK(count == 29120);
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(20261016);
  for (unsigned e : {3u, 5u}) {
    SuzukiGroup const g(e);
    for (int i = 0; i < (e == 3 ? 1000 : 200); ++i) {
      auto const x = random_element(g, rng);
      auto const y = random_element(g, rng);
      auto const z = random_element(g, rng);
      CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
      CHECK(g.mul(x, g.inverse(x)) == g.identity());
      CHECK(g.mul(g.identity(), x) == x);
      auto const n = g.element_order(x);
      CHECK(g.power(x, n) == g.identity());
      bool const divides = 4 % n == 0 || (g.q() - 1) % n == 0 ||
                           (g.q() * g.q() + 1) % n == 0;
      CHECK(divides);
    }
  }
}

TEST_CASE("element orders") {
  SuzukiGroup const g(3);
  CHECK(g.element_order(g.identity()) == 1);
  CHECK(g.element_order(g.q_element(0, 1)) == 2);
  CHECK(g.element_order(g.q_element(1, 0)) == 4);
  CHECK(g.element_order(g.tau()) == 2);
  CHECK(g.element_order(g.a(2)) == 7);
}

TEST_CASE("ovoid action") {
  SuzukiGroup const g(3);
  CHECK(g.degree() == 65);
  for (std::uint32_t p = 0; p < 65; ++p) {
    CHECK(g.act(g.identity(), OvoidPoint{p}) == OvoidPoint{p});
  }
  CHECK(g.act(g.tau(), infinity_point) == omega_point);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto const x = random_element(g, rng);
    auto const y = random_element(g, rng);
    if (x.in_f()) {
      CHECK(g.act(x, infinity_point) == infinity_point);
    } else {
      CHECK(g.act(x, infinity_point) != infinity_point);
    }
    CHECK(g.perm(g.mul(x, y)) == g.perm(x) * g.perm(y));
  }
  // Q is regular on the affine points.
  std::set<std::uint32_t> orbit;
  for (Raw a = 0; a < 8; ++a) {
    for (Raw b = 0; b < 8; ++b) {
      orbit.insert(g.act(g.q_element(a, b), omega_point).index);
    }
  }
  CHECK(orbit.size() == 64);
  CHECK(orbit.count(0) == 0);
  CHECK_THROWS_AS(g.act(g.identity(), OvoidPoint{65}), std::out_of_range);
}

TEST_CASE("point stabilisers") {
  // No non-identity element fixes three points: at most two fixed points.
  SuzukiGroup const g(3);
  for (std::uint64_t r = 1; r < g.order(); ++r) {
    auto const p = g.perm(g.unrank(r));
    int fixed = 0;
    for (std::uint32_t i = 0; i < 65; ++i) {
      fixed += p[i] == i ? 1 : 0;
    }
    if (fixed > 2) {
      FAIL("element of rank " << r << " fixes " << fixed << " points");
    }
  }
}

TEST_CASE("subfield points") {
  SuzukiGroup const g(3);
  int count = 0;
  for (std::uint32_t p = 0; p < 65; ++p) {
    count += g.point_in_subfield(OvoidPoint{p}, 1) ? 1 : 0;
  }
  CHECK(count == 5);
}

TEST_CASE("Sz(2)") {
  SuzukiGroup const g(1);
  CHECK(g.order() == 20);
  std::map<std::uint64_t, int> census;
  for (std::uint64_t r = 0; r < 20; ++r) {
    ++census[g.element_order(g.unrank(r))];
  }
  std::map<std::uint64_t, int> const expected{{1, 1}, {2, 5}, {4, 10}, {5, 4}};
  CHECK(census == expected);
}
