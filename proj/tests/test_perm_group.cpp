#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szm/group.hpp"
#include "szm/perm_group.hpp"

#include <set>

using namespace szm;

namespace {

std::vector<Perm> perms(SuzukiGroup const& g, std::vector<GroupElement> const& xs) {
  std::vector<Perm> out;
  for (auto const& x : xs) {
    out.push_back(g.perm(x));
  }
  return out;
}

// Closure by breadth-first multiplication, for small groups only.
std::set<Perm> closure(std::vector<Perm> const& gens, std::size_t degree) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& x : frontier) {
      for (auto const& s : gens) {
        auto y = x * s;
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("perm basics") {
  Perm const p{1, 2, 0};
  Perm const q{1, 0, 2};
  CHECK((p * q)[0] == q[p[0]]);
  CHECK(p * p.inverse() == Perm::identity(3));
  CHECK(Perm::identity(3).first_moved() == 3);
  CHECK(q.first_moved() == 0);
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3}), std::invalid_argument);
}

TEST_CASE("small symmetric and cyclic groups") {
  CHECK(PermGroup(5, {Perm{1, 0, 2, 3, 4}, Perm{1, 2, 3, 4, 0}}).order() == 120);
  CHECK(PermGroup(5, {Perm{1, 2, 3, 4, 0}}).order() == 5);
  CHECK(PermGroup(4, {}).order() == 1);
  CHECK(PermGroup(4, {Perm::identity(4)}).order() == 1);
  PermGroup const a4(4, {Perm{1, 2, 0, 3}, Perm{0, 2, 3, 1}});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(Perm{1, 0, 3, 2}));
  CHECK_FALSE(a4.contains(Perm{1, 0, 2, 3}));
  CHECK_THROWS_AS(PermGroup(4, {Perm{1, 0, 2}}), std::invalid_argument);
}

TEST_CASE("order and membership agree with brute-force closure") {
  SuzukiGroup const g(3);
  // F(1) and a dihedral subgroup built from explicit elements.
  std::vector<std::vector<GroupElement>> gen_sets = {
      {g.q_element(1, 0), g.q_element(0, 1)},
      {g.a(2), g.tau()},
      {g.q_element(1, 0), g.tau()},
      {g.q_element(2, 3), g.a(5)},
  };
  for (auto const& gens : gen_sets) {
    auto const ps = perms(g, gens);
    PermGroup const h(65, ps);
    auto const elements = closure(ps, 65);
    CHECK(h.order() == elements.size());
    for (std::uint64_t r = 0; r < g.order(); r += 37) {
      auto const p = g.perm(g.unrank(r));
      CHECK(h.contains(p) == (elements.count(p) == 1));
    }
  }
}

TEST_CASE("Sz(8) and its point stabiliser") {
  SuzukiGroup const g(3);
  auto gens = g.generators();
  PermGroup const full(65, perms(g, gens));
  CHECK(full.order() == 29120);
  gens.pop_back();
  PermGroup const f(65, perms(g, gens));
  CHECK(f.order() == 448);
  CHECK(f.orbit(0).size() == 1);
  CHECK(f.orbit(1).size() == 64);
  CHECK(full.orbit(0).size() == 65);
  // Two-transitivity: orbit of the point stabiliser on the rest is everything.
  PermGroup const f_from_full(65, f.strong_generators());
  CHECK(f_from_full.order() == 448);
  auto const basic = full.basic_orbit_sizes();
  BigInt product = 1;
  for (auto s : basic) {
    product *= s;
  }
  CHECK(product == full.order());
  REQUIRE(basic.size() >= 2);
  CHECK(basic[0] == 65);
  CHECK(basic[1] == 64);
  for (std::uint64_t r = 0; r < g.order(); r += 101) {
    CHECK(full.contains(g.perm(g.unrank(r))));
  }
  CHECK_FALSE(full.contains(Perm::identity(64)));
  std::vector<Perm::Point> swap(65);
  for (std::uint32_t i = 0; i < 65; ++i) {
    swap[i] = i;
  }
  std::swap(swap[2], swap[3]);
  CHECK_FALSE(full.contains(Perm(swap)));
}

TEST_CASE("Sz(2) and Sz(32)") {
  SuzukiGroup const g1(1);
  CHECK(PermGroup(5, perms(g1, g1.generators())).order() == 20);
  SuzukiGroup const g5(5);
  PermGroup const full(1025, perms(g5, g5.generators()));
  CHECK(full.order() == 32537600);
  CHECK(full.basic_orbit_sizes()[0] == 1025);
}
