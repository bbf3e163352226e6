#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szm/construct.hpp"

#include <map>

using namespace szm;

namespace {

// Element orders of a small subgroup by closure over the generators.
std::map<std::uint64_t, int> orders_of(SuzukiGroup const& g,
                                       std::vector<GroupElement> const& gens) {
  std::vector<GroupElement> elements{g.identity()};
  std::vector<std::uint64_t> ranks{g.rank(g.identity())};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (auto const& s : gens) {
      auto y = g.mul(elements[k], s);
      auto const r = g.rank(y);
      if (std::find(ranks.begin(), ranks.end(), r) == ranks.end()) {
        ranks.push_back(r);
        elements.push_back(std::move(y));
      }
    }
  }
  std::map<std::uint64_t, int> census;
  for (auto const& x : elements) {
    ++census[g.element_order(x)];
  }
  return census;
}

}  // namespace

TEST_CASE("every label at e = 3 has its catalogue order") {
  SubgroupBuilder const b(3);
  for (unsigned f : {1u, 3u}) {
    for (int k = 0; k < 10; ++k) {
      ClassLabel const label{static_cast<Kind>(k), f};
      auto const inst = b.construct(label);
      CHECK(inst.label == label);
      CHECK(inst.perm_group.order() == subgroup_order(label));
    }
  }
}

TEST_CASE("named representatives") {
  SubgroupBuilder const b(3);
  SuzukiGroup const& g = b.group();
  CHECK(b.construct(ClassLabel{Kind::G, 3}).perm_group.order() == 29120);

  auto const b0 = b.construct(ClassLabel{Kind::B0, 3});
  std::map<std::uint64_t, int> const dihedral{{1, 1}, {2, 7}, {7, 6}};
  CHECK(orders_of(g, b0.generators) == dihedral);

  auto const b1 = b.construct(ClassLabel{Kind::B1, 3});
  std::map<std::uint64_t, int> const frobenius20{{1, 1}, {2, 5}, {4, 10}, {5, 4}};
  CHECK(orders_of(g, b1.generators) == frobenius20);
  // The G(1) class: same structure as the subgroup over GF(2).
  CHECK(orders_of(g, b.construct(ClassLabel{Kind::G, 1}).generators) == frobenius20);

  auto const b2 = b.construct(ClassLabel{Kind::B2, 3});
  std::map<std::uint64_t, int> const b2_orders{{1, 1}, {2, 13}, {4, 26}, {13, 12}};
  CHECK(orders_of(g, b2.generators) == b2_orders);
}

TEST_CASE("cyclic generators and their normalising elements") {
  for (unsigned e : {3u, 5u}) {
    SubgroupBuilder const b(e);
    SuzukiGroup const& g = b.group();
    for (int i : {1, 2}) {
      auto const& a = b.a_i_generator(i);
      auto const& c = b.c_i(i);
      CHECK(BigInt(g.element_order(a)) == a_i_order(i, e));
      CHECK(g.element_order(c) == 4);
      CHECK(g.mul(g.mul(g.inverse(c), a), c) == g.power(a, g.q()));
    }
  }
  SubgroupBuilder const b(3);
  CHECK_THROWS_AS(b.a_i_generator(0), std::invalid_argument);
  CHECK_THROWS_AS(b.c_i(3), std::invalid_argument);
}

TEST_CASE("subfield subgroups fix the subfield points") {
  SubgroupBuilder const b(3);
  SuzukiGroup const& g = b.group();
  for (auto const& x : b.construct(ClassLabel{Kind::G, 1}).generators) {
    for (std::uint32_t p = 0; p < g.degree(); ++p) {
      bool const in = g.point_in_subfield(OvoidPoint{p}, 1);
      CHECK(g.point_in_subfield(g.act(x, OvoidPoint{p}), 1) == in);
    }
  }
}

TEST_CASE("construction is deterministic") {
  SubgroupBuilder const b1(5);
  SubgroupBuilder const b2(5);
  for (int k = 0; k < 10; ++k) {
    ClassLabel const label{static_cast<Kind>(k), 5};
    CHECK(b1.construct(label).generators == b2.construct(label).generators);
  }
  CHECK(b1.construct(ClassLabel{Kind::B2, 5}).perm_group.order() == 164);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(SubgroupBuilder(7), std::invalid_argument);
  SubgroupBuilder const b(5);
  ClassLabel const f3{Kind::F, 3};
  CHECK_THROWS_AS(b.construct(f3), std::invalid_argument);
}
