#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szm/enumeration.hpp"
#include "szm/oracle.hpp"

#include <algorithm>
#include <set>

using namespace szm;

namespace {

Oracle& oracle() {
  static Oracle o;
  return o;
}

}  // namespace

TEST_CASE("explicit Sz(2)") {
  ExplicitGroup const g(1);
  CHECK(g.size() == 20);
  CHECK(g.degree() == 5);
  // Sharply 2-transitive: each ordered pair of points is hit exactly once.
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (ElementIndex i = 0; i < g.size(); ++i) {
    pairs.emplace(g.image(i, 0), g.image(i, 1));
  }
  CHECK(pairs.size() == 20);
  CHECK_THROWS_AS(ExplicitGroup(5), std::invalid_argument);
}

TEST_CASE("explicit multiplication agrees with matrices") {
  ExplicitGroup const& g = oracle().group();
  SuzukiGroup const& s = g.group();
  for (ElementIndex i = 0; i < g.size(); i += 97) {
    for (ElementIndex j = 0; j < g.size(); j += 1013) {
      CHECK(g.mul(i, j) == g.index(s.mul(g.element(i), g.element(j))));
    }
    CHECK(g.mul(i, g.inv(i)) == g.identity());
    CHECK(BigInt(g.order(i)) == s.element_order(g.element(i)));
  }
}

TEST_CASE("normalizers") {
  Oracle& o = oracle();
  ExplicitGroup const& g = o.group();
  CHECK(g.normalizer(o.representative(ClassLabel{Kind::F, 3})).size() == 448);
  CHECK(g.normalizer(o.representative(ClassLabel{Kind::A0, 3})).size() == 14);
  auto const z = g.closure({g.index(g.group().q_element(0, 1))});
  CHECK(z.size() == 2);
  CHECK(g.normalizer(z).size() == 64);
  for (auto const& label : canonical_classes(3)) {
    INFO(to_string(label));
    CHECK(BigInt(g.normalizer(o.representative(label)).size()) ==
          normalizer_order(label, 3));
  }
}

TEST_CASE("conjugates") {
  Oracle& o = oracle();
  ExplicitGroup const& g = o.group();
  CHECK(o.class_members(ClassLabel{Kind::F, 3}).size() == 65);
  CHECK(o.class_members(ClassLabel{Kind::A0, 3}).size() == 2080);
  CHECK(o.class_members(C1).size() == 1);
  // Brute force: conjugate by every element and deduplicate.
  for (auto const& label : {ClassLabel{Kind::B1, 3}, C4, ClassLabel{Kind::Z, 3}}) {
    std::set<std::vector<ElementIndex>> seen;
    for (ElementIndex x = 0; x < g.size(); ++x) {
      seen.insert(g.conjugate(o.representative(label), x).elements);
    }
    std::set<std::vector<ElementIndex>> listed;
    for (auto const& m : o.class_members(label)) {
      listed.insert(m.elements);
    }
    CHECK(seen == listed);
    CHECK(listed.size() == o.class_members(label).size());
  }
}

TEST_CASE("containment counts") {
  Oracle& o = oracle();
  CHECK(o.count_containing(o.representative(ClassLabel{Kind::A0, 3}),
                           ClassLabel{Kind::F, 3}) == 2);
  CHECK(o.count_containing(o.representative(C4), ClassLabel{Kind::B2, 3}) == 4);
  CHECK(o.count_containing(o.representative(C2), ClassLabel{Kind::B0, 3}) == 32);
  auto const classes = canonical_classes(3);
  for (auto const& h : classes) {
    for (auto const& k : classes) {
      INFO(to_string(h) << " in " << to_string(k));
      CHECK(BigInt(o.count_containing(o.representative(h), k)) == n_count(h, k, 3));
      // M(H;K) |class K| = |class H| N(H;K)
      CHECK(BigInt(o.count_contained(h, k)) * class_size(k, 3) ==
            class_size(h, 3) * n_count(h, k, 3));
    }
  }
}

TEST_CASE("defining identity of mu") {
  auto const rows = oracle().verify_eq2(mu_table(3));
  CHECK(rows.size() == 13);
  for (auto const& row : rows) {
    INFO(to_string(row.h));
    CHECK(row.pass);
  }
  CHECK(rows.front().sum == 1);
  CHECK_THROWS_AS(oracle().verify_eq2(mu_table(5)), std::invalid_argument);
}

TEST_CASE("order censuses of the representatives") {
  Oracle& o = oracle();
  for (auto const& label : canonical_classes(3)) {
    std::map<std::uint64_t, BigInt> counts;
    for (ElementIndex x : o.representative(label).elements) {
      counts[o.group().order(x)] += 1;
    }
    INFO(to_string(label));
    CHECK(counts == census(label, 3).counts);
  }
}

TEST_CASE("generating pair census") {
  Oracle& o = oracle();
  BigInt const aut = 3 * 29120;
  CHECK(o.pair_census(4) / aut == 16);
  CHECK(o.pair_census(5, 2) / aut == 30);
  CHECK(o.pair_census(7) / aut == 62);
  CHECK(o.pair_census(13) / aut ==
        n_gamma(GammaDescriptor{GammaDescriptor::Variant::HeckeSmooth, 13}, 3));
}
