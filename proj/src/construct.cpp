#include "szm/construct.hpp"

#include <stdexcept>

namespace szm {

namespace {

using Raw = Field::Raw;

void check_index(int i) {
  if (i != 1 && i != 2) {
    throw std::invalid_argument("index i must be 1 or 2");
  }
}

}  // namespace

SubgroupBuilder::SubgroupBuilder(unsigned e)
    : group_(e),
      a_cache_(std::make_unique<Cache[]>(2)),
      c_cache_(std::make_unique<Cache[]>(2)) {
  if (e != 1 && e != 3 && e != 5) {
    throw std::invalid_argument("explicit construction needs e in {1, 3, 5}");
  }
}

GroupElement const& SubgroupBuilder::a_i_generator(int i) const {
  check_index(i);
  Cache& c = a_cache_[i - 1];
  std::call_once(c.once, [&] {
    std::uint64_t const target = to_u64(a_i_order(i, group_.e()));
    for (std::uint64_t r = 0; r < group_.order(); ++r) {
      auto x = group_.unrank(r);
      if (group_.element_order(x) == target) {
        c.value.emplace(std::move(x));
        return;
      }
    }
    throw std::logic_error("no element of order a_" + std::to_string(i) + " found");
  });
  return *c.value;
}

GroupElement const& SubgroupBuilder::c_i(int i) const {
  check_index(i);
  Cache& c = c_cache_[i - 1];
  std::call_once(c.once, [&] {
    GroupElement const& a = a_i_generator(i);
    Matrix4 const am = group_.to_matrix(a);
    Matrix4 const target = group_.to_matrix(group_.power(a, group_.q()));
    for (std::uint64_t r = 0; r < group_.order(); ++r) {
      auto x = group_.unrank(r);
      Matrix4 const xm = group_.to_matrix(x);
      // c^-1 a c = a^q  <=>  a c = c a^q
      if (!(am * xm == xm * target) || group_.element_order(x) != 4) {
        continue;
      }
      c.value.emplace(std::move(x));
      return;
    }
    throw std::logic_error("no element c_" + std::to_string(i) + " found");
  });
  return *c.value;
}

std::vector<GroupElement> SubgroupBuilder::raw_generators(ClassLabel label) const {
  SuzukiGroup const& g = group_;
  Field const& k = g.field();
  unsigned const e = g.e();
  unsigned const f = label.level;
  if (f == 0 || e % f != 0) {
    throw std::invalid_argument("level " + std::to_string(f) + " does not divide e");
  }
  std::vector<GroupElement> gens;
  auto add_q = [&](bool with_alpha) {
    for (Raw b : k.subfield_basis(f)) {
      if (with_alpha) {
        gens.push_back(g.q_element(b, 0));
      }
      gens.push_back(g.q_element(0, b));
    }
  };
  auto a0 = [&] { return g.a(k.subfield_primitive(f)); };
  auto cyclic_part = [&](int i) {
    std::uint64_t const ratio = to_u64(a_i_order(i, e) / a_i_order(i, f));
    return g.power(a_i_generator(i), ratio);
  };
  switch (label.kind) {
    case Kind::G:
      add_q(true);
      gens.push_back(a0());
      gens.push_back(g.tau());
      break;
    case Kind::F:
      add_q(true);
      gens.push_back(a0());
      break;
    case Kind::Q:
      add_q(true);
      break;
    case Kind::Z:
      add_q(false);
      break;
    case Kind::A0:
      gens.push_back(a0());
      break;
    case Kind::B0: {
      gens.push_back(a0());
      auto const t = g.tau();
      auto const conj = g.mul(g.mul(t, gens[0]), t);
      if (!(conj == g.inverse(gens[0]))) {
        throw std::logic_error("tau does not normalise A0");
      }
      gens.push_back(t);
      break;
    }
    case Kind::A1:
    case Kind::A2:
      gens.push_back(cyclic_part(label.kind == Kind::A1 ? 1 : 2));
      break;
    case Kind::B1:
    case Kind::B2: {
      int const i = label.kind == Kind::B1 ? 1 : 2;
      gens.push_back(cyclic_part(i));
      gens.push_back(c_i(i));
      break;
    }
  }
  return gens;
}

SubgroupInstance SubgroupBuilder::construct(ClassLabel label) const {
  auto gens = raw_generators(label);
  std::vector<Perm> perms;
  for (auto const& x : gens) {
    perms.push_back(group_.perm(x));
  }
  PermGroup pg(group_.degree(), std::move(perms));
  if (pg.order() != subgroup_order(label)) {
    throw std::logic_error("constructed " + to_string(label) + " has order " +
                           pg.order().str() + ", expected " +
                           subgroup_order(label).str());
  }
  return SubgroupInstance{label, std::move(gens), std::move(pg)};
}

}  // namespace szm
