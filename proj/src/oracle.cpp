#include "szm/oracle.hpp"

#include "szm/perm_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace szm {

bool SubgroupSet::contains(ElementIndex x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

ExplicitGroup::ExplicitGroup(unsigned e) : group_(e) {
  if (e != 1 && e != 3) {
    throw std::invalid_argument("explicit enumeration needs e in {1, 3}");
  }
  size_ = static_cast<std::uint32_t>(group_.order());
  degree_ = static_cast<std::uint32_t>(group_.degree());
  identity_ = index(group_.identity());
  images_.resize(std::size_t{size_} * degree_);
  by_key_.assign(std::size_t{degree_} * degree_ * degree_, size_);
  for (ElementIndex i = 0; i < size_; ++i) {
    auto const p = group_.perm(group_.unrank(i));
    for (std::uint32_t x = 0; x < degree_; ++x) {
      images_[std::size_t{i} * degree_ + x] = static_cast<std::uint8_t>(p[x]);
    }
    auto& slot = by_key_[key(p[0], p[1], p[2])];
    if (slot != size_) {
      throw std::logic_error("two elements agree on three points");
    }
    slot = i;
  }
  inverse_.resize(size_);
  order_.resize(size_);
  for (ElementIndex i = 0; i < size_; ++i) {
    std::uint32_t n = 1;
    ElementIndex x = i;
    ElementIndex prev = identity_;
    while (x != identity_) {
      prev = x;
      x = mul(x, i);
      ++n;
    }
    order_[i] = n;
    inverse_[i] = i == identity_ ? identity_ : prev;
  }
}

ElementIndex ExplicitGroup::index(GroupElement const& g) const {
  return static_cast<ElementIndex>(group_.rank(g));
}

ElementIndex ExplicitGroup::mul(ElementIndex g, ElementIndex h) const {
  return by_key_[key(image(h, image(g, 0)), image(h, image(g, 1)),
                     image(h, image(g, 2)))];
}

Perm ExplicitGroup::perm(ElementIndex g) const {
  std::vector<Perm::Point> images(degree_);
  for (std::uint32_t x = 0; x < degree_; ++x) {
    images[x] = image(g, x);
  }
  return Perm(std::move(images));
}

SubgroupSet ExplicitGroup::closure(std::vector<ElementIndex> generators) const {
  std::vector<bool> seen(size_, false);
  std::vector<ElementIndex> elements{identity_};
  seen[identity_] = true;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (ElementIndex s : generators) {
      ElementIndex const y = mul(elements[k], s);
      if (!seen[y]) {
        seen[y] = true;
        elements.push_back(y);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return SubgroupSet{std::move(elements), std::move(generators), std::nullopt};
}

SubgroupSet ExplicitGroup::subgroup(SubgroupInstance const& instance) const {
  std::vector<ElementIndex> gens;
  for (auto const& g : instance.generators) {
    gens.push_back(index(g));
  }
  auto h = closure(std::move(gens));
  h.label = instance.label;
  return h;
}

SubgroupSet ExplicitGroup::conjugate(SubgroupSet const& h, ElementIndex g) const {
  SubgroupSet c;
  c.label = h.label;
  c.elements.reserve(h.size());
  for (ElementIndex x : h.elements) {
    c.elements.push_back(conj(x, g));
  }
  std::sort(c.elements.begin(), c.elements.end());
  for (ElementIndex x : h.generators) {
    c.generators.push_back(conj(x, g));
  }
  return c;
}

SubgroupSet ExplicitGroup::normalizer(SubgroupSet const& h) const {
  std::vector<ElementIndex> gens = h.generators;
  if (gens.empty()) {
    gens = h.elements;
  }
  std::vector<ElementIndex> elements;
  for (ElementIndex g = 0; g < size_; ++g) {
    bool normalises = true;
    for (ElementIndex x : gens) {
      if (!h.contains(conj(x, g))) {
        normalises = false;
        break;
      }
    }
    if (normalises) {
      elements.push_back(g);
    }
  }
  return SubgroupSet{std::move(elements), {}, std::nullopt};
}

std::vector<SubgroupSet> ExplicitGroup::conjugates(SubgroupSet const& h) const {
  auto const n = normalizer(h);
  std::vector<bool> covered(size_, false);
  std::vector<SubgroupSet> result;
  for (ElementIndex g = 0; g < size_; ++g) {
    if (covered[g]) {
      continue;
    }
    for (ElementIndex x : n.elements) {
      covered[mul(x, g)] = true;
    }
    result.push_back(conjugate(h, g));
  }
  return result;
}

Oracle::Oracle() : group_(3), builder_(3) {}

SubgroupSet const& Oracle::representative(ClassLabel label) {
  auto it = reps_.find(label);
  if (it == reps_.end()) {
    it = reps_.emplace(label, group_.subgroup(builder_.construct(label))).first;
  }
  return it->second;
}

std::vector<SubgroupSet> const& Oracle::class_members(ClassLabel label) {
  auto it = members_.find(label);
  if (it == members_.end()) {
    it = members_.emplace(label, group_.conjugates(representative(label))).first;
  }
  return it->second;
}

std::uint64_t Oracle::count_containing(SubgroupSet const& h, ClassLabel k) {
  std::vector<ElementIndex> gens = h.generators;
  if (gens.empty()) {
    gens = h.elements;
  }
  std::uint64_t count = 0;
  for (auto const& member : class_members(k)) {
    if (member.size() < h.size()) {
      continue;
    }
    count += std::all_of(gens.begin(), gens.end(),
                         [&](ElementIndex x) { return member.contains(x); })
                 ? 1
                 : 0;
  }
  return count;
}

std::uint64_t Oracle::count_contained(ClassLabel h, ClassLabel k) {
  SubgroupSet const& container = representative(k);
  std::uint64_t count = 0;
  for (auto const& member : class_members(h)) {
    count += std::includes(container.elements.begin(), container.elements.end(),
                           member.elements.begin(), member.elements.end())
                 ? 1
                 : 0;
  }
  return count;
}

std::vector<Eq2Row> Oracle::verify_eq2(MoebiusTable const& table) {
  if (table.e() != 3) {
    throw std::invalid_argument("verify_eq2 needs the table for e = 3");
  }
  auto const classes = canonical_classes(3);
  std::vector<Eq2Row> rows;
  for (auto const& h : classes) {
    SubgroupSet const& rep = representative(h);
    BigInt sum = 0;
    for (auto const& k : classes) {
      if (table[k] != 0) {
        sum += BigInt(count_containing(rep, k)) * table[k];
      }
    }
    BigInt const expected = h == classes.front() ? 1 : 0;
    rows.push_back(Eq2Row{h, sum, expected, sum == expected});
  }
  return rows;
}

namespace {

// Sums f(item) over items, split across worker threads by stride.
template <class F>
std::uint64_t parallel_count(std::vector<ElementIndex> const& items, unsigned jobs,
                             F f) {
  jobs = std::max(1u, jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < items.size(); i += jobs) {
      partial[t] += f(items[i]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) {
      threads.emplace_back(work, t);
    }
    for (auto& th : threads) {
      th.join();
    }
  }
  std::uint64_t total = 0;
  for (auto p : partial) {
    total += p;
  }
  return total;
}

}  // namespace

BigInt Oracle::pair_census(std::uint32_t order_y, unsigned jobs) {
  ExplicitGroup const& g = group_;
  std::vector<ElementIndex> ys;
  std::uint64_t involutions = 0;
  for (ElementIndex y = 0; y < g.size(); ++y) {
    involutions += g.order(y) == 2 ? 1 : 0;
    if (g.order(y) == order_y) {
      ys.push_back(y);
    }
  }
  Perm const x = g.perm(g.index(g.group().q_element(0, 1)));
  std::uint64_t const per_x = parallel_count(ys, jobs, [&](ElementIndex y) {
    return PermGroup(g.degree(), {x, g.perm(y)}).order() == g.size() ? 1 : 0;
  });
  BigInt const total = BigInt(per_x) * involutions;
  if (total % (BigInt(3) * g.size()) != 0) {
    throw std::logic_error("pair census not divisible by |Aut G|");
  }
  return total;
}

BigInt Oracle::pair_census_unoptimized(std::uint32_t order_y, unsigned jobs) {
  ExplicitGroup const& g = group_;
  std::vector<ElementIndex> xs;
  std::vector<Perm> ys;
  for (ElementIndex y = 0; y < g.size(); ++y) {
    if (g.order(y) == 2) {
      xs.push_back(y);
    }
    if (g.order(y) == order_y) {
      ys.push_back(g.perm(y));
    }
  }
  std::uint64_t const total = parallel_count(xs, jobs, [&](ElementIndex xi) {
    Perm const x = g.perm(xi);
    std::uint64_t n = 0;
    for (auto const& y : ys) {
      n += PermGroup(g.degree(), {x, y}).order() == g.size() ? 1 : 0;
    }
    return n;
  });
  if (total % (std::uint64_t{3} * g.size()) != 0) {
    throw std::logic_error("pair census not divisible by |Aut G|");
  }
  return total;
}

}  // namespace szm
