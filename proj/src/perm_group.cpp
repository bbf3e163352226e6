#include "szm/perm_group.hpp"

#include <stdexcept>

namespace szm {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("PermGroup: generator of wrong degree");
    }
    if (!g.is_identity()) {
      gens_.push_back(std::move(g));
    }
  }
  build();
}

void PermGroup::compute_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.where.assign(degree_, -1);
  level.reps.assign(1, Perm::identity(degree_));
  level.inv_reps.assign(1, Perm::identity(degree_));
  level.where[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point const beta = level.orbit[k];
    for (auto const& s : level.gens) {
      Point const gamma = s[beta];
      if (level.where[gamma] >= 0) {
        continue;
      }
      level.where[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.reps.push_back(level.reps[k] * s);
      level.inv_reps.push_back(level.reps.back().inverse());
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    auto const& level = levels_[i];
    std::int32_t const k = level.where[g[level.base_point]];
    if (k < 0) {
      return {std::move(g), i};
    }
    g = g * level.inv_reps[k];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build() {
  // Initial base: every generator moves some base point.
  for (auto const& g : gens_) {
    bool moves_base = false;
    for (auto const& level : levels_) {
      if (g[level.base_point] != level.base_point) {
        moves_base = true;
        break;
      }
    }
    if (!moves_base) {
      levels_.push_back(Level{g.first_moved(), {}, {}, {}, {}, {}});
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (auto const& g : gens_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (g[levels_[j].base_point] != levels_[j].base_point) {
          fixes = false;
          break;
        }
      }
      if (fixes) {
        levels_[i].gens.push_back(g);
      }
    }
    compute_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto const n_orbit = levels_[i].orbit.size();
    for (std::size_t k = 0; k < n_orbit && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        Level const& level = levels_[i];
        Point const beta = level.orbit[k];
        Perm const& gen = level.gens[s];
        std::int32_t const img = level.where[gen[beta]];
        Perm schreier = level.reps[k] * gen * level.inv_reps[img];
        if (schreier.is_identity()) {
          continue;
        }
        auto [residue, j] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) {
          continue;
        }
        if (j == levels_.size()) {
          levels_.push_back(Level{residue.first_moved(), {}, {}, {}, {}, {}});
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          compute_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) {
      --i;
    }
  }
}

BigInt PermGroup::order() const {
  BigInt n = 1;
  for (auto const& level : levels_) {
    n *= level.orbit.size();
  }
  return n;
}

bool PermGroup::contains(Perm const& g) const {
  if (g.degree() != degree_) {
    return false;
  }
  return sift(g, 0).first.is_identity();
}

std::vector<PermGroup::Point> PermGroup::base() const {
  std::vector<Point> b;
  for (auto const& level : levels_) {
    b.push_back(level.base_point);
  }
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (auto const& level : levels_) {
    sizes.push_back(level.orbit.size());
  }
  return sizes;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> result;
  for (auto const& level : levels_) {
    for (auto const& g : level.gens) {
      bool seen = false;
      for (auto const& r : result) {
        if (r == g) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        result.push_back(g);
      }
    }
  }
  return result;
}

std::vector<PermGroup::Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) {
    throw std::out_of_range("PermGroup::orbit: point out of range");
  }
  std::vector<Point> orb{p};
  std::vector<bool> seen(degree_, false);
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    for (auto const& g : gens_) {
      Point const q = g[orb[k]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  }
  return orb;
}

}  // namespace szm
