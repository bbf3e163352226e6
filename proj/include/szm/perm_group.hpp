#pragma once

// Permutation groups given by generators, with a base and strong generating
// set computed by the deterministic Schreier-Sims algorithm. The result
// depends only on the order of the generators, never on randomness.

#include "szm/numtheory.hpp"
#include "szm/perm.hpp"

#include <cstdint>
#include <vector>

namespace szm {

class PermGroup {
 public:
  using Point = Perm::Point;

  /// Generators must all have the given degree; identities are ignored.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Perm> const& generators() const noexcept { return gens_; }

  BigInt order() const;
  bool contains(Perm const& g) const;

  std::vector<Point> base() const;
  /// Sizes of the basic orbits; their product is order().
  std::vector<std::size_t> basic_orbit_sizes() const;
  std::vector<Perm> strong_generators() const;

  /// Orbit of p under the group, in breadth-first order.
  std::vector<Point> orbit(Point p) const;

 private:
  struct Level {
    Point base_point;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    // index into reps / inv_reps for each point, -1 if not in the orbit
    std::vector<std::int32_t> where;
    std::vector<Perm> reps;
    std::vector<Perm> inv_reps;
  };

  void build();
  void compute_orbit(Level& level) const;
  // Strips g through levels [from, levels_.size()); returns the residue and
  // the level at which stripping stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

}  // namespace szm
