#include "szm/perm.hpp"

#include <stdexcept>

namespace szm {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p]) {
      throw std::invalid_argument("Perm: images do not form a permutation");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm id;
  id.img_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    id.img_[i] = static_cast<Point>(i);
  }
  return id;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) {
      return false;
    }
  }
  return true;
}

Perm::Point Perm::first_moved() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) {
      return static_cast<Point>(i);
    }
  }
  return static_cast<Point>(img_.size());
}

Perm Perm::inverse() const {
  Perm inv;
  inv.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    inv.img_[img_[i]] = static_cast<Point>(i);
  }
  return inv;
}

Perm operator*(Perm const& g, Perm const& h) {
  if (g.degree() != h.degree()) {
    throw std::invalid_argument("Perm: degree mismatch");
  }
  Perm r;
  r.img_.resize(g.img_.size());
  for (std::size_t i = 0; i < g.img_.size(); ++i) {
    r.img_[i] = h.img_[g.img_[i]];
  }
  return r;
}

}  // namespace szm
