#include "szm/group.hpp"

#include "szm/catalog.hpp"

#include <optional>

namespace szm {

using Raw = Field::Raw;

QPair mul_q(QPair const& p1, QPair const& p2) {
  return QPair{p1.alpha + p2.alpha, p1.alpha * theta(p2.alpha) + p1.beta + p2.beta};
}

QPair conj_by_a(QPair const& p, FieldElement const& kappa) {
  if (kappa.is_zero()) {
    throw std::invalid_argument("conj_by_a: kappa must be non-zero");
  }
  return QPair{p.alpha * kappa, p.beta * kappa * theta(kappa)};
}

Matrix4 Matrix4::identity(const Field& field) {
  Matrix4 m(field);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix4 operator*(Matrix4 const& x, Matrix4 const& y) {
  if (x.field_ != y.field_) {
    throw std::invalid_argument("Matrix4: field mismatch");
  }
  Field const& k = *x.field_;
  Matrix4 r(k);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Raw s = 0;
      for (int l = 0; l < 4; ++l) {
        if (x(i, l) != 0 && y(l, j) != 0) {
          s ^= k.mul(x(i, l), y(l, j));
        }
      }
      r(i, j) = s;
    }
  }
  return r;
}

namespace {

void check_fields(std::initializer_list<FieldElement const*> xs) {
  const Field* f = &(*xs.begin())->field();
  for (auto const* x : xs) {
    if (&x->field() != f) {
      throw std::invalid_argument("GroupElement: mixed fields");
    }
  }
}

}  // namespace

GroupElement::GroupElement(InF form) : form_(form) {
  check_fields({&form.alpha, &form.beta, &form.kappa});
  if (form.kappa.is_zero()) {
    throw std::invalid_argument("GroupElement: kappa must be non-zero");
  }
}

GroupElement::GroupElement(BigCell form) : form_(form) {
  check_fields({&form.alpha, &form.beta, &form.kappa, &form.gamma, &form.delta});
  if (form.kappa.is_zero()) {
    throw std::invalid_argument("GroupElement: kappa must be non-zero");
  }
}

const Field& GroupElement::field() const noexcept {
  return std::visit([](auto const& f) -> const Field& { return f.alpha.field(); },
                    form_);
}

SuzukiGroup::SuzukiGroup(unsigned e) : field_(&Field::get(e)) {}

void SuzukiGroup::require_own(GroupElement const& g) const {
  if (&g.field() != field_) {
    throw std::invalid_argument("group element belongs to a different field");
  }
}

GroupElement SuzukiGroup::identity() const {
  return GroupElement(
      GroupElement::InF{field_->zero(), field_->zero(), field_->one()});
}

GroupElement SuzukiGroup::q_element(FieldElement alpha, FieldElement beta) const {
  return GroupElement(GroupElement::InF{alpha, beta, field_->one()});
}

GroupElement SuzukiGroup::q_element(Raw alpha, Raw beta) const {
  return q_element(field_->element(alpha), field_->element(beta));
}

GroupElement SuzukiGroup::a(FieldElement kappa) const {
  return GroupElement(GroupElement::InF{field_->zero(), field_->zero(), kappa});
}

GroupElement SuzukiGroup::a(Raw kappa) const { return a(field_->element(kappa)); }

GroupElement SuzukiGroup::tau() const {
  auto const z = field_->zero();
  return GroupElement(GroupElement::BigCell{z, z, field_->one(), z, z});
}

Matrix4 SuzukiGroup::q_matrix(Raw alpha, Raw beta) const {
  Field const& k = *field_;
  Raw const at = k.theta(alpha);
  Matrix4 m = Matrix4::identity(k);
  m(1, 0) = alpha;
  m(2, 0) = k.mul(at, alpha) ^ beta;
  m(2, 1) = at;
  m(3, 0) = k.mul(at, k.square(alpha)) ^ k.mul(alpha, beta) ^ k.theta(beta);
  m(3, 1) = beta;
  m(3, 2) = alpha;
  return m;
}

Matrix4 SuzukiGroup::a_matrix(Raw kappa) const {
  Field const& k = *field_;
  if (kappa == 0) {
    throw std::invalid_argument("a_matrix: kappa must be non-zero");
  }
  Raw const z2 = k.theta_inv(kappa);
  Raw const z1 = k.mul(kappa, z2);
  Matrix4 m(k);
  m(0, 0) = z1;
  m(1, 1) = z2;
  m(2, 2) = k.inv(z2);
  m(3, 3) = k.inv(z1);
  return m;
}

Matrix4 SuzukiGroup::tau_matrix() const {
  Matrix4 m(*field_);
  for (int i = 0; i < 4; ++i) {
    m(i, 3 - i) = 1;
  }
  return m;
}

Matrix4 SuzukiGroup::to_matrix(GroupElement const& g) const {
  require_own(g);
  if (auto const* f = std::get_if<GroupElement::InF>(&g.form())) {
    return q_matrix(f->alpha.value(), f->beta.value()) * a_matrix(f->kappa.value());
  }
  auto const& b = std::get<GroupElement::BigCell>(g.form());
  return q_matrix(b.alpha.value(), b.beta.value()) * a_matrix(b.kappa.value()) *
         tau_matrix() * q_matrix(b.gamma.value(), b.delta.value());
}

GroupElement SuzukiGroup::canonicalize(Matrix4 const& m) const {
  if (&m.field() != field_) {
    throw std::invalid_argument("canonicalize: matrix over a different field");
  }
  Field const& k = *field_;
  auto in_f_form = [&](Matrix4 const& x) -> GroupElement::InF {
    if (x(0, 1) != 0 || x(0, 2) != 0 || x(0, 3) != 0 || x(0, 0) == 0 ||
        x(1, 1) == 0) {
      throw NotInGroup("matrix does not lie in Sz(2^" + std::to_string(e()) + ")");
    }
    Raw const z1 = x(0, 0);
    Raw const z2 = x(1, 1);
    Raw const kappa = k.mul(z1, k.inv(z2));
    Raw const alpha = k.mul(x(1, 0), k.inv(z1));
    Raw const beta = k.mul(x(3, 1), k.inv(z2));
    return GroupElement::InF{k.element(alpha), k.element(beta), k.element(kappa)};
  };

  std::optional<GroupElement> result;
  if (m(0, 1) == 0 && m(0, 2) == 0 && m(0, 3) == 0) {
    result.emplace(in_f_form(m));
  } else if (m(0, 3) != 0) {
    Raw const s = k.inv(m(0, 3));
    Raw const gamma = k.mul(m(0, 2), s);
    Raw const delta = k.mul(m(0, 1), s);
    // (gamma, delta)^-1 = (gamma, delta + gamma^(theta+1))
    Raw const delta_inv = delta ^ k.mul(gamma, k.theta(gamma));
    auto const head = in_f_form(m * q_matrix(gamma, delta_inv) * tau_matrix());
    result.emplace(GroupElement::BigCell{head.alpha, head.beta, head.kappa,
                                         k.element(gamma), k.element(delta)});
  } else {
    throw NotInGroup("matrix does not lie in Sz(2^" + std::to_string(e()) + ")");
  }
  if (!(to_matrix(*result) == m)) {
    throw NotInGroup("matrix does not lie in Sz(2^" + std::to_string(e()) + ")");
  }
  return *result;
}

namespace {

Matrix4 matrix_power(Matrix4 x, std::uint64_t k) {
  Matrix4 r = Matrix4::identity(x.field());
  while (k != 0) {
    if (k & 1) {
      r = r * x;
    }
    x = x * x;
    k >>= 1;
  }
  return r;
}

}  // namespace

GroupElement SuzukiGroup::mul(GroupElement const& g, GroupElement const& h) const {
  return canonicalize(to_matrix(g) * to_matrix(h));
}

GroupElement SuzukiGroup::inverse(GroupElement const& g) const {
  std::uint64_t const n = element_order(g);
  return power(g, n - 1);
}

GroupElement SuzukiGroup::power(GroupElement const& g, std::uint64_t k) const {
  return canonicalize(matrix_power(to_matrix(g), k));
}


std::uint64_t SuzukiGroup::element_order(GroupElement const& g) const {
  Matrix4 const m = to_matrix(g);
  Matrix4 const id = Matrix4::identity(*field_);
  if (m == id) {
    return 1;
  }
  Matrix4 const m2 = m * m;
  if (m2 == id) {
    return 2;
  }
  if (m2 * m2 == id) {
    return 4;
  }
  std::uint64_t const candidates[] = {q() - 1, to_u64(a_i_order(1, e())),
                                      to_u64(a_i_order(2, e()))};
  for (std::uint64_t n : candidates) {
    if (!(matrix_power(m, n) == id)) {
      continue;
    }
    for (auto [p, mult] : factorize(n)) {
      for (unsigned i = 0; i < mult && matrix_power(m, n / p) == id; ++i) {
        n /= p;
      }
    }
    return n;
  }
  // Only reachable for matrices outside the group.
  std::uint64_t n = 1;
  for (Matrix4 x = m; !(x == id); x = x * m) {
    ++n;
  }
  return n;
}

std::uint64_t SuzukiGroup::rank(GroupElement const& g) const {
  require_own(g);
  std::uint64_t const qq = q();
  if (auto const* f = std::get_if<GroupElement::InF>(&g.form())) {
    return (f->alpha.value() * qq + f->beta.value()) * (qq - 1) +
           (f->kappa.value() - 1);
  }
  auto const& b = std::get<GroupElement::BigCell>(g.form());
  std::uint64_t const head =
      (b.alpha.value() * qq + b.beta.value()) * (qq - 1) + (b.kappa.value() - 1);
  return f_size() + (head * qq + b.gamma.value()) * qq + b.delta.value();
}

GroupElement SuzukiGroup::unrank(std::uint64_t r) const {
  if (r >= order()) {
    throw std::out_of_range("unrank: rank out of range");
  }
  std::uint64_t const qq = q();
  auto el = [&](std::uint64_t x) { return field_->element(static_cast<Raw>(x)); };
  if (r < f_size()) {
    std::uint64_t const kappa = r % (qq - 1) + 1;
    std::uint64_t const ab = r / (qq - 1);
    return GroupElement(GroupElement::InF{el(ab / qq), el(ab % qq), el(kappa)});
  }
  r -= f_size();
  std::uint64_t const delta = r % qq;
  std::uint64_t const gamma = (r / qq) % qq;
  std::uint64_t const head = r / (qq * qq);
  std::uint64_t const kappa = head % (qq - 1) + 1;
  std::uint64_t const ab = head / (qq - 1);
  return GroupElement(GroupElement::BigCell{el(ab / qq), el(ab % qq), el(kappa),
                                            el(gamma), el(delta)});
}

std::array<Raw, 4> SuzukiGroup::point_vector(OvoidPoint p) const {
  if (p.index >= degree()) {
    throw std::out_of_range("ovoid point index out of range");
  }
  if (p.index == 0) {
    return {1, 0, 0, 0};
  }
  Field const& k = *field_;
  std::uint64_t const idx = p.index - 1;
  Raw const alpha = static_cast<Raw>(idx / q());
  Raw const beta = static_cast<Raw>(idx % q());
  Raw const x0 = k.mul(k.theta(alpha), k.square(alpha)) ^ k.mul(alpha, beta) ^
                 k.theta(beta);
  return {x0, beta, alpha, 1};
}

OvoidPoint SuzukiGroup::point_index(std::array<Raw, 4> v) const {
  Field const& k = *field_;
  if (v[3] == 0) {
    if (v[0] == 0 || v[1] != 0 || v[2] != 0) {
      throw std::logic_error("vector is not a point of the ovoid");
    }
    return infinity_point;
  }
  Raw const s = k.inv(v[3]);
  Raw const alpha = k.mul(v[2], s);
  Raw const beta = k.mul(v[1], s);
  Raw const x0 = k.mul(v[0], s);
  if (x0 != (k.mul(k.theta(alpha), k.square(alpha)) ^ k.mul(alpha, beta) ^
             k.theta(beta))) {
    throw std::logic_error("vector is not a point of the ovoid");
  }
  return OvoidPoint{static_cast<std::uint32_t>(1 + alpha * q() + beta)};
}

namespace {

std::array<Raw, 4> row_times(Field const& k, std::array<Raw, 4> const& v,
                             Matrix4 const& m) {
  std::array<Raw, 4> w{};
  for (int j = 0; j < 4; ++j) {
    Raw s = 0;
    for (int i = 0; i < 4; ++i) {
      if (v[i] != 0 && m(i, j) != 0) {
        s ^= k.mul(v[i], m(i, j));
      }
    }
    w[j] = s;
  }
  return w;
}

}  // namespace

OvoidPoint SuzukiGroup::act(GroupElement const& g, OvoidPoint p) const {
  return point_index(row_times(*field_, point_vector(p), to_matrix(g)));
}

Perm SuzukiGroup::perm(GroupElement const& g) const {
  Matrix4 const m = to_matrix(g);
  std::vector<Perm::Point> images(degree());
  for (std::uint64_t i = 0; i < degree(); ++i) {
    auto const v = point_vector(OvoidPoint{static_cast<std::uint32_t>(i)});
    images[i] = point_index(row_times(*field_, v, m)).index;
  }
  return Perm(std::move(images));
}

bool SuzukiGroup::point_in_subfield(OvoidPoint p, unsigned f) const {
  if (p.index == 0) {
    return true;
  }
  std::uint64_t const idx = p.index - 1;
  return field_->in_subfield(static_cast<Raw>(idx / q()), f) &&
         field_->in_subfield(static_cast<Raw>(idx % q()), f);
}

std::vector<GroupElement> SuzukiGroup::generators() const {
  std::vector<GroupElement> gens;
  for (unsigned i = 0; i < e(); ++i) {
    gens.push_back(q_element(Raw{1} << i, 0));
  }
  for (unsigned i = 0; i < e(); ++i) {
    gens.push_back(q_element(0, Raw{1} << i));
  }
  gens.push_back(a(field_->subfield_primitive(e())));
  gens.push_back(tau());
  return gens;
}

}  // namespace szm
